"""Vertex permutations, regular subgroups, and the normalizer check.

Composition is left to right throughout: (a then b) sends v to b[a[v]],
matching the exponent convention v^(ab) = (v^a)^b.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .groups import CutoffExceeded, FiniteGroup, generating_set
from .hypersets import CayleyHyperset, aut_g_x, validate_hyperset
from .hypergraphs import Dihypergraph, _arc_preserving_maps, cd_construct

__all__ = [
    "CLOSURE_CAP",
    "Permutation",
    "PermGroup",
    "CayleyRecovery",
    "Theorem2Report",
    "right_regular",
    "generate_closure",
    "is_regular",
    "aut_hypergraph",
    "find_regular_subgroups",
    "regular_to_cayley",
    "normalizer",
    "verify_theorem2",
    "dump_permgroup",
]

# generate_closure refuses to grow past this many permutations.
CLOSURE_CAP = 10**6


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, v: int) -> int:
        return self.images[v]

    def then(self, other: "Permutation") -> "Permutation":
        """Apply self first, then other."""
        o = other.images
        return Permutation(tuple(o[v] for v in self.images))

    def inverse(self) -> "Permutation":
        out = [0] * len(self.images)
        for i, v in enumerate(self.images):
            out[v] = i
        return Permutation(tuple(out))

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images))

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(tuple(range(n)))


@dataclass(frozen=True)
class PermGroup:
    """A fully enumerated permutation group on 0..degree-1.

    generators, when present, is a subset whose closure is the whole
    group; it only shortens conjugation tests and is not load-bearing.
    """

    degree: int
    perms: frozenset[Permutation]
    generators: Optional[tuple[Permutation, ...]] = None

    @property
    def order(self) -> int:
        return len(self.perms)

    def __contains__(self, p: Permutation) -> bool:
        return p in self.perms

    def sorted_perms(self) -> list[Permutation]:
        return sorted(self.perms, key=lambda p: p.images)


def right_regular(g: FiniteGroup) -> PermGroup:
    """The right translations v -> v*h, one per group element."""
    table = g.table
    perms = frozenset(
        Permutation(tuple(table[v][h] for v in range(g.order))) for h in g.elements()
    )
    gens = tuple(
        Permutation(tuple(table[v][h] for v in range(g.order))) for h in generating_set(g)
    )
    return PermGroup(degree=g.order, perms=perms, generators=gens or None)


def generate_closure(
    perms: Iterable[Permutation], degree: Optional[int] = None, cap: int = CLOSURE_CAP
) -> PermGroup:
    """Close a generating set under composition, starting from the identity.

    degree is inferred from the generators; pass it explicitly when the
    generating set is empty.
    """
    gens = list(perms)
    if gens:
        degrees = {p.degree for p in gens}
        if len(degrees) != 1:
            raise ValueError(f"generators act on mixed degrees {sorted(degrees)}")
        inferred = degrees.pop()
        if degree is not None and degree != inferred:
            raise ValueError(f"stated degree {degree} does not match generators of degree {inferred}")
        degree = inferred
    elif degree is None:
        raise ValueError("degree is required when the generating set is empty")
    known = {Permutation.identity(degree)}
    frontier = list(known)
    while frontier:
        fresh = []
        for p in frontier:
            for s in gens:
                q = p.then(s)
                if q not in known:
                    known.add(q)
                    fresh.append(q)
        if len(known) > cap:
            raise CutoffExceeded(f"closure exceeded the cap of {cap} permutations")
        frontier = fresh
    return PermGroup(degree=degree, perms=frozenset(known), generators=tuple(gens) or None)


def _orbit_of(perms: Iterable[Permutation], start: int) -> set[int]:
    seen = {start}
    frontier = [start]
    plist = list(perms)
    while frontier:
        v = frontier.pop()
        for p in plist:
            w = p.images[v]
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return seen


def is_regular(p: PermGroup, n: int) -> bool:
    """Transitive of order exactly n on n points."""
    if p.degree != n or p.order != n:
        return False
    return len(_orbit_of(p.perms, 0)) == n


def aut_hypergraph(h: Dihypergraph, cutoff: int = 12) -> PermGroup:
    """Every vertex permutation preserving the arc set, by backtracking
    over signature-compatible images.  Refused above the vertex cutoff."""
    if h.vertex_count > cutoff:
        raise CutoffExceeded(
            f"vertex count {h.vertex_count} exceeds the automorphism cutoff {cutoff}"
        )
    maps = _arc_preserving_maps(h, h, find_all=True)
    return PermGroup(degree=h.vertex_count, perms=frozenset(Permutation(m) for m in maps))


def _is_semiregular(p: Permutation) -> bool:
    """All cycles share one length; such permutations are exactly the
    possible non-identity members of a regular group."""
    n = p.degree
    seen = [False] * n
    lengths = set()
    for v in range(n):
        if seen[v]:
            continue
        length, cur = 0, v
        while not seen[cur]:
            seen[cur] = True
            cur = p.images[cur]
            length += 1
        lengths.add(length)
        if len(lengths) > 1:
            return False
    return True


def find_regular_subgroups(p: PermGroup, n: int) -> list[PermGroup]:
    """All order-n subgroups of p acting regularly on 0..n-1.

    A regular subgroup holds exactly one permutation sending 0 to w for
    each w, so the search fills those n slots.  Every product of two
    filled slots lands in a slot read off from the images, which both
    propagates forced choices and prunes inconsistent ones.
    """
    if p.degree != n:
        raise ValueError(f"group acts on degree {p.degree}, expected {n}")
    identity = Permutation.identity(n)
    if identity not in p.perms:
        raise ValueError("permutation group does not contain the identity")
    candidates: list[list[Permutation]] = [[] for _ in range(n)]
    for perm in sorted(p.perms, key=lambda q: q.images):
        if not perm.is_identity() and _is_semiregular(perm):
            candidates[perm.images[0]].append(perm)

    results: list[frozenset[Permutation]] = []
    slots: list[Optional[Permutation]] = [None] * n
    slots[0] = identity

    def propagate(newly: list[int]) -> Optional[list[int]]:
        """Close filled slots under products; return the slots this call
        filled (for undo), or None on a conflict."""
        added: list[int] = []
        queue = list(newly)
        while queue:
            a = queue.pop()
            pa = slots[a]
            for b in range(n):
                pb = slots[b]
                if pb is None or (a == b == 0):
                    continue
                for left, right in ((pa, pb), (pb, pa)):
                    prod = left.then(right)
                    k = right.images[left.images[0]]
                    cur = slots[k]
                    if cur is None:
                        if not _is_semiregular(prod):
                            for u in added:
                                slots[u] = None
                            return None
                        slots[k] = prod
                        added.append(k)
                        queue.append(k)
                    elif cur != prod:
                        for u in added:
                            slots[u] = None
                        return None
        return added

    def descend() -> None:
        w = next((i for i in range(n) if slots[i] is None), None)
        if w is None:
            results.append(frozenset(s for s in slots if s is not None))
            return
        for cand in candidates[w]:
            slots[w] = cand
            added = propagate([w])
            if added is not None:
                descend()
                for u in added:
                    slots[u] = None
            slots[w] = None

    descend()
    unique = sorted(
        {r for r in results}, key=lambda r: sorted(q.images for q in r)
    )
    return [PermGroup(degree=n, perms=r) for r in unique]


@dataclass(frozen=True)
class CayleyRecovery:
    """Output of the regular-subgroup reconstruction: a group, a hyperset,
    and the vertex labeling that exhibits the isomorphism."""

    group: FiniteGroup
    hyperset: CayleyHyperset
    labeling: tuple[int, ...]


def regular_to_cayley(h: Dihypergraph, r: PermGroup) -> CayleyRecovery:
    """Rebuild a group and hyperset from a regular subgroup of Aut(h).

    Vertices are labeled by the unique permutation carrying the base
    vertex 0 onto them; reading products off those labels gives the
    group table, and the arcs leaving vertex 0 give one member per
    arc orbit.  cd_construct on the result reproduces h arc for arc.
    """
    n = h.vertex_count
    if not is_regular(r, n):
        raise ValueError(f"subgroup of order {r.order} on degree {r.degree} is not regular on {n} vertices")
    arcs = {(v, frozenset(e)) for v, e in h.arcs}
    for perm in r.perms:
        im = perm.images
        for v, e in h.arcs:
            if (im[v], frozenset(im[u] for u in e)) not in arcs:
                raise ValueError("the given permutations do not preserve the arcs of h")
    by_image = {perm.images[0]: perm for perm in r.perms}
    table = [[by_image[j].images[i] for j in range(n)] for i in range(n)]
    group = FiniteGroup.from_table(f"regular{n}", table)
    members = []
    for v, e in h.arcs:
        if v == 0:
            if 0 not in e:
                raise ValueError(f"arc at the base vertex has edge {e} missing the vertex itself")
            members.append(e)
    hyperset = validate_hyperset(group, members)
    return CayleyRecovery(group=group, hyperset=hyperset, labeling=tuple(range(n)))


def normalizer(big: PermGroup, small: PermGroup) -> PermGroup:
    """Elements of big whose conjugation maps small onto itself."""
    if big.degree != small.degree:
        raise ValueError(f"degree mismatch: {big.degree} vs {small.degree}")
    if not small.perms <= big.perms:
        raise ValueError("small is not contained in big")
    probes = list(small.generators) if small.generators else small.sorted_perms()
    kept = []
    for x in sorted(big.perms, key=lambda q: q.images):
        xi = x.inverse()
        if all(xi.then(s).then(x) in small.perms for s in probes):
            kept.append(x)
    return PermGroup(degree=big.degree, perms=frozenset(kept))


@dataclass(frozen=True)
class Theorem2Report:
    """Results of the normalizer factorization checks for one instance."""

    group_order: int
    aut_h_order: int
    aut_g_x_order: int
    normalizer_order: int
    product_factorization: bool
    order_matches: bool
    trivial_intersection: bool
    g_r_normal: bool
    stabilizer_matches: bool

    @property
    def all_pass(self) -> bool:
        return (
            self.product_factorization
            and self.order_matches
            and self.trivial_intersection
            and self.g_r_normal
            and self.stabilizer_matches
        )


def verify_theorem2(
    g: FiniteGroup,
    x: CayleyHyperset,
    aut_cutoff: int = 12,
    aut: Optional[PermGroup] = None,
) -> Theorem2Report:
    """Check that the normalizer of the right translations inside the
    dihypergraph's automorphisms factors as translations composed with
    the hyperset-preserving group automorphisms.

    A precomputed automorphism group may be passed to avoid repeating
    the search.
    """
    if aut is None:
        aut = aut_hypergraph(cd_construct(g, x), cutoff=aut_cutoff)
    g_r = right_regular(g)
    norm = normalizer(aut, g_r)
    sigma = [Permutation(a.map) for a in aut_g_x(g, x)]
    product = {s.then(t) for s in sigma for t in g_r.perms}
    g_r_normal = True
    for q in norm.perms:
        qi = q.inverse()
        if any(qi.then(t).then(q) not in g_r.perms for t in g_r.perms):
            g_r_normal = False
            break
    stabilizer = {q for q in norm.perms if q.images[0] == 0}
    return Theorem2Report(
        group_order=g.order,
        aut_h_order=aut.order,
        aut_g_x_order=len(sigma),
        normalizer_order=norm.order,
        product_factorization=product == norm.perms,
        order_matches=norm.order == g.order * len(sigma),
        trivial_intersection=(g_r.perms & set(sigma)) == {Permutation.identity(g.order)},
        g_r_normal=g_r_normal,
        stabilizer_matches=stabilizer == set(sigma),
    )


def dump_permgroup(p: PermGroup) -> str:
    """One 'perm 0->a 1->b ...' line per permutation, sorted."""
    lines = []
    for perm in p.sorted_perms():
        lines.append("perm " + " ".join(f"{i}->{v}" for i, v in enumerate(perm.images)))
    return "\n".join(lines) + "\n"
