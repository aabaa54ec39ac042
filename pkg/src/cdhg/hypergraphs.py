"""Dihypergraphs built from groups and hypersets, and their invariants.

A dihypergraph is a vertex count plus a set of arcs (vertex, edge), where
an edge is a sorted tuple of vertex indices.  The edge set is derived from
the arcs, so repeated edges collapse: two arcs entering the same subset
share one edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .groups import CutoffExceeded, FiniteGroup
from .hypersets import CayleyHyperset, are_cayley_equivalent, right_translate

__all__ = [
    "ISO_VERTEX_CUTOFF",
    "Arc",
    "Dihypergraph",
    "UndirectedHypergraph",
    "cd_construct",
    "ch_construct",
    "underlying",
    "is_connected",
    "is_undirected",
    "uniformity",
    "to_cayley_digraph",
    "hypergraph_isomorphic",
    "dump_dihypergraph",
    "load_dihypergraph",
]

Arc = tuple[int, tuple[int, ...]]

# Backtracking isomorphism and automorphism search is refused above this
# vertex count.
ISO_VERTEX_CUTOFF = 20


@dataclass(frozen=True)
class Dihypergraph:
    vertex_count: int
    arcs: frozenset[Arc]

    @property
    def edges(self) -> frozenset[tuple[int, ...]]:
        return frozenset(e for _, e in self.arcs)

    def sorted_arcs(self) -> list[Arc]:
        return sorted(self.arcs)


@dataclass(frozen=True)
class UndirectedHypergraph:
    vertex_count: int
    edges: frozenset[tuple[int, ...]]


def cd_construct(g: FiniteGroup, x: CayleyHyperset) -> Dihypergraph:
    """Arcs (h, m*h) for every element h and member m.

    Distinct members stay distinct after any right translate, so the arc
    count is always |G| * |X|.
    """
    if x.group_order != g.order:
        raise ValueError(f"hyperset is over order {x.group_order}, group has order {g.order}")
    arcs = set()
    for h in g.elements():
        for m in x.members:
            arcs.add((h, right_translate(g, m, h)))
    return Dihypergraph(vertex_count=g.order, arcs=frozenset(arcs))


def ch_construct(g: FiniteGroup, y: CayleyHyperset) -> UndirectedHypergraph:
    """Undirected hypergraph whose edges are all right translates of y's
    members.  Members must be pairwise non-equivalent, otherwise distinct
    inputs could describe one translate family twice."""
    if y.group_order != g.order:
        raise ValueError(f"hyperset is over order {y.group_order}, group has order {g.order}")
    members = y.members
    for i in range(len(members)):
        for j in range(i + 1, len(members)):
            if are_cayley_equivalent(g, members[i], members[j]):
                raise ValueError(
                    f"members {members[i]} and {members[j]} are Cayley equivalent; "
                    "pass one representative per class"
                )
    edges = set()
    for m in members:
        for h in g.elements():
            edges.add(right_translate(g, m, h))
    return UndirectedHypergraph(vertex_count=g.order, edges=frozenset(edges))


def underlying(h: Dihypergraph) -> UndirectedHypergraph:
    """Forget arc directions: keep the distinct edge subsets."""
    return UndirectedHypergraph(vertex_count=h.vertex_count, edges=h.edges)


def is_connected(h: Dihypergraph) -> bool:
    """Connectivity of the bipartite incidence structure on vertices and
    edges; vertices lying in no edge are isolated."""
    n = h.vertex_count
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for e in h.edges:
        r = find(e[0])
        for v in e[1:]:
            rv = find(v)
            if rv != r:
                parent[rv] = r
    roots = {find(v) for v in range(n)}
    return len(roots) == 1


def is_undirected(h: Dihypergraph) -> bool:
    """Every edge is entered from each of its vertices."""
    arcs = h.arcs
    return all((w, e) in arcs for _, e in arcs for w in e)


def uniformity(h: Dihypergraph) -> Optional[int]:
    """The common edge size, or None if edges are absent or of mixed size."""
    sizes = {len(e) for e in h.edges}
    if len(sizes) == 1:
        return sizes.pop()
    return None


def to_cayley_digraph(g: FiniteGroup, x: CayleyHyperset) -> frozenset[tuple[int, int]]:
    """For a 2-uniform hyperset, the classical digraph on connection set
    S = (union of members) minus the identity: arcs (h, s*h)."""
    for m in x.members:
        if len(m) != 2:
            raise ValueError(f"member {m} has size {len(m)}; the digraph view needs all members of size 2")
    connection = sorted({s for m in x.members for s in m} - {0})
    return frozenset((h, g.table[s][h]) for s in connection for h in g.elements())


def _vertex_signatures(h: Dihypergraph) -> list[tuple]:
    """Isomorphism-invariant vertex labels: sizes of out-edges and of
    containing edges, refined once by the labels seen across shared edges."""
    n = h.vertex_count
    out_sizes: list[list[int]] = [[] for _ in range(n)]
    in_sizes: list[list[int]] = [[] for _ in range(n)]
    neighbors: list[set[int]] = [set() for _ in range(n)]
    for v, e in h.arcs:
        out_sizes[v].append(len(e))
    for e in h.edges:
        for v in e:
            in_sizes[v].append(len(e))
            neighbors[v].update(e)
    base = [
        (tuple(sorted(out_sizes[v])), tuple(sorted(in_sizes[v]))) for v in range(n)
    ]
    refined = []
    for v in range(n):
        around = sorted(base[u] for u in neighbors[v] if u != v)
        refined.append((base[v], tuple(around)))
    return refined


def _arc_preserving_maps(
    a: Dihypergraph, b: Dihypergraph, find_all: bool
) -> list[tuple[int, ...]]:
    """Vertex bijections mapping the arcs of a onto the arcs of b.

    Backtracking in natural vertex order; each arc of a is verified as
    soon as its last vertex receives an image.  Candidate images are
    limited to vertices with an equal signature.
    """
    n = a.vertex_count
    if n != b.vertex_count or len(a.arcs) != len(b.arcs):
        return []
    if sorted(len(e) for e in a.edges) != sorted(len(e) for e in b.edges):
        return []
    if n > ISO_VERTEX_CUTOFF:
        raise CutoffExceeded(
            f"vertex count {n} exceeds the isomorphism search cutoff {ISO_VERTEX_CUTOFF}"
        )
    sig_a = _vertex_signatures(a)
    sig_b = _vertex_signatures(b)
    if sorted(sig_a) != sorted(sig_b):
        return []
    candidates = [
        tuple(w for w in range(n) if sig_b[w] == sig_a[v]) for v in range(n)
    ]
    arcs_b = {(v, frozenset(e)) for v, e in b.arcs}
    # arcs of a scheduled at the step where their last vertex gets mapped
    pending: list[list[Arc]] = [[] for _ in range(n)]
    for v, e in sorted(a.arcs):
        pending[max(v, e[-1])].append((v, e))

    mapping = [-1] * n
    used = [False] * n
    results: list[tuple[int, ...]] = []

    def descend(k: int) -> bool:
        if k == n:
            results.append(tuple(mapping))
            return not find_all
        for w in candidates[k]:
            if used[w]:
                continue
            mapping[k] = w
            used[w] = True
            ok = all(
                (mapping[v], frozenset(mapping[u] for u in e)) in arcs_b
                for v, e in pending[k]
            )
            if ok and descend(k + 1):
                return True
            mapping[k] = -1
            used[w] = False
        return False

    descend(0)
    return results


def hypergraph_isomorphic(a: Dihypergraph, b: Dihypergraph) -> Optional[tuple[int, ...]]:
    """A vertex bijection carrying the arcs of a onto the arcs of b, as an
    image tuple, or None.  Size mismatches short-circuit to None."""
    maps = _arc_preserving_maps(a, b, find_all=False)
    return maps[0] if maps else None


def dump_dihypergraph(h: Dihypergraph) -> str:
    """Render the dihypergraph dump format, arcs sorted by vertex then edge."""
    lines = [f"dihypergraph {h.vertex_count}"]
    for v, e in h.sorted_arcs():
        lines.append(f"arc {v} : " + " ".join(str(u) for u in e))
    return "\n".join(lines) + "\n"


def load_dihypergraph(text: str) -> Dihypergraph:
    """Parse the dihypergraph dump format back into a value.

    Arcs loaded from text are not required to place the vertex inside its
    edge, unlike arcs built by cd_construct.
    """
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or not lines[0].startswith("dihypergraph "):
        raise ValueError("expected 'dihypergraph <n>' on the first line")
    try:
        n = int(lines[0].split()[1])
    except (IndexError, ValueError):
        raise ValueError(f"bad vertex count in {lines[0]!r}") from None
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    arcs = set()
    for ln in lines[1:]:
        parts = ln.split(":")
        if len(parts) != 2 or not parts[0].strip().startswith("arc "):
            raise ValueError(f"expected 'arc <v> : <vertices>', got {ln!r}")
        try:
            v = int(parts[0].split()[1])
            edge = tuple(sorted({int(tok) for tok in parts[1].split()}))
        except (IndexError, ValueError):
            raise ValueError(f"bad arc line {ln!r}") from None
        if not edge:
            raise ValueError(f"empty edge in arc line {ln!r}")
        bad = [u for u in (v, *edge) if u < 0 or u >= n]
        if bad:
            raise ValueError(f"vertex {bad[0]} out of range 0..{n - 1} in {ln!r}")
        arcs.add((v, edge))
    return Dihypergraph(vertex_count=n, arcs=frozenset(arcs))
