"""Identity-containing subset families and the translate-closure calculus.

A hyperset over a group is a set of subsets of element indices, each
containing the identity 0.  Members are kept as sorted tuples and the
member list itself is sorted, so equal hypersets compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .groups import FiniteGroup, GroupAutomorphism, group_automorphisms, inner_automorphisms

__all__ = [
    "CayleyHyperset",
    "validate_hyperset",
    "load_hyperset",
    "right_translate",
    "cayley_closure",
    "single_cayley_closure",
    "is_cayley_closed",
    "are_cayley_equivalent",
    "cayley_equivalence_classes",
    "non_cayley_equivalent_representatives",
    "aut_g_x",
    "inn_g_x",
]

Member = tuple[int, ...]


@dataclass(frozen=True)
class CayleyHyperset:
    """A sorted family of identity-containing subsets of a group's indices."""

    group_order: int
    members: tuple[Member, ...]

    def __len__(self) -> int:
        return len(self.members)

    def member_set(self) -> frozenset[Member]:
        return frozenset(self.members)


def _canonical_member(g: FiniteGroup, member: Iterable[int]) -> Member:
    vals = sorted(set(member))
    if not vals:
        raise ValueError("empty member: each member must contain the identity 0")
    for v in (vals[0], vals[-1]):
        if v < 0 or v >= g.order:
            raise ValueError(f"member element {v} is out of range 0..{g.order - 1}")
    if vals[0] != 0:
        raise ValueError(f"member {tuple(vals)} does not contain the identity 0")
    return tuple(vals)


def validate_hyperset(g: FiniteGroup, raw: Iterable[Iterable[int]]) -> CayleyHyperset:
    """Normalize raw member collections into a canonical hyperset."""
    members = sorted({_canonical_member(g, m) for m in raw})
    return CayleyHyperset(group_order=g.order, members=tuple(members))


def load_hyperset(text: str, g: FiniteGroup) -> CayleyHyperset:
    """Parse the hyperset file format: one member per line, space-separated
    indices, ``#`` comments."""
    raw = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        try:
            raw.append([int(tok) for tok in body.split()])
        except ValueError:
            raise ValueError(f"line {lineno} has a non-integer entry: {body!r}") from None
    return validate_hyperset(g, raw)


def right_translate(g: FiniteGroup, member: Member, h: int) -> Member:
    """The translate member*h = {s*h : s in member}, sorted."""
    row_of = g.table
    return tuple(sorted(row_of[s][h] for s in member))


def _translate_class(g: FiniteGroup, member: Member) -> frozenset[Member]:
    """All translates member*s^-1 over s in member: the equivalence class."""
    return frozenset(right_translate(g, member, g.inverse[s]) for s in member)


def cayley_closure(g: FiniteGroup, x: CayleyHyperset) -> CayleyHyperset:
    """Union of every member's translate class.

    The closure always contains x, is itself closed, and closing again is
    a no-op.
    """
    out: set[Member] = set()
    for m in x.members:
        out.update(_translate_class(g, m))
    return CayleyHyperset(group_order=g.order, members=tuple(sorted(out)))


def single_cayley_closure(g: FiniteGroup, member: Iterable[int]) -> CayleyHyperset:
    """Closure of the one-member hyperset {member}."""
    m = _canonical_member(g, member)
    return CayleyHyperset(group_order=g.order, members=tuple(sorted(_translate_class(g, m))))


def is_cayley_closed(g: FiniteGroup, x: CayleyHyperset) -> bool:
    return cayley_closure(g, x) == x


def are_cayley_equivalent(g: FiniteGroup, a: Iterable[int], b: Iterable[int]) -> bool:
    """True when b = a*s^-1 for some s in a.

    The relation is symmetric and transitive on identity-containing
    subsets even though the definition reads one-sidedly.
    """
    ma = _canonical_member(g, a)
    mb = _canonical_member(g, b)
    return mb in _translate_class(g, ma)


def cayley_equivalence_classes(
    g: FiniteGroup, x: CayleyHyperset
) -> tuple[tuple[Member, ...], ...]:
    """Partition the members of x by Cayley equivalence.

    Classes are sorted by their smallest member; members inside a class
    keep their sorted order.
    """
    index = {m: i for i, m in enumerate(x.members)}
    parent = list(range(len(x.members)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i: int, j: int) -> None:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)

    for m, i in index.items():
        for t in _translate_class(g, m):
            j = index.get(t)
            if j is not None:
                union(i, j)
    groups: dict[int, list[Member]] = {}
    for m, i in index.items():
        groups.setdefault(find(i), []).append(m)
    classes = [tuple(sorted(v)) for v in groups.values()]
    return tuple(sorted(classes))


def non_cayley_equivalent_representatives(g: FiniteGroup, x: CayleyHyperset) -> CayleyHyperset:
    """One representative per equivalence class: the lexicographically
    smallest member of each class."""
    reps = sorted(cls[0] for cls in cayley_equivalence_classes(g, x))
    return CayleyHyperset(group_order=g.order, members=tuple(reps))


def _member_image(aut: GroupAutomorphism, member: Member) -> Member:
    return tuple(sorted(aut.map[s] for s in member))


def aut_g_x(g: FiniteGroup, x: CayleyHyperset) -> tuple[GroupAutomorphism, ...]:
    """Group automorphisms that permute the members of x."""
    member_set = x.member_set()
    return tuple(
        a
        for a in group_automorphisms(g)
        if all(_member_image(a, m) in member_set for m in x.members)
    )


def inn_g_x(g: FiniteGroup, x: CayleyHyperset) -> tuple[GroupAutomorphism, ...]:
    """Inner automorphisms that permute the members of x."""
    member_set = x.member_set()
    return tuple(
        a
        for a in inner_automorphisms(g)
        if all(_member_image(a, m) in member_set for m in x.members)
    )
