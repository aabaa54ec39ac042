"""Finite groups as validated multiplication tables.

Elements are the indices 0..n-1 and the identity is always index 0.
table[i][j] is the product of element i by element j, in that order.
Every constructor funnels through full axiom validation, so a FiniteGroup
value in hand is always a genuine group.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

__all__ = [
    "AUT_GROUP_ORDER_CUTOFF",
    "CutoffExceeded",
    "FiniteGroup",
    "GroupAutomorphism",
    "make_cyclic",
    "make_dihedral",
    "direct_product",
    "load_group",
    "serialize_group",
    "subgroup_generated",
    "is_subgroup",
    "subgroup_index",
    "generating_set",
    "element_order",
    "group_automorphisms",
    "inner_automorphisms",
]

# Full automorphism-group search is refused above this group order.
AUT_GROUP_ORDER_CUTOFF = 40


class CutoffExceeded(ValueError):
    """An exact computation was refused because the input is over desk scale."""


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group given by its full multiplication table.

    Do not construct directly; use from_table or one of the factory
    functions so the axioms are checked.  The name is a display label
    and does not take part in equality.
    """

    name: str = field(compare=False)
    order: int
    table: tuple[tuple[int, ...], ...]
    inverse: tuple[int, ...]

    @property
    def identity(self) -> int:
        return 0

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def elements(self) -> range:
        return range(self.order)

    @staticmethod
    def from_table(name: str, table: Sequence[Sequence[int]]) -> "FiniteGroup":
        rows = tuple(tuple(row) for row in table)
        inverse = _validate_table(rows)
        return FiniteGroup(name=name, order=len(rows), table=rows, inverse=inverse)


def _validate_table(table: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    """Check the group axioms on a raw table; return the inverse map.

    Raises ValueError naming the violated axiom and the indices involved.
    """
    n = len(table)
    if n == 0:
        raise ValueError("empty table: a group has at least the identity")
    for i, row in enumerate(table):
        if len(row) != n:
            raise ValueError(f"row {i} has {len(row)} entries, expected {n}")
        for j, v in enumerate(row):
            if not (0 <= v < n):
                raise ValueError(f"entry table[{i}][{j}] = {v} is out of range 0..{n - 1}")

    # identity must sit at index 0; if some other index acts as identity,
    # say so, since the fix is a renumbering rather than a different table
    if any(table[0][j] != j for j in range(n)) or any(table[i][0] != i for i in range(n)):
        for e in range(1, n):
            if all(table[e][j] == j for j in range(n)) and all(table[i][e] == i for i in range(n)):
                raise ValueError(
                    f"identity is element {e}, not 0; renumber the elements so the identity has index 0"
                )
        raise ValueError("no identity element: index 0 is not a two-sided identity")

    for i in range(n):
        ti = table[i]
        for j in range(n):
            tij = ti[j]
            row_ij = table[tij]
            tj = table[j]
            for k in range(n):
                if row_ij[k] != ti[tj[k]]:
                    raise ValueError(
                        f"associativity fails at ({i},{j},{k}): "
                        f"({i}*{j})*{k} = {row_ij[k]} but {i}*({j}*{k}) = {ti[tj[k]]}"
                    )

    inverse = [-1] * n
    for i in range(n):
        for j in range(n):
            if table[i][j] == 0 and table[j][i] == 0:
                inverse[i] = j
                break
        if inverse[i] < 0:
            raise ValueError(f"no inverse for element {i}")
    return tuple(inverse)


def make_cyclic(n: int) -> FiniteGroup:
    """Cyclic group of order n, written additively: i*j = (i + j) mod n."""
    if n < 1:
        raise ValueError(f"cyclic group order must be positive, got {n}")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteGroup.from_table(f"Z{n}", table)


def make_dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n acting on an n-gon.

    Element index f*n + r stands for the pair (rotation r, flip f), so
    indices 0..n-1 form the rotation subgroup and the identity is 0.
    """
    if n < 1:
        raise ValueError(f"dihedral parameter must be positive, got {n}")
    m = 2 * n

    def mul(i: int, j: int) -> int:
        r1, f1 = i % n, i // n
        r2, f2 = j % n, j // n
        r = (r1 + r2) % n if f1 == 0 else (r1 - r2) % n
        return (f1 ^ f2) * n + r

    table = [[mul(i, j) for j in range(m)] for i in range(m)]
    return FiniteGroup.from_table(f"D{n}", table)


def direct_product(a: FiniteGroup, b: FiniteGroup) -> FiniteGroup:
    """Direct product with pairs packed row-major: index = i_a * |b| + i_b."""
    nb = b.order
    n = a.order * nb
    table = [[0] * n for _ in range(n)]
    for ia in range(a.order):
        for ib in range(nb):
            left = ia * nb + ib
            row = table[left]
            ra = a.table[ia]
            rb = b.table[ib]
            for ja in range(a.order):
                base = ra[ja] * nb
                for jb in range(nb):
                    row[ja * nb + jb] = base + rb[jb]
    return FiniteGroup.from_table(f"{a.name}x{b.name}", table)


def _meaningful_lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def load_group(text: str) -> FiniteGroup:
    """Parse the group file format.

    Layout: a ``group <name>`` line, an ``order <n>`` line, a ``table``
    line, then n rows of n space-separated indices.  ``#`` starts a
    comment.  The element numbering must put the identity at index 0.
    """
    lines = _meaningful_lines(text)
    if len(lines) < 3:
        raise ValueError("group file too short: expected group/order/table headers")
    if not lines[0].startswith("group "):
        raise ValueError(f"expected 'group <name>' on the first line, got {lines[0]!r}")
    name = lines[0][len("group "):].strip()
    if not name:
        raise ValueError("empty group name")
    parts = lines[1].split()
    if len(parts) != 2 or parts[0] != "order":
        raise ValueError(f"expected 'order <n>' on the second line, got {lines[1]!r}")
    try:
        n = int(parts[1])
    except ValueError:
        raise ValueError(f"order is not an integer: {parts[1]!r}") from None
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    if lines[2] != "table":
        raise ValueError(f"expected 'table' on the third line, got {lines[2]!r}")
    body = lines[3:]
    if len(body) != n:
        raise ValueError(f"expected {n} table rows, got {len(body)}")
    table = []
    for i, line in enumerate(body):
        try:
            row = [int(tok) for tok in line.split()]
        except ValueError:
            raise ValueError(f"table row {i} has a non-integer entry: {line!r}") from None
        if len(row) != n:
            raise ValueError(f"table row {i} has {len(row)} entries, expected {n}")
        table.append(row)
    return FiniteGroup.from_table(name, table)


def serialize_group(g: FiniteGroup) -> str:
    """Inverse of load_group: emit the group file format."""
    lines = [f"group {g.name}", f"order {g.order}", "table"]
    lines.extend(" ".join(str(v) for v in row) for row in g.table)
    return "\n".join(lines) + "\n"


def subgroup_generated(g: FiniteGroup, seed: Iterable[int]) -> frozenset[int]:
    """Smallest subgroup containing the seed, as a set of element indices."""
    members = {0}
    for s in seed:
        if not (0 <= s < g.order):
            raise ValueError(f"seed element {s} is out of range 0..{g.order - 1}")
        members.add(s)
    table = g.table
    while True:
        snapshot = sorted(members)
        fresh = {
            table[a][b] for a in snapshot for b in snapshot
        } - members
        if not fresh:
            return frozenset(members)
        members |= fresh


def is_subgroup(g: FiniteGroup, s: Iterable[int]) -> bool:
    """True when s is nonempty, contains 0, and is closed under the table."""
    members = frozenset(s)
    if not members or 0 not in members:
        return False
    if any(not (0 <= a < g.order) for a in members):
        return False
    return all(g.table[a][b] in members for a in members for b in members)


def subgroup_index(g: FiniteGroup, s: Iterable[int]) -> int:
    """|G| / |s| for a verified subgroup s."""
    members = frozenset(s)
    if not is_subgroup(g, members):
        raise ValueError("not a subgroup of the given group")
    return g.order // len(members)


def generating_set(g: FiniteGroup) -> tuple[int, ...]:
    """A small generating set found greedily in index order."""
    gens: list[int] = []
    closure = frozenset({0})
    for i in range(1, g.order):
        if i not in closure:
            gens.append(i)
            closure = subgroup_generated(g, gens)
    return tuple(gens)


def element_order(g: FiniteGroup, a: int) -> int:
    k, cur = 1, a
    while cur != 0:
        cur = g.table[cur][a]
        k += 1
    return k


@dataclass(frozen=True)
class GroupAutomorphism:
    """A bijection of element indices satisfying map[i*j] = map[i]*map[j]."""

    map: tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.map[a]


def _close_partial_map(
    g: FiniteGroup, gens: Sequence[int], images: Sequence[int]
) -> Optional[list[Optional[int]]]:
    """Propagate gens->images over the generated subgroup.

    Returns the partial map (None entries outside the subgroup), or None on
    any conflict with the homomorphism equation or injectivity.
    """
    n = g.order
    table = g.table
    mapping: list[Optional[int]] = [None] * n
    mapping[0] = 0
    used = [False] * n
    used[0] = True
    queue = [0]
    while queue:
        e = queue.pop()
        me = mapping[e]
        for s, t in zip(gens, images):
            e2 = table[e][s]
            m2 = table[me][t]
            if mapping[e2] is None:
                if used[m2]:
                    return None
                mapping[e2] = m2
                used[m2] = True
                queue.append(e2)
            elif mapping[e2] != m2:
                return None
    return mapping


def group_automorphisms(g: FiniteGroup) -> tuple[GroupAutomorphism, ...]:
    """All automorphisms of g, exact, refused above the order cutoff.

    Search assigns images to a greedy generating set, pruned by element
    order, and propagates each partial assignment across the generated
    subgroup before descending.
    """
    if g.order > AUT_GROUP_ORDER_CUTOFF:
        raise CutoffExceeded(
            f"group order {g.order} exceeds the automorphism search cutoff {AUT_GROUP_ORDER_CUTOFF}"
        )
    gens = generating_set(g)
    if not gens:
        return (GroupAutomorphism(tuple(range(g.order))),)
    orders = [element_order(g, a) for a in range(g.order)]
    candidates = [
        [t for t in range(g.order) if orders[t] == orders[s]] for s in gens
    ]
    found: list[GroupAutomorphism] = []

    def descend(k: int, images: list[int]) -> None:
        if k == len(gens):
            mapping = _close_partial_map(g, gens, images)
            if mapping is not None and all(v is not None for v in mapping):
                found.append(GroupAutomorphism(tuple(mapping)))
            return
        for t in candidates[k]:
            images.append(t)
            if _close_partial_map(g, gens[: k + 1], images) is not None:
                descend(k + 1, images)
            images.pop()

    descend(0, [])
    return tuple(sorted(found, key=lambda a: a.map))


def inner_automorphisms(g: FiniteGroup) -> tuple[GroupAutomorphism, ...]:
    """The conjugation maps x -> h^-1 x h, one per coset of the center."""
    table = g.table
    seen = set()
    for h in range(g.order):
        hi = g.inverse[h]
        m = tuple(table[table[hi][x]][h] for x in range(g.order))
        seen.add(m)
    return tuple(GroupAutomorphism(m) for m in sorted(seen))
