"""Exhaustive desk-scale verification sweep.

Builds a corpus of small groups, generates every closed hyperset reachable
from a single identity-containing subset within the size bound, and runs
the whole battery of structural checks on each instance.  The report is
deterministic text; any failure is reproduced verbatim.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .groups import (
    CutoffExceeded,
    FiniteGroup,
    direct_product,
    group_automorphisms,
    inner_automorphisms,
    is_subgroup,
    make_cyclic,
    make_dihedral,
    subgroup_generated,
    subgroup_index,
)
from .hypersets import (
    CayleyHyperset,
    aut_g_x,
    cayley_closure,
    cayley_equivalence_classes,
    inn_g_x,
    is_cayley_closed,
    non_cayley_equivalent_representatives,
    single_cayley_closure,
)
from .hypergraphs import (
    cd_construct,
    ch_construct,
    is_connected,
    is_undirected,
    underlying,
)
from .perms import (
    Permutation,
    aut_hypergraph,
    find_regular_subgroups,
    regular_to_cayley,
    right_regular,
    verify_theorem2,
)

__all__ = [
    "CENSUS_MAX_ORDER_CAP",
    "CENSUS_MAX_MEMBER_CAP",
    "CheckTally",
    "CensusResult",
    "census_corpus",
    "census_hypersets",
    "run_census",
]

# Hard caps on the requested bounds; the defaults sit well inside them.
CENSUS_MAX_ORDER_CAP = 10
CENSUS_MAX_MEMBER_CAP = 4

# The regular-subgroup hunt is skipped (and reported as skipped) when the
# ambient automorphism group is larger than this; the default census never
# reaches it.
REGULAR_SEARCH_AUT_CAP = 50000

CHECK_NAMES = (
    "arc_count",
    "closure_idempotent",
    "connected_iff_generating",
    "undirected_iff_closed",
    "subgroup_members",
    "underlying_equals_translate_family",
    "representative_choice_invariance",
    "right_regular_in_aut",
    "aut_preserves_arcs",
    "cayley_round_trip",
    "regular_subgroups",
    "normalizer_factorization",
    "aut_intersection",
)


@dataclass
class CheckTally:
    name: str
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    skip_reason: str = ""
    failures: list[str] = field(default_factory=list)

    def ok(self, instance: str, good: bool, detail: str = "") -> None:
        if good:
            self.passed += 1
        else:
            self.failed += 1
            message = f"{self.name}: {instance}"
            if detail:
                message += f": {detail}"
            self.failures.append(message)

    def skip(self, reason: str) -> None:
        self.skipped += 1
        self.skip_reason = reason


@dataclass
class CensusResult:
    max_order: int
    max_member_size: int
    group_count: int
    instance_count: int
    tallies: dict[str, CheckTally]
    nontrivial_regular_round_trips: int

    @property
    def all_pass(self) -> bool:
        return all(t.failed == 0 for t in self.tallies.values())

    def render(self) -> str:
        lines = [
            f"census: max_order={self.max_order} max_member_size={self.max_member_size}",
            f"groups: {self.group_count}",
            f"instances: {self.instance_count}",
        ]
        for name in CHECK_NAMES:
            t = self.tallies[name]
            line = f"check {name}: {t.passed} pass, {t.failed} fail"
            if t.skipped:
                line += f", {t.skipped} skipped: {t.skip_reason}"
            lines.append(line)
        lines.append(
            f"nontrivial_regular_round_trips: {self.nontrivial_regular_round_trips}"
        )
        for name in CHECK_NAMES:
            for failure in self.tallies[name].failures:
                lines.append(f"FAIL {failure}")
        lines.append(f"result: {'PASS' if self.all_pass else 'FAIL'}")
        return "\n".join(lines) + "\n"


def census_corpus(max_order: int) -> list[FiniteGroup]:
    """Cyclic and dihedral groups plus cyclic direct products, every one of
    order at most max_order, in a fixed order."""
    groups = [make_cyclic(n) for n in range(1, max_order + 1)]
    groups.extend(make_dihedral(n) for n in range(1, max_order // 2 + 1))
    for a in range(2, max_order + 1):
        for b in range(a, max_order + 1):
            if a * b <= max_order:
                groups.append(direct_product(make_cyclic(a), make_cyclic(b)))
    if 8 <= max_order:
        groups.append(
            direct_product(direct_product(make_cyclic(2), make_cyclic(2)), make_cyclic(2))
        )
    return groups


def census_hypersets(g: FiniteGroup, max_member_size: int) -> list[CayleyHyperset]:
    """Closures of every identity-containing subset within the size bound,
    deduplicated, sorted."""
    found = set()
    rest = list(range(1, g.order))
    for size in range(1, max_member_size + 1):
        for extra in itertools.combinations(rest, size - 1):
            found.add(single_cayley_closure(g, (0, *extra)))
    return sorted(found, key=lambda x: x.members)


def _perm_image_arcs(perm: Permutation, arcs):
    im = perm.images
    return {(im[v], tuple(sorted(im[u] for u in e))) for v, e in arcs}


def run_census(
    max_order: int = 8,
    max_member_size: int = 3,
    aut_cutoff: int = 12,
    regular_search_aut_cap: int = REGULAR_SEARCH_AUT_CAP,
) -> CensusResult:
    if not (1 <= max_order <= CENSUS_MAX_ORDER_CAP):
        raise ValueError(
            f"max_order must be between 1 and {CENSUS_MAX_ORDER_CAP}, got {max_order}"
        )
    if not (1 <= max_member_size <= CENSUS_MAX_MEMBER_CAP):
        raise ValueError(
            f"max_member_size must be between 1 and {CENSUS_MAX_MEMBER_CAP}, got {max_member_size}"
        )
    tallies = {name: CheckTally(name) for name in CHECK_NAMES}
    groups = census_corpus(max_order)
    instance_count = 0
    nontrivial_round_trips = 0

    for g in groups:
        auts_g = group_automorphisms(g)
        inns_g = inner_automorphisms(g)
        g_r = right_regular(g)
        for x in census_hypersets(g, max_member_size):
            instance_count += 1
            tag = f"{g.name} X={list(x.members)}"
            h = cd_construct(g, x)

            tallies["arc_count"].ok(
                tag,
                len(h.arcs) == g.order * len(x.members),
                f"|D|={len(h.arcs)} vs |G||X|={g.order * len(x.members)}",
            )

            closed_once = cayley_closure(g, x)
            tallies["closure_idempotent"].ok(
                tag,
                closed_once == x and cayley_closure(g, closed_once) == closed_once,
                "closure moved a closed hyperset",
            )

            generated = subgroup_generated(g, {s for m in x.members for s in m})
            tallies["connected_iff_generating"].ok(
                tag,
                is_connected(h) == (len(generated) == g.order),
                f"connected={is_connected(h)} generated_order={len(generated)}",
            )

            tallies["undirected_iff_closed"].ok(
                tag,
                is_undirected(h) == is_cayley_closed(g, x),
                f"undirected={is_undirected(h)} closed={is_cayley_closed(g, x)}",
            )

            if all(is_subgroup(g, m) for m in x.members):
                expected_edges = sum(subgroup_index(g, m) for m in x.members)
                tallies["subgroup_members"].ok(
                    tag,
                    is_cayley_closed(g, x) and len(h.edges) == expected_edges,
                    f"|E|={len(h.edges)} expected={expected_edges}",
                )

            classes = cayley_equivalence_classes(g, x)
            reps_low = non_cayley_equivalent_representatives(g, x)
            translate_family = ch_construct(g, reps_low)
            tallies["underlying_equals_translate_family"].ok(
                tag,
                underlying(h) == translate_family
                and underlying(cd_construct(g, cayley_closure(g, reps_low))) == translate_family,
                "translate family disagrees with the underlying hypergraph",
            )

            reps_high = CayleyHyperset(
                group_order=g.order, members=tuple(sorted(c[-1] for c in classes))
            )
            if reps_high != reps_low:
                tallies["representative_choice_invariance"].ok(
                    tag,
                    ch_construct(g, reps_high) == translate_family,
                    "translate family depends on the representative choice",
                )

            try:
                aut_h = aut_hypergraph(h, cutoff=aut_cutoff)
            except CutoffExceeded:
                for name in (
                    "right_regular_in_aut",
                    "aut_preserves_arcs",
                    "regular_subgroups",
                    "normalizer_factorization",
                    "aut_intersection",
                ):
                    tallies[name].skip("aut over cutoff")
                aut_h = None

            if aut_h is not None:
                tallies["right_regular_in_aut"].ok(
                    tag,
                    g_r.perms <= aut_h.perms,
                    "a right translation is not an automorphism",
                )

                arc_set = set(h.arcs)
                bad = next(
                    (
                        p
                        for p in aut_h.perms
                        if _perm_image_arcs(p, h.arcs) != arc_set
                    ),
                    None,
                )
                tallies["aut_preserves_arcs"].ok(
                    tag, bad is None, f"permutation {bad and bad.images} breaks an arc"
                )

                if aut_h.order <= regular_search_aut_cap:
                    regs = find_regular_subgroups(aut_h, g.order)
                    found_gr = any(r.perms == g_r.perms for r in regs)
                    regs_ok = found_gr
                    for r in regs:
                        if r.perms == g_r.perms:
                            continue
                        rec = regular_to_cayley(h, r)
                        if cd_construct(rec.group, rec.hyperset) == h:
                            nontrivial_round_trips += 1
                        else:
                            regs_ok = False
                    tallies["regular_subgroups"].ok(
                        tag,
                        regs_ok,
                        "right translations missing or a recovered instance disagrees",
                    )
                else:
                    tallies["regular_subgroups"].skip("aut order over regular-search cap")

                report = verify_theorem2(g, x, aut=aut_h)
                tallies["normalizer_factorization"].ok(
                    tag,
                    report.all_pass,
                    f"sub-checks: product={report.product_factorization} "
                    f"order={report.order_matches} intersection={report.trivial_intersection} "
                    f"normal={report.g_r_normal} stabilizer={report.stabilizer_matches}",
                )

                in_aut = {
                    a.map for a in auts_g if Permutation(a.map) in aut_h.perms
                }
                outer_match = in_aut == {a.map for a in aut_g_x(g, x)}
                inn_in_aut = {
                    a.map for a in inns_g if Permutation(a.map) in aut_h.perms
                }
                inner_match = inn_in_aut == {a.map for a in inn_g_x(g, x)}
                tallies["aut_intersection"].ok(
                    tag,
                    outer_match and inner_match,
                    f"outer={outer_match} inner={inner_match}",
                )

            rec = regular_to_cayley(h, g_r)
            tallies["cayley_round_trip"].ok(
                tag,
                rec.group == g and rec.hyperset == x
                and cd_construct(rec.group, rec.hyperset) == h,
                "recovered pair differs from the source",
            )

    return CensusResult(
        max_order=max_order,
        max_member_size=max_member_size,
        group_count=len(groups),
        instance_count=instance_count,
        tallies=tallies,
        nontrivial_regular_round_trips=nontrivial_round_trips,
    )
