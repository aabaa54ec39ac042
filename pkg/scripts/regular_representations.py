#!/usr/bin/env python3
"""Survey which instances admit Cayley presentations over other groups.

For every census instance the automorphism group of its dihypergraph is
searched for regular subgroups; each one is converted back into a group
and hyperset.  An instance is interesting when some recovered group has
a different element-order profile than the source group, meaning the
same dihypergraph is a Cayley dihypergraph over two non-isomorphic
groups.
"""

import argparse
import sys
from dataclasses import dataclass

from cdhg import (
    CutoffExceeded,
    aut_hypergraph,
    cd_construct,
    census_corpus,
    census_hypersets,
    element_order,
    find_regular_subgroups,
    regular_to_cayley,
)


@dataclass(frozen=True)
class SurveyConfig:
    max_order: int = 8
    max_member_size: int = 3
    aut_cutoff: int = 12


def order_profile(g):
    """Multiset of element orders: equal for isomorphic groups."""
    return tuple(sorted(element_order(g, a) for a in g.elements()))


def survey(config: SurveyConfig) -> int:
    foreign_instances = 0
    total = 0
    for g in census_corpus(config.max_order):
        source_profile = order_profile(g)
        for x in census_hypersets(g, config.max_member_size):
            total += 1
            h = cd_construct(g, x)
            try:
                aut = aut_hypergraph(h, cutoff=config.aut_cutoff)
            except CutoffExceeded as exc:
                print(f"{g.name} {x.members}: skipped ({exc})")
                continue
            regulars = find_regular_subgroups(aut, g.order)
            profiles = sorted(
                {
                    order_profile(regular_to_cayley(h, r).group)
                    for r in regulars
                }
            )
            foreign = [p for p in profiles if p != source_profile]
            if foreign:
                foreign_instances += 1
                shown = ", ".join("-".join(map(str, p)) for p in foreign)
                print(
                    f"{g.name} {x.members}: |Aut|={aut.order} "
                    f"regular={len(regulars)} foreign profiles: {shown}"
                )
    print(f"instances: {total}")
    print(f"instances with a foreign regular presentation: {foreign_instances}")
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-order", type=int, default=SurveyConfig.max_order)
    parser.add_argument("--max-member-size", type=int, default=SurveyConfig.max_member_size)
    parser.add_argument("--aut-cutoff", type=int, default=SurveyConfig.aut_cutoff)
    args = parser.parse_args(argv)
    return survey(
        SurveyConfig(
            max_order=args.max_order,
            max_member_size=args.max_member_size,
            aut_cutoff=args.aut_cutoff,
        )
    )


if __name__ == "__main__":
    sys.exit(main())
