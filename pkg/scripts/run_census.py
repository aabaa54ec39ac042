#!/usr/bin/env python3
"""Run the exhaustive verification sweep and print its report.

Exit status 0 means every check passed on every instance.
"""

import argparse
import sys
from dataclasses import dataclass

from cdhg import run_census


@dataclass(frozen=True)
class SweepConfig:
    max_order: int = 8
    max_member_size: int = 3
    aut_cutoff: int = 12


def parse_config(argv=None) -> SweepConfig:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-order", type=int, default=SweepConfig.max_order,
                        help="largest group order in the corpus")
    parser.add_argument("--max-member-size", type=int, default=SweepConfig.max_member_size,
                        help="largest seed subset size")
    parser.add_argument("--aut-cutoff", type=int, default=SweepConfig.aut_cutoff,
                        help="vertex cutoff for the automorphism search")
    args = parser.parse_args(argv)
    return SweepConfig(
        max_order=args.max_order,
        max_member_size=args.max_member_size,
        aut_cutoff=args.aut_cutoff,
    )


def main(argv=None) -> int:
    config = parse_config(argv)
    result = run_census(
        max_order=config.max_order,
        max_member_size=config.max_member_size,
        aut_cutoff=config.aut_cutoff,
    )
    print(result.render(), end="")
    return 0 if result.all_pass else 1


if __name__ == "__main__":
    sys.exit(main())
