"""Command line front end: build, analyze, census."""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .groups import CutoffExceeded, FiniteGroup, load_group
from .hypersets import CayleyHyperset, aut_g_x, is_cayley_closed, load_hyperset
from .hypergraphs import cd_construct, dump_dihypergraph, is_connected, is_undirected, uniformity
from .perms import aut_hypergraph, verify_theorem2
from .census import run_census

__all__ = ["AnalysisReport", "build_analysis_report", "main"]


@dataclass(frozen=True)
class AnalysisReport:
    """Ordered key/value lines describing one (group, hyperset) instance."""

    entries: tuple[tuple[str, str], ...]

    def render(self) -> str:
        return "\n".join(f"{k}: {v}" for k, v in self.entries) + "\n"


def build_analysis_report(
    g: FiniteGroup,
    x: CayleyHyperset,
    with_aut: bool = True,
    aut_cutoff: int = 12,
) -> AnalysisReport:
    h = cd_construct(g, x)
    entries: list[tuple[str, str]] = [
        ("group", g.name),
        ("order", str(g.order)),
        ("members", str(len(x.members))),
        ("cayley_closed", "true" if is_cayley_closed(g, x) else "false"),
        ("connected", "true" if is_connected(h) else "false"),
        ("undirected", "true" if is_undirected(h) else "false"),
        ("uniformity", str(uniformity(h)) if uniformity(h) is not None else "none"),
        ("arcs", str(len(h.arcs))),
        ("edges", str(len(h.edges))),
    ]
    theorem2_keys = (
        "theorem2_product_factorization",
        "theorem2_order",
        "theorem2_trivial_intersection",
        "theorem2_normality",
        "theorem2_stabilizer",
    )
    if not with_aut:
        skipped = "skipped: --no-aut"
        entries.append(("aut_h", skipped))
        entries.append(("aut_g_x", skipped))
        entries.append(("normalizer", skipped))
        entries.extend((k, skipped) for k in theorem2_keys)
        return AnalysisReport(entries=tuple(entries))
    try:
        aut = aut_hypergraph(h, cutoff=aut_cutoff)
    except CutoffExceeded:
        skipped = f"skipped: over cutoff ({h.vertex_count} > {aut_cutoff})"
        entries.append(("aut_h", skipped))
        try:
            entries.append(("aut_g_x", str(len(aut_g_x(g, x)))))
        except CutoffExceeded as exc:
            entries.append(("aut_g_x", f"skipped: {exc}"))
        entries.append(("normalizer", skipped))
        entries.extend((k, skipped) for k in theorem2_keys)
        return AnalysisReport(entries=tuple(entries))
    entries.append(("aut_h", str(aut.order)))
    try:
        report = verify_theorem2(g, x, aut=aut)
    except CutoffExceeded as exc:
        skipped = f"skipped: {exc}"
        entries.append(("aut_g_x", skipped))
        entries.append(("normalizer", skipped))
        entries.extend((k, skipped) for k in theorem2_keys)
        return AnalysisReport(entries=tuple(entries))
    entries.append(("aut_g_x", str(report.aut_g_x_order)))
    entries.append(("normalizer", str(report.normalizer_order)))
    flags = (
        report.product_factorization,
        report.order_matches,
        report.trivial_intersection,
        report.g_r_normal,
        report.stabilizer_matches,
    )
    entries.extend(
        (key, "pass" if flag else "fail") for key, flag in zip(theorem2_keys, flags)
    )
    return AnalysisReport(entries=tuple(entries))


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _load_pair(group_path: str, hyperset_path: str) -> tuple[FiniteGroup, CayleyHyperset]:
    g = load_group(Path(group_path).read_text())
    x = load_hyperset(Path(hyperset_path).read_text(), g)
    return g, x


def main(argv: Optional[list[str]] = None) -> int:
    parser = argparse.ArgumentParser(
        prog="cdhg",
        description="Build and analyze Cayley dihypergraphs over small finite groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="construct the dihypergraph and dump its arcs")
    p_build.add_argument("--group", required=True, help="group file")
    p_build.add_argument("--hyperset", required=True, help="hyperset file")
    p_build.add_argument("--out", help="write the dump here instead of stdout")

    p_analyze = sub.add_parser("analyze", help="report the instance's invariants")
    p_analyze.add_argument("--group", required=True, help="group file")
    p_analyze.add_argument("--hyperset", required=True, help="hyperset file")
    p_analyze.add_argument("--no-aut", action="store_true", help="skip automorphism-dependent fields")
    p_analyze.add_argument("--aut-cutoff", type=int, default=12, help="vertex cutoff for the automorphism search")
    p_analyze.add_argument("--out", help="write the report here instead of stdout")

    p_census = sub.add_parser("census", help="run the verification sweep over small groups")
    p_census.add_argument("--max-order", type=int, default=8, help="largest group order")
    p_census.add_argument("--max-member-size", type=int, default=3, help="largest seed subset size")
    p_census.add_argument("--aut-cutoff", type=int, default=12, help="vertex cutoff for the automorphism search")
    p_census.add_argument("--out", help="write the report here instead of stdout")

    args = parser.parse_args(argv)
    try:
        if args.command == "build":
            g, x = _load_pair(args.group, args.hyperset)
            _emit(dump_dihypergraph(cd_construct(g, x)), args.out)
            return 0
        if args.command == "analyze":
            g, x = _load_pair(args.group, args.hyperset)
            report = build_analysis_report(
                g, x, with_aut=not args.no_aut, aut_cutoff=args.aut_cutoff
            )
            _emit(report.render(), args.out)
            return 0
        result = run_census(
            max_order=args.max_order,
            max_member_size=args.max_member_size,
            aut_cutoff=args.aut_cutoff,
        )
        _emit(result.render(), args.out)
        return 0 if result.all_pass else 1
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
