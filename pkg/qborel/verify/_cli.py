"""The ``verify`` command."""

from __future__ import annotations
from typing import Sequence
import sys
import pathlib
import logging
import argparse
from ._config import REPORT_DIR_VARIABLE, REPORT_NAME, VerifyConfig
from ._suites import SUITES, ALIASES, list_suites
from ._run import run_suites

__all__ = [
    "build_parser",
    "config_from_args",
    "main",
]

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    defaults = VerifyConfig()
    parser = argparse.ArgumentParser(
        prog="verify",
        description="Check the identities of quantized enveloping algebras, their function algebras and Galois objects.",
    )
    parser.add_argument(
        "--suite",
        dest="suites",
        action="append",
        choices=[*SUITES, *ALIASES, "all"],
        help="Suite to run, repeatable. Default: all suites.",
    )
    parser.add_argument("--datum", default=defaults.datum, help="Root datum label, e.g. A1, A2, B2.")
    parser.add_argument("--q", default=defaults.q, help="Rational deformation parameter in (0, 1), e.g. 1/2.")
    parser.add_argument("--fock-dim", type=int, default=None, help="Cutoff of every Fock mode.")
    parser.add_argument("--p-window", type=int, default=defaults.p_window, help="Radius of the weight lattice window.")
    parser.add_argument("--rep-cutoff", type=int, default=defaults.rep_cutoff, help="Largest highest weight coordinate.")
    parser.add_argument("--group", default=defaults.group, help="Cyclic orders of a finite abelian group, e.g. 2,2,3.")
    parser.add_argument("--seed", type=int, default=defaults.seed)
    parser.add_argument("--samples", type=int, default=defaults.samples, help="Random elements per sampling suite.")
    parser.add_argument(
        "--report",
        type=pathlib.Path,
        default=None,
        help=f"Report file. Default: {REPORT_NAME} in ${REPORT_DIR_VARIABLE} or the working directory.",
    )
    parser.add_argument("--jobs", type=int, default=defaults.jobs, help="Number of worker threads.")
    parser.add_argument("--list", action="store_true", help="Print the suite catalogue and exit.")
    parser.add_argument("--verbose", action="store_true", help="Log every check.")
    return parser


def config_from_args(args: argparse.Namespace) -> VerifyConfig:
    return VerifyConfig(
        datum=args.datum,
        q=args.q,
        fock_dim=args.fock_dim,
        p_window=args.p_window,
        rep_cutoff=args.rep_cutoff,
        group=args.group,
        seed=args.seed,
        samples=args.samples,
        report=args.report,
        jobs=args.jobs,
    )


def main(argv: None | Sequence[str] = None) -> int:
    """
    Run the selected suites and write the report.

    Returns
    -------
    :
        0 if every check passed, 1 otherwise. Invalid arguments exit with
        status 2.
    """
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.list:
        for name, anchor in list_suites().items():
            print(f"{name:<16} {anchor}")
        return 0

    try:
        config = config_from_args(args)
    except ValueError as e:
        parser.error(str(e))

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )

    names = args.suites or ["all"]
    if "all" in names:
        names = list(SUITES)
    names = list(dict.fromkeys(names))

    report = run_suites(config, names)
    path = report.write(config.report_path)
    for suite in report.suites:
        status = "ok" if suite.passed else "FAIL"
        print(f"{status:<5}{suite.name:<16} residual {suite.residual:.3g}  ({suite.wall_time:.1f} s)")
    print(f"report written to {path}")
    return 0 if report.passed else 1
