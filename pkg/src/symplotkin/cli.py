"""Command line surface of the workbench.

Exit status is 0 when every requested check holds, 1 when a check
fails and 2 when an operation is rejected with a problem document.
"""

import argparse
import logging
from pathlib import Path
from typing import Dict, List, Optional, Sequence

from marshmallow import Schema

from . import __version__
from .code import LinearCode
from .config import WorkbenchOptions
from .errors import InvalidConfigError, WorkbenchError
from .lcdsearch import Permutation
from .matrixfile import read_matrix, write_matrix
from .models import CodeReport, LcdSearchReport, SearchConfig, Table1Report
from .serialization import (
    CodeReportSchema,
    LcdSearchReportSchema,
    ProblemDetailsSchema,
    Table1ReportSchema,
)
from .workbench import (
    CHECKS,
    FAMILIES,
    Workbench,
    WorkbenchBuilder,
    appendix_permutation,
    build_family,
)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_ERROR = 2

FAMILY_PARAMS = ("q", "m", "r", "i", "n", "k", "k1", "k2", "r1", "r2")


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--budget",
        type=int,
        default=WorkbenchOptions().budget,
        help="Largest number of projective classes to enumerate.",
    )
    common.add_argument(
        "--wmax",
        type=int,
        default=None,
        help="Largest weight the bounded distance search tries.",
    )
    common.add_argument("--seed", type=int, default=1, help="Search seed.")
    common.add_argument(
        "--workers", type=int, default=1, help="Number of threads."
    )
    common.add_argument(
        "--json",
        dest="json_path",
        default=None,
        help="Write the JSON report to this path, '-' for stdout.",
    )
    common.add_argument("--verbose", action="store_true")
    return common


def _family_arguments(parser: argparse.ArgumentParser) -> None:
    for name in FAMILY_PARAMS:
        parser.add_argument(f"--{name}", type=int, default=None)
    parser.add_argument(
        "--odd", action="store_true", help="Odd variant of theorem4."
    )


def _parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="symplotkin",
        description="Build and certify symplectic codes from Plotkin sums.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    construct = commands.add_parser(
        "construct", parents=[common], help="Build and certify a family."
    )
    construct.add_argument("family", choices=sorted(FAMILIES))
    _family_arguments(construct)

    check = commands.add_parser(
        "check", parents=[common], help="Certify an imported code."
    )
    check.add_argument("matrix", type=Path)
    check.add_argument(
        "--checks",
        default="",
        help=f"Comma separated subset of {','.join(CHECKS)}.",
    )
    check.add_argument(
        "--permutation",
        default=None,
        help="Stored name such as P63, or images such as '(2 1 3)'.",
    )
    check.add_argument(
        "--theorem9",
        action="store_true",
        help="Certify PP(C, C P) and its dual for --permutation.",
    )
    check.add_argument(
        "--claimed-d",
        dest="claimed_d",
        type=int,
        default=None,
        help="Hamming distance of the imported code.",
    )

    commands.add_parser(
        "table1", parents=[common], help="Rebuild the GRM code table."
    )

    search = commands.add_parser(
        "lcd-search", parents=[common], help="Search an LCD permutation."
    )
    search.add_argument("matrix", type=Path, nargs="?", default=None)
    search.add_argument("--family", choices=sorted(FAMILIES), default=None)
    search.add_argument("--index", type=int, default=0)
    search.add_argument("--trials", type=int, default=10_000)
    search.add_argument(
        "--report-every", dest="report_every", type=int, default=1_000
    )
    _family_arguments(search)

    export = commands.add_parser(
        "export", parents=[common], help="Write a generator matrix."
    )
    export.add_argument("family", choices=sorted(FAMILIES))
    export.add_argument("--output", type=Path, required=True)
    export.add_argument("--index", type=int, default=0)
    _family_arguments(export)
    return parser.parse_args(argv)


def _family_params(args: argparse.Namespace) -> Dict[str, int]:
    params = {
        name: getattr(args, name)
        for name in FAMILY_PARAMS
        if getattr(args, name) is not None
    }
    if args.odd:
        params["odd"] = 1
    return params


def _options(args: argparse.Namespace) -> WorkbenchOptions:
    return WorkbenchOptions(
        budget=args.budget,
        w_max=args.wmax,
        seed=args.seed,
        workers=args.workers,
        trials=getattr(args, "trials", 10_000),
        report_every=getattr(args, "report_every", 1_000),
    )


def _emit(path: Optional[str], schema: Schema, payload: object) -> None:
    if path is None:
        return
    text = schema.dumps(payload, indent=2)
    if path == "-":
        print(text)
    else:
        Path(path).write_text(text + "\n")
        logging.info("Wrote report to %s", path)


def _describe(report: CodeReport) -> str:
    d_s = report.d_symplectic
    d_h = report.d_hamming
    parts = [f"{report.name} [{report.n},{report.k}]"]
    if d_h is not None:
        parts.append(f"d_H={d_h.value} ({d_h.provenance})")
    if d_s is not None:
        parts.append(f"d_s={d_s.value} ({d_s.provenance})")
    flags = report.flags
    named = [
        name
        for name, value in (
            ("SO", flags.so),
            ("DC", flags.dc),
            ("self-dual", flags.selfdual),
            ("LCD", flags.lcd),
            ("MDS", flags.hamming_mds),
            ("symplectic-MDS", flags.symplectic_mds),
        )
        if value
    ]
    if named:
        parts.append(" ".join(named))
    parts.append("PASS" if report.passed else f"FAIL {report.failures}")
    return " ".join(parts)


def _reports_status(reports: List[CodeReport]) -> int:
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


def _resolve_permutation(text: str) -> Permutation:
    if text.strip().upper().startswith("P"):
        return appendix_permutation(text.strip())
    return Permutation.parse(text)


def _construct(workbench: Workbench, args: argparse.Namespace) -> int:
    reports = workbench.construct(args.family, _family_params(args))
    for report in reports:
        print(_describe(report))
    _emit(args.json_path, CodeReportSchema(many=True), reports)
    return _reports_status(reports)


def _check(workbench: Workbench, args: argparse.Namespace) -> int:
    code = LinearCode(read_matrix(args.matrix))
    checks = [c for c in args.checks.split(",") if c]
    if args.theorem9:
        if args.permutation is None:
            raise InvalidConfigError("--theorem9 needs --permutation")
        permutation = _resolve_permutation(args.permutation)
        reports = workbench.verify_theorem9_import(
            code, permutation, args.claimed_d
        )
    else:
        reports = [workbench.check(code, checks)]
    for report in reports:
        print(_describe(report))
    _emit(args.json_path, CodeReportSchema(many=True), reports)
    return _reports_status(reports)


def _table1(workbench: Workbench, args: argparse.Namespace) -> int:
    report: Table1Report = workbench.table1()
    for outcome in report.outcomes:
        verdict = "PASS" if outcome.passed else f"FAIL ({outcome.reason})"
        print(f"{outcome.row} bound {outcome.row.bound}: {verdict}")
    print(f"{report.passed}/{len(report.outcomes)} rows pass")
    _emit(args.json_path, Table1ReportSchema(), report)
    return EXIT_OK if report.all_passed else EXIT_FAILED


def _lcd_search(workbench: Workbench, args: argparse.Namespace) -> int:
    if args.matrix is not None:
        code = LinearCode(read_matrix(args.matrix))
        name = args.matrix.stem
    elif args.family is not None:
        plans = build_family(args.family, _family_params(args))
        code = plans[args.index][0].code
        name = plans[args.index][0].name
    else:
        raise InvalidConfigError("give a matrix file or --family")
    config = SearchConfig(args.trials, args.seed, args.report_every)
    report: LcdSearchReport = workbench.lcd_search(code, config, name)
    if report.found:
        print(f"{name}: {report.permutation} after {report.trials} trials")
    else:
        print(f"{name}: no permutation in {report.trials} trials")
    for code_report in report.codes:
        print(_describe(code_report))
    _emit(args.json_path, LcdSearchReportSchema(), report)
    return _reports_status(report.codes)


def _export(workbench: Workbench, args: argparse.Namespace) -> int:
    plans = build_family(args.family, _family_params(args))
    built = plans[args.index][0]
    write_matrix(args.output, built.code.generator)
    print(f"{built.name} [{built.code.n},{built.code.k}] -> {args.output}")
    return EXIT_OK


COMMANDS = {
    "construct": _construct,
    "check": _check,
    "table1": _table1,
    "lcd-search": _lcd_search,
    "export": _export,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(message)s",
    )
    try:
        workbench = WorkbenchBuilder(_options(args)).build()
        return COMMANDS[args.command](workbench, args)
    except WorkbenchError as e:
        print(ProblemDetailsSchema().dumps(e.problem_details, indent=2))
        return EXIT_ERROR
