"""The published list of symplectic SO and DC codes built from pairs of
generalized Reed-Muller codes, and the comparison of a certified report
against a row of it."""

from typing import List, Tuple

from .families import Construction, theorem7_codes
from .models import CodeReport, Table1Outcome, Table1Row
from .symplectic import symplectic_singleton_bound

# (kind, q, m, r, i, n, k, d, bound)
_ROWS: List[Tuple[str, int, int, int, int, int, int, int, int]] = [
    ("so", 2, 2, 0, 1, 8, 4, 2, 3),
    ("so", 2, 3, 1, 1, 16, 8, 4, 5),
    ("so", 3, 1, 1, 0, 6, 3, 2, 2),
    ("so", 3, 2, 1, 1, 18, 6, 6, 7),
    ("so", 3, 2, 2, 1, 18, 9, 3, 5),
    ("so", 4, 1, 1, 1, 8, 4, 3, 3),
    ("so", 4, 2, 1, 1, 32, 6, 12, 14),
    ("so", 5, 1, 1, 1, 10, 4, 4, 4),
    ("so", 5, 1, 2, 1, 10, 5, 3, 3),
    ("so", 7, 1, 1, 1, 14, 4, 6, 6),
    ("so", 7, 1, 2, 2, 14, 6, 5, 5),
    ("dc", 3, 2, 1, 1, 18, 12, 3, 4),
    ("dc", 3, 3, 1, 1, 54, 46, 3, 5),
    ("dc", 4, 2, 1, 1, 32, 26, 3, 4),
    ("dc", 4, 3, 1, 1, 128, 120, 3, 5),
    ("dc", 5, 1, 1, 1, 10, 6, 3, 3),
    ("dc", 5, 2, 1, 1, 50, 44, 3, 4),
    ("dc", 5, 3, 1, 1, 250, 242, 3, 5),
    ("dc", 7, 1, 1, 1, 14, 10, 3, 3),
    ("dc", 7, 1, 2, 2, 14, 8, 4, 4),
    ("dc", 7, 2, 1, 1, 98, 92, 3, 4),
    ("dc", 7, 3, 1, 1, 686, 678, 3, 5),
]

TABLE1_ROWS: List[Table1Row] = [Table1Row(*row) for row in _ROWS]


def build_row(row: Table1Row) -> Construction:
    so, dc = theorem7_codes(row.q, row.m, row.r, row.i)
    return so if row.kind == "so" else dc


def judge_row(row: Table1Row, report: CodeReport) -> Table1Outcome:
    """PASS needs the printed n, k and bound and a verified symplectic
    distance equal to the printed d."""
    problems = []
    if (report.n, report.k) != (row.n, row.k):
        problems.append(f"built [{report.n},{report.k}]")
    bound = symplectic_singleton_bound(report.n, report.k)
    if bound != row.bound:
        problems.append(f"bound {bound}")
    claim = report.d_symplectic
    if claim is None:
        problems.append("distance not established")
    elif not claim.verified:
        problems.append(f"distance only {claim.provenance}")
    elif claim.value != row.d:
        problems.append(f"distance {claim.value}")
    if problems:
        return Table1Outcome(row, False, report, ", ".join(problems))
    return Table1Outcome(row, True, report)
