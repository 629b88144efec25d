"""Text matrix files.

    field p=<p> m=<m> modulus=<c0,...,cm>
    rows=<k> cols=<n>
    <n integers in [0, q)>   (k lines)

Entries are the integer encodings of field elements. Lines starting
with `#` and blank lines are ignored.
"""

import logging
import re
from pathlib import Path
from typing import Iterator, List, Tuple, Union

import numpy as np

from .errors import MatrixParseError, WorkbenchError
from .gf import FieldSpec, field_from_modulus, field_of
from .matgf import MatGF, as_ints

_FIELD_LINE = re.compile(
    r"^field\s+p=(\d+)\s+m=(\d+)\s+modulus=(\d+(?:,\d+)*)$"
)
_SHAPE_LINE = re.compile(r"^rows=(\d+)\s+cols=(\d+)$")


def _content_lines(text: str) -> Iterator[Tuple[int, str]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield number, line


def _read_field(number: int, line: str) -> FieldSpec:
    match = _FIELD_LINE.match(line)
    if match is None:
        raise MatrixParseError(number, f"expected a field header: {line!r}")
    p, m = int(match.group(1)), int(match.group(2))
    modulus = [int(c) for c in match.group(3).split(",")]
    try:
        return field_from_modulus(p, m, modulus)
    except WorkbenchError as e:
        raise MatrixParseError(number, e.problem_details.detail or "")


def parse_matrix(text: str) -> MatGF:
    """Reads a matrix from the text of a matrix file.

    :raises MatrixParseError: With the number of the first bad line.
    """
    lines = _content_lines(text)
    try:
        number, line = next(lines)
    except StopIteration:
        raise MatrixParseError(1, "empty matrix file")
    spec = _read_field(number, line)
    try:
        number, line = next(lines)
    except StopIteration:
        raise MatrixParseError(number + 1, "missing rows=/cols= line")
    shape = _SHAPE_LINE.match(line)
    if shape is None:
        raise MatrixParseError(number, f"expected rows= cols=: {line!r}")
    k, n = int(shape.group(1)), int(shape.group(2))
    rows: List[List[int]] = []
    for number, line in lines:
        if len(rows) == k:
            raise MatrixParseError(number, f"more than {k} rows")
        try:
            row = [int(token) for token in line.split()]
        except ValueError:
            raise MatrixParseError(number, f"non-integer entry in {line!r}")
        if len(row) != n:
            raise MatrixParseError(
                number, f"{len(row)} entries where {n} are expected"
            )
        bad = [value for value in row if not 0 <= value < spec.q]
        if bad:
            raise MatrixParseError(
                number, f"entry {bad[0]} outside [0, {spec.q})"
            )
        rows.append(row)
    if len(rows) != k:
        raise MatrixParseError(number + 1, f"{len(rows)} of {k} rows")
    logging.debug("Parsed a %sx%s matrix over GF(%s)", k, n, spec.q)
    return spec.GF(np.array(rows, dtype=np.int64).reshape(k, n))


def format_matrix(M: MatGF) -> str:
    spec = field_of(M)
    k, n = M.shape
    lines = [spec.header(), f"rows={k} cols={n}"]
    lines += [" ".join(str(v) for v in row) for row in as_ints(M)]
    return "\n".join(lines) + "\n"


def read_matrix(path: Union[str, Path]) -> MatGF:
    return parse_matrix(Path(path).read_text())


def write_matrix(path: Union[str, Path], M: MatGF) -> None:
    Path(path).write_text(format_matrix(M))
    logging.info("Wrote %sx%s matrix to %s", M.shape[0], M.shape[1], path)
