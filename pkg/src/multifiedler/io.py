"""Reading and writing data matrices and permutation lists."""
from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import IO, Iterable

import numpy as np

from .errors import BadParameter

__all__ = [
    "read_data_matrix",
    "write_data_matrix",
    "write_permutations_csv",
    "write_json_with_permutations",
]


def _parse_row(row: list[str]) -> list[float]:
    return [float(tok) for tok in row]


def _read_csv(path: Path, header: bool | None) -> np.ndarray:
    with open(path, newline="") as fh:
        rows = [r for r in csv.reader(fh) if r and any(tok.strip() for tok in r)]
    if not rows:
        raise BadParameter(f"{path}: no data")
    if header is None:
        try:
            _parse_row(rows[0])
        except ValueError:
            header = True
        else:
            header = False
    if header:
        rows = rows[1:]
    tokens = [[tok.strip() for tok in r] for r in rows]
    width = {len(r) for r in tokens}
    if len(width) != 1:
        raise BadParameter(f"{path}: ragged rows")
    try:
        values = np.array([_parse_row(r) for r in tokens], dtype=float)
    except ValueError as exc:
        raise BadParameter(f"{path}: {exc}") from None
    if np.all(values == np.round(values)):
        return values.astype(np.int64)
    return values


def _read_matrix_market(path: Path) -> np.ndarray:
    from scipy.io import mmread

    M = mmread(str(path))
    M = M.toarray() if hasattr(M, "toarray") else np.asarray(M)
    if np.all(M == np.round(M)):
        return M.astype(np.int64)
    return M.astype(float)


def read_data_matrix(path, header: bool | None = None) -> np.ndarray:
    """Load a units-by-types data matrix.

    ``.mtx`` files are read as Matrix Market (coordinate ``pattern`` entries
    become ones); anything else as dense CSV.  With ``header=None`` a first
    row that does not parse as numbers is treated as a header.
    """
    path = Path(path)
    if path.suffix.lower() == ".mtx":
        A = _read_matrix_market(path)
    else:
        A = _read_csv(path, header)
    if A.ndim != 2:
        raise BadParameter(f"{path}: expected a 2-D matrix")
    if np.any(A < 0):
        raise BadParameter(f"{path}: data matrix entries must be nonnegative")
    return A


def write_data_matrix(A, path, header: Iterable[str] | None = None) -> None:
    """Write ``A`` as CSV; integer matrices are written without a decimal point."""
    A = np.asarray(A)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        if header is not None:
            writer.writerow(list(header))
        for row in A:
            if np.issubdtype(A.dtype, np.integer):
                writer.writerow([str(int(a)) for a in row])
            else:
                writer.writerow([repr(float(a)) for a in row])


def write_permutations_csv(perms: Iterable[tuple], fh: IO[str]) -> int:
    """One 1-based permutation per line, comma separated; returns the count."""
    count = 0
    for p in perms:
        fh.write(",".join(map(str, p)))
        fh.write("\n")
        count += 1
    return count


def write_json_with_permutations(doc: dict, perms: Iterable[tuple] | None, fh: IO[str]) -> None:
    """Write ``doc`` (sorted keys) followed by a streamed ``permutations`` list.

    Output is byte-identical for identical inputs.
    """
    head = json.dumps(doc, sort_keys=True, indent=2)
    if perms is None:
        fh.write(head + "\n")
        return
    fh.write(head[:-2] + ',\n  "permutations": [')
    first = True
    for p in perms:
        fh.write("\n    " if first else ",\n    ")
        fh.write("[" + ", ".join(map(str, p)) + "]")
        first = False
    fh.write("\n  ]\n}\n" if not first else "]\n}\n")
