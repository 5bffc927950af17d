"""On-disk formats: walk checkpoints, distribution CSV, report JSON.

Checkpoint layout (all little-endian)::

    b"SZWK" | version: u32 | n: u32 | (re: f64, im: f64) * (n!)^2

Distribution CSV columns are ``permutation,cycle_type,probability`` with
permutations in space-separated one-line notation and cycle types as
space-separated parts.  Exact rationals in JSON are ``"p/q"`` strings.
"""

from __future__ import annotations

import csv
import io
import json
import struct
from fractions import Fraction
from math import factorial
from pathlib import Path

import numpy as np

from .symgroup import Permutation, cycle_type, rank, unrank
from .szegedy import WalkState

MAGIC = b"SZWK"
VERSION = 1
_HEADER = struct.Struct("<4sII")

DISTRIBUTION_COLUMNS = ("permutation", "cycle_type", "probability")
REPORT_FIELDS = ("n", "t", "analytic", "simulated", "abs_diff", "bound_rhs", "classical_uniform")


class CheckpointError(ValueError):
    pass


def write_checkpoint(state: WalkState, path) -> None:
    with open(path, "wb") as fh:
        fh.write(_HEADER.pack(MAGIC, VERSION, state.n))
        fh.write(state.amplitudes.astype("<c16").tobytes())


def read_checkpoint(path) -> WalkState:
    raw = Path(path).read_bytes()
    if len(raw) < _HEADER.size:
        raise CheckpointError("truncated header")
    magic, version, n = _HEADER.unpack_from(raw)
    if magic != MAGIC:
        raise CheckpointError(f"bad magic {magic!r}")
    if version != VERSION:
        raise CheckpointError(f"unsupported checkpoint version {version}")
    expected = factorial(n) ** 2 * 16
    body = raw[_HEADER.size :]
    if len(body) != expected:
        raise CheckpointError(f"expected {expected} payload bytes for n={n}, got {len(body)}")
    return WalkState(n, np.frombuffer(body, dtype="<c16").astype(np.complex128))


def format_parts(parts) -> str:
    return " ".join(str(p) for p in parts)


def parse_parts(text: str) -> tuple[int, ...]:
    return tuple(int(tok) for tok in text.split())


def format_fraction(q: Fraction) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_fraction(text: str) -> Fraction:
    return Fraction(text)


def distribution_rows(n: int, probs: np.ndarray) -> list[dict]:
    rows = []
    for r, p in enumerate(probs):
        perm = unrank(n, r)
        rows.append(
            {
                "permutation": str(perm),
                "cycle_type": format_parts(cycle_type(perm)),
                "probability": float(p),
            }
        )
    return rows


def write_distribution_csv(n: int, probs: np.ndarray, fh) -> None:
    writer = csv.DictWriter(fh, fieldnames=DISTRIBUTION_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in distribution_rows(n, probs):
        writer.writerow({**row, "probability": repr(row["probability"])})


def read_distribution_csv(fh) -> tuple[int, np.ndarray]:
    """Inverse of :func:`write_distribution_csv`; rows may come in any order."""
    rows = list(csv.DictReader(fh))
    if not rows:
        raise ValueError("empty distribution")
    n = len(rows[0]["permutation"].split())
    probs = np.zeros(factorial(n))
    for row in rows:
        perm = Permutation.from_string(row["permutation"])
        if parse_parts(row["cycle_type"]) != cycle_type(perm):
            raise ValueError(f"cycle type column disagrees with {perm}")
        probs[rank(perm)] = float(row["probability"])
    return n, probs


def distribution_to_csv(n: int, probs: np.ndarray) -> str:
    buf = io.StringIO()
    write_distribution_csv(n, probs, buf)
    return buf.getvalue()


def _jsonable(value):
    if isinstance(value, Fraction):
        return format_fraction(value)
    if isinstance(value, (np.floating,)):
        return float(value)
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, tuple):
        return list(value)
    raise TypeError(f"cannot serialize {type(value).__name__}")


def dumps(obj) -> str:
    return json.dumps(obj, default=_jsonable, indent=2)


def report_row(n, t, analytic, simulated=None, bound_rhs=None) -> dict:
    """One row of the reconciliation / bound report."""
    return {
        "n": n,
        "t": t,
        "analytic": analytic,
        "simulated": simulated,
        "abs_diff": None if simulated is None else abs(analytic - simulated),
        "bound_rhs": bound_rhs,
        "classical_uniform": 1.0 / n,
    }
