"""Sequence measurements: least period, linear complexity, balance, runs,
parity-split balance and periodic correlation.

Every input is one full period of a periodic binary sequence, so runs are
counted cyclically (a run crossing the end-start seam counts once with its
full length) and the least period is searched over divisors of the length.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import LengthMismatch, OddLength

REPORT_FIELDS = ("index", "period", "lc", "ones", "zeros", "runs", "even_balance", "odd_balance")


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def least_period(bits: Sequence[int]) -> int:
    """Smallest T with bits[i] = bits[(i+T) mod len] for all i."""
    seq = tuple(bits)
    if not seq:
        raise ValueError("empty sequence has no period")
    for t in _divisors(len(seq)):
        if seq[t:] + seq[:t] == seq:
            return t
    return len(seq)


def _pack(bits: Sequence[int]) -> int:
    mask = 0
    for k, b in enumerate(bits):
        if b:
            mask |= 1 << k
    return mask


def _bm_length(mask: int, n: int) -> int:
    """Berlekamp-Massey over GF(2) on n bits packed little-endian into mask.

    Keeps the carry-less products seq*C and seq*B as ints so the discrepancy
    at step i is a single bit test and each update is one shift-xor; this is
    the usual O(n^2) algorithm with word-parallel inner loops.
    """
    sc = sb = mask
    lc = 0
    gap = 1  # steps since the shadow polynomial was rebased
    for i in range(n):
        if sc >> i & 1:
            prev = sc
            sc ^= sb << gap
            if 2 * lc <= i:
                lc = i + 1 - lc
                sb = prev
                gap = 1
            else:
                gap += 1
        else:
            gap += 1
    return lc


def linear_complexity(bits: Sequence[int], period: int | None = None) -> int:
    """Degree of the minimal polynomial of the periodic extension of bits.

    Berlekamp-Massey on two full least periods, which is sufficient because
    the linear complexity never exceeds the period. The all-zero sequence
    has linear complexity 0.
    """
    seq = tuple(bits)
    t = least_period(seq) if period is None else period
    if not 1 <= t <= len(seq) or len(seq) % t:
        raise ValueError(f"period {t} does not divide length {len(seq)}")
    window = (seq + seq)[: 2 * t]
    return _bm_length(_pack(window), 2 * t)


def minimal_lfsr_length(bits: Sequence[int]) -> int:
    """Shortest register able to reproduce bits, found by trying every length.

    For each candidate length c it checks, by Gaussian elimination, whether
    any feedback taps satisfy the recurrence on the whole input. Independent
    of the Berlekamp-Massey route; intended as a cross-check on short inputs.
    """
    seq = tuple(bits)
    n = len(seq)
    if not any(seq):
        return 0
    for c in range(1, n):
        rows = []
        for i in range(n - c):
            row = 0
            for j in range(c):
                if seq[i + j]:
                    row |= 1 << j
            row |= seq[i + c] << c
            rows.append(row)
        if _consistent_gf2(rows, c):
            return c
    return n


def _consistent_gf2(rows: list[int], width: int) -> bool:
    """Whether an augmented GF(2) system (rhs in bit `width`) has a solution."""
    basis: dict[int, int] = {}
    for row in rows:
        for col, vec in basis.items():
            if row >> col & 1:
                row ^= vec
        if not row:
            continue
        low = (row & -row).bit_length() - 1
        if low == width:
            return False  # reduced row reads 0 = 1
        for col in basis:
            if basis[col] >> low & 1:
                basis[col] ^= row
        basis[low] = row
    return True


def balance(bits: Sequence[int]) -> tuple[int, int]:
    """(ones, zeros) counts."""
    ones = sum(1 for b in bits if b)
    return ones, len(bits) - ones


def subsequence_balance(bits: Sequence[int]) -> tuple[tuple[int, int], tuple[int, int]]:
    """Balance of the even-index and odd-index subsequences."""
    seq = tuple(bits)
    if len(seq) % 2:
        raise OddLength(f"length {len(seq)} is odd")
    return balance(seq[0::2]), balance(seq[1::2])


@dataclass
class RunDistribution:
    """Cyclic run histogram: length -> count for blocks (1-runs) and gaps (0-runs).

    A constant input has no transitions and therefore no run decomposition;
    it is marked by `constant` holding the repeated bit.
    """

    blocks: dict[int, int]
    gaps: dict[int, int]
    constant: int | None = None

    @property
    def no_runs(self) -> bool:
        return self.constant is not None

    def total_length(self) -> int:
        return sum(l * c for l, c in self.blocks.items()) + sum(
            l * c for l, c in self.gaps.items()
        )


def run_distribution(bits: Sequence[int]) -> RunDistribution:
    """Cyclic run decomposition of one period."""
    seq = tuple(bits)
    if not seq:
        raise ValueError("empty sequence has no runs")
    start = next((i for i in range(len(seq)) if seq[i - 1] != seq[i]), None)
    if start is None:
        return RunDistribution({}, {}, constant=seq[0])
    rot = seq[start:] + seq[:start]
    blocks: dict[int, int] = {}
    gaps: dict[int, int] = {}
    n = len(rot)
    i = 0
    while i < n:
        j = i
        while j < n and rot[j] == rot[i]:
            j += 1
        hist = blocks if rot[i] else gaps
        hist[j - i] = hist.get(j - i, 0) + 1
        i = j
    return RunDistribution(dict(sorted(blocks.items())), dict(sorted(gaps.items())))


def periodic_correlation(x: Sequence[int], y: Sequence[int], shift: int = 0) -> Fraction:
    """(agreements - disagreements) / length, comparing x_i with y_(i+shift)."""
    a = tuple(x)
    b = tuple(y)
    if len(a) != len(b):
        raise LengthMismatch(f"lengths {len(a)} and {len(b)} differ")
    n = len(a)
    rot = b[shift % n :] + b[: shift % n]
    agree = sum(1 for u, v in zip(a, rot) if u == v)
    return Fraction(2 * agree - n, n)


@dataclass
class SequenceReport:
    """Per-sequence analysis record."""

    index: str
    period: int
    lc: int
    ones: int
    zeros: int
    runs: RunDistribution
    even_balance: tuple[int, int] | None
    odd_balance: tuple[int, int] | None


def sequence_report(bits: Sequence[int], index: str = "-") -> SequenceReport:
    """Full measurement record for one sequence."""
    seq = tuple(bits)
    t = least_period(seq)
    parity = subsequence_balance(seq) if len(seq) % 2 == 0 else (None, None)
    ones, zeros = balance(seq)
    return SequenceReport(
        index=index,
        period=t,
        lc=linear_complexity(seq, t),
        ones=ones,
        zeros=zeros,
        runs=run_distribution(seq),
        even_balance=parity[0],
        odd_balance=parity[1],
    )


def _runs_cell(runs: RunDistribution) -> str:
    if runs.no_runs:
        return "noruns"
    parts = [f"b{l}:{c}" for l, c in sorted(runs.blocks.items())]
    parts += [f"g{l}:{c}" for l, c in sorted(runs.gaps.items())]
    return " ".join(parts)


def _balance_cell(pair: tuple[int, int] | None) -> str:
    return "-" if pair is None else f"{pair[0]}:{pair[1]}"


def _report_row(r: SequenceReport) -> tuple[str, ...]:
    return (
        r.index,
        str(r.period),
        str(r.lc),
        str(r.ones),
        str(r.zeros),
        _runs_cell(r.runs),
        _balance_cell(r.even_balance),
        _balance_cell(r.odd_balance),
    )


def format_reports(reports: Sequence[SequenceReport], fmt: str = "table") -> str:
    """Render reports as a human table, CSV, or key-value structured text."""
    rows = [_report_row(r) for r in reports]
    if fmt == "table":
        widths = [
            max(len(REPORT_FIELDS[i]), max((len(row[i]) for row in rows), default=0))
            for i in range(len(REPORT_FIELDS))
        ]
        lines = ["  ".join(name.ljust(w) for name, w in zip(REPORT_FIELDS, widths)).rstrip()]
        for row in rows:
            lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
        return "\n".join(lines) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(REPORT_FIELDS)
        writer.writerows(rows)
        return buf.getvalue()
    if fmt == "stext":
        chunks = []
        for row in rows:
            chunks.append("\n".join(f"{k}: {v}" for k, v in zip(REPORT_FIELDS, row)))
        return "\n\n".join(chunks) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
