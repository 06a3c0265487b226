"""Maximal-length sequences pinned to the start state (0, ..., 0, 1).

Sequences are tuples of 0/1 ints covering exactly one period, 2^L - 1 bits.
With the pinned start, bit n of the sequence is 1 exactly when alpha^n has
the coordinate of alpha^(L-1) set, which is what ties sequence positions to
field exponents throughout the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ShiftOutOfRange, SingularSystem
from .gf2x import Field, FieldElement

Bits = tuple[int, ...]


def parse_bits(text: str) -> Bits:
    """Turn a '0'/'1' string into a bit tuple."""
    bits = []
    for ch in text.strip():
        if ch not in "01":
            raise ValueError(f"bad bit character {ch!r}")
        bits.append(ord(ch) - 48)
    return tuple(bits)


def format_bits(bits: Sequence[int]) -> str:
    """ASCII line of '0'/'1' characters, no separators."""
    return "".join("1" if b else "0" for b in bits)


@dataclass(frozen=True)
class MSequence:
    """One full period of a maximal-length sequence and its one-positions."""

    field: Field
    bits: Bits
    one_positions: tuple[int, ...]

    @property
    def period(self) -> int:
        return len(self.bits)


def generate_msequence(field: Field) -> MSequence:
    """Run the register recurrence from the pinned start (0, ..., 0, 1).

    Each new bit is a[n+L] = sum of p_i * a[n+i] over i < L, taps taken from
    the defining polynomial.
    """
    deg = field.degree
    n = field.period
    taps = [i for i in range(deg) if field.modulus >> i & 1]
    bits = [0] * (deg - 1) + [1]
    for k in range(n - deg):
        acc = 0
        for i in taps:
            acc ^= bits[k + i]
        bits.append(acc)
    seq = tuple(bits)
    ones = tuple(i for i, b in enumerate(seq) if b)
    return MSequence(field, seq, ones)


def sliding_sequence(seq: MSequence, s: int) -> Bits:
    """The shifted copy v with v_n = a_(n+s), indices cyclic over one period."""
    if not 0 <= s < seq.period:
        raise ShiftOutOfRange(f"shift {s} outside 0..{seq.period - 1}")
    return seq.bits[s:] + seq.bits[:s]


def trace(x: FieldElement) -> int:
    """Sum of the L conjugates x^(2^i); always lands in GF(2), returned as a bit."""
    field = x.field
    acc = v = x.mask
    for _ in range(field.degree - 1):
        v = field.mul_masks(v, v)
        acc ^= v
    assert acc in (0, 1)
    return acc


def solve_trace_coefficient(seq: MSequence) -> FieldElement:
    """The unique A with trace(A * alpha^n) = a_n for every n.

    Solves the L x L GF(2) system in the coordinates of A given by the first
    L sequence bits; the register recurrence then propagates equality over
    the whole period. Raises SingularSystem if no unique solution exists,
    which cannot happen for a validated field and signals an internal bug.
    """
    field = seq.field
    deg = field.degree
    tr = [trace(field.alpha_power(k)) for k in range(2 * deg - 1)]
    rows = []
    for i in range(deg):
        row = 0
        for j in range(deg):
            if tr[i + j]:
                row |= 1 << j
        row |= seq.bits[i] << deg
        rows.append(row)
    coeff = field.element(_solve_square_gf2(rows, deg))
    assert not coeff.is_zero
    return coeff


def _solve_square_gf2(rows: list[int], width: int) -> int:
    """Solve a square GF(2) system; rows carry the rhs in bit `width`."""
    rows = list(rows)
    rank = 0
    pivot_cols = []
    for col in range(width):
        pivot = next((i for i in range(rank, len(rows)) if rows[i] >> col & 1), None)
        if pivot is None:
            raise SingularSystem(f"no pivot for column {col}")
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i] >> col & 1:
                rows[i] ^= rows[rank]
        pivot_cols.append(col)
        rank += 1
    solution = 0
    for i, col in enumerate(pivot_cols):
        if rows[i] >> width & 1:
            solution |= 1 << col
    return solution
