"""Generalized self-shrinking sequences.

A family member is obtained by decimating a shifted copy of the base
maximal-length sequence at the one-positions of the base sequence itself:
keep v_n when a_n = 1, drop it when a_n = 0. One member per shift, plus the
all-zeros member for the null mapping; 2^L members of 2^(L-1) bits each.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .errors import BadPeriodLength, NoPartner, ShiftOutOfRange
from .gf2x import Field
from .sequences import Bits, MSequence


@dataclass(frozen=True)
class GssIndex:
    """Family index: the null mapping (s is None) or the shift mapping 1 -> alpha^s."""

    s: int | None

    @classmethod
    def zero(cls) -> "GssIndex":
        return cls(None)

    @classmethod
    def shift(cls, s: int) -> "GssIndex":
        if s < 0:
            raise ShiftOutOfRange(f"shift {s} is negative")
        return cls(s)

    @property
    def is_zero(self) -> bool:
        return self.s is None

    @property
    def label(self) -> str:
        return "zero" if self.s is None else str(self.s)

    def g_vector(self, field: Field) -> Bits:
        """The selector vector G realizing this index, (g_0, ..., g_(L-1))."""
        if self.s is None:
            return (0,) * field.degree
        return field.alpha_power(self.s).coords


def shift_of_G(field: Field, g: Sequence[int]) -> GssIndex:
    """Index of the combination v_n = sum of g_i * a_(n+i).

    The combination collapses to a pure shift: v = a shifted by the discrete
    log of sum(g_i * alpha^i), or the null sequence when G is all zeros.
    """
    g = tuple(g)
    if len(g) != field.degree:
        raise ValueError(f"expected {field.degree} selector bits, got {len(g)}")
    mask = 0
    for i, bit in enumerate(g):
        if bit not in (0, 1):
            raise ValueError(f"selector bit {bit!r} is not a bit")
        mask |= bit << i
    if mask == 0:
        return GssIndex.zero()
    return GssIndex.shift(field.dlog_mask(mask))


@dataclass(frozen=True)
class GssSequence:
    """One family member: its index and 2^(L-1) output bits."""

    index: GssIndex
    bits: Bits

    @cached_property
    def mask(self) -> int:
        """Bits packed into an int (bit k = bits[k]); used by closure checks."""
        m = 0
        for k, b in enumerate(self.bits):
            if b:
                m |= 1 << k
        return m


@dataclass(frozen=True)
class GssFamily:
    """All 2^L members in fixed order: null member first, then shifts 0 .. 2^L - 2."""

    field: Field
    seq: MSequence
    members: tuple[GssSequence, ...]

    def member(self, index: GssIndex) -> GssSequence:
        if index.is_zero:
            return self.members[0]
        return self.member_at_shift(index.s)

    def member_at_shift(self, s: int) -> GssSequence:
        if not 0 <= s < len(self.members) - 1:
            raise ShiftOutOfRange(f"shift {s} outside 0..{len(self.members) - 2}")
        return self.members[1 + s]


def gss_generate(seq: MSequence, index: GssIndex) -> GssSequence:
    """Generate one family member by the decimation rule."""
    half = (seq.period + 1) // 2
    if index.is_zero:
        return GssSequence(index, (0,) * half)
    s = index.s
    if not 0 <= s < seq.period:
        raise ShiftOutOfRange(f"shift {s} outside 0..{seq.period - 1}")
    doubled = seq.bits + seq.bits
    return GssSequence(index, tuple([doubled[n + s] for n in seq.one_positions]))


def gss_family(seq: MSequence) -> GssFamily:
    """Generate the whole family in its fixed order."""
    doubled = seq.bits + seq.bits
    ones = seq.one_positions
    members = [GssSequence(GssIndex.zero(), (0,) * len(ones))]
    for s in range(seq.period):
        members.append(GssSequence(GssIndex.shift(s), tuple([doubled[n + s] for n in ones])))
    return GssFamily(seq.field, seq, tuple(members))


def self_shrinking_index(field: Field) -> GssIndex:
    """Index of the self-shrinking member: shift 2^(L-1)."""
    return GssIndex.shift(1 << (field.degree - 1))


def self_shrink_direct(z: Sequence[int]) -> Bits:
    """Classic self-shrinking pass over one cyclic period.

    Scans pairs (z_2n, z_2n+1) for n over one period, indices mod len(z),
    emitting z_2n+1 whenever z_2n = 1. Requires the odd full-period length
    2^L - 1; the selector positions 2n then cover each index exactly once.
    """
    z = tuple(z)
    n = len(z)
    if n < 3 or (n + 1) & n:
        raise BadPeriodLength(f"length {n} is not 2^L - 1 for any L >= 2")
    out = []
    for k in range(n):
        if z[2 * k % n]:
            out.append(z[(2 * k + 1) % n])
    return tuple(out)


def complement_partner(field: Field, index: GssIndex) -> GssIndex:
    """The shift s+d with alpha^(s+d) = alpha^s + 1.

    The members at s and s+d are bitwise complements of each other. The null
    index and shift 0 fall outside the pairing (alpha^s + 1 would be 1 or 0)
    and raise NoPartner.
    """
    if index.is_zero:
        raise NoPartner("the null index has no complement partner")
    s = index.s
    if not 0 <= s < field.period:
        raise ShiftOutOfRange(f"shift {s} outside 0..{field.period - 1}")
    if s == 0:
        raise NoPartner("shift 0 (the all-ones member) has no complement partner")
    return GssIndex.shift(field.dlog_mask(field.alpha_power(s).mask ^ 1))
