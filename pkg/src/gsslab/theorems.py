"""Mechanical verifiers for the structural claims about a family.

Each verifier checks one claim exhaustively over the family built from a
given polynomial and returns a structured verdict instead of asserting, so
a front end can print a full scorecard even when a check fails. A failing
verdict always carries a witness precise enough to replay the violation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .analysis import least_period, linear_complexity, run_distribution, subsequence_balance
from .gf2x import Field, poly_hex
from .gss import (
    GssFamily,
    GssIndex,
    complement_partner,
    gss_family,
    gss_generate,
    self_shrink_direct,
    self_shrinking_index,
)
from .sequences import MSequence, generate_msequence, sliding_sequence

CONFIRMED = "CONFIRMED"
COUNTEREXAMPLE = "COUNTEREXAMPLE"


@dataclass(frozen=True)
class SpecialExponents:
    """The distinguished exponents of a field.

    m: dlog of alpha + 1.
    p: the unique exponent with alpha^(p+1) = alpha^p + 1; equals 2^L - 1 - m.
    q: 2p reduced mod 2^L - 1; satisfies alpha^q + alpha^(q+1) = alpha^p.
    """

    m: int
    p: int
    q: int


def find_special_exponents(field: Field) -> SpecialExponents:
    """Locate m, p, q and re-verify their defining identities in the field."""
    n = field.period
    m = field.dlog(field.alpha + field.one)
    p = (n - m) % n
    q = 2 * p % n
    assert field.alpha_power(p + 1) == field.alpha_power(p) + field.one
    assert field.alpha_power(q) + field.alpha_power(q + 1) == field.alpha_power(p)
    return SpecialExponents(m=m, p=p, q=q)


@dataclass(frozen=True)
class VerdictReport:
    """Outcome of one verifier over one field."""

    name: str
    status: str
    scope: str
    witness: str | None = None
    notes: tuple[str, ...] = ()

    @property
    def confirmed(self) -> bool:
        return self.status == CONFIRMED

    def line(self) -> str:
        out = f"{self.name}: {self.status}"
        if self.witness:
            out += f" {self.witness}"
        if self.notes:
            out += f" [{'; '.join(self.notes)}]"
        return out


def _scope(field: Field) -> str:
    return f"poly={poly_hex(field.modulus)} L={field.degree}"


def _confirmed(name: str, field: Field, *notes: str) -> VerdictReport:
    return VerdictReport(name, CONFIRMED, _scope(field), None, tuple(notes))


def _refuted(name: str, field: Field, witness: str, *notes: str) -> VerdictReport:
    return VerdictReport(name, COUNTEREXAMPLE, _scope(field), witness, tuple(notes))


def verify_period_classification(family: GssFamily, exps: SpecialExponents | None = None) -> VerdictReport:
    """Least periods land only in {1, 2, 2^(L-1)}: T=1 for the null and
    shift-0 members, T=2 at shifts p and p+1, full period everywhere else."""
    name = "periods"
    field = family.field
    exps = exps or find_special_exponents(field)
    half = field.order // 2
    notes = [f"m={exps.m} p={exps.p} q={exps.q}"]
    if not field.degree - 1 <= exps.p < field.period - 1:
        notes.append(f"p={exps.p} outside the stated range {field.degree - 1}..{field.period - 2} (recorded only)")
    for member in family.members:
        idx = member.index
        if idx.is_zero or idx.s == 0:
            expected = 1
        elif idx.s in (exps.p, exps.p + 1):
            expected = 2
        else:
            expected = half
        t = least_period(member.bits)
        if t != expected:
            return _refuted(name, field, f"index={idx.label} period={t} expected={expected}", *notes)
    return _confirmed(name, field, *notes)


def verify_alternating_members(family: GssFamily, exps: SpecialExponents | None = None) -> VerdictReport:
    """The members at shifts p and p+1 are exactly 1010...10 and 0101...01."""
    name = "alternating"
    field = family.field
    exps = exps or find_special_exponents(field)
    half = field.order // 2
    want10 = tuple((k + 1) & 1 for k in range(half))
    want01 = tuple(k & 1 for k in range(half))
    got_p = family.member_at_shift(exps.p).bits
    if got_p != want10:
        return _refuted(name, field, f"shift p={exps.p} is not 1010...10")
    got_p1 = family.member_at_shift(exps.p + 1).bits
    if got_p1 != want01:
        return _refuted(name, field, f"shift p+1={exps.p + 1} is not 0101...01")
    return _confirmed(name, field, f"p={exps.p}")


def verify_parity_balance(family: GssFamily) -> VerdictReport:
    """Members with least period above 2 have balanced even-index and
    odd-index subsequences."""
    name = "parity_balance"
    field = family.field
    checked = 0
    for member in family.members:
        if least_period(member.bits) <= 2:
            continue
        (e1, e0), (o1, o0) = subsequence_balance(member.bits)
        if e1 != e0 or o1 != o0:
            return _refuted(
                name,
                field,
                f"index={member.index.label} even={e1}:{e0} odd={o1}:{o0}",
            )
        checked += 1
    return _confirmed(name, field, f"checked {checked} members with period > 2")


def verify_sliding_complement(seq: MSequence, s: int) -> VerdictReport:
    """With d the partner distance for shift s: wherever a_n = 1 the sliding
    sequence flips d later (v_n != v_(n+d)), wherever a_n = 0 it repeats."""
    name = "sliding_complement"
    field = seq.field
    partner = complement_partner(field, GssIndex.shift(s))
    d = (partner.s - s) % field.period
    v = sliding_sequence(seq, s)
    w = v[d:] + v[:d]
    for n, (a_bit, vn, vnd) in enumerate(zip(seq.bits, v, w)):
        if vn ^ vnd != a_bit:
            return _refuted(name, field, f"s={s} d={d} n={n} a={a_bit} v[n]={vn} v[n+d]={vnd}")
    return _confirmed(name, field, f"s={s} d={d}")


def verify_sliding_complement_all(seq: MSequence) -> VerdictReport:
    """verify_sliding_complement over every eligible shift 1 .. 2^L - 2."""
    name = "sliding_complement"
    field = seq.field
    for s in range(1, field.period):
        report = verify_sliding_complement(seq, s)
        if not report.confirmed:
            return report
    return _confirmed(name, field, f"all {field.period - 1} eligible shifts")


def verify_excluded_periods(family: GssFamily) -> VerdictReport:
    """No member has a least period 2^j for j = 2 .. L-2."""
    name = "excluded_periods"
    field = family.field
    forbidden = {1 << j for j in range(2, field.degree - 1)}
    if not forbidden:
        return _confirmed(name, field, "vacuous: no excluded periods for L <= 3")
    for member in family.members:
        t = least_period(member.bits)
        if t in forbidden:
            return _refuted(name, field, f"index={member.index.label} period={t}")
    return _confirmed(name, field, f"no member period in {sorted(forbidden)}")


def verify_group_and_balance(family: GssFamily) -> VerdictReport:
    """The members form a group under bitwise xor (null member as identity,
    each member self-inverse) and every member except the all-zeros and
    all-ones ones is exactly balanced."""
    name = "group_balance"
    field = family.field
    members = family.members
    half = len(members[0].bits)
    full = (1 << half) - 1
    masks = [m.mask for m in members]
    mask_set = frozenset(masks)
    if len(mask_set) != len(masks):
        return _refuted(name, field, "duplicate member bit patterns")
    if masks[0] != 0:
        return _refuted(name, field, "null index member is not all zeros")
    if masks[1] != full:
        return _refuted(name, field, "shift 0 member is not all ones")
    for member in members:
        ones = member.mask.bit_count()
        if member.mask in (0, full):
            continue
        if ones != half // 2:
            return _refuted(name, field, f"index={member.index.label} ones={ones} expected={half // 2}")
    if len(members) <= 1 << 10:
        for i, x in enumerate(masks):
            for y in masks[i:]:
                if x ^ y not in mask_set:
                    return _refuted(name, field, f"xor of members {i} and mask {y:#x} leaves the family")
        note = f"xor closure checked over all {len(masks)} x {len(masks)} pairs"
    else:
        # complete subspace test: the set is xor-closed iff its size equals
        # 2^rank of its span; avoids the quadratic pair walk at large L
        basis: dict[int, int] = {}
        for v in masks:
            while v:
                top = v.bit_length() - 1
                if top not in basis:
                    basis[top] = v
                    break
                v ^= basis[top]
        if 1 << len(basis) != len(mask_set):
            return _refuted(name, field, f"span rank {len(basis)} does not match family size {len(mask_set)}")
        note = f"xor closure checked by span rank {len(basis)}"
    return _confirmed(name, field, note)


def verify_self_shrinking(field: Field, family: GssFamily | None = None) -> VerdictReport:
    """The member at shift 2^(L-1) equals the classic pair-scan output on the
    decimated base sequence; its least period is 2^(L-1) (or 2 in the
    exceptional case p = 2^(L-1)) and meets the classic lower bound."""
    name = "self_shrinking"
    seq = family.seq if family is not None else generate_msequence(field)
    half = 1 << (field.degree - 1)
    member = (
        family.member(self_shrinking_index(field))
        if family is not None
        else gss_generate(seq, self_shrinking_index(field))
    )
    n = field.period
    z = tuple(seq.bits[half * k % n] for k in range(n))
    direct = self_shrink_direct(z)
    if direct != member.bits:
        return _refuted(name, field, f"pair-scan output differs from member at shift {half}")
    exps = find_special_exponents(field)
    expected = 2 if exps.p == half else half
    t = least_period(member.bits)
    notes = [f"T_ss={t}"]
    if exps.p == half:
        notes.append(f"exceptional case p = 2^(L-1) = {half}")
    if t != expected:
        return _refuted(name, field, f"period {t} expected {expected}", *notes)
    bound = 1 << (field.degree // 2)
    if t < bound:
        return _refuted(name, field, f"period {t} below classic lower bound {bound}", *notes)
    notes.append(f"classic period bound {bound} holds with slack {t - bound}")
    return _confirmed(name, field, *notes)


def verify_lc_bounds(family: GssFamily, exps: SpecialExponents | None = None) -> VerdictReport:
    """Every full-period member has linear complexity strictly between
    2^(L-2) and 2^(L-1); the self-shrinking member additionally stays at or
    below the refined ceiling 2^(L-1) - (L-2), which many fields attain
    exactly (attainment is noted, not an error)."""
    name = "lc_bounds"
    field = family.field
    deg = field.degree
    half = field.order // 2
    lo = half // 2
    scoped = [m for m in family.members if half > 2 and least_period(m.bits) == half]
    if not scoped:
        return _confirmed(name, field, "vacuous: no members with least period 2^(L-1) > 2")
    ss = self_shrinking_index(field).s
    notes = [f"checked {len(scoped)} full-period members"]
    ss_seen = False
    for member in scoped:
        lc = linear_complexity(member.bits, half)
        if not lo < lc < half:
            return _refuted(name, field, f"index={member.index.label} lc={lc} outside ({lo},{half})")
        if member.index.s == ss:
            ss_seen = True
            upper = half - (deg - 2)
            if lc > upper:
                return _refuted(name, field, f"self-shrinking lc={lc} above ceiling {upper}")
            classic = 1 << (deg // 2 - 1)
            hit = " (ceiling attained)" if lc == upper else ""
            notes.append(
                f"self-shrinking lc={lc} <= {upper}{hit}, classic lower bound {classic} slack {lc - classic}"
            )
    if not ss_seen:
        notes.append("self-shrinking member outside full-period scope")
    return _confirmed(name, field, *notes)


def _even_runs(dist) -> bool:
    return all(l % 2 == 0 for l in dist.blocks) and all(l % 2 == 0 for l in dist.gaps)


def _short_runs(dist) -> bool:
    return set(dist.blocks) | set(dist.gaps) <= {1, 2}


def verify_run_structure(family: GssFamily, exps: SpecialExponents | None = None) -> VerdictReport:
    """The member at shift q+1 has only even cyclic run lengths, the member
    at shift q only runs of length 1 or 2, and their complement partners
    inherit the run-length histograms with blocks and gaps swapped."""
    name = "run_structure"
    field = family.field
    exps = exps or find_special_exponents(field)
    n = field.period
    q = exps.q
    q1 = (q + 1) % n
    notes = [f"q={q}"]
    if field.alpha_power(q) + field.alpha_power(q + 1) != field.alpha_power(exps.p):
        return _refuted(name, field, f"alpha^{q} + alpha^{q + 1} != alpha^{exps.p}")
    top = field.degree - 1
    c = field.alpha_power(q).mask >> top & 1
    c_next = field.alpha_power(q + 1).mask >> top & 1
    if c == c_next:
        return _refuted(name, field, f"top coordinates of alpha^{q} and alpha^{q + 1} both {c}")
    even_dist = run_distribution(family.member_at_shift(q1).bits)
    if even_dist.no_runs:
        notes.append(f"shift q+1={q1} member is constant {even_dist.constant} (trivially even)")
    elif not _even_runs(even_dist):
        return _refuted(name, field, f"shift q+1={q1} member has an odd run length")
    short_dist = run_distribution(family.member_at_shift(q).bits)
    if short_dist.no_runs or not _short_runs(short_dist):
        return _refuted(name, field, f"shift q={q} member has a run longer than 2")
    for label, s, dist in (("q", q, short_dist), ("q+1", q1, even_dist)):
        if s == 0:
            notes.append(f"shift {label}={s} member has no complement partner (skipped)")
            continue
        partner = complement_partner(field, GssIndex.shift(s))
        pdist = run_distribution(family.member_at_shift(partner.s).bits)
        if dist.no_runs or pdist.no_runs:
            notes.append(f"shift {label}={s} complement check degenerate (constant member)")
            continue
        if pdist.blocks != dist.gaps or pdist.gaps != dist.blocks:
            return _refuted(
                name, field, f"complement of shift {label}={s} does not mirror its run histogram"
            )
    return _confirmed(name, field, *notes)


@dataclass(frozen=True)
class VerifyContext:
    """Shared immutable inputs for a verification run over one field."""

    field: Field
    seq: MSequence
    family: GssFamily
    exps: SpecialExponents

    @classmethod
    def build(cls, field: Field) -> "VerifyContext":
        seq = generate_msequence(field)
        return cls(field, seq, gss_family(seq), find_special_exponents(field))


VERIFIERS: dict[str, Callable[[VerifyContext], VerdictReport]] = {
    "periods": lambda ctx: verify_period_classification(ctx.family, ctx.exps),
    "alternating": lambda ctx: verify_alternating_members(ctx.family, ctx.exps),
    "parity_balance": lambda ctx: verify_parity_balance(ctx.family),
    "sliding_complement": lambda ctx: verify_sliding_complement_all(ctx.seq),
    "excluded_periods": lambda ctx: verify_excluded_periods(ctx.family),
    "group_balance": lambda ctx: verify_group_and_balance(ctx.family),
    "self_shrinking": lambda ctx: verify_self_shrinking(ctx.field, ctx.family),
    "lc_bounds": lambda ctx: verify_lc_bounds(ctx.family, ctx.exps),
    "run_structure": lambda ctx: verify_run_structure(ctx.family, ctx.exps),
}

VERIFIER_ORDER = tuple(VERIFIERS)


def verify_all(field: Field) -> list[VerdictReport]:
    """Run every registered verifier, in registry order, over one shared context."""
    ctx = VerifyContext.build(field)
    return [VERIFIERS[name](ctx) for name in VERIFIER_ORDER]


def format_verdicts(reports, fmt: str = "table") -> str:
    """Scorecard rendering: one line per verdict, or CSV / structured text."""
    if fmt == "table":
        return "\n".join(r.line() for r in reports) + "\n"
    if fmt == "csv":
        import csv as _csv
        import io as _io

        buf = _io.StringIO()
        writer = _csv.writer(buf, lineterminator="\n")
        writer.writerow(("name", "status", "scope", "witness", "notes"))
        for r in reports:
            writer.writerow((r.name, r.status, r.scope, r.witness or "", "; ".join(r.notes)))
        return buf.getvalue()
    if fmt == "stext":
        chunks = []
        for r in reports:
            chunks.append(
                "\n".join(
                    (
                        f"name: {r.name}",
                        f"status: {r.status}",
                        f"scope: {r.scope}",
                        f"witness: {r.witness or '-'}",
                        f"notes: {'; '.join(r.notes) or '-'}",
                    )
                )
            )
        return "\n\n".join(chunks) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
