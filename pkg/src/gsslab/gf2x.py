"""Arithmetic in GF(2^L) defined by a primitive polynomial.

Binary polynomials and field elements are both carried as plain Python ints:

* polynomial masks: bit i is the coefficient of x^i, so x^5 + x^2 + 1 is 0x25;
* element masks: bit i is the coordinate of alpha^i on the basis
  (1, alpha, ..., alpha^(L-1)), alpha being a root of the defining polynomial.

Addition is xor. Multiplication is a carry-less product reduced modulo the
defining polynomial. Discrete logarithms come from a full power table built
once per field, which keeps every later lookup O(1) at desk scale (L <= 24
by default).
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from functools import cached_property

from .errors import (
    DegreeOutOfRange,
    FieldMismatch,
    NotIrreducible,
    NotPrimitive,
    PolynomialParseError,
    ZeroInverse,
    ZeroLog,
)

DEFAULT_MAX_DEGREE = 24

_X = 0b10  # the polynomial x


def poly_degree(mask: int) -> int:
    """Degree of a polynomial mask (-1 for the zero polynomial)."""
    return mask.bit_length() - 1


def parse_polynomial(text: str) -> int:
    """Parse symbolic ("x^5+x^2+1") or hex ("0x25") polynomial text into a mask.

    Both forms round-trip through poly_terms() / poly_hex().
    """
    s = text.strip().replace(" ", "")
    if not s:
        raise PolynomialParseError("empty polynomial")
    if s[:2].lower() == "0x":
        try:
            mask = int(s, 16)
        except ValueError:
            raise PolynomialParseError(f"bad hex polynomial {text!r}") from None
        if mask <= 0:
            raise PolynomialParseError(f"polynomial mask must be positive, got {text!r}")
        return mask
    mask = 0
    for term in s.lower().split("+"):
        if term == "1":
            exp = 0
        elif term == "x":
            exp = 1
        elif term.startswith("x^"):
            try:
                exp = int(term[2:])
            except ValueError:
                raise PolynomialParseError(f"bad exponent in term {term!r} of {text!r}") from None
            if exp < 0:
                raise PolynomialParseError(f"negative exponent in term {term!r} of {text!r}")
        else:
            raise PolynomialParseError(f"bad term {term!r} in {text!r}")
        if mask >> exp & 1:
            raise PolynomialParseError(f"duplicate term {term!r} in {text!r}")
        mask |= 1 << exp
    return mask


def poly_terms(mask: int) -> str:
    """Symbolic form of a polynomial mask, highest exponent first."""
    if mask == 0:
        return "0"
    parts = []
    for exp in range(mask.bit_length() - 1, -1, -1):
        if mask >> exp & 1:
            parts.append("1" if exp == 0 else "x" if exp == 1 else f"x^{exp}")
    return "+".join(parts)


def poly_hex(mask: int) -> str:
    """Hex form of a polynomial mask (bit i = coefficient of x^i)."""
    return format(mask, "#x")


def _polymod(a: int, m: int) -> int:
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def _clmul(a: int, b: int) -> int:
    acc = 0
    while a:
        if a & 1:
            acc ^= b
        a >>= 1
        b <<= 1
    return acc


def _mulmod(a: int, b: int, m: int) -> int:
    return _polymod(_clmul(a, b), m)


def _powmod(base: int, e: int, m: int) -> int:
    r = 1
    base = _polymod(base, m)
    while e:
        if e & 1:
            r = _mulmod(r, base, m)
        base = _mulmod(base, base, m)
        e >>= 1
    return r


def _polygcd(a: int, b: int) -> int:
    while b:
        a, b = b, _polymod(a, b)
    return a


def _pow2k(a: int, k: int, m: int) -> int:
    # a^(2^k) mod m by k squarings
    for _ in range(k):
        a = _mulmod(a, a, m)
    return a


def _prime_factors(n: int) -> tuple[int, ...]:
    """Distinct prime divisors of n, ascending, by trial division."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return tuple(out)


def is_irreducible(mask: int) -> bool:
    """Whether the polynomial mask is irreducible over GF(2) (Rabin's test)."""
    deg = poly_degree(mask)
    if deg < 1:
        return False
    if deg == 1:
        return True
    if not mask & 1:
        return False  # divisible by x
    for r in _prime_factors(deg):
        h = _pow2k(_X, deg // r, mask)
        if _polygcd(h ^ _X, mask) != 1:
            return False
    return _pow2k(_X, deg, mask) == _X


def validate_primitive(poly: int | str, max_degree: int = DEFAULT_MAX_DEGREE) -> "Field":
    """Validate a defining polynomial and return its field.

    The polynomial must be irreducible of degree 2..max_degree with nonzero
    constant term, and x must have multiplicative order exactly 2^L - 1
    modulo it: x^(2^L - 1) = 1 while x^((2^L - 1)/r) != 1 for every prime
    divisor r of 2^L - 1 (factored by trial division).

    Raises:
        PolynomialParseError: unparseable text.
        DegreeOutOfRange: degree outside 2..max_degree.
        NotIrreducible: the polynomial factors.
        NotPrimitive: x generates a proper subgroup.
    """
    mask = parse_polynomial(poly) if isinstance(poly, str) else int(poly)
    if mask <= 0:
        raise PolynomialParseError(f"polynomial mask must be positive, got {poly!r}")
    deg = poly_degree(mask)
    if not 2 <= deg <= max_degree:
        raise DegreeOutOfRange(f"degree {deg} outside supported range 2..{max_degree}")
    if not mask & 1:
        raise NotIrreducible(f"{poly_terms(mask)} has zero constant term (divisible by x)")
    if not is_irreducible(mask):
        raise NotIrreducible(f"{poly_terms(mask)} factors over GF(2)")
    n = (1 << deg) - 1
    if _powmod(_X, n, mask) != 1:
        raise NotPrimitive(f"x^{n} != 1 modulo {poly_terms(mask)}")
    for r in _prime_factors(n):
        if _powmod(_X, n // r, mask) == 1:
            raise NotPrimitive(
                f"x has order dividing {n // r} < {n} modulo {poly_terms(mask)}"
            )
    return Field(mask)


def primitive_polynomials(degree: int, max_degree: int = DEFAULT_MAX_DEGREE) -> tuple[int, ...]:
    """All primitive polynomial masks of the given degree, ascending."""
    if not 2 <= degree <= max_degree:
        raise DegreeOutOfRange(f"degree {degree} outside supported range 2..{max_degree}")
    n = (1 << degree) - 1
    primes = _prime_factors(n)
    found = []
    for middle in range(1 << (degree - 1)):
        mask = (1 << degree) | (middle << 1) | 1
        if not is_irreducible(mask):
            continue
        # irreducible, so ord(x) divides 2^L - 1; primitive iff no proper divisor works
        if any(_powmod(_X, n // r, mask) == 1 for r in primes):
            continue
        found.append(mask)
    return tuple(found)


class Field:
    """GF(2^L) presented on the basis (1, alpha, ..., alpha^(L-1)).

    Construct through validate_primitive(); the constructor itself trusts its
    argument. Instances are immutable and safe to share across threads; the
    power/log tables are built lazily, once.
    """

    def __init__(self, modulus: int):
        self._modulus = modulus
        self._degree = poly_degree(modulus)

    @property
    def modulus(self) -> int:
        return self._modulus

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def order(self) -> int:
        """Number of field elements, 2^L."""
        return 1 << self._degree

    @property
    def period(self) -> int:
        """Order of the multiplicative group, 2^L - 1."""
        return (1 << self._degree) - 1

    @property
    def coefficients(self) -> tuple[int, ...]:
        """(p_0, ..., p_L) of the defining polynomial."""
        return tuple(self._modulus >> i & 1 for i in range(self._degree + 1))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Field) and other._modulus == self._modulus

    def __hash__(self) -> int:
        return hash(("Field", self._modulus))

    def __repr__(self) -> str:
        return f"Field({poly_terms(self._modulus)})"

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def alpha(self) -> "FieldElement":
        return FieldElement(self, _X)

    def element(self, mask: int) -> "FieldElement":
        if not 0 <= mask < self.order:
            raise ValueError(f"mask {mask:#x} outside field of order {self.order}")
        return FieldElement(self, mask)

    def from_coords(self, coords) -> "FieldElement":
        coords = tuple(coords)
        if len(coords) != self._degree:
            raise ValueError(f"expected {self._degree} coordinates, got {len(coords)}")
        mask = 0
        for i, c in enumerate(coords):
            if c not in (0, 1):
                raise ValueError(f"coordinate {c!r} is not a bit")
            mask |= c << i
        return FieldElement(self, mask)

    def mul_masks(self, a: int, b: int) -> int:
        """Carry-less product of two element masks, reduced; table-free."""
        return _polymod(_clmul(a, b), self._modulus)

    @cached_property
    def _tables(self) -> tuple[array, array]:
        n = self.period
        exp = array("I", bytes(4 * n))
        log = array("I", bytes(4 * self.order))
        top = 1 << self._degree
        v = 1
        for i in range(n):
            exp[i] = v
            log[v] = i
            v <<= 1
            if v & top:
                v ^= self._modulus
        if v != 1:
            raise NotPrimitive(f"power walk of {poly_terms(self._modulus)} does not close")
        return exp, log

    def alpha_power(self, n: int) -> "FieldElement":
        """alpha^n with n reduced mod 2^L - 1."""
        exp, _ = self._tables
        return FieldElement(self, exp[n % self.period])

    def dlog_mask(self, mask: int) -> int:
        if mask == 0:
            raise ZeroLog("zero has no discrete logarithm")
        if not mask < self.order:
            raise ValueError(f"mask {mask:#x} outside field of order {self.order}")
        _, log = self._tables
        return log[mask]

    def dlog(self, e: "FieldElement") -> int:
        """The unique n in 0 .. 2^L - 2 with alpha^n = e."""
        if e.field != self:
            raise FieldMismatch(f"element of {e.field!r} passed to {self!r}")
        return self.dlog_mask(e.mask)


@dataclass(frozen=True)
class FieldElement:
    """An element of GF(2^L); mask bit i is the coordinate of alpha^i."""

    field: Field
    mask: int

    @property
    def coords(self) -> tuple[int, ...]:
        return tuple(self.mask >> i & 1 for i in range(self.field.degree))

    @property
    def is_zero(self) -> bool:
        return self.mask == 0

    def __bool__(self) -> bool:
        return self.mask != 0

    def _same_field(self, other: "FieldElement") -> None:
        if other.field != self.field:
            raise FieldMismatch(f"{other.field!r} element combined with {self.field!r} element")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        if not isinstance(other, FieldElement):
            return NotImplemented
        self._same_field(other)
        return FieldElement(self.field, self.mask ^ other.mask)

    __sub__ = __add__  # characteristic 2

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        if not isinstance(other, FieldElement):
            return NotImplemented
        self._same_field(other)
        return FieldElement(self.field, self.field.mul_masks(self.mask, other.mask))

    def __pow__(self, n: int) -> "FieldElement":
        if n < 0:
            return self.inverse() ** (-n)
        r = 1
        base = self.mask
        mul = self.field.mul_masks
        while n:
            if n & 1:
                r = mul(r, base)
            base = mul(base, base)
            n >>= 1
        return FieldElement(self.field, r)

    def inverse(self) -> "FieldElement":
        """The element b with self * b = 1."""
        if self.mask == 0:
            raise ZeroInverse("zero has no multiplicative inverse")
        n = self.field.period
        return self.field.alpha_power((n - self.field.dlog_mask(self.mask)) % n)

    def __repr__(self) -> str:
        return f"FieldElement({self.mask:#x} in GF(2^{self.field.degree}))"
