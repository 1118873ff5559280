"""Floating-point values as exact integer pairs.

A format is the triple (significand bits, minimum exponent, maximum
exponent); a datum is sign * m * 2^e with m and e plain Python integers.
Every operation here is exact integer arithmetic and nothing depends on
the host float type. Adapters to interchange bit patterns live at the
edge and double as an independent cross check in the tests.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

KIND_ZERO = "zero"
KIND_SUBNORMAL = "subnormal"
KIND_NORMAL = "normal"
KIND_INFINITE = "infinity"

_KINDS = (KIND_ZERO, KIND_SUBNORMAL, KIND_NORMAL, KIND_INFINITE)


class DomainError(ValueError):
    """Input outside an operation's domain (NaN patterns, zero denominators)."""


class NotRepresentable(DomainError):
    """An exact value the requested format cannot hold."""


@dataclass(frozen=True, slots=True)
class FloatFormat:
    """Binary format parameters: p significand bits, exponents in [emin, emax]."""

    significand_bits: int
    emin: int
    emax: int

    def __post_init__(self) -> None:
        if self.significand_bits < 2:
            raise ValueError("need at least two significand bits")
        if self.emin >= 0 or self.emax <= 0:
            raise ValueError(f"unusable exponent range [{self.emin}, {self.emax}]")

    @property
    def least_exponent(self) -> int:
        """Scaled exponent shared by all subnormals, emin - (p - 1)."""
        return self.emin - self.significand_bits + 1

    @property
    def exponent_field_bits(self) -> int:
        return (self.emax + 1).bit_length()

    @property
    def bit_width(self) -> int:
        # sign + exponent field + trailing significand field
        return 1 + self.exponent_field_bits + self.significand_bits - 1

    @property
    def smallest_subnormal(self) -> "FloatValue":
        return FloatValue(KIND_SUBNORMAL, 1, 1, self.least_exponent)

    @property
    def max_finite(self) -> "FloatValue":
        p = self.significand_bits
        return FloatValue(KIND_NORMAL, 1, (1 << p) - 1, self.emax - p + 1)

    @property
    def one(self) -> "FloatValue":
        p = self.significand_bits
        return FloatValue(KIND_NORMAL, 1, 1 << (p - 1), 1 - p)


BINARY32 = FloatFormat(24, -126, 127)
BINARY64 = FloatFormat(53, -1022, 1023)


@functools.total_ordering
@dataclass(frozen=True, eq=False, slots=True)
class FloatValue:
    """One floating-point datum: kind, sign, and magnitude m * 2^e.

    Normal values keep 2^(p-1) <= m < 2^p, subnormals share the format's
    least exponent, zero is stored unsigned as (m, e) = (0, 0), and an
    infinity carries no significand at all. Comparison and equality follow
    the represented value, so the same number in two formats compares
    equal even though its canonical pair differs.
    """

    kind: str
    sign: int
    significand: int
    exponent: int

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")
        if self.kind == KIND_ZERO:
            if (self.sign, self.significand, self.exponent) != (1, 0, 0):
                raise ValueError("zero is stored unsigned as m=0, e=0")
        elif self.kind == KIND_INFINITE:
            if (self.significand, self.exponent) != (0, 0):
                raise ValueError("infinity carries no significand")
        elif self.significand <= 0:
            raise ValueError("finite nonzero value needs a positive significand")

    @property
    def is_finite(self) -> bool:
        return self.kind != KIND_INFINITE

    @property
    def is_zero(self) -> bool:
        return self.kind == KIND_ZERO

    def _reduced(self) -> tuple[int, int]:
        # unique value key for finite data: shift the significand odd
        m = self.significand
        if m == 0:
            return 0, 0
        shift = (m & -m).bit_length() - 1
        return m >> shift, self.exponent + shift

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FloatValue):
            return NotImplemented
        if self.kind == KIND_INFINITE or other.kind == KIND_INFINITE:
            return self.kind == other.kind and self.sign == other.sign
        return self.sign == other.sign and self._reduced() == other._reduced()

    def __hash__(self) -> int:
        if self.kind == KIND_INFINITE:
            return hash((KIND_INFINITE, self.sign))
        return hash((self.sign, self._reduced()))

    def __lt__(self, other: "FloatValue") -> bool:
        if not isinstance(other, FloatValue):
            return NotImplemented
        if self == other:
            return False
        if self.kind == KIND_INFINITE:
            return self.sign < 0
        if other.kind == KIND_INFINITE:
            return other.sign > 0
        if self.sign != other.sign:
            return self.sign < other.sign
        if self.sign > 0:
            return _magnitude_lt(self, other)
        return _magnitude_lt(other, self)

    def __neg__(self) -> "FloatValue":
        if self.kind == KIND_ZERO:
            return self
        return FloatValue(self.kind, -self.sign, self.significand, self.exponent)

    def __repr__(self) -> str:
        if self.kind == KIND_ZERO:
            return "FloatValue(zero)"
        if self.kind == KIND_INFINITE:
            return f"FloatValue({'+' if self.sign > 0 else '-'}inf)"
        body = f"{self.significand}*2^{self.exponent}"
        return f"FloatValue({self.kind} {'' if self.sign > 0 else '-'}{body})"


def _magnitude_lt(a: FloatValue, b: FloatValue) -> bool:
    ma, ea = a.significand, a.exponent
    mb, eb = b.significand, b.exponent
    if ea >= eb:
        return (ma << (ea - eb)) < mb
    return ma < (mb << (eb - ea))


ZERO = FloatValue(KIND_ZERO, 1, 0, 0)


def infinity(sign: int) -> FloatValue:
    return FloatValue(KIND_INFINITE, sign, 0, 0)


def exact_float(sign: int, m: int, e: int, fmt: FloatFormat) -> FloatValue:
    """Canonical format value equal to sign * m * 2^e.

    Raises NotRepresentable when the value does not land on the format's
    grid, either through excess significand bits or an exponent outside
    the finite range.
    """
    if m == 0:
        return ZERO
    if m < 0:
        raise ValueError("significand must be nonnegative; use the sign")
    p = fmt.significand_bits
    least = fmt.least_exponent
    while m >= (1 << p) or e < least:
        if m & 1:
            raise NotRepresentable(f"{sign * m}*2^{e} has no exact place in the format")
        m >>= 1
        e += 1
    while m < (1 << (p - 1)) and e > least:
        m <<= 1
        e -= 1
    if e > fmt.emax - p + 1:
        raise NotRepresentable(f"{sign * m}*2^{e} exceeds the finite range")
    kind = KIND_NORMAL if m >= (1 << (p - 1)) else KIND_SUBNORMAL
    return FloatValue(kind, sign, m, e)


def decompose(f: FloatValue, fmt: FloatFormat) -> tuple[int, int]:
    """The canonical pair (m, e) of a finite value in this format.

    Zero decomposes to (0, 0); an infinity has no pair. A value whose pair
    is not canonical for fmt (for instance one built for a wider format)
    is rejected rather than silently re-rounded.
    """
    if f.kind == KIND_INFINITE:
        raise ValueError("cannot decompose an infinity")
    if f.kind == KIND_ZERO:
        return 0, 0
    p = fmt.significand_bits
    m, e = f.significand, f.exponent
    if f.kind == KIND_NORMAL:
        ok = (1 << (p - 1)) <= m < (1 << p) and fmt.least_exponent <= e <= fmt.emax - p + 1
    else:
        ok = 0 < m < (1 << (p - 1)) and e == fmt.least_exponent
    if not ok:
        raise ValueError(f"{f!r} is not canonical for this format")
    return m, e


def next_up(x: FloatValue, fmt: FloatFormat) -> FloatValue:
    """Least format value greater than x.

    The top finite value steps to +infinity and zero to the smallest
    subnormal; x itself must be finite.
    """
    if x.kind == KIND_INFINITE:
        raise ValueError("next_up needs a finite value")
    p = fmt.significand_bits
    if x.kind == KIND_ZERO:
        return fmt.smallest_subnormal
    m, e = decompose(x, fmt)
    if x.sign > 0:
        m += 1
        if m == 1 << p:
            m >>= 1
            e += 1
            if e > fmt.emax - p + 1:
                return infinity(1)
        kind = KIND_NORMAL if m >= 1 << (p - 1) else KIND_SUBNORMAL
        return FloatValue(kind, 1, m, e)
    # negative: one step toward zero, borrowing a bit when m leaves the
    # normal range while the exponent still has room
    m -= 1
    if m == 0:
        return ZERO
    if m < 1 << (p - 1) and e > fmt.least_exponent:
        m = (m << 1) | 1
        e -= 1
    kind = KIND_NORMAL if m >= 1 << (p - 1) else KIND_SUBNORMAL
    return FloatValue(kind, -1, m, e)


def machine_epsilon(fmt: FloatFormat) -> FloatValue:
    """Gap between 1 and its upward neighbour, 2^(1-p), as a format value."""
    p = fmt.significand_bits
    return FloatValue(KIND_NORMAL, 1, 1 << (p - 1), 2 - 2 * p)


def to_bits(x: FloatValue, fmt: FloatFormat) -> int:
    """Interchange encoding as an unsigned integer; zero encodes as +0."""
    w = fmt.exponent_field_bits
    t = fmt.significand_bits - 1
    if x.kind == KIND_ZERO:
        return 0
    sign_bit = 0 if x.sign > 0 else 1
    if x.kind == KIND_INFINITE:
        return (sign_bit << (w + t)) | (((1 << w) - 1) << t)
    m, e = decompose(x, fmt)
    if x.kind == KIND_SUBNORMAL:
        field, trailing = 0, m
    else:
        field = e + fmt.significand_bits - 1 + fmt.emax
        trailing = m - (1 << t)
    return (sign_bit << (w + t)) | (field << t) | trailing


def from_bits(pattern: int, fmt: FloatFormat) -> FloatValue:
    """Decode an interchange pattern; NaN patterns are a domain error and
    the negative zero pattern folds onto the unsigned zero."""
    w = fmt.exponent_field_bits
    t = fmt.significand_bits - 1
    if not 0 <= pattern < 1 << fmt.bit_width:
        raise ValueError(f"pattern out of range for a {fmt.bit_width}-bit format")
    sign = -1 if pattern >> (w + t) else 1
    field = (pattern >> t) & ((1 << w) - 1)
    trailing = pattern & ((1 << t) - 1)
    if field == (1 << w) - 1:
        if trailing:
            raise DomainError("NaN patterns have no value")
        return infinity(sign)
    if field == 0:
        if trailing == 0:
            return ZERO
        return FloatValue(KIND_SUBNORMAL, sign, trailing, fmt.least_exponent)
    m = (1 << t) | trailing
    e = field - fmt.emax - (fmt.significand_bits - 1)
    return FloatValue(KIND_NORMAL, sign, m, e)


def as_py_float(x: FloatValue) -> float:
    """The host float closest to x; exact for binary32 and binary64 data."""
    if x.kind == KIND_INFINITE:
        return math.inf if x.sign > 0 else -math.inf
    return math.ldexp(x.sign * x.significand, x.exponent)


@dataclass(frozen=True, slots=True)
class FloatInterval:
    """Closed interval between two format values, lower bound first."""

    lb: FloatValue
    ub: FloatValue

    def __post_init__(self) -> None:
        if self.ub < self.lb:
            raise ValueError(f"bounds out of order: {self.lb!r} > {self.ub!r}")

    @property
    def degenerate(self) -> bool:
        return self.lb == self.ub

    def __neg__(self) -> "FloatInterval":
        return FloatInterval(-self.ub, -self.lb)
