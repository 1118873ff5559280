"""Floats back to decimal: exact numerals, outward truncation, brackets.

Every finite binary float has a terminating decimal expansion, so output
starts from the exact numeral and only then rounds, always outward, never
losing containment. Interval text factors the digits both bounds share:
0.3333333[13465118408203125,432674407958984375] is an interval whose
bounds agree to seven digits, and [0.9,1] is one whose bounds share no
usable prefix.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digitstring import (
    FRACTION,
    INTEGER,
    DigitString,
    _fraction_digits,
    _fraction_int,
    _pow5,
    _pow10,
    _strip_tens,
)
from .floatkit import (
    BINARY32,
    KIND_INFINITE,
    KIND_NORMAL,
    DomainError,
    FloatFormat,
    FloatInterval,
    FloatValue,
    decompose,
)
from .parse import DECIMAL_ZERO, DecimalScientific


@dataclass(frozen=True, slots=True)
class DecimalInfinity:
    """Marker for an interval endpoint beyond the finite range."""

    sign: int

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")


@dataclass(frozen=True, slots=True)
class BracketRendering:
    """Interval text split into a shared prefix and per-bound tails.

    fallback is None when the prefix form applies; otherwise it holds the
    complete plain rendering and the other fields are empty. Either way
    text() gives the final string, and prefix + tail reproduces each
    bound's numeral exactly.
    """

    prefix: str
    low_tail: str
    high_tail: str
    fallback: str | None = None

    def text(self) -> str:
        if self.fallback is not None:
            return self.fallback
        return f"{self.prefix}[{self.low_tail},{self.high_tail}]"


def decimalize_integer(m: int) -> DigitString:
    """Decimal digits of a nonnegative machine integer; zero is empty."""
    if m < 0:
        raise ValueError("negative integers have no digit string")
    return DigitString.integer(str(m) if m else "")


def integer_to_fraction_exponent(m: DigitString) -> int:
    """Reread the integer d1..dk as the fraction 0.d1..dk * 10^k: the
    exponent is just k."""
    if m.role != INTEGER:
        raise ValueError("expected an integer digit string")
    return len(m.digits)


def decimalize_exponent(m: DigitString, bin_exp: int, dec_exp: int) -> tuple[DigitString, int]:
    """Fold the binary exponent into the decimal one, exactly.

    Returns (m', dec_exp') with 2^bin_exp * 10^dec_exp * 0.m equal to
    10^dec_exp' * 0.m'. Positive powers of two multiply into the digits
    and every carry past the point raises the decimal exponent; negative
    powers append factors of five and every leading zero produced lowers
    it on the way out. Both directions collapse to one big multiply.
    """
    if m.role != FRACTION:
        raise ValueError("expected a fraction digit string")
    if m.digits and m.digits[0] == 0:
        raise ValueError("mantissa must not start with 0")
    N, n = _fraction_int(m)
    if N == 0 or bin_exp == 0:
        return m, dec_exp
    if bin_exp > 0:
        W = N << bin_exp
        width = len(str(W))
        dec_exp += width - n
    else:
        W = N * _pow5(-bin_exp)
        width = len(str(W))
        dec_exp -= (n - bin_exp) - width
    N2, n2 = _strip_tens(W, width)
    return _fraction_digits(N2, n2), dec_exp


def float_to_exact_decimal(f: FloatValue, fmt: FloatFormat) -> DecimalScientific:
    """The terminating decimal expansion of a finite float, normalized.

    No digit budget applies: the smallest binary64 subnormals take around
    750 significant digits and all of them are produced.
    """
    if f.kind == KIND_INFINITE:
        raise DomainError("no exact decimal for an infinity")
    m, e = decompose(f, fmt)
    if m == 0:
        return DECIMAL_ZERO
    whole = decimalize_integer(m)
    dec_exp = integer_to_fraction_exponent(whole)
    mantissa = DigitString.fraction(whole.digits)
    mantissa, dec_exp = decimalize_exponent(mantissa, e, dec_exp)
    return DecimalScientific(f.sign, mantissa, dec_exp)


def truncate_directed(d: DecimalScientific, n: int, direction: str) -> DecimalScientific:
    """Round to at most n mantissa digits toward the named direction.

    "down" moves toward -infinity and "up" toward +infinity, so a negative
    numeral drops digits on "up" and rounds them on "down". Rounding a run
    of nines carries into a fresh leading 1 and lifts the exponent: 0.999
    rounded up at one digit is 0.1 * 10^1. Numerals already short enough
    pass through untouched.
    """
    if direction not in ("down", "up"):
        raise ValueError(f"unknown direction {direction!r}")
    if n < 1:
        raise ValueError("need at least one digit")
    digits = d.mantissa.digits
    if len(digits) <= n:
        return d
    away_from_zero = (direction == "up") == (d.sign > 0)
    head = digits[:n]
    if not away_from_zero:
        # canonical strings have no trailing zeros, so the dropped tail is
        # nonzero and plain truncation is strictly below the value
        return DecimalScientific(d.sign, DigitString.fraction(head), d.exponent)
    grown = int(bytes(x + 48 for x in head)) + 1
    if grown == _pow10(n):
        return DecimalScientific(d.sign, DigitString.fraction("1"), d.exponent + 1)
    return DecimalScientific(d.sign, DigitString.fraction(str(grown)), d.exponent)


def interval_to_decimal(
    interval: FloatInterval, n: int, fmt: FloatFormat
) -> tuple[DecimalScientific | DecimalInfinity, DecimalScientific | DecimalInfinity]:
    """Decimal interval enclosing the float interval, at most n digits per
    bound: the lower bound truncates downward, the upper upward. Infinite
    endpoints pass through as infinity markers."""
    if interval.lb.kind == KIND_INFINITE:
        lo: DecimalScientific | DecimalInfinity = DecimalInfinity(interval.lb.sign)
    else:
        lo = truncate_directed(float_to_exact_decimal(interval.lb, fmt), n, "down")
    if interval.ub.kind == KIND_INFINITE:
        hi: DecimalScientific | DecimalInfinity = DecimalInfinity(interval.ub.sign)
    else:
        hi = truncate_directed(float_to_exact_decimal(interval.ub, fmt), n, "up")
    return lo, hi


def plain_decimal(d: DecimalScientific | DecimalInfinity) -> str:
    """Positional text with no exponent marker: 0.05, 12.5, 12500, 0."""
    if isinstance(d, DecimalInfinity):
        return "inf" if d.sign > 0 else "-inf"
    digits = d.mantissa.as_text()
    if not digits:
        return "0"
    sign = "" if d.sign > 0 else "-"
    e = d.exponent
    if e <= 0:
        return f"{sign}0.{'0' * -e}{digits}"
    if e >= len(digits):
        return f"{sign}{digits}{'0' * (e - len(digits))}"
    return f"{sign}{digits[:e]}.{digits[e:]}"


def _compare_decimals(a: DecimalScientific, b: DecimalScientific) -> int:
    """Exact three-way value comparison of normalized decimals."""
    sa = 0 if a.is_zero else a.sign
    sb = 0 if b.is_zero else b.sign
    if sa != sb:
        return -1 if sa < sb else 1
    if sa == 0:
        return 0
    if a.exponent != b.exponent:
        return sa * (-1 if a.exponent < b.exponent else 1)
    da, db = a.mantissa.as_text(), b.mantissa.as_text()
    if da == db:
        return 0
    pad = max(len(da), len(db))
    return sa * (-1 if da.ljust(pad, "0") < db.ljust(pad, "0") else 1)


def bracket_notation(lo: DecimalScientific, hi: DecimalScientific) -> BracketRendering:
    """Shared-prefix rendering of a decimal interval.

    When the bounds agree in sign, exponent, and opening digit, the common
    positional prefix is factored out and only the differing tails sit in
    the brackets; equal bounds leave the brackets empty. Any disagreement
    falls back to the plain [lo,hi] pair.
    """
    if _compare_decimals(lo, hi) > 0:
        raise ValueError("bounds out of order")
    lo_text = plain_decimal(lo)
    hi_text = plain_decimal(hi)
    if lo_text == hi_text:
        return BracketRendering(lo_text, "", "")
    sharable = (
        lo.mantissa.digits
        and hi.mantissa.digits
        and lo.sign == hi.sign
        and lo.exponent == hi.exponent
        and lo.mantissa.digits[0] == hi.mantissa.digits[0]
    )
    if not sharable:
        return BracketRendering("", "", "", f"[{lo_text},{hi_text}]")
    k = 0
    limit = min(len(lo_text), len(hi_text))
    while k < limit and lo_text[k] == hi_text[k]:
        k += 1
    return BracketRendering(lo_text[:k], lo_text[k:], hi_text[k:])


def hex_significand_rendering(f: FloatValue, fmt: FloatFormat = BINARY32) -> str:
    """Power-of-two exponent with the trailing significand bits in base 16.

    The 23 trailing bits of a binary32 group as one octal digit followed
    by five hex digits, as in 2^(-2) * 1.2aaaab; the 52 trailing bits of a
    binary64 are exactly thirteen hex digits. Normal values only.
    """
    if f.kind != KIND_NORMAL:
        raise ValueError("hex significand rendering covers normal values only")
    m, e = decompose(f, fmt)
    trailing = m - (1 << (fmt.significand_bits - 1))
    unbiased = e + fmt.significand_bits - 1
    body = _trailing_hex(trailing, fmt)
    sign = "" if f.sign > 0 else "-"
    return f"{sign}2^({unbiased}) * 1.{body}"


def _trailing_hex(trailing: int, fmt: FloatFormat) -> str:
    if fmt.significand_bits == 24:
        return f"{trailing >> 20:o}{trailing & 0xFFFFF:05x}"
    if fmt.significand_bits == 53:
        return f"{trailing:013x}"
    raise ValueError("no digit grouping defined for this format")


def hex_significand_bracket(interval: FloatInterval, fmt: FloatFormat = BINARY32) -> str:
    """Bracket form of an interval's hex significands.

    The shared prefix factors out only when both bounds carry the same
    power of two: 2^(-2) * 1.2aaaa[a,b]. A degenerate interval shows empty
    brackets and bounds in different binades fall back to the plain pair.
    """
    lo = hex_significand_rendering(interval.lb, fmt)
    if interval.degenerate:
        return f"{lo}[,]"
    hi = hex_significand_rendering(interval.ub, fmt)
    if lo.rsplit(".", 1)[0] != hi.rsplit(".", 1)[0]:
        return f"[{lo},{hi}]"
    k = 0
    limit = min(len(lo), len(hi))
    while k < limit and lo[k] == hi[k]:
        k += 1
    return f"{lo[:k]}[{lo[k:]},{hi[k:]}]"
