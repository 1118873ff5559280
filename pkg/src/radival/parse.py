"""Decimal numerals and rationals to narrowest enclosing float intervals.

The route for a numeral sign * 10^e * 0.m runs in three legs. First the
power of ten is exchanged for a power of two: doublings pay off a negative
decimal exponent (each carry past the point cancels one power of ten),
halvings pay off a positive one. Then the remaining fraction is doubled
into [1/2, 1) so its leading bit is set. Finally significand bits stream
out of the fraction, one per doubling, until the format is full; whatever
is left decides whether the enclosure is a point or one ulp wide.

Rationals p/q skip the decimal legs: scaling by powers of two puts p/q in
[1/2, 1) and the same bit streaming applies to the numerator directly.

The doubling and halving loops touch every digit once per step, so this
module runs them in bulk on the integer view of the digit string: k
doublings are one shift, k halvings one multiply by 5^k, and the loop
counts come straight from bit lengths. The tests replay the
digit-at-a-time loops against these bulk forms on random inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digitstring import (
    FRACTION,
    DigitString,
    _fraction_digits,
    _fraction_int,
    _pow5,
    _pow10,
    _strip_tens,
)
from .floatkit import (
    KIND_NORMAL,
    KIND_SUBNORMAL,
    ZERO,
    DomainError,
    FloatFormat,
    FloatInterval,
    FloatValue,
    next_up,
)


class NumeralSyntaxError(ValueError):
    """Numeral text rejected, with the offending position."""

    def __init__(self, text: str, position: int, why: str):
        super().__init__(f"{why} at position {position} in {text!r}")
        self.text = text
        self.position = position


@dataclass(frozen=True, slots=True)
class DecimalScientific:
    """Sign, fraction mantissa, and decimal exponent: sign * 10^e * 0.m.

    The mantissa opens with a nonzero digit, so every nonzero value has
    exactly one representation. Zero is the empty mantissa with exponent 0
    and positive sign.
    """

    sign: int
    mantissa: DigitString
    exponent: int

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")
        if self.mantissa.role != FRACTION:
            raise ValueError("mantissa must be a fraction digit string")
        if self.mantissa.digits:
            if self.mantissa.digits[0] == 0:
                raise ValueError("mantissa must open with a nonzero digit")
        elif (self.sign, self.exponent) != (1, 0):
            raise ValueError("zero is stored as sign +1, empty mantissa, exponent 0")

    @property
    def is_zero(self) -> bool:
        return not self.mantissa.digits


DECIMAL_ZERO = DecimalScientific(1, DigitString((), FRACTION), 0)


@dataclass(frozen=True, slots=True)
class Rational:
    """Signed ratio of nonnegative integers.

    Reduction is not required; conversion tolerates common factors."""

    sign: int
    p: int
    q: int

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")
        if self.q == 0:
            raise DomainError("zero denominator")
        if self.p < 0 or self.q < 0:
            raise ValueError("p and q must be nonnegative; use the sign")

    @classmethod
    def from_text(cls, text: str) -> "Rational":
        """Parse p/q or a bare integer, with an optional leading sign."""
        body = text.strip()
        sign = 1
        if body[:1] in ("+", "-"):
            sign = -1 if body[0] == "-" else 1
            body = body[1:]
        num, slash, den = body.partition("/")
        if not num.isascii() or not num.isdigit():
            raise NumeralSyntaxError(text, 0, "expected digits")
        if slash:
            if not den.isascii() or not den.isdigit():
                raise NumeralSyntaxError(text, len(text) - len(den), "expected digits")
            return cls(sign, int(num), int(den))
        return cls(sign, int(num), 1)


def parse_numeral(text: str) -> DecimalScientific:
    """Parse [sign] digits [. digits] [e [sign] digits] into normalized form.

    "12.5e3" becomes (+, 125, 5): the exponent counts digits that sit left
    of the point once the marker is applied. Leading zeros shift the
    exponent down as they drop; an all-zero mantissa collapses to zero.
    """
    i = 0
    n = len(text)
    sign = 1
    if i < n and text[i] in "+-":
        sign = -1 if text[i] == "-" else 1
        i += 1
    start = i
    while i < n and text[i].isascii() and text[i].isdigit():
        i += 1
    int_digits = text[start:i]
    frac_digits = ""
    if i < n and text[i] == ".":
        i += 1
        start = i
        while i < n and text[i].isascii() and text[i].isdigit():
            i += 1
        frac_digits = text[start:i]
    if not int_digits and not frac_digits:
        raise NumeralSyntaxError(text, i, "expected a digit")
    marker_exp = 0
    if i < n and text[i] in "eE":
        i += 1
        esign = 1
        if i < n and text[i] in "+-":
            esign = -1 if text[i] == "-" else 1
            i += 1
        start = i
        while i < n and text[i].isascii() and text[i].isdigit():
            i += 1
        if start == i:
            raise NumeralSyntaxError(text, i, "expected an exponent digit")
        marker_exp = esign * int(text[start:i])
    if i != n:
        raise NumeralSyntaxError(text, i, "unexpected character")
    digits = int_digits + frac_digits
    exponent = len(int_digits) + marker_exp
    lead = 0
    while lead < len(digits) and digits[lead] == "0":
        lead += 1
    digits = digits[lead:]
    exponent -= lead
    if not digits.rstrip("0"):
        return DECIMAL_ZERO
    return DecimalScientific(sign, DigitString.fraction(digits), exponent)


def _doublings_to_reach(N: int, T: int) -> int:
    """Smallest k >= 0 with N * 2^k >= T, both positive."""
    k = max(0, T.bit_length() - N.bit_length())
    if (N << k) < T:
        k += 1
    return k


def _shifted_ge(x: int, k: int, y: int) -> bool:
    # x * 2^k >= y with k of either sign
    if k >= 0:
        return (x << k) >= y
    return x >= (y << -k)


def _binarize_int(N: int, n: int, dec_exp: int) -> tuple[int, int, int]:
    """Exchange the power of ten for a power of two on the integer view.

    Returns (N', n', bin_exp) with 10^dec_exp * N/10^n == 2^bin_exp * N'/10^n'.
    A negative decimal exponent is paid off by doublings; each carry folds
    back in front of the digits and cancels one power of ten, so the job
    is done after K doublings where K first pushes N * 2^K to n + |e|
    digits. A positive exponent dualizes with halvings: each appends a
    factor 5 and drops one power of ten, finishing when the fraction falls
    under 1, which the halving count reads off directly.
    """
    if N == 0 or dec_exp == 0:
        return N, n, 0
    if dec_exp < 0:
        K = _doublings_to_reach(N, _pow10(n - dec_exp - 1))
        N2, n2 = _strip_tens(N << K, n - dec_exp)
        return N2, n2, -K
    # need the smallest K with N * 10^dec_exp < 10^n * 2^K
    A = N * _pow10(dec_exp)
    T = _pow10(n)
    K = max(1, A.bit_length() - T.bit_length())
    if _shifted_ge(A, -K, T):
        K += 1
    N2, n2 = _strip_tens(N * _pow5(K), n + K - dec_exp)
    return N2, n2, K


def _normalize_int(N: int, n: int, bin_exp: int) -> tuple[int, int, int]:
    """Double the fraction into [1/2, 1), charging the binary exponent.

    No carries can appear: the last doubling starts below 1/2."""
    K = _doublings_to_reach(N << 1, _pow10(n))
    N2, n2 = _strip_tens(N << K, n)
    return N2, n2, bin_exp - K


def binarize_exponent(m: DigitString, dec_exp: int) -> tuple[DigitString, int]:
    """Trade 10^dec_exp for a binary exponent: returns (m', bin_exp) with
    10^dec_exp * 0.m == 2^bin_exp * 0.m' exactly.

    A positive decimal exponent requires a mantissa with no leading zeros
    (or an empty one); negative exponents take any fraction string.
    """
    if m.role != FRACTION:
        raise ValueError("expected a fraction digit string")
    if dec_exp > 0 and m.digits and m.digits[0] == 0:
        raise ValueError("positive exponents need a mantissa without leading zeros")
    N, n = _fraction_int(m)
    N2, n2, bexp = _binarize_int(N, n, dec_exp)
    return _fraction_digits(N2, n2), bexp


def normalize_mantissa(m: DigitString, bin_exp: int) -> tuple[DigitString, int]:
    """Double the nonempty fraction 0.m into [1/2, 1), charging each
    doubling to the binary exponent."""
    if m.role != FRACTION:
        raise ValueError("expected a fraction digit string")
    if not m.digits:
        raise ValueError("cannot normalize an empty mantissa")
    N, n = _fraction_int(m)
    N2, n2, bexp = _normalize_int(N, n, bin_exp)
    return _fraction_digits(N2, n2), bexp


def scale_to_unit_interval(r: Rational) -> tuple[Rational, int]:
    """Halve or double r onto [1/2, 1): returns (r', k) with r == r' * 2^k.

    Doubles whichever of p and q is behind, so no reduction happens; the
    count comes from the bit lengths with at most one step of correction.
    """
    if r.p == 0:
        raise DomainError("cannot scale zero onto [1/2, 1)")
    p, q = r.p, r.q
    a = q.bit_length() - p.bit_length()
    # p/q * 2^a lands within a factor of two of [1/2, 1); nudge once if off
    if not _shifted_ge(p, a + 1, q):
        a += 1
    elif _shifted_ge(p, a, q):
        a -= 1
    assert _shifted_ge(p, a + 1, q) and not _shifted_ge(p, a, q)
    if a >= 0:
        scaled = Rational(r.sign, p << a, q)
    else:
        scaled = Rational(r.sign, p, q << -a)
    return scaled, -a


class _FractionBits:
    """Significand bit supply for a ratio num/den in [0, 1).

    Doubling the numerator yields one bit per step: the bit is 1 exactly
    when the doubled ratio reaches 1, and the excess keeps going. A spent
    numerator means every remaining bit is 0.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: int, den: int):
        self.num = num
        self.den = den

    def next_bit(self) -> int:
        self.num <<= 1
        if self.num >= self.den:
            self.num -= self.den
            return 1
        return 0

    @property
    def exhausted(self) -> bool:
        return self.num == 0

    def take(self, count: int) -> tuple[int, bool]:
        """First `count` bits packed into an integer, plus whether any 1
        bits remain behind them.

        One division stands in for `count` doubling steps: the quotient of
        num * 2^count by den collects exactly the bits the steps would have
        peeled off, and the remainder is the numerator they would have left
        behind."""
        acc, rem = divmod(self.num << count, self.den)
        self.num = rem
        return acc, rem != 0


def fraction_bits(p: int, q: int, count: int) -> list[int]:
    """First `count` binary fraction digits of p/q, which must lie in (0, 1)."""
    if not 0 < p < q:
        raise DomainError(f"{p}/{q} is not inside (0, 1)")
    bits = _FractionBits(p, q)
    return [bits.next_bit() for _ in range(count)]


def mantissa_bits(m: DigitString, count: int) -> list[int]:
    """First `count` binary fraction digits of the fraction 0.m."""
    if m.role != FRACTION:
        raise ValueError("expected a fraction digit string")
    N, n = _fraction_int(m)
    bits = _FractionBits(N, _pow10(n))
    return [bits.next_bit() for _ in range(count)]


def _enclose_magnitude(
    scale_exp: int, bits: _FractionBits, fmt: FloatFormat
) -> tuple[FloatValue, bool]:
    """Lower bound and inexactness flag for a magnitude 2^scale_exp * v
    with v in [1/2, 1) supplied bitwise.

    Cutting the bit supply at the format's grid is exactly the floor onto
    it. Magnitudes beyond the finite range clamp to the top value and
    magnitudes under the subnormal grid clamp to zero; both keep the flag
    on so the caller widens outward.
    """
    p = fmt.significand_bits
    least = fmt.least_exponent
    if scale_exp - 1 > fmt.emax:
        return fmt.max_finite, True
    if scale_exp <= least:
        return ZERO, True
    nbits = min(p, scale_exp - least)
    m, sticky = bits.take(nbits)
    # v >= 1/2 puts a 1 in front, so m > 0 and full width means normal
    kind = KIND_NORMAL if nbits == p else KIND_SUBNORMAL
    return FloatValue(kind, 1, m, scale_exp - nbits), sticky


def _exponent_hint(dec_exp: int, fmt: FloatFormat) -> tuple[FloatValue, bool] | None:
    """Settle hopeless decimal exponents without touching any digits.

    A nonzero mantissa puts the magnitude in [10^(e-1), 10^e). Since
    8^k <= 10^k, a large enough e forces an overflow whatever the digits
    say, and a small enough e forces a value under the subnormal grid.
    Keeps the digit work bounded by the format's own exponent range.
    """
    if dec_exp > 0 and 3 * (dec_exp - 1) >= fmt.emax + 1:
        return fmt.max_finite, True
    if dec_exp < 0 and 3 * dec_exp <= fmt.least_exponent:
        return ZERO, True
    return None


def decimal_to_interval(d: DecimalScientific, fmt: FloatFormat) -> FloatInterval:
    """Narrowest interval of format values enclosing the numeral's value.

    Exact values give a degenerate interval; any other value lands
    strictly between two adjacent format values and both are returned.
    Magnitudes beyond the finite range take an infinite outer bound,
    magnitudes under the subnormal grid take a zero inner bound.
    """
    if d.is_zero:
        return FloatInterval(ZERO, ZERO)
    hint = _exponent_hint(d.exponent, fmt)
    if hint is not None:
        lb, sticky = hint
    else:
        N, n = _fraction_int(d.mantissa)
        N, n, bexp = _binarize_int(N, n, d.exponent)
        N, n, bexp = _normalize_int(N, n, bexp)
        lb, sticky = _enclose_magnitude(bexp, _FractionBits(N, _pow10(n)), fmt)
    ub = next_up(lb, fmt) if sticky else lb
    interval = FloatInterval(lb, ub)
    return -interval if d.sign < 0 else interval


def rational_to_interval(r: Rational, fmt: FloatFormat) -> FloatInterval:
    """Narrowest enclosing interval for p/q, never forming a decimal."""
    if r.p == 0:
        return FloatInterval(ZERO, ZERO)
    scaled, k = scale_to_unit_interval(r)
    lb, sticky = _enclose_magnitude(k, _FractionBits(scaled.p, scaled.q), fmt)
    ub = next_up(lb, fmt) if sticky else lb
    interval = FloatInterval(lb, ub)
    return -interval if r.sign < 0 else interval
