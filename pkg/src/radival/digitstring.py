"""Exact arithmetic on strings of decimal digits.

Radix conversion needs decimal arithmetic that never rounds: doubling and
halving numerals digit by digit, carries and borrows done by hand. A
DigitString holds the digits of either a pure fraction 0.d1d2...dn or an
unsigned integer d1d2...dn. Zero is the empty string in both roles.

Canonical form keeps the value/representation map one to one: a fraction
never ends in 0, an integer never starts with 0. A fraction may still
begin with zeros (0.05 is the two digits 0 and 5); those carry value.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

FRACTION = "fraction"
INTEGER = "integer"

_ROLES = (FRACTION, INTEGER)


@dataclass(frozen=True, slots=True)
class DigitString:
    """Digits of a pure decimal fraction or an unsigned decimal integer."""

    digits: tuple[int, ...]
    role: str = FRACTION

    def __post_init__(self) -> None:
        if self.role not in _ROLES:
            raise ValueError(f"unknown role {self.role!r}")
        if self.digits:
            if min(self.digits) < 0 or max(self.digits) > 9:
                raise ValueError(f"digits out of range in {self.digits!r}")
            if self.role == FRACTION and self.digits[-1] == 0:
                raise ValueError("fraction digit string may not end in 0")
            if self.role == INTEGER and self.digits[0] == 0:
                raise ValueError("integer digit string may not start with 0")

    @classmethod
    def fraction(cls, digits: str | Iterable[int]) -> "DigitString":
        """Build a fraction string, dropping trailing zeros."""
        seq = _as_digits(digits)
        while seq and seq[-1] == 0:
            seq.pop()
        return cls(tuple(seq), FRACTION)

    @classmethod
    def integer(cls, digits: str | Iterable[int]) -> "DigitString":
        """Build an integer string, dropping leading zeros."""
        seq = _as_digits(digits)
        head = 0
        while head < len(seq) and seq[head] == 0:
            head += 1
        return cls(tuple(seq[head:]), INTEGER)

    def as_text(self) -> str:
        return bytes(d + 48 for d in self.digits).decode("ascii")

    def __str__(self) -> str:
        return self.as_text() or "(empty)"

    def __len__(self) -> int:
        return len(self.digits)


def _as_digits(digits: str | Iterable[int]) -> list[int]:
    if isinstance(digits, str):
        # any byte outside '0'..'9' lands outside 0..9 and fails validation
        try:
            return [b - 48 for b in digits.encode("ascii")]
        except UnicodeEncodeError:
            raise ValueError(f"not a digit string: {digits!r}") from None
    return list(digits)


def _require(m: DigitString, role: str) -> None:
    if m.role != role:
        raise ValueError(f"expected a {role} digit string, got {m.role}")


def mul2(m: DigitString) -> tuple[DigitString, int]:
    """Double a fraction: return (digits of 2 * 0.m mod 1, integral carry).

    Worked right to left, each digit doubling and passing its overflow one
    place up. At most one trailing zero can appear (only a final 5 doubles
    to 0) and it is dropped to keep the result canonical.
    """
    _require(m, FRACTION)
    out = []
    carry = 0
    for d in reversed(m.digits):
        dd = 2 * d + carry
        out.append(dd % 10)
        carry = dd // 10
    out.reverse()
    if out and out[-1] == 0:
        out.pop()
    return DigitString(tuple(out), FRACTION), carry


def div2(m: DigitString) -> DigitString:
    """Halve a fraction exactly.

    An odd last digit extends the string by a final 5, and halving a
    leading 1 puts a 0 in front: div2(0.1) is 0.05. Canonical input never
    yields a trailing zero, so the result needs no stripping.
    """
    _require(m, FRACTION)
    out = []
    rem = 0
    for d in m.digits:
        cur = 10 * rem + d
        out.append(cur // 2)
        rem = cur % 2
    if rem:
        out.append(5)
    return DigitString(tuple(out), FRACTION)


def double_integer(m: DigitString) -> DigitString:
    """Double an unsigned integer, growing by one digit on a final carry."""
    _require(m, INTEGER)
    out = []
    carry = 0
    for d in reversed(m.digits):
        dd = 2 * d + carry
        out.append(dd % 10)
        carry = dd // 10
    if carry:
        out.append(carry)
    out.reverse()
    return DigitString(tuple(out), INTEGER)


# Integer view of a fraction string: d1..dn maps to (d1..dn read as an
# integer, n), value N / 10^n. The conversion modules do their bulk steps
# on this view; the digit-at-a-time operations above stay the reference
# behaviour and the tests replay one against the other.

_POW10 = [1]
_POW5 = [1]


def _pow10(k: int) -> int:
    while len(_POW10) <= k:
        _POW10.append(_POW10[-1] * 10)
    return _POW10[k]


def _pow5(k: int) -> int:
    while len(_POW5) <= k:
        _POW5.append(_POW5[-1] * 5)
    return _POW5[k]


def _fraction_int(m: DigitString) -> tuple[int, int]:
    text = m.as_text()
    return (int(text, 10) if text else 0, len(text))


def _fraction_digits(N: int, n: int) -> DigitString:
    if N == 0:
        return DigitString((), FRACTION)
    return DigitString.fraction(str(N).rjust(n, "0"))


def _strip_tens(N: int, n: int) -> tuple[int, int]:
    while N and N % 10 == 0:
        N //= 10
        n -= 1
    if N == 0:
        n = 0
    return N, n
