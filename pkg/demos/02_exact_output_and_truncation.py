"""Every finite float has an exact decimal; intervals round outward.

Run:  python demos/02_exact_output_and_truncation.py
"""

from radival import (
    BINARY32,
    Rational,
    bracket_notation,
    float_to_exact_decimal,
    interval_to_decimal,
    plain_decimal,
    rational_to_interval,
    truncate_directed,
)


def main():
    fmt = BINARY32
    iv = rational_to_interval(Rational(1, 1, 3), fmt)
    lo = float_to_exact_decimal(iv.lb, fmt)
    hi = float_to_exact_decimal(iv.ub, fmt)

    print("The two binary32 neighbours of 1/3, written out exactly:")
    print(f"  lb = {plain_decimal(lo)}")
    print(f"  hi = {plain_decimal(hi)}")
    print()
    print("Both expansions terminate; no float needs rounding to print.")
    print(f"Factoring out the shared digits: {bracket_notation(lo, hi).text()}")
    print()

    print("Tightening the digit budget keeps 1/3 inside at every width:")
    for n in (20, 10, 6, 3, 1):
        a, b = interval_to_decimal(iv, n, fmt)
        print(f"  {n:>2} digits: {bracket_notation(a, b).text()}")
    print()

    print("Truncation is directed, so bounds only ever move outward:")
    d = float_to_exact_decimal(iv.lb, fmt)
    down = truncate_directed(d, 4, "down")
    up = truncate_directed(d, 4, "up")
    print(f"  {plain_decimal(d)}")
    print(f"  4 digits down: {plain_decimal(down)}  (below the exact value)")
    print(f"  4 digits up:   {plain_decimal(up)}  (above it)")
    print()

    print("A run of nines carries into a fresh leading digit:")
    from radival import DecimalScientific, DigitString

    nines = DecimalScientific(1, DigitString.fraction("9997"), 0)
    print(f"  {plain_decimal(nines)} rounded up at 3 digits"
          f" = {plain_decimal(truncate_directed(nines, 3, 'up'))}")


if __name__ == "__main__":
    main()
