"""Exact unbounded-integer primitives.

Floored, ceiling and nearest-integer division of integer ratios, plus a
base-10 logarithm estimate that stays accurate for integers with millions
of digits without ever converting the full value to a machine float.
"""
from __future__ import annotations

import sys
from dataclasses import dataclass
from decimal import Decimal, localcontext
from functools import lru_cache

from ._bigint import HAVE_GMPY2, bigint

__all__ = [
    "Ratio",
    "ceil_div",
    "decimal_digits",
    "exceeds_digits",
    "floor_div",
    "from_decimal_string",
    "log10_approx",
    "nearest_int",
    "to_decimal_string",
]

# 56 digits of log10(2); enough that shift * LOG10_2 stays exact far below
# the final double rounding even for billion-bit inputs.
_LOG10_2 = Decimal("0.30102999566398119521373889472449302676818988146210854131")


@dataclass(frozen=True)
class Ratio:
    """An integer fraction num/den with den > 0 (the sign lives in num)."""

    num: int
    den: int

    def __post_init__(self):
        if self.den == 0:
            raise ValueError("Ratio denominator must be nonzero")
        if self.den < 0:
            object.__setattr__(self, "num", -self.num)
            object.__setattr__(self, "den", -self.den)


def _check_den(den) -> None:
    if den <= 0:
        raise ValueError("denominator must be positive")


def floor_div(num, den):
    """Largest integer r with r*den <= num. Requires den > 0."""
    _check_den(den)
    return num // den


def ceil_div(num, den):
    """Smallest integer r with r*den >= num, i.e. -floor(-num/den). Requires den > 0."""
    _check_den(den)
    return -((-num) // den)


def nearest_int(num, den):
    """Integer closest to num/den; exact halves round up. Requires den > 0."""
    _check_den(den)
    return (2 * num + den) // (2 * den)


def log10_approx(x) -> float:
    """log10(x) for a positive integer of any size.

    Works from the leading 64 bits plus the bit length, carried through
    50-digit decimal arithmetic, so the only error left is the final
    rounding to a double. Powers of ten come out exact.
    """
    n = int(x)
    if n <= 0:
        raise ValueError("log10_approx requires a positive integer")
    bits = n.bit_length()
    with localcontext() as ctx:
        ctx.prec = 50
        if bits <= 64:
            return float(Decimal(n).log10())
        shift = bits - 64
        head = int(n >> shift)
        return float(Decimal(head).log10() + shift * _LOG10_2)


@lru_cache(maxsize=64)
def _pow10(digits: int):
    return bigint(10) ** digits


def decimal_digits(x) -> int:
    """Exact number of decimal digits of |x| (zero counts as one digit)."""
    n = abs(int(x))
    if n == 0:
        return 1
    d = max(1, int(n.bit_length() / 3.321928094887362))
    while _pow10(d) <= n:
        d += 1
    while d > 1 and _pow10(d - 1) > n:
        d -= 1
    return d


def exceeds_digits(x, digits: int) -> bool:
    """True iff |x| has more than `digits` decimal digits (|x| >= 10**digits).

    Cheap bit-length prefilters keep the exact power-of-ten comparison off
    the hot path; it only fires for values very close to the boundary.
    """
    if digits < 1:
        raise ValueError("digit budget must be at least 1")
    n = abs(int(x))
    bits = n.bit_length()
    # 3.3219 < log2(10) < 3.32193, so these bounds are safe in both directions.
    if bits * 10000 <= digits * 33219:
        return False
    if (bits - 1) * 100000 >= digits * 332193:
        return True
    return n >= _pow10(digits)


def to_decimal_string(x) -> str:
    """Decimal form of an integer; safe and fast even at millions of digits."""
    if HAVE_GMPY2:
        return bigint(x).digits(10)
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    return str(int(x))


def from_decimal_string(s: str) -> int:
    """Parse a (possibly huge) decimal integer string."""
    text = s.strip()
    body = text[1:] if text[:1] in "+-" else text
    if not body.isdigit():
        raise ValueError(f"not a decimal integer: {s!r}")
    if HAVE_GMPY2:
        return int(bigint(text))
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    return int(text)
