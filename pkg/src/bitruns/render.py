"""Decimal rendering of exact rationals and high-precision floats.

All conversions run at 50 significant digits and round half to even, so
a value printed to 6 places is correct in every digit shown.
"""

from __future__ import annotations

import decimal
from fractions import Fraction

PRECISION = 50

_CTX = decimal.Context(prec=PRECISION, rounding=decimal.ROUND_HALF_EVEN)


def fraction_to_decimal(q: Fraction) -> decimal.Decimal:
    return _CTX.divide(decimal.Decimal(q.numerator), decimal.Decimal(q.denominator))


def quantize(x: decimal.Decimal, places: int) -> decimal.Decimal:
    return x.quantize(decimal.Decimal(1).scaleb(-places), context=_CTX)


def format_fraction(q: Fraction, places: int = 6) -> str:
    """Fixed-point rendering of an exact rational."""
    return str(quantize(fraction_to_decimal(q), places))


def signed_sqrt_ratio(num: Fraction, den: Fraction, places: int = 6) -> str:
    """Render sign(num) * sqrt(num^2 / den) where den > 0.

    Used for correlation coefficients: num is a covariance and den a
    product of variances, so the square root of the exact rational
    num^2 / den is taken in decimal and the covariance sign restored.
    """
    q = num * num / den
    r = _CTX.sqrt(fraction_to_decimal(q))
    if num < 0:
        r = -r
    return str(quantize(r, places))


def format_float(x, places: int = 6) -> str:
    """Quantized rendering of anything Decimal accepts (str, int, mpf)."""
    return str(quantize(_CTX.create_decimal(str(x)), places))
