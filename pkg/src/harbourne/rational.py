"""
Exact rational carrier and its text encodings

Every H value, bound and cover invariant is a ``Rat``. Floats appear only
in the decimal approximations produced for display.
"""

from fractions import Fraction

from harbourne.config import Config

# Fraction keeps denominator > 0 and gcd(|p|, q) = 1 after every operation
Rat = Fraction


def format_exact(value: Rat) -> str:
    """
    Encode a rational as "p/q", or "p" when it is an integer

    Args:
        value: Rational to encode

    Returns:
        Exact string form
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_decimal(value: Rat, places: int = Config.DECIMAL_PLACES) -> str:
    """
    Approximate a rational to a fixed number of decimal places

    Uses integer division only; ties round half away from zero.

    Args:
        value: Rational to approximate
        places: Number of digits after the decimal point

    Returns:
        Decimal string such as "-3.6433"
    """
    value = Fraction(value)
    negative = value < 0
    magnitude = -value if negative else value
    scale = 10 ** places

    quotient, remainder = divmod(magnitude.numerator * scale, magnitude.denominator)
    if 2 * remainder >= magnitude.denominator:
        quotient += 1

    whole, fraction = divmod(quotient, scale)
    sign = "-" if negative and quotient != 0 else ""
    if places == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{fraction:0{places}d}"


def format_both(value: Rat) -> str:
    """Exact form followed by its decimal approximation, for human output"""
    return f"{format_exact(value)} ({format_decimal(value)})"
