"""Scalar helpers shared by the exact (rational) and float code paths.

Every algebraic routine in this package is generic over its scalar type:
it works on `fractions.Fraction` (exact mode) or `float` (tolerant mode),
and mixed expressions degrade to float the way Python arithmetic does.
"""

from __future__ import annotations

from fractions import Fraction

#: Relative tolerance used for float comparisons when none is given.
DEFAULT_REL_TOL = 1e-10


def is_exact(x) -> bool:
    """True for scalars that support exact arithmetic (int or Fraction)."""
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def values_close(a, b, tol: float | None = None) -> bool:
    """Equality test: bit-exact for rationals, relative tolerance for floats."""
    if tol is None:
        if is_exact(a) and is_exact(b):
            return a == b
        tol = DEFAULT_REL_TOL
    diff = abs(a - b)
    scale = max(1.0, abs(a), abs(b))
    return diff <= tol * scale


def is_zero(x, tol: float | None = None) -> bool:
    return values_close(x, 0 * x, tol)


def parse_scalar(text, exact: bool = True):
    """Parse a JSON scalar: "p/q" or "p" strings in exact mode, numbers otherwise.

    Numbers are accepted in exact mode only when they are integral.
    """
    if isinstance(text, str):
        value = Fraction(text)
        return value if exact else float(value)
    if isinstance(text, bool):
        raise ValueError("booleans are not scalars")
    if isinstance(text, int):
        return Fraction(text) if exact else float(text)
    if isinstance(text, float):
        if exact:
            if not float(text).is_integer():
                raise ValueError(f"non-integral float {text!r} in exact mode")
            return Fraction(int(text))
        return text
    raise ValueError(f"cannot parse scalar from {text!r}")


def format_scalar(x):
    """Serialize a scalar: "p/q" (or "p") for rationals, a JSON number for floats."""
    if is_exact(x):
        f = Fraction(x)
        return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
    return float(x)


def integer_nth_root(x: int, n: int) -> int | None:
    """Exact n-th root of a non-negative integer, or None if no integer root."""
    if x < 0:
        raise ValueError("negative radicand")
    if x in (0, 1):
        return x
    lo, hi = 1, 1 << ((x.bit_length() + n - 1) // n + 1)
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**n < x:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo**n == x else None


def fraction_nth_root(q, n: int):
    """Exact rational n-th root of a Fraction.

    Returns None when no rational root exists.  For even n the non-negative
    root is returned; a negative radicand with even n has no real root and
    also yields None.
    """
    q = Fraction(q)
    if n <= 0:
        raise ValueError("root order must be positive")
    sign = 1
    if q < 0:
        if n % 2 == 0:
            return None
        sign, q = -1, -q
    num = integer_nth_root(q.numerator, n)
    den = integer_nth_root(q.denominator, n)
    if num is None or den is None:
        return None
    return sign * Fraction(num, den)


def real_nth_root(x: float, n: int) -> float:
    """Real n-th root of a float; for even n the radicand must be >= 0."""
    if x < 0:
        if n % 2 == 0:
            raise ValueError("negative radicand with even root order")
        return -((-x) ** (1.0 / n))
    return x ** (1.0 / n)
