"""Exact rational scalar backend.

Every number in this package is an exact rational; there is no floating point
anywhere. The default backend is gmpy2.mpq when importable (compiled, several
times faster on elimination-heavy workloads) with fractions.Fraction as the
pure-Python fallback. Set SSEALA_SCALAR=gmpy2 or SSEALA_SCALAR=fraction to
force a backend; forcing gmpy2 on a machine without it raises ImportError.

Both backends produce identical reduced values, so report bytes do not depend
on the backend choice.
"""

from __future__ import annotations

import os
from fractions import Fraction

_FORCED = os.environ.get("SSEALA_SCALAR", "").strip().lower()

if _FORCED == "fraction":
    Q = Fraction
    BACKEND = "fraction"
elif _FORCED == "gmpy2":
    from gmpy2 import mpq as Q  # type: ignore[no-redef]

    BACKEND = "gmpy2"
elif _FORCED:
    raise ValueError(f"SSEALA_SCALAR must be 'gmpy2' or 'fraction', got {_FORCED!r}")
else:
    try:
        from gmpy2 import mpq as Q  # type: ignore[no-redef]

        BACKEND = "gmpy2"
    except ImportError:
        Q = Fraction
        BACKEND = "fraction"

ZERO = Q(0)
ONE = Q(1)


def qstr(x) -> str:
    """Render a rational as 'p' or 'p/q' with q > 0 and gcd(p, q) = 1."""
    n = x.numerator
    d = x.denominator
    if d == 1:
        return str(n)
    return f"{n}/{d}"


def parse_q(text: str):
    """Parse 'p' or 'p/q' into an exact rational.

    Whitespace around the number and around '/' is tolerated. Raises
    ValueError on anything else, including a zero denominator.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty rational literal")
    if "/" in s:
        num_s, _, den_s = s.partition("/")
        try:
            num = int(num_s.strip())
            den = int(den_s.strip())
        except ValueError as exc:
            raise ValueError(f"bad rational literal {text!r}") from exc
        if den == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return Q(num, den)
    try:
        return Q(int(s))
    except ValueError as exc:
        raise ValueError(f"bad rational literal {text!r}") from exc
