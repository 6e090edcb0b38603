"""Kummer's confluent hypergeometric function in the polynomial regime.

Every radial eigenfunction carries ``F(-n, b, x)`` with ``n`` a non-negative
integer, which is a degree-``n`` polynomial.  Its monomial coefficients come
from a forward ratio recurrence, but values are computed with the three-term
recurrence in the degree,

    (b + m) F(-m-1) = (2m + b - x) F(-m) - m F(-m+1),

because Horner's scheme on the monomial coefficients cancels catastrophically
for large ``x`` (relative error of order one at ``n = 30, x = 50``).
:func:`kummer_series` sums the general series exactly in rational arithmetic
and exists to check the polynomial path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError, NumericalError


@dataclass(frozen=True)
class KummerPoly:
    """The polynomial ``F(-n, b, x)``; ``coefficients[j]`` multiplies ``x**j``."""

    n: int
    b: float
    coefficients: tuple

    def __call__(self, x):
        # extended precision keeps the relative error small next to roots
        x = np.asarray(x, dtype=np.longdouble)
        b = np.longdouble(self.b)
        prev = np.ones_like(x)
        cur = prev
        if self.n > 0:
            cur = 1 - x / b
        for m in range(1, self.n):
            prev, cur = cur, ((2 * m + b - x) * cur - m * prev) / (b + m)
        out = cur.astype(float)
        return out if out.ndim else float(out)

    def horner(self, x):
        """Evaluate from the monomial coefficients (inaccurate for large ``x``)."""
        x = np.asarray(x, dtype=float)
        out = np.full_like(x, self.coefficients[-1])
        for c in self.coefficients[-2::-1]:
            out = out * x + c
        return out if out.ndim else float(out)

    def roots(self):
        """Real roots in ascending order (all positive when ``b > 0``)."""
        if self.n == 0:
            return np.empty(0)
        r = np.roots(self.coefficients[::-1])
        return np.sort(r.real)


def kummer_poly(n, b):
    """Coefficients of ``F(-n, b, x) = sum_j (-n)_j / ((b)_j j!) x**j``.

    Parameters
    ----------
    n : int
        Degree, ``n >= 0``.
    b : float
        Second parameter, ``b > 0``.

    Returns
    -------
    KummerPoly
    """
    if int(n) != n or n < 0:
        raise DomainError(f"degree n must be a non-negative integer, got {n!r}")
    if not b > 0:
        raise DomainError(f"Kummer parameter b must be positive, got {b!r}")
    n = int(n)
    coeffs = [1.0]
    c = 1.0
    for j in range(n):
        c = c * (j - n) / ((b + j) * (j + 1))
        coeffs.append(c)
    return KummerPoly(n=n, b=float(b), coefficients=tuple(coeffs))


def kummer_series(a, b, x, max_terms=500):
    """Sum Kummer's series ``M(a, b, x)`` term by term.

    The arguments are converted to exact rationals, so alternating series
    with large cancelling terms are summed without rounding; only the final
    value is rounded to a float.  Stops once a term drops below ``1e-16`` of
    the running sum; a terminating series (``a`` a non-positive integer)
    stops exactly.

    Raises
    ------
    NumericalError
        If the series has not converged within ``max_terms`` terms.
    """
    if b <= 0 and float(b).is_integer():
        raise DomainError(f"Kummer series undefined for b={b!r}")
    if x < 0:
        raise DomainError(f"kummer_series expects x >= 0, got {x!r}")
    a, b, x = Fraction(a), Fraction(b), Fraction(x)
    total = Fraction(1)
    term = Fraction(1)
    tiny = Fraction(1, 10**16)
    for j in range(max_terms):
        term *= (a + j) * x / ((b + j) * (j + 1))
        total += term
        if term == 0 or abs(term) < tiny * abs(total):
            return float(total)
    raise NumericalError(
        f"Kummer series M({float(a)}, {float(b)}, {float(x)}) not converged in {max_terms} terms",
        residual=float(abs(term)),
    )


def genlaguerre(n, gamma, x, dtype=float):
    """Generalized Laguerre polynomial ``L_n^(gamma)(x)`` by its three-term recurrence."""
    x = np.asarray(x, dtype=dtype)
    prev = np.ones_like(x)
    if n == 0:
        return prev
    cur = 1.0 + gamma - x
    for m in range(1, n):
        prev, cur = cur, ((2 * m + 1 + gamma - x) * cur - (m + gamma) * prev) / (m + 1)
    return cur


def laguerre_to_kummer(n, gamma):
    """Factor ``n! Gamma(gamma+1) / Gamma(n+gamma+1)`` mapping ``L_n^(gamma)`` to ``F(-n, gamma+1, .)``."""
    return math.exp(math.lgamma(n + 1) + math.lgamma(gamma + 1) - math.lgamma(n + gamma + 1))
