"""Bernoulli and Euler numbers/polynomials, power sums, determinant forms.

Two inequivalent "Euler number" conventions circulate and both are needed
here, so they are kept behind an explicit enum: the Genocchi-type numbers
generated by 2/(e^t + 1) and the secant numbers generated by 1/cosh t.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Sequence

from .exact import (
    Egf,
    RationalMatrix,
    det,
    egf_add,
    egf_div,
    egf_div_shifted,
    egf_exp_linear,
)


class EulerConvention(enum.Enum):
    GENOCCHI_TYPE = "genocchi"
    SECANT_TYPE = "secant"


def _exp_minus_one(order: int) -> Egf:
    return egf_add(egf_exp_linear(1, order), Egf.constant(-1, order))


@lru_cache(maxsize=None)
def _bernoulli_tuple(order: int) -> tuple[Fraction, ...]:
    series = egf_div_shifted(Egf.t(order + 1), _exp_minus_one(order + 1), 1)
    return series.coeffs


def bernoulli_numbers(order: int) -> list[Fraction]:
    """B_0..B_order from t/(e^t - 1); the B_1 = -1/2 convention."""
    return list(_bernoulli_tuple(order))


def bernoulli_polynomial(n: int, order: int) -> list[Fraction]:
    """Coefficients of B_n(x) in x (index j holds the x^j coefficient).

    Expansion of the n-th coefficient of t e^{xt}/(e^t - 1), which is the
    binomial combination sum_j C(n,j) B_{n-j} x^j.
    """
    if n > order:
        raise ValueError("polynomial degree exceeds the series order")
    bern = _bernoulli_tuple(order)
    return [comb(n, j) * bern[n - j] for j in range(n + 1)]


def poly_eval(coeffs: Sequence[Fraction], x: Fraction) -> Fraction:
    result = Fraction(0)
    for c in reversed(list(coeffs)):
        result = result * x + c
    return result


def power_sum(m: int, n: int) -> int:
    """Direct summation 1^m + 2^m + ... + n^m."""
    return sum(k**m for k in range(1, n + 1))


def power_sum_closed(m: int, n: int, b1_sign: str) -> Fraction:
    """Bernoulli closed form (1/(m+1)) sum_k C(m+1,k) B_k n^{m+1-k}.

    ``b1_sign`` selects B_1 = +1/2 ("plus") or -1/2 ("minus"); the two
    conventions disagree about whether the sum counts k=n or k=0.
    """
    if b1_sign not in ("plus", "minus"):
        raise ValueError(f"b1_sign must be 'plus' or 'minus', got {b1_sign!r}")
    bern = list(_bernoulli_tuple(max(m, 1)))
    if b1_sign == "plus":
        bern[1] = Fraction(1, 2)
    total = Fraction(0)
    for k in range(m + 1):
        total += comb(m + 1, k) * bern[k] * Fraction(n) ** (m + 1 - k)
    return total / (m + 1)


def alternating_sum(n: int, m: int) -> int:
    """m^n - (m-1)^n + ... +- 1^n by direct summation."""
    return sum((-1) ** (m - k) * k**n for k in range(1, m + 1))


def euler_numbers(order: int, convention: EulerConvention) -> list[Fraction]:
    """E_0..E_order under the chosen convention.

    GENOCCHI_TYPE expands 2/(e^t + 1); SECANT_TYPE expands
    1/cosh t = 2/(e^t + e^{-t}), whose odd coefficients vanish.
    """
    if convention is EulerConvention.GENOCCHI_TYPE:
        denom = egf_add(Egf.constant(1, order), egf_exp_linear(1, order))
    else:
        denom = egf_add(egf_exp_linear(1, order), egf_exp_linear(-1, order))
    return list(egf_div(Egf.constant(2, order), denom).coeffs)


def bernoulli_det(n: int) -> Fraction:
    """B_n as the scaled determinant of the Pascal-bordered Hilbert-like matrix.

    Row 1 holds 1/(j+1); row r >= 2 holds C(j, r-2) shifted so that entries
    left of column r-1 are zero.  The value is (-1)^n/(n-1)! times the
    determinant.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rows = [[Fraction(1, j + 1) for j in range(1, n + 1)]]
    for r in range(2, n + 1):
        rows.append([Fraction(comb(j, r - 2)) if j >= r - 1 else Fraction(0) for j in range(1, n + 1)])
    d = det(RationalMatrix.from_rows(rows))
    return Fraction((-1) ** n, factorial(n - 1)) * d


def euler_det(n: int) -> Fraction:
    """E_{2n} (secant convention) as (-1)^n (2n)! times a banded determinant.

    Entry (i, j) is 1 on the first superdiagonal and 1/(2(i-j)+2)! on and
    below the diagonal.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            if j == i + 1:
                row.append(Fraction(1))
            elif j <= i:
                row.append(Fraction(1, factorial(2 * (i - j) + 2)))
            else:
                row.append(Fraction(0))
        rows.append(row)
    d = det(RationalMatrix.from_rows(rows))
    return Fraction((-1) ** n) * factorial(2 * n) * d
