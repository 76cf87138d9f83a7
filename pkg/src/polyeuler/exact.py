"""Exact-arithmetic substrate: rational scalars, truncated EGF algebra, determinants.

A series is stored by its exponential-generating-function coefficients:
``coeffs[n]`` holds c_n where the series is sum c_n t^n / n!.  Every value is
a ``fractions.Fraction``; nothing here ever touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Sequence, Union

Rational = Fraction

RationalLike = Union[Fraction, int]


class DivisionByNonUnit(ZeroDivisionError):
    """Series division needs a nonzero constant term in the divisor."""


class InsufficientVanishing(ValueError):
    """Shifted division needs both operands to vanish to the stated order."""


class NonNilpotentInner(ValueError):
    """Series composition needs an inner series with zero constant term."""


class NotSquare(ValueError):
    """Determinants are only defined for square matrices."""


def parse_rational(text: str) -> Fraction:
    """Parse the canonical rational text form: digits with optional sign and '/den'.

    Accepts e.g. ``"5"``, ``"-3/4"``.  The Unicode minus sign is tolerated on
    input.  Raises ValueError on anything else (whitespace-trimmed first).
    """
    s = text.strip().replace("−", "-")
    body = s[1:] if s.startswith("-") else s
    num, sep, den = body.partition("/")
    if not num.isdigit() or (sep and not den.isdigit()):
        raise ValueError(f"not a rational: {text!r}")
    if sep and int(den) == 0:
        raise ValueError(f"zero denominator: {text!r}")
    value = Fraction(int(num), int(den)) if sep else Fraction(int(num))
    return -value if s.startswith("-") else value


def format_rational(value: Fraction) -> str:
    """Render a rational in the canonical text form used across CLI and JSON."""
    return str(value)


def _as_fraction_tuple(values: Iterable[RationalLike]) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


@dataclass(frozen=True)
class Egf:
    """Truncated series sum_{n=0}^{N} coeffs[n] t^n/n!, N = truncation order.

    Immutable; all operations return new series.  Binary operations truncate
    to the smaller order of the two operands, so a result never claims more
    precision than was computed.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", _as_fraction_tuple(self.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, order: int) -> "Egf":
        return cls((Fraction(0),) * (order + 1))

    @classmethod
    def constant(cls, value: RationalLike, order: int) -> "Egf":
        return cls((Fraction(value),) + (Fraction(0),) * order)

    @classmethod
    def t(cls, order: int) -> "Egf":
        """The series t itself (requires order >= 1)."""
        if order < 1:
            raise ValueError("t needs order >= 1")
        return cls((Fraction(0), Fraction(1)) + (Fraction(0),) * (order - 1))

    @classmethod
    def from_ordinary(cls, ordinary: Sequence[RationalLike]) -> "Egf":
        """Build from ordinary power-series coefficients a_n (c_n = n! a_n)."""
        return cls(tuple(Fraction(a) * factorial(n) for n, a in enumerate(ordinary)))

    def ordinary(self) -> tuple[Fraction, ...]:
        """Ordinary power-series coefficients a_n = c_n / n!."""
        return tuple(c / factorial(n) for n, c in enumerate(self.coeffs))

    def truncate(self, order: int) -> "Egf":
        if order >= self.order:
            return self
        return Egf(self.coeffs[: order + 1])

    def vanishing_order(self) -> int:
        """Index of the first nonzero coefficient; order+1 for the zero series."""
        for n, c in enumerate(self.coeffs):
            if c != 0:
                return n
        return self.order + 1

    def __add__(self, other: "Egf") -> "Egf":
        return egf_add(self, other)

    def __sub__(self, other: "Egf") -> "Egf":
        return egf_add(self, egf_scale(other, Fraction(-1)))

    def __neg__(self) -> "Egf":
        return egf_scale(self, Fraction(-1))

    def __mul__(self, other: "Egf") -> "Egf":
        return egf_mul(self, other)


def egf_add(f: Egf, g: Egf) -> Egf:
    """Coefficientwise sum, truncated to the smaller order."""
    n = min(f.order, g.order)
    return Egf(tuple(f.coeffs[i] + g.coeffs[i] for i in range(n + 1)))


def egf_scale(f: Egf, value: RationalLike) -> Egf:
    v = Fraction(value)
    return Egf(tuple(v * c for c in f.coeffs))


def egf_mul(f: Egf, g: Egf) -> Egf:
    """Binomial-convolution product: c_n = sum_i C(n,i) f_i g_{n-i}."""
    n = min(f.order, g.order)
    fc, gc = f.coeffs, g.coeffs
    out = []
    for m in range(n + 1):
        acc = Fraction(0)
        for i in range(m + 1):
            a = fc[i]
            if a:
                acc += comb(m, i) * a * gc[m - i]
        out.append(acc)
    return Egf(tuple(out))


def egf_div(f: Egf, g: Egf) -> Egf:
    """Quotient h with egf_mul(h, g) = f up to the common order.

    Solves the triangular system coefficient by coefficient; the divisor must
    have a nonzero constant term.
    """
    if g.coeffs[0] == 0:
        raise DivisionByNonUnit("divisor has zero constant term")
    n = min(f.order, g.order)
    g0 = g.coeffs[0]
    h: list[Fraction] = []
    for m in range(n + 1):
        acc = f.coeffs[m]
        for i in range(m):
            if h[i]:
                acc -= comb(m, i) * h[i] * g.coeffs[m - i]
        h.append(acc / g0)
    return Egf(tuple(h))


def egf_div_shifted(f: Egf, g: Egf, shift: int) -> Egf:
    """Divide f by g after cancelling a common factor t^shift from both.

    Both series must vanish to order ``shift`` and g's coefficient of
    t^shift must be nonzero; the result's truncation order drops by
    ``shift``.  This keeps divisions like t/(e^t - 1) well defined without
    silently guessing a cancellation.
    """
    if shift < 0:
        raise ValueError("shift must be >= 0")
    if shift == 0:
        return egf_div(f, g)
    if f.order < shift or g.order < shift:
        raise InsufficientVanishing("series too short for the requested shift")
    for j in range(shift):
        if f.coeffs[j] != 0 or g.coeffs[j] != 0:
            raise InsufficientVanishing(
                f"coefficient of t^{j} is nonzero; cannot cancel t^{shift}"
            )
    if g.coeffs[shift] == 0:
        raise InsufficientVanishing(
            f"divisor vanishes beyond t^{shift}; quotient would not be a power series"
        )
    return egf_div(_shift_down(f, shift), _shift_down(g, shift))


def _shift_down(f: Egf, s: int) -> Egf:
    """Divide by t^s, assuming the first s coefficients vanish."""
    return Egf(
        tuple(
            f.coeffs[m + s] * Fraction(factorial(m), factorial(m + s))
            for m in range(f.order - s + 1)
        )
    )


def egf_compose(f: Egf, g: Egf) -> Egf:
    """Composition f(g(t)), defined when g has zero constant term.

    Evaluated by Horner's scheme over f's ordinary coefficients; only powers
    g^m with m <= order contribute because g is nilpotent modulo t^{N+1}.
    """
    if g.coeffs[0] != 0:
        raise NonNilpotentInner("inner series has nonzero constant term")
    n = min(f.order, g.order)
    a = f.truncate(n).ordinary()
    g = g.truncate(n)
    acc = Egf.constant(a[n], n)
    for m in range(n - 1, -1, -1):
        acc = egf_mul(acc, g)
        if a[m]:
            acc = egf_add(acc, Egf.constant(a[m], n))
    return acc


def egf_exp_linear(value: RationalLike, order: int) -> Egf:
    """The exponential e^{value * t}: c_n = value^n."""
    v = Fraction(value)
    return Egf(tuple(v**n for n in range(order + 1)))


def egf_pow(f: Egf, exponent: int) -> Egf:
    """Repeated product f^exponent with f^0 = 1."""
    if exponent < 0:
        raise ValueError("exponent must be a natural number")
    acc = Egf.constant(1, f.order)
    for _ in range(exponent):
        acc = egf_mul(acc, f)
    return acc


@dataclass(frozen=True)
class RationalMatrix:
    """Dense rational matrix, row-major entries."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative dimensions")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match dimensions")
        object.__setattr__(self, "entries", _as_fraction_tuple(self.entries))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[RationalLike]]) -> "RationalMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(nrows, ncols, tuple(Fraction(v) for r in rows for v in r))

    def at(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.cols + j]


def det(matrix: RationalMatrix) -> Fraction:
    """Exact determinant by Gaussian elimination with column pivoting.

    Runs entirely over rationals; row swaps only flip the sign, so the result
    is exact for any square input.
    """
    if matrix.rows != matrix.cols:
        raise NotSquare(f"{matrix.rows}x{matrix.cols} matrix has no determinant")
    n = matrix.rows
    if n == 0:
        return Fraction(1)
    rows = [[matrix.at(i, j) for j in range(n)] for i in range(n)]
    sign = 1
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != col:
            rows[col], rows[pivot_row] = rows[pivot_row], rows[col]
            sign = -sign
        pivot = rows[col][col]
        for r in range(col + 1, n):
            factor = rows[r][col] / pivot
            if factor:
                rows[r] = [rv - factor * cv for rv, cv in zip(rows[r], rows[col])]
    result = Fraction(sign)
    for i in range(n):
        result *= rows[i][i]
    return result
