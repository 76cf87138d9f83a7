"""Multi poly-Bernoulli/Euler sequences with optional (a,b,c) deformations.

The deformation parameters a, b, c enter every formula only through their
logarithms, so they are represented by exact rationals alpha = ln a,
beta = ln b, gamma = ln c.  Each identity in the audit registry is then a
polynomial identity in these rationals and can be certified point by point
with zero tolerance.

The right-hand-side evaluators (thm1_rhs .. addition_rhs) recompute the
registered identities' claimed expansions from more primitive sequences;
thm3_explicit and thm4_explicit are audit instruments that evaluate two
printed "explicit formulas" exactly as stated, caps and all, so the audit
can report how far their partial sums are from the series values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb, factorial
from typing import Sequence

from .exact import (
    Egf,
    egf_add,
    egf_div,
    egf_div_shifted,
    egf_exp_linear,
    egf_mul,
    egf_pow,
    egf_scale,
)
from .polylog import KVector, li_of_inner, validate_kvector


class DegenerateParams(ValueError):
    """Raised when an identity requires ln a + ln b != 0."""


@dataclass(frozen=True)
class LogParams:
    """Exact logarithms of the deformation parameters: alpha = ln a, etc."""

    alpha: Fraction
    beta: Fraction
    gamma: Fraction | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "beta", Fraction(self.beta))
        if self.gamma is not None:
            object.__setattr__(self, "gamma", Fraction(self.gamma))

    @property
    def log_ab(self) -> Fraction:
        return self.alpha + self.beta


def _one_minus_exp(value, order: int) -> Egf:
    return egf_add(Egf.constant(1, order), egf_scale(egf_exp_linear(value, order), -1))


@lru_cache(maxsize=None)
def _multi_poly_bernoulli_egf(ks: KVector, order: int) -> Egf:
    r = len(ks)
    work = order + r
    inner = _one_minus_exp(-1, work)
    numerator = li_of_inner(ks, inner, work)
    return egf_div_shifted(numerator, egf_pow(inner, r), r)


def multi_poly_bernoulli(ks: Sequence[int], order: int) -> list[Fraction]:
    """B_n^{(k_1..k_r)} from Li_{(k)}(1-e^{-t})/(1-e^{-t})^r.

    Both sides of the division vanish to order exactly r (the nested sum
    starts at degree r), which the t^r-cancelling division checks.
    """
    return list(_multi_poly_bernoulli_egf(validate_kvector(ks), order).coeffs)


@lru_cache(maxsize=None)
def _multi_poly_euler_egf(ks: KVector, x: Fraction, order: int) -> Egf:
    r = len(ks)
    numerator = egf_scale(li_of_inner(ks, _one_minus_exp(-1, order), order), 2)
    denominator = egf_pow(egf_add(Egf.constant(1, order), egf_exp_linear(1, order)), r)
    quotient = egf_div(numerator, denominator)
    return egf_mul(quotient, egf_exp_linear(Fraction(r) * x, order))


def multi_poly_euler(ks: Sequence[int], x: Fraction | int, order: int) -> list[Fraction]:
    """E_n^{(k_1..k_r)}(x) from 2 Li_{(k)}(1-e^{-t})/(1+e^t)^r e^{rxt}.

    x = 0 gives the plain multi poly-Euler numbers; the first r of them
    always vanish because the numerator starts at degree r.
    """
    return list(_multi_poly_euler_egf(validate_kvector(ks), Fraction(x), order).coeffs)


@lru_cache(maxsize=None)
def _multi_poly_euler_xab_egf(
    ks: KVector, x: Fraction, alpha: Fraction, beta: Fraction, order: int
) -> Egf:
    r = len(ks)
    numerator = egf_scale(li_of_inner(ks, _one_minus_exp(-(alpha + beta), order), order), 2)
    denominator = egf_pow(
        egf_add(egf_exp_linear(-alpha, order), egf_exp_linear(beta, order)), r
    )
    quotient = egf_div(numerator, denominator)
    return egf_mul(quotient, egf_exp_linear(Fraction(r) * x, order))


def multi_poly_euler_ab(ks: Sequence[int], params: LogParams, order: int) -> list[Fraction]:
    """E_n^{(k)}(a,b) from 2 Li_{(k)}(1-(ab)^{-t})/(a^{-t}+b^t)^r.

    With alpha + beta = 0 the numerator argument 1-(ab)^{-t} collapses to 0,
    so the whole sequence is zero; no special-casing is needed because the
    denominator keeps its nonzero constant term 2^r.
    """
    return multi_poly_euler_xab(ks, Fraction(0), params, order)


def multi_poly_euler_xab(
    ks: Sequence[int], x: Fraction | int, params: LogParams, order: int
) -> list[Fraction]:
    """E_n^{(k)}(x; a, b): the two-parameter series times e^{rxt}."""
    return list(
        _multi_poly_euler_xab_egf(
            validate_kvector(ks), Fraction(x), params.alpha, params.beta, order
        ).coeffs
    )


@lru_cache(maxsize=None)
def _poly_euler_abc_egf(
    k: int, x: Fraction, alpha: Fraction, beta: Fraction, gamma: Fraction, order: int
) -> Egf:
    numerator = egf_scale(li_of_inner((k,), _one_minus_exp(-(alpha + beta), order), order), 2)
    denominator = egf_add(egf_exp_linear(-alpha, order), egf_exp_linear(beta, order))
    quotient = egf_div(numerator, denominator)
    return egf_mul(quotient, egf_exp_linear(gamma * x, order))


def poly_euler_abc(
    k: int, x: Fraction | int, params: LogParams, order: int
) -> list[Fraction]:
    """E_n^{(k)}(x; a, b, c) from 2 Li_k(1-(ab)^{-t})/(a^{-t}+b^t) c^{xt}."""
    gamma = params.gamma if params.gamma is not None else Fraction(0)
    return list(
        _poly_euler_abc_egf(k, Fraction(x), params.alpha, params.beta, gamma, order).coeffs
    )


@dataclass(frozen=True)
class MultiPolyEulerSpec:
    """One fully-specified sequence request (used by the CLI front end)."""

    ks: KVector
    x: Fraction
    params: LogParams | None
    order: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "ks", validate_kvector(self.ks))
        object.__setattr__(self, "x", Fraction(self.x))
        if self.order < 0:
            raise ValueError("order must be >= 0")

    def evaluate(self) -> list[Fraction]:
        if self.params is None:
            return multi_poly_euler(self.ks, self.x, self.order)
        if self.params.gamma is None:
            return multi_poly_euler_xab(self.ks, self.x, self.params, self.order)
        if len(self.ks) != 1:
            raise ValueError("the three-parameter family is defined for a single index")
        return poly_euler_abc(self.ks[0], self.x, self.params, self.order)


def thm1_rhs(ks: Sequence[int], params: LogParams, order: int) -> list[Fraction]:
    """Registered identity thm1, right side: E_n(ln a/(ln a+ln b)) (ln a+ln b)^n."""
    if params.log_ab == 0:
        raise DegenerateParams("thm1 requires ln a + ln b != 0")
    plain = multi_poly_euler(ks, params.alpha / params.log_ab, order)
    return [plain[n] * params.log_ab**n for n in range(order + 1)]


def thm2_rhs(ks: Sequence[int], params: LogParams, order: int) -> list[Fraction]:
    """Registered identity thm2, right side: a binomial mix of the plain numbers.

    Term i carries r^{n-i} (ln a+ln b)^i (ln a)^{n-i} C(n,i) E_i.
    """
    r = len(validate_kvector(ks))
    plain = multi_poly_euler(ks, Fraction(0), order)
    out = []
    for n in range(order + 1):
        total = Fraction(0)
        for i in range(n + 1):
            if plain[i]:
                total += (
                    Fraction(r) ** (n - i)
                    * params.log_ab**i
                    * params.alpha ** (n - i)
                    * comb(n, i)
                    * plain[i]
                )
        out.append(total)
    return out


def cor1_rhs(
    ks: Sequence[int], x: Fraction | int, params: LogParams, order: int
) -> list[Fraction]:
    """Registered identity cor1, right side: sum_i C(n,i) r^{n-i} E_i(a,b) x^{n-i}."""
    r = len(validate_kvector(ks))
    x = Fraction(x)
    ab = multi_poly_euler_ab(ks, params, order)
    return [
        sum(
            (comb(n, i) * Fraction(r) ** (n - i) * ab[i] * x ** (n - i) for i in range(n + 1)),
            Fraction(0),
        )
        for n in range(order + 1)
    ]


def combined_rhs(
    ks: Sequence[int], x: Fraction | int, params: LogParams, order: int
) -> list[Fraction]:
    """Registered identity "combined": the double sum obtained by feeding the
    thm2 expansion into cor1.

    The inner term carries r^{n-j}; the printed source drops the r^{k-j}
    factor that the substitution produces (see combined_rhs_printed, which
    the audit keeps around to document the discrepancy).
    """
    r = len(validate_kvector(ks))
    x = Fraction(x)
    plain = multi_poly_euler(ks, Fraction(0), order)
    out = []
    for n in range(order + 1):
        total = Fraction(0)
        for k in range(n + 1):
            for j in range(k + 1):
                if plain[j]:
                    total += (
                        Fraction(r) ** (n - j)
                        * comb(n, k)
                        * comb(k, j)
                        * params.alpha ** (k - j)
                        * params.log_ab**j
                        * plain[j]
                        * x ** (n - k)
                    )
        out.append(total)
    return out


def combined_rhs_printed(
    ks: Sequence[int], x: Fraction | int, params: LogParams, order: int
) -> list[Fraction]:
    """The same double sum with r^{n-k} exactly as printed (audit instrument)."""
    r = len(validate_kvector(ks))
    x = Fraction(x)
    plain = multi_poly_euler(ks, Fraction(0), order)
    out = []
    for n in range(order + 1):
        total = Fraction(0)
        for k in range(n + 1):
            for j in range(k + 1):
                if plain[j]:
                    total += (
                        Fraction(r) ** (n - k)
                        * comb(n, k)
                        * comb(k, j)
                        * params.alpha ** (k - j)
                        * params.log_ab**j
                        * plain[j]
                        * x ** (n - k)
                    )
        out.append(total)
    return out


def addition_rhs(
    ks: Sequence[int],
    x: Fraction | int,
    y: Fraction | int,
    params: LogParams,
    order: int,
) -> list[Fraction]:
    """Registered identity cor2, right side: sum_k C(n,k) r^{n-k} E_k(x;a,b) y^{n-k}."""
    r = len(validate_kvector(ks))
    y = Fraction(y)
    base = multi_poly_euler_xab(ks, x, params, order)
    return [
        sum(
            (comb(n, k) * Fraction(r) ** (n - k) * base[k] * y ** (n - k) for k in range(n + 1)),
            Fraction(0),
        )
        for n in range(order + 1)
    ]


@dataclass(frozen=True)
class CappedSum:
    """Value of a capped formula evaluation plus the count of skipped terms
    (terms whose denominator would need division by zero)."""

    value: Fraction
    skipped_terms: int


@lru_cache(maxsize=None)
def _compositions(total: int, positions: int) -> tuple[tuple[int, ...], ...]:
    """All tuples of ``positions`` nonnegative integers summing to ``total``."""
    if positions == 1:
        return ((total,),)
    out = []
    for first in range(total + 1):
        for rest in _compositions(total - first, positions - 1):
            out.append((first,) + rest)
    return tuple(out)


def _index_tuple_weight(ms: tuple[int, ...], ks: KVector) -> Fraction | None:
    """1 / (m_1^{k_1} ... m_r^{k_r}) with 0^0 = 1; None when a zero index
    meets a positive exponent (the genuinely undefined case)."""
    weight = Fraction(1)
    for m, k in zip(ms, ks):
        if m == 0:
            if k > 0:
                return None
            if k < 0:
                weight *= 0
        else:
            weight /= Fraction(m) ** k
    return weight


def thm3_explicit(
    ks: Sequence[int],
    x: Fraction | int,
    n: int,
    m_cap: int,
    part_cap: int,
) -> CappedSum:
    """Capped evaluation of the registered quadruple-sum formula thm3.

    Index tuples run over 0 <= m_1 <= ... <= m_r <= m_cap (non-strict, from
    zero, exactly as stated) and compositions c_1 + c_2 + ... = r over part
    positions 1..part_cap.  The summand factors into an (m, j)-part and a
    composition part, which are summed separately; the grouping is exact.

    This is an audit instrument: the registry records how the value moves as
    the caps grow instead of asserting an equality.
    """
    ks = validate_kvector(ks)
    r = len(ks)
    x = Fraction(x)
    if part_cap < 1 or m_cap < 0 or n < 0:
        raise ValueError("caps must be positive and n nonnegative")

    comps = _compositions(r, part_cap)
    comp_sums = [Fraction(0)] * (n + 1)
    for comp in comps:
        w = sum((idx + 1) * c for idx, c in enumerate(comp))
        denom = 1
        for c in comp:
            denom *= factorial(c)
        sign = -1 if w % 2 else 1
        for i in range(n + 1):
            comp_sums[i] += Fraction(sign * w**i, denom)

    power_sums = [Fraction(0)] * (n + 1)
    skipped = 0
    for ms in combinations_with_replacement(range(m_cap + 1), r):
        weight = _index_tuple_weight(ms, ks)
        if weight is None:
            skipped += (ms[-1] + 1) * len(comps) * (n + 1)
            continue
        if weight == 0:
            continue
        m_r = ms[-1]
        for j in range(m_r + 1):
            factor = weight * comb(m_r, j) * (-1 if j % 2 else 1)
            base = Fraction(r) * x - j
            for e in range(n + 1):
                power_sums[e] += factor * base**e
    total = Fraction(0)
    for i in range(n + 1):
        total += 2 * factorial(r) * comb(n, i) * power_sums[n - i] * comp_sums[i]
    return CappedSum(total, skipped)


THM4_VARIANTS = ("statement", "proof")


def thm4_explicit(
    k: int,
    x: Fraction | int,
    params: LogParams,
    n: int,
    variant: str,
) -> CappedSum:
    """Finite triple-sum formula thm4, in both printed variants.

    The variants differ in the multiplier of ln b inside the n-th power:
    (m-j+i+1) for "statement", (m-j+i) for "proof".  Terms with j = 0 and
    k > 0 are skipped and tallied; for k <= 0 the j = 0 term is defined
    (0^0 = 1, and 1/0^k vanishes for negative k).
    """
    if variant not in THM4_VARIANTS:
        raise ValueError(f"variant must be one of {THM4_VARIANTS}, got {variant!r}")
    delta = 1 if variant == "statement" else 0
    x = Fraction(x)
    gamma = params.gamma if params.gamma is not None else Fraction(0)
    total = Fraction(0)
    skipped = 0
    for m in range(n + 1):
        for j in range(m + 1):
            for i in range(j + 1):
                if j == 0:
                    if k > 0:
                        skipped += 1
                        continue
                    inv_jk = Fraction(1) if k == 0 else Fraction(0)
                else:
                    inv_jk = 1 / Fraction(j) ** k
                if inv_jk == 0:
                    continue
                sign = -1 if (m - j + i) % 2 else 1
                base = (
                    x * gamma
                    - (m - j + i + 1) * params.alpha
                    - (m - j + i + delta) * params.beta
                )
                total += 2 * sign * inv_jk * comb(j, i) * base**n
    return CappedSum(total, skipped)
