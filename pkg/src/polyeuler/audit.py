"""Registry of claimed identities, each checked by exact coefficient comparison.

Every case compares two independently computed exact values over a finite,
fully enumerated grid and reports PASS, FAIL, or INCONCLUSIVE.  A handful of
registered claims are wrong as printed; those are whitelisted as expected
non-PASS results so the audit distinguishes "documented discrepancy" from
"regression".  INCONCLUSIVE is reserved for the one capped, divergent
formula (thm3-explicit) where no equality is asserted at all.

Randomized parameters are small seeded rationals; identical (seed, order)
inputs always produce an identical report, byte for byte.
"""

from __future__ import annotations

import hashlib
import json
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Mapping

from . import classical, multifamily, polyfamily
from .classical import EulerConvention
from .exact import egf_add, egf_exp_linear, egf_scale, format_rational
from .multifamily import LogParams

PASS = "PASS"
FAIL = "FAIL"
INCONCLUSIVE = "INCONCLUSIVE"

DEFAULT_ORDER = 10
DEFAULT_SEED = 0


class UnknownIdentity(KeyError):
    """Requested identity id (or variant) is not in the registry."""


@dataclass(frozen=True)
class IdentityCase:
    """One executable audit case: an identity id, optional variant, and the
    fully materialized parameter grid it will be checked on."""

    id: str
    variant: str | None
    grid: Mapping
    seed: int
    order: int


@dataclass(frozen=True)
class CaseResult:
    id: str
    variant: str | None
    grid_size: int
    verdict: str
    counterexample: dict | None
    notes: str

    @property
    def label(self) -> str:
        return self.id if self.variant is None else f"{self.id}[{self.variant}]"


@dataclass(frozen=True)
class AuditReport:
    seed: int
    order: int
    cases: tuple[CaseResult, ...]


# Documented discrepancies: these may be non-PASS without failing the run.
EXPECTED_NON_PASS: frozenset[tuple[str, str | None]] = frozenset(
    {
        ("eq2-power-sum", "minus"),
        ("eq9-cosh", None),
        ("combined", "as-printed"),
        ("thm3-explicit", None),
        ("thm4-explicit", "statement"),
        ("thm4-explicit", "proof"),
        ("def1-sasaki-bridge", None),
    }
)


def _derived_rng(seed: int, label: str) -> random.Random:
    digest = hashlib.sha256(f"{seed}:{label}".encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def _small_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-10, 10), rng.randint(1, 10))


def _shared_samples(seed: int, count: int = 25) -> tuple[tuple[Fraction, Fraction, Fraction, Fraction], ...]:
    """Seeded (alpha, beta, x, y) tuples with alpha + beta != 0, shared by all
    cases that run on the theorem grid so their sequences can be reused."""
    rng = _derived_rng(seed, "theorem-grid")
    samples = []
    while len(samples) < count:
        alpha, beta = _small_rational(rng), _small_rational(rng)
        if alpha + beta == 0:
            continue
        samples.append((alpha, beta, _small_rational(rng), _small_rational(rng)))
    return tuple(samples)


def _theorem_kvectors() -> tuple[tuple[int, ...], ...]:
    return tuple(ks for r in (1, 2, 3) for ks in product((-1, 1, 2), repeat=r))


def _fmt_params(params: Mapping) -> dict:
    out = {}
    for key, value in params.items():
        if isinstance(value, Fraction):
            out[key] = format_rational(value)
        elif isinstance(value, tuple):
            out[key] = list(value)
        else:
            out[key] = value
    return out


def _compare_grid(
    case: IdentityCase,
    points,
    expected_fn: Callable,
    actual_fn: Callable,
    notes_pass: str,
    notes_fail: str,
) -> CaseResult:
    """Walk the grid in order; report the first mismatch if any."""
    grid_size = 0
    first = None
    for point in points:
        grid_size += 1
        expected = expected_fn(point)
        actual = actual_fn(point)
        if expected != actual and first is None:
            first = {
                "params": _fmt_params(point),
                "expected": format_rational(expected),
                "actual": format_rational(actual),
            }
    if first is None:
        return CaseResult(case.id, case.variant, grid_size, PASS, None, notes_pass)
    return CaseResult(case.id, case.variant, grid_size, FAIL, first, notes_fail)


def _compare_sequence_grid(
    case: IdentityCase,
    points,
    n_max: int,
    expected_fn: Callable,
    actual_fn: Callable,
    notes_pass: str,
    notes_fail: str,
) -> CaseResult:
    """Like _compare_grid, but both sides produce whole sequences per point,
    so each sequence pair is computed once and compared index by index."""
    grid_size = 0
    first = None
    for point in points:
        expected = expected_fn(point)
        actual = actual_fn(point)
        for n in range(n_max + 1):
            grid_size += 1
            if expected[n] != actual[n] and first is None:
                first = {
                    "params": _fmt_params({**point, "n": n}),
                    "expected": format_rational(expected[n]),
                    "actual": format_rational(actual[n]),
                }
    if first is None:
        return CaseResult(case.id, case.variant, grid_size, PASS, None, notes_pass)
    return CaseResult(case.id, case.variant, grid_size, FAIL, first, notes_fail)


# --- individual case runners -------------------------------------------------


def _run_eq2(case: IdentityCase) -> CaseResult:
    sign = case.variant
    points = [{"m": m, "n": n} for m in range(case.grid["m_max"] + 1) for n in range(case.grid["n_max"] + 1)]
    notes_pass = "closed form with B_1 = +1/2 reproduces every direct power sum"
    notes_fail = (
        "documented convention clash: with B_1 = -1/2 the closed form yields the "
        "sum shifted by one (it equals S_m(n-1) for every m >= 1)"
    )
    return _compare_grid(
        case,
        points,
        lambda p: Fraction(classical.power_sum(p["m"], p["n"])),
        lambda p: classical.power_sum_closed(p["m"], p["n"], sign),
        notes_pass,
        notes_fail,
    )


def _run_eq3(case: IdentityCase) -> CaseResult:
    series = classical.bernoulli_numbers(case.grid["n_max"])
    points = [{"n": n} for n in range(1, case.grid["n_max"] + 1)]
    return _compare_grid(
        case,
        points,
        lambda p: series[p["n"]],
        lambda p: classical.bernoulli_det(p["n"]),
        "determinant form agrees with the t/(e^t-1) series",
        "determinant form disagrees with the t/(e^t-1) series",
    )


def _run_eq6(case: IdentityCase) -> CaseResult:
    series = classical.euler_numbers(2 * case.grid["n_max"], EulerConvention.SECANT_TYPE)
    points = [{"n": n} for n in range(1, case.grid["n_max"] + 1)]
    return _compare_grid(
        case,
        points,
        lambda p: series[2 * p["n"]],
        lambda p: classical.euler_det(p["n"]),
        "determinant form agrees with the 1/cosh t series at even indices",
        "determinant form disagrees with the 1/cosh t series",
    )


def _run_eq9(case: IdentityCase) -> CaseResult:
    order = case.grid["n_max"]
    cosh = egf_scale(egf_add(egf_exp_linear(1, order), egf_exp_linear(-1, order)), Fraction(1, 2))
    secant = classical.euler_numbers(order, EulerConvention.SECANT_TYPE)
    points = [{"n": n} for n in range(order + 1)]
    return _compare_grid(
        case,
        points,
        lambda p: secant[p["n"]],
        lambda p: cosh.coeffs[p["n"]],
        "cosh t expands to the secant numbers",
        "documented misprint: the relation holds for 1/cosh t, not cosh t; "
        "the secant convention follows the determinant values",
    )


def _run_bridge(case: IdentityCase) -> CaseResult:
    n_max = case.grid["n_max"]
    xs = case.grid["x_points"]
    polys = [classical.bernoulli_polynomial(n, n_max) for n in range(n_max + 1)]
    left = {x: polyfamily.poly_bernoulli(1, -x, n_max) for x in xs}
    points = [{"n": n, "x": x} for n in range(n_max + 1) for x in xs]
    return _compare_grid(
        case,
        points,
        lambda p: classical.poly_eval(polys[p["n"]], p["x"]),
        lambda p: (-1) ** p["n"] * left[p["x"]][p["n"]],
        "(-1)^n B_n^{(1)}(-x) matches B_n(x) at more sample points than the degree",
        "(-1)^n B_n^{(1)}(-x) differs from B_n(x)",
    )


def _run_brewbaker(case: IdentityCase) -> CaseResult:
    points = [{"rows": n, "cols": k} for (n, k) in case.grid["shapes"]]
    return _compare_grid(
        case,
        points,
        lambda p: Fraction(polyfamily.lonesum_count(p["rows"], p["cols"])),
        lambda p: polyfamily.poly_bernoulli(-p["cols"], 0, p["rows"])[p["rows"]],
        "negative-index values equal the lonesum matrix counts "
        "(enumeration is the ground truth)",
        "negative-index values disagree with the lonesum matrix counts",
    )


def _theorem_points(case: IdentityCase) -> list[dict]:
    return [
        {"ks": ks, "alpha": s[0], "beta": s[1], "x": s[2], "y": s[3]}
        for ks in case.grid["kvectors"]
        for s in case.grid["samples"]
    ]


def _run_thm1(case: IdentityCase) -> CaseResult:
    n_max = case.grid["n_max"]
    return _compare_sequence_grid(
        case,
        _theorem_points(case),
        n_max,
        lambda p: multifamily.multi_poly_euler_ab(p["ks"], LogParams(p["alpha"], p["beta"]), n_max),
        lambda p: multifamily.thm1_rhs(p["ks"], LogParams(p["alpha"], p["beta"]), n_max),
        "two-parameter numbers equal the rescaled polynomial values",
        "two-parameter numbers disagree with the rescaled polynomial values",
    )


def _run_thm2(case: IdentityCase) -> CaseResult:
    n_max = case.grid["n_max"]
    return _compare_sequence_grid(
        case,
        _theorem_points(case),
        n_max,
        lambda p: multifamily.multi_poly_euler_ab(p["ks"], LogParams(p["alpha"], p["beta"]), n_max),
        lambda p: multifamily.thm2_rhs(p["ks"], LogParams(p["alpha"], p["beta"]), n_max),
        "two-parameter numbers equal the binomial mix of the plain numbers",
        "two-parameter numbers disagree with the binomial mix of the plain numbers",
    )


def _run_cor1(case: IdentityCase) -> CaseResult:
    n_max = case.grid["n_max"]
    return _compare_sequence_grid(
        case,
        _theorem_points(case),
        n_max,
        lambda p: multifamily.multi_poly_euler_xab(
            p["ks"], p["x"], LogParams(p["alpha"], p["beta"]), n_max
        ),
        lambda p: multifamily.cor1_rhs(p["ks"], p["x"], LogParams(p["alpha"], p["beta"]), n_max),
        "polynomial values expand binomially over the two-parameter numbers",
        "binomial expansion over the two-parameter numbers fails",
    )


def _run_combined(case: IdentityCase) -> CaseResult:
    n_max = case.grid["n_max"]
    rhs = (
        multifamily.combined_rhs_printed
        if case.variant == "as-printed"
        else multifamily.combined_rhs
    )
    notes_pass = "double sum with the substituted exponent r^{n-j} matches the polynomial values"
    notes_fail = (
        "documented misprint: the printed double sum carries r^{n-k}, but "
        "substituting the thm2 expansion into cor1 produces r^{n-j}; the "
        "repaired variant passes"
    )
    return _compare_sequence_grid(
        case,
        _theorem_points(case),
        n_max,
        lambda p: multifamily.multi_poly_euler_xab(
            p["ks"], p["x"], LogParams(p["alpha"], p["beta"]), n_max
        ),
        lambda p: rhs(p["ks"], p["x"], LogParams(p["alpha"], p["beta"]), n_max),
        notes_pass,
        notes_fail,
    )


def _run_cor2(case: IdentityCase) -> CaseResult:
    n_max = case.grid["n_max"]
    return _compare_sequence_grid(
        case,
        _theorem_points(case),
        n_max,
        lambda p: multifamily.multi_poly_euler_xab(
            p["ks"], p["x"] + p["y"], LogParams(p["alpha"], p["beta"]), n_max
        ),
        lambda p: multifamily.addition_rhs(
            p["ks"], p["x"], p["y"], LogParams(p["alpha"], p["beta"]), n_max
        ),
        "shifting the argument by y matches the binomial addition expansion",
        "the binomial addition expansion fails",
    )


def _run_thm3(case: IdentityCase) -> CaseResult:
    lines = []
    grid_size = 0
    for ks in case.grid["kvectors"]:
        for x in case.grid["x_points"]:
            for n in case.grid["n_points"]:
                reference = multifamily.multi_poly_euler(ks, x, n)[n]
                for m_cap in case.grid["caps"]:
                    for part_cap in case.grid["caps"]:
                        grid_size += 1
                        result = multifamily.thm3_explicit(ks, x, n, m_cap, part_cap)
                        lines.append(
                            f"ks={','.join(map(str, ks))} x={x} n={n} "
                            f"m_cap={m_cap} part_cap={part_cap}: "
                            f"partial={result.value} skipped={result.skipped_terms} "
                            f"series={reference}"
                        )
    notes = (
        "capped partial sums of the printed quadruple-sum formula; the "
        "rearranged geometric expansion it relies on does not converge "
        "termwise, so no equality is asserted | " + " | ".join(lines)
    )
    return CaseResult(case.id, case.variant, grid_size, INCONCLUSIVE, None, notes)


def _run_thm4(case: IdentityCase) -> CaseResult:
    n_max = case.grid["n_max"]
    points = [
        {"k": k, "alpha": s[0], "beta": s[1], "gamma": s[2], "x": s[3]}
        for k in case.grid["k_points"]
        for s in case.grid["samples"]
    ]
    notes_pass = "triple-sum formula reproduces the three-parameter series values"
    notes_fail = (
        "triple-sum formula (variant "
        f"{case.variant}) does not reproduce the three-parameter series; the "
        "truncation of the divergent rearrangement to m <= n is not justified"
    )
    return _compare_sequence_grid(
        case,
        points,
        n_max,
        lambda p: multifamily.poly_euler_abc(
            p["k"], p["x"], LogParams(p["alpha"], p["beta"], p["gamma"]), n_max
        ),
        lambda p: [
            multifamily.thm4_explicit(
                p["k"], p["x"], LogParams(p["alpha"], p["beta"], p["gamma"]), n, case.variant
            ).value
            for n in range(n_max + 1)
        ],
        notes_pass,
        notes_fail,
    )


def _run_def1_sasaki(case: IdentityCase) -> CaseResult:
    n_max = case.grid["n_max"]
    grid_size = 0
    first = None
    lines = []
    for k in case.grid["k_points"]:
        scaled = [
            Fraction(4) ** n * v
            for n, v in enumerate(polyfamily.poly_euler(k, Fraction(1, 2), n_max))
        ]
        sasaki = polyfamily.poly_euler_sasaki(k, n_max)
        # The claimed bridge: one constant relating the substituted values to
        # the 4t-cosh-t numbers.  Probe every constant candidate ratio.
        pairs = ", ".join(f"n={n}: {scaled[n]} vs {sasaki[n]}" for n in range(n_max + 1))
        lines.append(f"k={k}: {pairs}")
        candidates = {
            scaled[n] / sasaki[n] for n in range(n_max + 1) if sasaki[n] != 0
        }
        constant = next(iter(candidates)) if len(candidates) == 1 else None
        for n in range(n_max + 1):
            grid_size += 1
            ok = constant is not None and scaled[n] == constant * sasaki[n]
            if not ok and first is None:
                first = {
                    "params": {"k": k, "n": n},
                    "expected": format_rational(sasaki[n]),
                    "actual": format_rational(scaled[n]),
                }
    if first is None:
        return CaseResult(
            case.id, case.variant, grid_size, PASS, None, "a single constant relates the sequences"
        )
    notes = (
        "no constant multiple relates the substituted values (t -> 4t, "
        "x = 1/2, scaled by 4^n) to the 4t-cosh-t numbers; side-by-side "
        "values | " + " | ".join(lines)
    )
    return CaseResult(case.id, case.variant, grid_size, FAIL, first, notes)


_RUNNERS: dict[str, Callable[[IdentityCase], CaseResult]] = {
    "eq2-power-sum": _run_eq2,
    "eq3-bernoulli-det": _run_eq3,
    "eq6-euler-det": _run_eq6,
    "eq9-cosh": _run_eq9,
    "bridge-poly-bernoulli": _run_bridge,
    "brewbaker-lonesum": _run_brewbaker,
    "thm1": _run_thm1,
    "thm2": _run_thm2,
    "cor1": _run_cor1,
    "cor2": _run_cor2,
    "combined": _run_combined,
    "thm3-explicit": _run_thm3,
    "thm4-explicit": _run_thm4,
    "def1-sasaki-bridge": _run_def1_sasaki,
}

_BRIDGE_X_POINTS = tuple(
    Fraction(v) for v in (0, 1, -1, 2, -2, 3, -3, 4, -4, 5, -5, Fraction(1, 2), Fraction(-1, 2))
)


def build_registry(seed: int = DEFAULT_SEED, order: int = DEFAULT_ORDER) -> list[IdentityCase]:
    """Materialize every registered case with concrete, finite grids.

    Grids that compare series prefixes scale with ``order`` so that a lower
    order audits a prefix of the higher-order grid.
    """
    samples = _shared_samples(seed)
    kvectors = _theorem_kvectors()
    theorem_grid = {
        "kvectors": kvectors,
        "samples": samples,
        "n_max": min(10, order),
    }
    rng4 = _derived_rng(seed, "thm4-grid")
    thm4_samples = tuple(
        (alpha, beta, _small_rational(rng4), _small_rational(rng4))
        for alpha, beta, _, _ in _shared_samples(seed, 5)
    )
    cases = [
        IdentityCase("eq2-power-sum", "plus", {"m_max": 8, "n_max": 20}, seed, order),
        IdentityCase("eq2-power-sum", "minus", {"m_max": 8, "n_max": 20}, seed, order),
        IdentityCase("eq3-bernoulli-det", None, {"n_max": min(10, order)}, seed, order),
        IdentityCase("eq6-euler-det", None, {"n_max": min(6, order // 2)}, seed, order),
        IdentityCase("eq9-cosh", None, {"n_max": order}, seed, order),
        IdentityCase(
            "bridge-poly-bernoulli",
            None,
            {"n_max": min(12, order), "x_points": _BRIDGE_X_POINTS},
            seed,
            order,
        ),
        IdentityCase(
            "brewbaker-lonesum",
            None,
            {"shapes": tuple((n, k) for n in (1, 2, 3) for k in (1, 2, 3)) + ((4, 4),)},
            seed,
            order,
        ),
        IdentityCase("thm1", None, theorem_grid, seed, order),
        IdentityCase("thm2", None, theorem_grid, seed, order),
        IdentityCase("cor1", None, theorem_grid, seed, order),
        IdentityCase("cor2", None, theorem_grid, seed, order),
        IdentityCase("combined", None, theorem_grid, seed, order),
        IdentityCase("combined", "as-printed", theorem_grid, seed, order),
        IdentityCase(
            "thm3-explicit",
            None,
            {
                "kvectors": ((1,), (2,), (1, 1)),
                "x_points": (Fraction(0), Fraction(1, 2)),
                "n_points": (0, 1, 2),
                "caps": (4, 8, 12),
            },
            seed,
            order,
        ),
        IdentityCase(
            "thm4-explicit",
            "statement",
            {"k_points": (-1, 1, 2), "samples": thm4_samples, "n_max": min(6, order)},
            seed,
            order,
        ),
        IdentityCase(
            "thm4-explicit",
            "proof",
            {"k_points": (-1, 1, 2), "samples": thm4_samples, "n_max": min(6, order)},
            seed,
            order,
        ),
        IdentityCase(
            "def1-sasaki-bridge",
            None,
            {"k_points": (1, 2, 3), "n_max": min(8, order)},
            seed,
            order,
        ),
    ]
    return cases


def registered_ids() -> tuple[str, ...]:
    return tuple(sorted(_RUNNERS))


def run_identity(case: IdentityCase) -> CaseResult:
    """Execute one case; deterministic given the case's grid."""
    runner = _RUNNERS.get(case.id)
    if runner is None:
        raise UnknownIdentity(case.id)
    return runner(case)


def is_expected(result: CaseResult) -> bool:
    """PASS, or a non-PASS verdict that is whitelisted as documented."""
    return result.verdict == PASS or (result.id, result.variant) in EXPECTED_NON_PASS


def run_all(seed: int = DEFAULT_SEED, order: int = DEFAULT_ORDER) -> AuditReport:
    """Run every registered case; results are sorted by (id, variant)."""
    results = [run_identity(case) for case in build_registry(seed, order)]
    results.sort(key=lambda r: (r.id, r.variant or ""))
    return AuditReport(seed, order, tuple(results))


def report_ok(report: AuditReport) -> bool:
    return all(is_expected(result) for result in report.cases)


def report_to_json(report: AuditReport) -> str:
    obj = {
        "seed": report.seed,
        "order": report.order,
        "cases": [
            {
                "id": r.id,
                "variant": r.variant,
                "grid_size": r.grid_size,
                "verdict": r.verdict,
                "counterexample": r.counterexample,
                "notes": r.notes,
            }
            for r in report.cases
        ],
    }
    return json.dumps(obj, indent=2) + "\n"
