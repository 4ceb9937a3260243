"""Deterministic self-checks and seeded random kernel trials used by ``colorkernel selftest``."""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from typing import Callable

from .dimacs import format_dimacs, format_modulator
from .field import PrimeField
from .generator import GenSpec, generate_instance
from .kernelizer import KernelInstance, kernelize
from .oracle import enumerate_colored_matrices, is_q_colorable
from .palette import (
    Palette,
    PaletteError,
    construct_palette,
    construct_vandermonde,
    forbidden_alphas,
    last_column_coordinates,
    palette_exists,
    search_palettes,
    verify_palette,
)
from .polyring import build_f, build_g, build_h

DENSITIES = (0.2, 0.5, 0.8)


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int = 0
    detail: str = ""
    replay: list[str] = dc_field(default_factory=list)


def palette_table(qs=range(2, 9), primes=(2, 3, 5)) -> CheckResult:
    cases = 0
    for q in qs:
        for p in primes:
            cases += 1
            F = PrimeField(p)
            try:
                P = construct_palette(q, F)
                built = verify_palette(P.columns, F).passed
            except PaletteError:
                built = False
            if built != palette_exists(q, p):
                return CheckResult("palette-table", False, cases, f"q={q} p={p}: constructed={built}")
    found = next(search_palettes(3, PrimeField(2)), None)
    if found is not None:
        return CheckResult("palette-table", False, cases, f"exhaustive search found {found} for q=3 over GF(2)")
    return CheckResult("palette-table", True, cases + 1)


def palettes_for(q: int) -> list[Palette]:
    """Both constructions; the Vandermonde one over the smallest prime >= max(q, 3)."""
    p = next(p for p in (3, 5, 7, 11, 13) if p >= q)
    return [construct_palette(q, PrimeField(3)), construct_vandermonde(q, PrimeField(p))]


def zero_pattern(q: int) -> CheckResult:
    cases = 0
    for P in palettes_for(q):
        a = list(range(q))
        f = build_f(q, P, a)
        g = build_g(q, P, a[:-1])
        xs, ys = list(range(q - 1)), list(range(q - 1, 2 * q - 2))
        h = build_h(q, P, xs, ys)
        checks: list[tuple[str, object, int, Callable[[list[int]], bool]]] = [
            ("f", f, q, lambda cs: len(set(cs)) < len(cs)),
            ("g", g, q - 1, lambda cs: len(set(cs)) < len(cs)),
            (
                "h",
                h,
                2 * q - 2,
                lambda cs: len(set(cs[: q - 1])) < q - 1 or set(cs[: q - 1]) != set(cs[q - 1:]),
            ),
        ]
        for name, poly, cols, vanishes in checks:
            for M in enumerate_colored_matrices(P, cols):
                cases += 1
                columns = M.columns()
                colors = [P.color_of(col) for col in columns]
                value = poly.evaluate(dict(enumerate(columns)))
                if (value == 0) != vanishes(colors):
                    return CheckResult(
                        f"zero-pattern q={q}", False, cases,
                        f"{name} over {P.construction}/GF({P.field.p}) at colors {colors}: value {value}",
                    )
    return CheckResult(f"zero-pattern q={q}", True, cases)


def degrees(q: int) -> CheckResult:
    for P in palettes_for(q):
        f = build_f(q, P, list(range(q)))
        g = build_g(q, P, list(range(q - 1)))
        h = build_h(q, P, list(range(q - 1)), list(range(q - 1, 2 * q - 2)))
        got = (f.degree, g.degree, h.degree)
        if got != (q - 1, q - 2, 2 * q - 3):
            return CheckResult(f"degrees q={q}", False, 3, f"{P.construction}: {got}")
    return CheckResult(f"degrees q={q}", True, 3 * 2)


def truncated_solution(q: int) -> CheckResult:
    cases = 0
    for p in (3, 5):
        F = PrimeField(p)
        for alpha in range(p):
            if alpha in forbidden_alphas(q, F):
                continue
            cases += 1
            x = last_column_coordinates(construct_palette(q, F, alpha))
            expected = tuple(v % p for v in (4 - q - alpha, alpha, *([1] * (q - 3))))
            if x != expected or 0 in x:
                return CheckResult(f"truncated-system q={q}", False, cases, f"p={p} alpha={alpha}: {x}")
    return CheckResult(f"truncated-system q={q}", True, cases)


def trial_spec(q: int, index: int, rng: random.Random) -> GenSpec:
    n_max, k_max = (14, 6) if q <= 3 else (12, 5)
    k = rng.randint(2, k_max)
    n = rng.randint(k + 2, n_max)
    density = DENSITIES[index % len(DENSITIES)]
    return GenSpec(n, k, q, density, density, rng.uniform(0.4, 1.0), rng.getrandbits(63))


def kernel_trials(q: int, trials: int, seed: int) -> CheckResult:
    rng = random.Random(seed * 1000003 + q)
    for i in range(trials):
        spec = trial_spec(q, i, rng)
        G, X = generate_instance(spec)
        result = kernelize(KernelInstance(G, X, q))
        before = is_q_colorable(G, q).colorable
        after = is_q_colorable(result.G_prime, q).colorable
        if before != after:
            return CheckResult(
                f"kernel-trials q={q}", False, i + 1,
                f"{spec}: G colorable={before}, kernel colorable={after}",
                replay=[format_dimacs(G, [f"q {q}", f"spec {spec}"]), format_modulator(X)],
            )
    return CheckResult(f"kernel-trials q={q}", True, trials)


def run_selftest(qs=(3, 4), trials: int = 200, seed: int = 0) -> list[CheckResult]:
    results = [palette_table()]
    for q in qs:
        results.append(truncated_solution(q))
        results.append(degrees(q))
        results.append(zero_pattern(q))
    if trials:
        for q in qs:
            results.append(kernel_trials(q, trials, seed))
    return results
