"""Named, tolerance-checked propositions about the curvature model algebra.

Each verifier returns :class:`CheckResult` records with the measured sup-norm
defect, the effective tolerance, and a verdict; a result passes exactly when
``max_defect <= tolerance``.  Equality checks between two nonzero products
guard against vacuous passes by requiring the left side to be comfortably
nonzero first (a failed guard reports an infinite defect rather than a
spurious pass).  All randomness is seeded PCG64, so identical inputs and
seeds reproduce identical results.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .curvature import (
    CurvatureTensor,
    QCHCoefficients,
    build_phi,
    build_pi,
    build_psi,
    combine,
    hol_sect,
    product_curvature,
)
from .derivation import curv_dot
from .spaces import HermitianSpace, make_space, project_D, random_adapted_change
from .tensors import Tensor, max_abs

__all__ = [
    "CheckResult",
    "verify_multiplication_table",
    "verify_eq32",
    "verify_theorem1",
    "verify_product_route",
    "run_suite",
]


@dataclass(frozen=True)
class CheckResult:
    name: str
    n: int
    seed: int
    max_defect: float
    tolerance: float
    passed: bool
    elapsed: float


def _result(name: str, space: HermitianSpace, seed: int, defect: float,
            tolerance: float, started: float) -> CheckResult:
    return CheckResult(
        name=name,
        n=space.n,
        seed=seed,
        max_defect=float(defect),
        tolerance=float(tolerance),
        passed=bool(defect <= tolerance),
        elapsed=time.perf_counter() - started,
    )


def _blocks(space: HermitianSpace, seed: int, phi_noise: float):
    pi = build_pi(space)
    phi = build_phi(space)
    psi = build_psi(space)
    if phi_noise:
        rng = np.random.default_rng(seed)
        noise = rng.uniform(-1.0, 1.0, size=phi.tensor.entries.shape)
        phi = CurvatureTensor(
            phi.tensor + phi_noise * Tensor(space.dim, (0, 4), noise), space
        )
    return pi, phi, psi


def verify_multiplication_table(
    space: HermitianSpace,
    tol: float = 1e-10,
    seed: int = 0,
    phi_noise: float = 0.0,
) -> list[CheckResult]:
    """The seven derivation products among the blocks.

    Five products vanish; the two survivors satisfy Pi.X = 2 Phi.X.  With
    ``phi_noise > 0`` a seeded uniform perturbation of that size is added to
    the mixed block first, which breaks the relations by about that amount
    (useful to confirm the checks can fail).
    """
    pi, phi, psi = _blocks(space, seed, phi_noise)
    results = []

    zero_cases = [
        ("table:pi.pi=0", pi, pi),
        ("table:phi.pi=0", phi, pi),
        ("table:psi.pi=0", psi, pi),
        ("table:psi.phi=0", psi, phi),
        ("table:psi.psi=0", psi, psi),
    ]
    for name, actor, target in zero_cases:
        started = time.perf_counter()
        defect = max_abs(curv_dot(actor, target))
        tol_eff = tol * (1.0 + max_abs(actor.tensor) * max_abs(target.tensor))
        results.append(_result(name, space, seed, defect, tol_eff, started))

    double_cases = [
        ("table:pi.phi=2phi.phi", phi),
        ("table:pi.psi=2phi.psi", psi),
    ]
    for name, target in double_cases:
        started = time.perf_counter()
        lhs = curv_dot(pi, target)
        rhs = curv_dot(phi, target)
        defect = max_abs(lhs - 2.0 * rhs)
        if max_abs(lhs) <= 10.0 * tol:  # vacuous comparison: report loudly
            defect = float("inf")
        tol_eff = tol * (1.0 + max_abs(pi.tensor) * max_abs(target.tensor))
        results.append(_result(name, space, seed, defect, tol_eff, started))
    return results


def verify_eq32(space: HermitianSpace, tol: float = 1e-10, seed: int = 0) -> list[CheckResult]:
    """The three coupled relations among the seven products."""
    pi, phi, psi = _blocks(space, seed, 0.0)
    results = []

    started = time.perf_counter()
    lhs = 2.0 * curv_dot(phi, phi)
    rhs = curv_dot(phi, pi) + curv_dot(pi, phi)
    defect = max_abs(lhs - rhs)
    if max_abs(lhs) <= 10.0 * tol:
        defect = float("inf")
    tol_eff = tol * (1.0 + max_abs(phi.tensor) ** 2)
    results.append(_result("eq32:2phi.phi=phi.pi+pi.phi", space, seed, defect, tol_eff, started))

    started = time.perf_counter()
    defect = max_abs(curv_dot(psi, psi))
    tol_eff = tol * (1.0 + max_abs(psi.tensor) ** 2)
    results.append(_result("eq32:psi.psi=0", space, seed, defect, tol_eff, started))

    started = time.perf_counter()
    lhs = curv_dot(psi, pi) + curv_dot(pi, psi)
    rhs = 2.0 * (curv_dot(phi, psi) + curv_dot(psi, phi))
    defect = max_abs(lhs - rhs)
    if max_abs(lhs) <= 10.0 * tol:
        defect = float("inf")
    tol_eff = tol * (1.0 + max_abs(pi.tensor) * max_abs(psi.tensor))
    results.append(
        _result("eq32:psi.pi+pi.psi=2(phi.psi+psi.phi)", space, seed, defect, tol_eff, started)
    )
    return results


def verify_theorem1(
    space: HermitianSpace,
    trials: int = 100,
    coeff_range: float = 5.0,
    tol: float = 1e-10,
    seed: int = 0,
) -> CheckResult:
    """R.R = (a + b/2) Pi.R over random coefficient draws.

    The recorded defect is the worst relative one,
    ``max_abs(R.R - f Pi.R) / (1 + max_abs(R.R))`` over all trials.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if coeff_range <= 0:
        raise ValueError("coeff_range must be positive")
    started = time.perf_counter()
    rng = np.random.default_rng(seed)
    pi = build_pi(space)
    worst = 0.0
    for _ in range(trials):
        a, b, c = rng.uniform(-coeff_range, coeff_range, size=3)
        r = combine(QCHCoefficients(a, b, c), space)
        rr = curv_dot(r, r)
        pi_r = curv_dot(pi, r)
        defect = max_abs(rr - (a + b / 2.0) * pi_r)
        worst = max(worst, defect / (1.0 + max_abs(rr)))
    return _result("theorem1:r.r=(a+b/2)pi.r", space, seed, worst, tol, started)


def verify_product_route(
    space: HermitianSpace,
    k: float,
    l: float,
    tol: float = 1e-10,
    seed: int = 0,
) -> list[CheckResult]:
    """The product construction against the combination picture.

    Checks, in order: the blockwise product curvature equals
    combine(k, -2k, l+k) entrywise; the two semisymmetric specializations
    (l = -k, and unit complement block with l = d - 1 for d = k + l) have
    vanishing R.R; and the holomorphic diagonal matches the displayed quartic
    at random unit vectors.
    """
    results = []
    product = product_curvature(k, l, space)

    started = time.perf_counter()
    combined = combine(QCHCoefficients(k, -2.0 * k, l + k), space)
    defect = max_abs(product.tensor - combined.tensor)
    results.append(
        _result("product:matches_combination", space, seed, defect,
                tol * (1.0 + abs(k) + abs(l)), started)
    )

    started = time.perf_counter()
    opposite = product_curvature(k, -k, space)
    defect = max_abs(curv_dot(opposite, opposite))
    results.append(
        _result("product:semisymmetric_opposite_plane", space, seed, defect,
                tol * (1.0 + k * k), started)
    )

    started = time.perf_counter()
    d_total = k + l
    unit_block = product_curvature(1.0, d_total - 1.0, space)
    defect = max_abs(curv_dot(unit_block, unit_block))
    results.append(
        _result("product:semisymmetric_unit_block", space, seed, defect,
                tol * (1.0 + d_total * d_total), started)
    )

    started = time.perf_counter()
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(20):
        x = rng.standard_normal(space.dim)
        x = x / np.sqrt(float(x @ space.g.entries @ x))
        _, t = project_D(space, x)
        expected = k - 2.0 * k * t**2 + (l + k) * t**4
        worst = max(worst, abs(hol_sect(product, x) - expected))
    results.append(
        _result("product:holomorphic_diagonal", space, seed, worst,
                tol * (1.0 + abs(k) + abs(l)), started)
    )
    return results


def run_suite(
    n_list: Sequence[int],
    seeds: Iterable[int],
    tol: float = 1e-10,
    trials: int = 100,
    coeff_range: float = 5.0,
    phi_noise: float = 0.0,
) -> list[CheckResult]:
    """Every verifier over the cartesian product of dimensions and seeds.

    For each pair the stage is a seeded random adapted frame, so the suite
    also exercises basis independence; the product-route factor curvatures
    are drawn from the same seeded stream.  An empty ``n_list`` yields an
    empty report.
    """
    results: list[CheckResult] = []
    seeds = list(seeds)
    for n in n_list:
        for seed in seeds:
            space = random_adapted_change(make_space(n), seed)
            rng = np.random.default_rng([seed, n])
            k, l = (float(x) for x in rng.uniform(-2.0, 2.0, size=2))
            results += verify_multiplication_table(space, tol, seed, phi_noise)
            results += verify_eq32(space, tol, seed)
            results.append(verify_theorem1(space, trials, coeff_range, tol, seed))
            results += verify_product_route(space, k, l, tol, seed)
    return results
