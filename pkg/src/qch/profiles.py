"""Warping profiles meeting the boundary curvature conditions.

A profile is a radius function r on [0, L] with r(0) = r0 > 0, r' > 0 on the
open interval, r'(0) = r'(L) = 0, and the endpoint conditions
2 r(0) r''(0) = s and 2 r(L) r''(L) = -s, where s = 2k/n is set by the factor
curvature k and the complex dimension n.  The associated fiber scale is
f = 2 r r' / s.

The derivative is taken as the quartic ansatz r'(t) = t (L - t) (g0 + g1 t):
the left condition fixes g0 = s / (2 r0 L), and the right condition is a
quadratic in g1 whose admissible root (r' > 0 inside) is selected
deterministically.  The curvature combination a + b/2 carried by the profile
is -4 r''/r; it is negative at 0, positive at L, and changes sign inside.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

__all__ = [
    "Profile",
    "ProfileSample",
    "ProfileReport",
    "NoAdmissibleRootError",
    "solve_profile",
    "eval_profile",
    "ab2",
    "ab2_alternate",
    "profile_report",
]

_BISECT_TOL = 1e-12


class NoAdmissibleRootError(RuntimeError):
    """The boundary quadratic has no root keeping r' positive inside (0, L)."""


@dataclass(frozen=True)
class Profile:
    """A solved profile; gamma0 and gamma1 pin the quartic ansatz."""

    r0: float
    L: float
    s: float
    gamma0: float
    gamma1: float
    k: int
    n: int


class ProfileSample(NamedTuple):
    r: float
    r_prime: float
    r_second: float
    f: float
    f_prime: float


@dataclass(frozen=True, eq=False)
class ProfileReport:
    """Grid view of the curvature combination along a profile."""

    grid: np.ndarray
    ab2_values: np.ndarray
    sign_change_points: tuple[float, ...]
    boundary_residuals: tuple[float, float]


def solve_profile(r0: float, L: float, k: int, n: int) -> Profile:
    """Solve the endpoint conditions for the quartic ansatz.

    Returns the profile with the admissible quadratic root; among two
    admissible roots the one of smaller magnitude wins (ties break toward the
    larger root).  Raises ``ValueError`` on bad parameters and
    :class:`NoAdmissibleRootError` if no root keeps r' > 0 on (0, L).
    """
    if not (math.isfinite(r0) and r0 > 0):
        raise ValueError("r0 must be a positive finite number")
    if not (math.isfinite(L) and L > 0):
        raise ValueError("L must be a positive finite number")
    if int(k) != k or k < 1:
        raise ValueError("factor curvature index k must be an integer >= 1")
    if int(n) != n or n < 2:
        raise ValueError("complex dimension n must be an integer >= 2")
    k, n = int(k), int(n)

    s = 2.0 * k / n
    g0 = s / (2.0 * r0 * L)

    # r(L) = A + B*g1 and r''(L) = -(C + D*g1); the right-hand condition
    # 2 r(L) r''(L) = -s becomes q(g1) = 2 (A + B g1)(C + D g1) - s = 0.
    a_ = r0 + g0 * L**3 / 6.0
    b_ = L**4 / 12.0
    c_ = g0 * L
    d_ = L**2
    q2 = 2.0 * b_ * d_
    q1 = 2.0 * (a_ * d_ + b_ * c_)
    q0 = g0 * g0 * L**4 / 3.0  # equals 2*A*C - s exactly, without cancellation

    disc = q1 * q1 - 4.0 * q2 * q0
    if disc < 0.0:
        raise NoAdmissibleRootError("boundary quadratic has no real root")
    sq = math.sqrt(disc)
    root_far = (-q1 - sq) / (2.0 * q2)
    root_near = -2.0 * q0 / (q1 + sq)  # stable form of the root nearer zero

    def residual(g1: float) -> float:
        return 2.0 * (a_ + b_ * g1) * (c_ + d_ * g1) - s

    def residual_prime(g1: float) -> float:
        return 2.0 * (b_ * (c_ + d_ * g1) + d_ * (a_ + b_ * g1))

    admissible = [g1 for g1 in (root_near, root_far) if g0 + g1 * L >= 0.0]
    if not admissible:
        raise NoAdmissibleRootError(
            f"no quadratic root keeps r' > 0 on (0, {L}); roots {root_near}, {root_far}"
        )
    g1 = min(admissible, key=lambda x: (abs(x), -x))
    for _ in range(2):  # Newton polish against the boundary residual
        slope = residual_prime(g1)
        if slope == 0.0:
            break
        g1 -= residual(g1) / slope
    if g0 + g1 * L < 0.0:  # polish must not cross the admissibility line
        g1 = -g0 / L
    return Profile(r0=float(r0), L=float(L), s=s, gamma0=g0, gamma1=float(g1), k=k, n=n)


def _domain(profile: Profile, t, lo: float, hi: float):
    arr = np.asarray(t, dtype=float)
    if np.any(arr < lo) or np.any(arr > hi):
        raise ValueError(f"t must lie in [{lo}, {hi}] for this profile")
    return arr


def eval_profile(profile: Profile, t):
    """Sample (r, r', r'', f, f') at ``t`` (scalar or array) in [0, L]."""
    arr = _domain(profile, t, 0.0, profile.L)
    g0, g1, L, s = profile.gamma0, profile.gamma1, profile.L, profile.s
    r = profile.r0 + g0 * L * arr**2 / 2.0 + (g1 * L - g0) * arr**3 / 3.0 - g1 * arr**4 / 4.0
    rp = arr * (L - arr) * (g0 + g1 * arr)
    rpp = g0 * L + 2.0 * (g1 * L - g0) * arr - 3.0 * g1 * arr**2
    f = 2.0 * r * rp / s
    fp = 2.0 * (rp * rp + r * rpp) / s
    if arr.ndim == 0:
        return ProfileSample(float(r), float(rp), float(rpp), float(f), float(fp))
    return ProfileSample(r, rp, rpp, f, fp)


def ab2(profile: Profile, t):
    """The curvature combination a + b/2 along the profile: -4 r''/r."""
    sample = eval_profile(profile, t)
    out = -4.0 * np.asarray(sample.r_second) / np.asarray(sample.r)
    return float(out) if out.ndim == 0 else out


def ab2_alternate(profile: Profile, t, eps: float | None = None):
    """First-form evaluation 4 ((r'/r)^2 - f' r' / (r f)).

    Valid only away from the endpoints, where f vanishes; ``eps`` is the
    exclusion margin (default L * 1e-3) and out-of-margin input raises.
    """
    if eps is None:
        eps = profile.L * 1e-3
    if not (math.isfinite(eps) and eps > 0):
        raise ValueError("eps must be a positive margin")
    arr = _domain(profile, t, eps, profile.L - eps)
    sample = eval_profile(profile, arr)
    r, rp, f, fp = (np.asarray(v) for v in (sample.r, sample.r_prime, sample.f, sample.f_prime))
    out = 4.0 * ((rp / r) ** 2 - fp * rp / (r * f))
    return float(out) if out.ndim == 0 else out


def _bisect_sign_change(profile: Profile, lo: float, hi: float) -> float:
    flo = ab2(profile, lo)
    while hi - lo > _BISECT_TOL:
        mid = 0.5 * (lo + hi)
        fmid = ab2(profile, mid)
        if fmid == 0.0:
            return mid
        if (flo < 0.0) == (fmid < 0.0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def profile_report(profile: Profile, grid_size: int = 1000) -> ProfileReport:
    """Uniform-grid report: ab2 samples, bisected sign changes, and the
    endpoint condition residuals."""
    if int(grid_size) != grid_size or grid_size < 3:
        raise ValueError("grid_size must be an integer >= 3")
    grid = np.linspace(0.0, profile.L, int(grid_size))
    values = ab2(profile, grid)

    points: list[float] = []
    for i in range(len(grid) - 1):
        lo, hi = values[i], values[i + 1]
        if lo == 0.0:
            if not points or abs(points[-1] - grid[i]) > _BISECT_TOL:
                points.append(float(grid[i]))
        elif lo * hi < 0.0:
            points.append(_bisect_sign_change(profile, float(grid[i]), float(grid[i + 1])))
    if values[-1] == 0.0:
        points.append(float(grid[-1]))

    left = eval_profile(profile, 0.0)
    right = eval_profile(profile, profile.L)
    residuals = (
        abs(2.0 * left.r * left.r_second - profile.s),
        abs(2.0 * right.r * right.r_second + profile.s),
    )
    return ProfileReport(
        grid=grid,
        ab2_values=values,
        sign_change_points=tuple(points),
        boundary_residuals=residuals,
    )
