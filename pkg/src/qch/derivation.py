"""Derivation action of curvature operators on tensors.

A (0,4) curvature R assigns to each vector pair (U, V) the endomorphism
R(U, V) determined by g(R(U,V) X, W) = R(U, V, X, W).  Endomorphisms act on
tensors as derivations: zero on scalars, minus the slotwise substitution on
covariant slots, plus composition on the output slot.  Acting with every
basis pair at once yields a tensor with two extra covariant slots; the slot
order of the result is (original slots..., U, V).
"""

from __future__ import annotations

import warnings

import numpy as np

from .curvature import CurvatureTensor, build_pi, check_kahler_symmetries
from .tensors import Tensor, max_abs

__all__ = [
    "KahlerSymmetryWarning",
    "endo_derive",
    "curvature_operators",
    "curv_dot",
    "pseudosymmetry_defect",
]

_WARN_TOL = 1e-8


class KahlerSymmetryWarning(UserWarning):
    """Curvature input strays from the Kahler-type symmetries."""


def endo_derive(a: Tensor, t: Tensor) -> Tensor:
    """Derivation action of the endomorphism ``a`` on ``t``.

    For a (0,k) tensor:  (A . T)(X_1..X_k) = -sum_i T(X_1,.., A X_i,.., X_k).
    For a (1,k) tensor the leading term A(T(X_1..X_k)) is added, so the
    action is the commutator-style one and annihilates the identity.
    """
    if a.valence != (1, 1):
        raise ValueError("endo_derive needs a (1,1) tensor as the acting endomorphism")
    if a.dim != t.dim:
        raise ValueError("endomorphism dim does not match tensor dim")
    am = a.entries
    r, k = t.valence
    out = np.zeros_like(t.entries)
    for slot in range(r, r + k):
        out -= np.moveaxis(np.tensordot(t.entries, am, axes=([slot], [0])), -1, slot)
    if r == 1:
        out += np.tensordot(am, t.entries, axes=([1], [0]))
    return Tensor(t.dim, t.valence, out)


def curvature_operators(r: CurvatureTensor) -> np.ndarray:
    """All basis-pair endomorphisms at once: ``ops[u, v]`` is the matrix of
    R(e_u, e_v), i.e. ``ops[u, v, a, b] = g^{aw} R[u, v, b, w]``."""
    ginv = np.linalg.inv(r.space.g.entries)
    return np.einsum("aw,uvbw->uvab", ginv, r.tensor.entries)


def curv_dot(r: CurvatureTensor, t: Tensor | CurvatureTensor) -> Tensor:
    """Act with R(U, V) on ``t`` for every basis pair (U, V).

    Returns a tensor of valence (r, k+2); the two new covariant slots (U, V)
    come last.  The curvature operators are formed once and applied slotwise.
    A curvature that fails the Kahler-type symmetry check (at 1e-8 scaled)
    triggers a :class:`KahlerSymmetryWarning` but the computation proceeds.
    """
    if isinstance(t, CurvatureTensor):
        t = t.tensor
    if t.dim != r.tensor.dim:
        raise ValueError("tensor dim does not match curvature dim")
    report = check_kahler_symmetries(r, tol=_WARN_TOL)
    if not report.passed:
        warnings.warn(
            "curvature input fails Kahler-type symmetries "
            f"(worst defect {max(report.defects().values()):.3e})",
            KahlerSymmetryWarning,
            stacklevel=2,
        )
    ops = curvature_operators(r)
    d = t.dim
    rk, k = t.valence
    out = np.zeros(t.entries.shape + (d, d))
    for slot in range(rk, rk + k):
        out -= np.moveaxis(np.tensordot(t.entries, ops, axes=([slot], [2])), -1, slot)
    if rk == 1:
        out += np.einsum("uvab,b...->a...uv", ops, t.entries)
    return Tensor(d, (rk, k + 2), out)


def pseudosymmetry_defect(r: CurvatureTensor, factor: float) -> float:
    """Sup-norm defect of R.R = factor * (Pi.R) on R's own stage."""
    rr = curv_dot(r, r)
    pi_r = curv_dot(build_pi(r.space), r)
    return max_abs(rr - factor * pi_r)
