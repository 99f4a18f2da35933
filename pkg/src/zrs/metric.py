"""Metric (positive intertwining) operators for non-self-adjoint interactions.

When gamma0 is real and the space part of gamma has a real positive square,
write gamma_j = u_j + i v_j (j = 1..3). Then u and v are orthogonal with
|u| > |v|, and with

    kappa = |v| / |u|,  chi = atanh(kappa),  alpha = -(u x v)/|u x v|

the matrix E = cosh(chi) sigma0 + sinh(chi) sigma_alpha is positive definite
and intertwines the boundary matrix with its adjoint: T* E = E T. cosh(chi)
can also be read off the two imaginary poles of S, which gives an
independent consistency check.
"""

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DegenerateGamma, NotApplicable
from .pauli import SIGMA0, SIGMA1, SIGMA2, SIGMA3
from .smatrix import build
from .classifier import find_poles
from .tolerances import base_tol


class Applicability(Enum):
    TWO_IMAGINARY_POLES = "TwoImaginaryPoles"
    ONE_IMAGINARY_POLE = "OneImaginaryPole"
    NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class MetricSpec:
    """Parameters of the metric operator E."""

    alpha: np.ndarray
    chi: float
    kappa: float
    re_gamma: np.ndarray
    im_gamma: np.ndarray


def check_applicability(interaction):
    """Whether the metric construction applies.

    Returns (Applicability, reason). The reason is None when applicable and
    names the failed condition otherwise.
    """
    tol = base_tol()
    if interaction.is_hermitian():
        return Applicability.NOT_APPLICABLE, "already self-adjoint"
    g0, g1, g2, g3 = interaction.gamma
    if abs(g0.imag) > 100 * tol * (1 + abs(g0)):
        return Applicability.NOT_APPLICABLE, "gamma0 not real"
    sq = g1 * g1 + g2 * g2 + g3 * g3
    if abs(sq.imag) > 100 * tol * (1 + abs(sq)):
        return Applicability.NOT_APPLICABLE, "sum of gamma_j^2 not real"
    if sq.real <= 100 * tol:
        return Applicability.NOT_APPLICABLE, "sum of gamma_j^2 not positive"
    if any(p.order >= 2 for p in find_poles(build(interaction))):
        return Applicability.NOT_APPLICABLE, "pole of order 2"
    det = g0 * g0 - sq
    if abs(det) <= 100 * tol * (1 + abs(g0)) ** 2:
        return Applicability.ONE_IMAGINARY_POLE, None
    return Applicability.TWO_IMAGINARY_POLES, None


def construct(interaction):
    """MetricSpec for an applicable interaction.

    Raises
    ------
    NotApplicable
        If check_applicability rejects the interaction.
    DegenerateGamma
        If the real and imaginary parts of the gamma space part are
        collinear, leaving no axis for sigma_alpha.
    """
    applicability, reason = check_applicability(interaction)
    if applicability is Applicability.NOT_APPLICABLE:
        raise NotApplicable(reason)
    space = interaction.gamma.space_part()
    u = space.real
    v = space.imag
    cross = np.cross(u, v)
    norm_u = float(np.linalg.norm(u))
    norm_v = float(np.linalg.norm(v))
    norm_cross = float(np.linalg.norm(cross))
    if norm_cross <= 0.1 * base_tol() * (1 + norm_u * norm_v):
        raise DegenerateGamma("Re gamma and Im gamma are collinear")
    alpha = -cross / norm_cross
    kappa = norm_v / norm_u
    chi = math.atanh(kappa)
    return MetricSpec(alpha=alpha, chi=chi, kappa=kappa, re_gamma=u, im_gamma=v)


def metric_matrix(spec):
    """E = cosh(chi) sigma0 + sinh(chi) sigma_alpha as a 2x2 ndarray."""
    a1, a2, a3 = spec.alpha
    sigma_alpha = a1 * SIGMA1 + a2 * SIGMA2 + a3 * SIGMA3
    return math.cosh(spec.chi) * SIGMA0 + math.sinh(spec.chi) * sigma_alpha


def verify_intertwining(interaction, spec):
    """Max-norm residual of T* E - E T.

    Returns inf instead of raising when E fails to be positive definite
    hermitian, so a caller can always log the number.
    """
    E = metric_matrix(spec)
    tol = base_tol()
    if np.abs(E - E.conj().T).max() > 100 * tol * (1 + np.abs(E).max()):
        return math.inf
    if np.linalg.eigvalsh(E).min() <= 0:
        return math.inf
    T = interaction.matrix
    return float(np.abs(T.conj().T @ E - E @ T).max())


def cosh_chi_from_poles(interaction):
    """cosh(chi) recovered from the two imaginary poles of S.

    Equals |Re gamma| / |(k_minus - k_plus) det T|. Only defined in the
    two-pole case; raises NotApplicable otherwise.
    """
    applicability, reason = check_applicability(interaction)
    if applicability is not Applicability.TWO_IMAGINARY_POLES:
        raise NotApplicable(reason or "needs two imaginary poles")
    s = build(interaction)
    k_plus = 1j * (1 - s.theta_plus / 2)
    k_minus = 1j * (1 - s.theta_minus / 2)
    norm_u = float(np.linalg.norm(interaction.gamma.space_part().real))
    return norm_u / abs((k_minus - k_plus) * s.det_t)
