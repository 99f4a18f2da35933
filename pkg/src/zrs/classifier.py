"""Pole location and spectral classification.

The characteristic polynomial p has degree at most two, so everything is
done in closed form. Poles of S are roots of p with an effective order:
scalar boundary matrices cap the order at one, and a root at the origin
loses one order to the explicit k factor in the numerator of S - sigma0.

A pole in the open upper half-plane is an eigenvalue z = k0^2 of the
operator; a pole on the real axis is a spectral singularity; an order-two
pole in the upper half-plane is an exceptional point (certified a second
way through nilpotency of sigma0 - theta_k0 T). When p degenerates to a
constant while T is nonzero, S grows linearly in k: a singularity at
infinity.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import InternalInconsistency
from .pauli import SIGMA0
from .smatrix import build
from .tolerances import base_tol


class Sheet(Enum):
    PHYSICAL = "Physical"
    REAL_AXIS = "RealAxis"
    NONPHYSICAL = "Nonphysical"
    INFINITY = "Infinity"


class Similarity(Enum):
    SELF_ADJOINT = "SelfAdjoint"
    SIMILAR_TO_SELF_ADJOINT = "SimilarToSelfAdjoint"
    NOT_SIMILAR = "NotSimilar"
    UNDETERMINED = "Undetermined"


class Region(Enum):
    I = "I"
    II = "II"
    III = "III"
    UNDETERMINED = "Undetermined"


@dataclass(frozen=True)
class PoleReport:
    """One pole of S. location/z are None for the pole at infinity."""

    location: object
    order: int
    sheet: Sheet
    z: object


@dataclass(frozen=True)
class SpectralClassification:
    poles: tuple
    eigenvalues: tuple
    spectral_singularities: tuple
    singularity_at_infinity: bool
    exceptional_points: tuple
    similarity: Similarity
    region: Region
    has_negative_eigenvalues: bool


def _real_axis_margin(k0):
    return 1000 * base_tol() * (1 + abs(k0))


def _sheet_of(k0):
    if abs(k0.imag) <= _real_axis_margin(k0):
        return Sheet.REAL_AXIS
    if k0.imag > 0:
        return Sheet.PHYSICAL
    return Sheet.NONPHYSICAL


def find_poles(s):
    """Poles of S with effective orders, sorted by location.

    Parameters
    ----------
    s : SMatrixFn

    Returns
    -------
    list of PoleReport
        Finite poles first (ordered by real then imaginary part), then the
        pole at infinity if there is one.
    """
    tol = base_tol()
    c0, c1, c2 = s.p_coeffs
    scale_all = max(1.0, abs(c0), abs(c1), abs(c2))
    deg2 = abs(c2) > 100 * tol * max(1.0, abs(c0), abs(c1))
    deg1 = not deg2 and abs(c1) > 100 * tol * max(1.0, abs(c0))
    origin_root = abs(c0) <= 100 * tol * max(1.0, abs(c1), abs(c2))

    roots = []
    if deg2:
        disc = c1 * c1 - 4 * c2 * c0
        if abs(disc) <= 100 * tol * scale_all**2:
            r = -c1 / (2 * c2)
            if origin_root and abs(c1) <= 100 * tol * max(1.0, abs(c2)):
                r = 0j
            roots.append((r, 2))
        else:
            sq = np.sqrt(disc)
            # pick the larger numerator so neither root loses precision
            q = -(c1 + sq) / 2 if abs(c1 + sq) >= abs(c1 - sq) else -(c1 - sq) / 2
            small = 0j if origin_root else c0 / q
            roots.append((q / c2, 1))
            roots.append((small, 1))
    elif deg1:
        roots.append((0j if origin_root else -c0 / c1, 1))

    g0, g1, g2, g3 = s.gamma
    scalar = max(abs(g1), abs(g2), abs(g3)) <= 100 * tol * max(1.0, abs(g0))

    reports = []
    for loc, mult in roots:
        order = min(mult, 1) if scalar else mult
        if loc == 0:
            order -= 1
        if order <= 0:
            continue
        # adding 0.0 clears negative zeros left by the quadratic formula
        loc = complex(loc.real + 0.0, loc.imag + 0.0)
        reports.append(PoleReport(loc, order, _sheet_of(loc), loc * loc))
    reports.sort(key=lambda r: (r.location.real, r.location.imag))

    if not deg2 and not deg1 and np.abs(s.interaction.matrix).max() > tol:
        reports.append(PoleReport(None, 1, Sheet.INFINITY, None))
    return reports


def spectral_singularities(s, poles=None):
    """Real-axis singular spectral points of the operator.

    Returns (values, at_infinity): z = k0^2 for each real-axis pole,
    sorted and deduplicated, plus a flag for the singularity at infinity.
    """
    if poles is None:
        poles = find_poles(s)
    at_infinity = any(p.sheet is Sheet.INFINITY for p in poles)
    raw = sorted(
        float(p.z.real) for p in poles if p.sheet is Sheet.REAL_AXIS
    )
    values = []
    for z in raw:
        if values and abs(z - values[-1]) <= 1000 * base_tol() * (1 + abs(z)):
            continue
        values.append(z)
    return values, at_infinity


def exceptional_points(s, poles=None):
    """Degenerate eigenvalues z where the operator has a Jordan block.

    These are z = k0^2 for order-two poles k0 in the upper half-plane. Each
    candidate is certified independently: N = sigma0 - theta_k0 T must be
    nonzero with N^2 = 0. Order-one poles must fail that certificate. A
    disagreement raises InternalInconsistency.
    """
    if poles is None:
        poles = find_poles(s)
    tol = base_tol()
    T = s.interaction.matrix
    out = []
    for p in poles:
        if p.sheet is not Sheet.PHYSICAL:
            continue
        theta0 = 2 * (1 + 1j * p.location)
        N = SIGMA0 - theta0 * T
        nmax = np.abs(N).max()
        scale = 1 + np.abs(T).max() * (1 + abs(theta0))
        nilpotent = nmax > 100 * tol * scale and (
            np.abs(N @ N).max() <= 100 * tol * (1 + nmax) ** 2
        )
        if p.order >= 2 and not nilpotent:
            raise InternalInconsistency(
                f"order-{p.order} pole at {p.location} without a nilpotent residue"
            )
        if p.order == 1 and nilpotent:
            raise InternalInconsistency(
                f"simple pole at {p.location} with a nilpotent residue"
            )
        if p.order >= 2:
            out.append(p.z)
    return out


def _is_real(z):
    return abs(z.imag) <= 1000 * base_tol() * (1 + abs(z))


def _similarity(interaction, s, poles, sing_values, sing_at_inf, excs):
    tol = base_tol()
    finite = [p for p in poles if p.sheet is not Sheet.INFINITY]
    physical = [p for p in finite if p.sheet is Sheet.PHYSICAL]
    if interaction.is_hermitian():
        return Similarity.SELF_ADJOINT
    if sing_values or sing_at_inf or excs:
        return Similarity.NOT_SIMILAR
    if any(not _is_real(p.z) for p in physical):
        return Similarity.NOT_SIMILAR
    if not physical:
        # S is holomorphic and bounded on the upper half-plane
        return Similarity.SIMILAR_TO_SELF_ADJOINT
    # remaining poles are imaginary; a real gamma0 with a real positive
    # square of the gamma space part certifies a real negative spectrum
    g0, g1, g2, g3 = s.gamma
    sq = g1 * g1 + g2 * g2 + g3 * g3
    certificate = (
        abs(g0.imag) <= 100 * tol * (1 + abs(g0))
        and abs(sq.imag) <= 100 * tol * (1 + abs(sq))
        and sq.real > 100 * tol
    )
    if certificate:
        expected = 2 if abs(s.det_t) > 100 * tol * (1 + abs(g0)) ** 2 else 1
        on_axis = all(
            abs(p.location.real) <= _real_axis_margin(p.location) and p.order == 1
            for p in finite
        )
        if on_axis and len(finite) == expected:
            return Similarity.SIMILAR_TO_SELF_ADJOINT
    return Similarity.UNDETERMINED


def _region(eigenvalues, sing_values, sing_at_inf, excs, similarity):
    if any(not _is_real(z) for z in eigenvalues):
        return Region.I
    if sing_values or sing_at_inf or excs:
        return Region.II
    if similarity in (Similarity.SELF_ADJOINT, Similarity.SIMILAR_TO_SELF_ADJOINT):
        return Region.III
    return Region.UNDETERMINED


def classify(interaction):
    """Full spectral report for an interaction.

    Returns
    -------
    SpectralClassification
        Poles with sheets and orders, eigenvalues z = k0^2 from the upper
        half-plane, spectral singularities from the real axis, exceptional
        points, the similarity verdict and the parameter-space region.
    """
    s = build(interaction)
    poles = find_poles(s)
    eigenvalues = tuple(p.z for p in poles if p.sheet is Sheet.PHYSICAL)
    sing_values, sing_at_inf = spectral_singularities(s, poles)
    excs = tuple(exceptional_points(s, poles))
    similarity = _similarity(interaction, s, poles, sing_values, sing_at_inf, excs)
    region = _region(eigenvalues, sing_values, sing_at_inf, excs, similarity)
    has_negative = any(_is_real(z) and z.real < 0 for z in eigenvalues)
    return SpectralClassification(
        poles=tuple(poles),
        eigenvalues=eigenvalues,
        spectral_singularities=tuple(sing_values),
        singularity_at_infinity=sing_at_inf,
        exceptional_points=excs,
        similarity=similarity,
        region=region,
        has_negative_eigenvalues=has_negative,
    )


def similarity_class(interaction):
    """Similarity verdict plus a negative-eigenvalue flag."""
    c = classify(interaction)
    return c.similarity, c.has_negative_eigenvalues


def region(classification):
    """Region of a classification (recomputed from its fields)."""
    return _region(
        classification.eigenvalues,
        classification.spectral_singularities,
        classification.singularity_at_infinity,
        classification.exceptional_points,
        classification.similarity,
    )


def boundedness_scan(s, re_range, im_range, n=64):
    """Grid maximum of |Re k| * ||S(k) - sigma0||_max / |4k| on a rectangle.

    Finite values over a large upper half-plane window are evidence for a
    bounded similarity transform; blowup pinpoints real-axis singularities
    and non-real eigenvalues. Evidence only, not a certificate.
    """
    if n < 4:
        raise ValueError("need at least a 4x4 grid")
    re = np.linspace(re_range[0], re_range[1], n)
    im = np.linspace(im_range[0], im_range[1], n)
    K = re[None, :] + 1j * im[:, None]
    theta = 2 * (1 + 1j * K)
    c0, c1, c2 = s.p_coeffs
    P = c0 + (c1 + c2 * K) * K
    T = s.interaction.matrix
    D = s.det_t
    m = np.maximum(
        np.maximum(np.abs(T[0, 0] - theta * D), np.abs(T[1, 1] - theta * D)),
        max(abs(T[0, 1]), abs(T[1, 0])),
    )
    with np.errstate(divide="ignore", invalid="ignore"):
        val = np.abs(K.real) * m / np.abs(P)
    val = np.where(np.abs(P) == 0, np.inf, val)
    return float(np.max(val))
