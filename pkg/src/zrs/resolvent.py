"""Resolvent-difference norms and the similarity integral probe.

For Im k > 0 the resolvent of the perturbed operator differs from the free
(Dirichlet-decoupled) one by a rank-two term spanned by e^{ik|x|} and the
odd exponential. With F g = (integral of e^{iks} g over (0, inf), integral
of e^{-iks} g over (-inf, 0)) and W = sigma0 + i sigma2, the L2 norm of the
difference applied to g is

    || (A_T - k^2)^{-1} g - (A_F - k^2)^{-1} g ||^2
        = (1 / Im k) | W (T - theta_k D sigma0) F g |^2 / |p(k)|^2.

The probe integrates that quantity for two fixed unit-rate one-sided
exponentials along the line z = xi + i*eps and scales by eps: bounded
values as eps shrinks are consistent with a bounded similarity transform,
while a real spectral singularity makes the probe grow like 1/eps.
"""

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.integrate import quad, simpson

from .errors import AtEigenvalue, NonConvergent
from .smatrix import build
from .tolerances import base_tol

# W = sigma0 + i sigma2
_W = np.array([[1, 1], [-1, 1]], dtype=complex)

_TAIL_THRESHOLD = 1e-8
_TRUNCATION = 40.0


class TestFunctionKind(Enum):
    PLUS_EXPONENTIAL = "plus_exponential"
    MINUS_EXPONENTIAL = "minus_exponential"
    CUSTOM = "custom"


@dataclass(frozen=True)
class TestFunction:
    """A test function g for the resolvent difference."""

    kind: TestFunctionKind
    k: object = None
    func: object = None

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        if self.kind is TestFunctionKind.PLUS_EXPONENTIAL:
            out = np.where(x > 0, np.exp(-1j * np.conj(self.k) * (x + 0j)), 0)
        elif self.kind is TestFunctionKind.MINUS_EXPONENTIAL:
            out = np.where(x < 0, np.exp(1j * np.conj(self.k) * (x + 0j)), 0)
        else:
            out = self.func(x)
        if np.ndim(out) == 0:
            return complex(out)
        return out


def plus_exponential(k):
    """g(x) = conj(e^{ikx}) on (0, inf), zero elsewhere. Needs Im k > 0."""
    k = complex(k)
    if k.imag <= 0:
        raise ValueError("plus_exponential needs Im k > 0")
    return TestFunction(kind=TestFunctionKind.PLUS_EXPONENTIAL, k=k)


def minus_exponential(k):
    """g(x) = conj(e^{-ikx}) on (-inf, 0), zero elsewhere. Needs Im k > 0."""
    k = complex(k)
    if k.imag <= 0:
        raise ValueError("minus_exponential needs Im k > 0")
    return TestFunction(kind=TestFunctionKind.MINUS_EXPONENTIAL, k=k)


def custom(func):
    """Wrap an arbitrary callable as a test function."""
    return TestFunction(kind=TestFunctionKind.CUSTOM, func=func)


@dataclass(frozen=True)
class FTransform:
    """One-sided exponential transforms of g at a fixed k."""

    plus: complex
    minus: complex


def f_transform(g, k):
    """F g at k (Im k > 0 required).

    The two exponential families have closed forms; a custom g is
    integrated numerically on |x| <= 40 / Im k after a decay check on
    |g(x) e^{ik|x|}| near the cutoff.

    Raises
    ------
    NonConvergent
        If the custom integrand has not decayed below 1e-8 at the cutoff.
    """
    k = complex(k)
    if k.imag <= 0:
        raise ValueError("transform defined for Im k > 0")
    if g.kind is TestFunctionKind.PLUS_EXPONENTIAL:
        return FTransform(1j / (k - np.conj(g.k)), 0j)
    if g.kind is TestFunctionKind.MINUS_EXPONENTIAL:
        return FTransform(0j, 1j / (k - np.conj(g.k)))
    cutoff = _TRUNCATION / k.imag
    with np.errstate(over="ignore", invalid="ignore"):
        for x in (0.8 * cutoff, 0.9 * cutoff, cutoff):
            for side in (x, -x):
                tail = abs(complex(g.func(side))) * math.exp(-k.imag * x)
                if not tail <= _TAIL_THRESHOLD:
                    raise NonConvergent(
                        f"|g({side}) e^{{ik|x|}}| = {tail} at the cutoff"
                    )
    plus = quad(
        lambda s: g.func(s) * np.exp(1j * k * s),
        0,
        cutoff,
        complex_func=True,
        epsabs=1e-10,
        limit=200,
    )[0]
    minus = quad(
        lambda s: g.func(s) * np.exp(-1j * k * s),
        -cutoff,
        0,
        complex_func=True,
        epsabs=1e-10,
        limit=200,
    )[0]
    return FTransform(complex(plus), complex(minus))


def resolvent_diff_norm(interaction, k, g):
    """L2 norm of the resolvent difference applied to g, at z = k^2.

    Raises
    ------
    AtEigenvalue
        If k is within tolerance of a pole of S, where the difference is
        unbounded.
    """
    k = complex(k)
    if k.imag <= 0:
        raise ValueError("resolvent difference defined for Im k > 0")
    s = build(interaction)
    F = f_transform(g, k)
    pk = s.p(k)
    tol = base_tol()
    if abs(pk) <= tol * (1 + abs(k) ** 2) * max(1.0, abs(s.det_t)):
        raise AtEigenvalue(f"p({k}) within tolerance of zero")
    theta = 2 * (1 + 1j * k)
    M = s.interaction.matrix - theta * s.det_t * np.eye(2)
    vec = _W @ M @ np.array([F.plus, F.minus]) / pk
    return math.sqrt((abs(vec[0]) ** 2 + abs(vec[1]) ** 2) / k.imag)


def similarity_integral_probe(interaction, epsilon, xi_range, n=200001):
    """eps times the integral of the squared difference norm along z = xi + i eps.

    The test functions are the unit-rate one-sided exponentials e^{-x} on
    (0, inf) and e^{x} on (-inf, 0); k is the principal square root of z.
    Compare values across decreasing epsilon: a bounded family is evidence
    of similarity to a self-adjoint operator, growth like 1/eps locates a
    spectral singularity. Evidence only, not a certificate.

    Raises
    ------
    AtEigenvalue
        If the sweep line passes through a pole of S.
    """
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    if n < 16:
        raise ValueError("need at least 16 quadrature nodes")
    if n % 2 == 0:
        n += 1
    s = build(interaction)
    c0, c1, c2 = s.p_coeffs
    D = s.det_t
    xi = np.linspace(xi_range[0], xi_range[1], n)
    k = np.sqrt(xi + 1j * epsilon)
    theta = 2 * (1 + 1j * k)
    p = c0 + (c1 + c2 * k) * k
    scaled = np.abs(p) / ((1 + np.abs(k) ** 2) * max(1.0, abs(D)))
    if scaled.min() <= base_tol():
        raise AtEigenvalue("sweep line passes through a pole")
    T = s.interaction.matrix
    m00 = T[0, 0] - theta * D
    m11 = T[1, 1] - theta * D
    m01 = complex(T[0, 1])
    m10 = complex(T[1, 0])
    # Frobenius norm of W M, with F g proportional to each basis vector
    fro2 = (
        np.abs(m00 + m10) ** 2
        + np.abs(m01 + m11) ** 2
        + np.abs(m10 - m00) ** 2
        + np.abs(m11 - m01) ** 2
    )
    integrand = fro2 / (k.imag * np.abs(p) ** 2 * np.abs(1 - 1j * k) ** 2)
    return float(epsilon * simpson(integrand, x=xi))
