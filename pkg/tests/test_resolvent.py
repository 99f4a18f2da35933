import numpy as np
import pytest
from scipy.integrate import simpson

from zrs.errors import AtEigenvalue, NonConvergent
from zrs.interaction import Interaction
from zrs.pauli import SIGMA0, PauliVector
from zrs.resolvent import (
    custom,
    f_transform,
    minus_exponential,
    plus_exponential,
    resolvent_diff_norm,
    similarity_integral_probe,
)


def boundary_solve_norm(interaction, k, g):
    # independent route: solve the boundary conditions for the
    # coefficients of e^{ikx} on each half-line, then integrate exactly
    F = f_transform(g, k)
    theta = 2 * (1 + 1j * k)
    rhs = interaction.matrix @ np.array([F.plus, F.minus])
    coeff = 2 * np.linalg.solve(SIGMA0 - theta * interaction.matrix, rhs)
    return np.sqrt((abs(coeff[0]) ** 2 + abs(coeff[1]) ** 2) / (2 * k.imag))


def test_exponential_transforms_closed_form():
    kg = 1.3 + 0.7j
    k = 0.4 + 1.1j
    F = f_transform(plus_exponential(kg), k)
    assert F.plus == pytest.approx(1j / (k - np.conj(kg)))
    assert F.minus == 0
    F = f_transform(minus_exponential(kg), k)
    assert F.plus == 0
    assert F.minus == pytest.approx(1j / (k - np.conj(kg)))
    # matching k gives the reciprocal of twice the imaginary part
    F = f_transform(plus_exponential(k), k)
    assert F.plus == pytest.approx(1 / (2 * k.imag))


def test_function_evaluation():
    g = plus_exponential(1j)
    vals = g(np.array([-1.0, 0.0, 2.0]))
    assert vals[0] == 0 and vals[1] == 0
    assert vals[2] == pytest.approx(np.exp(-2.0))
    assert g(3.0) == pytest.approx(np.exp(-3.0))
    h = minus_exponential(1j)
    assert h(-2.0) == pytest.approx(np.exp(-2.0))
    assert h(1.0) == 0


def test_custom_quadrature_matches_closed_form():
    kg = 0.8 + 0.9j
    k = 0.3 + 1.2j
    g = custom(lambda x: np.where(x > 0, np.exp(-1j * np.conj(kg) * (x + 0j)), 0))
    F = f_transform(g, k)
    assert abs(F.plus - 1j / (k - np.conj(kg))) < 1e-8
    assert abs(F.minus) < 1e-10


def test_two_sided_exponential_transform():
    k = 0.5 + 0.8j
    g = custom(lambda x: np.exp(-abs(x)))
    F = f_transform(g, k)
    assert abs(F.plus - 1 / (1 - 1j * k)) < 1e-8
    assert abs(F.minus - 1 / (1 - 1j * k)) < 1e-8


def test_growing_function_rejected():
    g = custom(lambda x: np.exp(0.5 * x))
    with pytest.raises(NonConvergent):
        f_transform(g, 2 + 0.3j)


def test_argument_validation():
    with pytest.raises(ValueError):
        plus_exponential(2.0)
    with pytest.raises(ValueError):
        minus_exponential(1 - 1j)
    with pytest.raises(ValueError):
        f_transform(plus_exponential(1j), 1.0)
    i = Interaction.from_abcd(1, 0, 0, 0)
    with pytest.raises(ValueError):
        resolvent_diff_norm(i, 2 - 1j, plus_exponential(1j))
    with pytest.raises(ValueError):
        similarity_integral_probe(i, 0.0, (-1, 1))
    with pytest.raises(ValueError):
        similarity_integral_probe(i, 0.5, (-1, 1), n=8)


def test_norm_matches_boundary_solve():
    rng = np.random.default_rng(11)
    cases = [
        Interaction.from_abcd(-1, 0, 0, 0),
        Interaction.from_abcd(0, 0, 0, 1j),
        Interaction.from_abcd(0.4, 0.2 + 0.1j, -0.3, 0.5),
    ]
    for i in cases:
        for _ in range(5):
            k = complex(rng.uniform(-2, 2), rng.uniform(0.2, 2))
            kg = complex(rng.uniform(-1, 1), rng.uniform(0.3, 1.5))
            for g in (plus_exponential(kg), minus_exponential(kg)):
                got = resolvent_diff_norm(i, k, g)
                want = boundary_solve_norm(i, k, g)
                assert got == pytest.approx(want, rel=1e-12)


def test_norm_at_bound_state_rejected():
    i = Interaction.from_abcd(-1, 0, 0, 0)
    with pytest.raises(AtEigenvalue):
        resolvent_diff_norm(i, 0.5j, plus_exponential(1j))


def test_probe_through_pole_rejected():
    # characteristic roots 1/(2i) and 1/10 put a pole at k = 1 + i,
    # i.e. z = 2i, exactly on the sweep line eps = 2 at xi = 0
    g0 = (1 / 2j + 1 / 10) / 2
    xi = (1 / 2j - 1 / 10) / 2
    i = Interaction.from_gamma(PauliVector(g0, xi, 0, 0))
    with pytest.raises(AtEigenvalue):
        similarity_integral_probe(i, 2.0, (-1, 1), n=17)


def test_probe_matches_pointwise_norms():
    i = Interaction.from_abcd(0, 0, 0, 1j)
    eps = 0.5
    lo, hi = 0.5, 1.5
    n = 17
    grid = np.linspace(lo, hi, n)
    g_right = plus_exponential(1j)
    g_left = minus_exponential(1j)
    vals = []
    for x in grid:
        k = complex(np.sqrt(x + 1j * eps))
        vals.append(
            resolvent_diff_norm(i, k, g_right) ** 2
            + resolvent_diff_norm(i, k, g_left) ** 2
        )
    want = eps * simpson(np.array(vals), x=grid)
    got = similarity_integral_probe(i, eps, (lo, hi), n=n)
    assert got == pytest.approx(want, rel=1e-10)


def test_probe_separates_bounded_from_divergent():
    bounded = Interaction.from_abcd(-1, 0, 0, 0)
    divergent = Interaction.from_abcd(0, 0, 0, 1j)
    b1 = similarity_integral_probe(bounded, 1.0, (-10, 10), n=5001)
    b2 = similarity_integral_probe(bounded, 0.01, (-10, 10), n=5001)
    d1 = similarity_integral_probe(divergent, 1.0, (-10, 10), n=5001)
    d2 = similarity_integral_probe(divergent, 0.01, (-10, 10), n=5001)
    assert b2 / b1 < 10
    assert d2 / d1 > 100
