import json
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy import integrate

from fockideal.fockmeasure import (
    AtomicMeasure,
    DensityMeasure,
    Hat,
    MeasureFormatError,
    QuadratureError,
    Tilde,
    dump_measure,
    gaussian_shell_tail,
    hat,
    kernel,
    kernel_identity_check,
    kernel_identity_value,
    kernel_overlap,
    lattice_sequence,
    load_measure,
    measure_from_dict,
    normalized_kernel,
    radial_tilde,
    required_shells,
    tilde,
    truncate,
)
from fockideal.lattice import LatticeSpec
from fockideal.snf import PowerSum, eval_limit

THETA1 = sum(math.exp(-k * k) for k in range(-40, 41))


def unit_atom(n=1):
    return AtomicMeasure(np.zeros((1, n)), [1.0], n)


# kernel ---------------------------------------------------------------------


def test_kernel_values():
    z = np.array([1 + 2j, -0.5j])
    w = np.array([0.3, 1 - 1j])
    assert np.isclose(kernel(z, w), np.exp(np.sum(z * np.conj(w))))
    assert np.isclose(normalized_kernel(z, w), np.exp(np.sum(w * np.conj(z)) - np.sum(np.abs(z) ** 2) / 2))


@given(st.lists(st.floats(-3, 3), min_size=4, max_size=4))
@settings(max_examples=50, deadline=None)
def test_overlap_modulus(c):
    z = np.array([c[0] + 1j * c[1]])
    w = np.array([c[2] + 1j * c[3]])
    assert np.isclose(abs(kernel_overlap(z, w)), math.exp(-abs(z[0] - w[0]) ** 2 / 2), rtol=1e-12)
    assert np.isclose(kernel_overlap(z, z), 1.0)


@pytest.mark.parametrize("z,p,n", [(0, 2.0, 1), (2 + 1j, 2.0, 1), ([0, 0], 1.0, 2), ([1.5j, -2], 4.0, 2), (2.9, 1.0, 1)])
def test_kernel_identity_is_one(z, p, n):
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    assert z.size == n
    assert abs(kernel_identity_check(z, p) - 1.0) <= 1e-8


def test_kernel_identity_error_decays_along_ladder():
    errs = [abs(kernel_identity_value([2.5 + 1j], 4.0, m) - 1) for m in (4, 8, 16, 32, 64)]
    assert errs[-1] < 1e-12
    assert all(b <= a or b < 1e-13 for a, b in zip(errs, errs[1:]))


def test_kernel_identity_nonconvergence_is_reported():
    with pytest.raises(QuadratureError):
        kernel_identity_check([3 + 3j], 4.0, order=2, max_order=8)


# measures -------------------------------------------------------------------


def test_atomic_validation():
    with pytest.raises(ValueError):
        AtomicMeasure([0.0], [0.0])
    with pytest.raises(ValueError):
        AtomicMeasure([0.0], [1.0, 2.0])
    with pytest.raises(ValueError):
        AtomicMeasure([np.inf])
    assert len(AtomicMeasure(np.empty((0, 2)), dimension=2)) == 0


def test_density_validation():
    with pytest.raises(ValueError):
        DensityMeasure(1, (1.0, 1.0), beta=0.0)
    with pytest.raises(ValueError):
        DensityMeasure(1, (-1.0,))
    assert DensityMeasure(1, (2.0, 0.0), beta=0.0).poly == (2.0,)


@pytest.mark.parametrize("n", [1, 2])
def test_density_mass_matches_radial_integral(n):
    nu = DensityMeasure(n, (1.0, 0.5, 0.25), beta=0.8)
    f = lambda t: t ** (n - 1) * (1 + 0.5 * t + 0.25 * t * t) * math.exp(-0.8 * t)
    want = math.pi**n / math.gamma(n) * integrate.quad(f, 0, np.inf)[0]
    assert math.isclose(nu.mass, want, rel_tol=1e-10)
    cut = truncate(nu, 1.3)
    want = math.pi**n / math.gamma(n) * integrate.quad(f, 0, 1.3**2)[0]
    assert math.isclose(cut.mass, want, rel_tol=1e-10)


# hat and tilde ----------------------------------------------------------------


def test_hat_open_ball_for_unit_atom():
    nu = unit_atom()
    assert hat(nu, 1.0, 0.0) == 1.0
    assert hat(nu, 1.0, 1.0) == 0.0
    assert hat(nu, 1.0, 0.999 + 1j) == 0.0
    assert hat(nu, 1.0, 0.999 - 0.999j) == 1.0


def test_tilde_unit_atom():
    z = np.array([0.0, 1 + 1j, -2j])
    np.testing.assert_allclose(tilde(unit_atom(), 0.7, z), np.exp(-0.7 * np.abs(z) ** 2), rtol=1e-15)


@pytest.mark.parametrize("r", [0.5, 1.0, 2.0])
def test_constant_density_hat_is_box_area(r):
    z = np.array([0.0, 3 + 1j, -7.25j])
    np.testing.assert_allclose(hat(DensityMeasure(1), r, z), 4 * r * r, rtol=1e-12)
    np.testing.assert_allclose(hat(DensityMeasure(2, (3.0,)), r, [[0.0, 1j]]), 3 * (2 * r) ** 4, rtol=1e-12)


@pytest.mark.parametrize("n,alpha", [(1, 1.0), (1, 0.25), (2, 2.0)])
def test_constant_density_tilde_is_gaussian_integral(n, alpha):
    z = np.array([[0.5j] * n, [2.0] * n])
    np.testing.assert_allclose(tilde(DensityMeasure(n), alpha, z), (math.pi / alpha) ** n, rtol=1e-12)


def _nested_box(nu, r, z):
    f = lambda y, x: float(nu.density([[x + 1j * y]])[0])
    val, _ = integrate.dblquad(f, z.real - r, z.real + r, z.imag - r, z.imag + r, epsabs=1e-13, epsrel=1e-12)
    return val


@pytest.mark.parametrize("z", [0.0, 1.3 - 0.4j, -2.5j])
def test_density_hat_against_nested_quadrature(z):
    nu = DensityMeasure(1, (1.0, 2.0, 0.5), beta=0.6)
    assert math.isclose(hat(nu, 0.8, z), _nested_box(nu, 0.8, complex(z)), rel_tol=1e-8)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_two_tilde_paths_agree(n):
    nu = DensityMeasure(n, (1.0, 2.0, 0.5), beta=0.7)
    rng = np.random.default_rng(n)
    z = rng.standard_normal((5, n)) + 1j * rng.standard_normal((5, n))
    gh = tilde(nu, 1.3, z)
    radial, _ = radial_tilde(nu, 1.3, z)
    np.testing.assert_allclose(gh, radial, rtol=1e-9)


def test_truncated_hat_limit_cases():
    base = DensityMeasure(1, (1.0, 1.0), beta=0.5)
    cut = truncate(base, 2.0)
    # box inside the disc: truncation is invisible
    assert math.isclose(hat(cut, 1.0, 0.2j), hat(base, 1.0, 0.2j), rel_tol=1e-10)
    # box containing the disc: the whole truncated mass
    assert math.isclose(hat(cut, 5.0, 0.3), cut.mass, rel_tol=1e-10)
    # box disjoint from the disc
    assert hat(cut, 0.5, 4.0) == 0.0


def test_truncated_hat_against_curved_limits():
    nu = truncate(DensityMeasure(1, (1.0, 1.0), beta=0.5), 2.0)
    z, r, N = 1.5 + 0.2j, 1.0, 2.0
    f = lambda y, x: (1 + x * x + y * y) * math.exp(-0.5 * (x * x + y * y))
    lo = lambda x: max(z.imag - r, -math.sqrt(N * N - x * x))
    hi = lambda x: min(z.imag + r, math.sqrt(N * N - x * x))
    # split where the circle crosses the top and bottom box edges
    cuts = sorted({z.real - r, N} | {math.sqrt(N * N - e * e) for e in (z.imag - r, z.imag + r)})
    cuts = [c for c in cuts if z.real - r <= c <= min(z.real + r, N)]
    want = sum(integrate.dblquad(f, a, b, lo, hi, epsabs=1e-13, epsrel=1e-12)[0] for a, b in zip(cuts, cuts[1:]))
    assert math.isclose(hat(nu, r, z), want, rel_tol=1e-9)


def test_truncated_hat_needs_dimension_one():
    with pytest.raises(ValueError):
        hat(truncate(DensityMeasure(2), 1.0), 1.0, [[0, 0]])


def test_additive_and_homogeneous():
    rng = np.random.default_rng(3)
    a = AtomicMeasure(rng.standard_normal(4) + 1j * rng.standard_normal(4), rng.uniform(0.5, 2, 4))
    b = AtomicMeasure(rng.standard_normal(3) + 1j * rng.standard_normal(3), rng.uniform(0.5, 2, 3))
    z = rng.standard_normal(50) + 1j * rng.standard_normal(50)
    for fn, p in ((hat, 0.9), (tilde, 0.6)):
        np.testing.assert_allclose(fn(a + b, p, z), fn(a, p, z) + fn(b, p, z), rtol=1e-14)
        np.testing.assert_allclose(fn(a.scaled(3.5), p, z), 3.5 * fn(a, p, z), rtol=1e-14)


def test_truncation():
    nu = AtomicMeasure([0.5, 2j], [1.0, 1.0])
    assert len(truncate(nu, 1.0)) == 1
    assert len(truncate(nu, 2.0)) == 2
    z = np.linspace(-3, 3, 41) + 0.5j
    for fn in (hat, tilde):
        assert np.all(fn(truncate(nu, 1.0), 1.0, z) <= fn(nu, 1.0, z))
    d = DensityMeasure(1, (1.0, 1.0), beta=0.5)
    assert np.all(tilde(truncate(d, 1.5), 1.0, z) <= tilde(d, 1.0, z) * (1 + 1e-9))


# lattice sequences ------------------------------------------------------------


def test_hat_sequence_unit_atom():
    seq = lattice_sequence(unit_atom(), Hat(1.0), LatticeSpec(1.0, 1, 2))
    assert seq.prefix[0] == 1.0 and not seq.prefix[1:].any()
    assert seq.tail_bound == 0 and seq.tail_sum_bound == 0


def test_tilde_sequence_unit_atom_theta():
    seq = lattice_sequence(unit_atom(), Tilde(1.0), LatticeSpec(1.0, 1, 8))
    v = eval_limit(PowerSum(1), seq)
    assert v.lower <= THETA1**2 * (1 + 1e-14) and THETA1**2 <= v.upper * (1 + 1e-14)
    assert abs(v.value - 3.1422) < 1e-4


def test_shell_requirement_reported():
    nu = AtomicMeasure([2.2 + 0.3j])
    need = required_shells(nu, Hat(1.0), 1.0)
    assert need == 3
    with pytest.raises(ValueError, match="need at least 3"):
        lattice_sequence(nu, Hat(1.0), LatticeSpec(1.0, 1, 2))
    lattice_sequence(nu, Hat(1.0), LatticeSpec(1.0, 1, 3))


def test_hat_shells_are_minimal():
    # with one shell fewer the atom's ball reaches unenumerated lattice points
    rng = np.random.default_rng(5)
    for _ in range(20):
        nu = AtomicMeasure(rng.uniform(-3, 3, 3) + 1j * rng.uniform(-3, 3, 3))
        r = float(rng.uniform(0.3, 1.5))
        need = required_shells(nu, Hat(r), r)
        big = lattice_sequence(nu, Hat(r), LatticeSpec(r, 1, need + 3)).prefix
        small = lattice_sequence(nu, Hat(r), LatticeSpec(r, 1, need)).prefix
        assert big[: small.size].sum() == small.sum() == big.sum()


def test_unbounded_support_rejected():
    with pytest.raises(ValueError):
        lattice_sequence(DensityMeasure(1), Hat(1.0), LatticeSpec(1.0, 1, 3))


def test_gaussian_tail_bound_dominates_direct_sum():
    nu = AtomicMeasure([0.4 - 0.2j], [2.0])
    spec = LatticeSpec(0.5, 1, 4)
    seq = lattice_sequence(nu, Tilde(1.0), spec)
    far = lattice_sequence(nu, Tilde(1.0), LatticeSpec(0.5, 1, 30)).prefix[spec.size :]
    assert far.sum() <= seq.tail_sum_bound
    assert far.max() <= seq.tail_bound
    with pytest.raises(ValueError):
        gaussian_shell_tail(1, 0.5, 3.0, 1.0, 2)


def test_sequence_scaling():
    nu = AtomicMeasure([0.3j, 1.1], [1.0, 0.5])
    spec = LatticeSpec(0.7, 1, 6)
    for tr in (Hat(0.7), Tilde(0.5)):
        a = lattice_sequence(nu, tr, spec).prefix
        b = lattice_sequence(nu.scaled(4.0), tr, spec).prefix
        np.testing.assert_allclose(b, 4.0 * a, rtol=1e-14)


# files ------------------------------------------------------------------------


def test_round_trip(tmp_path):
    nu = AtomicMeasure([[1 + 2j, -0.5j]], [2.5], 2)
    p = tmp_path / "m.json"
    p.write_text(json.dumps(dump_measure(nu)))
    back = load_measure(p)
    np.testing.assert_array_equal(back.points, nu.points)
    d = DensityMeasure(1, (1.0, 2.0), 0.5, 12)
    assert measure_from_dict(dump_measure(d)) == d


@pytest.mark.parametrize(
    "doc",
    [
        {"version": 2, "dimension": 1, "kind": "atomic", "atoms": []},
        {"version": 1, "dimension": 1, "kind": "atomic", "atoms": [], "extra": 1},
        {"version": 1, "dimension": 1, "kind": "atomic", "atoms": [{"point": [[0, 0]], "weight": 0}]},
        {"version": 1, "dimension": 1, "kind": "atomic", "atoms": [{"point": [[0, 0]], "weight": -1}]},
        {"version": 1, "dimension": 2, "kind": "atomic", "atoms": [{"point": [[0, 0]], "weight": 1}]},
        {"version": 1, "dimension": 1, "kind": "atomic", "atoms": [{"point": [[0, 0]], "weight": 1, "tag": "x"}]},
        {"version": 1, "dimension": 1, "kind": "radial", "poly": [1, 1], "beta": 0, "quad_order": 8},
        {"version": 1, "dimension": 1, "kind": "radial", "poly": [1], "beta": 0},
        {"version": 1, "dimension": 1, "kind": "blob"},
        {"version": 1, "dimension": True, "kind": "atomic", "atoms": []},
    ],
)
def test_strict_parsing(doc):
    with pytest.raises(MeasureFormatError):
        measure_from_dict(doc)


def test_unreadable_file(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    with pytest.raises(MeasureFormatError):
        load_measure(p)
