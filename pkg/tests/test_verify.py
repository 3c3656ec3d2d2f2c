import csv
import io
import json
import math

import numpy as np
import pytest

from fockideal.fockmeasure import AtomicMeasure, hat, tilde
from fockideal.snf import KyFan, Lorentz, PowerSum, SupNorm
from fockideal.toeplitz import build_atomic
from fockideal.verify import (
    REPORT_COLUMNS,
    ReportRow,
    berezin_constant,
    berezin_sandwich,
    chain_family,
    chain_homogeneity,
    check_tilde_domination,
    lattice_symmetry,
    main_chain,
    partition_subadditivity,
    random_atomic,
    ratio_interval,
    rows_to_csv,
    rows_to_structured,
    run_suites,
)

PHIS = [PowerSum(1), PowerSum(2), SupNorm(), KyFan(5), Lorentz()]
THETA1 = sum(math.exp(-k * k) for k in range(-40, 41))


def test_berezin_constant_against_long_sum():
    c, tail = berezin_constant(1, 1.0, 1.0, 1.0)
    direct = math.exp(4) * sum((2 * m + 1) ** 2 * math.exp(-((m - 2) ** 2)) for m in range(200))
    assert math.isclose(c, direct, rel_tol=1e-13)
    assert tail < 1e-12 * c


@pytest.mark.parametrize("n,s,alpha,rho", [(1, 0.5, 0.25, 0.5), (2, 1.0, 1.0, 1.0), (2, 0.5, 0.25, 0.5)])
def test_berezin_constant_tail_is_certified(n, s, alpha, rho):
    c, tail = berezin_constant(n, s, alpha, rho)
    k = s * alpha * rho * rho
    direct = sum(math.exp(2 * n * math.log(2 * m + 1) - k * (m * m - 4 * n * m)) for m in range(4000))
    assert c <= direct <= c + tail
    assert tail < 1e-12 * c


def test_sandwich_theta_case():
    v = berezin_sandwich(AtomicMeasure([0.0]), 1.0, 1.0, 1.0, 1.0, PowerSum(1))
    assert abs(v.middle.value - THETA1**2) < 1e-12
    assert math.isclose(v.lower.value, math.exp(-2))
    assert v.passed


def test_sandwich_zero_measure():
    v = berezin_sandwich(AtomicMeasure(np.empty((0, 1)), dimension=1), 1.0, 1.0, 1.0, 1.0, PowerSum(2))
    assert v.lower.value == v.middle.value == v.upper.value == 0.0
    assert v.passed


@pytest.mark.parametrize("phi", PHIS, ids=str)
@pytest.mark.parametrize("s", [0.5, 1.0])
def test_sandwich_random(phi, s):
    rng = np.random.default_rng(4)
    for _ in range(3):
        nu = random_atomic(rng)
        for rho, gamma, alpha in [(0.5, 1.0, 0.25), (1.0, 0.5, 1.0)]:
            assert berezin_sandwich(nu, rho, gamma, alpha, s, phi).passed


def test_domination_sharp_constant_never_fails():
    rng = np.random.default_rng(0)
    for k in range(5):
        nu = random_atomic(rng, n=1 + k % 2)
        for r in (0.5, 2.0):
            assert check_tilde_domination(nu, r, 1.0, 300, seed=k, constant="sharp").passed


def test_domination_stated_constant_counterexample():
    # an atom near the corner of the sup-norm box around z = 0
    nu = AtomicMeasure([0.9 + 0.9j])
    assert hat(nu, 1.0, 0.0) == 1.0
    assert hat(nu, 1.0, 0.0) > math.exp(math.sqrt(2)) * tilde(nu, 1.0, 0.0)
    assert not check_tilde_domination(nu, 1.0, 1.0).passed


def test_domination_unit_atom_at_origin():
    v = check_tilde_domination(AtomicMeasure([0.0]), 1.0, 1.0, samples=10)
    assert math.isclose(v.constant, math.exp(math.sqrt(2)))


@pytest.mark.parametrize("phi", PHIS, ids=str)
@pytest.mark.parametrize("s", [0.5, 1.0])
def test_chain_single_atom_ratio_one(phi, s):
    rep = main_chain(AtomicMeasure([0.0], [2.0]), 1.0, s, 1.0, phi)
    assert abs(rep.ratio_hat - 1) <= 1e-10
    assert math.isclose(rep.operator, 2.0**s, rel_tol=1e-14)
    assert rep.all_finite


def test_chain_homogeneity():
    nu = random_atomic(np.random.default_rng(2), max_atoms=12)
    for phi in (PowerSum(1), SupNorm(), KyFan(5)):
        assert chain_homogeneity(nu, 1.0, 0.5, 1.0, phi) <= 1e-10


def test_chain_rejects_bad_power():
    with pytest.raises(ValueError):
        main_chain(AtomicMeasure([0.0]), 1.0, 1.5, 1.0, PowerSum(1))


def test_lattice_symmetry_preserves_values():
    nu = chain_family(3, size=5)[4]
    rng = np.random.default_rng(0)
    sv = build_atomic(nu).s_numbers().values
    for _ in range(5):
        moved = lattice_symmetry(nu, 0.5, rng)
        np.testing.assert_allclose(build_atomic(moved).s_numbers().values, sv, rtol=1e-10, atol=1e-13)
        a = main_chain(nu, 0.5, 1.0, 1.0, PowerSum(2)).hat.value
        b = main_chain(moved, 0.5, 1.0, 1.0, PowerSum(2)).hat.value
        assert math.isclose(a, b, rel_tol=1e-12)


def test_ratio_interval_reseed_stable():
    fam = chain_family(11, size=10)
    a = ratio_interval(fam, 1.0, 0.5, SupNorm(), seed=1)
    b = ratio_interval(fam, 1.0, 0.5, SupNorm(), seed=2)
    assert math.isfinite(a.bound) and a.bound >= 1
    assert abs(a.bound - b.bound) <= 0.05 * a.bound


@pytest.mark.parametrize("where", [0.0, 1 + 2j])
def test_partition_single_atom_on_lattice_is_equality(where):
    v = partition_subadditivity(AtomicMeasure([where]), 1.0, 2, 1.0, PowerSum(2))
    assert sum(1 for c in v.classes if c > 0) == 1
    assert v.full == v.class_sum and v.passed


def test_partition_single_atom_off_lattice_hits_four_classes():
    # an atom strictly inside a lattice cell lies in four open balls with distinct residues
    v = partition_subadditivity(AtomicMeasure([0.2 + 0.1j]), 1.0, 2, 1.0, PowerSum(2))
    assert sorted(v.classes)[-4:] == [1.0] * 4
    assert v.full == 2.0 and v.passed


@pytest.mark.parametrize("phi", PHIS, ids=str)
def test_partition_random(phi):
    rng = np.random.default_rng(8)
    for _ in range(5):
        v = partition_subadditivity(random_atomic(rng), 1.0, 2, 0.5, phi)
        assert v.passed
        if phi == PowerSum(1):
            assert math.isclose(v.full, v.class_sum, rel_tol=1e-12)


def test_report_formats_agree():
    rep = main_chain(AtomicMeasure([0.0]), 1.0, 1.0, 1.0, PowerSum(1))
    row = ReportRow.from_chain(rep, "x")
    text = rows_to_csv([row])
    parsed = list(csv.DictReader(io.StringIO(text)))
    assert tuple(parsed[0]) == REPORT_COLUMNS
    assert float(parsed[0]["lhs"]) == rep.operator
    doc = json.loads(rows_to_structured([row]))
    assert doc["rows"][0]["mid"] == float(parsed[0]["mid"])
    assert rows_to_csv([row]) == text


def test_run_suites_filter_and_unknown():
    res = run_suites(suites=["kernel-identity", "partition-subadditivity"])
    assert [r.name for r in res] == ["kernel-identity", "partition-subadditivity"]
    assert all(r.passed for r in res)
    with pytest.raises(KeyError):
        run_suites(suites=["nope"])
