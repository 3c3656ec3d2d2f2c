import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from fockideal.snf import (
    AXIOM_FAMILY,
    CertifiedSequence,
    KyFan,
    Lorentz,
    PowerSum,
    SupNorm,
    axiom_suite,
    canonical,
    dominance_holds,
    equiv_ratio_scan,
    eval_limit,
    format_snf,
    indicator,
    parse_snf,
    sandwich_holds,
)

FAMILY = list(AXIOM_FAMILY)
seqs = arrays(np.float64, st.integers(1, 30), elements=st.floats(-1e6, 1e6, allow_nan=False))


@pytest.mark.parametrize("phi", FAMILY, ids=str)
def test_normalized(phi):
    assert phi([1.0]) == 1.0
    assert phi([0.0, -1.0, 0.0]) == 1.0
    assert phi([]) == 0.0


@pytest.mark.parametrize(
    "phi,xs,want",
    [
        (PowerSum(1), [3, -4], 7.0),
        (PowerSum(2), [3, -4], 5.0),
        (SupNorm(), [3, -4], 4.0),
        (KyFan(2), [1, 5, -3, 2], 8.0),
        (Lorentz(), [1, 1], 2 / 1.5),
        (Lorentz((1.0, 0.5)), [1, 1, 1], 3 / 2.0),
    ],
)
def test_known_values(phi, xs, want):
    assert math.isclose(phi(xs), want, rel_tol=1e-15)


@pytest.mark.parametrize("phi", FAMILY, ids=str)
@given(xs=seqs, seed=st.integers(0, 2**32 - 1))
@settings(max_examples=60, deadline=None)
def test_symmetry_is_bit_exact(phi, xs, seed):
    rng = np.random.default_rng(seed)
    moved = rng.permutation(xs) * rng.choice([-1.0, 1.0], xs.size)
    assert phi(moved) == phi(xs)
    assert sandwich_holds(phi, xs)


@pytest.mark.parametrize("phi", FAMILY, ids=str)
@given(xs=seqs, ys=seqs)
@settings(max_examples=60, deadline=None)
def test_triangle_inequality(phi, xs, ys):
    size = max(xs.size, ys.size)
    a = np.pad(xs, (0, size - xs.size))
    b = np.pad(ys, (0, size - ys.size))
    assert phi(a + b) <= (phi(a) + phi(b)) * (1 + 1e-12) + 1e-300


def test_canonical_sorts_magnitudes():
    np.testing.assert_array_equal(canonical([1, -3, 2]), [3, 2, 1])


def test_dominance_precondition_is_distinct_from_failure():
    assert dominance_holds(PowerSum(2), [1, 1], [2, 1])
    with pytest.raises(ValueError):
        dominance_holds(PowerSum(2), [3, 1], [2, 1])


@pytest.mark.parametrize("bad", [lambda: PowerSum(0.5), lambda: PowerSum(math.inf), lambda: KyFan(0), lambda: Lorentz((0.5, 0.25)), lambda: Lorentz((1.0, 2.0)), lambda: Lorentz(())])
def test_invalid_variants(bad):
    with pytest.raises(ValueError):
        bad()


def test_indicator_scan_separates_p1_from_sup():
    fam = [indicator(k) for k in (1, 10, 100, 1000, 10000)]
    up, down = equiv_ratio_scan(PowerSum(1), SupNorm(), fam)
    assert up == 10000 and down == 1
    up, _ = equiv_ratio_scan(KyFan(3), SupNorm(), [indicator(k) for k in range(1, 500)])
    assert up <= 3


@pytest.mark.parametrize("phi,bounded", [(PowerSum(1), False), (PowerSum(2), False), (SupNorm(), True), (KyFan(4), True), (Lorentz(), False), (Lorentz((1.0, 0.5)), True)])
def test_indicator_boundedness_flags(phi, bounded):
    assert phi.indicator_bounded() is bounded
    vals = [phi(indicator(k)) for k in (10, 1000, 100000)]
    grows = vals[-1] > 20
    assert grows is not bounded


def test_eval_limit_requires_certificate():
    with pytest.raises(TypeError):
        eval_limit(PowerSum(1), np.ones(3))


def test_eval_limit_brackets_geometric_tail():
    # 1, 1/2, 1/4, ... with the first 10 terms kept
    prefix = 0.5 ** np.arange(10)
    seq = CertifiedSequence(prefix, tail_bound=0.5**10, tail_sum_bound=0.5**9)
    for phi, exact in [(PowerSum(1), 2.0), (SupNorm(), 1.0), (PowerSum(2), math.sqrt(4 / 3))]:
        v = eval_limit(phi, seq)
        assert v.lower <= exact <= v.upper
        assert not v.infinite


def test_eval_limit_divergence_certificate():
    seq = CertifiedSequence(np.ones(5), tail_bound=1.0, tail_sum_bound=math.inf, tail_floor=1.0)
    assert eval_limit(PowerSum(2), seq).infinite
    v = eval_limit(SupNorm(), seq)
    assert not v.infinite and v.value == 1.0


def test_certified_sequence_validation():
    with pytest.raises(ValueError):
        CertifiedSequence(np.ones(2), tail_floor=1.0, tail_sum_bound=1.0)
    with pytest.raises(ValueError):
        CertifiedSequence(np.ones(2), tail_bound=-1.0)


@pytest.mark.parametrize("text", ["p=1", "p=2", "p=2.5", "inf", "kyfan:5", "lorentz", "lorentz:1.0,0.5,0.25"])
def test_syntax_round_trip(text):
    phi = parse_snf(text)
    assert parse_snf(format_snf(phi)) == phi
    assert format_snf(phi) == text


@pytest.mark.parametrize("text", ["p=0.5", "kyfan:0", "nope", "lorentz:2,1"])
def test_syntax_rejects(text):
    with pytest.raises(ValueError):
        parse_snf(text)


def test_axiom_suite_small_run_is_clean():
    assert not any(axiom_suite(seed=3, trials=300).values())
