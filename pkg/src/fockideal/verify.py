"""Numerical certification of the lattice-average characterization of ``|T_nu^s|_Phi``.

Each check returns a small record with the computed values, the error
certificates that went into the comparison, and a verdict. All inequality
verdicts use the same slack: ``lhs <= rhs * (1 + 1e-10) + 1e-12``, applied to
the certified lower end of ``lhs`` and the certified upper end of ``rhs``.
"""

from __future__ import annotations

import csv
from dataclasses import asdict, dataclass
import io
import json
import math
import time

import numpy as np

from . import fockmeasure as fm
from .fockmeasure import AtomicMeasure, DensityMeasure, Hat, Tilde, hat, lattice_sequence, required_shells, tilde
from .lattice import LatticeSpec, partition
from .snf import KyFan, LimitValue, PowerSum, SupNorm, axiom_suite, eval_limit, equiv_ratio_scan, format_snf, indicator
from .spectra import calculus_suite
from .toeplitz import berezin, build_atomic, frame_estimate, frame_ladder

__all__ = [
    "ChainReport",
    "DEFAULT_SEED",
    "DominationVerdict",
    "PartitionVerdict",
    "REPORT_COLUMNS",
    "RatioInterval",
    "ReportRow",
    "SUITES",
    "SandwichVerdict",
    "SuiteResult",
    "berezin_constant",
    "berezin_sandwich",
    "chain_family",
    "chain_homogeneity",
    "check_tilde_domination",
    "lattice_symmetry",
    "leq",
    "main_chain",
    "partition_subadditivity",
    "random_atomic",
    "ratio_interval",
    "rows_to_csv",
    "rows_to_structured",
    "run_suites",
    "sample_points",
]

DEFAULT_SEED = 1729
REL_SLACK = 1e-10
ABS_SLACK = 1e-12
# exp(-60) per entry is far below every tolerance used here
_TILDE_TAIL_EXPONENT = 60.0
_MAX_POINTS = 250_000


def leq(lhs: float, rhs: float) -> bool:
    """``lhs <= rhs`` up to the shared floating-point slack."""
    if math.isinf(rhs):
        return True
    return lhs <= rhs * (1 + REL_SLACK) + ABS_SLACK


# ---------------------------------------------------------------------------
# measure generators


def random_atomic(rng: np.random.Generator, n: int = 1, max_atoms: int = 10, radius: float = 3.0) -> AtomicMeasure:
    """Between 1 and ``max_atoms`` atoms in ``|w| <= radius``, weights in [0.5, 2]."""
    count = int(rng.integers(1, max_atoms + 1))
    pts = []
    while len(pts) < count:
        w = (rng.standard_normal(n) + 1j * rng.standard_normal(n)) * radius / 2
        if np.linalg.norm(w) <= radius:
            pts.append(w)
    return AtomicMeasure(np.array(pts), rng.uniform(0.5, 2.0, count), n)


def chain_family(seed: int, size: int = 50, atoms: int = 30, radius: float = 5.0) -> list[AtomicMeasure]:
    """Clustered atomic measures on C^1 whose spread runs from tight to diffuse.

    Measure ``k`` has ``atoms`` points drawn around a center in ``[-1, 1]^2``
    with Gaussian spread ``geomspace(0.05, 2.5, size)[k]``, kept inside
    ``|w| <= radius``, and weights in [0.5, 1.5].
    """
    rng = np.random.default_rng(seed)
    out = []
    for sigma in np.geomspace(0.05, 2.5, size):
        center = complex(*rng.uniform(-1, 1, 2))
        pts = []
        while len(pts) < atoms:
            w = center + sigma * complex(*rng.standard_normal(2))
            if abs(w) <= radius:
                pts.append([w])
        out.append(AtomicMeasure(np.array(pts), rng.uniform(0.5, 1.5, atoms), 1))
    return out


def lattice_symmetry(nu: AtomicMeasure, r: float, rng: np.random.Generator) -> AtomicMeasure:
    """Apply a random symmetry of the r-lattice to ``nu``.

    A lattice translation, a rotation by a power of ``i`` in each coordinate and
    an optional complex conjugation. Each is implemented on the Fock space by a
    unitary or antiunitary map that fixes the lattice, so both ``|T_nu^s|_Phi``
    and the lattice sequence of ``hat`` are unchanged.
    """
    n = nu.dimension
    shift = r * (rng.integers(-1, 2, n) + 1j * rng.integers(-1, 2, n))
    turn = 1j ** rng.integers(0, 4, n)
    pts = nu.points * turn
    if rng.random() < 0.5:
        pts = np.conj(pts)
    return AtomicMeasure(pts + shift, nu.weights, n)


def sample_points(nu, rng: np.random.Generator, count: int, pad: float = 2.0) -> np.ndarray:
    """``count`` uniform points in a sup-norm box covering the support plus ``pad``."""
    n = nu.dimension
    reach = (nu.sup_radius if nu.compact else 3.0) + pad
    re = rng.uniform(-reach, reach, (count, n))
    im = rng.uniform(-reach, reach, (count, n))
    return re + 1j * im


def _lattice_near(nu, r, pad_shells=2):
    reach = nu.sup_radius if nu.compact else 3.0
    m = math.ceil(reach / r) + pad_shells
    while (2 * m + 1) ** (2 * nu.dimension) > _MAX_POINTS and m > 1:
        m -= 1
    return fm.enumerate_lattice(LatticeSpec(r, nu.dimension, m))


# ---------------------------------------------------------------------------
# domination of hat by tilde


@dataclass(frozen=True)
class DominationVerdict:
    r: float
    alpha: float
    constant: float
    constant_kind: str
    samples: int
    violations: int
    max_ratio: float
    worst_point: tuple

    @property
    def passed(self) -> bool:
        return self.violations == 0


def domination_constant(n: int, r: float, alpha: float, kind: str = "stated") -> float:
    """``exp(alpha sqrt(2n) r^2)`` (``"stated"``) or ``exp(2n alpha r^2)`` (``"sharp"``).

    Points of the open sup-norm ball of radius r lie within Euclidean distance
    ``sqrt(2n) r``, so ``exp(-alpha |z-w|^2) > exp(-2n alpha r^2)`` there and the
    sharp constant always works; the stated one can fail.
    """
    if kind == "stated":
        return math.exp(alpha * math.sqrt(2 * n) * r * r)
    if kind == "sharp":
        return math.exp(2 * n * alpha * r * r)
    raise ValueError(f"unknown constant kind {kind!r}")


def check_tilde_domination(nu, r: float, alpha: float, samples: int = 1000, seed: int = DEFAULT_SEED, constant: str = "stated") -> DominationVerdict:
    """Test ``hat(nu, r, z) <= C * tilde(nu, alpha, z)`` at atoms, lattice points and random points."""
    rng = np.random.default_rng(seed)
    pts = [sample_points(nu, rng, samples), _lattice_near(nu, r)]
    if isinstance(nu, AtomicMeasure) and len(nu):
        pts.append(nu.points)
    z = np.concatenate(pts)
    c = domination_constant(nu.dimension, r, alpha, constant)
    h = hat(nu, r, z)
    t = tilde(nu, alpha, z)
    bad = h > c * t * (1 + ABS_SLACK) + ABS_SLACK
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.where(h > 0, h / t, 0.0)
    j = int(np.argmax(ratio))
    return DominationVerdict(r, alpha, c, constant, len(z), int(bad.sum()), float(ratio[j]), tuple(z[j].tolist()))


# ---------------------------------------------------------------------------
# Berezin sandwich


def berezin_constant(n: int, s: float, alpha: float, rho: float, rtol: float = 1e-12) -> tuple[float, float]:
    """``exp(s alpha 4 n^2 rho^2) sum_{m>=0} (2m+1)^(2n) exp(-s alpha rho^2 (m-2n)^2)``.

    Returns ``(partial sum, bound on the omitted tail)`` with the tail below
    ``rtol`` times the partial sum. Terms are summed as
    ``(2m+1)^(2n) exp(-s alpha rho^2 (m^2 - 4nm))``. Past the peak the ratio of
    consecutive terms decreases to 0, so once it drops below 1 the remainder is
    bounded by a geometric series.
    """
    c = s * alpha * rho * rho
    if not c > 0:
        raise ValueError("s, alpha and rho must be positive")

    def term(m):
        return math.exp(2 * n * math.log(2 * m + 1) - c * (m * m - 4 * n * m))

    total = 0.0
    m = 0
    while True:
        t = term(m)
        total += t
        nxt = term(m + 1)
        ratio = nxt / t
        if m > 2 * n and ratio < 1 and nxt / (1 - ratio) < rtol * total:
            return total, nxt / (1 - ratio)
        m += 1


@dataclass(frozen=True)
class SandwichVerdict:
    rho: float
    gamma: float
    alpha: float
    s: float
    phi: str
    lower: LimitValue
    middle: LimitValue
    upper: LimitValue
    constant: float
    constant_tail: float
    shells: int

    @property
    def infinite(self) -> bool:
        return self.lower.infinite or self.middle.infinite or self.upper.infinite

    @property
    def passed(self) -> bool:
        if self.infinite:
            # divergence must be shared by all three
            return self.lower.infinite == self.middle.infinite == self.upper.infinite
        return leq(self.lower.lower, self.middle.upper) and leq(self.middle.lower, self.upper.upper)


def _tilde_shells(nu, alpha, s, h):
    """Enough shells to push each omitted ``tilde^s`` entry below ``exp(-60)`` times ``mass^s``."""
    reach = math.sqrt(_TILDE_TAIL_EXPONENT / (s * alpha))
    m = max(required_shells(nu, Tilde(alpha), h), math.ceil((nu.radius + reach) / h))
    while (2 * m + 1) ** (2 * nu.dimension) > _MAX_POINTS and m > required_shells(nu, Tilde(alpha), h):
        m -= 1
    return m


def _scaled_limit(v: LimitValue, c_lo: float, c_hi: float) -> LimitValue:
    return LimitValue(v.lower * c_lo, v.upper * c_hi, v.infinite)


def berezin_sandwich(nu, rho: float, gamma: float, alpha: float, s: float, phi, max_shell: int | None = None) -> SandwichVerdict:
    """Check ``L <= M <= U`` on the rho-lattice ``{b_j}``.

    ``L = exp(-s gamma^2 alpha 2n) Phi(hat_gamma(b_j)^s)``,
    ``M = Phi(tilde_alpha(b_j)^s)`` and ``U = C Phi(hat_rho(b_j)^s)`` with
    ``C`` from :func:`berezin_constant`.
    """
    n = nu.dimension
    if max_shell is None:
        max_shell = max(
            required_shells(nu, Hat(gamma), rho),
            required_shells(nu, Hat(rho), rho),
            _tilde_shells(nu, alpha, s, rho),
        )
    spec = LatticeSpec(rho, n, max_shell)
    lo = eval_limit(phi, lattice_sequence(nu, Hat(gamma), spec, s))
    mid = eval_limit(phi, lattice_sequence(nu, Tilde(alpha), spec, s))
    hi = eval_limit(phi, lattice_sequence(nu, Hat(rho), spec, s))
    c, c_tail = berezin_constant(n, s, alpha, rho)
    damp = math.exp(-s * gamma * gamma * alpha * 2 * n)
    return SandwichVerdict(
        rho, gamma, alpha, s, format_snf(phi),
        _scaled_limit(lo, damp, damp), mid, _scaled_limit(hi, c, c + c_tail), c, c_tail, max_shell,
    )


# ---------------------------------------------------------------------------
# main chain


@dataclass(frozen=True)
class ChainReport:
    measure_id: str
    n: int
    r: float
    s: float
    alpha: float
    phi: str
    operator: float
    hat: LimitValue
    tilde: LimitValue
    shells: int

    @property
    def ratio_hat(self) -> float:
        return self.operator / self.hat.value if self.hat.value > 0 else math.nan

    @property
    def ratio_tilde(self) -> float:
        return self.operator / self.tilde.value if self.tilde.value > 0 else math.nan

    @property
    def all_finite(self) -> bool:
        return math.isfinite(self.operator) and not self.hat.infinite and not self.tilde.infinite

    @property
    def error(self) -> float:
        return max(self.hat.error, self.tilde.error)


def _operator_value(nu, s, phi, cache=None):
    if len(nu) == 0:
        return 0.0
    key = id(nu)
    if cache is not None and key in cache:
        ev = cache[key]
    else:
        ev = build_atomic(nu).s_numbers().values
        if cache is not None:
            cache[key] = ev
    return phi(ev**s)


def main_chain(nu: AtomicMeasure, r: float, s: float, alpha: float, phi, max_shell: int | None = None, measure_id: str = "nu", _cache=None) -> ChainReport:
    """``|T_nu^s|_Phi``, ``Phi(hat_r(a_j)^s)`` and ``Phi(tilde_alpha(a_j)^s)`` on the r-lattice.

    The operator value is exact through the Gram matrix; the lattice values carry
    their tail certificates.
    """
    if not isinstance(nu, AtomicMeasure):
        raise TypeError("main_chain needs an atomic measure (exact spectrum path)")
    if not (0 < s <= 1):
        raise ValueError(f"power must lie in (0, 1], got s={s}")
    if not (r > 0 and alpha > 0):
        raise ValueError("r and alpha must be positive")
    n = nu.dimension
    if max_shell is None:
        max_shell = max(required_shells(nu, Hat(r), r), _tilde_shells(nu, alpha, s, r))
    spec = LatticeSpec(r, n, max_shell)
    op = _operator_value(nu, s, phi, _cache)
    hv = eval_limit(phi, lattice_sequence(nu, Hat(r), spec, s))
    tv = eval_limit(phi, lattice_sequence(nu, Tilde(alpha), spec, s))
    return ChainReport(measure_id, n, r, s, alpha, format_snf(phi), op, hv, tv, max_shell)


def chain_homogeneity(nu: AtomicMeasure, r: float, s: float, alpha: float, phi, scales=(0.1, 1.0, 7.0)) -> float:
    """Largest relative deviation from ``value(c nu) = c^s value(nu)`` over the three chain values."""
    base = main_chain(nu, r, s, alpha, phi)
    worst = 0.0
    for c in scales:
        rep = main_chain(nu.scaled(c), r, s, alpha, phi, max_shell=base.shells)
        pairs = [(rep.operator, base.operator), (rep.hat.value, base.hat.value), (rep.tilde.value, base.tilde.value)]
        for got, ref in pairs:
            want = c**s * ref
            worst = max(worst, abs(got - want) / max(abs(want), 1e-300))
    return worst


@dataclass(frozen=True)
class RatioInterval:
    r: float
    s: float
    phi: str
    low: float
    high: float

    @property
    def bound(self) -> float:
        """``B`` with every ratio in ``[1/B, B]``."""
        return max(self.high, 1.0 / self.low)


def ratio_interval(family, r: float, s: float, phi, seed: int, alpha: float = 1.0, _cache=None) -> RatioInterval:
    """Range of ``|T_nu^s|_Phi / Phi(hat_r(a_j)^s)`` over ``family``.

    ``seed`` draws one lattice symmetry per measure (see :func:`lattice_symmetry`),
    so different seeds evaluate the same family in different positions.
    """
    rng = np.random.default_rng(seed)
    ratios = []
    for k, nu in enumerate(family):
        moved = lattice_symmetry(nu, r, rng)
        spec = LatticeSpec(r, nu.dimension, required_shells(moved, Hat(r), r))
        op = _operator_value(moved, s, phi, None)
        hv = eval_limit(phi, lattice_sequence(moved, Hat(r), spec, s)).value
        ratios.append(op / hv)
    ratios = np.array(ratios)
    return RatioInterval(r, s, format_snf(phi), float(ratios.min()), float(ratios.max()))


# ---------------------------------------------------------------------------
# sublattice partition


@dataclass(frozen=True)
class PartitionVerdict:
    m: int
    phi: str
    full: float
    classes: tuple

    @property
    def class_sum(self) -> float:
        return float(sum(self.classes))

    @property
    def passed(self) -> bool:
        return leq(self.full, self.class_sum) and all(leq(v, self.full) for v in self.classes)


def partition_subadditivity(nu, r: float, m: int, s: float, phi, max_shell: int | None = None) -> PartitionVerdict:
    """``Phi`` over the full hat sequence versus its ``m^(2n)`` residue classes."""
    n = nu.dimension
    if max_shell is None:
        max_shell = required_shells(nu, Hat(r), r)
    spec = LatticeSpec(r, n, max_shell)
    seq = lattice_sequence(nu, Hat(r), spec, s).prefix
    parts = partition(spec, m)
    values = tuple(phi(seq[idx]) if idx.size else 0.0 for idx in parts.classes)
    return PartitionVerdict(m, format_snf(phi), phi(seq), values)


# ---------------------------------------------------------------------------
# reports

REPORT_COLUMNS = (
    "scenario_id", "theorem", "n", "r", "rho", "gamma", "alpha", "s", "phi",
    "lhs", "mid", "rhs", "constant", "ratio", "verdict", "err_cert",
)


@dataclass(frozen=True)
class ReportRow:
    scenario_id: str
    theorem: str
    n: int
    r: float | None = None
    rho: float | None = None
    gamma: float | None = None
    alpha: float | None = None
    s: float | None = None
    phi: str | None = None
    lhs: float | None = None
    mid: float | None = None
    rhs: float | None = None
    constant: float | None = None
    ratio: float | None = None
    verdict: str = "pass"
    err_cert: float | None = None

    @classmethod
    def from_chain(cls, rep: ChainReport, scenario_id: str) -> "ReportRow":
        return cls(
            scenario_id, "main-chain", rep.n, r=rep.r, alpha=rep.alpha, s=rep.s, phi=rep.phi,
            lhs=rep.operator, mid=rep.hat.value, rhs=rep.tilde.value, ratio=rep.ratio_hat,
            verdict="pass" if rep.all_finite else "fail", err_cert=rep.error,
        )

    @classmethod
    def from_sandwich(cls, v: SandwichVerdict, scenario_id: str, n: int) -> "ReportRow":
        ratio = v.middle.value / v.upper.value if v.upper.value > 0 else math.nan
        err = max(v.lower.error, v.middle.error, v.upper.error)
        verdict = "pass" if v.passed else "fail"
        if v.infinite:
            verdict += "-infinite"
        return cls(
            scenario_id, "berezin-sandwich", n, rho=v.rho, gamma=v.gamma, alpha=v.alpha, s=v.s, phi=v.phi,
            lhs=v.lower.value, mid=v.middle.value, rhs=v.upper.value, constant=v.constant, ratio=ratio,
            verdict=verdict, err_cert=err,
        )


def _cell(x) -> str:
    if x is None:
        return ""
    if isinstance(x, float):
        return repr(x)
    return str(x)


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(REPORT_COLUMNS)
    for row in rows:
        d = asdict(row)
        w.writerow([_cell(d[c]) for c in REPORT_COLUMNS])
    return buf.getvalue()


def _json_value(x):
    if isinstance(x, float) and not math.isfinite(x):
        return str(x)
    return x


def rows_to_structured(rows) -> str:
    """The same table as a JSON document, one object per row, columns in CSV order."""
    body = [{c: _json_value(asdict(row)[c]) for c in REPORT_COLUMNS} for row in rows]
    return json.dumps({"columns": list(REPORT_COLUMNS), "rows": body}, indent=1) + "\n"


# ---------------------------------------------------------------------------
# suites


@dataclass
class SuiteResult:
    name: str
    passed: bool
    max_violation: float
    detail: str = ""
    seconds: float = 0.0


def _suite_snf(seed, measures):
    counts = axiom_suite(seed, trials=2000)
    up, _ = equiv_ratio_scan(PowerSum(1), SupNorm(), [indicator(k) for k in (1, 10, 100, 1000)])
    kf, _ = equiv_ratio_scan(KyFan(3), SupNorm(), [indicator(k) for k in range(1, 200)])
    bad = sum(counts.values())
    ok = bad == 0 and up >= 1000 and kf <= 3
    return ok, float(bad), f"violations={bad} p=1/inf on indicators={up:g} kyfan:3/inf max={kf:g}"


def _suite_spectra(seed, measures):
    rep = calculus_suite(seed, trials=200, max_dim=50)
    worst = max(rep.violations, key=rep.violations.get)
    return rep.passed(), rep.max_violation, f"worst check {worst}"


def _suite_kernel(seed, measures):
    rng = np.random.default_rng(seed)
    worst = 0.0
    for n in (1, 2):
        for p in (1.0, 2.0, 4.0):
            for _ in range(20):
                z = rng.standard_normal(n) + 1j * rng.standard_normal(n)
                z *= rng.uniform(0, 3) / np.linalg.norm(z)
                worst = max(worst, abs(fm.kernel_identity_check(z, p) - 1.0))
    return worst <= 1e-8, worst, "p in {1,2,4}, n in {1,2}, 20 points each"


def _default_measures(seed, count=20):
    rng = np.random.default_rng(seed)
    return [random_atomic(rng, n=1 + k % 2) for k in range(count)]


def _suite_domination(seed, measures):
    ms = measures or _default_measures(seed)
    stated = 0
    sharp = 0
    for k, nu in enumerate(ms):
        for r in (0.5, 1.0, 2.0):
            for a in (0.5, 1.0, 2.0):
                sharp += check_tilde_domination(nu, r, a, 1000, seed + k, "sharp").violations
                stated += check_tilde_domination(nu, r, a, 1000, seed + k, "stated").violations
    detail = f"constant exp(2n a r^2): {sharp} violations; constant exp(a sqrt(2n) r^2): {stated} violations"
    return sharp == 0, float(sharp), detail


def _suite_berezin_identity(seed, measures):
    rng = np.random.default_rng(seed)
    ms = list(measures or _default_measures(seed))
    ms += [DensityMeasure(1, (1.0, 0.5), 0.5), DensityMeasure(2, (2.0,), 0.0)]
    worst = 0.0
    for nu in ms:
        z = sample_points(nu, rng, 1000)
        b = berezin(nu, z)
        t = tilde(nu, 1.0, z)
        worst = max(worst, float(np.max(np.abs(b - t) / np.maximum(np.abs(t), 1e-300))))
    return worst <= 1e-10, worst, f"{len(ms)} measures x 1000 points"


def _suite_sandwich(seed, measures):
    rng = np.random.default_rng(seed)
    ms = list(measures or [random_atomic(rng, n=1) for _ in range(10)])
    ms = [nu for nu in ms if nu.compact]
    phis = (PowerSum(1), PowerSum(2), SupNorm(), KyFan(5))
    fails = 0
    cases = 0
    for nu in ms:
        for rho in (0.5, 1.0):
            for gamma in (0.5, 1.0):
                for alpha in (0.25, 1.0):
                    for s in (0.5, 1.0):
                        for phi in phis:
                            cases += 1
                            fails += not berezin_sandwich(nu, rho, gamma, alpha, s, phi).passed
    theta = berezin_sandwich(AtomicMeasure([0.0]), 1.0, 1.0, 1.0, 1.0, PowerSum(1)).middle.value
    oracle = sum(math.exp(-k * k) for k in range(-30, 31)) ** 2
    ok = fails == 0 and abs(theta - oracle) <= 1e-6
    return ok, float(fails), f"{cases} cases; theta check {theta:.10f} vs {oracle:.10f}"


def _suite_partition(seed, measures):
    rng = np.random.default_rng(seed)
    ms = list(measures or [random_atomic(rng, n=1) for _ in range(10)])
    ms = [nu for nu in ms if nu.compact]
    fails = 0
    additive = 0.0
    for nu in ms:
        for phi in (PowerSum(1), PowerSum(2), SupNorm(), KyFan(5)):
            for s in (0.5, 1.0):
                v = partition_subadditivity(nu, 1.0, 2, s, phi)
                fails += not v.passed
                if isinstance(phi, PowerSum) and phi.p == 1:
                    additive = max(additive, abs(v.full - v.class_sum) / max(v.full, 1e-300))
    ok = fails == 0 and additive <= 1e-10
    return ok, float(fails), f"p=1 additivity defect {additive:.2e}"


def _suite_frame(seed, measures):
    spec = LatticeSpec(0.3, 1, 40)
    est = frame_estimate(0.3, 10, spec, trials=100, seed=seed)
    ratio = est.c2 / est.c1
    ok = est.c1 > 0 and ratio < 1e3
    ladder = frame_ladder(degree=10, trials=20, seed=seed)
    return ok, ratio, f"C1={est.c1:.6g} C2={est.c2:.6g} (rho=0.3, degree 10); lower bound degrades at rho={ladder.degraded_at}"


SUITES = {
    "snf-axioms": _suite_snf,
    "spectra-calculus": _suite_spectra,
    "kernel-identity": _suite_kernel,
    "tilde-domination": _suite_domination,
    "berezin-identity": _suite_berezin_identity,
    "berezin-sandwich": _suite_sandwich,
    "partition-subadditivity": _suite_partition,
    "frame-estimate": _suite_frame,
}


def run_suites(seed: int = DEFAULT_SEED, suites=None, measures=None) -> list[SuiteResult]:
    """Run the named suites (all by default) in a fixed order.

    ``measures``, when given, replaces the randomly drawn measures in the
    suites that take measures.
    """
    names = list(SUITES) if not suites else list(suites)
    unknown = [s for s in names if s not in SUITES]
    if unknown:
        raise KeyError(f"unknown suite(s): {', '.join(unknown)}")
    out = []
    for name in names:
        t0 = time.perf_counter()
        ok, worst, detail = SUITES[name](seed, measures)
        out.append(SuiteResult(name, bool(ok), float(worst), detail, time.perf_counter() - t0))
    return out
