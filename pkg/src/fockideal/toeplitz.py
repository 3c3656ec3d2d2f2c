"""Finite matrices carrying the spectrum of a Toeplitz operator on the Fock space.

``T_nu f(z) = integral K(z, w) f(w) exp(-|w|^2) d nu(w)``.

For an atomic symbol ``T_nu = sum_m c_m k_{w_m} (x) k_{w_m}`` is a finite sum of
rank-one projections, so its nonzero spectrum is exactly that of the weighted
Gram matrix of the kernel states. Any other symbol is handled through its
compression to polynomials of bounded degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
import itertools
import math
from typing import NamedTuple

import numpy as np
from scipy import special, stats

from .fockmeasure import AtomicMeasure, DensityMeasure, hat, kernel_overlap
from .lattice import LatticeSpec, as_points, enumerate_lattice, shell_count
from .spectra import HermitianPSD, SValues, s_numbers

__all__ = [
    "FrameEstimate",
    "NormBounds",
    "ToeplitzCompression",
    "berezin",
    "berezin_closed_form",
    "build_atomic",
    "build_truncated",
    "frame_estimate",
    "frame_tail",
    "multi_indices",
    "norm_bounds",
    "radial_diagonal",
]

FRAME_TAIL_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class ToeplitzCompression:
    """A finite Hermitian PSD matrix standing in for ``T_nu``.

    ``mode`` is ``"atomic"`` (weighted Gram matrix, exact nonzero spectrum) or
    ``"truncated"`` (compression to polynomials of degree ``<= degree``).
    """

    source: object
    mode: str
    matrix: HermitianPSD
    degree: int | None = None
    basis: np.ndarray | None = None

    @property
    def exact(self) -> bool:
        return self.mode == "atomic"

    @property
    def dim(self) -> int:
        return self.matrix.dim

    def s_numbers(self) -> SValues:
        if self.mode == "atomic":
            return atomic_s_numbers(self.source)
        return s_numbers(self.matrix)


@lru_cache(maxsize=32)
def multi_indices(n: int, degree: int) -> np.ndarray:
    """Multi-indices ``|beta| <= degree`` in graded lexicographic order.

    Degree 0 first; inside one degree, larger exponents on earlier coordinates
    come first. The basis for degree ``d`` is a prefix of the one for ``d+1``.
    """
    rows = []
    for k in range(degree + 1):
        block = [b for b in itertools.product(range(k, -1, -1), repeat=n) if sum(b) == k]
        rows.extend(block)
    out = np.array(rows, dtype=np.int64).reshape(-1, n)
    out.setflags(write=False)
    return out


def _log_factorial(beta):
    return special.gammaln(np.asarray(beta) + 1.0).sum(axis=-1)


def _basis_values(points, basis):
    """``e_beta(w) exp(-|w|^2/2)`` for every point (rows) and multi-index (columns)."""
    w = np.asarray(points, dtype=complex)
    zero = w == 0
    logabs = np.log(np.where(zero, 1.0, np.abs(w)))
    angle = np.angle(w)
    b = basis[None, :, :]
    # 0**0 = 1, while a positive power of a zero coordinate kills the term
    term = b * logabs[:, None, :]
    term = np.where(zero[:, None, :] & (b > 0), -np.inf, term)
    mag = term.sum(axis=-1) - 0.5 * _log_factorial(basis)[None, :] - 0.5 * np.sum(np.abs(w) ** 2, axis=1)[:, None]
    phase = (b * angle[:, None, :]).sum(axis=-1)
    return np.exp(mag + 1j * phase)


def build_atomic(nu: AtomicMeasure) -> ToeplitzCompression:
    """Weighted Gram matrix ``sqrt(c_j c_k) <k_{w_k}, k_{w_j}>``.

    Its eigenvalues are exactly the nonzero s-numbers of ``T_nu`` (plus zeros
    when kernel states are linearly dependent).
    """
    if not isinstance(nu, AtomicMeasure):
        raise TypeError("build_atomic needs an AtomicMeasure")
    if len(nu) == 0:
        raise ValueError("the Gram matrix needs at least one atom")
    w = nu.points
    gram = kernel_overlap(w[None, :, :], w[:, None, :])
    root = np.sqrt(nu.weights)
    m = root[:, None] * gram * root[None, :]
    return ToeplitzCompression(nu, "atomic", HermitianPSD.from_any(m))


FACTOR_TAIL = 1e-34
FACTOR_MAX_COLUMNS = 20_000


def atomic_s_numbers(nu: AtomicMeasure) -> SValues:
    """Nonzero s-numbers of ``T_nu`` for an atomic measure, to full relative precision.

    The Gram eigenvalues equal the squared singular values of the matrix whose
    rows are ``sqrt(c_j) k_{w_j}/|k_{w_j}|`` in the monomial basis. Taking the SVD
    of that factor keeps small eigenvalues accurate to ``eps * lambda_max`` in
    their square roots, which fractional powers need. Atoms are first centred at
    their weighted mean (a unitary change that keeps the spectrum); the Gram
    eigenvalues are used instead when the basis would exceed
    ``FACTOR_MAX_COLUMNS`` columns.
    """
    if len(nu) == 0:
        raise ValueError("the Gram matrix needs at least one atom")
    w = nu.points - np.average(nu.points, axis=0, weights=nu.weights)
    n = nu.dimension
    r2 = float(np.max(np.sum(np.abs(w) ** 2, axis=1)))
    degree = int(r2)
    while stats.poisson.sf(degree, r2) > FACTOR_TAIL:
        degree += 1 + degree // 8
    if math.comb(degree + n, n) > FACTOR_MAX_COLUMNS:
        return s_numbers(build_atomic(nu).matrix)
    a = _basis_values(w, multi_indices(n, degree))
    # the rows have unit norm up to the dropped tail; fix the rounding in the exponentials
    a *= (np.sqrt(nu.weights) / np.linalg.norm(a, axis=1))[:, None]
    sv = np.linalg.svd(a, compute_uv=False)
    ev = np.zeros(len(nu))
    ev[: sv.size] = sv**2
    return SValues(ev)


def radial_diagonal(nu: DensityMeasure, degrees) -> np.ndarray:
    """``<T_nu e_beta, e_beta>`` for a radial density, as a function of ``|beta|``.

    Equals ``pi^n / (k+n-1)! * int_0^{N^2} t^(k+n-1) q(t) exp(-(1+beta) t) dt``
    with ``k = |beta|``, evaluated through (regularized) incomplete gamma functions.
    """
    k = np.asarray(degrees, dtype=float)
    n = nu.dimension
    rate = 1.0 + nu.beta
    total = np.zeros_like(k)
    for j, c in enumerate(nu.poly):
        if c == 0:
            continue
        a = k + n + j
        log_term = special.gammaln(a) - special.gammaln(k + n) - a * math.log(rate)
        term = c * np.exp(log_term)
        if nu.radius is not None:
            term = term * special.gammainc(a, rate * nu.radius**2)
        total += term
    return math.pi**n * total


def build_truncated(nu, degree: int) -> ToeplitzCompression:
    """Compression of ``T_nu`` to polynomials of degree ``<= degree``.

    Entry ``(gamma, beta)`` is ``<T_nu e_beta, e_gamma> = int e_beta conj(e_gamma) exp(-|w|^2) d nu``.
    Radial densities give a diagonal matrix in closed form.
    """
    if int(degree) != degree or degree < 0:
        raise ValueError(f"degree must be a nonnegative integer, got {degree}")
    basis = multi_indices(nu.dimension, int(degree))
    if isinstance(nu, AtomicMeasure):
        if len(nu) == 0:
            m = np.zeros((len(basis), len(basis)), dtype=complex)
        else:
            a = np.sqrt(nu.weights)[:, None] * _basis_values(nu.points, basis)
            m = a.conj().T @ a
        mat = HermitianPSD.from_any(m)
    elif isinstance(nu, DensityMeasure):
        mat = HermitianPSD(np.diag(radial_diagonal(nu, basis.sum(axis=1))).astype(complex))
    else:
        raise TypeError(f"unsupported measure type {type(nu).__name__}")
    return ToeplitzCompression(nu, "truncated", mat, int(degree), basis)


def berezin_closed_form(nu: AtomicMeasure, z) -> np.ndarray:
    """``sum_m c_m exp(-|z - w_m|^2)``."""
    z = as_points(z, nu.dimension).reshape(-1, nu.dimension)
    d = z[:, None, :] - nu.points[None, :, :]
    return np.exp(-np.sum(np.abs(d) ** 2, axis=-1)) @ nu.weights


def _radial_berezin(nu: DensityMeasure, z):
    x = np.sum(np.abs(z) ** 2, axis=1)
    kmax = int(np.max(x, initial=0.0) + 40 * math.sqrt(np.max(x, initial=0.0) + 1) + 60)
    k = np.arange(kmax + 1)
    diag = radial_diagonal(nu, k)
    pmf = stats.poisson.pmf(k[None, :], x[:, None])
    return pmf @ diag


def berezin(source, z):
    """``<T_nu k_z, k_z>`` at one point or a batch of points of C^n.

    Atomic symbols use the rank-one expansion ``sum_m c_m |<k_z, k_{w_m}>|^2``;
    radial densities use the diagonal of the truncated basis weighted by the
    Poisson law of ``|z|^2``. Either way the value should equal
    ``tilde(nu, 1, z)``.
    """
    nu = source.source if isinstance(source, ToeplitzCompression) else source
    raw = np.asarray(z, dtype=complex)
    if nu.dimension == 1 and raw.ndim <= 1:
        shape = raw.shape
        pts = as_points(raw.reshape(-1, 1), 1)
    else:
        pts = as_points(raw, nu.dimension)
        shape = pts.shape[:-1]
    flat = pts.reshape(-1, nu.dimension)
    if isinstance(nu, AtomicMeasure):
        if len(nu) == 0:
            vals = np.zeros(len(flat))
        else:
            ov = kernel_overlap(flat[:, None, :], nu.points[None, :, :])
            vals = np.abs(ov) ** 2 @ nu.weights
    elif isinstance(nu, DensityMeasure):
        vals = _radial_berezin(nu, flat)
    else:
        raise TypeError(f"unsupported measure type {type(nu).__name__}")
    vals = vals.reshape(shape)
    return float(vals) if vals.ndim == 0 else vals


class NormBounds(NamedTuple):
    lower: float
    upper_evidence: float


def norm_bounds(nu, r: float, degree: int = 16, grid_step: float | None = None, max_grid: int = 200_000) -> NormBounds:
    """Two-sided evidence for ``||T_nu||``.

    ``lower`` is the top s-number of the best available matrix (exact for
    atomic symbols, a compression otherwise). ``upper_evidence`` is the largest
    ``hat(nu, r, .)`` seen on the r-lattice and on a finer sample grid covering
    the support, which stays bounded exactly when the operator is bounded.
    """
    if not nu.compact:
        raise ValueError("norm_bounds needs a compactly supported measure")
    n = nu.dimension
    if isinstance(nu, AtomicMeasure):
        if len(nu) == 0:
            return NormBounds(0.0, 0.0)
        lower = float(build_atomic(nu).s_numbers()[0])
    else:
        lower = float(build_truncated(nu, degree).s_numbers()[0])
    reach = nu.sup_radius + r
    shells = math.ceil(reach / r)
    pts = [enumerate_lattice(LatticeSpec(r, n, shells))]
    step = r / 4 if grid_step is None else grid_step
    per_axis = 2 * math.ceil(reach / step) + 1
    while per_axis ** (2 * n) > max_grid:
        step *= 1.5
        per_axis = 2 * math.ceil(reach / step) + 1
    fine = enumerate_lattice(LatticeSpec(step, n, math.ceil(reach / step)))
    pts.append(fine)
    if isinstance(nu, AtomicMeasure):
        pts.append(nu.points)
    upper = float(np.max(hat(nu, r, np.concatenate(pts))))
    return NormBounds(lower, upper)


def frame_tail(rho: float, degree: int, n: int, max_shell: int) -> float:
    """Bound on ``sum |<g, k_b>|^2`` over lattice points outside ``max_shell``, for ``||g|| = 1``.

    For ``g`` of degree ``<= d`` Cauchy-Schwarz in the monomial basis gives
    ``|<g, k_b>|^2 <= exp(-x) sum_{k<=d} x^k / k!`` with ``x = |b|^2``, a Poisson
    distribution function that decreases in ``x``; shell ``k`` has ``|b| >= rho*k``.
    """
    total = 0.0
    k = max_shell + 1
    while True:
        x = (rho * k) ** 2
        term = shell_count(k, n) * float(stats.poisson.cdf(degree, x))
        total += term
        if x > degree + 1 and term < 1e-30 * max(total, 1e-300) + 1e-300:
            return total
        k += 1


def _shells_needed(rho, degree, n, tol=FRAME_TAIL_TOL):
    m = 0
    while frame_tail(rho, degree, n, m) >= tol:
        m += 1
    return m


class FrameEstimate(NamedTuple):
    c1: float
    c2: float
    tail: float
    eig_min: float
    eig_max: float


def frame_estimate(rho: float, degree: int, spec: LatticeSpec, trials: int = 100, seed: int = 0) -> FrameEstimate:
    """Empirical frame bounds of ``{k_b}`` over the rho-lattice, on polynomials of degree ``<= d``.

    Draws ``trials`` seeded standard complex Gaussian coefficient vectors,
    normalizes them and returns the smallest and largest
    ``sum_j |<g, k_{b_j}>|^2``. ``eig_min``/``eig_max`` are the extreme
    eigenvalues of the frame operator compressed to the same span, which the
    sampled values must lie between.

    Raises
    ------
    ValueError
        If ``spec`` is not the rho-lattice, or its shells do not push the
        omitted tail below ``1e-8``; the message names the shells required.
    """
    if not rho > 0:
        raise ValueError("rho must be positive")
    if not math.isclose(spec.r, rho, rel_tol=0, abs_tol=1e-15):
        raise ValueError(f"lattice spacing {spec.r} does not match rho={rho}")
    if int(degree) != degree or degree < 0:
        raise ValueError("degree must be a nonnegative integer")
    if trials < 1:
        raise ValueError("need at least one trial")
    tail = frame_tail(rho, degree, spec.n, spec.max_shell)
    if tail >= FRAME_TAIL_TOL:
        need = _shells_needed(rho, degree, spec.n)
        raise ValueError(f"max_shell={spec.max_shell} leaves frame tail {tail:.3e}; need max_shell >= {need}")
    basis = multi_indices(spec.n, int(degree))
    e = _basis_values(enumerate_lattice(spec), basis)
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((trials, len(basis))) + 1j * rng.standard_normal((trials, len(basis)))
    g /= np.linalg.norm(g, axis=1, keepdims=True)
    # <g, k_b> = g(b) exp(-|b|^2/2)
    sums = np.sum(np.abs(g @ e.T) ** 2, axis=1)
    ev = np.linalg.eigvalsh(e.conj().T @ e)
    return FrameEstimate(float(sums.min()), float(sums.max()), tail, float(ev[0]), float(ev[-1]))


class FrameLadder(NamedTuple):
    rhos: tuple
    estimates: tuple
    degraded_at: float | None


def frame_ladder(rhos=(0.1, 0.2, 0.3, 0.5, 0.8, 1.0, 1.5, 2.0, 2.5, 3.0), degree: int = 10, n: int = 1, trials: int = 100, seed: int = 0, threshold: float = 0.5) -> FrameLadder:
    """Frame estimates over increasing spacings.

    Each lattice gets the fewest shells that push the tail below
    ``FRAME_TAIL_TOL``. ``degraded_at`` is the smallest spacing whose
    normalized lower frame bound ``eig_min * rho^(2n) / pi^n`` falls below
    ``threshold`` (``None`` if none does); a fine lattice gives values near 1.
    The exact ``eig_min`` is used because random trials overestimate it.
    """
    rhos = tuple(sorted(float(r) for r in rhos))
    ests = []
    degraded = None
    for rho in rhos:
        spec = LatticeSpec(rho, n, _shells_needed(rho, degree, n))
        est = frame_estimate(rho, degree, spec, trials, seed)
        ests.append(est)
        if degraded is None and est.eig_min * rho ** (2 * n) / math.pi**n < threshold:
            degraded = rho
    return FrameLadder(rhos, tuple(ests), degraded)
