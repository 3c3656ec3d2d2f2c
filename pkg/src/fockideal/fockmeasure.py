"""Measure symbols on C^n, the Fock kernel, and the two averaging transforms.

Two kinds of positive measure are representable:

* :class:`AtomicMeasure` -- finitely many weighted point masses.
* :class:`DensityMeasure` -- ``q(|w|^2) exp(-beta |w|^2) dV(w)`` with ``q`` a
  polynomial with nonnegative coefficients, optionally restricted to a ball
  ``|w| <= radius``.

For a measure ``nu`` the transforms are

* ``hat``: ``nu(B(z, r))`` with ``B`` the *open* sup-norm ball, and
* ``tilde``: ``integral exp(-alpha |z - w|^2) d nu(w)``.
"""

from __future__ import annotations

from dataclasses import dataclass
import json
import math
from pathlib import Path

import numpy as np
from scipy import integrate, special

from .lattice import LatticeSpec, as_points, enumerate_lattice, shell_count, sup_norm
from .quadrature import (
    QuadratureError,
    converge,
    gauss_hermite,
    gauss_legendre,
    radial_tensor_sum,
)
from .snf import CertifiedSequence

__all__ = [
    "AtomicMeasure",
    "DensityMeasure",
    "Hat",
    "MeasureFormatError",
    "QuadratureError",
    "Tilde",
    "dump_measure",
    "gaussian_shell_tail",
    "hat",
    "kernel",
    "kernel_identity_check",
    "kernel_identity_value",
    "kernel_overlap",
    "lattice_sequence",
    "load_measure",
    "measure_from_dict",
    "normalized_kernel",
    "required_shells",
    "tilde",
    "truncate",
]

QUAD_RTOL = 1e-9


# ---------------------------------------------------------------------------
# reproducing kernel


def _inner(z, w):
    """``sum_i z_i conj(w_i)`` with broadcasting over leading axes."""
    return np.sum(np.asarray(z) * np.conj(np.asarray(w)), axis=-1)


def kernel(z, w):
    """``K(z, w) = exp(<z, w>)``."""
    return np.exp(_inner(as_points(z), as_points(w)))


def normalized_kernel(z, w):
    """``k_z(w) = K(w, z) exp(-|z|^2 / 2)``, a unit vector in the Fock space."""
    z, w = as_points(z), as_points(w)
    return np.exp(_inner(w, z) - 0.5 * np.sum(np.abs(z) ** 2, axis=-1))


def kernel_overlap(z, w):
    """``<k_z, k_w>``; its modulus is ``exp(-|z - w|^2 / 2)``."""
    z, w = as_points(z), as_points(w)
    nz = np.sum(np.abs(z) ** 2, axis=-1)
    nw = np.sum(np.abs(w) ** 2, axis=-1)
    return np.exp(_inner(w, z) - 0.5 * (nz + nw))


def kernel_identity_value(z, p: float, order: int) -> float:
    """Tensor Gauss-Hermite value of ``(p/2pi)^n int |k_z(w)|^p exp(-p|w|^2/2) dV(w)``.

    The rule is centred at the origin, not at ``z``, and factorizes over the
    complex coordinates because ``k_z`` does.
    """
    z = as_points(z).ravel()
    if not p > 0:
        raise ValueError(f"p must be positive, got {p}")
    t, wt = gauss_hermite(int(order))
    scale = math.sqrt(2.0 / p)
    x = scale * t
    u, v = np.meshgrid(x, x, indexing="ij")
    grid_w = np.outer(wt, wt) * scale**2
    w = u + 1j * v
    total = 1.0
    for zi in z:
        # |k_z|^p exp(-p|w|^2/2) = exp(-p|w|^2/2) * G(w); the Gaussian is the Hermite weight
        g = np.abs(np.exp(w * np.conj(zi) - 0.5 * abs(zi) ** 2)) ** p
        total *= float(np.sum(grid_w * g))
    return (p / (2 * math.pi)) ** z.size * total


def kernel_identity_check(z, p: float, order: int = 8, max_order: int = 1024, tol: float = 1e-12) -> float:
    """Evaluate the kernel normalization integral with order doubling.

    Raises
    ------
    QuadratureError
        If successive orders still differ by more than ``tol`` at ``max_order``.
    """
    value, _ = converge(lambda m: kernel_identity_value(z, p, m), order, rtol=0.0, atol=tol, max_order=max_order)
    return float(value)


# ---------------------------------------------------------------------------
# measures


@dataclass(frozen=True, eq=False)
class AtomicMeasure:
    """``sum_m c_m delta_{w_m}`` on C^n."""

    points: np.ndarray
    weights: np.ndarray
    dimension: int

    def __init__(self, points, weights=None, dimension: int | None = None):
        pts = np.asarray(points, dtype=complex)
        if pts.size == 0:
            if dimension is None:
                raise ValueError("an empty measure needs an explicit dimension")
            pts = pts.reshape(0, int(dimension))
        else:
            if pts.ndim == 1:
                pts = pts.reshape(-1, 1) if (dimension in (None, 1)) else pts.reshape(1, -1)
            if dimension is not None and pts.shape[1] != dimension:
                raise ValueError(f"points have dimension {pts.shape[1]}, expected {dimension}")
        if not np.all(np.isfinite(pts)):
            raise ValueError("atom locations must be finite")
        w = np.ones(len(pts)) if weights is None else np.asarray(weights, dtype=float).ravel()
        if w.shape != (len(pts),):
            raise ValueError("need exactly one weight per atom")
        if np.any(~np.isfinite(w)) or np.any(w <= 0):
            raise ValueError("atom weights must be positive and finite")
        pts.setflags(write=False)
        w.setflags(write=False)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "dimension", int(pts.shape[1]))

    def __len__(self):
        return len(self.weights)

    @property
    def mass(self) -> float:
        return float(np.sum(self.weights))

    @property
    def compact(self) -> bool:
        return True

    @property
    def radius(self) -> float:
        """Euclidean radius of the support."""
        return float(np.max(np.linalg.norm(self.points, axis=1), initial=0.0))

    @property
    def sup_radius(self) -> float:
        return float(np.max(sup_norm(self.points), initial=0.0)) if len(self) else 0.0

    def scaled(self, c: float) -> "AtomicMeasure":
        if c == 0:
            return AtomicMeasure(np.empty((0, self.dimension)), dimension=self.dimension)
        return AtomicMeasure(self.points, self.weights * c, self.dimension)

    def translated(self, shift) -> "AtomicMeasure":
        return AtomicMeasure(self.points + as_points(shift, self.dimension), self.weights, self.dimension)

    def __add__(self, other: "AtomicMeasure") -> "AtomicMeasure":
        if not isinstance(other, AtomicMeasure) or other.dimension != self.dimension:
            return NotImplemented
        return AtomicMeasure(
            np.concatenate([self.points, other.points]),
            np.concatenate([self.weights, other.weights]),
            self.dimension,
        )

    def __repr__(self):
        return f"AtomicMeasure(n={self.dimension}, atoms={len(self)}, mass={self.mass:.6g})"


@dataclass(frozen=True)
class DensityMeasure:
    """``q(|w|^2) exp(-beta |w|^2) dV(w)``, optionally cut off at ``|w| <= radius``.

    ``poly`` holds the coefficients of ``q`` from the constant term up.
    With ``beta == 0`` only a constant ``q`` is allowed, which keeps the
    density bounded.
    """

    dimension: int
    poly: tuple = (1.0,)
    beta: float = 0.0
    quad_order: int = 8
    radius: float | None = None

    def __post_init__(self):
        if int(self.dimension) != self.dimension or self.dimension < 1:
            raise ValueError("dimension must be a positive integer")
        poly = [float(c) for c in self.poly]
        while len(poly) > 1 and poly[-1] == 0:
            poly.pop()
        if not poly or any(c < 0 or not math.isfinite(c) for c in poly):
            raise ValueError("density coefficients must be finite and nonnegative")
        if not (self.beta >= 0 and math.isfinite(self.beta)):
            raise ValueError("beta must be finite and nonnegative")
        if self.beta == 0 and len(poly) > 1:
            raise ValueError("with beta = 0 the polynomial must be constant (bounded density)")
        if int(self.quad_order) != self.quad_order or self.quad_order < 1:
            raise ValueError("quad_order must be a positive integer")
        if self.radius is not None and not (self.radius > 0 and math.isfinite(self.radius)):
            raise ValueError("truncation radius must be positive and finite")
        object.__setattr__(self, "dimension", int(self.dimension))
        object.__setattr__(self, "poly", tuple(poly))
        object.__setattr__(self, "beta", float(self.beta))
        object.__setattr__(self, "quad_order", int(self.quad_order))

    @property
    def compact(self) -> bool:
        return self.radius is not None

    @property
    def sup_radius(self) -> float:
        return math.inf if self.radius is None else float(self.radius)

    def density(self, w) -> np.ndarray:
        w = as_points(w, self.dimension)
        t = np.sum(np.abs(w) ** 2, axis=-1)
        val = np.polynomial.polynomial.polyval(t, self.poly) * np.exp(-self.beta * t)
        if self.radius is not None:
            val = np.where(t <= self.radius**2, val, 0.0)
        return val

    @property
    def mass(self) -> float:
        """Total mass; ``inf`` for an untruncated constant density."""
        n = self.dimension
        total = 0.0
        for k, c in enumerate(self.poly):
            if c == 0:
                continue
            a = n + k
            if self.beta == 0:
                if self.radius is None:
                    return math.inf
                radial = self.radius ** (2 * a) / a
            elif self.radius is None:
                radial = math.gamma(a) / self.beta**a
            else:
                radial = special.gammainc(a, self.beta * self.radius**2) * math.gamma(a) / self.beta**a
            total += c * radial
        return math.pi**n / math.gamma(n) * total

    @property
    def bound(self) -> float:
        """Supremum of the density."""
        t = np.linspace(0, 50.0 / max(self.beta, 1e-3), 20001)
        if self.radius is not None:
            t = t[t <= self.radius**2]
        vals = np.polynomial.polynomial.polyval(t, self.poly) * np.exp(-self.beta * t)
        return float(vals.max())

    def scaled(self, c: float) -> "DensityMeasure":
        if c < 0:
            raise ValueError("scale must be nonnegative")
        return DensityMeasure(self.dimension, tuple(c * x for x in self.poly), self.beta, self.quad_order, self.radius)


def truncate(nu, N: float):
    """Restrict ``nu`` to the closed Euclidean ball ``|w| <= N``."""
    if not N > 0:
        raise ValueError(f"truncation radius must be positive, got {N}")
    if isinstance(nu, AtomicMeasure):
        keep = np.linalg.norm(nu.points, axis=1) <= N
        return AtomicMeasure(nu.points[keep], nu.weights[keep], nu.dimension)
    radius = N if nu.radius is None else min(N, nu.radius)
    return DensityMeasure(nu.dimension, nu.poly, nu.beta, nu.quad_order, radius)


# ---------------------------------------------------------------------------
# transforms

_CHUNK = 4096


def _real_coords(z):
    return np.stack([z.real, z.imag], axis=-1).reshape(z.shape[0], -1)


def _atomic_hat(nu, r, z):
    out = np.zeros(len(z))
    if len(nu) == 0:
        return out
    for lo in range(0, len(z), _CHUNK):
        d = z[lo : lo + _CHUNK, None, :] - nu.points[None, :, :]
        gap = np.maximum(np.abs(d.real), np.abs(d.imag)).max(axis=-1)
        out[lo : lo + _CHUNK] = (gap < r) @ nu.weights
    return out


def _atomic_tilde(nu, alpha, z):
    out = np.zeros(len(z))
    if len(nu) == 0:
        return out
    for lo in range(0, len(z), _CHUNK):
        d = z[lo : lo + _CHUNK, None, :] - nu.points[None, :, :]
        dist2 = np.sum(d.real**2 + d.imag**2, axis=-1)
        out[lo : lo + _CHUNK] = np.exp(-alpha * dist2) @ nu.weights
    return out


def _powers(u, kmax):
    return u[..., None] ** (2 * np.arange(kmax + 1))


def _density_hat_box(nu, r, z):
    """Tensor Gauss-Legendre over the box, factorized per real coordinate."""
    x = _real_coords(z)
    kmax = len(nu.poly) - 1

    def rule(m):
        t, w = gauss_legendre(m)
        u = x[..., None] + r * t
        base = r * w * np.exp(-nu.beta * u**2)
        moments = np.sum(base[..., None] * _powers(u, kmax), axis=-2)
        return radial_tensor_sum(moments, nu.poly)

    return converge(rule, nu.quad_order, rtol=QUAD_RTOL)


def _density_tilde_gauss(nu, alpha, z):
    """Tensor Gauss-Hermite after completing the square, per real coordinate."""
    x = _real_coords(z)
    a = alpha + nu.beta
    mu = alpha * x / a
    pref = np.exp(-alpha * nu.beta * x**2 / a) / math.sqrt(a)
    kmax = len(nu.poly) - 1

    def rule(m):
        t, w = gauss_hermite(m)
        u = mu[..., None] + t / math.sqrt(a)
        moments = pref[..., None] * np.sum(w[:, None] * _powers(u, kmax), axis=-2)
        return radial_tensor_sum(moments, nu.poly)

    return converge(rule, max(nu.quad_order, kmax + 1), rtol=QUAD_RTOL)


def _sphere_mean_exp(t, n):
    """``exp(-t) * mean of exp(t cos) over S^(2n-1)``, i.e. ``Gamma(n) (t/2)^(1-n) ive(n-1, t)``."""
    t = np.asarray(t, dtype=float)
    small = t < 1e-8
    ts = np.where(small, 1.0, t)
    val = math.gamma(n) * (ts / 2) ** (1 - n) * special.ive(n - 1, ts)
    return np.where(small, np.exp(-t), val)


def radial_tilde(nu: DensityMeasure, alpha: float, z, upper: float | None = None):
    """``tilde`` of a density by a 1-D radial integral with a Bessel angular factor.

    Independent of the tensor Gauss-Hermite path; used for truncated densities
    and as a cross-check. ``upper`` overrides the radial cut-off for
    untruncated densities.
    """
    z = as_points(z, nu.dimension).reshape(-1, nu.dimension)
    n = nu.dimension
    R = nu.radius if nu.radius is not None else upper
    if R is None:
        a = alpha + nu.beta
        R = (np.max(np.linalg.norm(z, axis=1), initial=0.0) + 40.0 / math.sqrt(a))
    zr = np.linalg.norm(z, axis=1)
    surface = 2 * math.pi**n / math.gamma(n)

    def rule(m):
        t, w = gauss_legendre(m)
        rho = 0.5 * R * (t + 1)
        wr = 0.5 * R * w
        radial = rho ** (2 * n - 1) * np.polynomial.polynomial.polyval(rho**2, nu.poly) * np.exp(-nu.beta * rho**2)
        ang = np.exp(-alpha * (zr[:, None] - rho) ** 2) * _sphere_mean_exp(2 * alpha * zr[:, None] * rho, n)
        return surface * (ang * (wr * radial)).sum(axis=1)

    return converge(rule, max(nu.quad_order, 32), rtol=QUAD_RTOL)


def _density_hat_disc(nu, r, z):
    """``hat`` of a truncated density on C^1: box intersected with a disc."""
    if nu.dimension != 1:
        raise ValueError("hat of a truncated density is only supported for n = 1")
    N = nu.radius
    t, w = gauss_legendre(64)
    vals = np.zeros(len(z))
    errs = np.zeros(len(z))

    def profile(s):
        return np.polynomial.polynomial.polyval(s, nu.poly) * np.exp(-nu.beta * s)

    for q, zq in enumerate(z[:, 0]):
        x0, y0 = zq.real, zq.imag
        xa, xb = max(x0 - r, -N), min(x0 + r, N)
        if xa >= xb:
            continue

        def inner(x):
            s = math.sqrt(max(N * N - x * x, 0.0))
            ya, yb = max(y0 - r, -s), min(y0 + r, s)
            if ya >= yb:
                return 0.0
            y = 0.5 * (yb - ya) * t + 0.5 * (yb + ya)
            return 0.5 * (yb - ya) * float(np.sum(w * profile(x * x + y * y)))

        kinks = [x0 - r, x0 + r]
        for edge in (y0 - r, y0 + r):
            if abs(edge) < N:
                h = math.sqrt(N * N - edge * edge)
                kinks += [-h, h]
        pts = sorted(p for p in kinks if xa < p < xb)
        val, err = integrate.quad(inner, xa, xb, points=pts or None, epsabs=1e-14, epsrel=1e-12, limit=200)
        vals[q], errs[q] = val, err
    return vals, errs


def _hat_with_error(nu, r, z):
    if isinstance(nu, AtomicMeasure):
        return _atomic_hat(nu, r, z), np.zeros(len(z))
    if nu.radius is None:
        return _density_hat_box(nu, r, z)
    return _density_hat_disc(nu, r, z)


def _tilde_with_error(nu, alpha, z):
    if isinstance(nu, AtomicMeasure):
        return _atomic_tilde(nu, alpha, z), np.zeros(len(z))
    if nu.radius is None:
        return _density_tilde_gauss(nu, alpha, z)
    return radial_tilde(nu, alpha, z)


def _evaluate(fn, nu, param, z, name):
    if not param > 0:
        raise ValueError(f"{name} must be positive, got {param}")
    raw = np.asarray(z, dtype=complex)
    if nu.dimension == 1 and raw.ndim <= 1:
        # on C^1 a flat array is a batch of points; a scalar is one point
        shape = raw.shape
        pts = as_points(raw.reshape(-1, 1), 1)
    else:
        pts = as_points(raw, nu.dimension)
        shape = pts.shape[:-1]
    flat = pts.reshape(-1, nu.dimension)
    vals, _ = fn(nu, param, flat)
    vals = np.asarray(vals, dtype=float).reshape(shape)
    return float(vals) if vals.ndim == 0 else vals


def hat(nu, r: float, z):
    """``nu(B(z, r))`` over the open sup-norm ball, at one point or a batch."""
    return _evaluate(_hat_with_error, nu, r, z, "r")


def tilde(nu, alpha: float, z):
    """``integral exp(-alpha |z-w|^2) d nu(w)``, at one point or a batch."""
    return _evaluate(_tilde_with_error, nu, alpha, z, "alpha")


@dataclass(frozen=True)
class Hat:
    """The ``hat`` transform with radius ``r``, as a lattice-sequence selector."""

    r: float

    def evaluate(self, nu, z):
        return _hat_with_error(nu, self.r, z)


@dataclass(frozen=True)
class Tilde:
    """The ``tilde`` transform with parameter ``alpha``."""

    alpha: float

    def evaluate(self, nu, z):
        return _tilde_with_error(nu, self.alpha, z)


# ---------------------------------------------------------------------------
# lattice sequences with tail certificates


def gaussian_shell_tail(n, spacing, support, alpha, start_shell, scale=1.0, s=1.0):
    """Bound the omitted part of ``{(scale exp(-alpha |a - w|^2))^s}`` over shells >= ``start_shell``.

    A lattice point in shell ``k`` is at Euclidean distance at least
    ``spacing*k - support`` from any point of the support, so each entry there
    is at most ``(scale exp(-alpha (spacing*k - support)^2))^s``. Returns
    ``(largest omitted entry, sum of omitted entries)``. Requires
    ``spacing*start_shell > support``.
    """
    if not spacing * start_shell > support:
        raise ValueError("shells must start beyond the support radius")
    if scale == 0:
        return 0.0, 0.0

    def entry(k):
        return (scale * math.exp(-alpha * (spacing * k - support) ** 2)) ** s

    first = entry(start_shell)
    total = 0.0
    k = start_shell
    prev_ratio = math.inf
    while True:
        term = shell_count(k, n) * entry(k)
        nxt = shell_count(k + 1, n) * entry(k + 1)
        total += term
        ratio = nxt / term if term > 0 else 0.0
        # terms are eventually log-concave, so once the ratio is < 1 and falling
        # the remainder is dominated by a geometric series
        if ratio < 1 and ratio <= prev_ratio and (term == 0 or nxt * 1.0 / (1 - ratio) <= 1e-17 * total):
            total += nxt / (1 - ratio) if term > 0 else 0.0
            return first, total
        prev_ratio = ratio
        k += 1


def required_shells(nu, transform, spacing: float) -> int:
    """Smallest ``max_shell`` for which :func:`lattice_sequence` can certify its tail."""
    if not nu.compact:
        raise ValueError("lattice sequences need a compactly supported measure (truncate it first)")
    if isinstance(transform, Hat):
        reach = nu.sup_radius + transform.r
        return max(0, math.ceil(reach / spacing - 1e-12) - 1)
    support = nu.radius
    return max(0, math.floor(support / spacing + 1e-12))


def lattice_sequence(nu, transform, spec: LatticeSpec, s: float = 1.0) -> CertifiedSequence:
    """``transform(nu)`` at every enumerated lattice point, raised to the power ``s``.

    The returned certificate covers all lattice points outside the enumerated
    shells. For :class:`Hat` the omitted entries are exactly zero; for
    :class:`Tilde` they are bounded by a Gaussian shell sum.

    Raises
    ------
    ValueError
        If ``nu`` is not compactly supported, or ``spec.max_shell`` is too
        small to certify the tail. The message names the minimal shell count.
    """
    if not (0 < s <= 1):
        raise ValueError(f"power must lie in (0, 1], got s={s}")
    need = required_shells(nu, transform, spec.r)
    if spec.max_shell < need:
        raise ValueError(f"max_shell={spec.max_shell} too small to certify the tail; need at least {need}")
    pts = enumerate_lattice(spec)
    vals, err = transform.evaluate(nu, pts)
    vals = np.maximum(np.asarray(vals, dtype=float), 0.0)
    prefix_error = float(np.max(err, initial=0.0))
    if isinstance(transform, Hat):
        tail_max = tail_sum = 0.0
    else:
        tail_max, tail_sum = gaussian_shell_tail(
            spec.n, spec.r, nu.radius, transform.alpha, spec.max_shell + 1, scale=nu.mass, s=s
        )
    if s != 1:
        lo = np.maximum(vals - prefix_error, 0.0)
        prefix_error = float(np.max((vals + prefix_error) ** s - lo**s, initial=0.0)) if prefix_error else 0.0
        vals = vals**s
    return CertifiedSequence(vals, tail_max, tail_sum, 0.0, prefix_error)


# ---------------------------------------------------------------------------
# measure files


class MeasureFormatError(ValueError):
    """A measure file or mapping does not follow the schema."""


_ATOMIC_KEYS = {"version", "dimension", "kind", "atoms"}
_RADIAL_KEYS = {"version", "dimension", "kind", "poly", "beta", "quad_order"}


def _require(cond, msg):
    if not cond:
        raise MeasureFormatError(msg)


def _number(x, what):
    _require(isinstance(x, (int, float)) and not isinstance(x, bool), f"{what} must be a number")
    _require(math.isfinite(x), f"{what} must be finite")
    return float(x)


def measure_from_dict(doc: dict):
    """Build a measure from its schema-version-1 mapping. Parsing is strict."""
    _require(isinstance(doc, dict), "measure document must be an object")
    _require(doc.get("version") == 1, "unsupported or missing schema version (expected 1)")
    n = doc.get("dimension")
    _require(isinstance(n, int) and not isinstance(n, bool) and n >= 1, "dimension must be a positive integer")
    kind = doc.get("kind")
    if kind == "atomic":
        extra = set(doc) - _ATOMIC_KEYS
        _require(not extra, f"unknown fields: {sorted(extra)}")
        atoms = doc.get("atoms")
        _require(isinstance(atoms, list), "atoms must be a list")
        pts, wts = [], []
        for a in atoms:
            _require(isinstance(a, dict) and set(a) == {"point", "weight"}, "each atom needs exactly point and weight")
            point = a["point"]
            _require(isinstance(point, list) and len(point) == n, f"atom point must list {n} [re, im] pairs")
            coords = []
            for pair in point:
                _require(isinstance(pair, list) and len(pair) == 2, "coordinates are [re, im] pairs")
                coords.append(complex(_number(pair[0], "re"), _number(pair[1], "im")))
            w = _number(a["weight"], "weight")
            _require(w > 0, "atom weights must be positive")
            pts.append(coords)
            wts.append(w)
        return AtomicMeasure(np.array(pts, dtype=complex).reshape(-1, n), np.array(wts), n)
    if kind == "radial":
        extra = set(doc) - _RADIAL_KEYS
        _require(not extra, f"unknown fields: {sorted(extra)}")
        missing = _RADIAL_KEYS - set(doc)
        _require(not missing, f"missing fields: {sorted(missing)}")
        poly = doc["poly"]
        _require(isinstance(poly, list) and poly, "poly must be a nonempty list")
        q = doc["quad_order"]
        _require(isinstance(q, int) and not isinstance(q, bool), "quad_order must be an integer")
        try:
            return DensityMeasure(n, tuple(_number(c, "poly coefficient") for c in poly), _number(doc["beta"], "beta"), q)
        except ValueError as exc:
            if isinstance(exc, MeasureFormatError):
                raise
            raise MeasureFormatError(str(exc)) from exc
    raise MeasureFormatError(f"unknown measure kind {kind!r}")


def load_measure(path):
    """Read a measure file (JSON, schema version 1)."""
    try:
        doc = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise MeasureFormatError(f"cannot read measure file {path}: {exc}") from exc
    return measure_from_dict(doc)


def dump_measure(nu) -> dict:
    if isinstance(nu, AtomicMeasure):
        atoms = [
            {"point": [[p.real, p.imag] for p in row], "weight": float(w)}
            for row, w in zip(nu.points.tolist(), nu.weights.tolist())
        ]
        return {"version": 1, "dimension": nu.dimension, "kind": "atomic", "atoms": atoms}
    if nu.radius is not None:
        raise ValueError("truncated densities have no file representation")
    return {
        "version": 1,
        "dimension": nu.dimension,
        "kind": "radial",
        "poly": list(nu.poly),
        "beta": nu.beta,
        "quad_order": nu.quad_order,
    }
