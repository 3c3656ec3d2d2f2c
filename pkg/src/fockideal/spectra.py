"""s-numbers, fractional powers and ideal norms of finite matrices.

For a finite Hermitian positive semidefinite matrix the s-numbers are simply
its eigenvalues in nonincreasing order; for a general square matrix they are
the singular values. ``phi_norm`` applies a symmetric norming function to the
s-number sequence.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .snf import KyFan, Lorentz, PowerSum, SupNorm, SymmetricNormingFunction

__all__ = [
    "CalculusReport",
    "HermitianPSD",
    "PSD_RTOL",
    "SValues",
    "calculus_suite",
    "frac_power",
    "phi_norm",
    "random_psd",
    "random_unitary",
    "s_numbers",
    "s_numbers_general",
]

PSD_RTOL = 1e-10


class HermitianPSD:
    """A Hermitian positive semidefinite matrix, validated on construction.

    Hermitian symmetry is checked exactly on the stored entries; positivity is
    checked up to ``-PSD_RTOL * max(largest eigenvalue, 1)``.
    """

    __slots__ = ("matrix", "_evals")

    def __init__(self, matrix):
        a = np.array(matrix, dtype=complex)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
            raise ValueError(f"expected a nonempty square matrix, got shape {a.shape}")
        if not np.all(np.isfinite(a)):
            raise ValueError("matrix entries must be finite")
        if not np.array_equal(a, a.conj().T):
            raise ValueError("matrix is not Hermitian")
        evals = np.linalg.eigvalsh(a)
        floor = -PSD_RTOL * max(evals[-1], 1.0)
        if evals[0] < floor:
            raise ValueError(f"matrix is not PSD: smallest eigenvalue {evals[0]:.3e}")
        a.setflags(write=False)
        self.matrix = a
        self._evals = evals

    @classmethod
    def from_any(cls, matrix) -> "HermitianPSD":
        """Build from a nearly Hermitian matrix by averaging with its adjoint."""
        a = np.asarray(matrix, dtype=complex)
        return cls((a + a.conj().T) / 2)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def __array__(self, dtype=None, copy=None):
        return self.matrix if dtype is None else self.matrix.astype(dtype)

    def __repr__(self):
        return f"HermitianPSD(dim={self.dim})"


@dataclass(frozen=True)
class SValues:
    """Nonincreasing nonnegative s-numbers, with a bound on any omitted ones."""

    values: np.ndarray
    tail_bound: float = 0.0

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float).ravel()
        if np.any(v < 0) or np.any(np.diff(v) > 0):
            raise ValueError("s-numbers must be nonnegative and nonincreasing")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    def __len__(self):
        return self.values.size

    def __getitem__(self, j):
        return self.values[j]

    def power(self, s: float) -> "SValues":
        return SValues(self.values**s, self.tail_bound**s)


def _as_psd(h) -> HermitianPSD:
    return h if isinstance(h, HermitianPSD) else HermitianPSD(h)


def s_numbers(h) -> SValues:
    """Eigenvalues of a Hermitian PSD matrix, nonincreasing, tiny negatives set to 0."""
    h = _as_psd(h)
    ev = np.clip(h._evals[::-1], 0.0, None)
    return SValues(ev)


def s_numbers_general(a) -> SValues:
    """Singular values of an arbitrary square matrix."""
    a = np.asarray(a, dtype=complex)
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    return SValues(np.linalg.svd(a, compute_uv=False))


def frac_power(h, s: float) -> HermitianPSD:
    """``H**s`` through the spectral decomposition, for ``0 < s <= 1``."""
    if not (0 < s <= 1):
        raise ValueError(f"power must lie in (0, 1], got s={s}")
    h = _as_psd(h)
    if s == 1:
        return h
    w, v = np.linalg.eigh(h.matrix)
    w = np.clip(w, 0.0, None) ** s
    out = (v * w) @ v.conj().T
    return HermitianPSD.from_any(out)


def phi_norm(phi: SymmetricNormingFunction, a) -> float:
    """``Phi`` of the s-numbers of ``a``.

    A :class:`HermitianPSD` uses its eigenvalues; anything else is treated as a
    general matrix and uses singular values.
    """
    sv = s_numbers(a) if isinstance(a, HermitianPSD) else s_numbers_general(a)
    return phi(sv.values)


# ---------------------------------------------------------------------------
# randomized calculus checks


def random_unitary(rng: np.random.Generator, dim: int) -> np.ndarray:
    z = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def random_psd(rng: np.random.Generator, dim: int, rank: int | None = None) -> np.ndarray:
    rank = dim if rank is None else rank
    g = rng.standard_normal((dim, rank)) + 1j * rng.standard_normal((dim, rank))
    m = g @ g.conj().T / rank
    return (m + m.conj().T) / 2


def _rel_excess(lhs, rhs):
    """Largest ``lhs - rhs`` relative to the largest magnitude involved (<= 0 is fine)."""
    lhs = np.atleast_1d(np.asarray(lhs, dtype=float))
    rhs = np.atleast_1d(np.asarray(rhs, dtype=float))
    scale = max(np.max(np.abs(lhs)), np.max(np.abs(rhs)), 1e-300)
    return float(np.max(lhs - rhs) / scale)


DEFAULT_FAMILY = (PowerSum(1), PowerSum(2), PowerSum(3.5), SupNorm(), KyFan(3), Lorentz())


@dataclass
class CalculusReport:
    """Largest relative violation seen for each checked inequality."""

    trials: int
    violations: dict = field(default_factory=dict)

    def record(self, name: str, excess: float):
        self.violations[name] = max(self.violations.get(name, -np.inf), excess)

    @property
    def max_violation(self) -> float:
        return max(self.violations.values())

    def passed(self, tol: float = 1e-10) -> bool:
        return self.max_violation <= tol


def calculus_suite(seed: int = 0, trials: int = 200, max_dim: int = 50, family=DEFAULT_FAMILY) -> CalculusReport:
    """Seeded randomized checks of the s-number calculus on finite matrices.

    Checked per trial:

    * ``op_norm``: ``s_1(D)`` equals the spectral norm of ``D``
    * ``abs_invariance``: ``s_j(D) = s_j(|D|)``
    * ``congruence``: ``s_j(C D C*) <= ||C||^2 s_j(D)`` for PSD ``D``
    * ``monotone``: ``0 <= C <= D`` implies ``s_j(C) <= s_j(D)``
    * ``power_commutes``: ``s_j(D^s) = s_j(D)^s``
    * ``diagonal``: ``|diag(l)|_Phi = Phi(l)``
    * ``subsequence``: ``Phi`` of a subsequence is at most ``Phi`` of the sequence
    * ``quasi_triangle``: ``| |sum F_j|^s |_Phi <= 2^(1-s) sum | |F_j|^s |_Phi``

    Violations are reported as relative excess; every entry should be ``<= 1e-10``.
    """
    rng = np.random.default_rng(seed)
    rep = CalculusReport(trials)
    for _ in range(trials):
        dim = int(rng.integers(1, max_dim + 1))
        s = float(rng.uniform(0.05, 1.0))
        phi = family[int(rng.integers(len(family)))]

        a = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
        sv = s_numbers_general(a).values
        # operator norm from the Gram matrix, independent of the SVD path
        op = np.sqrt(np.linalg.eigvalsh(a.conj().T @ a)[-1])
        rep.record("op_norm", abs(sv[0] - op) / sv[0])
        abs_a = frac_power(HermitianPSD.from_any(a.conj().T @ a), 0.5)
        rep.record("abs_invariance", np.max(np.abs(s_numbers(abs_a).values - sv)) / sv[0])

        d = random_psd(rng, dim, int(rng.integers(1, dim + 1)))
        c = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
        sd = s_numbers(d).values
        cdc = HermitianPSD.from_any(c @ d @ c.conj().T)
        rep.record("congruence", _rel_excess(s_numbers(cdc).values, np.linalg.norm(c, 2) ** 2 * sd))

        lower = HermitianPSD.from_any(d)
        e = random_psd(rng, dim, int(rng.integers(1, dim + 1)))
        upper = HermitianPSD.from_any(d + e)
        rep.record("monotone", _rel_excess(s_numbers(lower).values, s_numbers(upper).values))

        # full rank: t**s is not Lipschitz at 0, so rounding-level zero eigenvalues would blow up
        full = random_psd(rng, dim, 2 * dim)
        sf = s_numbers(full).values
        powered = s_numbers(frac_power(full, s)).values
        rep.record("power_commutes", float(np.max(np.abs(powered - sf**s))) / sf[0] ** s)

        lam = rng.exponential(size=dim) * (rng.random(dim) < 0.7)
        u = random_unitary(rng, dim)
        diag_op = HermitianPSD.from_any((u * lam) @ u.conj().T)
        want = phi(lam)
        got = phi_norm(phi, diag_op)
        rep.record("diagonal", abs(got - want) / max(want, 1e-300))

        picks = rng.permutation(dim)[: int(rng.integers(1, dim + 1))]
        rep.record("subsequence", _rel_excess(phi(lam[picks]), phi(lam)))

        terms = [_random_low_rank(rng, dim) for _ in range(int(rng.integers(2, 5)))]
        total = sum(terms)
        lhs = phi_norm(phi, _abs_power(total, s))
        rhs = 2 ** (1 - s) * sum(phi_norm(phi, _abs_power(f, s)) for f in terms)
        rep.record("quasi_triangle", _rel_excess(lhs, rhs))
    return rep


def _random_low_rank(rng, dim):
    k = int(rng.integers(1, dim + 1))
    left = rng.standard_normal((dim, k)) + 1j * rng.standard_normal((dim, k))
    right = rng.standard_normal((k, dim)) + 1j * rng.standard_normal((k, dim))
    return left @ right / k


def _abs_power(a, s):
    """``|A|^s = (A* A)^(s/2)``."""
    return frac_power(HermitianPSD.from_any(a.conj().T @ a), 0.5 * s)
