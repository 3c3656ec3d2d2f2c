"""Square lattices of C^n enumerated in sup-norm shells.

Points of C^n are stored as complex arrays of shape ``(n,)`` (or ``(k, n)`` for
batches). The r-lattice is ``r * (Z + iZ)^n``; it is enumerated shell by shell,
where shell ``k`` holds the points with ``|a|_inf == r*k``, and inside a shell
the integer coordinates ``(b_1, c_1, ..., b_n, c_n)`` are in lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
import itertools

import numpy as np

__all__ = [
    "LatticeSpec",
    "SublatticePartition",
    "as_points",
    "covering_check",
    "enumerate_lattice",
    "euclid_norm",
    "lattice_indices",
    "partition",
    "shell_count",
    "shell_of",
    "sup_norm",
]


def as_points(z, n: int | None = None) -> np.ndarray:
    """Coerce ``z`` to a complex array of shape ``(..., n)``.

    Scalars become a single point of C^1. Non-finite coordinates raise.
    """
    z = np.asarray(z, dtype=complex)
    if z.ndim == 0:
        z = z.reshape(1)
    if n is not None and z.shape[-1] != n:
        raise ValueError(f"expected points of C^{n}, got trailing dimension {z.shape[-1]}")
    if not np.all(np.isfinite(z)):
        raise ValueError("point coordinates must be finite")
    return z


def sup_norm(z) -> np.ndarray | float:
    """Largest absolute value among the 2n real coordinates of ``z``.

    Works on a single point ``(n,)`` or a batch ``(k, n)``.

    >>> sup_norm(3 + 4j)
    4.0
    """
    z = as_points(z)
    out = np.maximum(np.abs(z.real), np.abs(z.imag)).max(axis=-1)
    return float(out) if out.ndim == 0 else out


def euclid_norm(z) -> np.ndarray | float:
    z = as_points(z)
    out = np.sqrt((z.real**2 + z.imag**2).sum(axis=-1))
    return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class LatticeSpec:
    """The r-lattice of C^n truncated to shells ``0..max_shell``."""

    r: float
    n: int = 1
    max_shell: int = 0

    def __post_init__(self):
        if not (np.isfinite(self.r) and self.r > 0):
            raise ValueError(f"lattice spacing must be positive, got r={self.r}")
        if int(self.n) != self.n or self.n < 1:
            raise ValueError(f"dimension must be a positive integer, got n={self.n}")
        if int(self.max_shell) != self.max_shell or self.max_shell < 0:
            raise ValueError(f"max_shell must be a nonnegative integer, got {self.max_shell}")
        object.__setattr__(self, "r", float(self.r))
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "max_shell", int(self.max_shell))

    @property
    def size(self) -> int:
        return (2 * self.max_shell + 1) ** (2 * self.n)

    def with_shells(self, max_shell: int) -> "LatticeSpec":
        return LatticeSpec(self.r, self.n, max_shell)


def shell_count(k: int, n: int) -> int:
    """Number of lattice points with ``|a|_inf == r*k``."""
    if k == 0:
        return 1
    return (2 * k + 1) ** (2 * n) - (2 * k - 1) ** (2 * n)


@lru_cache(maxsize=64)
def _indices(n: int, max_shell: int) -> np.ndarray:
    side = np.arange(-max_shell, max_shell + 1)
    # itertools.product is lexicographic; a stable sort by shell keeps that order
    grid = np.array(list(itertools.product(side, repeat=2 * n)), dtype=np.int64)
    grid = grid.reshape(-1, 2 * n)
    shells = np.abs(grid).max(axis=1)
    grid = grid[np.argsort(shells, kind="stable")]
    grid.setflags(write=False)
    return grid


def lattice_indices(spec: LatticeSpec) -> np.ndarray:
    """Integer coordinates ``(b_1, c_1, ..., b_n, c_n)`` in enumeration order."""
    return _indices(spec.n, spec.max_shell)


def enumerate_lattice(spec: LatticeSpec) -> np.ndarray:
    """All lattice points with ``|a|_inf <= r*max_shell`` as a ``(N, n)`` array.

    The cumulative count through shell ``m`` is ``(2m+1)^(2n)``.
    """
    idx = lattice_indices(spec)
    pts = spec.r * (idx[:, 0::2] + 1j * idx[:, 1::2])
    pts.setflags(write=False)
    return pts


def shell_of(spec: LatticeSpec) -> np.ndarray:
    """Shell number of each enumerated point."""
    return np.abs(lattice_indices(spec)).max(axis=1)


def covering_check(spec: LatticeSpec, samples, atol: float = 1e-12) -> bool:
    """Check the closed r/2 boxes around the lattice cover ``samples``.

    Every sample must lie in at least one closed box ``|w - a_j|_inf <= r/2``
    and in the open interior of at most one of them.

    Raises
    ------
    ValueError
        If a sample lies outside ``|w|_inf <= r*(max_shell - 1/2)``, where the
        truncated lattice cannot be expected to cover it.
    """
    samples = as_points(samples, spec.n).reshape(-1, spec.n)
    limit = spec.r * (spec.max_shell - 0.5)
    if limit < 0 or np.any(sup_norm(samples) > limit + atol):
        raise ValueError(f"samples must satisfy |w|_inf <= {limit}")
    half = spec.r / 2
    idx = lattice_indices(spec)
    lookup = {tuple(row): j for j, row in enumerate(idx.tolist())}
    coords = np.stack([samples.real, samples.imag], axis=-1).reshape(len(samples), -1) / spec.r
    lo = np.floor(coords).astype(np.int64)
    for x, base in zip(coords, lo):
        closed = 0
        interior = 0
        # every box that can contain x is centred at floor or floor+1 per coordinate
        for step in itertools.product((0, 1), repeat=2 * spec.n):
            cand = base + np.array(step)
            j = lookup.get(tuple(cand.tolist()))
            if j is None:
                continue
            gap = np.abs(x - idx[j]).max() * spec.r
            if gap <= half + atol:
                closed += 1
            if gap < half - atol:
                interior += 1
        if closed == 0 or interior > 1:
            return False
    return True


@dataclass(frozen=True)
class SublatticePartition:
    """Residue classes of the lattice modulo ``m``.

    ``labels[p]`` is the residue vector ``y_p`` in ``{0..m-1}^(2n)`` and
    ``classes[p]`` indexes the enumerated points ``R*y + r*y_p`` with ``R = m*r``.
    """

    base: LatticeSpec
    m: int
    labels: np.ndarray
    classes: tuple

    def points(self, p: int) -> np.ndarray:
        return enumerate_lattice(self.base)[self.classes[p]]


def partition(spec: LatticeSpec, m: int) -> SublatticePartition:
    """Split the enumerated lattice into ``m^(2n)`` classes by residue mod ``m``.

    Distinct points in one class differ by a nonzero multiple of ``m`` in some
    integer coordinate, so they are at sup-distance at least ``m*r``.
    """
    if int(m) != m or m < 2:
        raise ValueError(f"partition factor must be an integer >= 2, got {m}")
    m = int(m)
    idx = lattice_indices(spec)
    residues = np.mod(idx, m)
    weights = m ** np.arange(2 * spec.n - 1, -1, -1)
    code = residues @ weights
    labels = np.array(list(itertools.product(range(m), repeat=2 * spec.n)), dtype=np.int64)
    labels = labels.reshape(-1, 2 * spec.n)
    classes = tuple(np.flatnonzero(code == p) for p in range(m ** (2 * spec.n)))
    return SublatticePartition(spec, m, labels, classes)
