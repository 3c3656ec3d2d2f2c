"""Symmetric norming functions on real sequences.

A symmetric norming function is a norm on finitely supported sequences that is
invariant under rearrangement and sign changes and takes the value 1 on
``(1, 0, 0, ...)``. Four families are provided:

* :class:`PowerSum` -- ``(sum |x|^p)^(1/p)`` for ``p >= 1``
* :class:`SupNorm` -- ``max |x|``
* :class:`KyFan` -- sum of the ``k`` largest ``|x|``
* :class:`Lorentz` -- ``sup_N S_N / (w_1 + ... + w_N)`` where ``S_N`` is the
  sum of the ``N`` largest ``|x|``

Every evaluation first sorts ``|x|`` into nonincreasing order, so two
rearrangements of the same sequence give bit-identical results.

Infinite sequences are handled through :class:`CertifiedSequence`, a finite
prefix plus bounds on the omitted tail.
"""

from __future__ import annotations

from dataclasses import dataclass
import math

import numpy as np

__all__ = [
    "AXIOM_FAMILY",
    "CertifiedSequence",
    "KyFan",
    "LimitValue",
    "axiom_suite",
    "Lorentz",
    "PowerSum",
    "SupNorm",
    "SymmetricNormingFunction",
    "canonical",
    "dominance_holds",
    "equiv_ratio_scan",
    "eval_finite",
    "eval_limit",
    "format_snf",
    "indicator",
    "parse_snf",
    "sandwich_holds",
]


def canonical(xs) -> np.ndarray:
    """``|xs|`` sorted nonincreasing, as a float array."""
    a = np.abs(np.asarray(xs, dtype=float).ravel())
    if not np.all(np.isfinite(a)):
        raise ValueError("sequence entries must be finite")
    return -np.sort(-a)


class SymmetricNormingFunction:
    """Base class; subclasses implement :meth:`_eval` on a canonical sequence."""

    def __call__(self, xs) -> float:
        return self._eval(canonical(xs))

    def _eval(self, a: np.ndarray) -> float:
        raise NotImplementedError

    def indicator_bounded(self) -> bool:
        """Whether ``sup_n Phi(1,...,1 (n times))`` is finite."""
        raise NotImplementedError

    def tail_bound(self, tail_max: float, tail_sum: float) -> float:
        """Upper bound on Phi of any sequence with entries <= ``tail_max`` and sum <= ``tail_sum``."""
        raise NotImplementedError

    def __str__(self) -> str:
        return format_snf(self)


@dataclass(frozen=True)
class PowerSum(SymmetricNormingFunction):
    p: float

    def __post_init__(self):
        if not (self.p >= 1 and math.isfinite(self.p)):
            raise ValueError(f"PowerSum needs 1 <= p < inf (not a norm otherwise), got p={self.p}")
        object.__setattr__(self, "p", float(self.p))

    def _eval(self, a):
        if a.size == 0 or a[0] == 0:
            return 0.0
        if self.p == 1:
            return float(np.sum(a))
        if self.p == 2:
            return float(a[0] * math.sqrt(np.sum((a / a[0]) ** 2)))
        top = a[0]
        return float(top * np.sum((a / top) ** self.p) ** (1 / self.p))

    def indicator_bounded(self):
        return False

    def tail_bound(self, tail_max, tail_sum):
        if tail_sum == 0 or tail_max == 0:
            return 0.0
        if not math.isfinite(tail_sum):
            return math.inf
        # sum x^p <= max^(p-1) * sum x
        return float(tail_max ** ((self.p - 1) / self.p) * tail_sum ** (1 / self.p))


@dataclass(frozen=True)
class SupNorm(SymmetricNormingFunction):
    def _eval(self, a):
        return float(a[0]) if a.size else 0.0

    def indicator_bounded(self):
        return True

    def tail_bound(self, tail_max, tail_sum):
        return float(min(tail_max, tail_sum))


@dataclass(frozen=True)
class KyFan(SymmetricNormingFunction):
    k: int

    def __post_init__(self):
        if int(self.k) != self.k or self.k < 1:
            raise ValueError(f"KyFan order must be a positive integer, got k={self.k}")
        object.__setattr__(self, "k", int(self.k))

    def _eval(self, a):
        return float(np.sum(a[: self.k]))

    def indicator_bounded(self):
        return True

    def tail_bound(self, tail_max, tail_sum):
        return float(min(self.k * tail_max, tail_sum))


@dataclass(frozen=True)
class Lorentz(SymmetricNormingFunction):
    """Lorentz (Marcinkiewicz) norming function.

    ``weights=None`` means the harmonic weights ``w_j = 1/j``. A finite weight
    list is extended by repeating its last entry.
    """

    weights: tuple | None = None

    def __post_init__(self):
        if self.weights is None:
            return
        w = tuple(float(x) for x in self.weights)
        if not w:
            raise ValueError("Lorentz weights must be nonempty")
        if w[0] != 1.0:
            raise ValueError("Lorentz weights must start with w_1 = 1")
        if any(x <= 0 or not math.isfinite(x) for x in w):
            raise ValueError("Lorentz weights must be positive and finite")
        if any(b > a for a, b in zip(w, w[1:])):
            raise ValueError("Lorentz weights must be nonincreasing")
        object.__setattr__(self, "weights", w)

    def weight_sums(self, count: int) -> np.ndarray:
        if self.weights is None:
            w = 1.0 / np.arange(1, count + 1)
        else:
            w = np.asarray(self.weights[:count])
            if count > w.size:
                w = np.concatenate([w, np.full(count - w.size, self.weights[-1])])
        return np.cumsum(w)

    def _eval(self, a):
        if a.size == 0:
            return 0.0
        return float(np.max(np.cumsum(a) / self.weight_sums(a.size)))

    def indicator_bounded(self):
        # N / W_N stays bounded iff the weights do not tend to zero
        return self.weights is not None

    def tail_bound(self, tail_max, tail_sum):
        bound = tail_sum
        if self.weights is not None:
            # S_N <= N*max and W_N >= N*w_last
            bound = min(bound, tail_max / self.weights[-1])
        return float(bound)


def eval_finite(phi: SymmetricNormingFunction, xs) -> float:
    return phi(xs)


def indicator(n: int) -> np.ndarray:
    """The sequence of ``n`` ones."""
    return np.ones(int(n))


# ---------------------------------------------------------------------------
# infinite sequences


@dataclass(frozen=True)
class CertifiedSequence:
    """A finite prefix of a nonnegative sequence and certificates for the rest.

    Parameters
    ----------
    prefix
        The explicitly known leading entries.
    tail_bound
        Every omitted entry is at most this value.
    tail_sum_bound
        The omitted entries sum to at most this value (may be ``inf``).
    tail_floor
        If positive, infinitely many omitted entries are at least this value.
        This is the divergence certificate used by :func:`eval_limit`.
    prefix_error
        Absolute error bound on each prefix entry (quadrature, for instance).
    """

    prefix: np.ndarray
    tail_bound: float = 0.0
    tail_sum_bound: float = 0.0
    tail_floor: float = 0.0
    prefix_error: float = 0.0

    def __post_init__(self):
        prefix = np.asarray(self.prefix, dtype=float).ravel()
        if np.any(prefix < 0) or not np.all(np.isfinite(prefix)):
            raise ValueError("prefix entries must be finite and nonnegative")
        for name in ("tail_bound", "tail_sum_bound", "tail_floor", "prefix_error"):
            v = getattr(self, name)
            if v is None or not (v >= 0):
                raise ValueError(f"{name} must be a nonnegative number, got {v}")
        if self.tail_floor > self.tail_bound:
            raise ValueError("tail_floor cannot exceed tail_bound")
        if self.tail_floor > 0 and math.isfinite(self.tail_sum_bound):
            raise ValueError("an infinite tail above tail_floor cannot have a finite sum")
        prefix.setflags(write=False)
        object.__setattr__(self, "prefix", prefix)

    @classmethod
    def finite(cls, xs) -> "CertifiedSequence":
        return cls(np.abs(np.asarray(xs, dtype=float)))

    def power(self, s: float) -> "CertifiedSequence":
        """Elementwise ``x**s``. Only valid when the tail sum bound is 0 or inf."""
        if self.tail_sum_bound not in (0.0, math.inf) and s != 1:
            raise ValueError("cannot transport a finite tail-sum certificate through x**s")
        return CertifiedSequence(
            self.prefix**s,
            self.tail_bound**s,
            self.tail_sum_bound,
            self.tail_floor**s,
            _power_error(self.prefix, self.prefix_error, s),
        )


def _power_error(prefix, err, s):
    if err == 0:
        return 0.0
    # x -> x**s is concave for s <= 1, so the widest spread is at the smallest entry
    lo = np.maximum(prefix - err, 0.0)
    return float(np.max((prefix + err) ** s - lo**s))


@dataclass(frozen=True)
class LimitValue:
    """Result of :func:`eval_limit`: the limit lies in ``[lower, upper]``."""

    lower: float
    upper: float
    infinite: bool = False

    @property
    def value(self) -> float:
        return math.inf if self.infinite else self.lower

    @property
    def error(self) -> float:
        return math.inf if self.infinite else self.upper - self.lower


def eval_limit(phi: SymmetricNormingFunction, xs: CertifiedSequence) -> LimitValue:
    """Monotone limit of ``phi`` over longer and longer truncations of ``xs``.

    The prefix value is a lower bound. By the triangle inequality the limit is
    at most the prefix value plus ``phi`` of the tail, which is bounded from the
    tail certificates. A positive ``tail_floor`` proves divergence whenever
    ``phi`` is unbounded on indicator sequences.
    """
    if not isinstance(xs, CertifiedSequence):
        raise TypeError("eval_limit needs a CertifiedSequence (a tail certificate is mandatory)")
    prefix = xs.prefix
    lo_prefix = np.maximum(prefix - xs.prefix_error, 0.0)
    lower = phi(lo_prefix)
    if xs.tail_floor > 0 and not phi.indicator_bounded():
        return LimitValue(lower, math.inf, infinite=True)
    upper = phi(prefix + xs.prefix_error) + phi.tail_bound(xs.tail_bound, xs.tail_sum_bound)
    if xs.tail_floor > 0:
        # bounded-indicator functions: at least the floor counts once
        lower = max(lower, phi([xs.tail_floor]))
    return LimitValue(lower, upper)


# ---------------------------------------------------------------------------
# properties used as test oracles


def _pad(xs, ys):
    a = np.abs(np.asarray(xs, dtype=float).ravel())
    b = np.abs(np.asarray(ys, dtype=float).ravel())
    size = max(a.size, b.size)
    pa, pb = np.zeros(size), np.zeros(size)
    pa[: a.size] = a
    pb[: b.size] = b
    return pa, pb


def dominance_holds(phi, xs, ys, slack: float = 1e-12) -> bool:
    """``|xs_j| <= |ys_j|`` for all j implies ``phi(xs) <= phi(ys)``.

    Raises ``ValueError`` when the entrywise precondition does not hold, which
    is different from the property failing.
    """
    a, b = _pad(xs, ys)
    if np.any(a > b):
        raise ValueError("dominance precondition |xs_j| <= |ys_j| violated")
    rhs = phi(b)
    return phi(a) <= rhs * (1 + slack) + slack


def sandwich_holds(phi, xs, slack: float = 1e-12) -> bool:
    """``max|x| <= phi(x) <= sum|x|``."""
    a = canonical(xs)
    v = phi(a)
    top = float(a[0]) if a.size else 0.0
    total = float(np.sum(a))
    return top <= v * (1 + slack) + slack and v <= total * (1 + slack) + slack


def equiv_ratio_scan(phi, psi, family) -> tuple[float, float]:
    """Largest observed ``phi/psi`` and ``psi/phi`` over ``family``.

    Only a witness search: a ratio that grows along ``family`` is evidence the
    two functions are not equivalent, a bounded one proves nothing.
    """
    family = list(family)
    if not family:
        raise ValueError("family must be nonempty")
    up = down = 0.0
    for xs in family:
        a = canonical(xs)
        if a.size == 0 or a[0] == 0:
            raise ValueError("every sequence in the family needs a nonzero entry")
        f, g = phi(a), psi(a)
        up = max(up, f / g)
        down = max(down, g / f)
    return up, down


def _random_sequence(rng, max_len=40):
    size = int(rng.integers(1, max_len + 1))
    x = rng.standard_normal(size) * np.exp(rng.uniform(-3, 3, size))
    return x * (rng.random(size) < 0.8)


AXIOM_FAMILY = None  # filled below, once the classes exist


def axiom_suite(seed: int = 0, trials: int = 10_000, family=None) -> dict:
    """Seeded fuzzing of the norming-function axioms.

    For every variant in ``family`` and every trial this checks positive
    homogeneity, the triangle inequality, invariance under permutations and
    sign flips, monotonicity under entrywise domination and the bounds
    ``max|x| <= phi(x) <= sum|x|``. Normalization on ``(1, 0, ...)`` is
    checked once per variant. Returns ``{str(phi): violation count}``.
    """
    family = AXIOM_FAMILY if family is None else family
    rng = np.random.default_rng(seed)
    out = {}
    tol = 1e-12
    for phi in family:
        bad = int(phi([1.0, 0.0, 0.0]) != 1.0)
        for _ in range(trials):
            x = _random_sequence(rng)
            y = _random_sequence(rng)
            fx = phi(x)
            c = float(rng.standard_normal() * 10.0)
            if abs(phi(c * x) - abs(c) * fx) > tol * (abs(c) * fx + 1e-300):
                bad += 1
            a, b = _pad(x, y)
            if phi(a + b) > (phi(a) + phi(b)) * (1 + tol):
                bad += 1
            shuffled = rng.permutation(x) * rng.choice([-1.0, 1.0], size=x.size)
            if phi(shuffled) != fx:
                bad += 1
            if not dominance_holds(phi, x * rng.random(x.size), x, slack=tol):
                bad += 1
            if not sandwich_holds(phi, x, slack=tol):
                bad += 1
        out[str(phi)] = bad
    return out


# ---------------------------------------------------------------------------
# text syntax: p=1, p=2.5, inf, kyfan:5, lorentz, lorentz:1,0.5,0.25


def parse_snf(text: str) -> SymmetricNormingFunction:
    t = text.strip().lower()
    if t == "inf":
        return SupNorm()
    if t.startswith("p="):
        return PowerSum(float(t[2:]))
    if t.startswith("kyfan:"):
        return KyFan(int(t[6:]))
    if t == "lorentz":
        return Lorentz()
    if t.startswith("lorentz:"):
        return Lorentz(tuple(float(x) for x in t[8:].split(",")))
    raise ValueError(f"unrecognised norming function {text!r}")


def format_snf(phi: SymmetricNormingFunction) -> str:
    if isinstance(phi, SupNorm):
        return "inf"
    if isinstance(phi, PowerSum):
        p = phi.p
        return f"p={int(p)}" if p.is_integer() else f"p={p!r}"
    if isinstance(phi, KyFan):
        return f"kyfan:{phi.k}"
    if isinstance(phi, Lorentz):
        if phi.weights is None:
            return "lorentz"
        return "lorentz:" + ",".join(repr(w) for w in phi.weights)
    raise TypeError(f"not a norming function: {phi!r}")


AXIOM_FAMILY = (PowerSum(1), PowerSum(2), PowerSum(3.5), SupNorm(), KyFan(3), KyFan(5), Lorentz(), Lorentz((1.0, 0.5, 0.25)))
