"""Whittaker frames: the data (lambda, mu, pivots, spectral shift).

A frame fixes one cyclic module instance: the functional values
lambda_0..lambda_n on the modes a(0)..a(n), mu_1..mu_m on a*(1)..a*(m),
the pivot indices i0 (lambda_{i0} != 0) and j0 (mu_{j0} != 0), and an
integer spectral shift s.  Entries beyond the stored lists are zero.

The vacuum frame (lambda = mu = (), shift 0) is the underlying vertex
algebra itself; its cyclic vector is the vacuum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import Q


class HypothesisError(ValueError):
    """An operation was invoked on a frame violating its standing hypothesis."""


def _qtuple(xs):
    return tuple(Q(x) for x in xs)


@dataclass(frozen=True)
class Frame:
    lam: tuple = ()        # lambda_0, lambda_1, ...
    mu: tuple = ()         # mu_1, mu_2, ...
    shift: int = 0
    i0: int | None = None  # default: largest index with lambda != 0
    j0: int | None = None  # default: largest index with mu != 0

    def __post_init__(self):
        object.__setattr__(self, "lam", _qtuple(self.lam))
        object.__setattr__(self, "mu", _qtuple(self.mu))
        if self.i0 is not None and not self.lam_at(self.i0):
            raise HypothesisError("pivot i0=%d has lambda_{i0} = 0" % self.i0)
        if self.j0 is not None and not self.mu_at(self.j0):
            raise HypothesisError("pivot j0=%d has mu_{j0} = 0" % self.j0)

    # functional values ----------------------------------------------------
    def lam_at(self, k: int) -> Fraction:
        if 0 <= k < len(self.lam):
            return self.lam[k]
        return Q(0)

    def mu_at(self, k: int) -> Fraction:
        if 1 <= k <= len(self.mu):
            return self.mu[k - 1]
        return Q(0)

    @property
    def n_max(self) -> int:
        """Largest index with lambda nonzero, or -1."""
        for k in range(len(self.lam) - 1, -1, -1):
            if self.lam[k]:
                return k
        return -1

    @property
    def m_max(self) -> int:
        """Largest index with mu nonzero, or 0."""
        for k in range(len(self.mu), 0, -1):
            if self.mu[k - 1]:
                return k
        return 0

    # pivots ---------------------------------------------------------------
    def pivot_i0(self) -> int:
        if self.i0 is not None:
            return self.i0
        if self.n_max < 0:
            raise HypothesisError("requires lambda != 0 (no A-pivot available)")
        return self.n_max

    def pivot_j0(self) -> int:
        if self.j0 is not None:
            return self.j0
        if self.m_max < 1:
            raise HypothesisError("requires mu != 0 (no S-pivot available)")
        return self.m_max

    def require_nondegenerate(self):
        if self.n_max < 0 or self.m_max < 1:
            raise HypothesisError(
                "requires lambda != 0 and mu != 0; got lambda=%s mu=%s"
                % (list(map(str, self.lam)), list(map(str, self.mu)))
            )

    def with_shift(self, s: int) -> "Frame":
        return Frame(self.lam, self.mu, s, self.i0, self.j0)

    def summary(self) -> dict:
        return {
            "lambda": [str(x) for x in self.lam],
            "mu": [str(x) for x in self.mu],
            "shift": self.shift,
            "i0": self.i0,
            "j0": self.j0,
        }


VACUUM = Frame()
DEFAULT = Frame(lam=(1, 2), mu=(1,))
