"""Permutation-symmetric number basis for N three-level atoms and one cavity mode.

A basis state |n0, n1, n2, l> counts atoms in the internal levels |0>, |1>, |2>
plus the cavity photon number l.  Two quantities are conserved by the closed
dynamics: the total atom number N = n0 + n1 + n2 and the difference
k = n2 - l.  The joint eigenspace e(N, k) is the unit of work for every
operator and propagator in this package.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache


@dataclass(frozen=True)
class SymmetricState:
    """Occupation tuple (n0, n1, n2, l) of the symmetric basis."""

    n0: int
    n1: int
    n2: int
    l: int

    def __post_init__(self):
        if min(self.n0, self.n1, self.n2, self.l) < 0:
            raise ValueError(f"occupations must be non-negative, got {self}")

    @property
    def n_atoms(self) -> int:
        return self.n0 + self.n1 + self.n2

    @property
    def d_value(self) -> int:
        """Eigenvalue of D = n2 - l (photons already emitted, once decay is on)."""
        return self.n2 - self.l

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.n0, self.n1, self.n2, self.l)

    def __repr__(self):
        return f"|{self.n0},{self.n1},{self.n2},{self.l}>"


@dataclass(frozen=True)
class Manifold:
    """The e(N, k) subspace: ordered states plus the inverse index map.

    Immutable after construction, so instances are safe to share across
    concurrent trajectory workers.
    """

    N: int
    k: int
    states: tuple[SymmetricState, ...]
    index: dict[tuple[int, int, int, int], int] = field(repr=False)

    @property
    def dim(self) -> int:
        return len(self.states)

    def __iter__(self):
        return iter(self.states)


def manifold_dimension(N: int, k: int) -> int:
    """Dimension of e(N, k): (N-k+1)(N-k+2)/2 for 0 <= k <= N."""
    m = N - k
    return (m + 1) * (m + 2) // 2


@lru_cache(maxsize=None)
def enumerate_manifold(N: int, k: int) -> Manifold:
    """Enumerate e(N, k) in canonical order (descending n0, then descending n1).

    The ordering puts the drive-off initial state |N,0,0,0> at index 0.
    Manifolds with k < 0 (cavity seeded with photons) are rejected: the
    generation scheme always starts from an empty cavity and only ever raises k.
    """
    if N < 0:
        raise ValueError(f"atom number must be non-negative, got N={N}")
    if k < 0 or k > N:
        raise ValueError(f"need 0 <= k <= N, got k={k}, N={N}")

    states = []
    for n0 in range(N, -1, -1):
        for n1 in range(N - n0, -1, -1):
            n2 = N - n0 - n1
            if n2 >= k:
                states.append(SymmetricState(n0, n1, n2, n2 - k))
    index = {s.as_tuple(): i for i, s in enumerate(states)}
    manifold = Manifold(N=N, k=k, states=tuple(states), index=index)
    assert manifold.dim == manifold_dimension(N, k)
    return manifold


def state_index(manifold: Manifold, s: SymmetricState) -> int:
    """Position of `s` in the manifold's canonical ordering.

    Raises KeyError if `s` violates the manifold constraints.
    """
    try:
        return manifold.index[s.as_tuple()]
    except KeyError:
        raise KeyError(
            f"{s} does not belong to e({manifold.N},{manifold.k})"
        ) from None
