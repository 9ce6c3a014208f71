"""Sparse operators on and between e(N, k) manifolds.

Matrix elements are assembled by iterating source states and applying bosonic
ladder rules, never by dense outer products.  Entries are stored as triplets in
deterministic row-major order so construction is bit-reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .basis import Manifold, enumerate_manifold

NUMBER_OPERATORS = ("photon", "excited", "total_atoms", "D")


@dataclass(frozen=True)
class SystemParams:
    """Rates of the atom-cavity system, all in units of the reference rate.

    g is the vacuum Rabi coupling |1><2|a + h.c., delta the common detuning
    (negative = red), kappa the cavity field decay, gamma the spontaneous
    decay of |1>.  g = 0 is accepted so that decoupled limits can be built;
    the dark-state closed forms separately reject g = 0 where x = r/g is
    needed.
    """

    g: float = 1.0
    delta: float = 0.0
    kappa: float = 0.0
    gamma: float = 0.0

    def __post_init__(self):
        if self.g < 0:
            raise ValueError(f"g must be >= 0, got {self.g}")
        if self.kappa < 0:
            raise ValueError(f"kappa must be >= 0, got {self.kappa}")
        if self.gamma < 0:
            raise ValueError(f"gamma must be >= 0, got {self.gamma}")


@dataclass(frozen=True)
class SparseOperator:
    """Complex triplet matrix acting within or between manifolds.

    Entries are unique (row, col) pairs sorted row-major; exact zeros are
    dropped at assembly.  `hermitian` tags operators built to satisfy
    A[r, c] == conj(A[c, r]).
    """

    rows: int
    cols: int
    row_indices: np.ndarray
    col_indices: np.ndarray
    values: np.ndarray
    hermitian: bool = False

    @property
    def nnz(self) -> int:
        return len(self.values)

    def to_dense(self) -> np.ndarray:
        out = np.zeros((self.rows, self.cols), dtype=complex)
        out[self.row_indices, self.col_indices] = self.values
        return out

    def matvec(self, psi: np.ndarray) -> np.ndarray:
        out = np.zeros(self.rows, dtype=complex)
        np.add.at(out, self.row_indices, self.values * psi[self.col_indices])
        return out


def _from_entries(entries: dict[tuple[int, int], complex], rows: int, cols: int,
                  hermitian: bool = False) -> SparseOperator:
    keep = sorted((rc, v) for rc, v in entries.items() if v != 0)
    if keep:
        rr = np.array([rc[0] for rc, _ in keep], dtype=np.intp)
        cc = np.array([rc[1] for rc, _ in keep], dtype=np.intp)
        vv = np.array([v for _, v in keep], dtype=complex)
    else:
        rr = np.empty(0, dtype=np.intp)
        cc = np.empty(0, dtype=np.intp)
        vv = np.empty(0, dtype=complex)
    for r, c in zip(rr, cc):
        if not (0 <= r < rows and 0 <= c < cols):
            raise ValueError(f"entry ({r},{c}) out of bounds {rows}x{cols}")
    return SparseOperator(rows, cols, rr, cc, vv, hermitian)


def build_hamiltonian(m: Manifold, r: float, p: SystemParams) -> SparseOperator:
    """Closed-system Hamiltonian on e(N, k) at drive amplitude r.

    H = -delta b1'b1 + r (b1'b0 + b0'b1) + g (b1'b2 a + a' b2' b1),
    so the nonzero elements are

        <n0-1, n1+1, n2, l   | H | n0, n1, n2, l> = r sqrt(n0 (n1+1))
        <n0, n1+1, n2-1, l-1 | H | n0, n1, n2, l> = g sqrt((n1+1) n2 l)
        <n0, n1, n2, l | H | n0, n1, n2, l>       = -delta n1

    plus Hermitian conjugates.
    """
    if r < 0:
        raise ValueError(f"drive amplitude must be >= 0, got r={r}")
    entries: dict[tuple[int, int], complex] = {}
    for j, s in enumerate(m.states):
        n0, n1, n2, l = s.as_tuple()
        if n1:
            entries[(j, j)] = complex(-p.delta * n1)
        if r and n0:
            i = m.index[(n0 - 1, n1 + 1, n2, l)]
            amp = r * np.sqrt(n0 * (n1 + 1))
            entries[(i, j)] = complex(amp)
            entries[(j, i)] = complex(amp)
        if p.g and n2 and l:
            i = m.index[(n0, n1 + 1, n2 - 1, l - 1)]
            amp = p.g * np.sqrt((n1 + 1) * n2 * l)
            entries[(i, j)] = complex(amp)
            entries[(j, i)] = complex(amp)
    return _from_entries(entries, m.dim, m.dim, hermitian=True)


def build_conditional(m: Manifold, r: float, p: SystemParams) -> SparseOperator:
    """Non-Hermitian no-jump generator H - i kappa a'a - i gamma b1'b1."""
    h = build_hamiltonian(m, r, p)
    entries = {(int(i), int(j)): v
               for i, j, v in zip(h.row_indices, h.col_indices, h.values)}
    for j, s in enumerate(m.states):
        damp = p.kappa * s.l + p.gamma * s.n1
        if damp:
            entries[(j, j)] = entries.get((j, j), 0.0) - 1j * damp
    hermitian = p.kappa == 0 and p.gamma == 0
    return _from_entries(entries, m.dim, m.dim, hermitian=hermitian)


def build_number_operator(m: Manifold, which: str) -> SparseOperator:
    """Diagonal counter: photon (l), excited (n1), total_atoms (N) or D (k)."""
    if which not in NUMBER_OPERATORS:
        raise ValueError(f"unknown number operator {which!r}, "
                         f"expected one of {NUMBER_OPERATORS}")
    entries: dict[tuple[int, int], complex] = {}
    for j, s in enumerate(m.states):
        value = {"photon": s.l, "excited": s.n1,
                 "total_atoms": m.N, "D": m.k}[which]
        if value:
            entries[(j, j)] = complex(value)
    return _from_entries(entries, m.dim, m.dim, hermitian=True)


def build_cavity_jump(m: Manifold) -> SparseOperator:
    """Annihilation a: e(N, k) -> e(N, k+1), |..., l> -> sqrt(l) |..., l-1>."""
    if m.k >= m.N:
        raise ValueError(
            f"e({m.N},{m.k}) holds no photons; cavity jump needs k < N")
    target = enumerate_manifold(m.N, m.k + 1)
    entries: dict[tuple[int, int], complex] = {}
    for j, s in enumerate(m.states):
        if s.l:
            i = target.index[(s.n0, s.n1, s.n2, s.l - 1)]
            entries[(i, j)] = complex(np.sqrt(s.l))
    return _from_entries(entries, target.dim, m.dim)


def build_spont_jump(m: Manifold) -> SparseOperator:
    """Spontaneous loss b1: e(N, k) -> e(N-1, k), |.., n1, ..> -> sqrt(n1) |.., n1-1, ..>.

    The emitted atom leaves the symmetric space entirely, so the total atom
    count drops by one while n2 and l (hence k) are untouched.
    """
    if m.N < 1:
        raise ValueError("spontaneous jump needs at least one atom")
    if m.k > m.N - 1:
        raise ValueError(
            f"e({m.N},{m.k}) has no excited population and e({m.N - 1},{m.k}) "
            "does not exist")
    target = enumerate_manifold(m.N - 1, m.k)
    entries: dict[tuple[int, int], complex] = {}
    for j, s in enumerate(m.states):
        if s.n1:
            i = target.index[(s.n0, s.n1 - 1, s.n2, s.l)]
            entries[(i, j)] = complex(np.sqrt(s.n1))
    return _from_entries(entries, target.dim, m.dim)
