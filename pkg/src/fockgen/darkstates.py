"""Closed-form dark-state family of the N-atom/cavity system.

Each manifold e(N, k) carries a zero-energy eigenstate with no population in
the radiating level |1>.  Writing x = r/g and summing over the cavity photon
number l, its amplitude on |N-k-l, 0, l+k, l> is proportional to

    (-x)^(l+k) / sqrt((N-k-l)! (l+k)! l!),

normalized by Z_k(x)^2 = sum_l x^(2l) / ((N-k-l)! (l+k)! l!).  The (-1)^k
global phase keeps the cavity-emission mapping a |psi_k> = (x Z_{k+1}/Z_k)
|psi_{k+1}> with a positive coefficient across the whole family; at x = 0
exactly the free global phase is fixed so the zero-drive state is
+|N-k, 0, k, 0>.

Normalization constants and photon-number moments are evaluated by direct
summation of the series (exact integer factorials, ascending-l terms combined
with exact rounding), with a log-domain fallback above N = 30.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .basis import Manifold, enumerate_manifold

_FACTORIAL_TABLE_MAX = 170   # largest n! representable in float64
_DIRECT_SUM_MAX_N = 30       # beyond this, accumulate in the log domain
_FACT = [math.factorial(i) for i in range(_FACTORIAL_TABLE_MAX + 1)]


@dataclass(frozen=True)
class DarkState:
    """Normalized dark state of e(N, k) at pump ratio x = r/g."""

    N: int
    k: int
    x: float
    amplitudes: np.ndarray
    Z: float

    @property
    def manifold(self) -> Manifold:
        return enumerate_manifold(self.N, self.k)


@dataclass(frozen=True)
class DarkDerivatives:
    """Derivative data of the dark state with respect to x.

    phi is the normalized d/dx of the dark state and Y its norm, so the state
    moves as d/dt |psi> = (rdot/g) Y phi under a drive ramp.  chi is the
    companion normalized series living in e(N-1, k) with norm W; it is unused
    downstream and only its normalization is meaningful (None when k = N).
    """

    N: int
    k: int
    x: float
    Y: float
    W: float
    phi: np.ndarray
    chi: np.ndarray | None


@dataclass(frozen=True)
class PropertySuiteReport:
    """Residuals of the six dark-state identities at one (N, k, x) point.

    P1: x Z'_k/Z_k = <l>_k          P2: (x Z_{k+1}/Z_k)^2 = <l>_k
    P3: Var(a'a) = (x Y_k)^2        P4: <l^2>_k = <l>_k (<l>_{k+1} + 1)
    P5: <l>_k >= <l>_{k+1}          P6: Var(a'a) <= N - k

    Equality residuals are relative; inequality residuals are the violation
    amount (0 when satisfied).
    """

    N: int
    k: int
    x: float
    residuals: tuple[float, float, float, float, float, float]
    tolerance: float = 1e-10

    @property
    def passed(self) -> tuple[bool, ...]:
        return tuple(r <= self.tolerance for r in self.residuals)

    @property
    def all_passed(self) -> bool:
        return all(self.passed)


def _check_args(N: int, k: int, x: float) -> None:
    if not 0 <= k <= N:
        raise ValueError(f"need 0 <= k <= N, got N={N}, k={k}")
    if x < 0:
        raise ValueError(f"pump ratio x must be >= 0, got {x}")


def _log_denominator(top: int, k: int, l: int) -> float:
    return (math.lgamma(top - l + 1) + math.lgamma(l + k + 1)
            + math.lgamma(l + 1))


def _series_terms(N: int, k: int, x: float) -> tuple[list[float], float]:
    """Terms t_l with x^(2l)/((N-k-l)!(l+k)!l!) = t_l * exp(log_scale).

    log_scale is 0 on the exact-factorial path (N <= 30).
    """
    top = N - k
    if N <= _DIRECT_SUM_MAX_N:
        return [x ** (2 * l) / (_FACT[top - l] * _FACT[l + k] * _FACT[l])
                for l in range(top + 1)], 0.0
    logs = []
    for l in range(top + 1):
        if x == 0.0 and l > 0:
            logs.append(-math.inf)
        else:
            lx = 0.0 if l == 0 else 2 * l * math.log(x)
            logs.append(lx - _log_denominator(top, k, l))
    peak = max(logs)
    return [math.exp(a - peak) for a in logs], peak


def _moments(N: int, k: int, x: float) -> tuple[float, float, float, float]:
    """(s0, s1, s2, log_scale) with sum_l l^p * x^(2l) w_l = s_p exp(log_scale)."""
    terms, log_scale = _series_terms(N, k, x)
    s0 = math.fsum(terms)
    s1 = math.fsum(l * t for l, t in enumerate(terms))
    s2 = math.fsum(l * l * t for l, t in enumerate(terms))
    return s0, s1, s2, log_scale


def _normalized_magnitudes(N: int, k: int, x: float) -> np.ndarray:
    """|amplitude| of the dark state on the photon-number-l component."""
    terms, _ = _series_terms(N, k, x)
    s0 = math.fsum(terms)
    return np.sqrt(np.array(terms) / s0)


def normalization(N: int, k: int, x: float) -> float:
    """Z_k(x), the dark-state normalization constant."""
    _check_args(N, k, x)
    s0, _, _, log_scale = _moments(N, k, x)
    return math.sqrt(s0) * math.exp(0.5 * log_scale)


def normalization_derivative(N: int, k: int, x: float) -> float:
    """dZ_k/dx by term-wise differentiation of the series (never finite
    differences), so identity checks probe the algebra rather than a
    numerical approximation."""
    _check_args(N, k, x)
    if x == 0.0:
        return 0.0
    s0, s1, _, log_scale = _moments(N, k, x)
    return s1 / (x * math.sqrt(s0)) * math.exp(0.5 * log_scale)


def avg_photons(N: int, k: int, x: float) -> float:
    """<l>_k: mean cavity photon number in the dark state, in [0, N-k]."""
    _check_args(N, k, x)
    s0, s1, _, _ = _moments(N, k, x)
    return s1 / s0


def avg_photons_squared(N: int, k: int, x: float) -> float:
    """<l^2>_k from the closed-form series."""
    _check_args(N, k, x)
    s0, _, s2, _ = _moments(N, k, x)
    return s2 / s0


def dark_state(N: int, k: int, x: float) -> DarkState:
    """Construct the normalized dark state of e(N, k) at x = r/g."""
    _check_args(N, k, x)
    m = enumerate_manifold(N, k)
    mags = _normalized_magnitudes(N, k, x)
    amps = np.zeros(m.dim)
    sign = (-1) ** k if x > 0 else 1
    top = N - k
    for l in range(top + 1):
        idx = m.index[(top - l, 0, l + k, l)]
        amps[idx] = sign * (-1) ** l * mags[l]
    return DarkState(N=N, k=k, x=x, amplitudes=amps,
                     Z=normalization(N, k, x))


def dark_state_from_rates(N: int, k: int, r: float, g: float) -> DarkState:
    """Dark state at pump Rabi frequency r and cavity coupling g."""
    if g <= 0:
        raise ValueError(f"cavity coupling g must be > 0, got {g}")
    return dark_state(N, k, r / g)


def dark_derivatives(N: int, k: int, x: float) -> DarkDerivatives:
    """Normalized x-derivative state phi_k, its norm Y_k, and the chi_k state.

    Y_k is accumulated from the manifestly non-negative series
    sum_l (l - <l>)^2 x^(2l-2) w_l / Z^2, which equals Var(a'a)/x^2 for x > 0
    and (N-k)/(k+1) at x = 0, where Y_k attains its maximum.
    """
    _check_args(N, k, x)
    m = enumerate_manifold(N, k)
    top = N - k

    u = np.zeros(m.dim)
    if top == 0:
        # single-state family: nothing moves
        return DarkDerivatives(N=N, k=k, x=x, Y=0.0, W=0.0, phi=u, chi=None)

    if x == 0.0:
        y = math.sqrt(top / (k + 1))
        u[m.index[(top - 1, 0, 1 + k, 1)]] = -y
    else:
        mean_l = avg_photons(N, k, x)
        mags = _normalized_magnitudes(N, k, x)
        sign = (-1) ** k
        for l in range(top + 1):
            idx = m.index[(top - l, 0, l + k, l)]
            u[idx] = sign * (-1) ** l * (l - mean_l) / x * mags[l]
        y = float(np.linalg.norm(u))
    phi = u / y if y > 0 else u

    target = enumerate_manifold(N - 1, k)
    chi_mags = _normalized_magnitudes(N - 1, k, x)
    chi = np.zeros(target.dim)
    for l in range(N - 1 - k + 1):
        idx = target.index[(N - 1 - k - l, 0, l + k, l)]
        chi[idx] = (-1) ** l * chi_mags[l]
    w_norm = normalization(N - 1, k, x)
    return DarkDerivatives(N=N, k=k, x=x, Y=y, W=w_norm, phi=phi, chi=chi)


def max_angular_velocity_bound(N: int, k: int, rdot_max: float, g: float) -> float:
    """(N-k) rdot_max^2 / ((k+1) g^2): ceiling of <dpsi/dt|dpsi/dt>.

    Equals max(xdot^2) * max(Y_k^2), using that Y_k peaks at x = 0 with
    Y_k(0)^2 = (N-k)/(k+1).
    """
    if rdot_max < 0:
        raise ValueError(f"rdot_max must be >= 0, got {rdot_max}")
    if g <= 0:
        raise ValueError(f"cavity coupling g must be > 0, got {g}")
    return (N - k) * rdot_max ** 2 / ((k + 1) * g ** 2)


def _relative_residual(a: float, b: float) -> float:
    scale = max(abs(a), abs(b))
    if scale == 0.0:
        return 0.0
    return abs(a - b) / scale


def property_suite(N: int, k: int, x: float) -> PropertySuiteReport:
    """Check the six photon-statistics identities of the dark-state family.

    Equalities are probed with one side from the closed-form series and the
    other from a quadratic form over the constructed state vector, so the two
    routes stay independent.
    """
    _check_args(N, k, x)
    if k >= N:
        raise ValueError("the suite compares manifolds k and k+1; need k < N")

    psi = dark_state(N, k, x)
    m = psi.manifold
    l_diag = np.array([s.l for s in m.states], dtype=float)
    prob = psi.amplitudes ** 2
    mean_l_vec = float(l_diag @ prob)
    mean_l2_vec = float((l_diag ** 2) @ prob)
    var_vec = mean_l2_vec - mean_l_vec ** 2

    zk = normalization(N, k, x)
    zk1 = normalization(N, k + 1, x)
    zdot = normalization_derivative(N, k, x)
    mean_l_k = avg_photons(N, k, x)
    mean_l_k1 = avg_photons(N, k + 1, x)
    y = dark_derivatives(N, k, x).Y

    r1 = _relative_residual(x * zdot / zk, mean_l_vec)
    r2 = _relative_residual((x * zk1 / zk) ** 2, mean_l_vec)
    r3 = _relative_residual(var_vec, (x * y) ** 2)
    r4 = _relative_residual(mean_l2_vec, mean_l_k * (mean_l_k1 + 1.0))
    r5 = max(0.0, mean_l_k1 - mean_l_k)
    r6 = max(0.0, var_vec - (N - k))
    return PropertySuiteReport(N=N, k=k, x=x,
                               residuals=(r1, r2, r3, r4, r5, r6))
