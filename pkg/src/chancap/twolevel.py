"""Exact dynamics of the two-level tunneling channel and its induced binary channel.

The system Hamiltonian is

    H = [[E, eps], [eps, E + Delta]],

with level gap Delta >= 0 and tunneling strength eps >= 0. Its eigenpairs
are known in closed form through a = sqrt(Delta^2 + 4*eps^2)/2 and
b = Delta/2: energies E +- a + b with eigenvectors
(sqrt(a -+ b), +-sqrt(a +- b)) / sqrt(2a).

Alice prepares sqrt(1-p)|0> + sqrt(p)|1>. The measurement probabilities
oscillate with angular frequency 2a/hbar (period T0 = pi*hbar/a); their
oscillation amplitude is set by

    zeta_p = (eps/2) * (eps*(1 - 2p) + 2*b*sqrt(p*(1-p))).

Using the two preparations p = r0 and p = 1 - r0 as the binary input
alphabet turns the measurement into a 2x2 discrete channel.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .units import Constants

__all__ = [
    "TwoLevelHamiltonian",
    "PrepBias",
    "TwoLevelState",
    "EigenSystem",
    "BinaryChannel",
    "eigensystem",
    "evolve",
    "transition_probs",
    "period",
    "channel_at",
]

#: Magnitude below which floating-point excursions outside [0, 1] are
#: treated as cancellation noise and clamped.
PROB_CLAMP = 1e-12


@dataclass(frozen=True)
class TwoLevelHamiltonian:
    """Symmetric 2x2 Hamiltonian [[E, eps], [eps, E + Delta]].

    Negative eps is rejected: the closed forms below assume eps >= 0
    (zeta_p is not even in eps).
    """

    E: float
    Delta: float
    epsilon: float

    def __post_init__(self) -> None:
        if self.Delta < 0:
            raise ValueError(f"Delta must be >= 0, got {self.Delta}")
        if self.epsilon < 0:
            raise ValueError(f"epsilon must be >= 0, got {self.epsilon}")

    @property
    def a(self) -> float:
        """Half the level splitting: sqrt(Delta^2 + 4*eps^2) / 2."""
        return 0.5 * math.hypot(self.Delta, 2.0 * self.epsilon)

    @property
    def b(self) -> float:
        """Half the bare gap: Delta / 2."""
        return 0.5 * self.Delta

    def matrix(self) -> np.ndarray:
        return np.array([[self.E, self.epsilon], [self.epsilon, self.E + self.Delta]])


@dataclass(frozen=True)
class PrepBias:
    """Preparation bias p: probability of measuring |1> at t = 0."""

    p: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"prep bias must lie in [0, 1], got {self.p}")

    @property
    def variance(self) -> float:
        """Bernoulli variance p(1-p) of the preparation."""
        return self.p * (1.0 - self.p)


@dataclass(frozen=True)
class TwoLevelState:
    """Normalized amplitudes over the measurement basis {|0>, |1>}."""

    amp0: complex
    amp1: complex

    def __post_init__(self) -> None:
        norm = abs(self.amp0) ** 2 + abs(self.amp1) ** 2
        if abs(norm - 1.0) > 1e-12:
            raise ValueError(f"state norm deviates from 1 by {abs(norm - 1.0):.3e}")

    def populations(self) -> tuple[float, float]:
        return abs(self.amp0) ** 2, abs(self.amp1) ** 2


@dataclass(frozen=True)
class EigenSystem:
    """Eigenpairs of a two-level Hamiltonian, labeled by energy."""

    E_plus: float
    E_minus: float
    v_plus: np.ndarray
    v_minus: np.ndarray


@dataclass(frozen=True)
class BinaryChannel:
    """Row-stochastic 2x2 transition matrix p(y|x)."""

    matrix: np.ndarray

    def __post_init__(self) -> None:
        m = np.asarray(self.matrix, dtype=float)
        if m.shape != (2, 2):
            raise ValueError(f"expected a 2x2 matrix, got shape {m.shape}")
        if np.any(m < -PROB_CLAMP) or np.any(m > 1.0 + PROB_CLAMP):
            raise ValueError("entries stray from [0, 1] beyond cancellation noise")
        rowsums = m.sum(axis=1)
        if np.any(np.abs(rowsums - 1.0) > PROB_CLAMP):
            raise ValueError(f"rows must sum to 1, got {rowsums}")
        object.__setattr__(self, "matrix", np.clip(m, 0.0, 1.0))


def eigensystem(h: TwoLevelHamiltonian) -> EigenSystem:
    """Closed-form eigenpairs E +- a + b, (sqrt(a -+ b), +-sqrt(a +- b))/sqrt(2a).

    The degenerate point a = 0 (Delta = eps = 0) returns the standard basis
    with both energies E.
    """
    a, b = h.a, h.b
    if a == 0.0:
        return EigenSystem(
            E_plus=h.E,
            E_minus=h.E,
            v_plus=np.array([1.0, 0.0]),
            v_minus=np.array([0.0, 1.0]),
        )
    s = 1.0 / math.sqrt(2.0 * a)
    # a >= b >= 0, so a - b can only go negative through rounding.
    amb = max(a - b, 0.0)
    v_plus = np.array([math.sqrt(amb), math.sqrt(a + b)]) * s
    v_minus = np.array([math.sqrt(a + b), -math.sqrt(amb)]) * s
    return EigenSystem(E_plus=h.E + a + b, E_minus=h.E - a + b, v_plus=v_plus, v_minus=v_minus)


def evolve(h: TwoLevelHamiltonian, p: PrepBias, t: float, c: Constants) -> TwoLevelState:
    """Amplitudes of the evolved preparation sqrt(1-p)|0> + sqrt(p)|1>.

    Closed form: up to the global phase exp(-i(E+b)t/hbar),

        amp0 = sqrt(1-p) cos(at/hbar) + i (b sqrt(1-p) - eps sqrt(p)) sin(at/hbar) / a
        amp1 = sqrt(p)   cos(at/hbar) - i (eps sqrt(1-p) + b sqrt(p)) sin(at/hbar) / a
    """
    a, b, eps = h.a, h.b, h.epsilon
    c0 = math.sqrt(1.0 - p.p)
    c1 = math.sqrt(p.p)
    if a == 0.0:
        phase = cmath.exp(-1j * h.E * t / c.hbar)
        return TwoLevelState(amp0=phase * c0, amp1=phase * c1)
    theta = a * t / c.hbar
    phase = cmath.exp(-1j * (h.E + b) * t / c.hbar)
    cos_t, sin_t = math.cos(theta), math.sin(theta)
    amp0 = phase * (c0 * cos_t + 1j * (b * c0 - eps * c1) * sin_t / a)
    amp1 = phase * (c1 * cos_t - 1j * (eps * c0 + b * c1) * sin_t / a)
    return TwoLevelState(amp0=amp0, amp1=amp1)


def _clamp_prob(x: float) -> float:
    if -PROB_CLAMP <= x < 0.0:
        return 0.0
    if 1.0 < x <= 1.0 + PROB_CLAMP:
        return 1.0
    return x


def transition_probs(
    h: TwoLevelHamiltonian, p: PrepBias, t: float, c: Constants
) -> tuple[float, float]:
    """Probabilities of measuring |0> and |1> a delay t after preparation.

    (prob0, prob1) = ( [ zeta_p cos(2at/hbar) + a^2 (1-p) - zeta_p ] / a^2,
                       [-zeta_p cos(2at/hbar) + a^2 p     + zeta_p ] / a^2 ),

    with zeta_p = (eps/2)(eps(1-2p) + 2b sqrt(p(1-p))). Static when a = 0.
    """
    a, b, eps = h.a, h.b, h.epsilon
    if a == 0.0:
        return 1.0 - p.p, p.p
    zeta = 0.5 * eps * (eps * (1.0 - 2.0 * p.p) + 2.0 * b * math.sqrt(p.variance))
    a2 = a * a
    cos2 = math.cos(2.0 * a * t / c.hbar)
    prob0 = (zeta * cos2 + a2 * (1.0 - p.p) - zeta) / a2
    prob1 = (-zeta * cos2 + a2 * p.p + zeta) / a2
    return _clamp_prob(prob0), _clamp_prob(prob1)


def period(h: TwoLevelHamiltonian, c: Constants) -> float:
    """Oscillation period T0 = 2*pi*hbar / sqrt(Delta^2 + 4*eps^2)."""
    a = h.a
    if a == 0.0:
        raise ValueError("Delta = epsilon = 0 gives a static channel with no period")
    return math.pi * c.hbar / a


def channel_at(
    h: TwoLevelHamiltonian, r0: PrepBias, t: float, c: Constants
) -> BinaryChannel:
    """Binary channel induced by the preparations p = r0 (input 0) and p = 1 - r0 (input 1).

    r0 is restricted to [0, 1/2]; larger values merely relabel the inputs.
    """
    if r0.p > 0.5:
        raise ValueError(f"r0 must lie in [0, 1/2], got {r0.p}")
    row0 = transition_probs(h, r0, t, c)
    row1 = transition_probs(h, PrepBias(1.0 - r0.p), t, c)
    return BinaryChannel(matrix=np.array([row0, row1]))
