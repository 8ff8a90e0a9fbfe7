"""Planar mechanics on noncommutative phase spaces.

A phase space is described by two scalars: ``G`` (position-position
bracket) and ``F`` (momentum-momentum bracket).  The equations of motion
they induce for a Hamiltonian H = p^2/2m + V(q) are

    dq^i/dt = dH/dp_i + G eps^ij dH/dq^j,
    dp_i/dt = -dH/dq^i + F eps_ij dH/dp_j,

which the module integrates with a fixed-step fourth-order Runge-Kutta
scheme.  It also provides the two exact coordinate maps that reproduce
such brackets from a commutative phase space: a position shift by the
dual magnetic scalar and a momentum shift by the magnetic scalar.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .rational_linalg import rarray, rat, to_float

__all__ = [
    "IntegrationError",
    "NCPhaseSpace2D",
    "HamiltonianSpec",
    "NCTrajectory",
    "MinimalCouplingResult",
    "CANONICAL_BRACKET_MATRIX",
    "hamiltonian_value",
    "hamilton_rhs",
    "linear_system",
    "rk4_step",
    "integrate_flow",
    "integrate",
    "bracket_pushforward",
    "minimal_coupling_galilei",
    "minimal_coupling_paragalilei",
]

class IntegrationError(RuntimeError):
    """Raised when an integration produces a non-finite state."""

    def __init__(self, message: str, step: int) -> None:
        super().__init__(message)
        self.step = step


@dataclass(frozen=True)
class NCPhaseSpace2D:
    """A planar phase space with bracket scalars G (positions) and F (momenta)."""

    G_field: Fraction
    F_field: Fraction
    mass: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "G_field", rat(self.G_field))
        object.__setattr__(self, "F_field", rat(self.F_field))
        object.__setattr__(self, "mass", rat(self.mass))
        if self.mass <= 0:
            raise ValueError(f"mass must be positive, got {self.mass}")
        if self.symplectic_factor == 0:
            raise ValueError(
                "1 - G*F vanishes: the bracket matrix is degenerate and the "
                "dynamics is not symplectic"
            )

    @property
    def symplectic_factor(self) -> Fraction:
        return 1 - self.G_field * self.F_field

    def theta_matrix(self) -> np.ndarray:
        """Bracket matrix of (q1, q2, p1, p2) driving the dynamics."""
        G, F = self.G_field, self.F_field
        z = Fraction(0)
        one = Fraction(1)
        return rarray(
            [
                [z, G, one, z],
                [-G, z, z, one],
                [-one, z, z, F],
                [z, -one, -F, z],
            ]
        )

    def omega_matrix(self) -> np.ndarray:
        """Exact inverse of :meth:`theta_matrix` (closed form)."""
        G, F = self.G_field, self.F_field
        s = 1 / self.symplectic_factor
        z = Fraction(0)
        return rarray(
            [
                [z, F * s, -s, z],
                [-F * s, z, z, -s],
                [s, z, z, G * s],
                [z, s, -G * s, z],
            ]
        )


@dataclass(frozen=True)
class HamiltonianSpec:
    """Potential data for H = p^2/(2m) + a.q + q'Kq/2.

    ``linear`` holds (a1, a2); ``quadratic`` holds the symmetric matrix
    entries (k11, k12, k22).
    """

    linear: tuple[float, float] = (0.0, 0.0)
    quadratic: tuple[float, float, float] = (0.0, 0.0, 0.0)

    def potential(self, q: np.ndarray) -> float:
        a1, a2 = self.linear
        k11, k12, k22 = self.quadratic
        return float(
            a1 * q[0]
            + a2 * q[1]
            + (k11 * q[0] ** 2 + 2 * k12 * q[0] * q[1] + k22 * q[1] ** 2) / 2.0
        )

    def potential_gradient(self, q: np.ndarray) -> np.ndarray:
        a1, a2 = self.linear
        k11, k12, k22 = self.quadratic
        return np.array(
            [a1 + k11 * q[0] + k12 * q[1], a2 + k12 * q[0] + k22 * q[1]]
        )


def hamiltonian_value(space: NCPhaseSpace2D, ham: HamiltonianSpec, state) -> float:
    z = np.asarray(state, dtype=float)
    m = float(space.mass)
    return float((z[2] ** 2 + z[3] ** 2) / (2.0 * m) + ham.potential(z[:2]))


def hamilton_rhs(
    space: NCPhaseSpace2D, ham: HamiltonianSpec, state
) -> np.ndarray:
    """Right-hand side of the modified Hamilton equations at ``state``."""
    z = np.asarray(state, dtype=float)
    gq = ham.potential_gradient(z[:2])
    gp = z[2:] / float(space.mass)
    G = float(space.G_field)
    F = float(space.F_field)
    qdot = gp + G * np.array([gq[1], -gq[0]])
    pdot = -gq + F * np.array([gp[1], -gp[0]])
    return np.concatenate([qdot, pdot])


def linear_system(
    space: NCPhaseSpace2D, ham: HamiltonianSpec
) -> tuple[np.ndarray, np.ndarray]:
    """The affine form dz/dt = A z + b of the equations of motion.

    Valid exactly because the Hamiltonian gradient is affine in the state;
    useful for closed-form (matrix exponential) cross-checks.
    """
    theta = to_float(space.theta_matrix())
    k11, k12, k22 = (float(v) for v in ham.quadratic)
    a1, a2 = (float(v) for v in ham.linear)
    m = float(space.mass)
    hessian = np.array(
        [
            [k11, k12, 0.0, 0.0],
            [k12, k22, 0.0, 0.0],
            [0.0, 0.0, 1.0 / m, 0.0],
            [0.0, 0.0, 0.0, 1.0 / m],
        ]
    )
    constant = np.array([a1, a2, 0.0, 0.0])
    return theta @ hessian, theta @ constant


def rk4_step(
    rhs: Callable[[float, np.ndarray], np.ndarray],
    t: float,
    state: np.ndarray,
    dt: float,
) -> np.ndarray:
    """One classical Runge-Kutta step for dz/dt = rhs(t, z)."""
    k1 = rhs(t, state)
    k2 = rhs(t + dt / 2.0, state + dt / 2.0 * k1)
    k3 = rhs(t + dt / 2.0, state + dt / 2.0 * k2)
    k4 = rhs(t + dt, state + dt * k3)
    return state + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def integrate_flow(
    rhs: Callable[[float, np.ndarray], np.ndarray],
    state0: Sequence[float],
    t_end: float,
    dt: float,
) -> tuple[np.ndarray, np.ndarray]:
    """Fixed-step RK4 from 0 to ``t_end``; returns (times, states).

    The step count is ``round(t_end/dt)`` (at least one) and the actual
    step is adjusted so the grid lands exactly on ``t_end``.  A non-finite
    state aborts with :class:`IntegrationError` carrying the step index.
    """
    if dt <= 0 or t_end <= 0:
        raise ValueError("t_end and dt must be positive")
    n_steps = max(1, int(round(t_end / dt)))
    h = t_end / n_steps
    times = np.linspace(0.0, t_end, n_steps + 1)
    states = np.empty((n_steps + 1, len(state0)))
    states[0] = np.asarray(state0, dtype=float)
    for i in range(n_steps):
        nxt = rk4_step(rhs, times[i], states[i], h)
        if not np.all(np.isfinite(nxt)):
            raise IntegrationError(
                f"integration aborted: non-finite state at step {i + 1} "
                f"(t = {times[i + 1]:.6g})",
                i + 1,
            )
        states[i + 1] = nxt
    return times, states


@dataclass(frozen=True)
class NCTrajectory:
    """An integrated trajectory with per-sample energy and its drift."""

    times: np.ndarray
    states: np.ndarray
    energies: np.ndarray
    invariant_drift: np.ndarray

    @property
    def final_state(self) -> np.ndarray:
        return self.states[-1]


def integrate(
    space: NCPhaseSpace2D,
    ham: HamiltonianSpec,
    state0: Sequence[float],
    t_end: float,
    dt: float,
) -> NCTrajectory:
    """Integrate the modified Hamilton equations with fixed-step RK4."""
    if len(state0) != 4:
        raise ValueError("state must be (q1, q2, p1, p2)")

    def rhs(_t: float, z: np.ndarray) -> np.ndarray:
        return hamilton_rhs(space, ham, z)

    times, states = integrate_flow(rhs, state0, t_end, dt)
    energies = np.array([hamiltonian_value(space, ham, z) for z in states])
    return NCTrajectory(
        times=times,
        states=states,
        energies=energies,
        invariant_drift=energies - energies[0],
    )


# Bracket matrix of commutative coordinates (q1, q2, p1, p2): {p_i, q^j} = +delta.
CANONICAL_BRACKET_MATRIX = rarray(
    [
        [0, 0, -1, 0],
        [0, 0, 0, -1],
        [1, 0, 0, 0],
        [0, 1, 0, 0],
    ]
)


def bracket_pushforward(jacobian, theta=None) -> np.ndarray:
    """Exact bracket matrix of mapped coordinates z' = J z."""
    J = jacobian if isinstance(jacobian, np.ndarray) else rarray(jacobian)
    base = CANONICAL_BRACKET_MATRIX if theta is None else theta
    return J @ base @ J.T


@dataclass(frozen=True)
class MinimalCouplingResult:
    """A coordinate map on phase space and the exact brackets it induces."""

    state: tuple[Fraction, Fraction, Fraction, Fraction]
    jacobian: np.ndarray
    bracket_matrix: np.ndarray

    @property
    def position_bracket(self) -> Fraction:
        return self.bracket_matrix[0, 1]

    @property
    def momentum_bracket(self) -> Fraction:
        return self.bracket_matrix[2, 3]

    @property
    def cross_bracket(self) -> Fraction:
        return self.bracket_matrix[2, 0]


def minimal_coupling_galilei(state, m, omega0) -> MinimalCouplingResult:
    """Position shift x = q + eps.p/(2 m omega0) sourcing {x1, x2}.

    Starting from commutative (q, p), the shifted positions obey
    {x1, x2} = -1/(m omega0) while {p_i, x^j} = +delta stays canonical:
    the position-noncommutative phase space realized by a coordinate map.
    """
    m, omega0 = rat(m), rat(omega0)
    if m == 0 or omega0 == 0:
        raise ValueError("minimal coupling requires nonzero m and omega0")
    q1, q2, p1, p2 = (rat(v) for v in state)
    s = 1 / (2 * m * omega0)
    x1 = q1 - s * p2
    x2 = q2 + s * p1
    z = Fraction(0)
    one = Fraction(1)
    jac = rarray(
        [
            [one, z, z, -s],
            [z, one, s, z],
            [z, z, one, z],
            [z, z, z, one],
        ]
    )
    return MinimalCouplingResult(
        state=(x1, x2, p1, p2),
        jacobian=jac,
        bracket_matrix=bracket_pushforward(jac),
    )


def minimal_coupling_paragalilei(state, m, omega, omega0) -> MinimalCouplingResult:
    """Momentum shift pi = p + (m omega^2/2 omega0) eps.q sourcing {pi1, pi2}.

    The shifted momenta obey {pi1, pi2} = -m omega^2/omega0 while
    {pi_i, x^j} = +delta stays canonical: the momentum-noncommutative
    phase space realized by a coordinate map.
    """
    m, omega, omega0 = rat(m), rat(omega), rat(omega0)
    if m == 0 or omega0 == 0:
        raise ValueError("minimal coupling requires nonzero m and omega0")
    q1, q2, p1, p2 = (rat(v) for v in state)
    b = m * omega**2 / (2 * omega0)
    pi1 = p1 + b * q2
    pi2 = p2 - b * q1
    z = Fraction(0)
    one = Fraction(1)
    jac = rarray(
        [
            [one, z, z, z],
            [z, one, z, z],
            [z, b, one, z],
            [-b, z, z, one],
        ]
    )
    return MinimalCouplingResult(
        state=(q1, q2, pi1, pi2),
        jacobian=jac,
        bracket_matrix=bracket_pushforward(jac),
    )
