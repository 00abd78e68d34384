"""Ensembles of quantum states and their auxiliary decompositions.

An ensemble pairs a probability vector with density operators of a common
dimension.  From it we derive the average state, the Holevo quantity, the
per-member trace distances to the average, and the two auxiliary ensembles
built from the normalized positive and negative parts of rho_i - average.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .entropy import (
    as_probability_vector,
    binary_entropy,
    entropy_difference,
    von_neumann_entropy,
)
from .linalg import DensityOperator, jordan_parts, trace_distance, trace_norm

# Member distances at or below this count as exactly zero.
EPS_ZERO_TOL = 1e-12
# Expected trace-norm gap between the averages of the two auxiliary
# ensembles (an identity in exact arithmetic); asserted by the random-suite
# tests, stored as a diagnostic on the decomposition.
AVERAGE_MATCH_TOL = 1e-9


class DegenerateEnsembleError(ValueError):
    """Every state equals the average: the auxiliary ensembles are undefined
    (and every bound is trivially 0, which equals the Holevo quantity)."""


@dataclass(frozen=True, eq=False)
class DiscreteEnsemble:
    """A probability vector over same-dimension density operators."""

    probs: np.ndarray
    states: tuple[DensityOperator, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        probs = as_probability_vector(self.probs)
        states = tuple(self.states)
        if not states:
            raise ValueError("ensemble needs at least one state")
        if len(states) != probs.size:
            raise ValueError(f"{probs.size} probabilities for {len(states)} states")
        for k, state in enumerate(states):
            if not isinstance(state, DensityOperator):
                raise TypeError(f"member {k} is not a DensityOperator")
        dim = states[0].dim
        for k, state in enumerate(states):
            if state.dim != dim:
                raise ValueError(f"member {k} has dim {state.dim}, expected {dim}")
        if self.labels is not None:
            labels = tuple(str(label) for label in self.labels)
            if len(labels) != len(states):
                raise ValueError(
                    f"{len(labels)} labels for {len(states)} states"
                )
            object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "probs", probs)
        object.__setattr__(self, "states", states)

    @property
    def size(self) -> int:
        return len(self.states)

    @property
    def dim(self) -> int:
        return self.states[0].dim


def average_state(mu: DiscreteEnsemble) -> DensityOperator:
    """The probability-weighted mixture sum(p_i rho_i)."""
    acc = np.zeros((mu.dim, mu.dim), dtype=complex)
    for p, state in zip(mu.probs, mu.states):
        acc += p * state.mat
    return DensityOperator(acc)


def holevo_quantity(mu: DiscreteEnsemble) -> float:
    """The Holevo quantity S(average) - sum(p_i S(rho_i)), in nats.

    Always finite at finite dimension; nonnegative, and bounded by both the
    Shannon entropy of the probabilities and ln(dim).
    """
    avg = von_neumann_entropy(average_state(mu))
    members = sum(p * von_neumann_entropy(s) for p, s in zip(mu.probs, mu.states))
    val = entropy_difference(avg, float(members))
    return val if val > 0.0 else 0.0


def member_epsilons(mu: DiscreteEnsemble) -> tuple[np.ndarray, float]:
    """Trace distances of the members to the average, and their mean.

    Returns (eps, eps_av) with eps_i = (1/2)||rho_i - average||_1 clipped to
    [0, 1] and eps_av = sum(p_i eps_i).
    """
    avg = average_state(mu)
    eps = np.clip([trace_distance(s, avg) for s in mu.states], 0.0, 1.0)
    eps.setflags(write=False)
    return eps, float(mu.probs @ eps)


def mean_binary_entropy(mu: DiscreteEnsemble) -> float:
    """Mean binary entropy sum(p_i h(eps_i)) of the member distances.

    By concavity of h this never exceeds h(eps_av).
    """
    eps, _ = member_epsilons(mu)
    return float(sum(p * binary_entropy(e) for p, e in zip(mu.probs, eps)))


def distance_weights(probs: np.ndarray, eps: np.ndarray) -> tuple[tuple[int, ...], np.ndarray]:
    """Weights p_i eps_i / eps_av of the auxiliary ensembles.

    Members with eps_i <= EPS_ZERO_TOL carry zero weight and are dropped;
    returns (retained original indices, weights renormalized to exact sum 1).
    """
    keep = np.flatnonzero(eps > EPS_ZERO_TOL)
    raw = probs[keep] * eps[keep]
    return tuple(int(i) for i in keep), raw / raw.sum()


@dataclass(frozen=True, eq=False)
class AuxiliaryDecomposition:
    """Normalized Jordan parts of every rho_i - average, as two ensembles.

    tau_plus/tau_minus/weights cover only the retained members (those with
    eps_i > EPS_ZERO_TOL); `retained` maps their positions back to original
    member indices, and `probs`/`eps` keep the full original vectors.  The
    averages of mu_plus and mu_minus coincide in exact arithmetic; `omega` is
    the computed average of mu_minus and `average_match_residual` the
    trace-norm gap to the average of mu_plus.
    """

    probs: np.ndarray
    eps: np.ndarray
    eps_av: float
    retained: tuple[int, ...]
    weights: np.ndarray
    tau_plus: tuple[DensityOperator, ...]
    tau_minus: tuple[DensityOperator, ...]
    mu_plus: DiscreteEnsemble
    mu_minus: DiscreteEnsemble
    omega: DensityOperator
    average_match_residual: float


def build_auxiliary(mu: DiscreteEnsemble) -> AuxiliaryDecomposition:
    """Construct the auxiliary ensembles {p_i eps_i / eps_av, tau_i^(+/-)}.

    tau_i^+ and tau_i^- are the positive and negative parts of
    rho_i - average, each normalized to unit trace (the trace of either part
    equals eps_i in exact arithmetic).  Raises DegenerateEnsembleError when
    eps_av <= EPS_ZERO_TOL.
    """
    avg = average_state(mu)
    eps, eps_av = member_epsilons(mu)
    if eps_av <= EPS_ZERO_TOL:
        raise DegenerateEnsembleError(
            f"mean member distance {eps_av:.3e} is below {EPS_ZERO_TOL:.0e}; "
            "all states equal the average"
        )
    retained, weights = distance_weights(mu.probs, eps)
    tau_plus: list[DensityOperator] = []
    tau_minus: list[DensityOperator] = []
    usable: list[int] = []
    for i in retained:
        plus, minus = jordan_parts(mu.states[i] - avg)
        tr_plus, tr_minus = plus.trace(), minus.trace()
        if min(tr_plus, tr_minus) <= EPS_ZERO_TOL:
            # Difference sits entirely inside the eigenvalue dead zone:
            # numerically indistinguishable from a zero-distance member.
            continue
        usable.append(i)
        tau_plus.append(DensityOperator(plus.mat / tr_plus))
        tau_minus.append(DensityOperator(minus.mat / tr_minus))
    if len(usable) != len(retained):
        if not usable:
            raise DegenerateEnsembleError(
                "every member difference lies inside the eigenvalue dead zone"
            )
        retained, weights = distance_weights(
            mu.probs, np.where(np.isin(np.arange(mu.size), usable), eps, 0.0)
        )
    mu_plus = DiscreteEnsemble(weights, tuple(tau_plus))
    mu_minus = DiscreteEnsemble(weights, tuple(tau_minus))
    omega = average_state(mu_minus)
    residual = trace_norm(average_state(mu_plus) - omega)
    return AuxiliaryDecomposition(
        probs=mu.probs,
        eps=eps,
        eps_av=eps_av,
        retained=retained,
        weights=weights,
        tau_plus=tuple(tau_plus),
        tau_minus=tuple(tau_minus),
        mu_plus=mu_plus,
        mu_minus=mu_minus,
        omega=omega,
        average_match_residual=residual,
    )
