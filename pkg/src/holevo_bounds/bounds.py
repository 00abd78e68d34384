"""Upper bounds on the Holevo quantity, and the entropic inequality behind
them, evaluated into slack-carrying reports.

Four bounds are provided, all proven upper bounds on chi:

  aux_bound       eps_av (chi(mu+) - chi(mu-)) + hbar  (tight: equality for
                  orthogonal equiprobable pure ensembles)
  shannon_bound   eps_av H({p_i eps_i / eps_av}) + hbar
  count_bound     eps_av ln(m) + hbar                  (m ensemble states)
  diameter_bound  eps_av C H({p_i eps_i / eps_av}) + hbar - eps_av D

where hbar is the mean binary entropy of the member distances, C is the
trace-distance diameter of the normalized positive parts, and D is a
Pinsker-style spread of the negative parts around their barycenter.  Each
bound also has a variant with hbar replaced by h(eps_av) (never smaller, by
concavity).

Reports carry measured slacks rather than enforcing the inequalities, so a
violating instance can still be inspected and serialized by the verification
suites.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .ensemble import (
    EPS_ZERO_TOL,
    AuxiliaryDecomposition,
    DegenerateEnsembleError,
    DiscreteEnsemble,
    build_auxiliary,
    distance_weights,
    holevo_quantity,
    member_epsilons,
)
from .entropy import binary_entropy, shannon_entropy, von_neumann_entropy
from .linalg import DensityOperator, jordan_parts, trace_distance, trace_norm

SLACK_KEYS = (
    "aux_bound",
    "aux_bound_hvariant",
    "shannon_bound",
    "shannon_bound_hvariant",
    "count_bound",
    "diameter_bound",
    "pinsker_lemma",
    "audenaert_lemma",
)


@dataclass(frozen=True)
class FeiReport:
    """Both sides of the entropic inequality
    S(rho) + eps S(tau_minus) <= S(sigma) + eps S(tau_plus) + h(eps)
    for a pair of states, with slack = rhs - lhs."""

    eps: float
    lhs: float
    rhs: float
    slack: float


def fei_check(rho: DensityOperator, sigma: DensityOperator) -> FeiReport:
    """Evaluate the entropic inequality for (rho, sigma).

    eps is the trace distance and tau_plus/tau_minus the unit-trace positive
    and negative parts of rho - sigma.  The slack is nonnegative for all pairs
    of states, up to floating point.  When eps is numerically zero both sides
    collapse to S(rho) and the slack is exactly 0.
    """
    if rho.dim != sigma.dim:
        raise ValueError(f"dimension mismatch: {rho.dim} vs {sigma.dim}")
    eps = min(trace_distance(rho, sigma), 1.0)
    if eps <= EPS_ZERO_TOL:
        s = von_neumann_entropy(rho)
        return FeiReport(eps=eps, lhs=s, rhs=s, slack=0.0)
    plus, minus = jordan_parts(rho - sigma)
    tr_plus, tr_minus = plus.trace(), minus.trace()
    if min(tr_plus, tr_minus) <= EPS_ZERO_TOL:
        s = von_neumann_entropy(rho)
        return FeiReport(eps=eps, lhs=s, rhs=s, slack=0.0)
    tau_plus = DensityOperator(plus.mat / tr_plus)
    tau_minus = DensityOperator(minus.mat / tr_minus)
    lhs = von_neumann_entropy(rho) + eps * von_neumann_entropy(tau_minus)
    rhs = (
        von_neumann_entropy(sigma)
        + eps * von_neumann_entropy(tau_plus)
        + binary_entropy(eps)
    )
    return FeiReport(eps=eps, lhs=lhs, rhs=rhs, slack=rhs - lhs)


def _hbar(probs: np.ndarray, eps: np.ndarray) -> float:
    return float(sum(p * binary_entropy(e) for p, e in zip(probs, eps)))


def _pair(lead: float, hbar: float, h_av: float) -> tuple[float, float]:
    return lead + hbar, lead + h_av


def aux_bound(mu: DiscreteEnsemble) -> tuple[float, float]:
    """Bound chi <= eps_av (chi(mu+) - chi(mu-)) + hbar via the auxiliary
    ensembles; returns (that value, the h(eps_av) variant).

    Both components are (0, 0) for a degenerate ensemble (eps_av = 0), where
    chi is 0 as well.
    """
    eps, eps_av = member_epsilons(mu)
    if eps_av <= EPS_ZERO_TOL:
        return 0.0, 0.0
    try:
        aux = build_auxiliary(mu)
    except DegenerateEnsembleError:
        return 0.0, 0.0
    core = eps_av * (holevo_quantity(aux.mu_plus) - holevo_quantity(aux.mu_minus))
    return _pair(core, _hbar(mu.probs, eps), binary_entropy(eps_av))


def shannon_bound(mu: DiscreteEnsemble) -> tuple[float, float]:
    """Bound chi <= eps_av H({p_i eps_i / eps_av}) + hbar; returns (that
    value, the h(eps_av) variant).  Needs no Jordan decompositions."""
    eps, eps_av = member_epsilons(mu)
    if eps_av <= EPS_ZERO_TOL:
        return 0.0, 0.0
    _, weights = distance_weights(mu.probs, eps)
    lead = eps_av * shannon_entropy(weights)
    return _pair(lead, _hbar(mu.probs, eps), binary_entropy(eps_av))


def count_bound(mu: DiscreteEnsemble) -> tuple[float, float]:
    """Bound chi <= eps_av ln(m) + hbar for an m-state ensemble; returns
    (that value, the h(eps_av) variant)."""
    eps, eps_av = member_epsilons(mu)
    lead = eps_av * math.log(mu.size)
    return _pair(lead, _hbar(mu.probs, eps), binary_entropy(eps_av))


def plus_diameter(aux: AuxiliaryDecomposition) -> float:
    """Largest pairwise trace distance among the positive-part states; in
    [0, 1].  Exhaustive pairwise scan, stopping early at the metric ceiling."""
    best = 0.0
    taus = aux.tau_plus
    for i in range(len(taus)):
        for j in range(i + 1, len(taus)):
            best = max(best, trace_distance(taus[i], taus[j]))
            if best >= 1.0 - 1e-12:
                return min(best, 1.0)
    return min(best, 1.0)


def pinsker_term(aux: AuxiliaryDecomposition, *, reweighted: bool = False) -> float:
    """Half the weighted mean squared trace-norm spread of the negative parts
    around their barycenter: (1/2) sum_i w_i ||tau_i^minus - omega||_1^2.

    By default w_i are the original member probabilities (dropped members
    contribute zero, matching the eps_i -> 0 limit of their weight); with
    reweighted=True the mu_minus weights p_i eps_i / eps_av are used instead.
    The reweighted form is the termwise Pinsker lower bound on chi(mu_minus);
    the two coincide whenever all member distances are equal.
    """
    if reweighted:
        w = aux.weights
    else:
        w = aux.probs[list(aux.retained)]
    total = 0.0
    for wi, tau in zip(w, aux.tau_minus):
        gap = trace_norm(tau - aux.omega)
        total += float(wi) * gap * gap
    return 0.5 * total


def diameter_bound(mu: DiscreteEnsemble) -> float:
    """Bound chi <= eps_av C H({p_i eps_i / eps_av}) + hbar - eps_av D, the
    refinement of shannon_bound by the positive-part diameter C and the
    negative-part spread D.  0 for a degenerate ensemble."""
    eps, eps_av = member_epsilons(mu)
    if eps_av <= EPS_ZERO_TOL:
        return 0.0
    try:
        aux = build_auxiliary(mu)
    except DegenerateEnsembleError:
        return 0.0
    lead = eps_av * plus_diameter(aux) * shannon_entropy(aux.weights)
    return lead + _hbar(mu.probs, eps) - eps_av * pinsker_term(aux)


@dataclass(frozen=True, eq=False)
class BoundReport:
    """chi, every bound, the intermediate quantities, and per-inequality
    slacks (bound minus chi, plus the two internal lemma slacks).

    hbar is the mean binary entropy of the member distances and h_of_eps_av
    its concavity ceiling h(eps_av); chi_plus/chi_minus are the Holevo
    quantities of the two auxiliary ensembles.
    """

    chi: float
    chi_plus: float
    chi_minus: float
    eps_av: float
    hbar: float
    h_of_eps_av: float
    aux_bound: float
    aux_bound_hvariant: float
    shannon_bound: float
    shannon_bound_hvariant: float
    count_bound: float
    diameter_bound: float
    plus_diameter: float
    pinsker_term: float
    pinsker_term_reweighted: float
    average_match_residual: float
    slacks: dict[str, float]


def full_report(mu: DiscreteEnsemble) -> BoundReport:
    """Evaluate chi and every bound on `mu` once.

    A degenerate ensemble (all states equal the average) yields an all-zeros
    report.  Slack entries "pinsker_lemma" (chi(mu-) - D) and
    "audenaert_lemma" (C H(weights) - chi(mu+)) expose the two internal
    inequalities behind diameter_bound.
    """
    chi = holevo_quantity(mu)
    eps, eps_av = member_epsilons(mu)
    hbar = _hbar(mu.probs, eps)
    h_av = binary_entropy(min(eps_av, 1.0))
    try:
        aux = build_auxiliary(mu)
    except DegenerateEnsembleError:
        return BoundReport(
            chi=chi,
            chi_plus=0.0,
            chi_minus=0.0,
            eps_av=eps_av,
            hbar=hbar,
            h_of_eps_av=h_av,
            aux_bound=0.0,
            aux_bound_hvariant=0.0,
            shannon_bound=0.0,
            shannon_bound_hvariant=0.0,
            count_bound=0.0,
            diameter_bound=0.0,
            plus_diameter=0.0,
            pinsker_term=0.0,
            pinsker_term_reweighted=0.0,
            average_match_residual=0.0,
            slacks={key: 0.0 for key in SLACK_KEYS},
        )
    chi_plus = holevo_quantity(aux.mu_plus)
    chi_minus = holevo_quantity(aux.mu_minus)
    weight_entropy = shannon_entropy(aux.weights)
    diameter = plus_diameter(aux)
    pinsker = pinsker_term(aux)
    pinsker_rw = pinsker_term(aux, reweighted=True)
    core = eps_av * (chi_plus - chi_minus)
    aux1, aux2 = _pair(core, hbar, h_av)
    sh1, sh2 = _pair(eps_av * weight_entropy, hbar, h_av)
    cnt1, _ = _pair(eps_av * math.log(mu.size), hbar, h_av)
    dia = eps_av * diameter * weight_entropy + hbar - eps_av * pinsker
    slacks = {
        "aux_bound": aux1 - chi,
        "aux_bound_hvariant": aux2 - chi,
        "shannon_bound": sh1 - chi,
        "shannon_bound_hvariant": sh2 - chi,
        "count_bound": cnt1 - chi,
        "diameter_bound": dia - chi,
        "pinsker_lemma": chi_minus - pinsker,
        "audenaert_lemma": diameter * weight_entropy - chi_plus,
    }
    return BoundReport(
        chi=chi,
        chi_plus=chi_plus,
        chi_minus=chi_minus,
        eps_av=eps_av,
        hbar=hbar,
        h_of_eps_av=h_av,
        aux_bound=aux1,
        aux_bound_hvariant=aux2,
        shannon_bound=sh1,
        shannon_bound_hvariant=sh2,
        count_bound=cnt1,
        diameter_bound=dia,
        plus_diameter=diameter,
        pinsker_term=pinsker,
        pinsker_term_reweighted=pinsker_rw,
        average_match_residual=aux.average_match_residual,
        slacks=slacks,
    )
