"""Shared generators for the test suites."""

from __future__ import annotations

import cmath
import math

import numpy as np

from holevo_bounds import (
    ContinuousFamilySpec,
    DensityOperator,
    DiscreteEnsemble,
    HermitianOperator,
    random_mixed_state,
)


def random_hermitian(dim: int, rng: np.random.Generator, scale: float = 1.0) -> HermitianOperator:
    a = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return HermitianOperator(scale * (a + a.conj().T) / 2.0)


def cyclic_orbit_ensemble(dim: int, seed) -> DiscreteEnsemble:
    """Equiprobable orbit of a random state under the cyclic shift.

    The average is shift-invariant, so every member sits at the same trace
    distance from it: an ensemble with equal member distances by symmetry.
    """
    rng = np.random.default_rng(seed)
    rank = int(rng.integers(1, dim + 1))
    base = random_mixed_state(dim, rank, rng)
    shift = np.roll(np.eye(dim, dtype=complex), 1, axis=0)
    states = []
    mat = base.mat
    for _ in range(dim):
        states.append(DensityOperator(mat))
        mat = shift @ mat @ shift.conj().T
    return DiscreteEnsemble(np.full(dim, 1.0 / dim), tuple(states))


def great_circle_spec(n_points: int) -> ContinuousFamilySpec:
    """Uniform quadrature over the equator of the qubit Bloch sphere."""
    angles = tuple(2.0 * math.pi * k / n_points for k in range(n_points))

    def state_at(theta):
        amp = 1.0 / math.sqrt(2.0)
        return DensityOperator.from_pure([amp, amp * cmath.exp(1j * theta)])

    return ContinuousFamilySpec(
        points=angles, weights=np.full(n_points, 1.0 / n_points), state_at=state_at
    )
