"""Single-atom stimulated-emission amplifier channel.

An incoming photon polarized at angle theta to the transition dipole
scatters into a two-photon state correlated with the atom's final state.
Two variants: Distinguishable atom final states (branches are incoherent,
tagged by the atom) and Identical (a single coherent two-photon state).

All branch weights are per unit solid angle with the rate constant
lambda^2 dOmega factored out; lambda_squared carries the physical units.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .fock import E11, E20, apply_rotation, two_photon_rotation


class Variant(enum.Enum):
    DISTINGUISHABLE = "distinguishable"
    IDENTICAL = "identical"


class AtomTag(enum.Enum):
    G_THETA = "g_theta"
    G_THETA_PERP = "g_theta_perp"


@dataclass(frozen=True)
class EmissionConstants:
    """Physical constants for the emission rate; defaults are natural units."""

    omega: float = 1.0
    mu: float = 1.0
    hbar: float = 1.0
    c: float = 1.0

    def __post_init__(self):
        for name in ("omega", "mu", "hbar", "c"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be strictly positive")


def lambda_squared(k: EmissionConstants = EmissionConstants()) -> float:
    """Emission rate constant omega^3 mu^2 / (8 pi^2 hbar c^3)."""
    return k.omega**3 * k.mu**2 / (8.0 * np.pi**2 * k.hbar * k.c**3)


@dataclass(frozen=True)
class AmplifierBranch:
    photon_state: np.ndarray  # two-photon amplitudes in the dipole frame
    atom: AtomTag
    amplitude: complex  # |amplitude|^2 is the branch weight per lambda^2 dOmega


@dataclass(frozen=True)
class ScatteredState:
    """Amplifier output for one input angle.

    Distinguishable: branches is the incoherent pair (atom tags orthogonal).
    Identical: coherent is the normalized coherent superposition.
    total_weight is the two-photon weight 1 + cos^2(theta) in units of
    lambda^2 dOmega, identical for both variants.
    """

    variant: Variant
    total_weight: float
    branches: tuple[AmplifierBranch, ...] = ()
    coherent: np.ndarray | None = None


def branch_weights(theta: float) -> tuple[float, float]:
    """Stimulated branch weights (2 cos^2, sin^2) for input |theta>.

    Units of lambda^2 dOmega; substituting theta -> theta + pi/2 gives the
    weights for the orthogonal input.
    """
    c, s = np.cos(theta), np.sin(theta)
    return (2.0 * c * c, s * s)


def scatter(theta: float, variant: Variant) -> ScatteredState:
    """Post-scattering two-photon state for input |theta>.

    Branch amplitudes follow the real signed convention sqrt(2) cos(theta)
    for the both-parallel branch and sin(theta) for the mixed branch; this
    is the unique real choice reproducing the coherent-variant statistics.
    """
    c, s = np.cos(theta), np.sin(theta)
    u = two_photon_rotation(theta)
    state20 = apply_rotation(u, E20)
    state11 = apply_rotation(u, E11)
    amp20 = np.sqrt(2.0) * c
    amp11 = s
    total = 1.0 + c * c
    if variant is Variant.DISTINGUISHABLE:
        branches = (
            AmplifierBranch(state20, AtomTag.G_THETA, amp20),
            AmplifierBranch(state11, AtomTag.G_THETA_PERP, amp11),
        )
        return ScatteredState(variant, total, branches=branches)
    coherent = (amp20 * state20 + amp11 * state11) / np.sqrt(total)
    return ScatteredState(variant, total, coherent=coherent)
