"""Mixture-averaged two-photon outcome statistics.

The input ensemble is the 50/50 mixture of |theta> and |theta + pi/2>.
Outcome probabilities over the dipole-frame basis (|2,0>, |1,1>, |0,2>),
conditioned on a two-photon event, come three ways: closed forms, a
first-principles projection pipeline (the oracle, no closed forms), and
seeded Monte Carlo.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .amplifier import ScatteredState, Variant, scatter
from .fock import ATOL_EXACT, projection_triple


@dataclass(frozen=True)
class ProbabilityTriple:
    """Probabilities of (|2,0>, |1,1>, |0,2>) given a two-photon outcome."""

    p20: float
    p11: float
    p02: float

    def __post_init__(self):
        total = self.p20 + self.p11 + self.p02
        if not (abs(total - 1.0) < 1e-9 and min(self.p20, self.p11, self.p02) > -ATOL_EXACT):
            raise ValueError(f"not a probability triple: {self}")

    def as_array(self) -> np.ndarray:
        return np.array([self.p20, self.p11, self.p02])


@dataclass(frozen=True)
class CountTriple:
    n20: int
    n11: int
    n02: int

    @property
    def total(self) -> int:
        return self.n20 + self.n11 + self.n02

    def estimates(self) -> ProbabilityTriple:
        if self.total <= 0:
            raise ValueError("no counts to estimate from")
        return ProbabilityTriple(self.n20 / self.total, self.n11 / self.total, self.n02 / self.total)


@dataclass(frozen=True)
class MixtureEnsemble:
    """Weighted mixture of input polarization angles."""

    entries: tuple[tuple[float, float], ...]  # (weight, theta)

    def __post_init__(self):
        weights = [w for w, _ in self.entries]
        if any(w <= 0 for w in weights) or abs(sum(weights) - 1.0) > ATOL_EXACT:
            raise ValueError("weights must be positive and sum to 1")

    @classmethod
    def orthogonal_pair(cls, theta: float) -> "MixtureEnsemble":
        return cls(((0.5, theta), (0.5, theta + np.pi / 2.0)))


def differential_sigma_20(theta: float) -> float:
    """Differential rate of the |2,0> outcome, (1 + cos^2 2theta)/2.

    Units of lambda^2 dOmega, averaged over the orthogonal-pair mixture.
    """
    return 0.5 * (1.0 + np.cos(2.0 * theta) ** 2)


def closed_form_probs(theta: float, variant: Variant) -> ProbabilityTriple:
    """Closed-form outcome triple for the orthogonal-pair mixture."""
    c2 = np.cos(2.0 * theta) ** 2
    s2 = np.sin(2.0 * theta) ** 2
    if variant is Variant.DISTINGUISHABLE:
        return ProbabilityTriple((1.0 + c2) / 3.0, 1.0 / 3.0, s2 / 3.0)
    return ProbabilityTriple(2.0 * c2 / 3.0, 1.0 / 3.0, 2.0 * s2 / 3.0)


def _outcome_weights(scattered: ScatteredState) -> np.ndarray:
    """Unnormalized dipole-frame outcome weights of one amplifier output.

    Distinguishable branches add incoherently (the atom tag records which
    branch fired); the identical variant projects the coherent state.
    """
    if scattered.variant is Variant.DISTINGUISHABLE:
        out = np.zeros(3)
        for branch in scattered.branches:
            out += abs(branch.amplitude) ** 2 * projection_triple(branch.photon_state)
        return out
    return scattered.total_weight * projection_triple(scattered.coherent)


def first_principles_probs(
    theta: float,
    variant: Variant,
    ensemble: MixtureEnsemble | None = None,
) -> ProbabilityTriple:
    """Outcome triple from the projection pipeline, no closed forms.

    Scatters every ensemble member, projects onto the dipole-frame basis,
    mixture-averages, and normalizes by the computed total two-photon
    weight (3/2 for the orthogonal pair).
    """
    if ensemble is None:
        ensemble = MixtureEnsemble.orthogonal_pair(theta)
    weights = np.zeros(3)
    total = 0.0
    for w, angle in ensemble.entries:
        scattered = scatter(angle, variant)
        weights += w * _outcome_weights(scattered)
        total += w * scattered.total_weight
    weights /= total
    return ProbabilityTriple(*weights)


def _shot_tables(theta: float, variant: Variant):
    """Precomputed per-input sampling tables for the orthogonal-pair mixture.

    Returns (accept probabilities, branch-0 probabilities, cumulative
    outcome distributions indexed by 2*input + branch).  The identical
    variant has one coherent 'branch' per input.
    """
    accept = np.empty(2)
    p_branch0 = np.ones(2)
    cum = np.empty((4, 3))
    for j, angle in enumerate((theta, theta + np.pi / 2.0)):
        scattered = scatter(angle, variant)
        accept[j] = scattered.total_weight / 2.0
        if variant is Variant.DISTINGUISHABLE:
            w = np.array([abs(b.amplitude) ** 2 for b in scattered.branches])
            p_branch0[j] = w[0] / w.sum()
            for b, branch in enumerate(scattered.branches):
                cum[2 * j + b] = np.cumsum(projection_triple(branch.photon_state))
        else:
            cum[2 * j] = np.cumsum(projection_triple(scattered.coherent))
            cum[2 * j + 1] = cum[2 * j]
    return accept, p_branch0, cum


def monte_carlo_probs(
    theta: float,
    variant: Variant,
    n: int,
    seed,
) -> tuple[CountTriple, ProbabilityTriple]:
    """Sample n i.i.d. two-photon outcomes of the orthogonal-pair mixture.

    Stream discipline: one PCG64 stream from the seed; each candidate shot
    consumes four uniforms in order (input angle, two-photon acceptance,
    branch, outcome), row-major in batches.  The input angle is drawn 1/2
    each and a candidate is kept with probability total_weight/2, which
    conditions on two-photon events; branch and outcome use inverse-CDF
    over the fixed orderings with boundary ties resolved to the lower
    index.  Deterministic for a fixed seed.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = np.random.default_rng(seed)
    accept, p_branch0, cum = _shot_tables(theta, variant)
    counts = np.zeros(3, dtype=np.int64)
    remaining = n
    while remaining > 0:
        k = int(remaining / 0.7) + 16
        u = rng.random((k, 4))
        inp = (u[:, 0] >= 0.5).astype(np.intp)
        kept = u[:, 1] < accept[inp]
        inp = inp[kept]
        if inp.size == 0:
            continue
        branch = (u[kept, 2] > p_branch0[inp]).astype(np.intp)
        row_cum = cum[2 * inp + branch]
        u_out = u[kept, 3]
        outcome = (u_out > row_cum[:, 0]).astype(np.intp) + (u_out > row_cum[:, 1])
        outcome = outcome[:remaining]
        counts += np.bincount(outcome, minlength=3)
        remaining = n - int(counts.sum())
    triple = CountTriple(int(counts[0]), int(counts[1]), int(counts[2]))
    return triple, triple.estimates()


def sweep(theta_min: float, theta_max: float, steps: int, variant: Variant):
    """Uniform angle grid of closed-form triples and differential rates.

    Returns a list of (theta, ProbabilityTriple, sigma20) rows, endpoints
    inclusive, ordered by theta.
    """
    if steps < 2:
        raise ValueError("steps must be >= 2")
    if not theta_min < theta_max:
        raise ValueError("theta_min must be < theta_max")
    rows = []
    for theta in np.linspace(theta_min, theta_max, steps):
        rows.append((float(theta), closed_form_probs(theta, variant), differential_sigma_20(theta)))
    return rows
