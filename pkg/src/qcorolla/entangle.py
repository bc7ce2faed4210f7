"""Physical layer: joint states whose entanglement entropy encodes predicates.

A triple's registered weight p in [0, 1] bits is realized as a two-term
Schmidt state ``√λ |iL⟩⊗|iR⟩ + √(1−λ) |jL⟩⊗|jR⟩`` with λ in [0, 0.5]
solving H2(λ) = p, where H2 is the binary entropy in bits. Two Schmidt
terms are the minimal family covering every entropy in [0, 1], matching
the Bell-state ceiling of one bit.

Also here: the four Bell states, the configurable triple-metapattern to
Bell-state assignment, seeded projective measurement sampling, and the
tessellated rounding of noisy vectors onto a vocabulary basis.

All randomness flows through ``numpy.random.default_rng(seed)`` (PCG64),
seeded per call; there is no global generator state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, Mapping, Sequence, Tuple

import numpy as np

from .corolla import CorollaGraph
from .errors import (
    DegenerateBasisError,
    DimensionMismatchError,
    UnknownPatternError,
    WeightOutOfRangeError,
    ZeroVectorError,
)
from .qla import StateVector, entanglement_entropy, fidelity
from .qusym import Vocabulary

ENTROPY_TOL = 1e-6

BELL_LABELS = ("phi+", "phi-", "psi+", "psi-")

# Placeholder metapattern tags; the tag -> Bell assignment is configuration
# data, with this declaration order fixing the default.
DEFAULT_PATTERN_TAGS = ("pattern-1", "pattern-2", "pattern-3", "pattern-4")

BasisChoice = Tuple[int, int, int, int]


@dataclass(frozen=True)
class BellState:
    """One of the four maximally entangled two-qubit states."""

    label: str
    state: StateVector


@dataclass(frozen=True)
class JointState:
    """Bipartite state carrying a triple's target entanglement entropy (bits)."""

    state: StateVector
    dims: Tuple[int, int]
    left_vocabulary: Vocabulary
    right_vocabulary: Vocabulary
    target_entropy: float
    triple_id: str | None = None
    basis: BasisChoice | None = None

    def __post_init__(self):
        if not 0.0 <= self.target_entropy <= 1.0:
            raise WeightOutOfRangeError(
                f"target entropy must lie in [0, 1] bits, got {self.target_entropy!r}"
            )
        measured = entanglement_entropy(self.state, self.dims, base=2.0)
        if abs(measured - self.target_entropy) > ENTROPY_TOL:
            raise ValueError(
                f"state entropy {measured!r} misses target {self.target_entropy!r}"
            )


@dataclass(frozen=True)
class MeasurementRecord:
    """Counts of projective-measurement outcomes from ``shots`` seeded draws."""

    shots: int
    counts: Mapping[int, int]
    seed: int

    def __post_init__(self):
        if sum(self.counts.values()) != self.shots:
            raise ValueError("counts must sum to shots")

    def as_dict(self) -> Dict:
        """JSON-ready form with the exact key set {seed, shots, counts}."""
        return {
            "seed": self.seed,
            "shots": self.shots,
            "counts": {str(k): v for k, v in sorted(self.counts.items())},
        }


def binary_entropy(lam: float) -> float:
    """H2(λ) = −λ log2 λ − (1−λ) log2 (1−λ), with H2(0) = H2(1) = 0."""
    if lam <= 0.0 or lam >= 1.0:
        return 0.0
    return -lam * math.log2(lam) - (1.0 - lam) * math.log2(1.0 - lam)


def invert_binary_entropy(p: float) -> float:
    """The λ in [0, 0.5] with H2(λ) = p, by bisection to 1e-10 in λ.

    H2 is strictly increasing on [0, 0.5], so bisection is branch-safe;
    60 iterations shrink the interval below the tolerance.
    """
    if not 0.0 <= p <= 1.0:
        raise WeightOutOfRangeError(f"entropy target must lie in [0, 1], got {p!r}")
    if p == 0.0:
        return 0.0
    if p == 1.0:
        return 0.5
    lo, hi = 0.0, 0.5
    for _ in range(60):
        mid = (lo + hi) / 2.0
        if binary_entropy(mid) < p:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-10:
            break
    return (lo + hi) / 2.0


def _default_basis(graph: CorollaGraph, triple_id: str) -> BasisChoice:
    s, _, o = graph.triple(triple_id)
    voc = graph.node_vocabulary
    if voc.d < 2:
        raise DegenerateBasisError("node vocabulary needs d >= 2 for a two-term state")
    i, j = voc.index(s), voc.index(o)
    if i == j:
        i, j = 0, 1  # self-referential triple: fall back to the first two basis states
    return (i, j, i, j)


def synthesize_joint_state(
    graph: CorollaGraph,
    triple_id: str,
    basis_choice: BasisChoice | None = None,
) -> JointState:
    """Prepare the bipartite state realizing a triple's registered weight.

    The state is ``√λ |iL⟩⊗|iR⟩ + √(1−λ) |jL⟩⊗|jR⟩`` with H2(λ) equal to
    the converse pair's total weight. By default the support indices are
    the subject and object symbols' basis indices on both sides.
    """
    s, p, _ = graph.triple(triple_id)
    target = graph.registry.total_weight(p)
    if not 0.0 <= target <= 1.0:
        raise WeightOutOfRangeError(f"registered weight {target!r} outside [0, 1]")

    voc = graph.node_vocabulary
    il, jl, ir, jr = basis_choice if basis_choice is not None else _default_basis(graph, triple_id)
    if il == jl or ir == jr:
        raise DegenerateBasisError(f"basis indices must differ per side, got {(il, jl, ir, jr)}")
    for index in (il, jl, ir, jr):
        if not 0 <= index < voc.d:
            raise DimensionMismatchError(f"basis index {index} out of range for d={voc.d}")

    lam = invert_binary_entropy(target)
    amps = np.zeros(voc.d * voc.d, dtype=complex)
    amps[il * voc.d + ir] = math.sqrt(lam)
    amps[jl * voc.d + jr] = math.sqrt(1.0 - lam)
    return JointState(
        state=StateVector(amps),
        dims=(voc.d, voc.d),
        left_vocabulary=voc,
        right_vocabulary=voc,
        target_entropy=target,
        triple_id=triple_id,
        basis=(il, jl, ir, jr),
    )


def measure_entanglement(joint: JointState) -> float:
    """Entanglement entropy of the joint state in bits."""
    return entanglement_entropy(joint.state, joint.dims, base=2.0)


def bell_states() -> Tuple[BellState, BellState, BellState, BellState]:
    """The four Bell states Φ± = (|00⟩ ± |11⟩)/√2, Ψ± = (|01⟩ ± |10⟩)/√2."""
    r = 1.0 / math.sqrt(2.0)
    return (
        BellState("phi+", StateVector([r, 0, 0, r])),
        BellState("phi-", StateVector([r, 0, 0, -r])),
        BellState("psi+", StateVector([0, r, r, 0])),
        BellState("psi-", StateVector([0, r, -r, 0])),
    )


def default_pattern_config() -> Dict[str, str]:
    """Default tag -> Bell label assignment, in declaration order."""
    return dict(zip(DEFAULT_PATTERN_TAGS, BELL_LABELS))


def map_triple_pattern(pattern: str, config: Mapping[str, str] | None = None) -> BellState:
    """Bell state assigned to a triple metapattern tag by the configuration."""
    mapping = default_pattern_config() if config is None else config
    if pattern not in mapping:
        raise UnknownPatternError(f"metapattern {pattern!r} not configured")
    label = mapping[pattern]
    by_label = {b.label: b for b in bell_states()}
    if label not in by_label:
        raise UnknownPatternError(f"configured label {label!r} is not a Bell label")
    return by_label[label]


def measure(state: StateVector, shots: int, seed: int) -> MeasurementRecord:
    """Sample ``shots`` independent outcomes with probabilities |a_i|².

    Identical seeds give identical records. Only outcomes that occurred
    appear in ``counts``.
    """
    if shots < 1:
        raise ValueError(f"shots must be positive, got {shots}")
    probs = state.probabilities()
    probs = probs / probs.sum()
    rng = np.random.default_rng(seed)
    draws = rng.multinomial(shots, probs)
    counts = {int(i): int(c) for i, c in enumerate(draws) if c > 0}
    return MeasurementRecord(shots=shots, counts=counts, seed=seed)


def tessellate_round(
    noisy: Sequence[complex] | np.ndarray, voc: Vocabulary
) -> Tuple[str, float]:
    """Round a noisy (possibly unnormalized) vector onto the vocabulary basis.

    Returns the symbol whose basis state maximizes the fidelity |⟨i|ψ⟩|²
    together with that fidelity; ties break to the lowest index.
    """
    amps = np.asarray(noisy, dtype=complex)
    if amps.ndim != 1 or amps.size != voc.d:
        raise DimensionMismatchError(f"vector length {amps.size} != vocabulary size {voc.d}")
    norm = float(np.linalg.norm(amps))
    if norm == 0.0:
        raise ZeroVectorError("cannot round the zero vector")
    overlaps = np.abs(amps / norm) ** 2
    index = int(np.argmax(overlaps))  # argmax returns the first maximum
    return voc.symbol(index), float(overlaps[index])


def bell_fidelity(a: BellState, b: BellState) -> float:
    """Squared overlap between two Bell states (0 for distinct labels)."""
    return fidelity(a.state, b.state)
