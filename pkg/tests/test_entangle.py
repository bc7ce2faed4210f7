"""Joint-state synthesis, Bell states, measurement sampling, tessellation."""

import math

import numpy as np
import pytest

from conftest import build_kinship_graph
from qcorolla.corolla import ConverseRegistry, CorollaGraph
from qcorolla.entangle import (
    BELL_LABELS,
    DEFAULT_PATTERN_TAGS,
    JointState,
    bell_fidelity,
    bell_states,
    binary_entropy,
    default_pattern_config,
    invert_binary_entropy,
    map_triple_pattern,
    measure,
    measure_entanglement,
    synthesize_joint_state,
    tessellate_round,
)
from qcorolla.errors import (
    DegenerateBasisError,
    DimensionMismatchError,
    UnknownPatternError,
    WeightOutOfRangeError,
    ZeroVectorError,
)
from qcorolla.qla import make_state, partial_trace, outer, basis_state
from qcorolla.qusym import vocabulary_from_symbols


def oracle_lambda(p: float) -> float:
    """Independent bisection for H2(lam) = p, written without the library."""
    lo, hi = 0.0, 0.5
    for _ in range(200):
        mid = (lo + hi) / 2
        h = 0.0 if mid in (0.0, 1.0) else -mid * math.log2(mid) - (1 - mid) * math.log2(1 - mid)
        if h < p:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def weighted_graph(weights):
    """One triple per weight between the same node pair, predicates rel:F<k>."""
    voc = vocabulary_from_symbols(["x:A", "x:B"])
    registry = ConverseRegistry()
    graph = CorollaGraph(voc, registry)
    ids = []
    for k, weight in enumerate(weights):
        registry.register_converse(f"rel:F{k}", f"rel:B{k}", weight)
        left = graph.make_corolla("x:A", f"rel:F{k}")
        right = graph.make_corolla("x:B", f"rel:B{k}")
        ids.append(graph.join(left, right))
    return graph, ids


# --- binary entropy inversion -----------------------------------------------

def test_binary_entropy_endpoints():
    assert binary_entropy(0.0) == 0.0
    assert binary_entropy(1.0) == 0.0
    assert binary_entropy(0.5) == 1.0


def test_binary_entropy_symmetry():
    for x in (0.1, 0.25, 0.4):
        assert binary_entropy(x) == pytest.approx(binary_entropy(1 - x), abs=1e-15)


def test_invert_binary_entropy_against_oracle():
    for p in (0.05, 0.2, 0.4, 0.7, 0.95):
        assert invert_binary_entropy(p) == pytest.approx(oracle_lambda(p), abs=1e-9)


def test_invert_binary_entropy_worked_value():
    lam = invert_binary_entropy(0.4)
    assert lam == pytest.approx(0.0793826004806491, abs=1e-9)  # frozen from the oracle
    assert binary_entropy(lam) == pytest.approx(0.4, abs=1e-9)


def test_invert_binary_entropy_endpoints_exact():
    assert invert_binary_entropy(0.0) == 0.0
    assert invert_binary_entropy(1.0) == 0.5


def test_invert_binary_entropy_range_check():
    with pytest.raises(WeightOutOfRangeError):
        invert_binary_entropy(1.2)


# --- synthesis -----------------------------------------------------------------

def test_synthesize_zero_weight_is_product_state():
    graph, ids = weighted_graph([0.0])
    joint = synthesize_joint_state(graph, ids[0])
    # lam = 0: all mass on |jL> (x) |jR>
    assert np.allclose(joint.state.amplitudes, [0, 0, 0, 1])
    assert measure_entanglement(joint) == pytest.approx(0.0, abs=1e-9)


def test_synthesize_unit_weight_is_bell_type():
    graph, ids = weighted_graph([1.0])
    joint = synthesize_joint_state(graph, ids[0])
    r = 1 / math.sqrt(2)
    assert np.allclose(joint.state.amplitudes, [r, 0, 0, r])
    assert measure_entanglement(joint) == pytest.approx(1.0, abs=1e-9)


def test_synthesize_worked_weight():
    graph, ids = weighted_graph([0.4])
    joint = synthesize_joint_state(graph, ids[0])
    lam = abs(joint.state.amplitudes[0]) ** 2
    assert lam == pytest.approx(oracle_lambda(0.4), abs=1e-9)
    assert measure_entanglement(joint) == pytest.approx(0.4, abs=1e-6)


def test_synthesis_roundtrip_grid():
    weights = [k / 10 for k in range(11)]
    graph, ids = weighted_graph(weights)
    for weight, tid in zip(weights, ids):
        joint = synthesize_joint_state(graph, tid)
        assert abs(measure_entanglement(joint) - weight) <= 1e-6


def test_synthesize_default_basis_uses_node_indices():
    graph = build_kinship_graph()
    tid = graph.triple_id_of(("person:Bob", "kin:ParentOf", "person:Alice"))
    joint = synthesize_joint_state(graph, tid)
    assert joint.basis == (0, 1, 0, 1)  # Bob is basis 0, Alice basis 1
    assert joint.dims == (3, 3)
    support = {i for i, a in enumerate(joint.state.amplitudes) if a != 0}
    assert support == {0, 4}  # (0,0) and (1,1) in a 3x3 joint space


def test_synthesize_explicit_basis():
    graph, ids = weighted_graph([1.0])
    joint = synthesize_joint_state(graph, ids[0], basis_choice=(1, 0, 0, 1))
    r = 1 / math.sqrt(2)
    assert np.allclose(joint.state.amplitudes, [0, r, r, 0])  # psi+ pattern


def test_synthesize_degenerate_basis_rejected():
    graph, ids = weighted_graph([0.5])
    with pytest.raises(DegenerateBasisError):
        synthesize_joint_state(graph, ids[0], basis_choice=(0, 0, 0, 1))


def test_synthesize_basis_out_of_range():
    graph, ids = weighted_graph([0.5])
    with pytest.raises(DimensionMismatchError):
        synthesize_joint_state(graph, ids[0], basis_choice=(0, 5, 0, 1))


def test_joint_state_validates_target():
    bell = make_state([1, 0, 0, 1])
    voc = vocabulary_from_symbols(["x:A", "x:B"])
    with pytest.raises(WeightOutOfRangeError):
        JointState(bell, (2, 2), voc, voc, target_entropy=1.2)
    with pytest.raises(ValueError):
        JointState(bell, (2, 2), voc, voc, target_entropy=0.3)


def test_maximally_entangled_reduction_is_balanced():
    graph, ids = weighted_graph([1.0])
    joint = synthesize_joint_state(graph, ids[0])
    for keep in ("A", "B"):
        reduced = partial_trace(outer(joint.state), joint.dims, keep)
        eigs = np.sort(np.linalg.eigvalsh(reduced.entries))[::-1]
        assert np.allclose(eigs[:2], [0.5, 0.5], atol=1e-9)
        assert np.allclose(eigs[2:], 0.0, atol=1e-12)


# --- Bell states -----------------------------------------------------------------

def test_bell_state_amplitudes():
    r = 1 / math.sqrt(2)
    by_label = {b.label: b.state.amplitudes for b in bell_states()}
    assert np.allclose(by_label["phi+"], [r, 0, 0, r])
    assert np.allclose(by_label["phi-"], [r, 0, 0, -r])
    assert np.allclose(by_label["psi+"], [0, r, r, 0])
    assert np.allclose(by_label["psi-"], [0, r, -r, 0])


def test_bell_states_unit_entanglement():
    from qcorolla.qla import entanglement_entropy

    for bell in bell_states():
        assert entanglement_entropy(bell.state, (2, 2), 2.0) == pytest.approx(1.0, abs=1e-9)


def test_bell_states_pairwise_orthogonal():
    states = bell_states()
    for i, a in enumerate(states):
        for j, b in enumerate(states):
            expected = 1.0 if i == j else 0.0
            assert bell_fidelity(a, b) == pytest.approx(expected, abs=1e-12)


# --- metapattern mapping -------------------------------------------------------------

def test_default_pattern_assignment_in_order():
    assert map_triple_pattern(DEFAULT_PATTERN_TAGS[0]).label == "phi+"
    assert [map_triple_pattern(t).label for t in DEFAULT_PATTERN_TAGS] == list(BELL_LABELS)


def test_swapped_pattern_config_honored():
    config = default_pattern_config()
    config[DEFAULT_PATTERN_TAGS[0]] = "psi-"
    assert map_triple_pattern(DEFAULT_PATTERN_TAGS[0], config).label == "psi-"


def test_unknown_pattern_rejected():
    with pytest.raises(UnknownPatternError):
        map_triple_pattern("pattern-9")


# --- measurement ----------------------------------------------------------------------

def test_measure_deterministic_state():
    record = measure(basis_state(2, 0), shots=1000, seed=3)
    assert record.counts == {0: 1000}


def test_measure_biased_state_frequency():
    record = measure(make_state([0.6, 0.8]), shots=100_000, seed=99)
    assert abs(record.counts[0] / record.shots - 0.36) <= 0.01


def test_measure_seed_reproducibility():
    a = measure(make_state([1, 1, 1, 1]), shots=5000, seed=1234)
    b = measure(make_state([1, 1, 1, 1]), shots=5000, seed=1234)
    assert a == b


def test_measure_counts_sum_to_shots():
    rng = np.random.default_rng(43)
    for trial in range(50):
        state = make_state(rng.normal(size=4) + 1j * rng.normal(size=4))
        record = measure(state, shots=1000, seed=trial)
        assert sum(record.counts.values()) == 1000


def test_measure_frequencies_converge():
    rng = np.random.default_rng(47)
    for trial in range(1000):
        state = make_state(rng.normal(size=4) + 1j * rng.normal(size=4))
        record = measure(state, shots=100_000, seed=trial)
        probs = state.probabilities()
        for i in range(4):
            assert abs(record.counts.get(i, 0) / record.shots - probs[i]) <= 0.01


def test_measure_record_json_shape():
    record = measure(make_state([0.6, 0.8]), shots=10, seed=5)
    payload = record.as_dict()
    assert set(payload) == {"seed", "shots", "counts"}
    assert all(isinstance(k, str) for k in payload["counts"])


# --- tessellated rounding ----------------------------------------------------------------

VOC3 = vocabulary_from_symbols(["sym:a", "sym:b", "sym:c"])


def test_round_exact_basis_vector():
    symbol, fid = tessellate_round([0, 0, 1], VOC3)
    assert symbol == "sym:c"
    assert fid == 1.0


def test_round_noisy_vector_dominant_component():
    noisy = [0.9, 0.1, 0.05]
    overlaps = np.abs(noisy) ** 2 / np.sum(np.abs(noisy) ** 2)  # hand oracle
    assert int(np.argmax(overlaps)) == 0
    symbol, fid = tessellate_round(noisy, VOC3)
    assert symbol == "sym:a"
    assert fid == pytest.approx(overlaps[0], abs=1e-12)


def test_round_tie_breaks_to_lowest_index():
    voc = vocabulary_from_symbols(["sym:a", "sym:b"])
    symbol, fid = tessellate_round([1 / math.sqrt(2), 1 / math.sqrt(2)], voc)
    assert symbol == "sym:a"
    assert fid == pytest.approx(0.5)


def test_round_is_idempotent():
    rng = np.random.default_rng(53)
    for _ in range(100):
        noisy = rng.normal(size=3) + 1j * rng.normal(size=3)
        symbol, _ = tessellate_round(noisy, VOC3)
        basis = np.zeros(3)
        basis[VOC3.index(symbol)] = 1.0
        again, fid = tessellate_round(basis, VOC3)
        assert again == symbol
        assert fid == 1.0


def test_round_rejects_zero_vector():
    with pytest.raises(ZeroVectorError):
        tessellate_round([0, 0, 0], VOC3)


def test_round_rejects_wrong_length():
    with pytest.raises(DimensionMismatchError):
        tessellate_round([1, 0], VOC3)


def test_round_unnormalized_input_normalized():
    symbol, fid = tessellate_round([0, 10.0, 0], VOC3)
    assert symbol == "sym:b"
    assert fid == 1.0
