#!/usr/bin/env python3
"""Sweep predicate weights and verify the synthesis/measurement roundtrip.

For each target p the two-term Schmidt weight lambda solving H2(lambda) = p
is reported next to the entanglement entropy measured back from the
synthesized joint state.
"""

import argparse

from qcorolla.corolla import ConverseRegistry, CorollaGraph
from qcorolla.entangle import invert_binary_entropy, measure_entanglement, synthesize_joint_state
from qcorolla.qusym import vocabulary_from_symbols


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--steps", type=int, default=20, help="grid steps across [0, 1]")
    args = parser.parse_args()

    voc = vocabulary_from_symbols(["x:A", "x:B"])
    registry = ConverseRegistry()
    graph = CorollaGraph(voc, registry)

    print(f"{'target p':>10} {'lambda':>12} {'measured':>12} {'|error|':>10}")
    worst = 0.0
    for k in range(args.steps + 1):
        target = k / args.steps
        registry.register_converse(f"r:F{k}", f"r:B{k}", target)
        tid = graph.join(
            graph.make_corolla("x:A", f"r:F{k}"), graph.make_corolla("x:B", f"r:B{k}")
        )
        measured = measure_entanglement(synthesize_joint_state(graph, tid))
        error = abs(measured - target)
        worst = max(worst, error)
        print(f"{target:>10.4f} {invert_binary_entropy(target):>12.8f} "
              f"{measured:>12.8f} {error:>10.2e}")
    print(f"\nworst roundtrip error: {worst:.2e}")


if __name__ == "__main__":
    main()
