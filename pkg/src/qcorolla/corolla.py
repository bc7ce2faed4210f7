"""Semantic graph layer: nodes, signed directed predicates, and corollas.

A corolla is a node paired with one owned directed predicate: half of a
semantic triple. Converse predicate pairs (e.g. ParentOf/ChildOf) are
registered with a total entanglement weight p in [0, 1] bits; the forward
side carries +p/2 and the backward side -p/2, so the signed halves of every
edge cancel exactly while their moduli sum to p.

Joining two converse corollas extends a self-inverse, fixed-point-free
involution over half-edges; each involution pair is one edge, read as the
triple (subject, forward predicate, object) with the positive corolla as
subject.

Concurrency: mutating operations (``register_converse``, ``add_node``,
``make_corolla``, ``join``) require exclusive access; queries are safe
concurrently between mutations.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterator, List, Set, Tuple

from .errors import (
    AlreadyPairedError,
    AlreadyRegisteredError,
    MalformedTokenError,
    NotConverseError,
    SelfConverseError,
    SelfJoinError,
    UnknownNodeError,
    UnknownNodeSymbolError,
    UnknownPredicateError,
    UnknownTripleError,
    WeightOutOfRangeError,
    WrongOrientationError,
)
from .qusym import Vocabulary

FORWARD = "forward"
BACKWARD = "backward"

WEIGHT_TOL = 1e-12

Triple = Tuple[str, str, str]


@dataclass(frozen=True)
class NodeRef:
    """A node symbol tied to the vocabulary it was drawn from."""

    symbol: str
    vocabulary_id: str


@dataclass(frozen=True)
class DirectedPredicate:
    """One direction of a converse pair with its signed half-weight (bits).

    Forward predicates carry +p/2, backward predicates -p/2; 0 is allowed
    only for the degenerate unentangled predicate.
    """

    name: str
    half_weight: float
    direction: str

    def __post_init__(self):
        if self.direction not in (FORWARD, BACKWARD):
            raise ValueError(f"direction must be forward|backward, got {self.direction!r}")
        if self.direction == FORWARD and self.half_weight < 0:
            raise ValueError("forward predicates need a non-negative half-weight")
        if self.direction == BACKWARD and self.half_weight > 0:
            raise ValueError("backward predicates need a non-positive half-weight")


@dataclass(frozen=True)
class Corolla:
    """A node plus one owned directed predicate: half of a triple."""

    node: NodeRef
    predicate: DirectedPredicate
    half_edge_id: int


@dataclass
class ValidationReport:
    """Outcome of a whole-graph consistency sweep.

    ``is_valid`` is true iff no unpaired half-edges, involution violations,
    or weight-conservation violations exist. Edges with total weight 0 are
    listed separately as semantically inert warnings; they do not affect
    validity.
    """

    unpaired: List[int] = field(default_factory=list)
    involution_violations: List[str] = field(default_factory=list)
    weight_violations: List[str] = field(default_factory=list)
    inert_edges: List[str] = field(default_factory=list)

    @property
    def is_valid(self) -> bool:
        return not (self.unpaired or self.involution_violations or self.weight_violations)

    def lines(self) -> List[str]:
        out = []
        for hid in self.unpaired:
            out.append(f"unpaired half-edge {hid}")
        out.extend(self.involution_violations)
        out.extend(self.weight_violations)
        for tid in self.inert_edges:
            out.append(f"warning: edge {tid} is semantically inert (weight 0)")
        return out


class ConverseRegistry:
    """Bijective pairing of forward/backward predicate names with one total
    entanglement weight per pair."""

    def __init__(self):
        self._forward: Dict[str, Tuple[str, float]] = {}
        self._backward: Dict[str, str] = {}

    def register_converse(self, forward: str, backward: str, total_weight: float) -> "ConverseRegistry":
        """Bind a converse pair; forward gets +total/2, backward -total/2."""
        if forward == backward:
            raise SelfConverseError(f"{forward!r} cannot be its own converse")
        if not 0.0 <= total_weight <= 1.0:
            raise WeightOutOfRangeError(f"total weight must lie in [0, 1], got {total_weight!r}")
        for name in (forward, backward):
            if name in self._forward or name in self._backward:
                raise AlreadyRegisteredError(f"predicate {name!r} already registered")
        self._forward[forward] = (backward, total_weight)
        self._backward[backward] = forward
        return self

    def is_forward(self, name: str) -> bool:
        return name in self._forward

    def is_backward(self, name: str) -> bool:
        return name in self._backward

    def __contains__(self, name: str) -> bool:
        return name in self._forward or name in self._backward

    def forward_name(self, name: str) -> str:
        """Canonical (forward) name of either side of a pair."""
        if name in self._forward:
            return name
        if name in self._backward:
            return self._backward[name]
        raise UnknownPredicateError(f"predicate {name!r} not registered")

    def converse_name(self, name: str) -> str:
        if name in self._forward:
            return self._forward[name][0]
        if name in self._backward:
            return self._backward[name]
        raise UnknownPredicateError(f"predicate {name!r} not registered")

    def total_weight(self, name: str) -> float:
        return self._forward[self.forward_name(name)][1]

    def directed(self, name: str) -> DirectedPredicate:
        """The signed directed predicate for either name of a pair."""
        half = self.total_weight(name) / 2.0
        if self.is_forward(name):
            return DirectedPredicate(name, +half, FORWARD)
        return DirectedPredicate(name, -half, BACKWARD)

    def pairs(self) -> Iterator[Tuple[str, str, float]]:
        """(forward, backward, total_weight) triples in registration order."""
        for fwd, (bwd, weight) in self._forward.items():
            yield fwd, bwd, weight

    def __len__(self) -> int:
        return len(self._forward)


def converse_statement(registry: ConverseRegistry, triple: Triple) -> Triple:
    """The converse reading (o, converse predicate, s); an involution."""
    s, p, o = triple
    return (o, registry.converse_name(p), s)


class CorollaGraph:
    """Half-edge graph over a node vocabulary and a converse registry.

    Single-writer / multi-reader: mutations need exclusive access.
    """

    def __init__(self, node_vocabulary: Vocabulary, registry: ConverseRegistry):
        self.node_vocabulary = node_vocabulary
        self.registry = registry
        self._nodes: Dict[str, NodeRef] = {}
        self._half_edges: Dict[int, Corolla] = {}
        self._involution: Dict[int, int] = {}
        self._triples: Dict[str, Tuple[int, int]] = {}
        self._triple_keys: Dict[Triple, str] = {}
        self._next_half_edge = 1
        self._next_triple = 1

    # -- nodes ---------------------------------------------------------

    def add_node(self, symbol: str) -> NodeRef:
        """Register a node of the graph; idempotent per symbol."""
        if symbol not in self.node_vocabulary:
            raise UnknownNodeSymbolError(f"node symbol {symbol!r} not in vocabulary")
        if symbol not in self._nodes:
            self._nodes[symbol] = NodeRef(symbol, self.node_vocabulary.content_id)
        return self._nodes[symbol]

    def nodes(self) -> Tuple[NodeRef, ...]:
        return tuple(self._nodes.values())

    @property
    def node_count(self) -> int:
        return len(self._nodes)

    # -- corollas --------------------------------------------------------

    def make_corolla(self, node: NodeRef | str, predicate_name: str) -> Corolla:
        """Create an unpaired half-edge owned by ``node``.

        The predicate may be either side of a registered pair; its sign
        follows its direction.
        """
        symbol = node.symbol if isinstance(node, NodeRef) else node
        ref = self.add_node(symbol)
        if predicate_name not in self.registry:
            raise UnknownPredicateError(f"predicate {predicate_name!r} not registered")
        corolla = Corolla(ref, self.registry.directed(predicate_name), self._next_half_edge)
        self._half_edges[corolla.half_edge_id] = corolla
        self._next_half_edge += 1
        return corolla

    def corollas_of(self, node: NodeRef | str) -> Set[Corolla]:
        """All half-edges owned by a node, paired or not."""
        symbol = node.symbol if isinstance(node, NodeRef) else node
        if symbol not in self._nodes:
            raise UnknownNodeError(f"node {symbol!r} not in graph")
        return {c for c in self._half_edges.values() if c.node.symbol == symbol}

    def partner_of(self, corolla: Corolla) -> Corolla | None:
        """The involution image of a half-edge, or None while unpaired."""
        partner_id = self._involution.get(corolla.half_edge_id)
        return None if partner_id is None else self._half_edges[partner_id]

    def involution(self) -> Dict[int, int]:
        """Copy of the half-edge pairing map (both directions of every edge)."""
        return dict(self._involution)

    @property
    def half_edge_count(self) -> int:
        return len(self._half_edges)

    # -- joining ---------------------------------------------------------

    def join(self, left: Corolla, right: Corolla) -> str:
        """Pair two converse corollas into one edge; returns the triple id.

        ``left`` must be the forward (positive) side; its node becomes the
        subject. The involution is extended with I(left) = right and
        I(right) = left.
        """
        for corolla in (left, right):
            if self._half_edges.get(corolla.half_edge_id) is not corolla:
                raise UnknownNodeError("corolla does not belong to this graph")
        if left.half_edge_id == right.half_edge_id:
            raise SelfJoinError("cannot join a corolla with itself")
        for corolla in (left, right):
            if corolla.half_edge_id in self._involution:
                raise AlreadyPairedError(f"half-edge {corolla.half_edge_id} already paired")

        lp, rp = left.predicate, right.predicate
        if lp.direction == BACKWARD and rp.direction == FORWARD \
                and self.registry.converse_name(rp.name) == lp.name:
            raise WrongOrientationError(
                f"swapped sides: {rp.name!r} is the forward predicate and must come first"
            )
        if lp.direction != FORWARD or rp.direction != BACKWARD \
                or self.registry.converse_name(lp.name) != rp.name:
            raise NotConverseError(f"{lp.name!r} and {rp.name!r} are not a converse pair")

        key = (left.node.symbol, lp.name, right.node.symbol)
        if key in self._triple_keys:
            raise AlreadyPairedError(
                f"triple {key} already present as {self._triple_keys[key]}"
            )

        triple_id = f"t{self._next_triple}"
        self._next_triple += 1
        self._involution[left.half_edge_id] = right.half_edge_id
        self._involution[right.half_edge_id] = left.half_edge_id
        self._triples[triple_id] = (left.half_edge_id, right.half_edge_id)
        self._triple_keys[key] = triple_id
        return triple_id

    # -- triples -----------------------------------------------------------

    def triple(self, triple_id: str) -> Triple:
        """The stored orientation (subject, forward predicate, object)."""
        if triple_id not in self._triples:
            raise UnknownTripleError(f"no triple {triple_id!r}")
        left_id, right_id = self._triples[triple_id]
        left, right = self._half_edges[left_id], self._half_edges[right_id]
        return (left.node.symbol, left.predicate.name, right.node.symbol)

    def converse_of(self, triple_id: str) -> Triple:
        """The converse reading (object, backward predicate, subject)."""
        return converse_statement(self.registry, self.triple(triple_id))

    def triple_id_of(self, triple: Triple) -> str | None:
        """Id of a stored (s, p, o), or None."""
        return self._triple_keys.get(triple)

    def triples(self) -> Dict[str, Triple]:
        return {tid: self.triple(tid) for tid in self._triples}

    def triple_ids(self) -> Tuple[str, ...]:
        return tuple(self._triples)

    def edge_corollas(self, triple_id: str) -> Tuple[Corolla, Corolla]:
        if triple_id not in self._triples:
            raise UnknownTripleError(f"no triple {triple_id!r}")
        left_id, right_id = self._triples[triple_id]
        return self._half_edges[left_id], self._half_edges[right_id]

    @property
    def edge_count(self) -> int:
        return len(self._triples)

    # -- validation ----------------------------------------------------------

    def validate(self) -> ValidationReport:
        """Sweep the whole graph for structural and conservation violations.

        Checks: every half-edge is paired; the involution is self-inverse
        and fixed-point free; per edge, the signed half-weights sum to 0
        exactly and their moduli sum to the registered total within
        ``WEIGHT_TOL``. Weight-0 edges are flagged as inert warnings.
        """
        report = ValidationReport()
        report.unpaired = sorted(set(self._half_edges) - set(self._involution))
        for f, f_prime in self._involution.items():
            if f_prime == f:
                report.involution_violations.append(f"involution fixed point at half-edge {f}")
            elif self._involution.get(f_prime) != f:
                report.involution_violations.append(
                    f"involution not self-inverse at half-edge {f}"
                )
        for triple_id, (left_id, right_id) in self._triples.items():
            left, right = self._half_edges[left_id], self._half_edges[right_id]
            signed_sum = left.predicate.half_weight + right.predicate.half_weight
            if signed_sum != 0.0:
                report.weight_violations.append(
                    f"edge {triple_id}: half-weights sum to {signed_sum!r}, not 0"
                )
            moduli = abs(left.predicate.half_weight) + abs(right.predicate.half_weight)
            try:
                registered = self.registry.total_weight(left.predicate.name)
            except UnknownPredicateError:
                report.weight_violations.append(
                    f"edge {triple_id}: predicate {left.predicate.name!r} not registered"
                )
                continue
            if abs(moduli - registered) > WEIGHT_TOL:
                report.weight_violations.append(
                    f"edge {triple_id}: moduli sum {moduli!r} != registered {registered!r}"
                )
            if registered == 0.0:
                report.inert_edges.append(triple_id)
        return report


# -- registry file format ----------------------------------------------------

_REGISTRY_LINE = re.compile(
    r"^\s*(?P<fwd>\S+)\s*<->\s*(?P<bwd>\S+)\s*=\s*(?P<weight>[0-9.eE+-]+)\s*$"
)
_TOKEN = re.compile(r"^[A-Za-z][A-Za-z0-9_]*:[A-Za-z0-9_]+$")


def load_registry(path: str | Path) -> ConverseRegistry:
    """Read converse pairs from ``forward <-> backward = p`` lines.

    ``#`` lines are comments; predicate names use the namespaced token form.
    """
    registry = ConverseRegistry()
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        match = _REGISTRY_LINE.match(line)
        if not match:
            raise MalformedTokenError(
                f"expected 'forward <-> backward = p', got {line!r}", lineno, 1
            )
        fwd, bwd = match.group("fwd"), match.group("bwd")
        for name in (fwd, bwd):
            if not _TOKEN.match(name):
                raise MalformedTokenError(
                    f"predicate {name!r} is not a namespaced token", lineno, raw.find(name) + 1
                )
        try:
            weight = float(match.group("weight"))
        except ValueError:
            raise MalformedTokenError(
                f"weight {match.group('weight')!r} is not a number", lineno, 1
            ) from None
        registry.register_converse(fwd, bwd, weight)
    return registry


def save_registry(registry: ConverseRegistry, path: str | Path) -> None:
    """Write pairs sorted by forward name (canonical form, LF endings)."""
    lines = sorted(f"{f} <-> {b} = {w!r}\n" for f, b, w in registry.pairs())
    Path(path).write_text("".join(lines), encoding="utf-8")
