"""Triple-store plumbing: file formats, ingestion, queries, export, snapshots.

Source files use an N-Triples-like line grammar::

    subject WS predicate WS object WS? '.'

where every token is a namespaced symbol ``ns:Value`` matching
``[A-Za-z][A-Za-z0-9_]*:[A-Za-z0-9_]+``. ``#`` lines are comments. Only
forward predicate names are legal in the predicate position; a statement
whose predicate is a backward name is accepted only as the converse
reading of an edge already in the graph, and is folded into that edge
rather than creating a new one.

Snapshots are a directory of human-readable canonical files (vocabulary,
registry, triples, version tag); loading and re-saving one is
byte-identical.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Tuple

from .corolla import (
    ConverseRegistry,
    CorollaGraph,
    converse_statement,
    load_registry,
    save_registry,
)
from .errors import (
    BackwardPredicateInSubjectPositionError,
    MalformedTokenError,
    MissingTerminatorError,
    UnknownPredicateError,
)
from .qusym import Vocabulary, load_vocabulary, save_vocabulary

SNAPSHOT_FORMAT_VERSION = 1

TOKEN_PATTERN = re.compile(r"[A-Za-z][A-Za-z0-9_]*:[A-Za-z0-9_]+")


@dataclass(frozen=True)
class Statement:
    """One parsed (subject, predicate, object) line with its source position."""

    subject: str
    predicate: str
    object: str
    line: int = 0

    @property
    def triple(self) -> Tuple[str, str, str]:
        return (self.subject, self.predicate, self.object)

    def serialize(self) -> str:
        return f"{self.subject} {self.predicate} {self.object} ."


@dataclass(frozen=True)
class TripleDocument:
    """Statements of one source text, in document order."""

    statements: Tuple[Statement, ...]

    def serialize(self) -> str:
        """Canonical text: one statement per line, single spaces, LF endings."""
        return "".join(f"{s.serialize()}\n" for s in self.statements)


def parse_triple_line(line: str, lineno: int = 1) -> Statement | None:
    """Parse one source line; returns None for blank and comment lines.

    Raises ``MalformedTokenError`` or ``MissingTerminatorError`` with the
    line and column of the fault.
    """
    stripped = line.strip()
    if not stripped or stripped.startswith("#"):
        return None
    body = line.rstrip()
    if not body.endswith("."):
        raise MissingTerminatorError("statement must end with '.'", lineno, len(body) + 1)
    body = body[:-1]
    tokens: List[Tuple[str, int]] = []
    column = 1
    for part in body.split(" "):
        if part:
            tokens.append((part, column))
        column += len(part) + 1
    if len(tokens) != 3:
        at = tokens[3][1] if len(tokens) > 3 else column
        raise MalformedTokenError(
            f"expected 'subject predicate object .', got {len(tokens)} tokens", lineno, at
        )
    for token, col in tokens:
        if not TOKEN_PATTERN.fullmatch(token):
            raise MalformedTokenError(
                f"token {token!r} is not a namespaced symbol", lineno, col
            )
    return Statement(tokens[0][0], tokens[1][0], tokens[2][0], lineno)


def parse_triples_text(text: str) -> TripleDocument:
    statements = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        statement = parse_triple_line(raw, lineno)
        if statement is not None:
            statements.append(statement)
    return TripleDocument(tuple(statements))


def load_triples(path: str | Path) -> TripleDocument:
    return parse_triples_text(Path(path).read_text(encoding="utf-8"))


@dataclass
class IngestResult:
    """Graph built from one ingestion plus its dedup/fold accounting."""

    graph: CorollaGraph
    statements: int
    duplicates: int
    folded: int


def ingest_document(
    vocabulary: Vocabulary, registry: ConverseRegistry, document: TripleDocument
) -> IngestResult:
    """Join a corolla pair per statement, folding converse restatements.

    Exact duplicate statements are skipped with a warning count. A
    statement whose predicate is a backward name must match an existing
    edge's converse reading; otherwise it is rejected.
    """
    graph = CorollaGraph(vocabulary, registry)
    duplicates = 0
    folded = 0
    for statement in document.statements:
        s, p, o = statement.triple
        if p not in registry:
            raise UnknownPredicateError(
                f"line {statement.line}: predicate {p!r} not registered"
            )
        if registry.is_backward(p):
            forward_key = converse_statement(registry, (s, p, o))
            if graph.triple_id_of(forward_key) is not None:
                folded += 1
                continue
            raise BackwardPredicateInSubjectPositionError(
                f"line {statement.line}: {p!r} is a backward predicate and no edge "
                f"{forward_key} exists to fold onto"
            )
        if graph.triple_id_of((s, p, o)) is not None:
            duplicates += 1
            continue
        left = graph.make_corolla(s, p)
        right = graph.make_corolla(o, registry.converse_name(p))
        graph.join(left, right)
    return IngestResult(
        graph=graph,
        statements=len(document.statements),
        duplicates=duplicates,
        folded=folded,
    )


def ingest(
    voc_path: str | Path, registry_path: str | Path, triples_path: str | Path
) -> IngestResult:
    """Parse the three source files and assemble the corolla graph."""
    vocabulary = load_vocabulary(voc_path)
    registry = load_registry(registry_path)
    document = load_triples(triples_path)
    return ingest_document(vocabulary, registry, document)


# -- queries -----------------------------------------------------------------


@dataclass(frozen=True)
class CorollaView:
    """One half-edge of a node, with its pairing if joined."""

    predicate: str
    direction: str
    half_weight: float
    partner: str | None
    triple_id: str | None


@dataclass(frozen=True)
class NodeReport:
    symbol: str
    corollas: Tuple[CorollaView, ...]
    readings: Tuple[Tuple[str, str, str], ...]  # forward and converse of each triple

    def lines(self) -> List[str]:
        out = [f"node {self.symbol}: {len(self.corollas)} corolla(s)"]
        for view in self.corollas:
            pairing = f" -> {view.partner} [{view.triple_id}]" if view.partner else " (unpaired)"
            out.append(
                f"  ({self.symbol}, {view.predicate}) half-weight {view.half_weight:+g}{pairing}"
            )
        for s, p, o in self.readings:
            out.append(f"  {s} {p} {o} .")
        return out


def query_node(graph: CorollaGraph, symbol: str) -> NodeReport:
    """Owned corollas, their partners, and both orientations of each triple."""
    views = []
    readings = []
    for corolla in sorted(graph.corollas_of(symbol), key=lambda c: c.half_edge_id):
        partner = graph.partner_of(corolla)
        triple_id = None
        if partner is not None:
            forward = corolla if corolla.predicate.direction == "forward" else partner
            triple_id = graph.triple_id_of(
                (forward.node.symbol, forward.predicate.name, graph.partner_of(forward).node.symbol)
            )
        views.append(
            CorollaView(
                predicate=corolla.predicate.name,
                direction=corolla.predicate.direction,
                half_weight=corolla.predicate.half_weight,
                partner=None if partner is None else partner.node.symbol,
                triple_id=triple_id,
            )
        )
        if triple_id is not None:
            readings.append(graph.triple(triple_id))
            readings.append(graph.converse_of(triple_id))
    # deduplicate readings while preserving order (a node may own both ends)
    seen = set()
    unique_readings = []
    for reading in readings:
        if reading not in seen:
            seen.add(reading)
            unique_readings.append(reading)
    return NodeReport(symbol=symbol, corollas=tuple(views), readings=tuple(unique_readings))


# -- export -------------------------------------------------------------------


def _edge_record(graph: CorollaGraph, triple_id: str) -> Dict:
    s, p, o = graph.triple(triple_id)
    weight = graph.registry.total_weight(p)
    return {
        "s": s,
        "p": p,
        "o": o,
        "converse_p": graph.registry.converse_name(p),
        "total_weight": weight,
        "target_entropy": weight,
    }


def export_jsonl(graph: CorollaGraph, path: str | Path) -> int:
    """Write one JSON object per edge in lexicographic (s, p, o) order.

    Returns the statement count. Re-ingesting the export reproduces an
    isomorphic graph.
    """
    records = sorted(
        (_edge_record(graph, tid) for tid in graph.triple_ids()),
        key=lambda r: (r["s"], r["p"], r["o"]),
    )
    text = "".join(json.dumps(r, sort_keys=True) + "\n" for r in records)
    Path(path).write_text(text, encoding="utf-8")
    return len(records)


def load_jsonl(path: str | Path) -> TripleDocument:
    """Read an export back into a document of forward statements."""
    statements = []
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        if not raw.strip():
            continue
        record = json.loads(raw)
        statements.append(Statement(record["s"], record["p"], record["o"], lineno))
    return TripleDocument(tuple(statements))


# -- snapshots ------------------------------------------------------------------

_SNAPSHOT_FILES = ("vocabulary.txt", "registry.txt", "triples.nt", "snapshot.json")


def save_snapshot(graph: CorollaGraph, directory: str | Path) -> None:
    """Write the canonical on-disk form of a graph to a directory.

    Files: vocabulary (basis order), registry (sorted by forward name),
    triples (sorted lexicographically), and a version tag. Saving the
    result of ``load_snapshot`` is byte-identical.
    """
    root = Path(directory)
    root.mkdir(parents=True, exist_ok=True)
    save_vocabulary(graph.node_vocabulary, root / "vocabulary.txt")
    save_registry(graph.registry, root / "registry.txt")
    statements = sorted(graph.triples().values())
    document = TripleDocument(tuple(Statement(*t, line=i + 1) for i, t in enumerate(statements)))
    (root / "triples.nt").write_text(document.serialize(), encoding="utf-8")
    meta = {"format_version": SNAPSHOT_FORMAT_VERSION}
    (root / "snapshot.json").write_text(json.dumps(meta, sort_keys=True) + "\n", encoding="utf-8")


def load_snapshot(directory: str | Path) -> CorollaGraph:
    """Rebuild a graph from a snapshot directory."""
    root = Path(directory)
    for name in _SNAPSHOT_FILES:
        if not (root / name).exists():
            raise FileNotFoundError(f"snapshot file missing: {root / name}")
    meta = json.loads((root / "snapshot.json").read_text(encoding="utf-8"))
    version = meta.get("format_version")
    if version != SNAPSHOT_FORMAT_VERSION:
        raise ValueError(f"unsupported snapshot format version: {version!r}")
    result = ingest(root / "vocabulary.txt", root / "registry.txt", root / "triples.nt")
    return result.graph
