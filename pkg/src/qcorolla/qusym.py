"""Quantum symbols: finite vocabularies one-hot-mapped onto basis vectors.

A vocabulary of d distinct symbols spans a d-dimensional state space, with
symbol i encoded as the basis vector |i⟩. On top of that sit probabilistic
symbol ensembles, grammar-closure validation for strings over a symbol set,
and the horizontal/vertical entropy-scaling calculators (entropy growth with
string length at fixed base versus growth with base at fixed length).
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Mapping, Sequence, Tuple

import numpy as np

from .errors import (
    DimensionMismatchError,
    DuplicateSymbolError,
    EmptyVocabularyError,
    ProbabilityMismatchError,
    UnknownSymbolError,
)
from .qla import NORM_TOL, DensityMatrix, StateVector, basis_state


def _check_symbol(symbol: str) -> str:
    if not symbol:
        raise ValueError("symbols must be non-empty")
    if any(ch.isspace() for ch in symbol):
        raise ValueError(f"symbols must not contain whitespace: {symbol!r}")
    return symbol


@dataclass(frozen=True)
class Vocabulary:
    """Ordered set of distinct symbols; position in ``entries`` is the basis index."""

    entries: Tuple[str, ...]
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not self.entries:
            raise EmptyVocabularyError("vocabulary needs at least one symbol")
        index = {}
        for i, symbol in enumerate(self.entries):
            _check_symbol(symbol)
            if symbol in index:
                raise DuplicateSymbolError(f"duplicate symbol {symbol!r}")
            index[symbol] = i
        object.__setattr__(self, "_index", index)

    @property
    def d(self) -> int:
        return len(self.entries)

    @property
    def content_id(self) -> str:
        """Stable short digest of the entry list, used to tag node references."""
        payload = "\n".join(self.entries).encode("utf-8")
        return hashlib.sha256(payload).hexdigest()[:12]

    def index(self, symbol: str) -> int:
        try:
            return self._index[symbol]
        except KeyError:
            raise UnknownSymbolError(f"symbol {symbol!r} not in vocabulary") from None

    def symbol(self, index: int) -> str:
        return self.entries[index]

    def __contains__(self, symbol: str) -> bool:
        return symbol in self._index

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


@dataclass(frozen=True)
class Qusym:
    """A vocabulary together with a state over its basis vectors."""

    vocabulary: Vocabulary
    state: StateVector

    def __post_init__(self):
        if self.state.dim != self.vocabulary.d:
            raise DimensionMismatchError(
                f"state dim {self.state.dim} != vocabulary size {self.vocabulary.d}"
            )


def vocabulary_from_symbols(symbols: Iterable[str]) -> Vocabulary:
    """Build a vocabulary mapping symbol i to basis vector |i⟩."""
    return Vocabulary(tuple(symbols))


def encode_symbol(voc: Vocabulary, symbol: str) -> Qusym:
    """One-hot encode a symbol as the pure basis state at its index."""
    return Qusym(voc, basis_state(voc.d, voc.index(symbol)))


def qusym_ensemble(voc: Vocabulary, weights: Mapping[str, float]) -> DensityMatrix:
    """Diagonal density matrix of a probabilistic selection over the vocabulary.

    ``weights`` maps symbols to selection probabilities (missing symbols get
    0); they must be non-negative and sum to 1 within tolerance.
    """
    probs = np.zeros(voc.d, dtype=float)
    for symbol, p in weights.items():
        if p < 0:
            raise ProbabilityMismatchError(f"negative weight for {symbol!r}")
        probs[voc.index(symbol)] = p
    total = float(np.sum(probs))
    if abs(total - 1.0) > NORM_TOL:
        raise ProbabilityMismatchError(f"weights sum to {total!r}, expected 1")
    return DensityMatrix(np.diag(probs / total).astype(complex))


@dataclass(frozen=True)
class StringEntropy:
    """Entropy (bits) of a string of given length over a base-d symbol set,
    plus the exact count of such strings."""

    bits: float
    count: int


def string_entropy(length: int, base: int) -> StringEntropy:
    """Total information of a length-L string over d symbols: L·log2(d) bits.

    ``count`` is the exact number of distinct strings, d**L (arbitrary
    precision, never overflows).
    """
    if length < 1:
        raise ValueError(f"length must be positive, got {length}")
    if base < 2:
        raise ValueError(f"base must be at least 2, got {base}")
    return StringEntropy(bits=length * math.log2(base), count=base**length)


@dataclass(frozen=True)
class ScalingRow:
    length: int
    base: int
    entropy_bits: float
    string_count: int


def scaling_table(lengths: Sequence[int], bases: Sequence[int]) -> Tuple[ScalingRow, ...]:
    """Cross product of lengths and bases with entropy and string count per cell.

    Rows grow exponentially along the length axis at fixed base (horizontal
    scaling) and as a power law along the base axis at fixed length
    (vertical scaling).
    """
    if not lengths or not bases:
        raise ValueError("lengths and bases must be non-empty")
    rows = []
    for length in lengths:
        for base in bases:
            se = string_entropy(length, base)
            rows.append(ScalingRow(length, base, se.bits, se.count))
    return tuple(rows)


@dataclass(frozen=True)
class Grammar:
    """Symbol set plus named closure rules a string must satisfy.

    Rules are checked in declaration order; each is a named predicate over
    the full candidate string.
    """

    symbols: frozenset
    rules: Tuple[Tuple[str, Callable[[str], bool]], ...] = ()

    def __post_init__(self):
        for symbol in self.symbols:
            _check_symbol(symbol)


@dataclass(frozen=True)
class StringValidation:
    accepted: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.accepted


def validate_string(grammar: Grammar, candidate: str) -> StringValidation:
    """Accept iff the candidate factors into grammar symbols and all rules pass.

    Membership uses dynamic programming over string positions, so multi-
    character symbols are handled exactly (no greedy-match false rejects).
    Rejections carry the first failure: either the position where no symbol
    matches or the name of the first failing rule.
    """
    symbols = sorted(grammar.symbols, key=len, reverse=True)
    reachable = [False] * (len(candidate) + 1)
    reachable[0] = True
    furthest = 0
    for i in range(len(candidate)):
        if not reachable[i]:
            continue
        furthest = max(furthest, i)
        for symbol in symbols:
            if candidate.startswith(symbol, i):
                reachable[i + len(symbol)] = True
    if not reachable[len(candidate)]:
        at = max(furthest, 0)
        return StringValidation(
            False, f"no vocabulary symbol matches {candidate!r} at position {at}"
        )
    for name, predicate in grammar.rules:
        if not predicate(candidate):
            return StringValidation(False, f"rule {name!r} failed")
    return StringValidation(True)


def load_vocabulary(path: str | Path) -> Vocabulary:
    """Read a vocabulary file: one symbol per line, ``#`` lines are comments.

    Symbol lines are numbered consecutively (comments and blanks skipped),
    and that position is the basis index.
    """
    symbols = []
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        symbols.append(line)
    return vocabulary_from_symbols(symbols)


def save_vocabulary(voc: Vocabulary, path: str | Path) -> None:
    """Write entries one per line in basis order (canonical form, LF endings)."""
    Path(path).write_text("".join(f"{s}\n" for s in voc.entries), encoding="utf-8")
