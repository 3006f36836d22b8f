"""Top-level diff execution and result serialization.

One diff run walks both documents once, scoring nodes with the
similarity core and recording change events and array pairings along the
way.  The run is deterministic for fixed inputs and configuration, and a
configured engine may serve any number of concurrent runs.
"""
from __future__ import annotations

import json
import sys
from dataclasses import dataclass, field
from typing import Any, Sequence, Union

from .matching import ORDERED_EXACT, MatchMode, record_array_outcome
from .model import MISSING, ROOT
from .similarity import (
    ChangeEvent,
    DepthLimitError,
    DiffContext,
    EventRecorder,
    PairRecord,
    canonical_number,
    similarity,
)
from .operators import IgnoreOperator, Operator, UnorderedOperator

__all__ = [
    "DiffConfig",
    "DiffResult",
    "diff",
    "serialize_result",
    "ChangeEvent",
    "PairRecord",
    "DepthLimitError",
    "record_array_outcome",
]

UnorderedRule = Union[str, tuple]


@dataclass
class DiffConfig:
    """Knobs for one diff engine.

    ``ignore`` and ``unordered`` are path-regex shortcuts compiled into
    the corresponding built-in operators; an ``unordered`` entry may be a
    plain pattern (set comparison inherits the fuzziness of
    ``default_array_mode``) or a ``(pattern, fuzzy)`` pair.  Explicitly
    registered ``operators`` are consulted after the shortcuts, in
    registration order, and must carry distinct names.

    ``pair_threshold`` is the minimum similarity for a fuzzy array pair
    to be kept as a pair instead of splitting into remove+add events.
    """

    default_array_mode: MatchMode = ORDERED_EXACT
    pair_threshold: float = 0.5
    ignore: Sequence[str] = ()
    unordered: Sequence[UnorderedRule] = ()
    operators: Sequence[Operator] = ()
    max_depth: int = 512

    effective_operators: tuple[Operator, ...] = field(init=False, repr=False)

    def __post_init__(self):
        if not 0.0 <= self.pair_threshold <= 1.0:
            raise ValueError(
                f"pair_threshold must lie in [0, 1], got {self.pair_threshold!r}"
            )
        if self.max_depth < 1:
            raise ValueError("max_depth must be at least 1")
        names = [operator.name for operator in self.operators]
        duplicates = {name for name in names if names.count(name) > 1}
        if duplicates:
            raise ValueError(f"duplicate operator names: {sorted(duplicates)}")
        compiled: list[Operator] = [IgnoreOperator(pattern) for pattern in self.ignore]
        for entry in self.unordered:
            if isinstance(entry, str):
                pattern, fuzzy = entry, self.default_array_mode.fuzzy
            else:
                pattern, fuzzy = entry
            compiled.append(UnorderedOperator(pattern, fuzzy=bool(fuzzy)))
        compiled.extend(self.operators)
        self.effective_operators = tuple(compiled)


@dataclass
class DiffResult:
    """Outcome of one diff run: the overall similarity, the change events
    grouped by category, and the array pairings with their scores.

    ``identical`` is true exactly when the similarity is 1 and no events
    were recorded.
    """

    similarity: float
    identical: bool
    events: dict[str, list[ChangeEvent]]
    pairs: list[PairRecord]

    @property
    def event_count(self) -> int:
        return sum(len(group) for group in self.events.values())

    def to_json(self) -> dict:
        return {
            "similarity": canonical_number(self.similarity),
            "identical": self.identical,
            "events": {
                category: [event.to_json() for event in group]
                for category, group in self.events.items()
            },
            "pairs": [pair.to_json() for pair in self.pairs],
        }


def _group_events(events: list[ChangeEvent]) -> dict[str, list[ChangeEvent]]:
    ordered = sorted(events, key=lambda e: (e.category, e.left_path, e.right_path))
    grouped: dict[str, list[ChangeEvent]] = {}
    for event in ordered:
        grouped.setdefault(event.category, []).append(event)
    return grouped


def diff(left: Any, right: Any, config: DiffConfig | None = None) -> DiffResult:
    """Diff two documents and return the scored, recorded outcome.

    Inputs must be plain JSON values free of the ``MISSING`` sentinel.
    """
    if left is MISSING or right is MISSING:
        raise ValueError("documents must not contain the MISSING sentinel")
    if config is None:
        config = DiffConfig()
    # the walk may legitimately nest max_depth levels; leave headroom for
    # the interpreter frames each level costs
    needed = 24 * config.max_depth + 200
    if sys.getrecursionlimit() < needed:
        sys.setrecursionlimit(needed)
    recorder = EventRecorder()
    ctx = DiffContext(config=config, recorder=recorder, drill=False)
    score = similarity(left, right, ROOT, ROOT, ctx)
    return DiffResult(
        similarity=score,
        identical=(score == 1.0 and not recorder.events),
        events=_group_events(recorder.events),
        pairs=list(recorder.pairs),
    )


def serialize_result(result: DiffResult) -> str:
    """Serialize a result to canonical JSON text.

    Output is compact, keeps a fixed key order, and re-serializing the
    parsed text reproduces it byte for byte.
    """
    return json.dumps(result.to_json(), ensure_ascii=False, separators=(",", ":"))
