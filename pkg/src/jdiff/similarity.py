"""Similarity scoring between JSON values.

The score is a real number in [0, 1]: 1 means equal, 0 means unrelated.
A comparison against the ``MISSING`` sentinel scores 0, and values of
different JSON kinds score 0.  Objects score the average over the union
of their keys; arrays delegate to the pairing strategies in
:mod:`jdiff.matching`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any

from .model import MISSING, ROOT, JsonPath, JsonType, json_type, render_path

if TYPE_CHECKING:
    from .engine import DiffConfig

OBJECT_ADD = "object:add"
OBJECT_REMOVE = "object:remove"
VALUE_CHANGE = "value:change"
ARRAY_ADD = "array:add"
ARRAY_REMOVE = "array:remove"


@dataclass
class ChangeEvent:
    """One recorded difference; ``left_path``/``right_path`` are rendered
    strings, empty on the side where the event does not apply."""

    category: str
    left_path: str
    right_path: str
    left: Any
    right: Any
    info: dict | None = None

    def to_json(self) -> dict:
        data = {
            "left_path": self.left_path,
            "right_path": self.right_path,
            "left": self.left,
            "right": self.right,
        }
        if self.info is not None:
            data["info"] = self.info
        return data


def canonical_number(value: float):
    """Integral scores serialize without a fractional part (1, not 1.0),
    so canonical output survives a parse/serialize round trip."""
    if isinstance(value, float) and value.is_integer():
        return int(value)
    return value


@dataclass(frozen=True)
class PairRecord:
    """A matched array-element pair and its similarity score."""

    left_path: str
    right_path: str
    score: float

    def to_json(self) -> dict:
        return {
            "left_path": self.left_path,
            "right_path": self.right_path,
            "score": canonical_number(self.score),
        }


class EventRecorder:
    """Collects the change events and element pairings of one diff run."""

    def __init__(self):
        self.events: list[ChangeEvent] = []
        self.pairs: list[PairRecord] = []

    def add_event(self, event: ChangeEvent) -> None:
        self.events.append(event)

    def add_pair(self, pair: PairRecord) -> None:
        self.pairs.append(pair)


@dataclass(frozen=True)
class Level:
    """The two values under comparison plus their paths."""

    left: Any
    right: Any
    left_path: JsonPath
    right_path: JsonPath


@dataclass
class DiffContext:
    """Execution state threaded through one diff run.

    ``drill`` marks exploratory evaluations inside array matchers: scores
    are computed as usual but nothing reaches the recorder.
    """

    config: "DiffConfig"
    recorder: EventRecorder = field(default_factory=EventRecorder)
    drill: bool = False

    def drilled(self) -> "DiffContext":
        if self.drill:
            return self
        return DiffContext(self.config, self.recorder, drill=True)

    def report(self, category: str, level: Level, info: dict | None = None) -> None:
        """Record an operator event for ``level`` (suppressed while drilling)."""
        record_event(
            self,
            category,
            render_path(level.left_path),
            render_path(level.right_path),
            level.left,
            level.right,
            info,
        )


class DepthLimitError(RuntimeError):
    """Document nesting exceeded the configured recursion depth."""


def record_event(
    ctx: DiffContext,
    category: str,
    left_path: str,
    right_path: str,
    left: Any,
    right: Any,
    info: dict | None = None,
) -> None:
    if ctx.drill:
        return
    ctx.recorder.add_event(
        ChangeEvent(
            category=category,
            left_path=left_path,
            right_path=right_path,
            left=None if left is MISSING else left,
            right=None if right is MISSING else right,
            info=info,
        )
    )


def primitive_similarity(left: Any, right: Any) -> float:
    """1 for equal primitives, else 0.

    Numbers compare as double-precision values (``1`` equals ``1.0``);
    booleans are a distinct kind and never equal a number.
    """
    left_type, right_type = json_type(left), json_type(right)
    if left_type is not right_type:
        return 0.0
    if left_type is JsonType.NUMBER:
        return 1.0 if float(left) == float(right) else 0.0
    return 1.0 if left == right else 0.0


def object_similarity(
    left: dict,
    right: dict,
    ctx: DiffContext,
    left_path: JsonPath = ROOT,
    right_path: JsonPath = ROOT,
) -> float:
    """Average similarity over the union of both objects' keys.

    A key present on one side only contributes a comparison against
    ``MISSING`` and raises an ``object:remove``/``object:add`` event.
    Two empty objects are equal by definition.
    """
    keys = list(left) + [key for key in right if key not in left]
    if not keys:
        return 1.0
    total = 0.0
    for key in keys:
        left_value = left.get(key, MISSING)
        right_value = right.get(key, MISSING)
        left_child = left_path.child(key)
        right_child = right_path.child(key)
        if right_value is MISSING:
            record_event(ctx, OBJECT_REMOVE, render_path(left_child), "", left_value, None)
        elif left_value is MISSING:
            record_event(ctx, OBJECT_ADD, "", render_path(right_child), None, right_value)
        total += similarity(left_value, right_value, left_child, right_child, ctx)
    return total / len(keys)


def similarity(
    left: Any,
    right: Any,
    left_path: JsonPath,
    right_path: JsonPath,
    ctx: DiffContext,
) -> float:
    """Score two values, dispatching on their JSON kind.

    Dispatch order: registered operators first (they may claim any pair,
    including one with a missing side), then the missing-value rule, then
    the cross-kind rule, then the per-kind defaults.  Change events are
    recorded unless the context is drilling.
    """
    limit = ctx.config.max_depth
    if len(left_path) > limit or len(right_path) > limit:
        raise DepthLimitError(f"nesting exceeds the depth limit of {limit}")

    from .operators import apply_operators  # deferred: operators import matching

    verdict = apply_operators(Level(left, right, left_path, right_path), ctx)
    if verdict is not None:
        return verdict

    if left is MISSING or right is MISSING:
        return 0.0

    left_type, right_type = json_type(left), json_type(right)
    if left_type is not right_type:
        record_event(
            ctx, VALUE_CHANGE, render_path(left_path), render_path(right_path), left, right
        )
        return 0.0

    if left_type is JsonType.OBJECT:
        return object_similarity(left, right, ctx, left_path, right_path)
    if left_type is JsonType.ARRAY:
        from .matching import array_similarity  # deferred: matching imports this module

        return array_similarity(
            left, right, ctx.config.default_array_mode, ctx, left_path, right_path
        )

    score = primitive_similarity(left, right)
    if score < 1.0:
        record_event(
            ctx, VALUE_CHANGE, render_path(left_path), render_path(right_path), left, right
        )
    return score
