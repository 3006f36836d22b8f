"""Path-scoped similarity operators.

An operator watches comparisons whose rendered left path matches its
regex rule and may claim the pair, returning its own score and reporting
its own events.  Built-ins cover the common cases (ignoring subtrees,
treating arrays as sets, point distance, string edit distance); custom
operators subclass :class:`Operator` and use exactly the same hooks.
"""
from __future__ import annotations

import math

from .model import MISSING, JsonType, PathRule, json_type, path_matches, render_path
from .similarity import DiffContext, Level
from . import matching


class OperatorError(RuntimeError):
    """An operator raised while scoring a pair; aborts the diff."""


class Operator:
    """Base class for similarity hooks.

    Subclasses set ``name`` (also the event category they report under)
    and implement :meth:`compare`, returning ``(handled, score)``.
    Returning ``handled=False`` passes the pair on to the next operator
    and finally to the default dispatch.  Operators must be stateless or
    internally synchronized; scores are clamped to [0, 1] by the caller.
    """

    name = "operator"

    def __init__(self, path_regex: str | PathRule, name: str | None = None):
        self.rule = (
            path_regex
            if isinstance(path_regex, PathRule)
            else PathRule(path_regex, kind="operator-binding")
        )
        if name is not None:
            self.name = name

    def matches(self, rendered_left_path: str) -> bool:
        return path_matches(self.rule, rendered_left_path)

    def compare(self, level: Level, ctx: DiffContext) -> tuple[bool, float]:
        raise NotImplementedError


def apply_operators(level: Level, ctx: DiffContext) -> float | None:
    """Consult registered operators in order for one comparison.

    The first matching operator that handles the pair wins; its score is
    clamped to [0, 1].  Returns None when no operator claims the pair.
    """
    operators = ctx.config.effective_operators
    if not operators:
        return None
    rendered = render_path(level.left_path)
    for operator in operators:
        if not operator.matches(rendered):
            continue
        try:
            handled, score = operator.compare(level, ctx)
        except OperatorError:
            raise
        except Exception as exc:
            raise OperatorError(
                f"operator {operator.name!r} failed at path {rendered!r}: {exc}"
            ) from exc
        if handled:
            return min(1.0, max(0.0, float(score)))
    return None


class IgnoreOperator(Operator):
    """Scores matching pairs 1 and reports nothing, excluding the subtree
    from the comparison.  Falls through when either side is missing."""

    name = "ignore"

    def __init__(self, path_regex: str | PathRule):
        super().__init__(
            path_regex
            if isinstance(path_regex, PathRule)
            else PathRule(path_regex, kind="ignore")
        )

    def compare(self, level: Level, ctx: DiffContext) -> tuple[bool, float]:
        if level.left is MISSING or level.right is MISSING:
            return False, 0.0
        return True, 1.0


class UnorderedOperator(Operator):
    """Compares matching arrays as sets, overriding the global mode.

    Non-array pairs fall through to the default dispatch.
    """

    name = "unordered"

    def __init__(self, path_regex: str | PathRule, fuzzy: bool = False, name: str | None = None):
        super().__init__(
            path_regex
            if isinstance(path_regex, PathRule)
            else PathRule(path_regex, kind="unordered"),
            name=name,
        )
        self.fuzzy = fuzzy

    def compare(self, level: Level, ctx: DiffContext) -> tuple[bool, float]:
        if json_type(level.left) is not JsonType.ARRAY:
            return False, 0.0
        if json_type(level.right) is not JsonType.ARRAY:
            return False, 0.0
        mode = matching.MatchMode(ordered=False, fuzzy=self.fuzzy)
        score = matching.array_similarity(
            level.left, level.right, mode, ctx, level.left_path, level.right_path
        )
        return True, score


class L2DistanceOperator(Operator):
    """Scores ``{x, y}`` points by Euclidean distance: 1 when the distance
    is under the threshold, else 0.  Reports an event with the measured
    distance, the threshold, and the verdict."""

    name = "l2-distance"

    def __init__(self, path_regex: str | PathRule, distance_threshold: float, name: str | None = None):
        super().__init__(path_regex, name=name)
        self.distance_threshold = distance_threshold

    def compare(self, level: Level, ctx: DiffContext) -> tuple[bool, float]:
        if level.left is MISSING or level.right is MISSING:
            return False, 0.0
        distance = math.sqrt(
            (level.left["x"] - level.right["x"]) ** 2
            + (level.left["y"] - level.right["y"]) ** 2
        )
        info = {
            "distance": distance,
            "distance_threshold": self.distance_threshold,
            "pass": distance < self.distance_threshold,
        }
        ctx.report(self.name, level, info)
        return True, 1.0 if info["pass"] else 0.0


class StringEditDistanceOperator(Operator):
    """Scores matching strings by normalized edit distance:
    ``1 - distance / max(len)``; two empty strings score 1.

    Non-string pairs fall through.  Unequal strings report an event with
    the raw distance and the resulting score.
    """

    name = "string-edit-distance"

    def compare(self, level: Level, ctx: DiffContext) -> tuple[bool, float]:
        if not isinstance(level.left, str) or not isinstance(level.right, str):
            return False, 0.0
        if not level.left and not level.right:
            return True, 1.0
        distance = levenshtein(level.left, level.right)
        score = 1.0 - distance / max(len(level.left), len(level.right))
        if score < 1.0:
            ctx.report(self.name, level, {"edit_distance": distance, "score": score})
        return True, score


def levenshtein(a: str, b: str) -> int:
    """Minimum number of single-character edits turning ``a`` into ``b``."""
    if len(a) < len(b):
        a, b = b, a
    previous = list(range(len(b) + 1))
    for i, char_a in enumerate(a, start=1):
        current = [i]
        for j, char_b in enumerate(b, start=1):
            current.append(
                min(
                    previous[j] + 1,
                    current[j - 1] + 1,
                    previous[j - 1] + (char_a != char_b),
                )
            )
        previous = current
    return previous[-1]


def build_operator(name: str, path_regex: str, params: dict | None = None) -> Operator:
    """Instantiate a built-in operator from a configuration binding.

    ``params`` may carry an ``event`` key to rename the operator (and its
    event category); remaining keys are operator-specific and validated.
    """
    params = dict(params or {})
    event = params.pop("event", None)
    if name == "ignore":
        operator: Operator = IgnoreOperator(path_regex)
    elif name == "unordered":
        fuzzy = params.pop("fuzzy", False)
        if not isinstance(fuzzy, bool):
            raise ValueError("unordered operator parameter 'fuzzy' must be a boolean")
        operator = UnorderedOperator(path_regex, fuzzy=fuzzy)
    elif name == "l2_distance":
        if "distance_threshold" not in params:
            raise ValueError("l2_distance operator requires parameter 'distance_threshold'")
        threshold = params.pop("distance_threshold")
        if isinstance(threshold, bool) or not isinstance(threshold, (int, float)):
            raise ValueError("l2_distance parameter 'distance_threshold' must be a number")
        operator = L2DistanceOperator(path_regex, threshold)
    elif name == "string_edit_distance":
        operator = StringEditDistanceOperator(path_regex)
    else:
        raise ValueError(f"unknown built-in operator {name!r}")
    if params:
        raise ValueError(f"unexpected parameters for operator {name!r}: {sorted(params)}")
    if event is not None:
        operator.name = str(event)
    return operator
