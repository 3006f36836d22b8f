"""JSON document model: values, arrow-notation paths, and path regex rules.

Documents are held as plain Python values (``dict``/``list``/``str``/
``int``/``float``/``bool``/``None``).  A dedicated ``MISSING`` sentinel
stands in for a value that does not exist on one side of a comparison;
it never appears inside a document.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Union

Segment = Union[str, int]


class JsonType(Enum):
    STRING = "string"
    NUMBER = "number"
    BOOLEAN = "boolean"
    NULL = "null"
    OBJECT = "object"
    ARRAY = "array"
    MISSING = "missing"


class _Missing:
    """Sentinel for a non-existing value; compares only by identity."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "MISSING"


MISSING = _Missing()


def json_type(value: Any) -> JsonType:
    """Classify a Python value as one of the JSON value kinds.

    ``bool`` is checked before the numeric kinds: ``True``/``False`` are
    booleans, never numbers.
    """
    if value is MISSING:
        return JsonType.MISSING
    if isinstance(value, bool):
        return JsonType.BOOLEAN
    if isinstance(value, (int, float)):
        return JsonType.NUMBER
    if isinstance(value, str):
        return JsonType.STRING
    if value is None:
        return JsonType.NULL
    if isinstance(value, dict):
        return JsonType.OBJECT
    if isinstance(value, list):
        return JsonType.ARRAY
    raise TypeError(f"not a JSON value: {type(value).__name__}")


class JsonParseError(ValueError):
    """Malformed JSON text or a duplicate key inside one object."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        super().__init__(message)
        self.line = line
        self.column = column


def _reject_duplicate_keys(pairs):
    obj = {}
    for key, value in pairs:
        if key in obj:
            raise JsonParseError(f"duplicate object key {key!r}")
        obj[key] = value
    return obj


def parse_json(text: str) -> Any:
    """Parse JSON text into a document value.

    Raises :class:`JsonParseError` with line/column context on malformed
    input, and rejects objects that repeat a key.
    """
    try:
        return json.loads(text, object_pairs_hook=_reject_duplicate_keys)
    except JsonParseError:
        raise
    except json.JSONDecodeError as exc:
        raise JsonParseError(
            f"{exc.msg} (line {exc.lineno}, column {exc.colno})", exc.lineno, exc.colno
        ) from exc
    except RecursionError:
        raise JsonParseError("document nesting is too deep to parse") from None


def serialize_json(value: Any, indent: int | None = None) -> str:
    """Serialize a document value back to JSON text (key order preserved)."""
    return json.dumps(value, ensure_ascii=False, indent=indent)


@dataclass(frozen=True)
class JsonPath:
    """Address of a node: a sequence of object keys and array indices."""

    segments: tuple[Segment, ...] = ()

    def child(self, segment: Segment) -> "JsonPath":
        return JsonPath(self.segments + (segment,))

    def render(self) -> str:
        return render_path(self)

    def __len__(self) -> int:
        return len(self.segments)

    def __str__(self) -> str:
        return render_path(self)


ROOT = JsonPath()


def render_path(path: JsonPath) -> str:
    """Render a path in arrow notation: keys joined by ``->``, indices as ``[i]``.

    The root path renders as the empty string.  Keys that themselves
    contain ``->`` or look like ``[i]`` are rendered verbatim, so rendering
    is injective only for keys free of those tokens.
    """
    return "->".join(
        f"[{seg}]" if isinstance(seg, int) else seg for seg in path.segments
    )


class PathExpressionError(ValueError):
    """Malformed arrow-notation path expression."""


_WILDCARD = object()
_INDEX_TOKEN = re.compile(r"\[(\d+)\]\Z")


def _parse_expression(expression: str) -> list:
    if expression == "":
        return []
    tokens = []
    for part in expression.split("->"):
        if part == "":
            raise PathExpressionError(f"empty segment in path expression {expression!r}")
        if part == "[*]":
            tokens.append(_WILDCARD)
            continue
        m = _INDEX_TOKEN.match(part)
        tokens.append(int(m.group(1)) if m else part)
    return tokens


def resolve_path(root: Any, expression: str) -> list[tuple[JsonPath, Any]]:
    """Resolve an arrow-notation expression against a document.

    ``[*]`` fans out over every element of an array.  Returns all matching
    ``(path, value)`` pairs in document order; an expression that points at
    nothing yields an empty list.
    """
    tokens = _parse_expression(expression)
    matches: list[tuple[JsonPath, Any]] = [(ROOT, root)]
    for token in tokens:
        advanced: list[tuple[JsonPath, Any]] = []
        for path, value in matches:
            if token is _WILDCARD:
                if isinstance(value, list):
                    advanced.extend(
                        (path.child(i), item) for i, item in enumerate(value)
                    )
            elif isinstance(token, int):
                if isinstance(value, list) and token < len(value):
                    advanced.append((path.child(token), value[token]))
            else:
                if isinstance(value, dict) and token in value:
                    advanced.append((path.child(token), value[token]))
        matches = advanced
    return matches


class PathRuleError(ValueError):
    """A path rule's regular expression does not compile."""


@dataclass(frozen=True)
class PathRule:
    """A regex over rendered path strings, matched against the full string."""

    pattern: str
    kind: str = "operator-binding"
    regex: re.Pattern = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        try:
            compiled = re.compile(self.pattern)
        except re.error as exc:
            raise PathRuleError(
                f"invalid {self.kind} pattern {self.pattern!r}: {exc}"
            ) from exc
        object.__setattr__(self, "regex", compiled)


def path_matches(rule: PathRule, rendered: str) -> bool:
    """True iff the rule's regex matches the whole rendered path string."""
    return rule.regex.fullmatch(rendered) is not None
