"""Structural JSON diff with configurable array matching and
path-scoped similarity operators."""

from .engine import DiffConfig, DiffResult, diff, serialize_result
from .matching import (
    ORDERED_EXACT,
    ORDERED_FUZZY,
    UNORDERED_EXACT,
    UNORDERED_FUZZY,
    IndexPair,
    MatchMode,
    array_similarity,
    array_similarity_helper,
    backtrack_edit_alignment,
    backtrack_lcs,
    brute_force_matching,
    edit_alignment_table,
    hungarian,
    lcs_table,
    record_array_outcome,
    unordered_fuzzy_matching,
)
from .model import (
    MISSING,
    JsonParseError,
    JsonPath,
    JsonType,
    PathExpressionError,
    PathRule,
    PathRuleError,
    json_type,
    parse_json,
    path_matches,
    render_path,
    resolve_path,
    serialize_json,
)
from .operators import (
    IgnoreOperator,
    L2DistanceOperator,
    Operator,
    OperatorError,
    StringEditDistanceOperator,
    UnorderedOperator,
    apply_operators,
    build_operator,
    levenshtein,
)
from .similarity import (
    ChangeEvent,
    DepthLimitError,
    DiffContext,
    EventRecorder,
    Level,
    PairRecord,
    object_similarity,
    primitive_similarity,
    similarity,
)

__all__ = [
    "DiffConfig",
    "DiffResult",
    "diff",
    "serialize_result",
    "MatchMode",
    "ORDERED_EXACT",
    "ORDERED_FUZZY",
    "UNORDERED_EXACT",
    "UNORDERED_FUZZY",
    "IndexPair",
    "array_similarity",
    "array_similarity_helper",
    "lcs_table",
    "backtrack_lcs",
    "edit_alignment_table",
    "backtrack_edit_alignment",
    "brute_force_matching",
    "hungarian",
    "unordered_fuzzy_matching",
    "record_array_outcome",
    "MISSING",
    "JsonParseError",
    "JsonPath",
    "JsonType",
    "PathExpressionError",
    "PathRule",
    "PathRuleError",
    "json_type",
    "parse_json",
    "path_matches",
    "render_path",
    "resolve_path",
    "serialize_json",
    "Operator",
    "OperatorError",
    "IgnoreOperator",
    "UnorderedOperator",
    "L2DistanceOperator",
    "StringEditDistanceOperator",
    "apply_operators",
    "build_operator",
    "levenshtein",
    "ChangeEvent",
    "DepthLimitError",
    "DiffContext",
    "EventRecorder",
    "Level",
    "PairRecord",
    "object_similarity",
    "primitive_similarity",
    "similarity",
]
