"""Command-line front end: diff two JSON documents and report the outcome.

Exit codes: 0 the documents are identical, 1 they differ, 2 usage/IO/
parse/configuration error, 3 operator or internal error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .engine import DiffConfig, DiffResult, diff, serialize_result
from .matching import MatchMode
from .model import JsonParseError, PathRuleError, parse_json
from .operators import OperatorError, build_operator
from .similarity import DepthLimitError

EXIT_IDENTICAL = 0
EXIT_DIFFERENT = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

MODE_NAMES = ("ordered-exact", "ordered-fuzzy", "unordered-exact", "unordered-fuzzy")

CONFIG_KEYS = {"default_mode", "pair_threshold", "ignore", "unordered", "operators"}


class CliError(Exception):
    """User-facing failure mapped to exit code 2."""


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jdiff",
        description="Structural diff of two JSON documents.",
    )
    parser.add_argument("left", help="left document ('-' for standard input)")
    parser.add_argument("right", help="right document ('-' for standard input)")
    parser.add_argument("--config", metavar="FILE", help="JSON configuration file")
    parser.add_argument("--out", metavar="FILE", help="write the diff result JSON here")
    parser.add_argument("--mode", choices=MODE_NAMES, help="default array match mode")
    parser.add_argument(
        "--ignore",
        metavar="REGEX",
        action="append",
        help="ignore nodes whose path matches (repeatable)",
    )
    parser.add_argument(
        "--unordered",
        metavar="REGEX",
        action="append",
        help="compare matching arrays as sets (repeatable; fuzziness follows --mode)",
    )
    parser.add_argument(
        "--threshold", type=float, help="pair-acceptance threshold for fuzzy matching"
    )
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument(
        "--summary",
        dest="summary",
        action="store_true",
        default=True,
        help="print a summary to stdout (default)",
    )
    verbosity.add_argument(
        "--quiet", dest="summary", action="store_false", help="print nothing to stdout"
    )
    return parser


def load_config_file(path: str) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot read config file {path}: {exc}") from exc
    try:
        data = parse_json(text)
    except JsonParseError as exc:
        raise CliError(f"config file {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise CliError(f"config file {path}: expected a JSON object")
    unknown = set(data) - CONFIG_KEYS
    if unknown:
        raise CliError(f"config file {path}: unknown keys {sorted(unknown)}")
    return data


def _config_from(args: argparse.Namespace) -> DiffConfig:
    data = load_config_file(args.config) if args.config else {}

    mode_name = args.mode or data.get("default_mode", "ordered-exact")
    try:
        mode = MatchMode.from_name(mode_name)
    except ValueError as exc:
        raise CliError(str(exc)) from exc

    threshold = args.threshold if args.threshold is not None else data.get("pair_threshold", 0.5)
    if isinstance(threshold, bool) or not isinstance(threshold, (int, float)):
        raise CliError("pair_threshold must be a number")

    if args.ignore is not None:
        ignore = list(args.ignore)
    else:
        ignore = data.get("ignore", [])
        if not isinstance(ignore, list) or not all(isinstance(p, str) for p in ignore):
            raise CliError("config key 'ignore' must be an array of regex strings")

    if args.unordered is not None:
        unordered: list = list(args.unordered)
    else:
        unordered = []
        entries = data.get("unordered", [])
        if not isinstance(entries, list):
            raise CliError("config key 'unordered' must be an array")
        for entry in entries:
            if (
                not isinstance(entry, dict)
                or set(entry) != {"path_regex", "fuzzy"}
                or not isinstance(entry.get("path_regex"), str)
                or not isinstance(entry.get("fuzzy"), bool)
            ):
                raise CliError(
                    "config key 'unordered' entries must be {\"path_regex\": str, \"fuzzy\": bool}"
                )
            unordered.append((entry["path_regex"], entry["fuzzy"]))

    operators = []
    bindings = data.get("operators", [])
    if not isinstance(bindings, list):
        raise CliError("config key 'operators' must be an array")
    for binding in bindings:
        if not isinstance(binding, dict) or not {"name", "path_regex"} <= set(binding):
            raise CliError(
                "operator bindings must be {\"name\": str, \"path_regex\": str, \"params\": object}"
            )
        extra = set(binding) - {"name", "path_regex", "params"}
        if extra:
            raise CliError(f"operator binding has unknown keys {sorted(extra)}")
        try:
            operators.append(
                build_operator(binding["name"], binding["path_regex"], binding.get("params"))
            )
        except ValueError as exc:
            raise CliError(str(exc)) from exc

    try:
        return DiffConfig(
            default_array_mode=mode,
            pair_threshold=float(threshold),
            ignore=ignore,
            unordered=unordered,
            operators=operators,
        )
    except (ValueError, PathRuleError) as exc:
        raise CliError(str(exc)) from exc


def _read_document(source: str):
    if source == "-":
        try:
            text = sys.stdin.read()
        except OSError as exc:
            raise CliError(f"cannot read standard input: {exc}") from exc
        label = "<stdin>"
    else:
        try:
            text = Path(source).read_text(encoding="utf-8")
        except OSError as exc:
            raise CliError(str(exc)) from exc
        label = source
    try:
        return parse_json(text)
    except JsonParseError as exc:
        raise CliError(f"{label}: {exc}") from exc


def _print_summary(result: DiffResult) -> None:
    state = "identical" if result.identical else "different"
    print(f"similarity {result.similarity:.3f}, {state}, {result.event_count} events")
    for category in sorted(result.events):
        print(f"  {category}: {len(result.events[category])}")


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_IDENTICAL if exc.code in (0, None) else EXIT_USAGE

    try:
        if args.left == "-" and args.right == "-":
            raise CliError("at most one document may come from standard input")
        config = _config_from(args)
        left = _read_document(args.left)
        right = _read_document(args.right)
    except CliError as exc:
        print(f"jdiff: error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    try:
        result = diff(left, right, config)
        payload = serialize_result(result)
    except (OperatorError, DepthLimitError) as exc:
        print(f"jdiff: error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as exc:  # unexpected engine failure, still one diagnostic line
        print(f"jdiff: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL

    if args.out:
        try:
            Path(args.out).write_text(payload, encoding="utf-8")
        except OSError as exc:
            print(f"jdiff: error: {exc}", file=sys.stderr)
            return EXIT_USAGE
    if args.summary:
        _print_summary(result)
    return EXIT_IDENTICAL if result.identical else EXIT_DIFFERENT


def main() -> None:
    sys.exit(run(sys.argv[1:]))
