"""Array pairing strategies: ordered/unordered crossed with exact/fuzzy.

Ordered-exact keeps the longest common subsequence, ordered-fuzzy aligns
elements by maximum summed similarity, unordered-exact greedily pairs
equal elements, and unordered-fuzzy solves an assignment problem over
the full similarity matrix.  Every strategy returns injective index
pairs; a shared helper then scores the arrays and records the outcome.
"""
from __future__ import annotations

from dataclasses import dataclass

from .model import ROOT, JsonPath, render_path
from .similarity import (
    ARRAY_ADD,
    ARRAY_REMOVE,
    DiffContext,
    PairRecord,
    record_event,
    similarity,
)

DpTable = list  # list[list[float]]


@dataclass(frozen=True)
class MatchMode:
    """Array comparison regime: does element order matter, and may
    partially similar elements pair up."""

    ordered: bool = True
    fuzzy: bool = False

    @property
    def name(self) -> str:
        return ("ordered" if self.ordered else "unordered") + (
            "-fuzzy" if self.fuzzy else "-exact"
        )

    @classmethod
    def from_name(cls, name: str) -> "MatchMode":
        try:
            order_part, match_part = name.split("-")
            return cls(
                ordered={"ordered": True, "unordered": False}[order_part],
                fuzzy={"exact": False, "fuzzy": True}[match_part],
            )
        except (ValueError, KeyError):
            raise ValueError(f"unknown match mode {name!r}") from None


ORDERED_EXACT = MatchMode(ordered=True, fuzzy=False)
ORDERED_FUZZY = MatchMode(ordered=True, fuzzy=True)
UNORDERED_EXACT = MatchMode(ordered=False, fuzzy=False)
UNORDERED_FUZZY = MatchMode(ordered=False, fuzzy=True)


@dataclass(frozen=True)
class IndexPair:
    left_index: int
    right_index: int
    score: float


def _phi(
    left: list,
    right: list,
    i: int,
    j: int,
    ctx: DiffContext,
    left_path: JsonPath,
    right_path: JsonPath,
) -> float:
    # exploratory element comparison: never records anything
    return similarity(
        left[i], right[j], left_path.child(i), right_path.child(j), ctx.drilled()
    )


def lcs_table(
    left: list,
    right: list,
    ctx: DiffContext,
    left_path: JsonPath = ROOT,
    right_path: JsonPath = ROOT,
) -> DpTable:
    """Longest-common-subsequence table; elements count as common when
    their similarity is exactly 1."""
    n, m = len(left), len(right)
    table = [[0] * (m + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            if _phi(left, right, i - 1, j - 1, ctx, left_path, right_path) == 1.0:
                table[i][j] = table[i - 1][j - 1] + 1
            else:
                table[i][j] = max(table[i - 1][j], table[i][j - 1])
    return table


def backtrack_lcs(
    left: list,
    right: list,
    table: DpTable,
    ctx: DiffContext,
    left_path: JsonPath = ROOT,
    right_path: JsonPath = ROOT,
) -> list[IndexPair]:
    """Recover one longest common subsequence as index pairs.

    When skipping either side preserves the optimum, the left index is
    decremented first; pairs come back strictly increasing on both sides.
    """
    pairs: list[IndexPair] = []
    i, j = len(left), len(right)
    while i > 0 and j > 0:
        if _phi(left, right, i - 1, j - 1, ctx, left_path, right_path) == 1.0:
            pairs.append(IndexPair(i - 1, j - 1, 1.0))
            i -= 1
            j -= 1
        elif table[i - 1][j] >= table[i][j - 1]:
            i -= 1
        else:
            j -= 1
    pairs.reverse()
    return pairs


def edit_alignment_table(
    left: list,
    right: list,
    ctx: DiffContext,
    left_path: JsonPath = ROOT,
    right_path: JsonPath = ROOT,
) -> DpTable:
    """Order-preserving alignment table, filled back to front.

    Cell (x, y) holds the maximum total similarity obtainable from the
    suffixes starting at x and y; cell (0, 0) is the optimum for the whole
    arrays.  The last row and column stay zero as the base case.
    """
    n, m = len(left), len(right)
    table = [[0.0] * (m + 1) for _ in range(n + 1)]
    for x in range(n - 1, -1, -1):
        for y in range(m - 1, -1, -1):
            table[x][y] = max(
                table[x + 1][y],
                table[x][y + 1],
                _phi(left, right, x, y, ctx, left_path, right_path)
                + table[x + 1][y + 1],
            )
    return table


def backtrack_edit_alignment(
    left: list,
    right: list,
    table: DpTable,
    ctx: DiffContext,
    left_path: JsonPath = ROOT,
    right_path: JsonPath = ROOT,
) -> list[IndexPair]:
    """Walk the alignment table from (0, 0), emitting the paired indices.

    Skipping the left element is preferred, then skipping the right one,
    then pairing diagonally.  Pairs with zero similarity are dropped: such
    elements are reported as a removal plus an addition instead.
    """
    n, m = len(left), len(right)
    pairs: list[IndexPair] = []
    i = j = 0
    while i + j < n + m:
        current = table[i][j]
        skip_left = table[i + 1][j] if i < n else 0.0
        skip_right = table[i][j + 1] if j < m else 0.0
        if current == skip_left and i < n:
            i += 1
            continue
        if current == skip_right and j < m:
            j += 1
            continue
        score = _phi(left, right, i, j, ctx, left_path, right_path)
        if score > 0.0:
            pairs.append(IndexPair(i, j, score))
        i += 1
        j += 1
    return pairs


def brute_force_matching(
    left: list,
    right: list,
    ctx: DiffContext,
    left_path: JsonPath = ROOT,
    right_path: JsonPath = ROOT,
) -> list[IndexPair]:
    """Pair equal elements irrespective of position.

    Scans left elements in order and gives each the first unconsumed right
    element with similarity 1, so every element pairs at most once.
    """
    pairs: list[IndexPair] = []
    consumed: set[int] = set()
    for i in range(len(left)):
        for j in range(len(right)):
            if j in consumed:
                continue
            if _phi(left, right, i, j, ctx, left_path, right_path) == 1.0:
                pairs.append(IndexPair(i, j, 1.0))
                consumed.add(j)
                break
    return pairs


def hungarian(cost_matrix: list[list[float]]) -> list[tuple[int, int]]:
    """Minimum-cost assignment over a rectangular cost matrix.

    Returns ``min(rows, cols)`` (row, col) pairs sorted by row.  A
    rectangular input is padded to a square with zero-cost slots; pairs
    that land on padding are dropped.  Among equal-cost optima the result
    prefers the lowest column for the lowest row.
    """
    n_rows = len(cost_matrix)
    n_cols = len(cost_matrix[0]) if n_rows else 0
    if n_rows == 0 or n_cols == 0:
        return []
    size = max(n_rows, n_cols)
    padded = [
        [
            float(cost_matrix[i][j]) if i < n_rows and j < n_cols else 0.0
            for j in range(size)
        ]
        for i in range(size)
    ]

    # shortest-augmenting-path scheme over row/column potentials;
    # match_col[j] is the 1-based row owning column j, 0 when free
    inf = float("inf")
    row_potential = [0.0] * (size + 1)
    col_potential = [0.0] * (size + 1)
    match_col = [0] * (size + 1)
    trail = [0] * (size + 1)
    for row in range(1, size + 1):
        match_col[0] = row
        j0 = 0
        min_reduced = [inf] * (size + 1)
        visited = [False] * (size + 1)
        while True:
            visited[j0] = True
            row0 = match_col[j0]
            delta = inf
            j_next = 0
            for j in range(1, size + 1):
                if visited[j]:
                    continue
                reduced = padded[row0 - 1][j - 1] - row_potential[row0] - col_potential[j]
                if reduced < min_reduced[j]:
                    min_reduced[j] = reduced
                    trail[j] = j0
                if min_reduced[j] < delta:
                    delta = min_reduced[j]
                    j_next = j
            for j in range(size + 1):
                if visited[j]:
                    row_potential[match_col[j]] += delta
                    col_potential[j] -= delta
                else:
                    min_reduced[j] -= delta
            j0 = j_next
            if match_col[j0] == 0:
                break
        while j0:
            previous = trail[j0]
            match_col[j0] = match_col[previous]
            j0 = previous

    assignment = [0] * size
    for j in range(1, size + 1):
        assignment[match_col[j] - 1] = j - 1
    _prefer_low_indices(padded, assignment, n_rows, n_cols)
    pairs = [(i, assignment[i]) for i in range(n_rows) if assignment[i] < n_cols]
    pairs.sort()
    return pairs


def _prefer_low_indices(
    padded: list[list[float]], assignment: list[int], n_rows: int, n_cols: int
) -> None:
    """Swap equal-cost pairs so low rows take low columns.

    Padding slots rank after every real column, so a real row prefers any
    real column over staying unassigned.  Each swap strictly improves the
    assignment's index ordering, so the sweep terminates.
    """
    size = len(assignment)

    def rank(row: int, col: int) -> int:
        return col if row < n_rows and col < n_cols else size

    changed = True
    while changed:
        changed = False
        for a in range(size):
            for b in range(a + 1, size):
                col_a, col_b = assignment[a], assignment[b]
                if (
                    padded[a][col_a] + padded[b][col_b]
                    != padded[a][col_b] + padded[b][col_a]
                ):
                    continue
                if a < n_rows:
                    better = rank(a, col_b) < rank(a, col_a) or (
                        rank(a, col_b) == rank(a, col_a)
                        and rank(b, col_a) < rank(b, col_b)
                    )
                else:
                    better = b < n_rows and rank(b, col_a) < rank(b, col_b)
                if better:
                    assignment[a], assignment[b] = col_b, col_a
                    changed = True


def unordered_fuzzy_matching(
    left: list,
    right: list,
    ctx: DiffContext,
    left_path: JsonPath = ROOT,
    right_path: JsonPath = ROOT,
) -> list[IndexPair]:
    """Assignment-based pairing over the element similarity matrix.

    The negated similarity matrix is fed to :func:`hungarian`; assignments
    scoring below the configured pair-acceptance threshold are discarded
    so the elements fall back to add/remove reporting.
    """
    if not left or not right:
        return []
    scores = [
        [_phi(left, right, i, j, ctx, left_path, right_path) for j in range(len(right))]
        for i in range(len(left))
    ]
    cost_matrix = [[-value for value in row] for row in scores]
    threshold = ctx.config.pair_threshold
    return [
        IndexPair(i, j, scores[i][j])
        for i, j in hungarian(cost_matrix)
        if scores[i][j] >= threshold
    ]


def array_similarity(
    left: list,
    right: list,
    mode: MatchMode,
    ctx: DiffContext,
    left_path: JsonPath = ROOT,
    right_path: JsonPath = ROOT,
) -> float:
    """Score two arrays under the given match mode."""
    if mode.ordered and not mode.fuzzy:
        table = lcs_table(left, right, ctx, left_path, right_path)
        pairs = backtrack_lcs(left, right, table, ctx, left_path, right_path)
    elif mode.ordered:
        table = edit_alignment_table(left, right, ctx, left_path, right_path)
        pairs = backtrack_edit_alignment(left, right, table, ctx, left_path, right_path)
        threshold = ctx.config.pair_threshold
        pairs = [pair for pair in pairs if pair.score >= threshold]
    elif not mode.fuzzy:
        pairs = brute_force_matching(left, right, ctx, left_path, right_path)
    else:
        pairs = unordered_fuzzy_matching(left, right, ctx, left_path, right_path)
    return array_similarity_helper(left, right, pairs, ctx, left_path, right_path)


def array_similarity_helper(
    left: list,
    right: list,
    pairs: list[IndexPair],
    ctx: DiffContext,
    left_path: JsonPath = ROOT,
    right_path: JsonPath = ROOT,
) -> float:
    """Record the pairing outcome and turn it into a score.

    The score is twice the summed pair similarity over the combined
    length, so a perfect pairing of equal-length arrays scores 1.  Two
    empty arrays are equal by definition.
    """
    if not ctx.drill:
        record_array_outcome(left, right, pairs, ctx, left_path, right_path)
    if not left and not right:
        return 1.0
    total = sum(pair.score for pair in pairs)
    return 2.0 * total / (len(left) + len(right))


def record_array_outcome(
    left: list,
    right: list,
    pairs: list[IndexPair],
    ctx: DiffContext,
    left_path: JsonPath = ROOT,
    right_path: JsonPath = ROOT,
) -> None:
    """Record pair records, add/remove events for unpaired elements, and
    collect the inner events of imperfect pairs."""
    for pair in pairs:
        ctx.recorder.add_pair(
            PairRecord(
                render_path(left_path.child(pair.left_index)),
                render_path(right_path.child(pair.right_index)),
                pair.score,
            )
        )
    paired_left = {pair.left_index for pair in pairs}
    paired_right = {pair.right_index for pair in pairs}
    for i, item in enumerate(left):
        if i not in paired_left:
            record_event(
                ctx, ARRAY_REMOVE, render_path(left_path.child(i)), "", item, None
            )
    for j, item in enumerate(right):
        if j not in paired_right:
            record_event(
                ctx, ARRAY_ADD, "", render_path(right_path.child(j)), None, item
            )
    for pair in pairs:
        if pair.score < 1.0:
            similarity(
                left[pair.left_index],
                right[pair.right_index],
                left_path.child(pair.left_index),
                right_path.child(pair.right_index),
                ctx,
            )
