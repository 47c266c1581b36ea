"""Recognition of uniquely pressable pseudo-graphs.

A graph has exactly one successful pressing sequence iff, after
stripping loopless isolated vertices, a single non-trivial component
remains and the Cholesky root taken under the greedy pressing order
satisfies four structural properties of its columns:

1. the ones in each column are consecutive and end at the diagonal;
2. the column weights are nondecreasing and start at exactly 1;
3. a weight above 2 must grow within two columns;
4. a non-initial column of odd weight must be full (weight equal to its
   index), and so must every column to its right.

Everything runs on packed bit rows, so recognition is O(n^3 / w) word
operations for an n-vertex graph.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf2 import BitMatrix, iter_support
from .graphs import PseudoGraph
from .cholesky import (
    UnpressableError,
    find_pressing_order,
    instructional_root,
)

__all__ = [
    "PropertyReport",
    "RecognitionReport",
    "OracleBoundError",
    "REASON_MULTI_COMPONENT",
    "REASON_UNPRESSABLE",
    "REASON_TIE",
    "check_properties",
    "recognize",
    "count_sequences_bruteforce",
    "pressing_length",
]

REASON_MULTI_COMPONENT = "MULTI_COMPONENT"
REASON_UNPRESSABLE = "UNPRESSABLE"
REASON_TIE = "TIE"


class OracleBoundError(ValueError):
    """The graph exceeds the configured brute-force size bound."""


@dataclass(frozen=True)
class PropertyReport:
    """Outcome of the four column checks on an upper-triangular root.

    Each ``failN`` is the first witness column (1-based) when property N
    fails, else None.  ``column_weights`` are the integer column sums.
    """

    prop1: bool
    prop2: bool
    prop3: bool
    prop4: bool
    fail1: int | None
    fail2: int | None
    fail3: int | None
    fail4: int | None
    column_weights: tuple[int, ...]

    @property
    def all_pass(self) -> bool:
        return self.prop1 and self.prop2 and self.prop3 and self.prop4

    def first_failure(self) -> tuple[int, int] | None:
        """Lowest failing property number with its witness column."""
        for num, ok, col in (
            (1, self.prop1, self.fail1),
            (2, self.prop2, self.fail2),
            (3, self.prop3, self.fail3),
            (4, self.prop4, self.fail4),
        ):
            if not ok:
                assert col is not None
                return num, col
        return None


def check_properties(u: BitMatrix) -> PropertyReport:
    """Check the four membership properties of an upper-triangular matrix."""
    if not u.is_upper_triangular():
        raise ValueError("matrix must be upper-triangular")
    n = u.n
    # One top-down row scan: count column weights, and track the columns
    # whose run of ones has started but not yet reached the diagonal.  A
    # started column missing from the current row breaks property 1, and
    # so does one that resumes after its diagonal (impossible here since
    # the input is upper-triangular).
    w = [0] * n
    active = 0
    broken = 0
    for i, r in enumerate(u.row_bits):
        broken |= active & ~r
        active = (active | r) & ~(1 << i)
        x = r
        while x:
            low = x & -x
            x ^= low
            w[low.bit_length() - 1] += 1
    fail1 = (broken & -broken).bit_length() if broken else None

    fail2 = None
    if n and w[0] != 1:
        fail2 = 1
    else:
        for j in range(1, n):
            if w[j] < w[j - 1]:
                fail2 = j + 1
                break

    fail3 = None
    for i in range(n - 2):
        if w[i] > 2 and w[i + 2] <= w[i]:
            fail3 = i + 3
            break

    fail4 = None
    for j in range(1, n):
        if w[j] & 1:
            for t in range(j, n):
                if w[t] != t + 1:
                    fail4 = t + 1
                    break
            break

    return PropertyReport(
        prop1=fail1 is None,
        prop2=fail2 is None,
        prop3=fail3 is None,
        prop4=fail4 is None,
        fail1=fail1,
        fail2=fail2,
        fail3=fail3,
        fail4=fail4,
        column_weights=tuple(w),
    )


@dataclass(frozen=True)
class RecognitionReport:
    """Verdict of the unique-pressability pipeline.

    On yes, ``sequence`` is the unique successful pressing sequence in
    original labels.  On no, ``reason`` is one of the stable codes
    MULTI_COMPONENT, UNPRESSABLE (greedy pressing stalled with edges
    left), TIE, or PROP1..PROP4 (the latter with ``column`` as the
    witness).  ``stripped`` lists the loopless isolated vertices
    removed before the pipeline ran.
    """

    verdict: bool
    sequence: tuple[int, ...] | None = None
    reason: str | None = None
    column: int | None = None
    stripped: tuple[int, ...] = ()

    def to_text(self) -> str:
        lines = [f"verdict: {'yes' if self.verdict else 'no'}"]
        if self.verdict:
            assert self.sequence is not None
            lines.append(
                ("sequence: " + " ".join(map(str, self.sequence))).rstrip()
            )
        else:
            detail = self.reason or "UNKNOWN"
            if self.column is not None:
                detail += f" col {self.column}"
            lines.append(f"reason: {detail}")
        if self.stripped:
            lines.append("stripped: " + " ".join(map(str, self.stripped)))
        return "\n".join(lines) + "\n"


def _permuted_adjacency(g: PseudoGraph, order: tuple[int, ...]) -> BitMatrix:
    """Adjacency of g with vertices reindexed to the given label order."""
    pos = {lab: i for i, lab in enumerate(g.labels)}
    src_rows = g.adjacency_matrix().row_bits
    perm = [pos[lab] for lab in order]
    inv = [0] * len(perm)
    for t, p in enumerate(perm):
        inv[p] = t
    out = []
    for t in range(len(perm)):
        bits = 0
        for j in iter_support(src_rows[perm[t]]):
            bits |= 1 << inv[j - 1]
        out.append(bits)
    return BitMatrix(len(perm), tuple(out))


def recognize(g: PseudoGraph) -> RecognitionReport:
    """Decide whether g has exactly one successful pressing sequence.

    Loopless isolated vertices are stripped first.  More than one
    non-trivial component, a stalled greedy order, or a greedy tie are
    immediate rejections (each impossible for a uniquely pressable
    graph); otherwise the root under the greedy order is checked
    against the four column properties.
    """
    comps = g.components()
    stripped = tuple(
        sorted(lab for c in comps if c.trivial for lab in c.labels)
    )
    nontrivial = [c for c in comps if not c.trivial]
    if len(nontrivial) > 1:
        return RecognitionReport(
            False, reason=REASON_MULTI_COMPONENT, stripped=stripped
        )
    if not nontrivial:
        return RecognitionReport(True, sequence=(), stripped=stripped)
    core = g.induced(nontrivial[0].labels)
    try:
        greedy = find_pressing_order(core)
    except UnpressableError:
        return RecognitionReport(
            False, reason=REASON_UNPRESSABLE, stripped=stripped
        )
    if greedy.first_tie is not None:
        return RecognitionReport(False, reason=REASON_TIE, stripped=stripped)
    seq = greedy.permutation
    rest = tuple(sorted(set(core.labels) - set(seq)))
    full_order = seq + rest
    root = instructional_root(
        _permuted_adjacency(core, full_order), order=full_order
    )
    report = check_properties(root.matrix)
    failure = report.first_failure()
    if failure is None:
        return RecognitionReport(True, sequence=seq, stripped=stripped)
    num, col = failure
    return RecognitionReport(
        False, reason=f"PROP{num}", column=col, stripped=stripped
    )


def count_sequences_bruteforce(g: PseudoGraph, bound: int = 10) -> int:
    """Exact number of successful pressing sequences, by exhaustive DFS.

    Every press choice is explored at every state; states reached more
    than once are counted through a memo on the packed adjacency rows.
    Exponential in the worst case, hence the size bound.
    """
    if g.n > bound:
        raise OracleBoundError(
            f"graph has {g.n} vertices, oracle bound is {bound}"
        )
    n = g.n
    memo: dict[tuple[int, ...], int] = {}

    def count(state: tuple[int, ...]) -> int:
        if not any(state):
            return 1
        cached = memo.get(state)
        if cached is not None:
            return cached
        total = 0
        for v in range(n):
            if (state[v] >> v) & 1:
                nxt = list(state)
                piv = state[v]
                x = piv
                while x:
                    low = x & -x
                    i = low.bit_length() - 1
                    x ^= low
                    if i != v:
                        nxt[i] ^= piv
                nxt[v] = 0
                total += count(tuple(nxt))
        memo[state] = total
        return total

    return count(tuple(g.adjacency_matrix().row_bits))


def pressing_length(g: PseudoGraph) -> int:
    """Length shared by every successful pressing sequence of g.

    Raises UnpressableError when no successful sequence exists.
    """
    return len(find_pressing_order(g).permutation)
