"""Construction, enumeration, and counting of uniquely pressable graphs.

A "cup" graph here is a Connected Uniquely Pressable graph carrying its
canonical labels: vertex set 1..n, at least one edge, and its single
successful pressing sequence is 1, 2, ..., n in order.  Cup graphs are
closed under two extension maps:

* append a vertex n+1 adjacent to every looped vertex, looped exactly
  when n is even;
* prepend a looped vertex 1 adjacent to every looped vertex, after
  toggling all pairs inside the old looped set (for a cup graph that
  set is a clique with loops, so the toggle erases it).

Every cup graph on n+1 vertices arises from one on n vertices this way,
so breadth-first application of both maps enumerates the class exactly,
and closed-form counts are available.  Root-level versions of the same
maps build a pseudo-random instance in O(n^2) without touching edge
sets.
"""

from __future__ import annotations

import itertools
import multiprocessing
import random
from dataclasses import dataclass
from typing import Iterable

from .gf2 import BitMatrix, transpose_mul
from .graphs import PseudoGraph, from_adjacency
from .recognition import OracleBoundError, recognize

__all__ = [
    "NotUniquelyPressableError",
    "extend_right",
    "extend_left",
    "shift_labels",
    "generate_cup",
    "cup_from_choices",
    "random_cup",
    "cup_count",
    "total_count",
    "all_pseudographs",
    "canonical_form",
    "CensusResult",
    "census",
]


class NotUniquelyPressableError(ValueError):
    """The input graph is not a canonically labeled cup graph."""


def _is_cup_form(g: PseudoGraph) -> bool:
    """True when g is a cup graph under its canonical labels."""
    if g.n == 0 or g.labels != tuple(range(1, g.n + 1)):
        return False
    report = recognize(g)
    return report.verdict and report.sequence == g.labels


def shift_labels(g: PseudoGraph, offset: int = 1) -> PseudoGraph:
    """Relabel every vertex by adding offset (labels must stay positive)."""
    return g.relabel({lab: lab + offset for lab in g.labels})


def extend_right(g: PseudoGraph, check: bool = True) -> PseudoGraph:
    """Grow a cup graph on 1..n into one on 1..n+1, pressed last.

    The new vertex n+1 is joined to every looped vertex of g and gets a
    loop exactly when n is even.  With check=True the input must be a
    cup graph, which guarantees the output is one too.
    """
    n = g.n
    if g.labels != tuple(range(1, n + 1)):
        raise ValueError("labels must be 1..n")
    if check and not _is_cup_form(g):
        raise NotUniquelyPressableError(
            "input is not a canonically labeled uniquely pressable graph"
        )
    new = n + 1
    extra = {(v, new) for v in g.looped_vertices()}
    if n % 2 == 0:
        extra.add((new, new))
    return PseudoGraph(g.labels + (new,), g.edges | extra)


def extend_left(g: PseudoGraph, check: bool = True) -> PseudoGraph:
    """Grow a shifted cup graph on 2..n+1 into one on 1..n+1.

    The input must already carry labels 2..n+1 (see shift_labels).  All
    pairs inside its looped set are toggled, then a new looped vertex 1
    is joined to exactly the vertices that were looped.  Pressing 1 in
    the result restores g, so the new vertex is pressed first.  With
    check=True the input, shifted back down, must be a cup graph.
    """
    n = g.n
    if g.labels != tuple(range(2, n + 2)):
        raise ValueError("labels must be 2..n+1")
    if check and not _is_cup_form(shift_labels(g, -1)):
        raise NotUniquelyPressableError(
            "input is not a shifted canonically labeled uniquely "
            "pressable graph"
        )
    looped = sorted(g.looped_vertices())
    toggle = set(itertools.combinations_with_replacement(looped, 2))
    new_edges = {(1, 1)} | {(1, v) for v in looped}
    return PseudoGraph(
        (1,) + g.labels, (g.edges ^ toggle) | new_edges
    )


def generate_cup(n: int) -> tuple[PseudoGraph, ...]:
    """All cup graphs on n vertices, sorted by packed adjacency rows.

    Breadth-first closure of the two extension maps starting from the
    single loop; duplicates (the maps can collide) are merged.  For
    n = 0 the empty graph stands alone.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return (PseudoGraph((), frozenset()),)
    current: list[PseudoGraph] = [PseudoGraph((1,), frozenset({(1, 1)}))]
    for _ in range(n - 1):
        seen: dict[frozenset, PseudoGraph] = {}
        for g in current:
            for h in (
                extend_right(g, check=False),
                extend_left(shift_labels(g), check=False),
            ):
                seen[h.edges] = h
        current = list(seen.values())
    current.sort(key=lambda g: g.adjacency_matrix().row_bits)
    return tuple(current)


def cup_from_choices(choices: Iterable[str]) -> PseudoGraph:
    """Cup graph reached from the single loop by a word of extensions.

    Each element of choices is "R" (append a last-pressed vertex) or
    "L" (prepend a first-pressed vertex); len(choices)+1 vertices
    result.  The walk runs on packed upper-triangular root rows with
    incrementally maintained column weights, so it costs O(n^2) total.
    Distinct words may reach the same graph.
    """
    rows = [1]
    weights = [1]
    for step, c in enumerate(choices, start=2):
        if c == "R":
            m = 1 << (step - 1)
            rows = [r | m for r in rows] + [m]
            weights.append(step)
        elif c == "L":
            newrow = 1
            for j, w in enumerate(weights):
                if w & 1:
                    newrow |= 1 << (j + 1)
            rows = [newrow] + [r << 1 for r in rows]
            weights = [1] + [w + (w & 1) for w in weights]
        else:
            raise ValueError(f"choice must be 'L' or 'R', got {c!r}")
    root = BitMatrix(len(rows), tuple(rows))
    return from_adjacency(transpose_mul(root))


def random_cup(n: int, rng: random.Random | None = None) -> PseudoGraph:
    """A pseudo-random cup graph on n vertices (not uniform over them)."""
    if n < 1:
        raise ValueError("n must be positive")
    pick = rng.choice if rng is not None else random.choice
    return cup_from_choices(pick("LR") for _ in range(n - 1))


def cup_count(n: int) -> int:
    """Number of cup graphs on n vertices.

    1 for n <= 2, then 3^((n-2)/2) for even n and 2*3^((n-3)/2) for odd
    n; n = 0 counts the empty graph.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n <= 2:
        return 1
    if n % 2 == 0:
        return 3 ** ((n - 2) // 2)
    return 2 * 3 ** ((n - 3) // 2)


def total_count(n: int) -> int:
    """Isomorphism classes of uniquely pressable graphs on n vertices.

    Such a graph is one cup core plus loopless isolated padding, and a
    cup graph has no nontrivial automorphisms, so this is the running
    sum of cup_count(0..n); it collapses to (5*3^((n-2)/2)+1)/2 for
    even n >= 2 and (3^((n+1)/2)+1)/2 for odd n.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1
    if n % 2 == 0:
        return (5 * 3 ** ((n - 2) // 2) + 1) // 2
    return (3 ** ((n + 1) // 2) + 1) // 2


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]


def all_pseudographs(n: int):
    """Yield every graph on labels 1..n, one per subset of vertex pairs."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    labels = tuple(range(1, n + 1))
    pairs = _pairs(n)
    for mask in range(1 << len(pairs)):
        edges = frozenset(
            p for k, p in enumerate(pairs) if (mask >> k) & 1
        )
        yield PseudoGraph(labels, edges)


def canonical_form(g: PseudoGraph) -> tuple[int, ...]:
    """Isomorphism invariant: minimal packed adjacency over relabelings."""
    a = g.adjacency_matrix()
    n = a.n
    src = a.row_bits
    best: tuple[int, ...] | None = None
    for perm in itertools.permutations(range(n)):
        inv = [0] * n
        for t, s in enumerate(perm):
            inv[s] = t
        cand = []
        for t in range(n):
            bits = 0
            r = src[perm[t]]
            while r:
                low = r & -r
                r ^= low
                bits |= 1 << inv[low.bit_length() - 1]
            cand.append(bits)
        tup = tuple(cand)
        if best is None or tup < best:
            best = tup
    assert best is not None or n == 0
    return best if best is not None else ()


@dataclass(frozen=True)
class CensusResult:
    """Tallies from an exhaustive sweep of all graphs on n vertices."""

    n: int
    labeled_total: int
    up_iso_classes: int
    cup_iso_classes: int

    def to_text(self) -> str:
        return (
            f"n={self.n} labeled_total={self.labeled_total} "
            f"up_iso_classes={self.up_iso_classes} "
            f"cup_iso_classes={self.cup_iso_classes}\n"
        )


def _census_range(args: tuple[int, int, int]) -> tuple[int, dict]:
    """Recognize every pair-mask in [lo, hi); tally the yes graphs."""
    n, lo, hi = args
    labels = tuple(range(1, n + 1))
    pairs = _pairs(n)
    count = 0
    classes: dict[tuple[int, ...], bool] = {}
    for mask in range(lo, hi):
        edges = frozenset(
            p for k, p in enumerate(pairs) if (mask >> k) & 1
        )
        g = PseudoGraph(labels, edges)
        if not recognize(g).verdict:
            continue
        count += 1
        key = canonical_form(g)
        if key not in classes:
            classes[key] = len(g.components()) == 1 and bool(g.edges)
    return count, classes


def census(n: int, bound: int = 5, jobs: int = 1) -> CensusResult:
    """Exhaustive recognition sweep over all 2^(n(n+1)/2) graphs.

    Counts labeled uniquely pressable graphs, their isomorphism
    classes, and the connected classes with an edge (the cup cores).
    Refuses n above the size bound; jobs > 1 splits the mask range
    across processes.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > bound:
        raise OracleBoundError(
            f"census of {n}-vertex graphs exceeds bound {bound}"
        )
    total = 1 << len(_pairs(n))
    if jobs < 1:
        raise ValueError("jobs must be positive")
    if jobs == 1:
        count, classes = _census_range((n, 0, total))
    else:
        step = -(-total // jobs)
        chunks = [
            (n, lo, min(lo + step, total)) for lo in range(0, total, step)
        ]
        count = 0
        classes = {}
        with multiprocessing.Pool(jobs) as pool:
            for part_count, part_classes in pool.map(_census_range, chunks):
                count += part_count
                for key, conn in part_classes.items():
                    classes.setdefault(key, conn)
    cup_classes = sum(1 for conn in classes.values() if conn)
    return CensusResult(n, count, len(classes), cup_classes)
