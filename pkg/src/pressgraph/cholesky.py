"""Pressing orders and instructional Cholesky roots over GF(2).

Pressing the vertices 1, 2, ... of an ordered graph mirrors Gaussian
elimination on its adjacency matrix: the row copied out just before
vertex i is pressed is the neighborhood of i at that moment.  Stacking
those rows gives an upper-triangular matrix U with U^T U = A, the
instructional Cholesky root of A.  It exists exactly when pressing the
vertices in order empties the graph, and it is unique for that order.

The greedy order below repeatedly presses a looped vertex of maximum
degree (loop included), breaking ties toward the smaller label.  For a
graph with exactly one successful pressing sequence the maximum is
provably unique at every step, so an observed tie is a certificate of
non-uniqueness; the order records where the first one happened.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .gf2 import BitMatrix, gf2_dot
from .graphs import PseudoGraph

__all__ = [
    "CholeskyRoot",
    "PressingOrder",
    "NotOrderPressableError",
    "UnpressableError",
    "instructional_root",
    "find_pressing_order",
]


class NotOrderPressableError(ValueError):
    """Pressing in index order does not empty the graph.

    ``stuck_index`` is the 1-based position of the first vertex that has
    no loop when its turn comes while edges still remain.
    """

    def __init__(self, stuck_index: int):
        self.stuck_index = stuck_index
        super().__init__(
            f"not pressable in vertex order: stuck at index {stuck_index}"
        )


class UnpressableError(ValueError):
    """Greedy pressing ran out of looped vertices while edges remain.

    ``component`` is one leftover non-trivial component (its labels) at
    the point where no looped vertex remained.  A uniquely pressable
    graph never reaches this state; a merely pressable one can, when
    the max-degree choice strands part of the graph.
    """

    def __init__(self, component: tuple[int, ...]):
        self.component = component
        super().__init__(
            f"pressing stalled: loopless component {component} remains"
        )


@dataclass(frozen=True)
class PressingOrder:
    """A successful pressing order found by the greedy strategy.

    ``permutation`` lists the pressed labels in press order; vertices
    left unpressed ended isolated and loopless, so ``complete`` is True
    on every successful return.  ``first_tie`` is the 1-based step at
    which two looped vertices first shared the maximum degree, or None.
    """

    permutation: tuple[int, ...]
    complete: bool
    first_tie: int | None = None


@dataclass(frozen=True)
class CholeskyRoot:
    """An upper-triangular GF(2) root together with the vertex order used."""

    matrix: BitMatrix
    order: tuple[int, ...]

    def weight(self, j: int) -> int:
        """Integer column sum of column j; odd exactly for looped vertices."""
        return self.matrix.column(j).weight()

    def dot(self, i: int, j: int) -> int:
        """GF(2) dot product of columns i and j; equals adjacency (i, j)."""
        return gf2_dot(self.matrix.column(i), self.matrix.column(j))


def instructional_root(
    a: BitMatrix, order: Sequence[int] | None = None
) -> CholeskyRoot:
    """Eliminate ``a`` in index order and collect the pivot rows.

    While the current diagonal entry is 1, the current row is copied
    into the root and added to every later row with a 1 in the pivot
    column.  Elimination stops at the first zero diagonal; the remaining
    rows must then all be zero (the graph pressed empty early), else the
    order cannot press the graph and NotOrderPressableError is raised.

    ``order`` only annotates which vertex labels the matrix indices
    stand for; it defaults to 1..n.
    """
    if not a.is_symmetric():
        raise ValueError("matrix must be symmetric")
    n = a.n
    if order is None:
        order = tuple(range(1, n + 1))
    else:
        order = tuple(order)
        if len(order) != n or len(set(order)) != n:
            raise ValueError(f"order must list {n} distinct labels")
    rows = list(a.row_bits)
    root = [0] * n
    k = 0
    while k < n and (rows[k] >> k) & 1:
        piv = rows[k]
        root[k] = piv
        bit = 1 << k
        for i in range(k + 1, n):
            if rows[i] & bit:
                rows[i] ^= piv
        k += 1
    for i in range(k, n):
        if rows[i]:
            raise NotOrderPressableError(stuck_index=k + 1)
    return CholeskyRoot(BitMatrix(n, tuple(root)), order)


def find_pressing_order(g: PseudoGraph) -> PressingOrder:
    """Greedy pressing order: max-degree looped vertex, smallest label first.

    Runs on the packed adjacency matrix, pressing in place until no
    looped vertex remains.  If any edge survives, UnpressableError
    carries one leftover component.  That failure certifies the graph
    is not uniquely pressable; it does not rule out a successful
    sequence along some other order.
    """
    labels = g.labels
    n = g.n
    rows = list(g.adjacency_matrix().row_bits)
    bits = [1 << i for i in range(n)]
    order: list[int] = []
    first_tie: int | None = None
    alive = [i for i in range(n) if rows[i]]
    while alive:
        best = -1
        best_deg = 0
        tied = False
        for i in alive:
            r = rows[i]
            if r & bits[i]:
                d = r.bit_count()
                if d > best_deg:
                    best, best_deg, tied = i, d, False
                elif d == best_deg:
                    tied = True
        if best < 0:
            break
        if tied and first_tie is None:
            first_tie = len(order) + 1
        order.append(labels[best])
        piv = rows[best]
        b = bits[best]
        rows[best] = 0
        still = []
        for i in alive:
            if i == best:
                continue
            r = rows[i]
            if r & b:
                r ^= piv
                rows[i] = r
            if r:
                still.append(i)
        alive = still
    if any(rows):
        alive = [i for i in range(n) if rows[i]]
        start = alive[0]
        seen = {start}
        stack = [start]
        while stack:
            i = stack.pop()
            x = rows[i]
            while x:
                low = x & -x
                j = low.bit_length() - 1
                x ^= low
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        raise UnpressableError(tuple(sorted(labels[i] for i in seen)))
    return PressingOrder(tuple(order), True, first_tie)
