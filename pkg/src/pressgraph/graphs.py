"""Simple pseudo-graphs and the pressing dynamic.

A simple pseudo-graph allows loops but no multiple edges.  Pressing a
looped vertex v complements the induced subgraph on the closed
neighborhood of v, loops included, after which v is isolated and
loopless.  A pressing sequence is successful when the final graph has
no edges at all.

Graphs here are immutable; every operation returns a new graph.  Vertex
labels are arbitrary distinct positive integers and need not be
contiguous.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .gf2 import BitMatrix, MatrixFormatError, iter_support

__all__ = [
    "Edge",
    "PseudoGraph",
    "Component",
    "GraphFormatError",
    "UnknownVertexError",
    "InvalidPressError",
    "from_adjacency",
    "parse_graph",
    "parse_auto",
    "detect_format",
]

Edge = tuple[int, int]


class GraphFormatError(ValueError):
    """Malformed graph text."""


class UnknownVertexError(ValueError):
    """A label that is not a vertex of the graph."""


class InvalidPressError(ValueError):
    """Pressing a vertex that is not looped (or not present)."""

    def __init__(self, vertex: int, position: int | None = None):
        self.vertex = vertex
        self.position = position
        if position is None:
            msg = f"vertex {vertex} is not looped"
        else:
            msg = f"press {position} invalid: vertex {vertex} is not looped"
        super().__init__(msg)


@dataclass(frozen=True)
class Component:
    """A connected component; trivial means one loopless isolated vertex."""

    labels: tuple[int, ...]
    trivial: bool


@dataclass(frozen=True)
class PseudoGraph:
    """An undirected graph with optional loops and no multi-edges.

    ``labels`` is the strictly increasing tuple of vertex labels.
    ``edges`` holds unordered pairs normalized to (min, max); a loop at
    v is the pair (v, v).
    """

    labels: tuple[int, ...]
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        prev = 0
        for lab in labels:
            if lab <= prev:
                raise ValueError(
                    "labels must be strictly increasing positive integers"
                )
            prev = lab
        lset = set(labels)
        norm = set()
        for u, v in self.edges:
            if u not in lset or v not in lset:
                raise UnknownVertexError(f"edge ({u}, {v}) leaves the graph")
            norm.add((u, v) if u <= v else (v, u))
        object.__setattr__(self, "edges", frozenset(norm))

    @property
    def n(self) -> int:
        return len(self.labels)

    def _check_vertex(self, v: int) -> None:
        if v not in set(self.labels):
            raise UnknownVertexError(f"no vertex labeled {v}")

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return ((u, v) if u <= v else (v, u)) in self.edges

    def is_looped(self, v: int) -> bool:
        self._check_vertex(v)
        return (v, v) in self.edges

    def looped_vertices(self) -> frozenset[int]:
        return frozenset(u for u, v in self.edges if u == v)

    def neighborhood(self, v: int) -> frozenset[int]:
        """All vertices adjacent to v; contains v itself iff v is looped."""
        self._check_vertex(v)
        out = set()
        for a, b in self.edges:
            if a == v:
                out.add(b)
            elif b == v:
                out.add(a)
        return frozenset(out)

    def press(self, v: int) -> "PseudoGraph":
        """Press looped vertex v: toggle every pair inside its neighborhood.

        Raises InvalidPressError when v carries no loop.  The pressed
        vertex ends isolated and loopless.
        """
        self._check_vertex(v)
        if (v, v) not in self.edges:
            raise InvalidPressError(v)
        nb = sorted(self.neighborhood(v))
        toggle = {
            (nb[i], nb[j])
            for i in range(len(nb))
            for j in range(i, len(nb))
        }
        return PseudoGraph(self.labels, self.edges ^ toggle)

    def apply_sequence(self, seq: Sequence[int]) -> "PseudoGraph":
        """Press the vertices of ``seq`` in order.

        The first invalid press aborts with an InvalidPressError whose
        ``position`` is its 1-based index in the sequence.
        """
        g = self
        for pos, v in enumerate(seq, start=1):
            try:
                g = g.press(v)
            except (InvalidPressError, UnknownVertexError):
                raise InvalidPressError(v, position=pos) from None
        return g

    def is_successful(self, seq: Sequence[int]) -> bool:
        """True when every press is valid and the final graph is edgeless."""
        try:
            g = self.apply_sequence(seq)
        except InvalidPressError:
            return False
        return not g.edges

    def components(self) -> list[Component]:
        """Connected components, ordered by smallest label."""
        parent = {lab: lab for lab in self.labels}

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges:
            if u != v:
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
        groups: dict[int, list[int]] = {}
        for lab in self.labels:
            groups.setdefault(find(lab), []).append(lab)
        loops = self.looped_vertices()
        comps = []
        for members in groups.values():
            members.sort()
            trivial = len(members) == 1 and members[0] not in loops
            comps.append(Component(tuple(members), trivial))
        comps.sort(key=lambda c: c.labels[0])
        return comps

    def induced(self, keep: Iterable[int]) -> "PseudoGraph":
        """Subgraph induced on a subset of the labels."""
        ks = set(keep)
        unknown = ks - set(self.labels)
        if unknown:
            raise UnknownVertexError(f"no vertices labeled {sorted(unknown)}")
        labels = tuple(lab for lab in self.labels if lab in ks)
        edges = {e for e in self.edges if e[0] in ks and e[1] in ks}
        return PseudoGraph(labels, frozenset(edges))

    def delete_vertex(self, v: int) -> "PseudoGraph":
        """Remove v and every edge touching it."""
        self._check_vertex(v)
        labels = tuple(lab for lab in self.labels if lab != v)
        edges = {e for e in self.edges if v not in e}
        return PseudoGraph(labels, frozenset(edges))

    def relabel(self, mapping: dict[int, int]) -> "PseudoGraph":
        """Apply a label bijection; mapping must cover every vertex."""
        missing = set(self.labels) - set(mapping)
        if missing:
            raise UnknownVertexError(f"mapping misses labels {sorted(missing)}")
        new_labels = [mapping[lab] for lab in self.labels]
        if len(set(new_labels)) != len(new_labels):
            raise ValueError("mapping is not injective on the labels")
        edges = {(mapping[u], mapping[v]) for u, v in self.edges}
        return PseudoGraph(tuple(sorted(new_labels)), frozenset(edges))

    def adjacency_matrix(self) -> BitMatrix:
        """Adjacency matrix with labels compressed to 1..n preserving order."""
        pos = {lab: i for i, lab in enumerate(self.labels)}
        rows = [0] * self.n
        for u, v in self.edges:
            iu, iv = pos[u], pos[v]
            rows[iu] |= 1 << iv
            rows[iv] |= 1 << iu
        return BitMatrix(self.n, tuple(rows))

    def to_text(self) -> str:
        """Serialize to the graph text format.

        Line 1 is n, line 2 the space-separated labels, then one edge
        per line as "u v" (a loop as "v v"), ascending.
        """
        lines = [str(self.n), " ".join(str(lab) for lab in self.labels)]
        for u, v in sorted(self.edges):
            lines.append(f"{u} {v}")
        return "\n".join(lines) + "\n"


def from_adjacency(a: BitMatrix) -> PseudoGraph:
    """Graph on labels 1..n with the given symmetric adjacency matrix."""
    if not a.is_symmetric():
        raise ValueError("adjacency matrix must be symmetric")
    edges = set()
    for i, r in enumerate(a.row_bits):
        for j in iter_support(r >> i):
            edges.add((i + 1, i + j))
    return PseudoGraph(tuple(range(1, a.n + 1)), frozenset(edges))


def _parse_count(lines: list[str]) -> int:
    if not lines or not lines[0].strip():
        raise GraphFormatError("line 1: expected the vertex count")
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise GraphFormatError(
            f"line 1: expected an integer count, got {lines[0]!r}"
        ) from None
    if n < 0:
        raise GraphFormatError(f"line 1: negative vertex count {n}")
    return n


def parse_graph(text: str) -> PseudoGraph:
    """Parse one record of the graph text format.

    The edge list ends at the first blank line or at end of input;
    anything non-blank after that is rejected.
    """
    lines = text.splitlines()
    n = _parse_count(lines)
    if n > 0 and len(lines) < 2:
        raise GraphFormatError("line 2: expected the label line")
    label_tokens = lines[1].split() if len(lines) > 1 else []
    if len(label_tokens) != n:
        raise GraphFormatError(
            f"line 2: expected {n} labels, got {len(label_tokens)}"
        )
    try:
        labels = tuple(int(t) for t in label_tokens)
    except ValueError:
        raise GraphFormatError("line 2: labels must be integers") from None
    edges = set()
    stop = None
    for idx in range(2, len(lines)):
        raw = lines[idx].strip()
        if not raw:
            stop = idx
            break
        parts = raw.split()
        if len(parts) != 2:
            raise GraphFormatError(
                f"line {idx + 1}: expected an edge as 'u v', got {raw!r}"
            )
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(
                f"line {idx + 1}: edge endpoints must be integers"
            ) from None
        edges.add((u, v))
    if stop is not None:
        for idx in range(stop, len(lines)):
            if lines[idx].strip():
                raise GraphFormatError(
                    f"line {idx + 1}: unexpected content after the record"
                )
    try:
        return PseudoGraph(labels, frozenset(edges))
    except (ValueError, UnknownVertexError) as exc:
        raise GraphFormatError(str(exc)) from None


def detect_format(text: str) -> str:
    """Classify text as "graph" or "matrix" by its second line.

    A second line of exactly n space-separated integers reads as a label
    line; a single n-character 0/1 token reads as a matrix row.  The
    one-vertex file "1\\n1" is valid under both readings and resolves to
    the graph reading (one vertex, no loop).  Unparseable text counts as
    "graph" so its diagnostics name the graph grammar.
    """
    lines = text.splitlines()
    try:
        n = _parse_count(lines)
    except GraphFormatError:
        return "graph"
    if n == 0:
        return "graph"
    second = lines[1].split() if len(lines) > 1 else []
    graph_like = len(second) == n and all(
        t.lstrip("-").isdigit() for t in second
    )
    if graph_like:
        return "graph"
    matrix_like = (
        len(second) == 1
        and len(second[0]) == n
        and all(c in "01" for c in second[0])
    )
    return "matrix" if matrix_like else "graph"


def parse_auto(text: str) -> PseudoGraph:
    """Parse graph text, accepting the matrix format for labels 1..n.

    Format chosen per detect_format; matrix input becomes the graph of
    its (symmetric) adjacency matrix on labels 1..n.
    """
    if detect_format(text) == "matrix":
        try:
            return from_adjacency(BitMatrix.from_text(text))
        except MatrixFormatError as exc:
            raise GraphFormatError(str(exc)) from None
        except ValueError as exc:
            raise GraphFormatError(str(exc)) from None
    return parse_graph(text)
