"""Abstract graphs, plane embeddings, and canonical forms.

This module is the structural foundation of the package:

* :class:`Graph` -- an immutable, hashable, simple undirected graph on
  vertices ``0..n-1``.
* Canonical labeling via individualization--refinement (colour refinement
  plus a backtracking search with automorphism pruning), exposed as
  :func:`canonical_form`, :func:`canonical_labeling`,
  :func:`automorphism_generators`, :func:`vertex_orbits` and
  :func:`min_set_image`.
* :class:`PlaneGraph` -- an immutable combinatorial plane embedding: a
  rotation system (clockwise neighbour order around every vertex) plus a
  designated outer face.  Faces are recovered by dart traversal.
* :func:`embed` -- planarity test and embedding construction (delegates the
  planarity decision to :mod:`networkx`, everything else is first-party),
  raising :class:`NonPlanarError` with a Kuratowski witness when the input
  is not planar.
* :func:`plane_graph_from_positions` -- build a plane graph from straight
  line (or mildly bent) drawing coordinates; used by the generators of the
  fixed catalog drawings.

Conventions
-----------
Rotations list the neighbours of each vertex in *clockwise* order as drawn
on screen (y axis pointing up).  The successor rule ``next(u -> v) =
(v, w)`` with ``w`` immediately after ``u`` in the rotation at ``v`` then
walks every bounded face counterclockwise and the unbounded face clockwise;
each face is the orbit of a dart under that rule.  A face is stored as its
vertex walk, normalised to the lexicographically least cyclic rotation.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable, Iterator, Mapping, Sequence

__all__ = [
    "Edge",
    "Face",
    "Graph",
    "NonPlanarError",
    "PlaneGraph",
    "automorphism_generators",
    "canonical_form",
    "canonical_labeling",
    "embed",
    "is_isomorphic",
    "is_planar",
    "min_set_image",
    "normalize_edge",
    "plane_graph_from_positions",
    "vertex_orbits",
]

Edge = tuple[int, int]
#: A directed half-edge ``(tail, head)``.
Dart = tuple[int, int]


def normalize_edge(u: int, v: int) -> Edge:
    """Return the endpoints of an edge as a sorted pair.

    Args:
        u: One endpoint.
        v: The other endpoint; must differ from ``u``.

    Raises:
        ValueError: If ``u == v`` (loops are not representable).
    """
    if u == v:
        raise ValueError(f"loop edge at vertex {u} is not allowed")
    return (u, v) if u < v else (v, u)


# =========================================================================
# Abstract graphs
# =========================================================================


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    Attributes:
        n: Number of vertices.
        edges: Sorted tuple of normalised edges ``(u, v)`` with ``u < v``.
    """

    n: int
    edges: tuple[Edge, ...]

    @staticmethod
    def from_edges(n: int, pairs: Iterable[Sequence[int]]) -> "Graph":
        """Build a graph from an edge iterable, validating and normalising.

        Args:
            n: Number of vertices; must be >= 0.
            pairs: Iterable of 2-sequences of endpoints in ``0..n-1``.

        Returns:
            The graph with duplicate edges collapsed and edges sorted.

        Raises:
            ValueError: On negative ``n``, out-of-range endpoints, or loops.
        """
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        seen: set[Edge] = set()
        for pair in pairs:
            u, v = pair
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            seen.add(normalize_edge(u, v))
        return Graph(n, tuple(sorted(seen)))

    @staticmethod
    def complete(n: int) -> "Graph":
        """Return the complete graph K_n."""
        return Graph.from_edges(
            n, [(i, j) for i in range(n) for j in range(i + 1, n)]
        )

    @staticmethod
    def cycle(n: int) -> "Graph":
        """Return the cycle C_n (n >= 3)."""
        if n < 3:
            raise ValueError(f"a cycle needs at least 3 vertices, got {n}")
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @staticmethod
    def path(n: int) -> "Graph":
        """Return the path on ``n`` vertices (n >= 1)."""
        if n < 1:
            raise ValueError(f"a path needs at least 1 vertex, got {n}")
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    # -- basic accessors ---------------------------------------------------

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        """Neighbour sets indexed by vertex."""
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(s) for s in adj)

    @cached_property
    def adj_bits(self) -> tuple[int, ...]:
        """Neighbour sets as bitmasks (bit ``v`` of entry ``u`` = edge uv)."""
        bits = [0] * self.n
        for u, v in self.edges:
            bits[u] |= 1 << v
            bits[v] |= 1 << u
        return tuple(bits)

    def degree(self, v: int) -> int:
        """Degree of vertex ``v``."""
        return len(self.adjacency[v])

    @cached_property
    def degree_sequence(self) -> tuple[int, ...]:
        """Degrees sorted in non-increasing order."""
        return tuple(sorted((len(s) for s in self.adjacency), reverse=True))

    def has_edge(self, u: int, v: int) -> bool:
        """Whether ``uv`` is an edge."""
        return v in self.adjacency[u]

    def is_connected(self) -> bool:
        """Whether the graph is connected (the 0-vertex graph is not)."""
        if self.n == 0:
            return False
        seen = 1
        stack = [0]
        count = 1
        adj = self.adj_bits
        while stack:
            u = stack.pop()
            fresh = adj[u] & ~seen
            while fresh:
                bit = fresh & -fresh
                fresh ^= bit
                seen |= bit
                count += 1
                stack.append(bit.bit_length() - 1)
        return count == self.n

    def has_triangle(self) -> bool:
        """Whether some three vertices are mutually adjacent."""
        bits = self.adj_bits
        for u, v in self.edges:
            if bits[u] & bits[v]:
                return True
        return False

    # -- derived graphs ----------------------------------------------------

    def relabeled(self, perm: Sequence[int]) -> "Graph":
        """Apply a vertex relabeling.

        Args:
            perm: ``perm[old] = new``; must be a permutation of ``0..n-1``.

        Returns:
            The graph with every edge ``(u, v)`` mapped to
            ``(perm[u], perm[v])``.
        """
        if sorted(perm) != list(range(self.n)):
            raise ValueError("not a permutation of the vertex set")
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def with_new_vertex(self, neighbors: Iterable[int]) -> "Graph":
        """Add vertex ``n`` adjacent to ``neighbors`` (possibly empty)."""
        nbrs = list(neighbors)
        return Graph.from_edges(
            self.n + 1, list(self.edges) + [(u, self.n) for u in nbrs]
        )

    def without_vertex(self, v: int) -> "Graph":
        """Delete vertex ``v`` and relabel ``v+1..n-1`` down by one."""
        if not (0 <= v < self.n):
            raise ValueError(f"vertex {v} out of range")

        def shift(x: int) -> int:
            return x if x < v else x - 1

        return Graph.from_edges(
            self.n - 1,
            [(shift(a), shift(b)) for a, b in self.edges if v not in (a, b)],
        )

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph on ``vertices`` (relabeled to 0..k-1 in order)."""
        index = {v: i for i, v in enumerate(vertices)}
        if len(index) != len(vertices):
            raise ValueError("duplicate vertices")
        keep = set(vertices)
        return Graph.from_edges(
            len(vertices),
            [
                (index[a], index[b])
                for a, b in self.edges
                if a in keep and b in keep
            ],
        )

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, m={self.m})"


def disjoint_union(a: Graph, b: Graph) -> Graph:
    """Disjoint union; vertices of ``b`` are shifted up by ``a.n``."""
    edges = list(a.edges) + [(u + a.n, v + a.n) for u, v in b.edges]
    return Graph.from_edges(a.n + b.n, edges)


def join(a: Graph, b: Graph) -> Graph:
    """Join: disjoint union plus all edges between the two sides."""
    g = disjoint_union(a, b)
    extra = [(u, v + a.n) for u in range(a.n) for v in range(b.n)]
    return Graph.from_edges(g.n, list(g.edges) + extra)


# =========================================================================
# Canonical labeling (individualization--refinement)
# =========================================================================


def _refine(n: int, adj: Sequence[int], colors: list[int]) -> list[int]:
    """Colour refinement to an equitable partition.

    Repeatedly replaces each vertex colour by ``(colour, multiset of
    neighbour colours)`` and renumbers colours ``0..k-1`` in sorted
    signature order, until stable.  The renumbering depends only on the
    colour signatures, so the result is equivariant under isomorphism.
    """
    while True:
        sigs: list[tuple] = []
        for v in range(n):
            counts: dict[int, int] = {}
            w = adj[v]
            while w:
                bit = w & -w
                w ^= bit
                c = colors[bit.bit_length() - 1]
                counts[c] = counts.get(c, 0) + 1
            sigs.append((colors[v], tuple(sorted(counts.items()))))
        ranking = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new = [ranking[sig] for sig in sigs]
        if new == colors:
            return new
        colors = new


def _cells(n: int, colors: Sequence[int]) -> list[list[int]]:
    """Vertices grouped by colour, cells ordered by colour value."""
    buckets: dict[int, list[int]] = {}
    for v in range(n):
        buckets.setdefault(colors[v], []).append(v)
    return [buckets[c] for c in sorted(buckets)]


def _adj_key(n: int, adj: Sequence[int], order: Sequence[int]) -> int:
    """Upper-triangle adjacency bits of the graph relabeled by ``order``.

    ``order[i]`` is the original vertex receiving new label ``i``; the
    result packs the bits ``(0,1), (0,2), (1,2), (0,3), ...`` (column
    order) into one integer, most significant bit first.
    """
    key = 0
    for j in range(1, n):
        aj = adj[order[j]]
        for i in range(j):
            key = (key << 1) | ((aj >> order[i]) & 1)
    return key


class _CanonState:
    """Shared state for the canonical search over one graph."""

    __slots__ = ("n", "adj", "best_key", "best_order", "auts")

    def __init__(self, n: int, adj: Sequence[int]):
        self.n = n
        self.adj = adj
        self.best_key: int | None = None
        self.best_order: list[int] | None = None
        self.auts: list[tuple[int, ...]] = []

    def _orbit_reps(
        self, cell: Sequence[int], fixed: Sequence[int]
    ) -> list[int]:
        """Candidates from ``cell`` pruned by known automorphisms.

        Two candidates are interchangeable when some product of already
        discovered automorphisms, each fixing every vertex of ``fixed``
        pointwise, maps one to the other.  Using only the generators that
        fix the prefix under-approximates the true stabilizer, which is
        safe: it can only keep extra candidates.
        """
        relevant = [
            a for a in self.auts if all(a[v] == v for v in fixed)
        ]
        if not relevant:
            return list(cell)
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a in relevant:
            for v in range(self.n):
                ra, rb = find(v), find(a[v])
                if ra != rb:
                    parent[ra] = rb
        reps: list[int] = []
        seen_roots: set[int] = set()
        for v in cell:
            r = find(v)
            if r not in seen_roots:
                seen_roots.add(r)
                reps.append(v)
        return reps

    def search(self, colors: list[int], fixed: list[int]) -> None:
        colors = _refine(self.n, self.adj, colors)
        cells = _cells(self.n, colors)
        target: list[int] | None = None
        for cell in cells:
            if len(cell) > 1:
                target = cell
                break
        if target is None:
            # Discrete colouring: colours are a permutation new->old rank.
            order = sorted(range(self.n), key=lambda v: colors[v])
            key = _adj_key(self.n, self.adj, order)
            if self.best_key is None or key < self.best_key:
                self.best_key = key
                self.best_order = order
            elif key == self.best_key and self.best_order is not None:
                # order and best_order are both maps new->old; their
                # composition is an automorphism old->old.
                aut = [0] * self.n
                for i in range(self.n):
                    aut[self.best_order[i]] = order[i]
                perm = tuple(aut)
                if perm != tuple(range(self.n)) and perm not in self.auts:
                    self.auts.append(perm)
            return
        for v in self._orbit_reps(target, fixed):
            child = list(colors)
            # Individualize v: give it a colour below its old cell.
            for u in range(self.n):
                if child[u] >= child[v] and u != v:
                    child[u] += 1
            self.search(child, fixed + [v])


def _canon_state(g: Graph) -> _CanonState:
    state = _CanonState(g.n, g.adj_bits)
    if g.n == 0:
        state.best_order = []
        state.best_key = 0
        return state
    state.search([0] * g.n, [])
    return state


def canonical_data(
    g: Graph,
) -> tuple[tuple[int, ...], list[tuple[int, ...]]]:
    """Canonical labeling and automorphism generators from one search.

    Returns:
        ``(perm, gens)`` where ``perm[old] = new`` is the canonical
        relabeling and ``gens`` generates the automorphism group.
    """
    state = _canon_state(g)
    assert state.best_order is not None
    perm = [0] * g.n
    for new, old in enumerate(state.best_order):
        perm[old] = new
    return tuple(perm), list(state.auts)


def canonical_labeling(g: Graph) -> tuple[int, ...]:
    """Return a canonical relabeling ``perm`` with ``perm[old] = new``.

    Isomorphic graphs relabeled by their canonical labelings coincide.
    """
    return canonical_data(g)[0]


def canonical_form(g: Graph) -> bytes:
    """Deterministic canonical byte form (graph6 of the canonical relabel).

    Two graphs are isomorphic iff their canonical forms are equal.  The
    result is stable across runs and platforms.
    """
    from . import io as _io  # local import to avoid a module cycle

    return _io.graph6_encode(g.relabeled(canonical_labeling(g)))


def is_isomorphic(a: Graph, b: Graph) -> bool:
    """Whether two graphs are isomorphic."""
    if a.n != b.n or a.m != b.m or a.degree_sequence != b.degree_sequence:
        return False
    return canonical_form(a) == canonical_form(b)


def automorphism_generators(g: Graph) -> list[tuple[int, ...]]:
    """Generators of the automorphism group (possibly empty for rigid graphs).

    The permutations discovered while exploring the canonical-search tree
    generate the full automorphism group: every pruned branch is the image
    of an explored one under a product of already-discovered generators.
    """
    return list(_canon_state(g).auts)


def _orbit_partition(n: int, gens: Sequence[Sequence[int]]) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in gens:
        for v in range(n):
            ra, rb = find(v), find(a[v])
            if ra != rb:
                parent[ra] = rb
    return [find(v) for v in range(n)]


def vertex_orbits(g: Graph) -> list[frozenset[int]]:
    """Orbits of the vertex set under the automorphism group."""
    roots = _orbit_partition(g.n, automorphism_generators(g))
    buckets: dict[int, set[int]] = {}
    for v in range(g.n):
        buckets.setdefault(roots[v], set()).add(v)
    return [frozenset(s) for s in buckets.values()]


def min_set_image(
    n: int, gens: Sequence[Sequence[int]], s: frozenset[int]
) -> frozenset[int]:
    """Lexicographically least image of ``s`` under the generated group.

    Sets are compared as sorted tuples.  The whole orbit of ``s`` is
    closed breadth-first; orbits of small sets in small groups stay tiny
    (at most ``C(n, |s|)`` elements), so this is cheap.
    """
    if not gens:
        return s
    best = tuple(sorted(s))
    seen = {best}
    frontier = [best]
    while frontier:
        nxt: list[tuple[int, ...]] = []
        for t in frontier:
            for a in gens:
                img = tuple(sorted(a[v] for v in t))
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
                    if img < best:
                        best = img
        frontier = nxt
    return frozenset(best)


# =========================================================================
# Plane graphs
# =========================================================================


def _min_rotation(walk: tuple[int, ...]) -> tuple[int, ...]:
    """Lexicographically least cyclic rotation of a sequence."""
    if len(walk) <= 1:
        return walk
    return min(walk[i:] + walk[:i] for i in range(len(walk)))


@dataclass(frozen=True)
class Face:
    """A face of a plane graph, stored as its boundary vertex walk.

    The walk lists the tail of every dart of the face orbit in traversal
    order, normalised to its least cyclic rotation; bounded faces read
    counterclockwise, the outer face clockwise.  Walks of faces incident
    to bridges repeat vertices.  An isolated-vertex graph has the single
    face ``Face((0,))`` of length 0.
    """

    walk: tuple[int, ...]

    @property
    def length(self) -> int:
        """Number of darts on the face (edge count with multiplicity)."""
        return len(self.walk) if len(self.walk) > 1 else 0

    @property
    def vertices(self) -> frozenset[int]:
        """Vertices on the face boundary."""
        return frozenset(self.walk)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        """Distinct edges on the face boundary."""
        k = len(self.walk)
        if k <= 1:
            return frozenset()
        return frozenset(
            normalize_edge(self.walk[i], self.walk[(i + 1) % k])
            for i in range(k)
        )

    def darts(self) -> tuple[Dart, ...]:
        """The face's darts ``(walk[i], walk[i+1])`` in traversal order."""
        k = len(self.walk)
        if k <= 1:
            return ()
        return tuple(
            (self.walk[i], self.walk[(i + 1) % k]) for i in range(k)
        )

    def is_triangle(self) -> bool:
        """Whether the face is bounded by a 3-cycle."""
        return self.length == 3 and len(self.vertices) == 3


def _trace_faces(
    n: int, rotation: Sequence[Sequence[int]]
) -> tuple[Face, ...]:
    """All faces of a rotation system by dart-orbit traversal."""
    index: list[dict[int, int]] = [
        {u: i for i, u in enumerate(rot)} for rot in rotation
    ]
    faces: list[Face] = []
    seen: set[Dart] = set()
    for v0 in range(n):
        if not rotation[v0]:
            faces.append(Face((v0,)))
            continue
        for w0 in rotation[v0]:
            if (v0, w0) in seen:
                continue
            walk: list[int] = []
            u, v = v0, w0
            while (u, v) not in seen:
                seen.add((u, v))
                walk.append(u)
                rot = rotation[v]
                u, v = v, rot[(index[v][u] + 1) % len(rot)]
            faces.append(Face(_min_rotation(tuple(walk))))
    return tuple(faces)


class NonPlanarError(ValueError):
    """Raised when a graph admits no plane embedding.

    Attributes:
        witness: A non-planar subgraph of the input (a Kuratowski
            subdivision) on the same vertex set.
    """

    def __init__(self, message: str, witness: Graph):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class PlaneGraph:
    """Immutable plane graph: rotation system plus designated outer face.

    Attributes:
        graph: The underlying abstract graph (must be connected).
        rotation: ``rotation[v]`` lists the neighbours of ``v`` in
            clockwise order.
        outer: The designated outer (unbounded) face; must be one of the
            faces induced by the rotation system.
    """

    graph: Graph
    rotation: tuple[tuple[int, ...], ...]
    outer: Face

    @staticmethod
    def build(
        graph: Graph,
        rotation: Sequence[Sequence[int]],
        outer_walk: Sequence[int] | None = None,
    ) -> "PlaneGraph":
        """Validate a rotation system and construct a plane graph.

        Args:
            graph: Underlying graph; must be connected.
            rotation: Clockwise neighbour order per vertex; must list each
                neighbour exactly once and satisfy Euler's formula.
            outer_walk: Boundary walk of the designated outer face (any
                cyclic rotation).  ``None`` picks the face of maximum
                length, ties broken by least canonical walk.

        Raises:
            ValueError: If the rotation is inconsistent with the graph, the
                embedding is not planar (fails Euler's formula), the graph
                is disconnected, or ``outer_walk`` is not a face.
        """
        if graph.n == 0:
            raise ValueError("plane graphs need at least one vertex")
        if not graph.is_connected():
            raise ValueError("plane graphs must be connected")
        if len(rotation) != graph.n:
            raise ValueError("rotation must have one entry per vertex")
        for v in range(graph.n):
            if sorted(rotation[v]) != sorted(graph.adjacency[v]):
                raise ValueError(
                    f"rotation at vertex {v} does not list its neighbours"
                )
        rot = tuple(tuple(r) for r in rotation)
        faces = _trace_faces(graph.n, rot)
        if graph.n - graph.m + len(faces) != 2:
            raise ValueError(
                "rotation system is not a plane embedding: "
                f"V-E+F = {graph.n}-{graph.m}+{len(faces)} != 2"
            )
        if outer_walk is None:
            outer = max(
                faces, key=lambda f: (f.length, [-x for x in f.walk])
            )
            # max() with negated walk implements: longest face first,
            # lexicographically least canonical walk among the longest.
        else:
            target = _min_rotation(tuple(outer_walk))
            matches = [f for f in faces if f.walk == target]
            if not matches:
                raise ValueError(
                    f"walk {tuple(outer_walk)} is not a face of the embedding"
                )
            outer = matches[0]
        pg = PlaneGraph(graph, rot, outer)
        object.__setattr__(pg, "_faces_cache", faces)
        return pg

    # -- faces -------------------------------------------------------------

    @property
    def n(self) -> int:
        """Number of vertices."""
        return self.graph.n

    @property
    def m(self) -> int:
        """Number of edges."""
        return self.graph.m

    def faces(self) -> tuple[Face, ...]:
        """All faces (outer included), in deterministic traversal order."""
        cached = getattr(self, "_faces_cache", None)
        if cached is None:
            cached = _trace_faces(self.graph.n, self.rotation)
            object.__setattr__(self, "_faces_cache", cached)
        return cached

    def inner_faces(self) -> tuple[Face, ...]:
        """All faces except the designated outer face."""
        return tuple(f for f in self.faces() if f != self.outer)

    def face_vector(self) -> dict[int, int]:
        """Counts of faces by length (outer included)."""
        counts: dict[int, int] = {}
        for f in self.faces():
            counts[f.length] = counts.get(f.length, 0) + 1
        return counts

    def faces_of_edge(self, e: Edge) -> tuple[Face, ...]:
        """The faces on the two sides of ``e`` (equal twice for a bridge)."""
        u, v = e
        if not self.graph.has_edge(u, v):
            raise ValueError(f"{e} is not an edge")
        return (self._face_of_dart[(u, v)], self._face_of_dart[(v, u)])

    @cached_property
    def _face_of_dart(self) -> dict[Dart, Face]:
        mapping: dict[Dart, Face] = {}
        for f in self.faces():
            for d in f.darts():
                mapping[d] = f
        return mapping

    # -- derived embeddings --------------------------------------------------

    def with_outer(self, face: Face) -> "PlaneGraph":
        """The same embedding with a different face designated outer."""
        if face not in self.faces():
            raise ValueError("face is not a face of this embedding")
        pg = PlaneGraph(self.graph, self.rotation, face)
        object.__setattr__(pg, "_faces_cache", self.faces())
        return pg

    def mirrored(self) -> "PlaneGraph":
        """The reflected embedding (all rotations reversed)."""
        rot = tuple(tuple(reversed(r)) for r in self.rotation)
        faces = _trace_faces(self.graph.n, rot)
        target = _min_rotation(tuple(reversed(self.outer.walk)))
        outer = next(f for f in faces if f.walk == target)
        pg = PlaneGraph(self.graph, rot, outer)
        object.__setattr__(pg, "_faces_cache", faces)
        return pg

    # -- canonical code ------------------------------------------------------

    def canonical_plane_code(self) -> bytes:
        """Canonical bytes identifying the embedding with its outer face.

        Two plane graphs get equal codes iff some isomorphism of the
        underlying graphs maps rotations to rotations (up to global
        reflection) and outer face to outer face.
        """
        best: bytes | None = None
        for pg in (self, self.mirrored()):
            for dart in pg.outer.darts() or ((pg.outer.walk[0], None),):
                code = _bfs_plane_code(pg, dart)
                if best is None or code < best:
                    best = code
        assert best is not None
        return best

    def to_json(self) -> str:
        """Serialise as an embedding JSON object (see :mod:`ptl.io`)."""
        return json.dumps(
            {
                "n": self.graph.n,
                "rotation": [list(r) for r in self.rotation],
                "outer_face": list(self.outer.walk),
            },
            sort_keys=True,
            separators=(",", ":"),
        )

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return (
            f"PlaneGraph(n={self.graph.n}, m={self.graph.m}, "
            f"outer={self.outer.walk})"
        )


def _bfs_plane_code(pg: PlaneGraph, start: Dart) -> bytes:
    """Deterministic relabeling code from a start dart.

    Vertices are labeled in discovery order; each vertex's neighbour list
    is read in rotation order starting from the neighbour through which it
    was discovered, making the code depend only on (embedding, start dart,
    orientation).
    """
    n = pg.graph.n
    if start[1] is None:  # single-vertex graph
        return b"K1"
    label = {start[0]: 0}
    entry: dict[int, int] = {start[0]: start[1]}
    queue = [start[0]]
    rows: list[list[int]] = []
    index = [
        {u: i for i, u in enumerate(rot)} for rot in pg.rotation
    ]
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        rot = pg.rotation[v]
        k = index[v][entry[v]]
        ordered = [rot[(k + i) % len(rot)] for i in range(len(rot))]
        row: list[int] = []
        for u in ordered:
            if u not in label:
                label[u] = len(label)
                entry[u] = v
                queue.append(u)
            row.append(label[u])
        rows.append(row)
    outer = tuple(label[v] for v in pg.outer.walk)
    payload = {
        "n": n,
        "rows": rows,
        "outer": _min_rotation(outer),
    }
    return json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()


# =========================================================================
# Embedding construction
# =========================================================================


def embed(g: Graph) -> PlaneGraph:
    """Embed a connected planar graph in the plane.

    The rotation system comes from a combinatorial planarity algorithm;
    the outer face is then re-designated as a face of maximum length,
    ties broken by lexicographically least boundary walk.  The choice of
    rotation system is deterministic for a given graph.

    Args:
        g: A connected graph.

    Returns:
        A validated :class:`PlaneGraph`.

    Raises:
        ValueError: If ``g`` is empty or disconnected.
        NonPlanarError: If ``g`` is not planar; the exception carries a
            Kuratowski witness subgraph.
    """
    import networkx as nx

    if g.n == 0:
        raise ValueError("cannot embed the empty graph")
    if not g.is_connected():
        raise ValueError("embed() requires a connected graph")
    if g.n == 1:
        return PlaneGraph.build(g, [()], outer_walk=(0,))

    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges)
    is_planar, certificate = nx.check_planarity(nxg, counterexample=True)
    if not is_planar:
        witness = Graph.from_edges(g.n, list(certificate.edges()))
        raise NonPlanarError(
            f"graph with {g.n} vertices and {g.m} edges is not planar",
            witness,
        )
    data = certificate.get_data()
    rotation = [tuple(data[v]) for v in range(g.n)]
    return PlaneGraph.build(g, rotation, outer_walk=None)


def is_planar(g: Graph) -> bool:
    """Whether ``g`` (connected or not) admits a plane embedding."""
    import networkx as nx

    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges)
    return nx.check_planarity(nxg, counterexample=False)[0]


# =========================================================================
# Drawings
# =========================================================================

Point = tuple[float, float]


def plane_graph_from_positions(
    n: int,
    edges: Iterable[Sequence[int]],
    pos: Mapping[int, Point],
    bends: Mapping[Dart, Point] | None = None,
    outer_walk: Sequence[int] | None = None,
) -> PlaneGraph:
    """Build a plane graph from drawing coordinates.

    Rotations are the clockwise angular order of the incident edges; the
    initial direction of edge ``(u, v)`` at ``u`` may be overridden with a
    control point ``bends[(u, v)]`` to represent a curved edge.  Unless
    ``outer_walk`` is given, the outer face is detected geometrically from
    the bottommost vertex.

    Args:
        n: Number of vertices.
        edges: Edge list.
        pos: Coordinates per vertex.
        bends: Optional per-dart control points for curved edges.
        outer_walk: Optional explicit outer face walk.

    Raises:
        ValueError: If two edges leave a vertex at the same angle, or the
            drawing data is otherwise inconsistent.
    """
    g = Graph.from_edges(n, edges)
    bends = dict(bends or {})

    def angle(v: int, u: int) -> float:
        x0, y0 = pos[v]
        x1, y1 = bends.get((v, u), pos[u])
        return math.atan2(y1 - y0, x1 - x0)

    rotation: list[tuple[int, ...]] = []
    for v in range(n):
        nbrs = sorted(g.adjacency[v])
        angles = {u: angle(v, u) for u in nbrs}
        if len(set(angles.values())) != len(nbrs):
            raise ValueError(
                f"two edges leave vertex {v} at the same angle; "
                "adjust coordinates or bends"
            )
        rotation.append(tuple(sorted(nbrs, key=lambda u: -angles[u])))

    if outer_walk is not None or n == 1:
        return PlaneGraph.build(g, rotation, outer_walk=outer_walk or (0,))

    # Outer face detection: at the bottommost (then leftmost) vertex, the
    # unbounded region lies below, so the outer boundary leaves through the
    # neighbour of maximum angle.
    a = min(range(n), key=lambda v: (pos[v][1], pos[v][0]))
    if not g.adjacency[a]:
        raise ValueError("isolated vertex in a multi-vertex drawing")
    b = max(g.adjacency[a], key=lambda u: angle(a, u))
    faces = _trace_faces(n, rotation)
    outer = next(
        f
        for f in faces
        for d in f.darts()
        if d == (a, b)
    )
    return PlaneGraph.build(g, rotation, outer_walk=outer.walk)
