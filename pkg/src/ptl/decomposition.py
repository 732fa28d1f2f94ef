"""Triangular-block structure of plane graphs.

Given a plane graph, the bounded triangular faces decompose into
*triangular blocks*: maximal groups of inner 3-faces connected through
shared edges.  Blocks sharing at least one vertex (a *junction* vertex)
group further into *triangular components*.  The module computes this
decomposition together with:

* the partition of edges by how many 3-faces they lie on
  (:func:`e_i_analysis`), with the double-counting identity
  ``3*f3 == |E'| + 2*|E_I|``;
* the theta configuration spanned by an edge lying on two 3-faces
  (:func:`theta_of_edge`) and the classification of how two such
  configurations overlap (:func:`classify_theta_pair`);
* hole detection and the *solid* version of a block, where every hole
  bounded by a 3-cycle is reclassified as a 3-face (:func:`solidify`);
* exact triangle densities ``delta / |vertices|`` as
  :class:`fractions.Fraction` values.

Block and component machinery counts **inner** 3-faces only (the
designated outer face never contributes to ``delta``), while
:func:`e_i_analysis` defaults to counting the outer face when it is
triangular; both conventions are available via ``include_outer``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .embedding import (
    Edge,
    Face,
    Graph,
    PlaneGraph,
    is_isomorphic,
    normalize_edge,
)
from .patterns import fixture

__all__ = [
    "Decomposition",
    "EIReport",
    "ThetaEdge",
    "ThetaPairRecord",
    "TriBlock",
    "TriComponent",
    "classify_theta_pair",
    "decompose",
    "e_i_analysis",
    "solidify",
    "theta_of_edge",
    "theta_pair_survey",
    "three_faces",
    "triangle_density",
]


# =========================================================================
# 3-faces and the E_I / E' partition
# =========================================================================


def three_faces(pg: PlaneGraph, include_outer: bool = True) -> tuple[Face, ...]:
    """Triangular faces of ``pg``.

    Args:
        pg: The plane graph.
        include_outer: Whether a triangular outer face is counted.
    """
    faces = pg.faces() if include_outer else pg.inner_faces()
    return tuple(f for f in faces if f.is_triangle())


@dataclass(frozen=True)
class EIReport:
    """Edge partition by number of incident 3-faces.

    Attributes:
        include_outer: Which convention produced the report.
        f3: Number of 3-faces under that convention.
        e_i: Edges lying on two 3-faces.
        e_prime: Edges lying on exactly one 3-face.
    """

    include_outer: bool
    f3: int
    e_i: frozenset[Edge]
    e_prime: frozenset[Edge]

    @property
    def identity_holds(self) -> bool:
        """The double-counting identity ``3*f3 == |E'| + 2*|E_I|``."""
        return 3 * self.f3 == len(self.e_prime) + 2 * len(self.e_i)

    def d_i(self, v: int) -> int:
        """Number of ``e_i`` edges incident to vertex ``v``."""
        return sum(1 for e in self.e_i if v in e)

    @property
    def delta_i(self) -> int:
        """Maximum degree of the subgraph formed by the ``e_i`` edges."""
        counts: dict[int, int] = {}
        for u, v in self.e_i:
            counts[u] = counts.get(u, 0) + 1
            counts[v] = counts.get(v, 0) + 1
        return max(counts.values(), default=0)


def e_i_analysis(pg: PlaneGraph, include_outer: bool = True) -> EIReport:
    """Partition the edges of ``pg`` by incident 3-face count."""
    triangles = set(three_faces(pg, include_outer=include_outer))
    e_i: set[Edge] = set()
    e_prime: set[Edge] = set()
    for e in pg.graph.edges:
        f1, f2 = pg.faces_of_edge(e)
        count = (f1 in triangles) + (f2 in triangles)
        if count == 2:
            e_i.add(e)
        elif count == 1:
            e_prime.add(e)
    return EIReport(
        include_outer=include_outer,
        f3=len(triangles),
        e_i=frozenset(e_i),
        e_prime=frozenset(e_prime),
    )


# =========================================================================
# Theta configurations
# =========================================================================


@dataclass(frozen=True)
class ThetaEdge:
    """The two 3-faces spanned by an edge lying on both of them.

    The union is a 4-cycle plus the chord ``edge``: four vertices, five
    edges.
    """

    edge: Edge
    faces: tuple[Face, Face]

    @property
    def vertices(self) -> frozenset[int]:
        """The four vertices of the configuration."""
        return self.faces[0].vertices | self.faces[1].vertices

    @property
    def edges(self) -> frozenset[Edge]:
        """The five edges of the configuration."""
        return self.faces[0].edge_set | self.faces[1].edge_set

    def as_graph(self) -> tuple[Graph, tuple[int, ...]]:
        """Abstract copy on ``0..3``; also returns the vertex order used."""
        order = tuple(sorted(self.vertices))
        index = {v: i for i, v in enumerate(order)}
        g = Graph.from_edges(
            4, [(index[u], index[v]) for u, v in self.edges]
        )
        return g, order


def theta_of_edge(
    pg: PlaneGraph, e: Edge, include_outer: bool = True
) -> ThetaEdge | None:
    """The theta configuration of ``e``, or ``None`` if ``e`` is not on
    two 3-faces (under the chosen outer-face convention)."""
    e = normalize_edge(*e)
    f1, f2 = pg.faces_of_edge(e)
    if not (f1.is_triangle() and f2.is_triangle()) or f1 == f2:
        return None
    if not include_outer and pg.outer in (f1, f2):
        return None
    return ThetaEdge(edge=e, faces=(f1, f2))


def classify_theta_pair(
    pg: PlaneGraph, e: Edge, f: Edge, include_outer: bool = True
) -> str:
    """Classify how the theta configurations of two ``E_I`` edges overlap.

    Returns:
        ``"Overlapping"`` when the two configurations share a number of
        vertices other than two; otherwise ``"D1"``, ``"D2"`` or ``"D3"``
        when the union of the two configurations is isomorphic to the
        corresponding fixture, and ``"Other"`` when it is not (possible
        e.g. when the configurations share edges).

    Raises:
        ValueError: If ``e`` or ``f`` does not lie on two 3-faces.
    """
    te = theta_of_edge(pg, e, include_outer=include_outer)
    tf = theta_of_edge(pg, f, include_outer=include_outer)
    if te is None or tf is None:
        raise ValueError("both edges must lie on two 3-faces")
    shared = te.vertices & tf.vertices
    if len(shared) != 2:
        return "Overlapping"
    vertices = sorted(te.vertices | tf.vertices)
    index = {v: i for i, v in enumerate(vertices)}
    union = Graph.from_edges(
        len(vertices),
        [(index[u], index[v]) for u, v in te.edges | tf.edges],
    )
    for name in ("D1", "D2", "D3"):
        if is_isomorphic(union, fixture(name)):
            return name
    return "Other"


@dataclass(frozen=True)
class ThetaPairRecord:
    """Survey entry for one unordered pair of ``E_I`` edges.

    Attributes:
        e: First edge (lexicographically smaller).
        f: Second edge.
        shared: Number of vertices shared by the two theta configurations.
        detached: True when at least one of the edges has no endpoint
            inside the other edge's theta configuration (the hypothesis
            under which a two-vertex overlap is guaranteed to classify as
            a fixture).
        label: Classification when ``shared == 2``, else ``None``.
    """

    e: Edge
    f: Edge
    shared: int
    detached: bool
    label: str | None


def theta_pair_survey(
    pg: PlaneGraph, include_outer: bool = True
) -> tuple[ThetaPairRecord, ...]:
    """Classify every unordered pair of distinct ``E_I`` edges."""
    report = e_i_analysis(pg, include_outer=include_outer)
    edges = sorted(report.e_i)
    thetas = {
        e: theta_of_edge(pg, e, include_outer=include_outer) for e in edges
    }
    records: list[ThetaPairRecord] = []
    for i, e in enumerate(edges):
        te = thetas[e]
        assert te is not None
        for f in edges[i + 1 :]:
            tf = thetas[f]
            assert tf is not None
            shared = len(te.vertices & tf.vertices)
            detached = (
                not (set(f) & te.vertices) or not (set(e) & tf.vertices)
            )
            label = (
                classify_theta_pair(pg, e, f, include_outer=include_outer)
                if shared == 2
                else None
            )
            records.append(
                ThetaPairRecord(
                    e=e, f=f, shared=shared, detached=detached, label=label
                )
            )
    return tuple(records)


# =========================================================================
# Triangular blocks
# =========================================================================


@dataclass(frozen=True)
class TriBlock:
    """A triangular block: inner 3-faces connected through shared edges.

    Attributes:
        faces: The 3-faces counted by the block (sorted by walk).  After
            :func:`solidify` this also contains reclassified 3-cycle
            holes, which are then no longer faces of the host.
        holes: Inner faces of the block's plane subgraph that are not
            3-faces of the block (boundary walks in the host's labels).
        vertices: Vertices covered by the block.
        edges: Edges covered by the block (the union of its faces' edges).
    """

    faces: tuple[Face, ...]
    holes: tuple[Face, ...]
    vertices: frozenset[int]
    edges: frozenset[Edge]

    @property
    def delta(self) -> int:
        """Number of 3-faces of the block."""
        return len(self.faces)

    @property
    def density(self) -> Fraction:
        """Triangle density ``delta / |vertices|`` (exact)."""
        return Fraction(self.delta, len(self.vertices))

    @property
    def is_solid(self) -> bool:
        """Whether no hole is bounded by a 3-cycle."""
        return all(not h.is_triangle() for h in self.holes)

    def as_graph(self) -> tuple[Graph, tuple[int, ...]]:
        """Abstract copy on ``0..k-1``; also returns the host vertex order."""
        order = tuple(sorted(self.vertices))
        index = {v: i for i, v in enumerate(order)}
        g = Graph.from_edges(
            len(order), [(index[u], index[v]) for u, v in self.edges]
        )
        return g, order

    def plane_subgraph(self, pg: PlaneGraph) -> PlaneGraph:
        """The block as a plane graph (host labels compacted, rotations
        restricted, outer face = the block face containing the host's
        outer region)."""
        return _restrict_plane(pg, self.edges)[0]


def solidify(block: TriBlock) -> TriBlock:
    """Reclassify every 3-cycle hole as a 3-face.

    The solid version has the same vertices and edges; holes bounded by
    triangles move into ``faces`` (raising ``delta``), all other holes
    remain.
    """
    gained = tuple(h for h in block.holes if h.is_triangle())
    if not gained:
        return block
    return TriBlock(
        faces=tuple(sorted(block.faces + gained, key=lambda f: f.walk)),
        holes=tuple(h for h in block.holes if not h.is_triangle()),
        vertices=block.vertices,
        edges=block.edges,
    )


@dataclass(frozen=True)
class TriComponent:
    """A maximal group of triangular blocks connected by shared vertices."""

    blocks: tuple[TriBlock, ...]

    @property
    def vertices(self) -> frozenset[int]:
        """Vertices covered by the component."""
        out: frozenset[int] = frozenset()
        for b in self.blocks:
            out |= b.vertices
        return out

    @property
    def delta(self) -> int:
        """Total number of 3-faces over the member blocks."""
        return sum(b.delta for b in self.blocks)

    @property
    def density(self) -> Fraction:
        """Triangle density ``delta / |vertices|`` (exact)."""
        return Fraction(self.delta, len(self.vertices))


def triangle_density(obj: "TriBlock | TriComponent") -> Fraction:
    """Exact triangle density of a block or component."""
    return obj.density


@dataclass(frozen=True)
class Decomposition:
    """Full triangular decomposition of a plane graph.

    Attributes:
        plane: The analysed plane graph.
        blocks: Triangular blocks (solidified unless ``decompose`` was
            told otherwise), sorted by smallest covered vertex.
        components: Triangular components over those blocks.
        junctions: Vertices lying in at least two blocks.
    """

    plane: PlaneGraph
    blocks: tuple[TriBlock, ...]
    components: tuple[TriComponent, ...]
    junctions: frozenset[int]


def _restrict_plane(
    pg: PlaneGraph, keep_edges: frozenset[Edge]
) -> tuple[PlaneGraph, tuple[int, ...]]:
    """Plane subgraph on ``keep_edges`` with rotations inherited.

    Returns the subgraph (labels compacted to ``0..k-1``) and the host
    vertex order realising the compaction.  The subgraph's outer face is
    the face whose region contains the host's outer face.
    """
    vertices = sorted({v for e in keep_edges for v in e})
    index = {v: i for i, v in enumerate(vertices)}
    rotation = [
        tuple(
            index[u]
            for u in pg.rotation[v]
            if normalize_edge(v, u) in keep_edges
        )
        for v in vertices
    ]
    graph = Graph.from_edges(
        len(vertices), [(index[u], index[v]) for u, v in keep_edges]
    )
    # Region analysis: host faces merge across removed edges.
    host_faces = pg.faces()
    face_id = {f: i for i, f in enumerate(host_faces)}
    parent = list(range(len(host_faces)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in pg.graph.edges:
        if e not in keep_edges:
            f1, f2 = pg.faces_of_edge(e)
            r1, r2 = find(face_id[f1]), find(face_id[f2])
            if r1 != r2:
                parent[r1] = r2
    outer_region = find(face_id[pg.outer])

    sub = PlaneGraph.build(graph, rotation, outer_walk=None)
    outer_face: Face | None = None
    back = {i: v for v, i in index.items()}
    for f in sub.faces():
        darts = f.darts()
        if not darts:
            continue
        u, v = darts[0]
        host_face = pg._face_of_dart[(back[u], back[v])]
        if find(face_id[host_face]) == outer_region:
            outer_face = f
            break
    if outer_face is None:  # pragma: no cover - defensive
        raise AssertionError("no subgraph face contains the outer region")
    return sub.with_outer(outer_face), tuple(vertices)


def _block_from_class(pg: PlaneGraph, faces: list[Face]) -> TriBlock:
    vertices: set[int] = set()
    edges: set[Edge] = set()
    for f in faces:
        vertices |= f.vertices
        edges |= f.edge_set
    sub, order = _restrict_plane(pg, frozenset(edges))
    face_set = set(faces)
    holes: list[Face] = []
    for f in sub.inner_faces():
        walk = tuple(order[i] for i in f.walk)
        host_face = Face(min(walk[i:] + walk[:i] for i in range(len(walk))))
        if host_face not in face_set:
            holes.append(host_face)
    return TriBlock(
        faces=tuple(sorted(faces, key=lambda f: f.walk)),
        holes=tuple(sorted(holes, key=lambda f: f.walk)),
        vertices=frozenset(vertices),
        edges=frozenset(edges),
    )


def decompose(pg: PlaneGraph, solid: bool = True) -> Decomposition:
    """Decompose a plane graph into triangular blocks and components.

    Blocks are built from the **inner** 3-faces; two 3-faces belong to the
    same block when they are linked by a chain of 3-faces consecutively
    sharing edges.  Blocks sharing a vertex (junction) form components.

    Args:
        pg: The plane graph.
        solid: Reclassify 3-cycle holes as 3-faces in every block
            (the default; pass ``False`` for the raw blocks).
    """
    triangles = list(three_faces(pg, include_outer=False))
    tri_id = {f: i for i, f in enumerate(triangles)}
    parent = list(range(len(triangles)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    by_edge: dict[Edge, list[int]] = {}
    for f in triangles:
        for e in f.edge_set:
            by_edge.setdefault(e, []).append(tri_id[f])
    for members in by_edge.values():
        for other in members[1:]:
            r1, r2 = find(members[0]), find(other)
            if r1 != r2:
                parent[r1] = r2

    classes: dict[int, list[Face]] = {}
    for f in triangles:
        classes.setdefault(find(tri_id[f]), []).append(f)
    blocks = [
        _block_from_class(pg, faces)
        for faces in classes.values()
    ]
    if solid:
        blocks = [solidify(b) for b in blocks]
    blocks.sort(key=lambda b: sorted(b.vertices))

    # Components: union-find over blocks sharing vertices.
    bparent = list(range(len(blocks)))

    def bfind(x: int) -> int:
        while bparent[x] != x:
            bparent[x] = bparent[bparent[x]]
            x = bparent[x]
        return x

    by_vertex: dict[int, list[int]] = {}
    for i, b in enumerate(blocks):
        for v in b.vertices:
            by_vertex.setdefault(v, []).append(i)
    junctions = frozenset(
        v for v, members in by_vertex.items() if len(members) > 1
    )
    for members in by_vertex.values():
        for other in members[1:]:
            r1, r2 = bfind(members[0]), bfind(other)
            if r1 != r2:
                bparent[r1] = r2
    comp_members: dict[int, list[TriBlock]] = {}
    for i, b in enumerate(blocks):
        comp_members.setdefault(bfind(i), []).append(b)
    components = tuple(
        sorted(
            (TriComponent(blocks=tuple(bs)) for bs in comp_members.values()),
            key=lambda c: sorted(c.vertices),
        )
    )
    return Decomposition(
        plane=pg,
        blocks=tuple(blocks),
        components=components,
        junctions=junctions,
    )
