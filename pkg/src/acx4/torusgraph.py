"""2-regular labeled directed graphs and their correspondence with families.

Vertices are opaque strings; every vertex meets exactly two edge ends, so
each connected component is a cycle.  Edge directions in stored graphs are
arbitrary: reversing an edge while negating its label describes the same
sphere, and every algorithm here first normalizes each component into a
consistently directed cycle through that identity, which leaves the weights
seen at every vertex unchanged.

The traversal labels of a normalized component form a multi-fan, and that
reading is a bijection between admissible graphs and admissible families:
graph_to_family and family_to_graph invert each other exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import lattice
from .errors import (
    DomainError,
    MultiEdge,
    NotABasis,
    NotBlowDownable,
    NotTwoRegular,
    OrientationFlip,
    RecurrenceFails,
    SelfLoop,
    TooShort,
    UnknownVertex,
    WeightsNotBasis,
    ZeroLabel,
    ZeroVector,
)
from .lattice import Vec
from .multifan import MultiFanFamily, validate_multifan


@dataclass(frozen=True)
class Edge:
    src: str
    dst: str
    label: Vec


@dataclass(frozen=True)
class TorusGraph:
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]


@dataclass(frozen=True)
class GkmRelation:
    """Per-edge congruence: classes at source and target differ by a
    multiple of the generator."""

    source: str
    target: str
    generator: Vec


def _as_edge(item, index) -> Edge:
    if isinstance(item, Edge):
        src, dst, label = item.src, item.dst, item.label
    else:
        try:
            src, dst, label = item
        except (TypeError, ValueError):
            raise DomainError(f"edge at index {index} is not a triple") from None
    try:
        x, y = label
    except (TypeError, ValueError):
        raise DomainError(f"edge at index {index}: label is not a pair") from None
    if not isinstance(x, int) or not isinstance(y, int):
        raise DomainError(f"edge at index {index}: label must have integer entries")
    return Edge(str(src), str(dst), (x, y))


def _incidences(g: TorusGraph):
    # vertex -> [(edge index, outgoing?)], two entries per vertex once validated
    inc = {v: [] for v in g.vertices}
    for idx, e in enumerate(g.edges):
        inc[e.src].append((idx, True))
        inc[e.dst].append((idx, False))
    return inc


def _component_vertices(g, inc, v0):
    seen = {v0}
    stack = [v0]
    while stack:
        v = stack.pop()
        for idx, outgoing in inc[v]:
            e = g.edges[idx]
            u = e.dst if outgoing else e.src
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return seen


def _normalized_components(g: TorusGraph):
    """Walk each component as a directed cycle of (edge index, oriented edge).

    Components come out in first-appearance order of their vertices.  Each
    traversal starts at the component's least vertex id and follows that
    vertex's outgoing edge when it has one (the earlier-stored edge on a
    tie), so an already consistent cycle is reproduced verbatim; edges
    walked against their stored direction appear reversed with negated
    labels.
    """
    inc = _incidences(g)
    visited = set()
    cycles = []
    for seed in g.vertices:
        if seed in visited:
            continue
        component = _component_vertices(g, inc, seed)
        visited |= component
        start = min(component)
        slots = inc[start]
        outgoing_slots = [s for s in slots if s[1]]
        idx, outgoing = outgoing_slots[0] if outgoing_slots else slots[0]
        cycle = []
        cur = start
        while True:
            e = g.edges[idx]
            oriented = e if outgoing else Edge(cur, e.src, lattice.neg(e.label))
            cycle.append((idx, oriented))
            cur = oriented.dst
            if cur == start:
                break
            idx, outgoing = next(s for s in inc[cur] if s[0] != idx)
        cycles.append(cycle)
    return cycles


def validate_graph(vertices, edges) -> TorusGraph:
    """Check structure and label admissibility; return the validated graph.

    Structure: known endpoints, nonzero labels, no self-loops, at most one
    edge per vertex pair, exactly two edge ends at each vertex.  Labels:
    the two weights at every vertex form a lattice basis and each cycle
    label is an integer combination -a*w2 - w1 of its two predecessors,
    checked as a constant consecutive determinant along the traversal.
    """
    verts = tuple(str(v) for v in vertices)
    if not verts:
        raise DomainError("a graph needs at least one cycle of vertices")
    if len(set(verts)) != len(verts):
        raise DomainError("duplicate vertex id")
    vset = set(verts)
    es = tuple(_as_edge(item, i) for i, item in enumerate(edges))
    for e in es:
        if e.src not in vset:
            raise UnknownVertex(e.src)
        if e.dst not in vset:
            raise UnknownVertex(e.dst)
        if e.label == (0, 0):
            raise ZeroLabel(e)
        if e.src == e.dst:
            raise SelfLoop(e)
    seen_pairs = set()
    for e in es:
        pair = frozenset((e.src, e.dst))
        if pair in seen_pairs:
            raise MultiEdge(e.src, e.dst)
        seen_pairs.add(pair)
    degree = dict.fromkeys(verts, 0)
    for e in es:
        degree[e.src] += 1
        degree[e.dst] += 1
    for v in verts:
        if degree[v] != 2:
            raise NotTwoRegular(v, degree[v])

    g = TorusGraph(verts, es)
    for cycle in _normalized_components(g):
        labels = [oe.label for _, oe in cycle]
        try:
            validate_multifan(labels)
        except NotABasis as exc:
            # the failing pair meets at the source of the edge at that index
            raise WeightsNotBasis(cycle[exc.index][1].src) from None
        except OrientationFlip as exc:
            k = len(cycle)
            triple = tuple(cycle[(exc.index + t) % k][1] for t in (-2, -1, 0))
            raise RecurrenceFails(triple) from None
        except (TooShort, ZeroVector) as exc:  # pragma: no cover
            raise DomainError(f"component traversal failed: {exc}") from exc
    return g


def weights_at(g: TorusGraph, v: str) -> tuple[Vec, Vec]:
    """The two tangent weights at a vertex, sorted: +label per outgoing
    edge and -label per incoming edge."""
    if v not in g.vertices:
        raise UnknownVertex(v)
    ws = []
    for e in g.edges:
        if e.src == v:
            ws.append(e.label)
        if e.dst == v:
            ws.append(lattice.neg(e.label))
    return tuple(sorted(ws))


def normalize_orientation(g: TorusGraph) -> TorusGraph:
    """Redirect every component into a single directed cycle.

    Edges keep their stored positions; a reversed edge gets a negated
    label, so weights_at is unchanged at every vertex.
    """
    new_edges = list(g.edges)
    for cycle in _normalized_components(g):
        for idx, oriented in cycle:
            new_edges[idx] = oriented
    return TorusGraph(g.vertices, tuple(new_edges))


def graph_to_family(g: TorusGraph) -> MultiFanFamily:
    """One fan per component: the normalized traversal labels in order."""
    fans = tuple(
        validate_multifan([oe.label for _, oe in cycle])
        for cycle in _normalized_components(g)
    )
    return MultiFanFamily(fans)


def family_to_graph(fam: MultiFanFamily) -> TorusGraph:
    """One directed cycle per fan, with vertices named p{j},{i} (1-based)."""
    vertices = []
    edges = []
    for j, fan in enumerate(fam.fans):
        k = len(fan.vectors)
        names = [f"p{j + 1},{i + 1}" for i in range(k)]
        vertices.extend(names)
        edges.extend(
            Edge(names[i], names[(i + 1) % k], fan.vectors[i]) for i in range(k)
        )
    return TorusGraph(tuple(vertices), tuple(edges))


def _fresh(base, used):
    name = base
    n = 2
    while name in used:
        name = f"{base}_{n}"
        n += 1
    used.add(name)
    return name


def blow_up_graph(g: TorusGraph, v: str) -> TorusGraph:
    """Split vertex v into an edge labeled by the sum of its two weights.

    After normalization v has one incoming edge (p', v, w1) and one
    outgoing edge (v, p'', w2); v is replaced by fresh vertices v', v''
    joined by a (w1+w2)-edge, keeping the outer edges' labels.
    """
    if v not in g.vertices:
        raise UnknownVertex(v)
    ng = normalize_orientation(g)
    (in_idx,) = [i for i, e in enumerate(ng.edges) if e.dst == v]
    (out_idx,) = [i for i, e in enumerate(ng.edges) if e.src == v]
    in_e = ng.edges[in_idx]
    out_e = ng.edges[out_idx]
    used = set(ng.vertices)
    used.discard(v)
    v1 = _fresh(v + "'", used)
    v2 = _fresh(v + "''", used)
    vertices = []
    for u in ng.vertices:
        if u == v:
            vertices.extend((v1, v2))
        else:
            vertices.append(u)
    middle = Edge(v1, v2, lattice.add(in_e.label, out_e.label))
    edges = []
    for i, e in enumerate(ng.edges):
        if i == in_idx:
            edges.append(Edge(e.src, v1, e.label))
            edges.append(middle)
        elif i == out_idx:
            edges.append(Edge(v2, e.dst, e.label))
        else:
            edges.append(e)
    return validate_graph(vertices, edges)


def blow_down_graph(g: TorusGraph, edge) -> TorusGraph:
    """Contract an exceptional edge to a single vertex.

    The edge may be given as an Edge or a (vertex, vertex) pair and is
    matched direction-insensitively.  With normalized pattern (p', p1, w1),
    (p1, p2, w), (p2, p'', w2) it applies only when w = w1 + w2; the
    contracted vertex takes the lexicographically smaller of the two ids.
    """
    if isinstance(edge, Edge):
        a, b = edge.src, edge.dst
    else:
        a, b = edge
    for u in (a, b):
        if u not in g.vertices:
            raise UnknownVertex(u)
    ng = normalize_orientation(g)
    mids = [i for i, e in enumerate(ng.edges) if {e.src, e.dst} == {a, b}]
    if not mids:
        raise DomainError(f"no edge joins {a!r} and {b!r}")
    (mid_idx,) = mids
    mid = ng.edges[mid_idx]
    p1, p2 = mid.src, mid.dst
    (in_idx,) = [i for i, e in enumerate(ng.edges) if e.dst == p1]
    (out_idx,) = [i for i, e in enumerate(ng.edges) if e.src == p2]
    in_e = ng.edges[in_idx]
    out_e = ng.edges[out_idx]
    if mid.label != lattice.add(in_e.label, out_e.label):
        raise NotBlowDownable((p1, p2))
    # keep the earlier list slot so component discovery order is undisturbed
    p = min(p1, p2)
    first = p1 if ng.vertices.index(p1) < ng.vertices.index(p2) else p2
    vertices = [p if u == first else u
                for u in ng.vertices if u in (first,) or u not in (p1, p2)]
    edges = []
    for i, e in enumerate(ng.edges):
        if i == mid_idx:
            continue
        if i == in_idx:
            edges.append(Edge(e.src, p, e.label))
        elif i == out_idx:
            edges.append(Edge(p, e.dst, e.label))
        else:
            edges.append(e)
    return validate_graph(vertices, edges)


_MINIMAL_BLOCKS = (
    ((1, 0), (0, 1), (-1, 0), (0, -1)),
    ((1, 0), (0, -1), (-1, 0), (0, 1)),
)


def _matches_minimal(labels):
    for t in range(0, len(labels), 4):
        if tuple(labels[t : t + 4]) not in _MINIMAL_BLOCKS:
            return False
    return True


def is_minimal_graph(g: TorusGraph) -> bool:
    """True iff every component cycle reads the literal unit label pattern.

    Starting at some vertex of the normalized traversal, the labels must be
    (1,0), (0,a), (-1,0), (0,-a) repeated, with a in {-1, +1} per block.
    The check is against these literal coordinates, not a basis-change
    orbit.
    """
    for cycle in _normalized_components(g):
        labels = [oe.label for _, oe in cycle]
        k = len(labels)
        if k % 4 != 0:
            return False
        if not any(_matches_minimal(labels[r:] + labels[:r]) for r in range(k)):
            return False
    return True


def is_connected(g: TorusGraph) -> bool:
    if not g.vertices:
        return True
    inc = _incidences(g)
    return len(_component_vertices(g, inc, g.vertices[0])) == len(g.vertices)


def gkm_relations(g: TorusGraph) -> list[GkmRelation]:
    """One relation per stored edge: (source, target, label)."""
    return [GkmRelation(e.src, e.dst, e.label) for e in g.edges]
