"""Finite-graph metric machinery: the edge relation Theta, partial-cube and
median recognition, daisy-cube recognition with proper labellings, and the
expansion operations used to rebuild resonance graphs step by step.

Everything here is a definitional brute-force oracle: distances come from
breadth-first search, Theta from the four-point inequality, medianness from
interval triples, daisy recognition from an orientation search.  The point
is to be trustworthy at desk scale, not fast.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .errors import CapExceeded, NotAnExpansion

_EXHAUSTIVE_IDIM_CAP = 20


def _edge_key(u, v):
    return (u, v) if u <= v else (v, u)


class MetricGraph:
    """An undirected graph with its all-pairs distance table and optional labels."""

    def __init__(self, vertices, edges, labels=None):
        self.vertices = tuple(vertices)
        vset = set(self.vertices)
        adj = {v: set() for v in self.vertices}
        eset = set()
        for u, v in edges:
            if u not in vset or v not in vset or u == v:
                raise ValueError(f"bad edge ({u!r}, {v!r})")
            adj[u].add(v)
            adj[v].add(u)
            eset.add(_edge_key(u, v))
        self.adjacency = {v: frozenset(ws) for v, ws in adj.items()}
        self.edges = frozenset(eset)
        self.labels = dict(labels) if labels else None

    @cached_property
    def dist(self) -> dict:
        table = {}
        for source in self.vertices:
            d = {source: 0}
            frontier = [source]
            step = 0
            while frontier:
                step += 1
                nxt = []
                for v in frontier:
                    for w in self.adjacency[v]:
                        if w not in d:
                            d[w] = step
                            nxt.append(w)
                frontier = nxt
            table[source] = d
        return table

    def d(self, u, v) -> int:
        return self.dist[u][v]

    @property
    def is_connected(self) -> bool:
        return all(len(self.dist[v]) == len(self.vertices) for v in self.vertices[:1])

    @cached_property
    def is_bipartite(self) -> bool:
        color = {}
        for start in self.vertices:
            if start in color:
                continue
            color[start] = 0
            stack = [start]
            while stack:
                v = stack.pop()
                for w in self.adjacency[v]:
                    if w not in color:
                        color[w] = 1 - color[v]
                        stack.append(w)
                    elif color[w] == color[v]:
                        return False
        return True

    def interval(self, u, v) -> frozenset:
        duv = self.d(u, v)
        du = self.dist[u]
        dv = self.dist[v]
        return frozenset(w for w in self.vertices if du[w] + dv[w] == duv)

    def induced(self, vertex_subset, keep_labels=True) -> "MetricGraph":
        sub = set(vertex_subset)
        edges = [(u, v) for u, v in self.edges if u in sub and v in sub]
        labels = None
        if keep_labels and self.labels is not None:
            labels = {v: self.labels[v] for v in sub}
        return MetricGraph(sorted(sub), edges, labels)

    def with_labels(self, labels) -> "MetricGraph":
        return MetricGraph(self.vertices, self.edges, labels)

    def component_count(self) -> int:
        seen = set()
        n = 0
        for start in self.vertices:
            if start in seen:
                continue
            n += 1
            stack = [start]
            seen.add(start)
            while stack:
                v = stack.pop()
                for w in self.adjacency[v]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
        return n


# ---------------------------------------------------------------------------
# relation Theta
# ---------------------------------------------------------------------------


def theta_related(mg: MetricGraph, e1, e2) -> bool:
    """Four-point test: d(x1,y1) + d(x2,y2) != d(x1,y2) + d(x2,y1).

    Swapping one edge's endpoints swaps the two sums, so the relation does
    not depend on how the unordered edges are written down.
    """
    (x1, x2), (y1, y2) = e1, e2
    return mg.d(x1, y1) + mg.d(x2, y2) != mg.d(x1, y2) + mg.d(x2, y1)


@dataclass(frozen=True)
class ThetaClasses:
    classes: tuple  # tuple of frozensets of edges, sorted by smallest edge
    raw_transitive: bool

    def class_of(self, e) -> frozenset:
        key = _edge_key(*e)
        for cls in self.classes:
            if key in cls:
                return cls
        raise KeyError(e)


def theta_classes(mg: MetricGraph) -> ThetaClasses:
    """Partition the edges by the transitive closure of Theta.

    The ``raw_transitive`` flag records whether Theta itself was already an
    equivalence (true on every partial cube)."""
    edges = sorted(mg.edges)
    parent = {e: e for e in edges}

    def find(e):
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    related = {}
    for e1, e2 in combinations(edges, 2):
        r = theta_related(mg, e1, e2)
        related[(e1, e2)] = r
        if r:
            parent[find(e1)] = find(e2)

    groups = {}
    for e in edges:
        groups.setdefault(find(e), []).append(e)
    classes = tuple(
        sorted((frozenset(g) for g in groups.values()), key=lambda c: sorted(c))
    )

    raw = True
    for cls in classes:
        for e1, e2 in combinations(sorted(cls), 2):
            if not related.get((e1, e2), related.get((e2, e1))):
                raw = False
                break
        if not raw:
            break
    return ThetaClasses(classes, raw)


@dataclass(frozen=True)
class ClassSplit:
    """The side sets of one Theta class for a representative edge (x, y).

    ``w_x`` holds the vertices strictly closer to x, ``u_x`` those of them
    with a neighbor across the cut; a side is peripheral when u = w."""

    edge: tuple
    w_x: frozenset
    w_y: frozenset
    u_x: frozenset
    u_y: frozenset

    @property
    def x_peripheral(self) -> bool:
        return self.w_x == self.u_x

    @property
    def y_peripheral(self) -> bool:
        return self.w_y == self.u_y

    @property
    def peripheral(self) -> bool:
        return self.x_peripheral or self.y_peripheral


def split_class(mg: MetricGraph, class_edges) -> ClassSplit:
    """Compute W/U side sets for the smallest edge of the class."""
    cls = sorted(_edge_key(u, v) for u, v in class_edges)
    x, y = cls[0]
    w_x = frozenset(v for v in mg.vertices if mg.d(v, x) < mg.d(v, y))
    w_y = frozenset(v for v in mg.vertices if mg.d(v, y) < mg.d(v, x))
    u_x = frozenset(
        v for v in w_x if any(w in w_y for w in mg.adjacency[v])
    )
    u_y = frozenset(
        v for v in w_y if any(w in w_x for w in mg.adjacency[v])
    )
    return ClassSplit((x, y), w_x, w_y, u_x, u_y)


# ---------------------------------------------------------------------------
# partial cubes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PartialCubeVerdict:
    ok: bool
    labelling: dict = None  # vertex -> bit string, root gets all zeros
    idim: int = None
    theta_raw_transitive: bool = None
    reason: str = None

    def __bool__(self):
        return self.ok


def is_partial_cube(mg: MetricGraph) -> PartialCubeVerdict:
    """Recognize isometric subgraphs of hypercubes.

    Builds a candidate labelling (one bit per Theta class, the smallest
    vertex on the zero side everywhere) and verifies that Hamming distance
    equals graph distance for every pair; the verification is the verdict.
    """
    if not mg.vertices:
        return PartialCubeVerdict(False, reason="empty graph")
    if not mg.is_connected:
        return PartialCubeVerdict(False, reason="not connected")
    if not mg.is_bipartite:
        return PartialCubeVerdict(False, reason="not bipartite")
    classes = theta_classes(mg)
    if not classes.raw_transitive:
        return PartialCubeVerdict(
            False, theta_raw_transitive=False, reason="Theta not transitive"
        )
    root = mg.vertices[0]
    bits = {v: [] for v in mg.vertices}
    for cls in classes.classes:
        x, y = sorted(cls)[0]
        if mg.d(root, x) > mg.d(root, y):
            x, y = y, x
        for v in mg.vertices:
            dx, dy = mg.d(v, x), mg.d(v, y)
            if dx == dy:
                return PartialCubeVerdict(
                    False, theta_raw_transitive=True, reason="tied side distances"
                )
            bits[v].append("0" if dx < dy else "1")
    labelling = {v: "".join(b) for v, b in bits.items()}
    for u, v in combinations(mg.vertices, 2):
        hamming = sum(a != b for a, b in zip(labelling[u], labelling[v]))
        if hamming != mg.d(u, v):
            return PartialCubeVerdict(
                False, theta_raw_transitive=True, reason="labelling not isometric"
            )
    return PartialCubeVerdict(
        True,
        labelling=labelling,
        idim=len(classes.classes),
        theta_raw_transitive=True,
    )


def is_median(mg: MetricGraph) -> bool:
    """Brute-force median test over all vertex triples."""
    if not mg.is_connected:
        return False
    intervals = {}
    verts = mg.vertices
    for u, v in combinations(verts, 2):
        intervals[(u, v)] = mg.interval(u, v)

    def iv(a, b):
        if a == b:
            return frozenset((a,))
        return intervals.get((a, b)) or intervals[(b, a)]

    for u, v, w in combinations(verts, 3):
        if len(iv(u, v) & iv(v, w) & iv(u, w)) != 1:
            return False
    return True


# ---------------------------------------------------------------------------
# daisy cubes
# ---------------------------------------------------------------------------


def label_leq(u: str, v: str) -> bool:
    """Coordinatewise order on equal-length bit strings."""
    return all(a <= b for a, b in zip(u, v))


def operator_o(labels: dict, subset) -> frozenset:
    """Downward closure of a vertex subset inside the labelled vertex set."""
    chosen = [labels[v] for v in subset]
    return frozenset(
        v for v, lab in labels.items() if any(label_leq(lab, c) for c in chosen)
    )


def is_downward_closed(label_set) -> bool:
    """Whether a set of bit strings is closed downward in the coordinatewise order."""
    # every lower cover of every member is present; induction gives full closure
    labs = set(label_set)
    for lab in labs:
        for i, c in enumerate(lab):
            if c == "1" and lab[:i] + "0" + lab[i + 1 :] not in labs:
                return False
    return True


def is_isometric_labelling(mg: MetricGraph, labels: dict) -> bool:
    """Whether Hamming distance on the labels equals graph distance for all pairs."""
    for u, v in combinations(mg.vertices, 2):
        if sum(a != b for a, b in zip(labels[u], labels[v])) != mg.d(u, v):
            return False
    return True


@dataclass(frozen=True)
class DaisyVerdict:
    ok: bool
    labelling: dict = None  # a proper labelling when one exists
    idim: int = None
    method: str = None
    reason: str = None

    def __bool__(self):
        return self.ok


def is_daisy_cube(mg: MetricGraph, method: str = "auto") -> DaisyVerdict:
    """Search for a proper labelling realizing the graph as a daisy cube.

    A proper labelling is an isometric hypercube embedding whose image is
    a downward-closed subset of the bit strings.  ``method='auto'`` first
    tries every vertex as the all-zeros root (any downward-closed image
    contains the all-zeros string, so this pass is decisive); the
    ``'exhaustive'`` method sweeps all 2^idim orientation masks as an
    independent oracle, with a hard cap at idim 20.
    """
    pc = is_partial_cube(mg)
    if not pc:
        return DaisyVerdict(False, reason=f"not a partial cube ({pc.reason})")
    base = pc.labelling
    n = pc.idim

    def flipped(mask):
        out = {}
        for v, lab in base.items():
            out[v] = "".join(
                ("1" if c == "0" else "0") if mask >> i & 1 else c
                for i, c in enumerate(lab)
            )
        return out

    if method not in ("auto", "roots", "exhaustive"):
        raise ValueError(f"unknown method {method!r}")

    if method in ("auto", "roots"):
        for root in mg.vertices:
            mask = 0
            for i, c in enumerate(base[root]):
                if c == "1":
                    mask |= 1 << i
            labelling = flipped(mask)
            if is_downward_closed(labelling.values()):
                return DaisyVerdict(True, labelling, n, method="roots")
        if method == "roots":
            return DaisyVerdict(False, idim=n, method="roots", reason="no root works")

    if method in ("auto", "exhaustive"):
        if n > _EXHAUSTIVE_IDIM_CAP:
            raise CapExceeded(
                f"orientation sweep over idim {n} exceeds the cap {_EXHAUSTIVE_IDIM_CAP}"
            )
        for mask in range(1 << n):
            labelling = flipped(mask)
            if is_downward_closed(labelling.values()):
                return DaisyVerdict(True, labelling, n, method="exhaustive")
    return DaisyVerdict(False, idim=n, method=method, reason="no orientation works")


# ---------------------------------------------------------------------------
# expansions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExpansionResult:
    """An expansion graph plus the flags of the variant actually performed.

    Vertices of the result are ``(0, v)`` for the first copy and ``(1, v)``
    for the second; shared vertices appear in both copies joined by an edge.
    """

    graph: MetricGraph
    convex: bool
    peripheral: bool
    le: bool


def _is_isometric_subset(mg: MetricGraph, subset) -> bool:
    sub = mg.induced(subset, keep_labels=False)
    if not sub.is_connected:
        return False
    return all(
        sub.d(u, v) == mg.d(u, v) for u, v in combinations(sub.vertices, 2)
    )


def is_convex_subset(mg: MetricGraph, subset) -> bool:
    """Whether every shortest path between members stays inside the subset."""
    sub = set(subset)
    for u, v in combinations(sorted(sub), 2):
        if not mg.interval(u, v) <= sub:
            return False
    return True


def expand(mg: MetricGraph, v1, v2) -> ExpansionResult:
    """Expansion of the graph along two isometric covering subsets.

    ``v1`` and ``v2`` must cover the vertex set, intersect, both induce
    isometric subgraphs, and admit no edge between their private parts.  The
    result takes disjoint copies of both induced subgraphs and joins the two
    copies of every shared vertex.
    """
    v1, v2 = set(v1), set(v2)
    verts = set(mg.vertices)
    if v1 | v2 != verts:
        raise NotAnExpansion("the two sets do not cover the vertex set")
    shared = v1 & v2
    if not shared:
        raise NotAnExpansion("the two sets do not intersect")
    for u, v in mg.edges:
        if (u in v1 - v2 and v in v2 - v1) or (u in v2 - v1 and v in v1 - v2):
            raise NotAnExpansion(f"edge ({u!r}, {v!r}) joins the private parts")
    if not _is_isometric_subset(mg, v1) or not _is_isometric_subset(mg, v2):
        raise NotAnExpansion("a side is not isometric in the base graph")

    vertices = [(0, v) for v in mg.vertices if v in v1]
    vertices += [(1, v) for v in mg.vertices if v in v2]
    edges = []
    for u, v in mg.edges:
        if u in v1 and v in v1:
            edges.append(((0, u), (0, v)))
        if u in v2 and v in v2:
            edges.append(((1, u), (1, v)))
    edges += [((0, v), (1, v)) for v in shared]
    graph = MetricGraph(vertices, edges)

    convex = is_convex_subset(mg, shared)
    peripheral = v1 == verts or v2 == verts
    le = False
    if peripheral and mg.labels is not None:
        le = operator_o(mg.labels, shared) == frozenset(shared)
    return ExpansionResult(graph, convex=convex, peripheral=peripheral, le=le)


# ---------------------------------------------------------------------------
# median decomposition check
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MedianSplitReport:
    matching_isomorphism: bool
    sides_convex: bool
    sides_median: bool

    @property
    def ok(self) -> bool:
        return self.matching_isomorphism and self.sides_convex and self.sides_median


def check_median_split(mg: MetricGraph, class_edges, _memo=None) -> MedianSplitReport:
    """Instance check of the three median-characterization clauses for one class."""
    memo = _memo if _memo is not None else {}
    split = split_class(mg, class_edges)
    cls = {( _edge_key(u, v)) for u, v in class_edges}

    pairing = {}
    ok_matching = True
    for u, v in cls:
        a, b = (u, v) if u in split.w_x else (v, u)
        if a in pairing or b in pairing or a not in split.u_x or b not in split.u_y:
            ok_matching = False
            break
        pairing[a] = b
        pairing[b] = a
    if ok_matching:
        ok_matching = set(pairing) == set(split.u_x) | set(split.u_y)
    if ok_matching:
        ux = mg.induced(split.u_x, keep_labels=False)
        for a, b in combinations(ux.vertices, 2):
            adjacent_here = b in ux.adjacency[a]
            adjacent_there = pairing[b] in mg.adjacency[pairing[a]]
            if adjacent_here != adjacent_there:
                ok_matching = False
                break

    def convex_inside(u_set, w_set):
        sub = mg.induced(w_set, keep_labels=False)
        return is_convex_subset(sub, u_set)

    sides_convex = convex_inside(split.u_x, split.w_x) and convex_inside(
        split.u_y, split.w_y
    )

    def median_side(w_set):
        key = frozenset(w_set)
        if key not in memo:
            memo[key] = is_median(mg.induced(w_set, keep_labels=False))
        return memo[key]

    sides_median = median_side(split.w_x) and median_side(split.w_y)
    return MedianSplitReport(ok_matching, sides_convex, sides_median)
