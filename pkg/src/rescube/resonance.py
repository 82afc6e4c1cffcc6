"""Resonance graphs with face-labelled edges, and their Cartesian composition.

The resonance graph of a plane bipartite graph has the perfect matchings as
vertices; two matchings are adjacent exactly when their symmetric difference
is the boundary cycle of a single finite face, and the edge carries that
face as its label.
"""

from __future__ import annotations

import json
from itertools import product

from .cube_kit import MetricGraph
from .matchings import MatchingFamily
from .plane_graph import PlaneGraph


class ResonanceGraph:
    """Face-labelled resonance graph bound to a graph and its matching family."""

    def __init__(self, graph: PlaneGraph, family: MatchingFamily, edges):
        self.graph = graph
        self.family = family
        self.vertices = tuple(family.ids)
        self.edges = tuple(sorted(edges))  # (id, id, face_id) with id < id
        adj = {v: {} for v in self.vertices}
        for u, v, fid in self.edges:
            adj[u][v] = fid
            adj[v][u] = fid
        self.adjacency = {v: dict(sorted(ns.items())) for v, ns in adj.items()}

    def __len__(self):
        return len(self.vertices)

    def vertex_key(self, mid) -> frozenset:
        return self.family[mid].edges

    def face_key(self, face_id) -> frozenset:
        return self.graph.faces[face_id].edges

    def labelled_edge_keys(self) -> frozenset:
        return frozenset(
            (frozenset((self.vertex_key(u), self.vertex_key(v))), self.face_key(f))
            for u, v, f in self.edges
        )

    def vertex_keys(self) -> frozenset:
        return frozenset(self.vertex_key(v) for v in self.vertices)

    def metric(self, labels=None) -> MetricGraph:
        return MetricGraph(self.vertices, [(u, v) for u, v, _ in self.edges], labels)

    def edges_with_label(self, face_id) -> tuple:
        return tuple((u, v) for u, v, f in self.edges if f == face_id)


def build_resonance(g: PlaneGraph, family: MatchingFamily) -> ResonanceGraph:
    """All-pairs construction: test each symmetric difference against the
    finite facial cycles (early exit on size)."""
    by_edges = g.face_by_edge_set
    longest = max((len(f.edges) for f in g.finite_faces), default=0)
    edges = []
    ms = family.matchings
    for i in range(len(ms)):
        for j in range(i + 1, len(ms)):
            diff = ms[i].edges ^ ms[j].edges
            if len(diff) > longest:
                continue
            fid = by_edges.get(diff)
            if fid is not None:
                edges.append((i, j, fid))
    return ResonanceGraph(g, family, edges)


def connectivity_report(r) -> int:
    """Number of connected components (works for composed graphs too)."""
    vertices = r.vertices
    adjacency = r.adjacency
    seen = set()
    count = 0
    for start in vertices:
        if start in seen:
            continue
        count += 1
        stack = [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            for w in adjacency[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return count


class ComposedResonance:
    """Cartesian product of part resonance graphs.

    Vertices are tuples of part matching ids; an edge joins tuples differing
    in exactly one coordinate by a part edge and carries ``(part_index,
    face_id)`` as its label.  Key-based accessors match ResonanceGraph so
    the two can be compared structurally.
    """

    def __init__(self, parts):
        self.parts = tuple(parts)
        self.vertices = tuple(product(*(p.vertices for p in self.parts)))
        index = {v: i for i, v in enumerate(self.vertices)}
        edges = []
        for pos, part in enumerate(self.parts):
            for u, v, fid in part.edges:
                for combo in self.vertices:
                    if combo[pos] != u:
                        continue
                    other = combo[:pos] + (v,) + combo[pos + 1 :]
                    a, b = sorted((index[combo], index[other]))
                    edges.append((a, b, (pos, fid)))
        self.edges = tuple(sorted(set(edges)))
        adj = {i: {} for i in range(len(self.vertices))}
        for a, b, lab in self.edges:
            adj[a][b] = lab
            adj[b][a] = lab
        self.adjacency = adj

    def __len__(self):
        return len(self.vertices)

    def vertex_key(self, idx) -> frozenset:
        combo = self.vertices[idx]
        out = frozenset()
        for part, mid in zip(self.parts, combo):
            out |= part.vertex_key(mid)
        return out

    def face_key(self, label) -> frozenset:
        pos, fid = label
        return self.parts[pos].face_key(fid)

    def labelled_edge_keys(self) -> frozenset:
        return frozenset(
            (frozenset((self.vertex_key(a), self.vertex_key(b))), self.face_key(lab))
            for a, b, lab in self.edges
        )

    def vertex_keys(self) -> frozenset:
        return frozenset(self.vertex_key(i) for i in range(len(self.vertices)))

    def metric(self, labels=None) -> MetricGraph:
        return MetricGraph(
            range(len(self.vertices)), [(a, b) for a, b, _ in self.edges], labels
        )


def cartesian_compose(parts) -> ComposedResonance:
    """Cartesian composition of resonance graphs of elementary components."""
    return ComposedResonance(parts)


def same_labelled_resonance(r1, r2) -> bool:
    """Structural equality: same matchings (as edge sets) and the same
    face-labelled adjacencies (faces compared as boundary edge sets)."""
    return (
        r1.vertex_keys() == r2.vertex_keys()
        and r1.labelled_edge_keys() == r2.labelled_edge_keys()
    )


# ---------------------------------------------------------------------------
# export
# ---------------------------------------------------------------------------


def _face_name(face_id, face_names) -> str:
    if face_names and face_id in face_names:
        return face_names[face_id]
    return f"s{face_id}"


def resonance_to_dot(r: ResonanceGraph, labels=None, face_names=None) -> str:
    """Deterministic DOT text; optional bit-string labels annotate the nodes."""
    lines = ["graph resonance {"]
    for v in r.vertices:
        if labels:
            lines.append(f'  M{v} [label="M{v}\\n{labels[v]}"];')
        else:
            lines.append(f'  M{v} [label="M{v}"];')
    for u, v, fid in r.edges:
        lines.append(f'  M{u} -- M{v} [face="{_face_name(fid, face_names)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def resonance_to_json(r: ResonanceGraph, labels=None, face_names=None) -> str:
    obj = {
        "vertices": [
            {"id": v, **({"label": labels[v]} if labels else {})} for v in r.vertices
        ],
        "edges": [
            {"face": _face_name(fid, face_names), "u": u, "v": v}
            for u, v, fid in r.edges
        ],
    }
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
