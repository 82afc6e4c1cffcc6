"""Benzenoid (polyhex) import and small catacondensed corpora.

Hexagonal cells are addressed by axial coordinates ``(q, r)``.  Vertices
are placed on an integer lattice obtained from the pointy-top drawing by
scaling x by 2/sqrt(3) and y by 2 -- an orientation-preserving linear map,
so rotations, face tracing and all clockwise conventions match the usual
drawing while coordinates stay exact integers: cell centers sit at
``(2q + r, 3r)`` and shared corners of adjacent cells coincide exactly.
"""

from __future__ import annotations

from itertools import combinations

from .plane_graph import PlaneGraph, build_plane_graph, edge_key

# counterclockwise corner offsets around a cell center, starting at the top
CORNER_OFFSETS = ((0, 2), (-1, 1), (-1, -1), (0, -2), (1, -1), (1, 1))

AXIAL_NEIGHBORS = ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))


def cell_center(cell) -> tuple:
    q, r = cell
    return (2 * q + r, 3 * r)


def cell_corners(cell) -> tuple:
    cx, cy = cell_center(cell)
    return tuple((cx + dx, cy + dy) for dx, dy in CORNER_OFFSETS)


def build_benzenoid(cells) -> PlaneGraph:
    """Merge unit hexagons at the given axial cells into one plane graph.

    Vertex ids are assigned by sorted coordinates."""
    cells = sorted(set(tuple(c) for c in cells))
    if not cells:
        raise ValueError("no cells")
    points = sorted({p for cell in cells for p in cell_corners(cell)})
    vid = {p: i for i, p in enumerate(points)}
    edges = set()
    for cell in cells:
        corners = cell_corners(cell)
        for a, b in zip(corners, corners[1:] + corners[:1]):
            edges.add(edge_key(vid[a], vid[b]))
    vertices = [(i, x, y) for (x, y), i in sorted(vid.items(), key=lambda kv: kv[1])]
    return build_plane_graph(vertices, sorted(edges))


def parse_benzenoid(text: str) -> list:
    """Parse one ``q r`` axial pair per line; blank lines and ``#`` comments skipped."""
    cells = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'q r', got {raw!r}")
        cells.append((int(parts[0]), int(parts[1])))
    if not cells:
        raise ValueError("benzenoid file lists no cells")
    return cells


def benzenoid_from_text(text: str) -> PlaneGraph:
    return build_benzenoid(parse_benzenoid(text))


def hexagon_face_id(g: PlaneGraph, cell) -> int:
    """The finite face of ``g`` bounded by the corners of the given cell."""
    if g.coords is None:
        raise ValueError("graph has no coordinates")
    want = set(cell_corners(cell))
    for f in g.finite_faces:
        got = {tuple(map(int, g.coords[v])) for v in f.boundary}
        if got == want:
            return f.id
    raise KeyError(f"no finite face at cell {cell}")


# ---------------------------------------------------------------------------
# catacondensed corpus generation
# ---------------------------------------------------------------------------


def _rot60(cell):
    q, r = cell
    return (-r, q + r)


def _mirror(cell):
    q, r = cell
    return (r, q)


def _symmetries(cells):
    shapes = []
    for use_mirror in (False, True):
        shape = [(_mirror(c) if use_mirror else c) for c in cells]
        for _ in range(6):
            shape = [_rot60(c) for c in shape]
            mq = min(q for q, _ in shape)
            mr = min(r for _, r in shape)
            shapes.append(tuple(sorted((q - mq, r - mr) for q, r in shape)))
    return shapes


def canonical_polyhex(cells) -> tuple:
    """Canonical form under the 12 lattice symmetries plus translation."""
    return min(_symmetries(list(cells)))


def _is_catacondensed(cells) -> bool:
    cellset = set(cells)
    pairs = sum(
        1
        for a, b in combinations(cells, 2)
        if (b[0] - a[0], b[1] - a[1]) in AXIAL_NEIGHBORS
    )
    if pairs != len(cells) - 1:
        return False  # the dual must be a tree
    corner_count = {}
    for cell in cellset:
        for p in cell_corners(cell):
            corner_count[p] = corner_count.get(p, 0) + 1
    return all(c <= 2 for c in corner_count.values())


def catacondensed_polyhexes(max_cells: int) -> list:
    """All free catacondensed polyhexes with 1..max_cells cells, canonical and sorted."""
    current = {canonical_polyhex([(0, 0)])}
    out = sorted(current)
    for _ in range(1, max_cells):
        grown = set()
        for shape in current:
            cellset = set(shape)
            for cell in shape:
                for dq, dr in AXIAL_NEIGHBORS:
                    cand = (cell[0] + dq, cell[1] + dr)
                    if cand in cellset:
                        continue
                    grown.add(canonical_polyhex(cellset | {cand}))
        current = {s for s in grown if _is_catacondensed(s)}
        out.extend(sorted(current))
    return out
