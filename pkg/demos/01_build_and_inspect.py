"""
Building plane bipartite graphs and reading their structure
===========================================================

A walk through the embedding layer: benzenoid import, faces, the proper
2-coloring, handles, and the peripherally-2-colorable test.
"""

from rescube import (
    build_benzenoid,
    facial_handle_decomposition,
    handles,
    hexagon_face_id,
    is_peripherally_two_colorable,
    swap_colors,
)

# A branched system of five fused hexagons: rings two..five attach to rings
# one, two, three and two.  Cells are axial hexagon coordinates "q r".
cells = [(0, 0), (1, -1), (2, -1), (2, 0), (1, -2)]
g = build_benzenoid(cells)

print("vertices:", len(g.vertices))
print("edges:   ", len(g.edges))
print("faces:   ", len(g.faces), f"({len(g.finite_faces)} finite + infinite)")

# Finite facial walks are stored clockwise; the periphery is the reversed
# walk of the infinite face.
for face in g.finite_faces:
    print(f"face {face.id}: boundary length {len(face)}")

# The coloring is proper, anchored so the smallest vertex id is white.
print("\ncolors of the first six vertices:",
      [g.color(v) for v in g.vertices[:6]])

# Handles: maximal paths between branch vertices.  Exterior handles run
# along the periphery, interior ones through shared ring edges.
print("\nhandles (kind, length):",
      sorted((h.kind, h.length) for h in handles(g)))

# Every finite facial cycle splits into interior/exterior handles that
# alternate clockwise.  The central ring touches three others, so six
# handles meet around it.
central = hexagon_face_id(g, (1, -1))
decomposition = facial_handle_decomposition(g, central)
print(f"\nface {central} decomposes into",
      [(h.kind, h.length) for h in decomposition.sequence])

# The headline structure test: degrees at most 3, branch vertices on the
# periphery, alternating black/white clockwise.
verdict = is_peripherally_two_colorable(g)
print("\nperipherally 2-colorable:", verdict.ok)

# Swapping the color classes twice is the identity, and the test does not
# depend on the anchor.
assert is_peripherally_two_colorable(swap_colors(g)).ok == verdict.ok
print("verdict is color-swap invariant")
