"""
Resonance graphs and the two binary codings
===========================================

Perfect matchings become vertices; flipping one finite face at a time
becomes edges.  Two codings of the matchings embed the resonance graph
into a hypercube: one realizes it as a daisy cube, the other as a finite
distributive lattice, and they differ only in how each edge class is
oriented.
"""

from rescube import (
    auto_rfd,
    build_benzenoid,
    build_resonance,
    daisy_labelling,
    enumerate_matchings,
    extremal_matchings,
    fdl_labelling,
    resonance_to_dot,
)

g = build_benzenoid([(0, 0), (1, -1), (2, -1), (2, 0), (1, -2)])
family = enumerate_matchings(g)
print("perfect matchings:", len(family))

r = build_resonance(g, family)
print("resonance graph:", len(r), "vertices,", len(r.edges), "edges")

# Each edge carries the finite face whose boundary is the symmetric
# difference of its two matchings.
u, v, face = r.edges[0]
print(f"edge M{u} -- M{v} flips face {face}")

# Bit positions follow a reducible face decomposition (here chosen
# automatically: peel reducible faces greedily, then reverse).
rfd = auto_rfd(g)
print("\nface order:", rfd.faces)
print("attachment:", rfd.attachment)

daisy = daisy_labelling(g, family, rfd)
print("\ndaisy labels:", sorted(daisy.labels.values()))

# The daisy coding's minimum is the matching that makes every finite face
# resonant at once; the lattice coding bottoms out at the matching without
# proper alternating cycles and tops out at its improper twin.
lattice = fdl_labelling(g, family, rfd)
special = extremal_matchings(g, family)
print("\nfully resonant matching  ->", daisy.labels[special.fully_resonant], "(daisy)")
print("lattice bottom matching  ->", lattice.labels[special.lattice_bottom], "(fdl)")
print("lattice top matching     ->", lattice.labels[special.lattice_top], "(fdl)")

# Both codings flip exactly the bit of the flipped face across every edge.
for u, v, face in r.edges[:3]:
    a, b = daisy.labels[u], daisy.labels[v]
    flips = [i + 1 for i, (x, y) in enumerate(zip(a, b)) if x != y]
    print(f"edge M{u}--M{v}: {a} -> {b}, flips position {flips[0]},"
          f" face at that position: {rfd.faces[flips[0] - 1]}")

# DOT export for rendering
print("\nDOT preview:")
print("\n".join(resonance_to_dot(r, labels=daisy.labels).splitlines()[:5]))
