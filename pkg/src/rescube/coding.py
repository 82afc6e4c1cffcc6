"""Two binary codings of the perfect matchings of a peripherally 2-colorable graph.

Both codings assign one bit per finite face, positions following a fixed
reducible-face-decomposition order, and both embed the resonance graph
isometrically into a hypercube; they differ in how each Theta class is
oriented.

The daisy coding sets bit i to 0 exactly when the matching avoids every end
edge of every exterior handle on face i; its label set is downward closed,
realizing the resonance graph as a daisy cube.  The lattice coding sets bit
i to 1 exactly when every exterior handle on face i is proper alternating
along the clockwise periphery; it puts the unique matching without proper
alternating cycles at the all-zeros string and realizes the resonance graph
as a finite distributive lattice.  Swapping the two color classes
complements every lattice-coding string and fixes every daisy string.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import plane_graph as pg
from .errors import BadAttachment, LabelSetMismatch, PropertyViolated, UnsupportedInput
from .matchings import (
    AVOIDS_END_EDGES,
    MatchingFamily,
    end_edge_state,
    enumerate_matchings,
)
from .plane_graph import PlaneGraph, edge_key, facial_handle_decomposition, swap_colors

DAISY = "daisy"
FDL = "fdl"


def complement(label: str) -> str:
    return "".join("1" if c == "0" else "0" for c in label)


def daisy_label_set(attachment: dict, n: int) -> frozenset:
    """Iterate the daisy label sets from {0, 1} up to length n.

    Each step appends 0 to every string and appends 1 to the strings whose
    digit at the attachment position is 0; ``attachment[i]`` must name an
    earlier position (1-based) for every i in 2..n.
    """
    if n < 1:
        raise BadAttachment("need at least one position")
    if sorted(attachment) != list(range(2, n + 1)):
        raise BadAttachment(f"attachment must cover positions 2..{n}")
    for i, a in attachment.items():
        if not 1 <= a < i:
            raise BadAttachment(f"attachment {i} -> {a} does not point earlier")
    labels = {"0", "1"}
    for i in range(2, n + 1):
        a = attachment[i] - 1
        labels = {x + "0" for x in labels} | {
            x + "1" for x in labels if x[a] == "0"
        }
    return frozenset(labels)


@dataclass(frozen=True)
class Labelling:
    """A bit string per matching id; position i (1-based) is face ``face_order[i-1]``."""

    scheme: str
    labels: dict
    face_order: tuple
    mixed_orientation: tuple = field(default_factory=tuple)

    @property
    def length(self) -> int:
        return len(self.face_order)

    def position_of(self, face_id) -> int:
        return self.face_order.index(face_id) + 1

    def bit(self, matching_id, face_id) -> str:
        return self.labels[matching_id][self.face_order.index(face_id)]

    def label_set(self) -> frozenset:
        return frozenset(self.labels.values())


def _even_cycle_reference_matching(g: PlaneGraph) -> frozenset:
    """The matching of an even cycle that is improper under the anchor coloring.

    Anchored to the canonical coloring (smallest vertex white) rather than
    the graph's current one, so the pick survives color swaps."""
    anchor = pg.canonical_coloring(g)
    face = g.finite_faces[0]
    # the darts with black tails alternate around the cycle; as a matching
    # they run black to white clockwise, i.e. improperly
    return frozenset(edge_key(*d) for d in face.darts if anchor[d[0]] == pg.BLACK)


def _exterior_handles(g: PlaneGraph, face_id: int):
    return facial_handle_decomposition(g, face_id).exterior


def daisy_labelling(g: PlaneGraph, family: MatchingFamily, rfd) -> Labelling:
    """Per-matching daisy bits from the exterior-handle end-edge rule.

    Bit i is 0 when the matching contains no end edge of any exterior handle
    on face i, else 1.  The resulting label multiset is verified against the
    iterated label-set construction on the decomposition's attachment map
    and against injectivity; a mismatch raises :class:`LabelSetMismatch`.
    """
    order = tuple(rfd.faces)
    n = len(order)
    if n == 1:
        if not g.is_cycle_graph():
            raise UnsupportedInput("a single finite face should mean an even cycle")
        reference = _even_cycle_reference_matching(g)
        labels = {m.id: ("0" if m.edges == reference else "1") for m in family}
        return Labelling(DAISY, labels, order)

    handles_per_face = {fid: _exterior_handles(g, fid) for fid in order}
    labels = {}
    for m in family:
        bits = []
        for fid in order:
            states = {end_edge_state(m, h.path) for h in handles_per_face[fid]}
            bits.append("0" if states == {AVOIDS_END_EDGES} else "1")
        labels[m.id] = "".join(bits)

    if len(set(labels.values())) != len(labels):
        raise LabelSetMismatch("daisy labels are not injective")
    if rfd.attachment is None:
        raise BadAttachment("decomposition lacks a complete attachment map")
    expected = daisy_label_set(rfd.attachment, n)
    if frozenset(labels.values()) != expected:
        raise LabelSetMismatch(
            f"daisy label set {sorted(labels.values())} != expected {sorted(expected)}"
        )
    return Labelling(DAISY, labels, order)


def _handle_proper(g: PlaneGraph, matching, path) -> bool:
    """Proper alternation of one clockwise-oriented handle path.

    With matched edges present, all of them must run white to black.  A
    single avoided edge carries no matched edge; it counts as proper exactly
    when the edge runs black to white, the reading consistent with the
    matched-edge rule on every odd handle."""
    darts = list(zip(path, path[1:]))
    matched = [d for d in darts if edge_key(*d) in matching.edges]
    if not matched:
        return g.color(path[0]) == pg.BLACK
    return all(g.color(u) == pg.WHITE for u, _ in matched)


def _handle_improper(g: PlaneGraph, matching, path) -> bool:
    darts = list(zip(path, path[1:]))
    matched = [d for d in darts if edge_key(*d) in matching.edges]
    if not matched:
        return g.color(path[0]) == pg.WHITE
    return all(g.color(u) == pg.BLACK for u, _ in matched)


def fdl_labelling(g: PlaneGraph, family: MatchingFamily, rfd) -> Labelling:
    """Per-matching lattice bits from the proper-alternation rule.

    Bit i is 1 when every exterior handle on face i is proper alternating
    along the clockwise periphery.  Faces where handles with matched edges
    disagree in orientation are recorded in ``mixed_orientation`` rather
    than normalized away; the list stays empty on peripherally 2-colorable
    inputs."""
    order = tuple(rfd.faces)
    n = len(order)
    if n == 1:
        if not g.is_cycle_graph():
            raise UnsupportedInput("a single finite face should mean an even cycle")
        from .matchings import PROPER, alternation_kind

        walk = g.finite_faces[0].boundary
        closed = walk + (walk[0],)
        labels = {
            m.id: ("1" if alternation_kind(g, m, closed) == PROPER else "0")
            for m in family
        }
        return Labelling(FDL, labels, order)

    handles_per_face = {fid: _exterior_handles(g, fid) for fid in order}
    labels = {}
    mixed = []
    for m in family:
        bits = []
        for fid in order:
            paths = [h.path for h in handles_per_face[fid]]
            proper = [_handle_proper(g, m, p) for p in paths]
            improper = [_handle_improper(g, m, p) for p in paths]
            definite_proper = any(p and not i for p, i in zip(proper, improper))
            definite_improper = any(i and not p for p, i in zip(proper, improper))
            if definite_proper and definite_improper:
                mixed.append((m.id, fid))
            bits.append("1" if all(proper) else "0")
        labels[m.id] = "".join(bits)
    return Labelling(FDL, labels, order, tuple(mixed))


@dataclass(frozen=True)
class ColorSwapReport:
    fdl_complemented: bool
    daisy_fixed: bool

    @property
    def ok(self) -> bool:
        return self.fdl_complemented and self.daisy_fixed


def color_swap_effect(g: PlaneGraph, family: MatchingFamily, rfd) -> ColorSwapReport:
    """Check that swapping the color classes complements the lattice coding
    and fixes the daisy coding; raises :class:`PropertyViolated` otherwise."""
    swapped = swap_colors(g)
    swapped_family = enumerate_matchings(swapped)

    fdl_here = fdl_labelling(g, family, rfd)
    fdl_there = fdl_labelling(swapped, swapped_family, rfd)
    fdl_ok = all(
        fdl_there.labels[mid] == complement(fdl_here.labels[mid])
        for mid in fdl_here.labels
    )

    daisy_here = daisy_labelling(g, family, rfd)
    daisy_there = daisy_labelling(swapped, swapped_family, rfd)
    daisy_ok = daisy_here.labels == daisy_there.labels

    report = ColorSwapReport(fdl_complemented=fdl_ok, daisy_fixed=daisy_ok)
    if not report.ok:
        raise PropertyViolated(
            f"color swap: fdl_complemented={fdl_ok} daisy_fixed={daisy_ok}"
        )
    return report


# ---------------------------------------------------------------------------
# composition over elementary components
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ComposedLabelling:
    """Concatenated labels over tuples of part matching ids."""

    scheme: str
    labels: dict  # tuple of part matching ids -> bit string
    parts: tuple  # the part Labelling objects

    @property
    def length(self) -> int:
        return sum(p.length for p in self.parts)

    def label_set(self) -> frozenset:
        return frozenset(self.labels.values())


def compose_labellings(parts) -> ComposedLabelling:
    """Concatenate part labellings over the Cartesian product of matchings.

    Vertex tuples enumerate part matching ids in the same order that
    :func:`rescube.resonance.cartesian_compose` uses, so the composed labels
    land directly on the composed resonance graph."""
    parts = tuple(parts)
    if not parts:
        raise ValueError("no labellings to compose")
    schemes = {p.scheme for p in parts}
    if len(schemes) != 1:
        raise ValueError(f"mixed schemes {sorted(schemes)}")
    from itertools import product

    labels = {}
    for combo in product(*(sorted(p.labels) for p in parts)):
        labels[combo] = "".join(p.labels[mid] for p, mid in zip(parts, combo))
    return ComposedLabelling(schemes.pop(), labels, parts)


def labelling_is_proper(metric, labels) -> bool:
    """Isometric into the hypercube and downward closed: a proper daisy labelling."""
    from .cube_kit import is_downward_closed, is_isometric_labelling

    return is_isometric_labelling(metric, labels) and is_downward_closed(
        set(labels.values())
    )


def codings_differ(daisy: Labelling, fdl: Labelling) -> bool:
    """Report whether some matching receives different strings (expected as
    soon as the graph has at least two finite faces)."""
    return any(daisy.labels[mid] != fdl.labels[mid] for mid in daisy.labels)
