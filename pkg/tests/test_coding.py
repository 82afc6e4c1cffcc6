"""The daisy and lattice codings, their anchors, and composition."""

import pytest
from hypothesis import given, strategies as st

from rescube.coding import (
    color_swap_effect,
    codings_differ,
    complement,
    compose_labellings,
    daisy_label_set,
    daisy_labelling,
    fdl_labelling,
    labelling_is_proper,
)
from rescube.cube_kit import (
    is_daisy_cube,
    is_downward_closed,
    is_isometric_labelling,
    operator_o,
    label_leq,
)
from rescube.decomposition import auto_rfd, rfd_from_face_order
from rescube.errors import BadAttachment
from rescube.matchings import enumerate_matchings, extremal_matchings
from rescube.plane_graph import edge_subgraph, elementary_analysis, swap_colors
from rescube.resonance import build_resonance, cartesian_compose

BRANCHED_LABEL_SET = {
    "00000",
    "10000",
    "01000",
    "00100",
    "10100",
    "00010",
    "10010",
    "01010",
    "00001",
    "10001",
    "00101",
    "10101",
    "00011",
    "10011",
}


# ---------------------------------------------------------------------------
# the label-set iteration
# ---------------------------------------------------------------------------


def test_label_set_sizes_on_branched_attachment():
    attachment = {2: 1, 3: 2, 4: 3, 5: 2}
    sizes = [len(daisy_label_set({k: v for k, v in attachment.items() if k <= n}, n))
             for n in range(1, 6)]
    assert sizes == [2, 3, 5, 8, 14]


def test_label_set_exact_values():
    assert daisy_label_set({}, 1) == {"0", "1"}
    assert daisy_label_set({2: 1}, 2) == {"00", "10", "01"}
    assert daisy_label_set({2: 1, 3: 2, 4: 3, 5: 2}, 5) == BRANCHED_LABEL_SET


def test_label_set_bad_attachments():
    with pytest.raises(BadAttachment):
        daisy_label_set({2: 2}, 2)
    with pytest.raises(BadAttachment):
        daisy_label_set({}, 2)
    with pytest.raises(BadAttachment):
        daisy_label_set({2: 1, 3: 1}, 2)
    with pytest.raises(BadAttachment):
        daisy_label_set({2: 1}, 0)


@st.composite
def attachments(draw):
    n = draw(st.integers(min_value=1, max_value=7))
    att = {i: draw(st.integers(min_value=1, max_value=i - 1)) for i in range(2, n + 1)}
    return att, n


@given(attachments())
def test_label_set_is_downward_closed_and_graded(data):
    att, n = data
    labels = daisy_label_set(att, n)
    assert is_downward_closed(labels)
    assert "0" * n in labels
    assert len(labels) >= n + 1


# ---------------------------------------------------------------------------
# daisy labelling
# ---------------------------------------------------------------------------


def test_daisy_matches_figure_set(branched5, branched5_faces):
    family = enumerate_matchings(branched5)
    rfd = rfd_from_face_order(branched5, branched5_faces)
    labelling = daisy_labelling(branched5, family, rfd)
    assert labelling.label_set() == BRANCHED_LABEL_SET


def test_daisy_fully_resonant_is_minimum(branched5, branched5_faces):
    family = enumerate_matchings(branched5)
    rfd = rfd_from_face_order(branched5, branched5_faces)
    labelling = daisy_labelling(branched5, family, rfd)
    ext = extremal_matchings(branched5, family)
    assert labelling.labels[ext.fully_resonant] == "00000"


def test_daisy_edges_flip_their_face_bit(branched5, branched5_faces):
    family = enumerate_matchings(branched5)
    rfd = rfd_from_face_order(branched5, branched5_faces)
    labelling = daisy_labelling(branched5, family, rfd)
    r = build_resonance(branched5, family)
    for u, v, fid in r.edges:
        a, b = labelling.labels[u], labelling.labels[v]
        pos = labelling.position_of(fid) - 1
        assert [i for i, (x, y) in enumerate(zip(a, b)) if x != y] == [pos]


def test_daisy_is_proper_and_o_closed(branched5, branched5_faces):
    family = enumerate_matchings(branched5)
    rfd = rfd_from_face_order(branched5, branched5_faces)
    labelling = daisy_labelling(branched5, family, rfd)
    metric = build_resonance(branched5, family).metric()
    assert labelling_is_proper(metric, labelling.labels)
    assert is_daisy_cube(metric).ok
    # the label set is the o-closure of its maximal elements
    labels = labelling.labels
    maximal = [
        mid
        for mid, lab in labels.items()
        if not any(lab != other and label_leq(lab, other) for other in labels.values())
    ]
    assert operator_o(labels, maximal) == frozenset(labels)


def test_daisy_on_even_cycle(hexagon):
    family = enumerate_matchings(hexagon)
    labelling = daisy_labelling(hexagon, family, auto_rfd(hexagon))
    assert sorted(labelling.labels.values()) == ["0", "1"]


def test_theta_sides_match_bits(branched5, branched5_faces):
    from rescube.matchings import matching_subset

    family = enumerate_matchings(branched5)
    rfd = rfd_from_face_order(branched5, branched5_faces)
    labelling = daisy_labelling(branched5, family, rfd)
    for fid in branched5_faces:
        pos = labelling.position_of(fid) - 1
        zeros = {m for m, lab in labelling.labels.items() if lab[pos] == "0"}
        assert zeros == matching_subset(
            branched5, family, fid, "all-exterior-avoid"
        )


# ---------------------------------------------------------------------------
# lattice (fdl) labelling
# ---------------------------------------------------------------------------


def test_fdl_anchors(branched5, branched5_faces):
    family = enumerate_matchings(branched5)
    rfd = rfd_from_face_order(branched5, branched5_faces)
    labelling = fdl_labelling(branched5, family, rfd)
    ext = extremal_matchings(branched5, family)
    assert labelling.labels[ext.lattice_bottom] == "00000"
    assert labelling.labels[ext.lattice_top] == "11111"
    assert not labelling.mixed_orientation


def test_fdl_isometric_and_one_bit_edges(branched5, branched5_faces):
    family = enumerate_matchings(branched5)
    rfd = rfd_from_face_order(branched5, branched5_faces)
    labelling = fdl_labelling(branched5, family, rfd)
    r = build_resonance(branched5, family)
    assert is_isometric_labelling(r.metric(), labelling.labels)
    for u, v, fid in r.edges:
        a, b = labelling.labels[u], labelling.labels[v]
        pos = labelling.position_of(fid) - 1
        assert [i for i, (x, y) in enumerate(zip(a, b)) if x != y] == [pos]


def test_fdl_not_downward_closed_here(branched5, branched5_faces):
    # the lattice coding realizes a different orientation than the daisy one
    family = enumerate_matchings(branched5)
    rfd = rfd_from_face_order(branched5, branched5_faces)
    daisy = daisy_labelling(branched5, family, rfd)
    fdl = fdl_labelling(branched5, family, rfd)
    assert codings_differ(daisy, fdl)
    assert not is_downward_closed(fdl.label_set())


def test_fdl_even_cycle(hexagon):
    from rescube.matchings import PROPER, alternation_kind

    family = enumerate_matchings(hexagon)
    labelling = fdl_labelling(hexagon, family, auto_rfd(hexagon))
    walk = hexagon.finite_faces[0].boundary
    closed = walk + (walk[0],)
    for m in family:
        want = "1" if alternation_kind(hexagon, m, closed) == PROPER else "0"
        assert labelling.labels[m.id] == want


# ---------------------------------------------------------------------------
# color swap
# ---------------------------------------------------------------------------


def test_color_swap_branched(branched5, branched5_faces):
    family = enumerate_matchings(branched5)
    rfd = rfd_from_face_order(branched5, branched5_faces)
    report = color_swap_effect(branched5, family, rfd)
    assert report.ok


def test_color_swap_naphthalene(naphthalene):
    family = enumerate_matchings(naphthalene)
    report = color_swap_effect(naphthalene, family, auto_rfd(naphthalene))
    assert report.ok


def test_color_swap_even_cycle(hexagon):
    family = enumerate_matchings(hexagon)
    rfd = auto_rfd(hexagon)
    report = color_swap_effect(hexagon, family, rfd)
    assert report.ok
    swapped = swap_colors(hexagon)
    fdl_a = fdl_labelling(hexagon, family, rfd).labels
    fdl_b = fdl_labelling(swapped, enumerate_matchings(swapped), rfd).labels
    assert all(fdl_b[m] == complement(fdl_a[m]) for m in fdl_a)


def test_extremal_swap_under_color_swap(branched5, branched5_faces):
    family = enumerate_matchings(branched5)
    swapped = swap_colors(branched5)
    ext = extremal_matchings(branched5, family)
    ext_swapped = extremal_matchings(swapped, enumerate_matchings(swapped))
    assert ext_swapped.lattice_bottom == ext.lattice_top
    assert ext_swapped.lattice_top == ext.lattice_bottom
    assert ext_swapped.fully_resonant == ext.fully_resonant


# ---------------------------------------------------------------------------
# composition
# ---------------------------------------------------------------------------


def _parts(g, scheme):
    analysis = elementary_analysis(g)
    labellings = []
    resonances = []
    for comp in analysis.elementary_components:
        sub = edge_subgraph(g, [e for e in analysis.allowed_edges if set(e) <= comp])
        family = enumerate_matchings(sub)
        rfd = auto_rfd(sub)
        fn = daisy_labelling if scheme == "daisy" else fdl_labelling
        labellings.append(fn(sub, family, rfd))
        resonances.append(build_resonance(sub, family))
    return labellings, resonances


def test_compose_two_hexagons(two_hexagons):
    labellings, resonances = _parts(two_hexagons, "daisy")
    composed = compose_labellings(labellings)
    assert composed.label_set() == {"00", "01", "10", "11"}
    product = cartesian_compose(resonances)
    index = {combo: i for i, combo in enumerate(product.vertices)}
    metric = product.metric({index[c]: composed.labels[c] for c in product.vertices})
    assert labelling_is_proper(metric, metric.labels)


def test_compose_branched_with_hexagon(branched5_plus_hexagon):
    labellings, resonances = _parts(branched5_plus_hexagon, "daisy")
    composed = compose_labellings(labellings)
    assert composed.length == 6
    product = cartesian_compose(resonances)
    index = {combo: i for i, combo in enumerate(product.vertices)}
    labels = {index[c]: composed.labels[c] for c in product.vertices}
    metric = product.metric(labels)
    assert labelling_is_proper(metric, labels)
    verdict = is_daisy_cube(metric)
    assert verdict.ok and verdict.idim == 6


def test_compose_single_part(branched5, branched5_faces):
    family = enumerate_matchings(branched5)
    rfd = rfd_from_face_order(branched5, branched5_faces)
    labelling = daisy_labelling(branched5, family, rfd)
    composed = compose_labellings([labelling])
    assert composed.label_set() == labelling.label_set()
    assert all(
        composed.labels[(mid,)] == labelling.labels[mid] for mid in labelling.labels
    )


def test_compose_rejects_mixed_schemes(hexagon):
    family = enumerate_matchings(hexagon)
    rfd = auto_rfd(hexagon)
    daisy = daisy_labelling(hexagon, family, rfd)
    fdl = fdl_labelling(hexagon, family, rfd)
    with pytest.raises(ValueError):
        compose_labellings([daisy, fdl])


def test_single_position_requires_even_cycle(naphthalene):
    from rescube.errors import UnsupportedInput

    family = enumerate_matchings(naphthalene)
    rfd = auto_rfd(naphthalene).prefix(1)
    with pytest.raises(UnsupportedInput):
        daisy_labelling(naphthalene, family, rfd)
    with pytest.raises(UnsupportedInput):
        fdl_labelling(naphthalene, family, rfd)


def test_octagon_even_cycle_codings():
    from rescube.plane_graph import build_plane_graph
    from rescube.matchings import enumerate_matchings

    ring = [(0, 4, 0), (1, 3, 3), (2, 0, 4), (3, -3, 3), (4, -4, 0),
            (5, -3, -3), (6, 0, -4), (7, 3, -3)]
    g = build_plane_graph(ring, [(i, (i + 1) % 8) for i in range(8)])
    family = enumerate_matchings(g)
    assert len(family) == 2
    rfd = auto_rfd(g)
    daisy = daisy_labelling(g, family, rfd)
    fdl = fdl_labelling(g, family, rfd)
    assert sorted(daisy.labels.values()) == ["0", "1"]
    assert sorted(fdl.labels.values()) == ["0", "1"]
    assert color_swap_effect(g, family, rfd).ok
