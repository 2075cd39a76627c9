"""Antisymmetrized restrictions and the detection matrix."""

import random
from fractions import Fraction

import pytest

from kfusion import (
    SingularInput,
    antisymmetrize,
    build_root_datum,
    detection_matrix,
    evaluate,
    level_form,
    theta,
    torsion_subgroup,
)
from kfusion.affine import canonicalize, enumerate_regular_orbits
from kfusion.cyclotomic import cyc_ring
from kfusion.detect import character_sum_action, is_antisymmetric
from kfusion.roots import weyl_group


def test_a1_level3_antisymmetrization():
    a1 = build_root_datum("A1")
    lf = level_form(a1, 3)
    group = torsion_subgroup(lf)
    image = antisymmetrize(lf, (1,), group)
    assert image.support_size() == 2
    coeffs = {char.dual: c for char, c in image.coeffs}
    assert coeffs == {(1,): 1, (5,): -1}


def test_theta_requires_regularity():
    a1 = build_root_datum("A1")
    lf = level_form(a1, 3)
    with pytest.raises(SingularInput):
        theta(lf, canonicalize(lf, (3,))[0])
    with pytest.raises(SingularInput):
        antisymmetrize(lf, (0,))


def test_a1_level3_evaluation():
    a1 = build_root_datum("A1")
    lf = level_form(a1, 3)
    group = torsion_subgroup(lf)
    image = antisymmetrize(lf, (1,), group)
    ring = cyc_ring(6)
    f = group.element_from_coords((Fraction(1, 6),))
    assert evaluate(image, f, ring) == (-1, 2)  # zeta_6 - zeta_6^{-1}
    f2 = group.element_from_coords((Fraction(1, 3),))
    assert evaluate(image, f2, ring) == (-1, 2)
    image2 = antisymmetrize(lf, (2,), group)
    assert evaluate(image2, f, ring) == (-1, 2)
    assert evaluate(image2, f2, ring) == (1, -2)


def test_evaluation_vanishes_on_singular_elements():
    a1 = build_root_datum("A1")
    lf = level_form(a1, 3)
    group = torsion_subgroup(lf)
    image = antisymmetrize(lf, (1,), group)
    ring = cyc_ring(6)
    for coords in ((Fraction(0),), (Fraction(1, 2),)):
        f = group.element_from_coords(coords)
        assert evaluate(image, f, ring) == ring.zero

    a2 = build_root_datum("A2")
    lf2 = level_form(a2, 4)
    group2 = torsion_subgroup(lf2)
    image2 = antisymmetrize(lf2, (1, 2), group2)
    ring2 = cyc_ring(group2.exponent)
    elements = weyl_group(a2)
    for f in group2.elements:
        orbit = {group2.act(w, f) for w in elements}
        if len(orbit) < len(elements):
            assert evaluate(image2, f, ring2) == ring2.zero


def test_antisymmetry_under_weyl_action():
    for name, k in (("A1", 4), ("A2", 4), ("B2", 4)):
        datum = build_root_datum(name)
        lf = level_form(datum, k)
        group = torsion_subgroup(lf)
        for rep in enumerate_regular_orbits(lf):
            image = theta(lf, rep, group).element
            assert is_antisymmetric(group, image)
            for w in weyl_group(datum):
                moved = character_sum_action(group, w, image)
                if w.sign == 1:
                    assert moved.coeffs == image.coeffs
                else:
                    negated = tuple((c, -v) for c, v in image.coeffs)
                    assert dict(moved.coeffs) == dict(negated)


def test_theta_of_folded_weight_picks_up_the_orbit_sign():
    a2 = build_root_datum("A2")
    lf = level_form(a2, 4)
    group = torsion_subgroup(lf)
    canonical = antisymmetrize(lf, (1, 1), group)
    folded = antisymmetrize(lf, (-1, 2), group)  # = s(1,1), sign -1
    lhs = {char.dual: c for char, c in folded.coeffs}
    rhs = {char.dual: -c for char, c in canonical.coeffs}
    assert lhs == rhs


def test_support_size_counts_the_full_weyl_orbit():
    for name, k in (("A2", 5), ("B2", 5), ("G2", 5)):
        datum = build_root_datum(name)
        lf = level_form(datum, k)
        group = torsion_subgroup(lf)
        for rep in enumerate_regular_orbits(lf):
            assert theta(lf, rep, group).element.support_size() == datum.weyl_order


def test_a1_level3_detection_matrix():
    a1 = build_root_datum("A1")
    lf = level_form(a1, 3)
    dm = detection_matrix(lf)
    assert dm.ring.order == 6
    assert [r.weight for r in dm.basis] == [(1,), (2,)]
    assert [f.coords for f in dm.columns] == [(Fraction(1, 6),), (Fraction(1, 3),)]
    assert dm.entries == (((-1, 2), (-1, 2)), ((-1, 2), (1, -2)))
    assert dm.nonsingular


def test_detection_matrices_square_and_nonsingular():
    for name, levels in (("A1", (2, 5, 8)), ("A2", (3, 5)), ("B2", (3, 5)), ("G2", (4, 5))):
        datum = build_root_datum(name)
        for k in levels:
            lf = level_form(datum, k)
            if not enumerate_regular_orbits(lf):
                continue
            dm = detection_matrix(lf)
            assert len(dm.entries) == len(dm.basis) == len(dm.columns)
            assert dm.nonsingular


def test_character_sum_action_matches_argument_translation():
    # (w . Theta)(f) = Theta(w^{-1} f) pointwise
    b2 = build_root_datum("B2")
    lf = level_form(b2, 4)
    group = torsion_subgroup(lf)
    ring = cyc_ring(group.exponent)
    rep = enumerate_regular_orbits(lf)[0]
    image = theta(lf, rep, group).element
    rng = random.Random(6)
    elements = weyl_group(b2)
    for _ in range(10):
        w = rng.choice(elements)
        f = rng.choice(group.elements)
        moved = character_sum_action(group, w, image)
        assert evaluate(moved, f, ring) == evaluate(image, group.act(w.inverse(), f), ring)
