import pytest

from foamcalc.foamcore import (BindingArc, Facet, Foam, FoamError,
                               apply_kempe, bichrome_euler,
                               bichrome_euler_direct, enumerate_colorings,
                               foam_degree, intersection_euler,
                               is_valid_coloring, kempe_components,
                               monochrome_euler, strip_zero_facets,
                               theta_counts, validate_foam)
from foamcalc.foameval import eval as feval
from foamcalc.foamzoo import (build_gen_theta_closed, build_pocket_sphere,
                              build_sphere, build_theta, build_torus,
                              piece_theta3_sixj, zoo)
from foamcalc.openfoam import necklace
from foamcalc.schur import SchurCombo, YoungDiagram as Y


def theta_coloring(foam, first):
    for c in enumerate_colorings(foam):
        if c["fa"] == frozenset({first}):
            return c
    raise AssertionError("coloring not found")


def test_validate_theta():
    th = build_theta(1, 1, 2)
    assert validate_foam(th) == []


def test_validate_label_flow():
    fa = Facet("fa", 1, 0, [[("c", 0)]])
    fb = Facet("fb", 1, 0, [[("c", 1)]])
    fab = Facet("fab", 3, 0, [[("c", 2)]])
    foam = Foam(3, [fa, fb, fab], [BindingArc("c", "circle", ("fa", "fb", "fab"))])
    problems = validate_foam(foam)
    assert any("label flow" in p for p in problems)


def test_validate_slot_reuse():
    fa = Facet("fa", 1, 0, [[("c", 0), ("c", 0)]])
    fb = Facet("fb", 1, 0, [[("c", 1)]])
    fab = Facet("fab", 2, 0, [[("c", 2)]])
    foam = Foam(2, [fa, fb, fab], [BindingArc("c", "circle", ("fa", "fb", "fab"))])
    problems = validate_foam(foam)
    assert any("consumed" in p for p in problems)


def test_enumerate_colorings_counts():
    assert len(enumerate_colorings(build_sphere(1, 3))) == 3
    assert len(enumerate_colorings(build_theta(1, 1, 2))) == 2
    assert len(enumerate_colorings(build_torus(2, 4))) == 6
    assert len(enumerate_colorings(build_gen_theta_closed([1, 1, 1], 3))) == 6


def test_monochrome_and_intersection_euler():
    th = build_theta(1, 1, 2)
    c = theta_coloring(th, 1)
    assert monochrome_euler(th, c, 1) == 2
    assert monochrome_euler(th, c, 2) == 2
    assert intersection_euler(th, c, 1, 2) == 1  # the thick disk
    assert bichrome_euler(th, c, 1, 2) == 2
    assert bichrome_euler_direct(th, c, 1, 2) == 2


def test_torus_eulers():
    t = build_torus(1, 2)
    c = enumerate_colorings(t)[0]
    i = next(iter(c["t"]))
    assert monochrome_euler(t, c, i) == 0
    j = 3 - i
    assert monochrome_euler(t, c, j) == 0  # absent pigment: empty surface
    assert intersection_euler(t, c, 1, 2) == 0


def test_theta_counts():
    th = build_theta(1, 1, 2)
    c1 = theta_coloring(th, 1)
    c2 = theta_coloring(th, 2)
    assert theta_counts(th, c1, 1, 2) == (1, 0)
    assert theta_counts(th, c2, 1, 2) == (0, 1)
    t = build_torus(2, 3)
    for c in enumerate_colorings(t):
        assert theta_counts(t, c, 1, 2) == (0, 0)
    with pytest.raises(ValueError):
        theta_counts(th, c1, 2, 1)


def test_theta_counts_through_singular_points():
    comp = necklace([piece_theta3_sixj(1, 1, 1, "right"),
                     piece_theta3_sixj(1, 1, 1, "left")], 3)
    for c in enumerate_colorings(comp):
        for i in range(1, 4):
            for j in range(i + 1, 4):
                tp, tm = theta_counts(comp, c, i, j)
                assert (intersection_euler(comp, c, i, j) - tp - tm) % 2 == 0


def test_kempe_components_and_move():
    th = build_theta(1, 1, 2)
    c1 = theta_coloring(th, 1)
    comps = kempe_components(th, c1, 1, 2)
    assert len(comps) == 1
    assert comps[0]["euler"] == 2
    c2 = apply_kempe(th, c1, 1, 2, comps[0])
    assert c2 == theta_coloring(th, 2)
    back = apply_kempe(th, c2, 1, 2, comps[0])
    assert back == c1
    assert is_valid_coloring(th, c2)
    with pytest.raises(ValueError):
        apply_kempe(th, c1, 1, 2, {"facets": frozenset({"fab"})})


def test_kempe_empty_bichrome():
    s = build_sphere(2, 2)
    c = enumerate_colorings(s)[0]
    assert kempe_components(s, c, 1, 2) == []


def test_foam_degree():
    assert foam_degree(build_theta(1, 1, 2)) == -2
    assert foam_degree(build_theta(1, 1, 2, dec_b=Y([1]))) == 0
    assert foam_degree(build_torus(2, 3)) == 0
    assert foam_degree(build_sphere(1, 3, Y([1, 1]))) == 0
    assert foam_degree(build_pocket_sphere(1, 2)) == -2


def test_strip_zero_facets():
    # theta with a 0-labeled thin facet: stripping merges the other two
    fa = Facet("fa", 0, 0, [[("c", 0)]], SchurCombo.one(0))
    fb = Facet("fb", 2, 0, [[("c", 1)]], SchurCombo.single(2, Y([1])))
    fab = Facet("fab", 2, 0, [[("c", 2)]])
    foam = Foam(3, [fa, fb, fab], [BindingArc("c", "circle", ("fa", "fb", "fab"))])
    assert validate_foam(foam) == []
    stripped = strip_zero_facets(foam)
    assert len(stripped.facets) == 1
    merged = next(iter(stripped.facets.values()))
    assert merged.label == 2 and merged.genus == 0 and merged.boundary == []
    assert feval(stripped) == feval(foam)


def test_zoo_valid():
    for n in (2, 3):
        for name, foam in zoo(n).items():
            assert validate_foam(foam) == [], name
