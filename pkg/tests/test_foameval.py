import random
from math import comb

import pytest

from foamcalc.foamcore import (enumerate_colorings, foam_degree)
from foamcalc.foameval import (EvaluationFault, eval_colored, eval_lincomb,
                               eval_numeric, s_invariant)
from foamcalc.foameval import eval as feval
from foamcalc.foamzoo import (build_gen_theta_closed, build_sphere,
                              build_theta, build_torus, sphere_formula,
                              theta_formula, zoo)
from foamcalc.polyring import MultiPoly, RationalFn, specialize
from foamcalc.schur import YoungDiagram as Y, enumerate_box


def theta_coloring(foam, first):
    for c in enumerate_colorings(foam):
        if c["fa"] == frozenset({first}):
            return c
    raise AssertionError


def test_s_invariant_theta():
    th = build_theta(1, 1, 2, dec_b=Y([1]))
    assert s_invariant(th, theta_coloring(th, 1)) == 4
    assert s_invariant(th, theta_coloring(th, 2)) == 3
    t = build_torus(2, 3)
    for c in enumerate_colorings(t):
        assert s_invariant(t, c) == 0


def test_eval_colored_theta():
    th = build_theta(1, 1, 2, dec_b=Y([1]))
    x1 = MultiPoly.variable(2, 1)
    x2 = MultiPoly.variable(2, 2)
    assert eval_colored(th, theta_coloring(th, 1)) == RationalFn(x2, {(1, 2): 1})
    assert eval_colored(th, theta_coloring(th, 2)) == RationalFn(-x1, {(1, 2): 1})


def test_eval_paper_values():
    assert feval(build_theta(1, 1, 2, dec_b=Y([1]))) == MultiPoly.const(2, -1)
    assert feval(build_sphere(1, 2)).is_zero()
    assert feval(build_sphere(1, 3, Y([1, 1]))) == MultiPoly.const(3, -1)
    for n in (1, 2, 3, 4):
        want = (-1) ** (n * (n + 1) // 2)
        assert feval(build_sphere(n, n)) == MultiPoly.const(n, want)


def test_torus_counts():
    for n in (1, 2, 3):
        for k in range(n + 1):
            assert feval(build_torus(k, n)) == MultiPoly.const(n, comb(n, k))


def test_eval_lincomb():
    th = build_theta(1, 1, 2, dec_b=Y([1]))
    assert eval_lincomb([(1, th), (-1, th)]).is_zero()
    t1 = build_torus(1, 2)
    assert eval_lincomb([(2, t1)]) == MultiPoly.const(2, 4)
    coeff = MultiPoly.variable(2, 1)
    assert eval_lincomb([(coeff, t1)]) == coeff * 2


def test_multiplicativity_disjoint_union():
    from foamcalc.foamcore import BindingArc, Facet, Foam
    th = build_theta(1, 1, 3, dec_b=Y([1]))
    s = build_sphere(1, 3, Y([1, 1]))
    facets = ([Facet(f"A{f.id}", f.label, f.genus, f.boundary, f.decoration)
               for f in th.facets.values()]
              + [Facet(f"B{f.id}", f.label, f.genus, f.boundary, f.decoration)
                 for f in s.facets.values()])
    arcs = [BindingArc(f"A{a.id}", a.kind, tuple(f"A{x}" for x in a.sides))
            for a in th.arcs.values()]
    both = Foam(3, facets, arcs)
    assert feval(both) == feval(th) * feval(s)


def test_transposition_equivariance():
    th = build_theta(1, 2, 3, dec_a=Y([1]), dec_b=Y([2, 1]))
    colorings = enumerate_colorings(th)
    for c in colorings:
        for i in (1, 2):
            swapped = dict(c)
            cs = {fid: frozenset((i + 1 if p == i else i if p == i + 1 else p)
                                 for p in s)
                  for fid, s in swapped.items()}
            from foamcalc.foamcore import Coloring
            cs = Coloring(cs)
            lhs = eval_colored(th, cs)
            rhs = eval_colored(th, c)
            pt = [7, 11, 13]
            pt_swapped = pt[:]
            pt_swapped[i - 1], pt_swapped[i] = pt_swapped[i], pt_swapped[i - 1]
            assert lhs.specialize(pt) == rhs.specialize(pt_swapped)


def test_homogeneity_per_coloring():
    th = build_theta(1, 2, 3, dec_b=Y([2, 1]))
    d = foam_degree(th)
    for c in enumerate_colorings(th):
        rf = eval_colored(th, c)
        if rf.num.is_zero():
            continue
        deg = rf.num.degree_weighted() - 2 * sum(rf.den.values())
        assert deg == d


def test_eval_numeric_agrees():
    rng = random.Random(1)
    for n in (2, 3):
        for name, foam in zoo(n).items():
            value = feval(foam)
            for _ in range(3):
                pt = rng.sample(range(1, 50), n)
                assert eval_numeric(foam, tuple(pt)) == specialize(value, pt), name


def test_eval_numeric_rejects_repeats():
    with pytest.raises(ValueError):
        eval_numeric(build_sphere(1, 2), (3, 3))


def test_group_by_facet_identical():
    th = build_theta(1, 2, 4, dec_b=Y([1]))
    assert feval(th) == feval(th, group_by_facet="fab")


def test_sphere_formula_matches_engine():
    for n in range(1, 5):
        for a in (1, 2):
            if a > n:
                continue
            for rows in range(n + 1):
                for alpha in enumerate_box(a, rows):
                    if alpha.size > a * n:
                        continue
                    assert feval(build_sphere(a, n, alpha)) == sphere_formula(a, alpha, n)


def test_theta_formula_matches_engine_small():
    for n in (2, 3):
        for a in range(1, n):
            for b in range(1, n - a + 1):
                for alpha in enumerate_box(a, b):
                    for beta in enumerate_box(b, a):
                        for gamma in enumerate_box(a + b, n - a - b):
                            if alpha.size + beta.size + gamma.size > 4:
                                continue
                            got = feval(build_theta(a, b, n, alpha, beta, gamma))
                            want = theta_formula(a, b, n, alpha, beta, gamma)
                            assert got == MultiPoly.const(n, want)


def test_genus_two_facets():
    t = build_torus(1, 3, genus=2)
    v = feval(t)
    assert v.degree_weighted() == foam_degree(t) == 4
