import pytest

from foamcalc.foameval import eval as feval
from foamcalc.foamzoo import (build_relation, close_relation, closure_family,
                              piece_theta_cut, piece_theta_prism, piece_tube,
                              zoo)
from foamcalc.openfoam import necklace
from foamcalc.polyring import MultiPoly
from foamcalc.schur import YoungDiagram as Y


INSTANCES = [
    ("digon", (1, 1), 2),
    ("digon", (1, 1), 3),
    ("digon", (1, 2), 3),
    ("digon-dur", (1, 1), 3),
    ("square", (1, 1, 1, 1), 2),
    ("square", (1, 1, 1, 1), 3),
    ("dot-migration", (1, 1, Y([1])), 2),
    ("dot-migration", (1, 2, Y([2, 1])), 3),
    ("neck-cutting", (1,), 2),
    ("neck-cutting", (1,), 3),
    ("neck-cutting", (2,), 3),
    ("joint", (1, 1), 2),
    ("joint", (1, 2), 3),
    ("mp", (1, 1, 1), 3),
]


@pytest.mark.parametrize("rid,params,n", INSTANCES,
                         ids=[f"{r}{p}N{n}" for r, p, n in INSTANCES])
def test_relation_holds_under_all_closures(rid, params, n):
    rel = build_relation(rid, params, n)
    fam = closure_family(rel.web, n, max_degree=2 * n, relation_terms=rel.rhs)
    assert fam, "closure family must not be empty"
    for cname, cl in fam:
        lhs, rhs = close_relation(rel, cl)
        assert lhs == rhs, f"{rid}{params} N={n} fails against {cname}"


@pytest.mark.parametrize("rid,params,n", [
    ("digon", (1, 1), 2), ("digon", (1, 2), 3),
    ("square", (1, 1, 1, 1), 2), ("neck-cutting", (1,), 2),
    ("neck-cutting", (2,), 3), ("joint", (1, 1), 2), ("joint", (1, 2), 3),
], ids=str)
def test_rhs_terms_are_orthogonal_idempotents(rid, params, n):
    rel = build_relation(rid, params, n)
    assert rel.idempotent_rhs
    closure = closure_family(rel.web, n, max_degree=0)[0][1]
    terms = rel.rhs
    for i, (ci, ti) in enumerate(terms):
        for j, (cj, tj) in enumerate(terms):
            if rid == "joint":
                # tube terms are decorated identities: composing multiplies
                # decorations, so the idempotent test is the relation itself
                continue
            comp = feval(necklace([closure, ti, tj], n)) * (ci * cj)
            if i == j:
                single = feval(necklace([closure, ti], n)) * ci
                assert comp == single, f"{rid} term {i} not idempotent"
            else:
                assert comp.is_zero(), f"{rid} terms {i},{j} not orthogonal"


def test_joint_terms_idempotent_as_projectors():
    # for the bubble relation the projector property is the statement that
    # bursting twice equals bursting once against every closure
    n = 3
    rel = build_relation("joint", (1, 2), n)
    fam = closure_family(rel.web, n, max_degree=2)
    for cname, cl in fam:
        once = MultiPoly.zero(n)
        for c, t in rel.rhs:
            once = once + feval(necklace([cl, t], n)) * c
        twice = MultiPoly.zero(n)
        for c1, t1 in rel.rhs:
            for c2, t2 in rel.rhs:
                twice = twice + feval(necklace([cl, t1, t2], n)) * (c1 * c2)
        assert once == twice, cname


def test_mp_roundtrip_both_orders():
    from foamcalc.foamzoo import piece_theta3_prism, piece_theta3_sixj
    for n in (3, 4):
        up = piece_theta3_sixj(1, 1, 1, "right")
        down = piece_theta3_sixj(1, 1, 1, "left")
        prism = piece_theta3_prism(1, 1, 1)
        assert feval(necklace([up, down], n)) == feval(necklace([prism], n))
        assert feval(necklace([down, up], n)) == feval(necklace([prism], n))


def test_closure_family_deterministic():
    rel = build_relation("digon", (1, 1), 2)
    f1 = [name for name, _ in closure_family(rel.web, 2, relation_terms=rel.rhs)]
    f2 = [name for name, _ in closure_family(rel.web, 2, relation_terms=rel.rhs)]
    assert f1 == f2


def test_assembler_matches_direct_constructors():
    # the necklace of a pocket pair equals the directly built pocket sphere
    from foamcalc.foamzoo import (build_pocket_chain, build_pocket_sphere,
                                  piece_pocketpair)
    for (a, n) in [(1, 2), (1, 3), (2, 3)]:
        via_piece = feval(necklace(
            [piece_pocketpair(a, n, bot_host=Y([1]) if a == 1 else None)], n))
        direct = feval(build_pocket_sphere(
            a, n, a_dec=Y([1]) if a == 1 else None))
        assert via_piece == direct
    # tube necklace equals the genus-one closed facet
    for (a, n) in [(1, 2), (2, 3)]:
        assert feval(necklace([piece_tube(a)], n)) == \
            feval(build_pocket_chain(a, n, genus=1))
