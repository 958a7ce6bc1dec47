import itertools

import pytest

from foamcalc.polyring import MultiPoly, NotPolynomial
from foamcalc.schur import (EMPTY, DiagramTooBig, SchurCombo, VarSet,
                            YoungDiagram, alternant, complement_in, conjugate,
                            dual_in, enumerate_box, inversions, lr_coeffs,
                            nabla, orthogonality_sum, rectangle, schur_eval,
                            schur_eval_jacobi_trudi, schur_eval_ssyt,
                            square_sum, vandermonde)

Y = YoungDiagram


def test_conjugate():
    assert conjugate(EMPTY) == EMPTY
    assert conjugate(Y([2, 1])) == Y([2, 1])
    assert conjugate(Y([3, 1])) == Y([2, 1, 1])


def test_complement_and_dual():
    assert complement_in(EMPTY, 1, 1) == Y([1])
    assert complement_in(rectangle(2, 3), 2, 3) == EMPTY
    assert complement_in(Y([1]), 2, 2) == Y([2, 1])
    assert dual_in(Y([1]), 1, 1) == EMPTY
    assert dual_in(EMPTY, 1, 1) == Y([1])
    # a 2x3 box: transpose then rotate the complement
    assert dual_in(Y([2, 1]), 2, 3) == Y([2, 1])
    assert dual_in(Y([2, 2, 1]), 2, 3) == Y([1])
    assert dual_in(Y([1]), 2, 3) == Y([3, 2])
    with pytest.raises(DiagramTooBig):
        complement_in(Y([3]), 2, 2)


def test_box_involutions():
    for a, b in [(1, 1), (2, 2), (2, 3), (3, 2)]:
        for d in enumerate_box(a, b):
            assert complement_in(complement_in(d, a, b), a, b) == d
            assert dual_in(dual_in(d, a, b), b, a) == d
            lhs = conjugate(complement_in(d, a, b))
            rhs = complement_in(conjugate(d), b, a)
            assert lhs == rhs


def test_enumerate_box():
    assert [d.rows for d in enumerate_box(1, 1)] == [(), (1,)]
    assert enumerate_box(0, 4) == [EMPTY]
    assert enumerate_box(4, 0) == [EMPTY]
    assert len(enumerate_box(2, 2)) == 6
    assert len(enumerate_box(3, 2)) == 10


def test_schur_eval_small():
    one_var = VarSet([1])
    assert schur_eval(Y([1]), one_var, 1).to_text() == "+1*X1"
    assert schur_eval(EMPTY, one_var, 1) == MultiPoly.one(1)
    # row convention examples
    assert schur_eval(Y([1, 1]), VarSet([1, 2]), 2, "row").to_text() == "+1*X1*X2"
    assert schur_eval_ssyt(Y([2]), VarSet([1, 2]), 2, "row").to_text() \
        == "+1*X1^2 +1*X1*X2 +1*X2^2"
    assert schur_eval_ssyt(Y([1]), VarSet([1, 2, 3]), 3).to_text() \
        == "+1*X1 +1*X2 +1*X3"
    # column convention turns a one-column diagram into a power
    assert schur_eval(Y([1, 1]), one_var, 1).to_text() == "+1*X1^2"


def test_three_routes_agree():
    for d in enumerate_box(3, 3):
        for m in (1, 2, 3, 4):
            A = VarSet(range(1, m + 1))
            p1 = schur_eval(d, A, m)
            p2 = schur_eval_ssyt(d, A, m)
            p3 = schur_eval_jacobi_trudi(d, A, m)
            assert p1 == p2 == p3


def test_lr_coeffs():
    assert lr_coeffs(EMPTY, Y([2, 1])) == {Y([2, 1]): 1}
    assert lr_coeffs(Y([1]), Y([1])) == {Y([2]): 1, Y([1, 1]): 1}
    out = lr_coeffs(Y([2, 1]), Y([2, 1]))
    assert out[Y([3, 2, 1])] == 2
    assert out[Y([4, 2])] == 1


def test_lr_matches_polynomial_product():
    for a, b in [((2,), (1, 1)), ((2, 1), (2,)), ((2, 2), (1, 1))]:
        A, B = Y(a), Y(b)
        m = A.nrows + B.nrows + 1
        V = VarSet(range(1, m + 1))
        lhs = schur_eval(A, V, m, "row") * schur_eval(B, V, m, "row")
        rhs = MultiPoly.zero(m)
        for lam, c in lr_coeffs(A, B).items():
            rhs = rhs + schur_eval(lam, V, m, "row") * c
        assert lhs == rhs


def test_alternant_identities():
    assert alternant(EMPTY, VarSet([1]), 1) == MultiPoly.one(1)
    assert alternant(EMPTY, VarSet([1, 2]), 2).to_text() == "+1*X1 -1*X2"
    assert alternant(Y([1]), VarSet([1, 2]), 2).to_text() == "+1*X1^2 -1*X2^2"
    for d in enumerate_box(2, 2):
        for m in (2, 3):
            V = VarSet(range(1, m + 1))
            assert alternant(d, V, m) == vandermonde(V, m) * schur_eval(d, V, m, "row")


def test_vandermonde_nabla_inversions():
    assert vandermonde(VarSet([2]), 2) == MultiPoly.one(2)
    n1 = nabla(VarSet([1]), VarSet([2, 3]), 3)
    assert n1 == (MultiPoly.linear_diff(3, 1, 2) * MultiPoly.linear_diff(3, 1, 3))
    A, B = VarSet([1, 4]), VarSet([2, 3])
    assert inversions(A, B) == 2
    assert inversions(A, B) + inversions(B, A) == 4
    with pytest.raises(ValueError):
        nabla(VarSet([1, 2]), VarSet([2, 3]), 3)


def test_schur_combo_product():
    c1 = SchurCombo.single(2, Y([1]))
    prod = c1 * c1
    # pi_1 * pi_1 = pi_2 + pi_11 (conjugated LR rule)
    assert prod.terms == {Y([2]): 1, Y([1, 1]): 1}
    ev = prod.evaluate(VarSet([1, 2]), 2)
    direct = schur_eval(Y([1]), VarSet([1, 2]), 2) ** 2
    assert ev == direct


def _orth_instance(a1, a2, b1, b2, csize):
    tot = a1 + a2 + b1 + b2 + csize
    ids = list(range(1, tot + 1))
    k = 0
    A = VarSet(ids[k:k + a1 + a2]); k += a1 + a2
    B1 = VarSet(ids[k:k + b1]); k += b1
    B2 = VarSet(ids[k:k + b2]); k += b2
    C = VarSet(ids[k:])
    return A, B1, B2, C, tot


def test_orthogonality_sum_delta_pattern():
    # all instances with |A| <= 3 and |B1|, |B2| <= 2, six variables max
    for b1, b2, p, q in itertools.product(range(3), range(3), range(3), range(3)):
        a1, a2 = p + b1, q + b2
        if not 0 < a1 + a2 <= 3:
            continue
        for csize in (0, 1):
            A, B1, B2, C, tot = _orth_instance(a1, a2, b1, b2, csize)
            if tot > 6:
                continue
            for ab in enumerate_box(p, q):
                abhat = dual_in(ab, p, q)
                for at in enumerate_box(q, p):
                    val = orthogonality_sum(A, B1, B2, C, VarSet(), VarSet(),
                                            at, ab, a2, tot)
                    if at == abhat:
                        expo = (csize * (a2 - b2) + a1 * b2 + ab.size)
                        assert val == MultiPoly.const(tot, (-1) ** (expo % 2))
                    else:
                        assert val.is_zero()


def test_square_sum_vanishes():
    for Atot in (1, 2, 3):
        for a2size in range(Atot + 1):
            a1size = Atot - a2size
            ids = list(range(1, Atot + 1))
            for A2t in itertools.combinations(ids, a2size):
                A1t = tuple(x for x in ids if x not in A2t)
                for A2b in itertools.combinations(ids, a2size):
                    A1b = tuple(x for x in ids if x not in A2b)
                    for btot in (0, 1, 2):
                        for csize in (0, 1):
                            tot = Atot + btot + csize
                            if tot > 5:
                                continue
                            all_ids = list(range(1, tot + 1))
                            B = VarSet(all_ids[Atot:Atot + btot])
                            C = VarSet(all_ids[Atot + btot:])
                            m = Atot
                            k = m + a1size - btot - csize
                            l = k + a2size + csize - m
                            if k < 0 or l < 0:
                                continue
                            diff = square_sum(VarSet(A1t), VarSet(A2t),
                                              VarSet(A1b), VarSet(A2b),
                                              B, C, VarSet(), VarSet(),
                                              m, m, l, k, tot)
                            assert diff.is_zero(), (A1t, A2t, A1b, A2b, btot, csize)
