"""The state sum: per-coloring values and the full symmetric evaluation.

Each coloring contributes (-1)^s * P / Q where s combines weighted
monochrome Euler characteristics with positive circle counts, P is the
product of the facet decorations evaluated on their pigment sets, and Q
is the product over pigment pairs of (X_i - X_j) raised to half the
bichrome Euler characteristic.  The total over all colorings is a
symmetric polynomial; normalization performs the exact divisions once
over a common denominator.
"""

from __future__ import annotations

from fractions import Fraction

from .foamcore import (bichrome_euler, enumerate_colorings, foam_degree,
                       is_valid_coloring, monochrome_euler, theta_counts)
from .polyring import (MultiPoly, NotPolynomial, RationalFn, exact_div_linear,
                       is_symmetric, specialize)


class EvaluationFault(ArithmeticError):
    """The total failed a guaranteed property (polynomiality, symmetry, degree)."""


def s_invariant(foam, coloring):
    """s(F, c) = sum_i i * chi(F_i)/2 + sum_{i<j} theta^+_{ij}."""
    n = foam.n
    total = 0
    for i in range(1, n + 1):
        total += i * (monochrome_euler(foam, coloring, i) // 2)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            total += theta_counts(foam, coloring, i, j)[0]
    return total


def _q_exponents(foam, coloring):
    n = foam.n
    out = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            e = bichrome_euler(foam, coloring, i, j) // 2
            if e:
                out[(i, j)] = e
    return out


def _p_polynomial(foam, coloring, convention="column"):
    n = foam.n
    out = MultiPoly.one(n)
    for f in foam.facets.values():
        if f.decoration.is_one():
            continue
        from .schur import VarSet
        value = f.decoration.evaluate(VarSet(sorted(coloring[f.id])), n, convention)
        out = out * value
        if out.is_zero():
            break
    return out


def eval_colored(foam, coloring, convention="column"):
    """The rational value of one coloring, as a RationalFn."""
    if not is_valid_coloring(foam, coloring):
        raise ValueError("invalid coloring")
    s = s_invariant(foam, coloring)
    p = _p_polynomial(foam, coloring, convention)
    if s % 2:
        p = -p
    return RationalFn(p, _q_exponents(foam, coloring))


def eval(foam, convention="column", check=True, group_by_facet=None):
    """The full evaluation: a symmetric polynomial in N variables.

    Per-coloring values are accumulated over the common denominator
    prod (X_i - X_j)^{K_ij} with K_ij the largest exponent seen, and the
    division happens once at the end.  With ``check`` on (the default) the
    result is asserted to be polynomial and symmetric and, when every
    decoration is homogeneous, homogeneous of the foam degree.

    ``group_by_facet`` optionally accumulates partial sums per color of the
    named facet before combining; the result is identical bit for bit.
    """
    n = foam.n
    colorings = enumerate_colorings(foam)
    pieces = []  # (sign, P, expmap)
    kmax = {}
    for c in colorings:
        s = s_invariant(foam, c)
        p = _p_polynomial(foam, c, convention)
        q = _q_exponents(foam, c)
        for pair, e in q.items():
            # pairs seen only with negative exponents still need a slot so
            # the deficit multiplies into the numerator below
            kmax[pair] = max(kmax.get(pair, 0), e, 0)
        pieces.append((s, p, q, c))
    groups = {}
    for s, p, q, c in pieces:
        t = p if s % 2 == 0 else -p
        for pair, kk in kmax.items():
            lift = kk - q.get(pair, 0)
            if lift:
                t = t * MultiPoly.linear_diff(n, *pair) ** lift
        gkey = tuple(sorted(c.get(group_by_facet, frozenset()))) if group_by_facet else 0
        groups[gkey] = groups.get(gkey, MultiPoly.zero(n)) + t
    num = MultiPoly.zero(n)
    for gkey in sorted(groups):
        num = num + groups[gkey]
    for (i, j), e in sorted(kmax.items()):
        for _ in range(e):
            try:
                num = exact_div_linear(num, i, j)
            except Exception as exc:
                raise EvaluationFault(
                    f"evaluation is not polynomial: (X{i}-X{j}) fails") from exc
    if check:
        if not is_symmetric(num):
            raise EvaluationFault("evaluation is not symmetric")
        if all(f.decoration.is_homogeneous() for f in foam.facets.values()) and num:
            d = foam_degree(foam)
            if num.degree_weighted() != d:
                raise EvaluationFault(
                    f"degree {num.degree_weighted()} != foam degree {d}")
    return num


def eval_lincomb(terms, n=None, convention="column", check=True):
    """Linear extension: terms is a list of (coefficient, foam).

    Coefficients are MultiPoly or int.  All foams must share the pigment
    count.
    """
    total = None
    for coeff, foam in terms:
        if n is None:
            n = foam.n
        if foam.n != n:
            raise ValueError("mixed pigment counts in linear combination")
        v = eval(foam, convention, check)
        if isinstance(coeff, int):
            v = v * coeff
        else:
            v = v * coeff
        total = v if total is None else total + v
    if total is None:
        if n is None:
            raise ValueError("empty combination with unknown arity")
        total = MultiPoly.zero(n)
    return total


def eval_numeric(foam, point, convention="column"):
    """Exact scalar evaluation at pairwise distinct coordinates.

    Sums the per-coloring values specialized at the point; equals
    specialize(eval(foam), point).
    """
    if len(point) != foam.n:
        raise ValueError("point length must equal the pigment count")
    if len(set(point)) != len(point):
        raise ValueError("point coordinates must be pairwise distinct")
    total = Fraction(0)
    for c in enumerate_colorings(foam):
        rf = eval_colored(foam, c, convention)
        total += Fraction(rf.specialize(point))
    if total.denominator != 1:
        raise EvaluationFault("numeric evaluation did not clear denominators")
    return int(total)
