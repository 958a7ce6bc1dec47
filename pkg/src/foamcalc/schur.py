"""Young diagrams, Schur polynomials, Littlewood-Richardson numbers.

Diagrams are stored row-wise (English convention).  Box operations follow
the T(a, b) parameter order used throughout the package: *a* bounds the
number of columns, *b* the number of rows.

Facet decorations come with a convention switch.  A diagram lam placed on
a facet carrying k pigments is evaluated as a symmetric polynomial in k
variables; under the default ``"column"`` convention this is the Schur
polynomial of the conjugate partition, so that diagrams with up to k
*columns* (arbitrarily many rows) are the admissible ones.  The ``"row"``
convention evaluates the diagram itself and is kept for experiments.
"""

from __future__ import annotations

from itertools import combinations, permutations

from .polyring import (MultiPoly, complete_homogeneous, exact_div_linear,
                       poly_mul)


class InadmissibleDiagram(ValueError):
    pass


class DiagramTooBig(ValueError):
    pass


class YoungDiagram:
    """A partition: weakly decreasing positive row lengths."""

    __slots__ = ("rows",)

    def __init__(self, rows=()):
        rows = tuple(int(r) for r in rows if r)
        if any(rows[i] < rows[i + 1] for i in range(len(rows) - 1)):
            raise ValueError(f"rows not weakly decreasing: {rows}")
        if rows and rows[-1] < 0:
            raise ValueError("negative row length")
        self.rows = rows

    def __eq__(self, other):
        return isinstance(other, YoungDiagram) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __lt__(self, other):
        return self.rows < other.rows

    def __repr__(self):
        return f"YoungDiagram({list(self.rows)})"

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    @property
    def size(self):
        return sum(self.rows)

    @property
    def ncols(self):
        return self.rows[0] if self.rows else 0

    @property
    def nrows(self):
        return len(self.rows)

    def row(self, i):
        """Row length, 0-based, 0 beyond the last row."""
        return self.rows[i] if i < len(self.rows) else 0

    def fits(self, a, b):
        """True iff the diagram lies in T(a, b): <= a columns, <= b rows."""
        return self.ncols <= a and self.nrows <= b

    def contains(self, other):
        return all(self.row(i) >= other.row(i) for i in range(other.nrows))

    def to_text(self):
        return "[" + ",".join(str(r) for r in self.rows) + "]"

    @classmethod
    def from_text(cls, text):
        text = text.strip()
        if not (text.startswith("[") and text.endswith("]")):
            raise ValueError(f"bad diagram literal: {text!r}")
        body = text[1:-1].strip()
        return cls([] if not body else [int(t) for t in body.split(",")])


EMPTY = YoungDiagram()


def conjugate(d):
    """Transpose: column lengths become rows."""
    if not d.rows:
        return EMPTY
    cols = [0] * d.ncols
    for r in d.rows:
        for c in range(r):
            cols[c] += 1
    return YoungDiagram(cols)


def complement_in(d, a, b):
    """180-degree rotated complement inside the a-columns x b-rows box."""
    if not d.fits(a, b):
        raise DiagramTooBig(f"{d!r} does not fit in T({a},{b})")
    return YoungDiagram(tuple(a - d.row(b - 1 - i) for i in range(b)))


def dual_in(d, a, b):
    """Conjugate of the complement; lands in T(b, a).  Involution back."""
    return complement_in(conjugate(d), b, a)


def rectangle(a, b):
    """rho(a, b): the full a-columns x b-rows rectangle."""
    return YoungDiagram((a,) * b)


def enumerate_box(a, b):
    """All diagrams in T(a, b), deterministically ordered, |T| = C(a+b, a)."""
    out = []

    def rec(prev, row, acc):
        if row == b:
            out.append(YoungDiagram(acc))
            return
        for r in range(prev, -1, -1):
            rec(r, row + 1, acc + [r])

    if b == 0 or a == 0:
        return [EMPTY]
    rec(a, 0, [])
    # remove duplicates caused by trailing zeros, keep first occurrences
    seen, uniq = set(), []
    for d in out:
        if d not in seen:
            seen.add(d)
            uniq.append(d)
    return sorted(uniq, key=lambda d: (d.size, d.rows))


class VarSet:
    """An ordered set of distinct 1-based variable indices."""

    __slots__ = ("indices",)

    def __init__(self, indices=()):
        idx = tuple(sorted(set(int(i) for i in indices)))
        if len(idx) != len(tuple(indices)):
            raise ValueError(f"duplicate indices in {indices}")
        if idx and idx[0] < 1:
            raise ValueError("indices are 1-based")
        self.indices = idx

    def __iter__(self):
        return iter(self.indices)

    def __len__(self):
        return len(self.indices)

    def __contains__(self, i):
        return i in self.indices

    def __eq__(self, other):
        return isinstance(other, VarSet) and self.indices == other.indices

    def __hash__(self):
        return hash(self.indices)

    def __repr__(self):
        return f"VarSet({list(self.indices)})"

    def union(self, *others):
        idx = set(self.indices)
        for o in others:
            o_idx = set(o)
            if idx & o_idx:
                raise ValueError("overlapping variable sets")
            idx |= o_idx
        return VarSet(sorted(idx))


def inversions(A, B):
    """|A < B|: pairs (a, b) with a in A, b in B, a < b.  Sets must be disjoint."""
    sa, sb = set(A), set(B)
    if sa & sb:
        raise ValueError("sets overlap")
    return sum(1 for a in sa for b in sb if a < b)


def vandermonde(A, nvars):
    """prod_{i<j in A, in listed order} (X_Ai - X_Aj) over ascending indices."""
    idx = list(A)
    out = MultiPoly.one(nvars)
    for i in range(len(idx)):
        for j in range(i + 1, len(idx)):
            out = out * MultiPoly.linear_diff(nvars, idx[i], idx[j])
    return out


def nabla(A, B, nvars):
    """prod_{a in A, b in B} (X_a - X_b); A, B disjoint."""
    if set(A) & set(B):
        raise ValueError("sets overlap")
    out = MultiPoly.one(nvars)
    for a in A:
        for b in B:
            out = out * MultiPoly.linear_diff(nvars, a, b)
    return out


def alternant(d, A, nvars):
    """det(X_a^{lam_j + m - j}) over the m variables of A (lam padded)."""
    idx = list(A)
    m = len(idx)
    if d.nrows > m:
        raise InadmissibleDiagram(f"{d!r} has more than {m} rows")
    exps = [d.row(j) + m - 1 - j for j in range(m)]
    out = MultiPoly.zero(nvars)
    for perm in permutations(range(m)):
        sign = _perm_sign(perm)
        e = [0] * nvars
        for row, col in enumerate(perm):
            e[idx[row] - 1] += exps[col]
        out = out + MultiPoly(nvars, {tuple(e): sign})
    return out


def _perm_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        ln = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            ln += 1
        if ln % 2 == 0:
            sign = -sign
    return sign


def _schur_row(d, indices, nvars):
    """Schur polynomial s_d in the listed variables, bialternant route."""
    m = len(indices)
    if d.nrows > m:
        return MultiPoly.zero(nvars)
    num = alternant(d, indices, nvars)
    out = num
    idx = list(indices)
    for i in range(m):
        for j in range(i + 1, m):
            out = exact_div_linear(out, idx[i], idx[j])
    return out


def _convention_shape(d, nvariables, convention):
    if convention == "column":
        shape = conjugate(d)
    elif convention == "row":
        shape = d
    else:
        raise ValueError(f"unknown convention {convention!r}")
    return shape


def schur_eval(d, A, nvars, convention="column"):
    """Evaluate the decoration diagram d on the variables A.

    Under the column convention this is s_{d^t}; diagrams whose conjugate
    has more rows than |A| evaluate to zero only when |A| is exceeded by
    the column count of d, which is flagged as inadmissible.
    """
    shape = _convention_shape(d, len(A), convention)
    if shape.nrows > len(A):
        return MultiPoly.zero(nvars)
    return _schur_row(shape, A, nvars)


def schur_eval_ssyt(d, A, nvars, convention="column"):
    """Same value as :func:`schur_eval`, by summing over semistandard tableaux."""
    shape = _convention_shape(d, len(A), convention)
    idx = list(A)
    m = len(idx)
    if shape.nrows > m:
        return MultiPoly.zero(nvars)
    if not shape.rows:
        return MultiPoly.one(nvars)
    rows = shape.rows
    terms = {}

    def fill(r, c, row_entries, prev_row):
        if r == len(rows):
            e = [0] * nvars
            for entries in all_rows:
                for v in entries:
                    e[idx[v] - 1] += 1
            key = tuple(e)
            terms[key] = terms.get(key, 0) + 1
            return
        if c == rows[r]:
            all_rows.append(row_entries)
            fill(r + 1, 0, [], row_entries)
            all_rows.pop()
            return
        lo = row_entries[-1] if row_entries else 0
        if prev_row is not None and c < len(prev_row):
            lo = max(lo, prev_row[c] + 1)
        for v in range(lo, m):
            fill(r, c + 1, row_entries + [v], prev_row)

    all_rows = []
    fill(0, 0, [], None)
    return MultiPoly(nvars, terms)


def schur_eval_jacobi_trudi(d, A, nvars, convention="column"):
    """Third route: determinant of complete homogeneous symmetric polynomials."""
    shape = _convention_shape(d, len(A), convention)
    idx = list(A)
    if shape.nrows > len(idx):
        return MultiPoly.zero(nvars)
    ell = shape.nrows
    if ell == 0:
        return MultiPoly.one(nvars)
    mat = [[complete_homogeneous(nvars, shape.row(i) - i + j, idx)
            for j in range(ell)] for i in range(ell)]
    return _det(mat, nvars)


def _det(mat, nvars):
    n = len(mat)
    out = MultiPoly.zero(nvars)
    for perm in permutations(range(n)):
        sign = _perm_sign(perm)
        prod = MultiPoly.one(nvars)
        for i in range(n):
            prod = prod * mat[i][perm[i]]
        out = out + prod * sign
    return out


def lr_coeffs(a, b):
    """All Littlewood-Richardson coefficients c^lam_{a,b}, by the lattice rule.

    Returns a dict YoungDiagram -> positive int.  This is the classical
    skew-tableau filling rule and serves as the independent oracle for the
    foam-based computations.
    """
    out = {}
    total = a.size + b.size
    maxrows = a.nrows + b.nrows

    def candidates():
        # partitions lam of `total` containing a, at most maxrows rows
        def rec(row, remaining, prev, acc):
            if remaining == 0:
                yield YoungDiagram(acc)
                return
            if row == maxrows:
                return
            lo = a.row(row)
            hi = min(prev, remaining)
            for r in range(hi, lo - 1, -1):
                if r == 0 and remaining > 0:
                    break
                yield from rec(row + 1, remaining - r, r, acc + [r])
        yield from rec(0, total, total, [])

    for lam in candidates():
        c = _lr_fillings(lam, a, b)
        if c:
            out[lam] = c
    return out


def _lr_fillings(lam, inner, content):
    """Count LR skew tableaux of shape lam/inner with content `content`.

    Cells are filled in reverse reading order (each row right to left, rows
    top to bottom) so that the lattice-word prefix condition can be checked
    as letters are placed.
    """
    order = []
    for r in range(lam.nrows):
        for c in range(lam.row(r) - 1, inner.row(r) - 1, -1):
            order.append((r, c))
    if sum(content.rows) != len(order):
        return 0
    nletters = max(1, content.nrows)
    filling = {}
    used = [0] * nletters
    count = 0

    def rec(kpos):
        nonlocal count
        if kpos == len(order):
            count += 1
            return
        r, c = order[kpos]
        for v in range(nletters):
            if used[v] >= content.row(v):
                continue
            if v > 0 and used[v] + 1 > used[v - 1]:
                continue  # lattice word prefix would fail
            right = filling.get((r, c + 1))
            if right is not None and v > right:
                continue  # rows weakly increase left to right
            up = filling.get((r - 1, c))
            if r > 0 and inner.row(r - 1) <= c < lam.row(r - 1):
                if up is None or up >= v:
                    continue  # columns strictly increase downward
            filling[(r, c)] = v
            used[v] += 1
            rec(kpos + 1)
            used[v] -= 1
            del filling[(r, c)]

    rec(0)
    return count


def schur_product_expand(a, b, nvars_hint=None):
    """Expand s_a * s_b in the Schur basis via :func:`lr_coeffs`."""
    return lr_coeffs(a, b)


class SchurCombo:
    """Integer linear combination of decoration diagrams, fixed arity."""

    __slots__ = ("arity", "terms")

    def __init__(self, arity, terms=None):
        self.arity = arity
        clean = {}
        for d, c in (terms or {}).items():
            if not isinstance(d, YoungDiagram):
                d = YoungDiagram(d)
            if c:
                clean[d] = clean.get(d, 0) + c
                if not clean[d]:
                    del clean[d]
        self.terms = clean

    @classmethod
    def one(cls, arity):
        return cls(arity, {EMPTY: 1})

    @classmethod
    def single(cls, arity, d, coeff=1):
        return cls(arity, {d: coeff})

    def is_one(self):
        return self.terms == {EMPTY: 1}

    def __eq__(self, other):
        return (isinstance(other, SchurCombo) and self.arity == other.arity
                and self.terms == other.terms)

    def __mul__(self, other):
        """Product inside the symmetric-polynomial algebra of this arity.

        Uses the LR rule on conjugates so that the column convention is
        respected; diagrams exceeding the arity's column bound are kept
        (they evaluate to zero later) to preserve exactness.
        """
        if isinstance(other, SchurCombo):
            if other.arity != self.arity:
                raise ValueError("arity mismatch")
            out = {}
            for d1, c1 in self.terms.items():
                for d2, c2 in other.terms.items():
                    for lam_t, m in lr_coeffs(conjugate(d1), conjugate(d2)).items():
                        lam = conjugate(lam_t)
                        out[lam] = out.get(lam, 0) + c1 * c2 * m
            return SchurCombo(self.arity, out)
        raise TypeError

    def degree(self):
        degs = {2 * d.size for d in self.terms}
        if not degs:
            return 0
        if len(degs) != 1:
            raise ValueError("decoration is not homogeneous")
        return degs.pop()

    def is_homogeneous(self):
        return len({d.size for d in self.terms}) <= 1

    def evaluate(self, A, nvars, convention="column"):
        out = MultiPoly.zero(nvars)
        for d, c in self.terms.items():
            out = out + schur_eval(d, A, nvars, convention) * c
        return out

    def __repr__(self):
        body = " + ".join(f"{c}*pi{d.to_text()}" for d, c in sorted(
            self.terms.items(), key=lambda kv: (kv[0].size, kv[0].rows)))
        return f"SchurCombo({self.arity}, {body or '0'})"


# ---------------------------------------------------------------------------
# The two displayed summation identities used by the local-relation proofs.
# ---------------------------------------------------------------------------

def orthogonality_sum(A, B1, B2, C, L, R, at, ab, a2_size, nvars,
                      convention="column"):
    """The two-block splitting sum whose value is 0 or +-1.

    Sums over ordered splittings A = A1 u A2 with |A2| = a2_size:

        (-1)^{|C|(|A2|-|B2|) + |A1<A2| + |B1||B2|}
        * nabla(A1,B2) nabla(A2,B1) Delta(A1) Delta(A2)
        * pi_ab(A1 B2 C L R) pi_at(A2 B1 C L R)
        / (nabla(B1,B2) Delta(A))

    and returns the normalized polynomial value.
    """
    from .polyring import RationalFn

    alln = list(A)
    clr = list(C) + list(L) + list(R)
    acc = None
    for a2 in combinations(alln, a2_size):
        A2 = VarSet(a2)
        A1 = VarSet([x for x in alln if x not in a2])
        sign = (len(C) * (len(A2) - len(B2)) + inversions(A1, A2)
                + len(B1) * len(B2))
        num = nabla(A1, B2, nvars) * nabla(A2, B1, nvars)
        num = num * vandermonde(A1, nvars) * vandermonde(A2, nvars)
        num = num * schur_eval(ab, VarSet(sorted(set(A1) | set(B2) | set(clr))),
                               nvars, convention)
        num = num * schur_eval(at, VarSet(sorted(set(A2) | set(B1) | set(clr))),
                               nvars, convention)
        if sign % 2:
            num = -num
        den = {}
        for b1 in B1:
            for b2 in B2:
                key = (min(b1, b2), max(b1, b2))
                den[key] = den.get(key, 0) + 1
                if b1 > b2:
                    num = -num
        for i, x in enumerate(alln):
            for y in alln[i + 1:]:
                den[(min(x, y), max(x, y))] = den.get((min(x, y), max(x, y)), 0) + 1
        term = RationalFn(num, den)
        acc = term if acc is None else acc + term
    if acc is None:
        return MultiPoly.zero(nvars)
    return acc.normalize()


def square_sum(A1t, A2t, A1b, A2b, B, C, L, R, n, m, l, k, nvars,
               convention="column"):
    """Square-relation splitting sum minus its collapsed value.

    Sums, over j, alpha in T(k-j, l-k+j) and splittings B = B1 u B2 with
    |B2| = m - j - |C| and |A2t| - |B2| = l - k + j, the ratio

        (-1)^{e} * nabla(B1, A2t n A2b) nabla(B2, A1t n A1b)
        * Delta(B1) Delta(B2)
        * pi_alpha(A1t B2 C L R) pi_{dual alpha}(A2b B1 C L R)
        / (Delta(B) nabla(A1t n A1b, A2t n A2b) nabla(A2t n A1b, A1t n A2b))

    with exponent

        e = |alpha| + |B1| + |B1||B2| + |C||B1| + |B2 < B1|
            + (l-k+j)(m-j) + |B| + |A1||A2| + |A2||B| + |A2||C| + |B||C|,

    and subtracts 1 when the top and bottom splittings agree.  The sign
    bookkeeping was pinned by symbolic expansion over every splitting
    shape with at most six variables; the result normalizes to the zero
    polynomial exactly when the collapsed identity holds.  Consistent
    instances satisfy m = |A1t| + |A2t|, k = m + |A1t| - |B| - |C| and
    l = k + |A2t| + |C| - m.
    """
    from .polyring import RationalFn

    set_A1t, set_A2t = set(A1t), set(A2t)
    set_A1b, set_A2b = set(A1b), set(A2b)
    if set_A1t | set_A2t != set_A1b | set_A2b:
        raise ValueError("top and bottom splittings cover different sets")
    if len(set_A1t) != len(set_A1b):
        raise ValueError("top and bottom splittings have different sizes")
    i11 = sorted(set_A1t & set_A1b)
    i22 = sorted(set_A2t & set_A2b)
    i12 = sorted(set_A1t & set_A2b)
    i21 = sorted(set_A2t & set_A1b)
    clr = sorted(set(C) | set(L) | set(R))
    blist = sorted(set(B))
    a1, a2, btot, c = len(set_A1t), len(set_A2t), len(blist), len(C)
    global_expo = (btot + a1 * a2 + a2 * btot + a2 * c + btot * c) % 2

    acc = None
    for j in range(max(0, m - n), m + 1):
        b2_size = m - j - c
        if b2_size < 0 or b2_size > btot:
            continue
        if a2 - b2_size != l - k + j:
            continue
        box_cols, box_rows = k - j, l - k + j
        if box_cols < 0 or box_rows < 0:
            continue
        for b2 in combinations(blist, b2_size):
            B2 = VarSet(b2)
            B1 = VarSet([x for x in blist if x not in b2])
            for alpha in enumerate_box(box_cols, box_rows):
                ahat = dual_in(alpha, box_cols, box_rows)
                expo = (alpha.size + len(B1) + len(B1) * len(B2)
                        + c * len(B1) + inversions(B2, B1)
                        + box_rows * (m - j) + global_expo)
                num = nabla(B1, VarSet(i22), nvars) * nabla(B2, VarSet(i11), nvars)
                num = num * vandermonde(B1, nvars) * vandermonde(B2, nvars)
                num = num * schur_eval(
                    alpha, VarSet(sorted(set_A1t | set(B2) | set(clr))),
                    nvars, convention)
                num = num * schur_eval(
                    ahat, VarSet(sorted(set_A2b | set(B1) | set(clr))),
                    nvars, convention)
                if expo % 2:
                    num = -num
                den = {}
                for ix, x in enumerate(blist):
                    for y in blist[ix + 1:]:
                        den[(x, y)] = den.get((x, y), 0) + 1
                for xs, ys in ((i11, i22), (i21, i12)):
                    for x in xs:
                        for y in ys:
                            den[(min(x, y), max(x, y))] = den.get(
                                (min(x, y), max(x, y)), 0) + 1
                            if x > y:
                                num = -num
                term = RationalFn(num, den)
                acc = term if acc is None else acc + term
    if acc is None:
        acc = RationalFn.from_poly(MultiPoly.zero(nvars))
    target = 1 if set_A1t == set_A1b else 0
    return (acc - RationalFn.from_poly(MultiPoly.const(nvars, target))).normalize()
