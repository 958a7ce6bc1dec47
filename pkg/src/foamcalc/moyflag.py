"""MOY graphs, quantum integers, graded ranks, and flag-algebra pairings.

Closed quantum evaluations are provided only for circles and theta-family
webs; what the suites need from general webs is the coloring count, which
matches the state-sum cardinality and the graded rank at q = 1.

The pairing machinery realizes the web state spaces concretely: the basis
of the generalized-theta space is the family of decorated cup foams, the
dual basis the mirrored caps with complementary decorations and a global
sign, and every pairing or structure constant is one closed-foam
evaluation.
"""

from __future__ import annotations

from itertools import combinations, product
from math import comb, factorial

from .foameval import eval as foam_eval
from .foamcore import enumerate_colorings
from .foamzoo import build_gen_theta_closed, build_graph_times_circle
from .polyring import MultiPoly
from .schur import (SchurCombo, YoungDiagram, complement_in, enumerate_box,
                    rectangle)


class MoyVertex:
    __slots__ = ("id", "a", "b", "ab")

    def __init__(self, vid, a, b, ab):
        self.id = vid
        self.a, self.b, self.ab = a, b, ab


class MoyEdge:
    __slots__ = ("id", "label")

    def __init__(self, eid, label):
        self.id = eid
        self.label = label


class MoyGraph:
    """Labeled oriented trivalent multigraph; free circles are vertexless edges."""

    def __init__(self, edges, vertices):
        self.edges = [MoyEdge(e, l) if not isinstance(e, MoyEdge) else e
                      for e, l in (edges.items() if isinstance(edges, dict) else edges)]
        self.vertices = [v if isinstance(v, MoyVertex) else MoyVertex(*v)
                         for v in vertices]
        self._by_id = {e.id: e for e in self.edges}
        for v in self.vertices:
            la = self._by_id[v.a].label
            lb = self._by_id[v.b].label
            lab = self._by_id[v.ab].label
            if la + lb != lab:
                raise ValueError(f"vertex {v.id}: flow {la}+{lb} != {lab}")

    def edge(self, eid):
        return self._by_id[eid]

    @classmethod
    def circle(cls, label):
        return cls([("e", label)], [])

    @classmethod
    def theta(cls, a_vec):
        """Closed generalized theta web: two chains of merge vertices.

        Strand edges s_i join the bottom chain vertex p_i to the top chain
        vertex q_i; the intermediate partial sums appear twice (bottom and
        top chain copies) and the full-sum edge g closes the web.
        """
        k = len(a_vec)
        if k == 1:
            return cls.circle(a_vec[0])
        edges = [(f"s{i}", a_vec[i - 1]) for i in range(1, k + 1)]
        for i in range(2, k):
            s = sum(a_vec[:i])
            edges += [(f"mB{i}", s), (f"mT{i}", s)]
        edges.append(("g", sum(a_vec)))
        vertices = []
        for chain in ("B", "T"):
            for i in range(2, k + 1):
                prev = "s1" if i == 2 else f"m{chain}{i-1}"
                out = "g" if i == k else f"m{chain}{i}"
                vertices.append((f"{chain.lower()}{i}", prev, f"s{i}", out))
        return cls(edges, vertices)


def moy_coloring_count(graph, n):
    """Number of pigment-subset colorings obeying the flow condition."""
    order = sorted(e.id for e in graph.edges)
    labels = {e.id: e.label for e in graph.edges}
    byedge = {}
    for v in graph.vertices:
        for eid in (v.a, v.b, v.ab):
            byedge.setdefault(eid, []).append(v)
    pigments = list(range(1, n + 1))
    count = 0

    def consistent(assign, eid):
        for v in byedge.get(eid, ()):
            sa, sb, sab = assign.get(v.a), assign.get(v.b), assign.get(v.ab)
            if sa is not None and sb is not None:
                if sa & sb:
                    return False
                if sab is not None and (sa | sb) != sab:
                    return False
            if sab is not None:
                if sa is not None and not sa <= sab:
                    return False
                if sb is not None and not sb <= sab:
                    return False
        return True

    def rec(k, assign):
        nonlocal count
        if k == len(order):
            count += 1
            return
        eid = order[k]
        for comb_ in combinations(pigments, labels[eid]):
            assign[eid] = frozenset(comb_)
            if consistent(assign, eid):
                rec(k + 1, assign)
            del assign[eid]

    rec(0, {})
    return count


# -- Laurent polynomials in q -------------------------------------------------

class LaurentPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {int(k): int(v) for k, v in (coeffs or {}).items() if v}

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def q_power(cls, k):
        return cls({k: 1})

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
            if not out[k]:
                del out[k]
        return LaurentPoly(out)

    def __sub__(self, other):
        return self + LaurentPoly({k: -v for k, v in other.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({k: v * other for k, v in self.coeffs.items()})
        out = {}
        for k1, v1 in self.coeffs.items():
            for k2, v2 in other.coeffs.items():
                out[k1 + k2] = out.get(k1 + k2, 0) + v1 * v2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def at_one(self):
        return sum(self.coeffs.values())

    def is_palindromic(self):
        return all(self.coeffs.get(-k, 0) == v for k, v in self.coeffs.items())

    def exact_div(self, other):
        """Exact Laurent division; raises if not divisible."""
        if not other.coeffs:
            raise ZeroDivisionError
        num = dict(self.coeffs)
        den = dict(other.coeffs)
        dmax = max(den)
        lead = den[dmax]
        out = {}
        while num:
            nmax = max(num)
            k = nmax - dmax
            c, r = divmod(num[nmax], lead)
            if r:
                raise ArithmeticError("not divisible")
            out[k] = c
            for dk, dv in den.items():
                key = dk + k
                num[key] = num.get(key, 0) - dv * c
                if not num[key]:
                    del num[key]
        return LaurentPoly(out)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs, reverse=True):
            v = self.coeffs[k]
            base = "1" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if k == 0:
                parts.append(f"{'+' if v >= 0 else '-'}{abs(v)}")
            else:
                coeff = "" if abs(v) == 1 else str(abs(v)) + "*"
                parts.append(f"{'+' if v >= 0 else '-'}{coeff}{base}")
        return " ".join(parts)


def qint(k):
    """[k] = (q^k - q^-k)/(q - q^-1) = q^{k-1} + q^{k-3} + ... + q^{1-k}."""
    if k < 0:
        return LaurentPoly({e: -1 for e in range(k + 1, -k, 2)})
    return LaurentPoly({e: 1 for e in range(-(k - 1), k, 2)})


def qfact(k):
    out = LaurentPoly.one()
    for i in range(1, k + 1):
        out = out * qint(i)
    return out


def qbinom(l, k):
    """Quantum binomial; 0 when k < 0 (or k > l >= 0)."""
    if k < 0:
        return LaurentPoly.zero()
    if l >= 0 and k > l:
        return LaurentPoly.zero()
    num = LaurentPoly.one()
    for i in range(k):
        num = num * qint(l - i)
    return num.exact_div(qfact(k))


def qmultinomial(a_vec):
    """[sum a_i]! / prod [a_i]!."""
    out = qfact(sum(a_vec))
    for a in a_vec:
        out = out.exact_div(qfact(a))
    return out


def graded_rank_theta(a_vec):
    """Graded rank of the generalized-theta state space: [N]!/prod [a_i]!."""
    return qmultinomial(a_vec)


# -- pairing machinery ---------------------------------------------------------

def _partial_sums(a_vec):
    out = []
    s = 0
    for a in a_vec:
        out.append(s)
        s += a
    return out  # out[i] = a_1 + ... + a_i (exclusive prefix)


def basis_index(a_vec):
    """Tuples (lam_2, ..., lam_k) with lam_i in T(a_i, a_1+...+a_{i-1})."""
    prefixes = _partial_sums(a_vec)
    boxes = [enumerate_box(a_vec[i], prefixes[i]) for i in range(1, len(a_vec))]
    return [tuple(choice) for choice in product(*boxes)] if boxes else [()]


def theta_basis(a_vec, n=None):
    """The decorated cup foams: one strand-decoration tuple per basis element.

    Returns a list of (index tuple, decoration dict strand->SchurCombo),
    with strand i (i = 2..k) carrying pi_{lam_i}.
    """
    out = []
    for lam in basis_index(a_vec):
        decs = {}
        for i, d in enumerate(lam, start=2):
            decs[i] = SchurCombo.single(a_vec[i - 1], d)
        out.append((lam, decs))
    return out


def dual_decoration(a_vec, lam):
    """Decorations of the dual cap for basis index lam.

    The dual diagram of lam_i (in T(a_i, prefix)) lands in the transposed
    box T(prefix, a_i) and therefore decorates the partial-sum facet below
    strand i (the first strand when i = 2).  Returns a dict keyed by facet
    position: ("strand", 1) or ("partial", i).
    """
    from .schur import dual_in
    prefixes = _partial_sums(a_vec)
    decs = {}
    for i, d in enumerate(lam, start=2):
        dh = dual_in(d, a_vec[i - 1], prefixes[i - 1])
        key = ("strand", 1) if i == 2 else ("partial", i - 1)
        label = prefixes[i - 1]
        prev = decs.get(key)
        combo = SchurCombo.single(label, dh)
        decs[key] = combo if prev is None else prev * combo
    return decs


def dual_sign(a_vec, lam):
    """(-1)^{sum |dual lam_i| + N(N+1)/2}."""
    n = sum(a_vec)
    prefixes = _partial_sums(a_vec)
    tot = n * (n + 1) // 2
    for i, d in enumerate(lam, start=2):
        tot += a_vec[i - 1] * prefixes[i - 1] - d.size
    return (-1) ** (tot % 2)


def theta_dual_basis(a_vec, n=None):
    """Signed cap decorations dual to :func:`theta_basis` under the trace."""
    return [(lam, dual_decoration(a_vec, lam), dual_sign(a_vec, lam))
            for lam in basis_index(a_vec)]


def pairing_foam(a_vec, n, cup_decs=None, cap_decs=None, extra=None):
    """Closed pairing foam: strand products from the cup, partial-sum
    products from the cap, plus optional extra insertions.

    cup_decs: dict strand index (1-based) -> SchurCombo.
    cap_decs: dict with keys ("strand", 1) or ("partial", i).
    extra: same key shape as cap_decs, for closure-style insertions.
    """
    k = len(a_vec)
    strand = [SchurCombo.one(a) for a in a_vec]
    partial = [SchurCombo.one(sum(a_vec[:i + 1])) for i in range(1, k)]

    def bump(key, combo):
        kind, pos = key
        if kind == "strand":
            strand[pos - 1] = strand[pos - 1] * combo
        else:
            partial[pos - 2] = partial[pos - 2] * combo

    for i, combo in (cup_decs or {}).items():
        strand[i - 1] = strand[i - 1] * combo
    for key, combo in (cap_decs or {}).items():
        bump(key, combo)
    for key, combo in (extra or {}).items():
        bump(key, combo)
    return build_gen_theta_closed(a_vec, n, strand_decs=strand,
                                  partial_decs=partial if k > 1 else None)


def gram_matrix(a_vec, dual=True):
    """Pairings of the cup basis against the signed dual caps (or itself).

    Entries are full polynomials; with ``dual`` the expected value is the
    identity matrix.
    """
    n = sum(a_vec)
    basis = theta_basis(a_vec)
    duals = theta_dual_basis(a_vec) if dual else None
    size = len(basis)
    out = []
    for i, (lam, cup) in enumerate(basis):
        row = []
        for j in range(size):
            if dual:
                mu, cap, sgn = duals[j]
                v = foam_eval(pairing_foam(a_vec, n, cup, cap))
                row.append(v * sgn)
            else:
                mu, cap2 = basis[j]
                merged = dict(cup)
                for key, combo in cap2.items():
                    merged[key] = merged[key] * combo if key in merged else combo
                row.append(foam_eval(pairing_foam(a_vec, n, merged)))
        out.append(row)
    return out


def structure_constants(a_vec, alpha_tuple, beta_tuple):
    """Flag-algebra structure constants for the cup basis.

    Returns a dict basis-index -> MultiPoly: the coefficients of the
    product h_alpha h_beta in the cup basis, computed as one closed
    evaluation per candidate index.
    """
    prefixes = _partial_sums(a_vec)
    for tup in (alpha_tuple, beta_tuple):
        for i, d in enumerate(tup, start=2):
            if not d.fits(a_vec[i - 1], prefixes[i - 1]):
                raise ValueError(f"{d!r} outside T({a_vec[i-1]},{prefixes[i-1]})")
    n = sum(a_vec)
    cup = {}
    for tup in (alpha_tuple, beta_tuple):
        for i, d in enumerate(tup, start=2):
            combo = SchurCombo.single(a_vec[i - 1], d)
            cup[i] = cup[i] * combo if i in cup else combo
    out = {}
    for lam in basis_index(a_vec):
        cap = dual_decoration(a_vec, lam)
        sgn = dual_sign(a_vec, lam)
        v = foam_eval(pairing_foam(a_vec, n, cup, cap)) * sgn
        if not v.is_zero():
            out[lam] = v
    return out


def lr_via_foam(alpha, beta, lam, a, b):
    """Littlewood-Richardson coefficient from one closed-foam evaluation.

    alpha, beta, lam lie in T(b, a); the foam computes the structure
    constant of the two-step flag algebra with N = a + b, which for
    degree-matched diagrams is the integer c^lam_{alpha beta}.
    """
    for d in (alpha, beta, lam):
        if not d.fits(b, a):
            raise ValueError(f"{d!r} outside T({b},{a})")
    if alpha.size + beta.size != lam.size:
        raise ValueError("degree mismatch: |alpha|+|beta| must equal |lam|")
    a_vec = (a, b)
    n = a + b
    cup = {2: SchurCombo.single(b, alpha) * SchurCombo.single(b, beta)}
    cap = dual_decoration(a_vec, (lam,))
    v = foam_eval(pairing_foam(a_vec, n, cup, cap)) * dual_sign(a_vec, (lam,))
    if v.is_zero():
        return 0
    if not v.is_homogeneous() or v.total_degree() > 0:
        raise ArithmeticError("degree-matched structure constant is not scalar")
    return v.coefficient((0,) * n)
