"""Exact sparse multivariate integer polynomials and factored rational functions.

Everything here is over Z: coefficients are Python ints, so arithmetic is
exact at any size.  A :class:`MultiPoly` is a sparse map from exponent
vectors to coefficients; a :class:`RationalFn` is a polynomial numerator
together with a denominator kept factored as a product of differences
(X_i - X_j).  Denominators are never expanded: all divisions performed by
this package are by such linear factors, and :func:`exact_div_linear`
removes them one at a time by synthetic division.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement


class ArityMismatch(ValueError):
    """Raised when combining polynomials in different numbers of variables."""


class NotDivisible(ArithmeticError):
    """Raised when a claimed exact division by (X_i - X_j) leaves a remainder."""


class NotPolynomial(ArithmeticError):
    """Raised when a rational function fails to normalize to a polynomial."""


def _grevlex_key(expo):
    # graded reverse lexicographic with X1 > X2 > ... > XN; bigger key = bigger term
    return (sum(expo), tuple(-e for e in reversed(expo)))


class MultiPoly:
    """Sparse polynomial in Z[X_1, ..., X_nvars].

    ``terms`` maps exponent tuples (length ``nvars``) to nonzero ints.
    Instances are treated as immutable; all operations return new objects.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for expo, coeff in terms.items():
                if coeff:
                    expo = tuple(expo)
                    if len(expo) != nvars:
                        raise ArityMismatch(
                            f"exponent vector {expo} has length {len(expo)}, expected {nvars}")
                    clean[expo] = clean.get(expo, 0) + coeff
                    if clean[expo] == 0:
                        del clean[expo]
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def const(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c}) if c else cls(nvars)

    @classmethod
    def one(cls, nvars):
        return cls.const(nvars, 1)

    @classmethod
    def variable(cls, nvars, i):
        """X_i with 1-based index i."""
        if not 1 <= i <= nvars:
            raise IndexError(f"variable index {i} out of range 1..{nvars}")
        e = [0] * nvars
        e[i - 1] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def linear_diff(cls, nvars, i, j):
        """X_i - X_j, 1-based."""
        return cls.variable(nvars, i) - cls.variable(nvars, j)

    # -- ring operations ---------------------------------------------------

    def _check(self, other):
        if not isinstance(other, MultiPoly):
            raise TypeError(f"expected MultiPoly, got {type(other).__name__}")
        if self.nvars != other.nvars:
            raise ArityMismatch(f"arity mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other):
        if isinstance(other, int):
            other = MultiPoly.const(self.nvars, other)
        self._check(other)
        terms = dict(self.terms)
        for expo, c in other.terms.items():
            s = terms.get(expo, 0) + c
            if s:
                terms[expo] = s
            else:
                terms.pop(expo, None)
        out = MultiPoly.__new__(MultiPoly)
        out.nvars, out.terms = self.nvars, terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = MultiPoly.__new__(MultiPoly)
        out.nvars = self.nvars
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, int):
            other = MultiPoly.const(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return MultiPoly.zero(self.nvars)
            out = MultiPoly.__new__(MultiPoly)
            out.nvars = self.nvars
            out.terms = {e: c * other for e, c in self.terms.items()}
            return out
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        terms = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                expo = tuple(x + y for x, y in zip(e1, e2))
                s = terms.get(expo, 0) + c1 * c2
                if s:
                    terms[expo] = s
                else:
                    del terms[expo]
        out = MultiPoly.__new__(MultiPoly)
        out.nvars, out.terms = self.nvars, terms
        return out

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        result = MultiPoly.one(self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = MultiPoly.const(self.nvars, other)
        return (isinstance(other, MultiPoly) and self.nvars == other.nvars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    # -- queries -----------------------------------------------------------

    def total_degree(self):
        """Max exponent sum, or -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def degree_weighted(self):
        """Degree with every variable of degree 2: twice the exponent sum.

        Requires homogeneity; returns 0 for the zero polynomial.
        """
        if not self.terms:
            return 0
        degs = {sum(e) for e in self.terms}
        if len(degs) != 1:
            raise ValueError("polynomial is not homogeneous")
        return 2 * degs.pop()

    def coefficient(self, expo):
        return self.terms.get(tuple(expo), 0)

    def swap_vars(self, i, j):
        """Exchange X_i and X_j (1-based)."""
        if i == j:
            return self
        a, b = i - 1, j - 1
        terms = {}
        for e, c in self.terms.items():
            le = list(e)
            le[a], le[b] = le[b], le[a]
            terms[tuple(le)] = c
        out = MultiPoly.__new__(MultiPoly)
        out.nvars, out.terms = self.nvars, terms
        return out

    def permute_vars(self, perm):
        """Apply a permutation of {1..nvars}: new X_{perm[i]} gets old X_i exponents."""
        terms = {}
        for e, c in self.terms.items():
            ne = [0] * self.nvars
            for idx, ex in enumerate(e):
                ne[perm[idx + 1] - 1] = ex
            terms[tuple(ne)] = c
        out = MultiPoly.__new__(MultiPoly)
        out.nvars, out.terms = self.nvars, terms
        return out

    def extended(self, nvars):
        """Reinterpret in a larger variable ring (new variables unused)."""
        if nvars < self.nvars:
            raise ArityMismatch("cannot shrink variable ring")
        if nvars == self.nvars:
            return self
        pad = (0,) * (nvars - self.nvars)
        return MultiPoly(nvars, {e + pad: c for e, c in self.terms.items()})

    def __repr__(self):
        return f"MultiPoly({self.nvars}, {self.to_text()!r})"

    def to_text(self):
        """Canonical text form: terms in descending grevlex order."""
        if not self.terms:
            return "0"
        parts = []
        for expo in sorted(self.terms, key=_grevlex_key, reverse=True):
            c = self.terms[expo]
            body = "*".join(
                f"X{k + 1}" + (f"^{e}" if e > 1 else "")
                for k, e in enumerate(expo) if e)
            sign = "+" if c >= 0 else "-"
            mag = abs(c)
            parts.append(f"{sign}{mag}" + (f"*{body}" if body else ""))
        return " ".join(parts)


def poly_mul(p, q):
    """Exact product; errors on arity mismatch."""
    return p * q


def exact_div_linear(p, i, j):
    """Exact quotient of p by (X_i - X_j), by synthetic division in X_i.

    Raises :class:`NotDivisible` when the remainder (p with X_i := X_j) is
    nonzero.  Indices are 1-based and must differ.
    """
    if i == j:
        raise ValueError("need two distinct variables")
    n = p.nvars
    a, b = i - 1, j - 1
    # bucket terms by exponent of X_i
    by_deg = {}
    for e, c in p.terms.items():
        d = e[a]
        key = list(e)
        key[a] = 0
        level = by_deg.setdefault(d, {})
        level[tuple(key)] = level.get(tuple(key), 0) + c
    if not by_deg:
        return MultiPoly.zero(n)
    maxd = max(by_deg)
    # synthetic division by (X_i - X_j): carry = carry*X_j + c_d, from the top down
    quot_terms = {}
    carry = {}  # exponent-tuple (X_i-free) -> coeff, representing the current quotient coeff
    for d in range(maxd, 0, -1):
        level = by_deg.get(d, {})
        new_carry = dict(carry and _shift_mul_var(carry, b) or {})
        for e, c in level.items():
            s = new_carry.get(e, 0) + c
            if s:
                new_carry[e] = s
            else:
                new_carry.pop(e, None)
        carry = new_carry
        for e, c in carry.items():
            le = list(e)
            le[a] += d - 1
            key = tuple(le)
            s = quot_terms.get(key, 0) + c
            if s:
                quot_terms[key] = s
            else:
                del quot_terms[key]
    # remainder = constant level + carry*X_j
    rem = dict(_shift_mul_var(carry, b)) if carry else {}
    for e, c in by_deg.get(0, {}).items():
        s = rem.get(e, 0) + c
        if s:
            rem[e] = s
        else:
            del rem[e]
    if rem:
        raise NotDivisible(f"remainder is nonzero after substituting X{i} := X{j}")
    return MultiPoly(n, quot_terms)


def _shift_mul_var(terms, var_index0):
    out = {}
    for e, c in terms.items():
        le = list(e)
        le[var_index0] += 1
        key = tuple(le)
        s = out.get(key, 0) + c
        if s:
            out[key] = s
        else:
            del out[key]
    return out


def specialize(p, point):
    """Exact evaluation at a point of ints or Fractions."""
    if len(point) != p.nvars:
        raise ArityMismatch(f"point has length {len(point)}, expected {p.nvars}")
    total = 0
    for e, c in p.terms.items():
        v = c
        for x, k in zip(point, e):
            if k:
                v *= x ** k
        total += v
    if isinstance(total, Fraction) and total.denominator == 1:
        return int(total)
    return total


def is_symmetric(p):
    """True iff p is invariant under every adjacent transposition."""
    for i in range(1, p.nvars):
        if p.swap_vars(i, i + 1) != p:
            return False
    return True


def elementary_symmetric(nvars, k, indices=None):
    """e_k in the given 1-based variable indices (default: all)."""
    idx = list(range(1, nvars + 1)) if indices is None else list(indices)
    out = MultiPoly.zero(nvars)
    from itertools import combinations
    for comb in combinations(idx, k):
        e = [0] * nvars
        for i in comb:
            e[i - 1] = 1
        out = out + MultiPoly(nvars, {tuple(e): 1})
    return out


def complete_homogeneous(nvars, k, indices=None):
    """h_k in the given 1-based variable indices (default: all)."""
    idx = list(range(1, nvars + 1)) if indices is None else list(indices)
    if k < 0:
        return MultiPoly.zero(nvars)
    out = {}
    for comb in combinations_with_replacement(idx, k):
        e = [0] * nvars
        for i in comb:
            e[i - 1] += 1
        out[tuple(e)] = out.get(tuple(e), 0) + 1
    return MultiPoly(nvars, out) if k else MultiPoly.one(nvars)


class RationalFn:
    """num / prod (X_i - X_j)^{e_ij} with i<j and all e_ij >= 0.

    The denominator is a map from ordered pairs (i, j), i < j, to
    nonnegative exponents.  Construction folds negative requested exponents
    into the numerator, so the invariant always holds.  Normalization to a
    polynomial is explicit via :meth:`normalize`.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        self.num = num
        clean = {}
        if den:
            for (i, j), e in den.items():
                if i == j:
                    raise ValueError("denominator factor needs distinct indices")
                sign = 1
                if i > j:
                    i, j = j, i
                    if e % 2:
                        sign = -1
                if e < 0:
                    factor = MultiPoly.linear_diff(num.nvars, i, j) ** (-e)
                    self.num = self.num * factor * sign
                else:
                    if sign < 0:
                        self.num = self.num * sign
                    clean[(i, j)] = clean.get((i, j), 0) + e
        self.den = {k: v for k, v in clean.items() if v}
        if self.num.is_zero():
            self.den = {}

    @property
    def nvars(self):
        return self.num.nvars

    @classmethod
    def from_poly(cls, p):
        return cls(p, {})

    def __eq__(self, other):
        if not isinstance(other, RationalFn):
            return NotImplemented
        # compare after clearing denominators (no normalization assumed)
        lhs = self.num
        rhs = other.num
        pairs = set(self.den) | set(other.den)
        for pair in sorted(pairs):
            e1 = self.den.get(pair, 0)
            e2 = other.den.get(pair, 0)
            m = max(e1, e2)
            f = MultiPoly.linear_diff(self.nvars, *pair)
            lhs = lhs * f ** (m - e1)
            rhs = rhs * f ** (m - e2)
        return lhs == rhs

    def __repr__(self):
        den = " * ".join(f"(X{i}-X{j})^{e}" for (i, j), e in sorted(self.den.items()))
        return f"RationalFn({self.num.to_text()!r}, {den or '1'})"

    def __neg__(self):
        return RationalFn(-self.num, dict(self.den))

    def __add__(self, other):
        if not isinstance(other, RationalFn):
            return NotImplemented
        if self.nvars != other.nvars:
            raise ArityMismatch(f"arity mismatch: {self.nvars} vs {other.nvars}")
        pairs = set(self.den) | set(other.den)
        lcd = {pair: max(self.den.get(pair, 0), other.den.get(pair, 0)) for pair in pairs}
        num = MultiPoly.zero(self.nvars)
        for part in (self, other):
            t = part.num
            for pair, e in lcd.items():
                lift = e - part.den.get(pair, 0)
                if lift:
                    t = t * MultiPoly.linear_diff(self.nvars, *pair) ** lift
            num = num + t
        return RationalFn(num, lcd)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, MultiPoly)):
            return RationalFn(self.num * other, dict(self.den))
        if not isinstance(other, RationalFn):
            return NotImplemented
        den = dict(self.den)
        for pair, e in other.den.items():
            den[pair] = den.get(pair, 0) + e
        return RationalFn(self.num * other.num, den)

    __rmul__ = __mul__

    def is_zero(self):
        return self.num.is_zero()

    def normalize(self):
        """Divide out every denominator factor exactly; error if impossible."""
        num = self.num
        for (i, j), e in sorted(self.den.items()):
            for _ in range(e):
                try:
                    num = exact_div_linear(num, i, j)
                except NotDivisible as exc:
                    raise NotPolynomial(
                        f"(X{i}-X{j}) does not divide the numerator") from exc
        return num

    def specialize(self, point):
        """Exact evaluation at a point with pairwise distinct relevant coordinates."""
        top = specialize(self.num, point)
        bottom = 1
        for (i, j), e in self.den.items():
            d = point[i - 1] - point[j - 1]
            if d == 0:
                raise ZeroDivisionError(f"point has X{i} == X{j}")
            bottom *= d ** e
        out = Fraction(top, bottom)
        return int(out) if out.denominator == 1 else out


def rf_add(a, b):
    """Sum of two rational functions over the least common denominator."""
    return a + b


def rf_normalize(a):
    """Clear a RationalFn to a MultiPoly (exact; raises NotPolynomial)."""
    return a.normalize()
