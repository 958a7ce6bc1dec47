"""Combinatorial model of closed decorated foams and their colorings.

A foam is a gluing recipe: facets (labeled oriented surfaces with
boundary), binding arcs along which exactly three facet boundaries meet,
and singular points where four binding arcs meet in the tetrahedral local
model.  Facets carry a label in 0..N, a genus, an explicit list of
boundary circles (cyclic sequences of (arc, slot) references) and a
decoration, an integer combination of diagrams evaluated on the facet's
pigments.

Colorings assign to each facet a pigment subset of size equal to its
label so that the two thin sets at every binding partition the thick set.
All topological quantities entering the evaluation (Euler characteristics
of monochrome and bichrome surfaces, signed circle counts, Kempe moves)
are computed here.
"""

from __future__ import annotations

from itertools import combinations

from .schur import SchurCombo

# slot roles on a binding arc
SLOT_A, SLOT_B, SLOT_AB = 0, 1, 2


class FoamError(ValueError):
    pass


class OddEuler(ArithmeticError):
    """A surface that must be closed produced an odd Euler characteristic."""


class BadCircleStructure(FoamError):
    """Separating arcs fail to chain into circles at a singular point."""


class Facet:
    __slots__ = ("id", "label", "genus", "boundary", "decoration")

    def __init__(self, fid, label, genus=0, boundary=(), decoration=None):
        self.id = fid
        self.label = label
        self.genus = genus
        # boundary: list of circles; each circle a list of (arc_id, slot)
        self.boundary = [list(circ) for circ in boundary]
        self.decoration = decoration if decoration is not None else SchurCombo.one(label)

    @property
    def euler(self):
        return 2 - 2 * self.genus - len(self.boundary)

    def __repr__(self):
        return f"Facet({self.id!r}, label={self.label}, genus={self.genus}, circles={len(self.boundary)})"


class BindingArc:
    __slots__ = ("id", "kind", "sides", "endpoints")

    def __init__(self, aid, kind, sides, endpoints=None):
        self.id = aid
        self.kind = kind  # "circle" | "interval"
        self.sides = tuple(sides)  # facet ids in roles (a, b, a+b); tuple order = cyclic order
        self.endpoints = tuple(endpoints) if endpoints else None

    def __repr__(self):
        return f"BindingArc({self.id!r}, {self.kind}, sides={self.sides})"


class SingularPoint:
    __slots__ = ("id", "incident", "germs")

    def __init__(self, pid, incident):
        self.id = pid
        self.incident = tuple((aid, int(end)) for aid, end in incident)
        self.germs = None  # filled by validation: list of ((arc,slotpos), (arc,slotpos))

    def __repr__(self):
        return f"SingularPoint({self.id!r}, incident={self.incident})"


class Coloring(dict):
    """facet id -> frozenset of pigments."""

    def key(self):
        return tuple(sorted((f, tuple(sorted(s))) for f, s in self.items()))

    def __hash__(self):
        return hash(self.key())


class Foam:
    def __init__(self, n, facets, arcs, points=()):
        self.n = n
        self.facets = {f.id: f for f in facets}
        self.arcs = {a.id: a for a in arcs}
        self.points = {p.id: p for p in points}
        if len(self.facets) != len(facets) or len(self.arcs) != len(arcs) \
                or len(self.points) != len(points):
            raise FoamError("duplicate ids")

    def facet(self, fid):
        return self.facets[fid]

    def arc(self, aid):
        return self.arcs[aid]

    def with_decorations(self, decs):
        """Copy of the foam with some facet decorations replaced (id -> SchurCombo)."""
        facets = []
        for f in self.facets.values():
            d = decs.get(f.id, f.decoration)
            facets.append(Facet(f.id, f.label, f.genus, f.boundary, d))
        return Foam(self.n, facets, list(self.arcs.values()), list(self.points.values()))

    def multiplied_decoration(self, fid, extra):
        """Copy with facet `fid`'s decoration multiplied by `extra`."""
        f = self.facets[fid]
        return self.with_decorations({fid: f.decoration * extra})


# -- validation --------------------------------------------------------------

# tetrahedral model: arc types t1=(a,b|ab), t2=(ab,c|abc), t3=(b,c|bc),
# t4=(a,bc|abc); germ gluing pairs (arc index, slot role):
_GERM_PAIRS = (
    ((0, SLOT_A), (3, SLOT_A)),    # a
    ((0, SLOT_B), (2, SLOT_A)),    # b
    ((0, SLOT_AB), (1, SLOT_A)),   # ab
    ((1, SLOT_B), (2, SLOT_B)),    # c
    ((2, SLOT_AB), (3, SLOT_B)),   # bc
    ((1, SLOT_AB), (3, SLOT_AB)),  # abc
)


def _arc_labels(foam, arc):
    return tuple(foam.facet(f).label for f in arc.sides)


def _match_point(foam, point):
    """Try to organize the four incident arcs into the tetrahedral model.

    Returns the germ pairing (list of six ((arc_id, slot), (arc_id, slot)))
    or None if no assignment is consistent.
    """
    from itertools import permutations
    arcs = [foam.arc(aid) for aid, _ in point.incident]
    if len(arcs) != 4:
        return None
    for perm in permutations(range(4)):
        t = [arcs[perm[i]] for i in range(4)]
        a, b = foam.facet(t[0].sides[SLOT_A]).label, foam.facet(t[0].sides[SLOT_B]).label
        # t2 = (ab, c | abc), t3 = (b, c | bc), t4 = (a, bc | abc)
        lab = [_arc_labels(foam, x) for x in t]
        c = lab[1][1]
        if lab[0] != (a, b, a + b):
            continue
        if lab[1] != (a + b, c, a + b + c):
            continue
        if lab[2] != (b, c, b + c):
            continue
        if lab[3] != (a, b + c, a + b + c):
            continue
        ok = True
        germs = []
        for (i1, s1), (i2, s2) in _GERM_PAIRS:
            if t[i1].sides[s1] != t[i2].sides[s2]:
                ok = False
                break
            germs.append(((t[i1].id, s1), (t[i2].id, s2)))
        if ok:
            return germs
    return None


def validate_foam(foam):
    """Check all structural invariants; returns a list of problem strings."""
    problems = []
    # labels in range, decoration arity
    for f in foam.facets.values():
        if not 0 <= f.label <= foam.n:
            problems.append(f"facet {f.id}: label {f.label} outside 0..{foam.n}")
        if f.genus < 0:
            problems.append(f"facet {f.id}: negative genus")
        if f.decoration.arity != f.label:
            problems.append(f"facet {f.id}: decoration arity {f.decoration.arity} != label")
    # every (arc, side-slot) consumed exactly once by facet boundaries
    slot_use = {}
    for f in foam.facets.values():
        for ci, circ in enumerate(f.boundary):
            for aid, slot in circ:
                if aid not in foam.arcs:
                    problems.append(f"facet {f.id}: unknown arc {aid}")
                    continue
                slot_use.setdefault((aid, slot), []).append(f.id)
    for a in foam.arcs.values():
        la = foam.facet(a.sides[SLOT_A]).label if a.sides[SLOT_A] in foam.facets else None
        lb = foam.facet(a.sides[SLOT_B]).label if a.sides[SLOT_B] in foam.facets else None
        lab = foam.facet(a.sides[SLOT_AB]).label if a.sides[SLOT_AB] in foam.facets else None
        if None in (la, lb, lab):
            problems.append(f"arc {a.id}: unknown side facet")
            continue
        if la + lb != lab:
            problems.append(f"arc {a.id}: label flow {la}+{lb} != {lab}")
        if lab > foam.n:
            problems.append(f"arc {a.id}: thick label {lab} exceeds N")
        for slot in (SLOT_A, SLOT_B, SLOT_AB):
            users = slot_use.get((a.id, slot), [])
            if len(users) != 1:
                problems.append(f"arc {a.id} slot {slot}: consumed {len(users)} times")
            elif users[0] != a.sides[slot]:
                problems.append(f"arc {a.id} slot {slot}: boundary of {users[0]}, "
                                f"expected {a.sides[slot]}")
        if a.kind == "circle" and a.endpoints:
            problems.append(f"arc {a.id}: circle with endpoints")
        if a.kind == "circle":
            # a closed binding must fill an entire boundary circle on each side
            for f in foam.facets.values():
                for circ in f.boundary:
                    if any(x == a.id for x, _ in circ) and len(circ) != 1:
                        problems.append(
                            f"arc {a.id}: circle binding shares a boundary "
                            f"circle of facet {f.id} with other arcs")
        if a.kind == "interval":
            if not a.endpoints or len(a.endpoints) != 2:
                problems.append(f"arc {a.id}: interval needs two endpoints")
            elif a.endpoints[0] == a.endpoints[1]:
                problems.append(f"arc {a.id}: both ends at one singular point")
    # stray slots not belonging to any arc
    for (aid, slot), users in slot_use.items():
        if aid in foam.arcs and slot not in (SLOT_A, SLOT_B, SLOT_AB):
            problems.append(f"arc {aid}: bad slot {slot}")
    # singular points
    end_use = {}
    for p in foam.points.values():
        if len(p.incident) != 4:
            problems.append(f"point {p.id}: needs exactly 4 incident arc-ends")
            continue
        for aid, end in p.incident:
            if aid not in foam.arcs:
                problems.append(f"point {p.id}: unknown arc {aid}")
                continue
            end_use.setdefault((aid, end), []).append(p.id)
        germs = _match_point(foam, p)
        if germs is None:
            problems.append(f"point {p.id}: incident arcs do not fit the tetrahedral model")
        else:
            p.germs = germs
    for a in foam.arcs.values():
        if a.kind != "interval" or not a.endpoints:
            continue
        for end, pid in enumerate(a.endpoints):
            if pid not in foam.points:
                problems.append(f"arc {a.id}: endpoint {pid} unknown")
                continue
            if (a.id, end) not in end_use or pid not in end_use[(a.id, end)]:
                problems.append(f"arc {a.id}: end {end} not registered at point {pid}")
    return problems


def assert_valid(foam):
    problems = validate_foam(foam)
    if problems:
        raise FoamError("; ".join(problems))
    return foam


def strip_zero_facets(foam):
    """Remove all 0-labeled facets (and the degenerate arcs they bound).

    A binding with a 0-labeled thin facet glues the other thin facet to the
    thick facet with the same label; removing the 0-facet merges those two
    facets along the arc.  Only the configurations produced by the builders
    are supported: each removed arc has exactly one 0-labeled thin side.
    """
    zero = {f.id for f in foam.facets.values() if f.label == 0}
    if not zero:
        return foam
    dead_arcs = {}
    for a in foam.arcs.values():
        thin_zero = [s for s in (SLOT_A, SLOT_B) if a.sides[s] in zero]
        if not thin_zero:
            continue
        if len(thin_zero) == 2 or a.sides[SLOT_AB] in zero:
            raise FoamError("cannot strip arc with multiple 0-sides")
        keep = SLOT_A if thin_zero[0] == SLOT_B else SLOT_B
        dead_arcs[a.id] = (a.sides[keep], a.sides[SLOT_AB])
    if any(a.kind == "interval" for a in foam.arcs.values() if a.id in dead_arcs):
        raise FoamError("stripping arcs at singular points not supported")
    # merge facets across dead arcs with union find
    parent = {f.id: f.id for f in foam.facets.values()}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for aid, (f1, f2) in dead_arcs.items():
        parent[find(f1)] = find(f2)
    groups = {}
    for f in foam.facets.values():
        if f.id in zero:
            continue
        groups.setdefault(find(f.id), []).append(f)
    facets = []
    for root, members in sorted(groups.items()):
        label = members[0].label
        if any(m.label != label for m in members):
            raise FoamError("stripping would merge facets of different labels")
        # splice boundary circles: remove dead-arc slots, join circles
        circles = []
        for m in members:
            for circ in m.boundary:
                circles.append(list(circ))
        # repeatedly join circles sharing a dead arc
        changed = True
        while changed:
            changed = False
            for i in range(len(circles)):
                for k, (aid, slot) in enumerate(circles[i]):
                    if aid not in dead_arcs:
                        continue
                    # find the partner slot (same arc, other non-zero slot)
                    for jdx in range(len(circles)):
                        done = False
                        for k2, (aid2, slot2) in enumerate(circles[jdx]):
                            if aid2 == aid and (jdx != i or k2 != k):
                                a, bnd = circles[i], circles[jdx]
                                if jdx == i:
                                    # same circle: splits into two circles
                                    lo, hi = sorted((k, k2))
                                    first = a[lo + 1:hi]
                                    second = a[hi + 1:] + a[:lo]
                                    circles[i] = first
                                    circles.append(second)
                                else:
                                    merged = (a[:k] + bnd[k2 + 1:] + bnd[:k2]
                                              + a[k + 1:])
                                    circles[i] = merged
                                    del circles[jdx]
                                done = True
                                break
                        if done:
                            break
                    else:
                        continue
                    changed = True
                    break
                if changed:
                    break
        circles = [c for c in circles if c]
        # gluing along circles leaves chi additive; genus comes from the count
        chi = sum(m.euler for m in members)
        genus2 = 2 - chi - len(circles)
        if genus2 % 2:
            raise OddEuler("strip produced odd genus bookkeeping")
        dec = None
        for m in members:
            dec = m.decoration if dec is None else dec * m.decoration
        facets.append(Facet(root, label, genus2 // 2, circles, dec))
    arcs = [a for a in foam.arcs.values() if a.id not in dead_arcs]
    return Foam(foam.n, facets, arcs, list(foam.points.values()))


# -- degree ------------------------------------------------------------------

def foam_degree(foam):
    """The integer degree: facet, binding and point contributions plus decorations."""
    n = foam.n
    total = 0
    for f in foam.facets.values():
        total -= f.label * (n - f.label) * f.euler
        total += f.decoration.degree()
    for a in foam.arcs.values():
        if a.kind != "interval":
            continue
        la = foam.facet(a.sides[SLOT_A]).label
        lb = foam.facet(a.sides[SLOT_B]).label
        total += la * lb + (la + lb) * (n - la - lb)
    for p in foam.points.values():
        germs = p.germs or _match_point(foam, p)
        if germs is None:
            raise FoamError(f"point {p.id} invalid")
        a, b, c = _abc_from_germs(foam, germs)
        d = n - a - b - c
        total -= a * b + b * c + c * d + d * a + a * c + b * d
    return total


def _abc_from_germs(foam, germs):
    # germs ordered as (a, b, ab, c, bc, abc) per _GERM_PAIRS
    (aid0, s0), _ = germs[0]
    a = foam.facet(foam.arc(aid0).sides[s0]).label
    (aid1, s1), _ = germs[1]
    b = foam.facet(foam.arc(aid1).sides[s1]).label
    (aid3, s3), _ = germs[3]
    c = foam.facet(foam.arc(aid3).sides[s3]).label
    return a, b, c


# -- colorings ---------------------------------------------------------------

def enumerate_colorings(foam):
    """All colorings, deterministically ordered, by backtracking with propagation."""
    n = foam.n
    pigments = frozenset(range(1, n + 1))
    order = sorted(foam.facets)
    arcs = list(foam.arcs.values())
    by_facet = {}
    for a in arcs:
        for fid in a.sides:
            by_facet.setdefault(fid, []).append(a)

    def consistent(assign, fid):
        for a in by_facet.get(fid, ()):
            fa, fb, fab = a.sides
            sa, sb, sab = assign.get(fa), assign.get(fb), assign.get(fab)
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

    out = []

    def rec(k, assign):
        if k == len(order):
            out.append(Coloring(assign))
            return
        fid = order[k]
        f = foam.facets[fid]
        # forced values first
        forced = None
        for a in by_facet.get(fid, ()):
            fa, fb, fab = a.sides
            if fid == fab and assign.get(fa) is not None and assign.get(fb) is not None:
                forced = assign[fa] | assign[fb]
            elif fid == fa and assign.get(fab) is not None and assign.get(fb) is not None:
                forced = assign[fab] - assign[fb]
            elif fid == fb and assign.get(fab) is not None and assign.get(fa) is not None:
                forced = assign[fab] - assign[fa]
            if forced is not None:
                break
        if forced is not None:
            if len(forced) != f.label:
                return
            assign[fid] = frozenset(forced)
            if consistent(assign, fid):
                rec(k + 1, assign)
            del assign[fid]
            return
        for comb in combinations(sorted(pigments), f.label):
            assign[fid] = frozenset(comb)
            if consistent(assign, fid):
                rec(k + 1, assign)
            del assign[fid]

    rec(0, {})
    return out


def is_valid_coloring(foam, coloring):
    for f in foam.facets.values():
        s = coloring.get(f.id)
        if s is None or len(s) != f.label:
            return False
        if any(p < 1 or p > foam.n for p in s):
            return False
    for a in foam.arcs.values():
        sa, sb, sab = (coloring[a.sides[SLOT_A]], coloring[a.sides[SLOT_B]],
                       coloring[a.sides[SLOT_AB]])
        if sa & sb or (sa | sb) != sab:
            return False
    return True


# -- Euler characteristics of pigment surfaces --------------------------------

def _subfoam_euler(foam, facet_pred):
    """Euler characteristic of the union of facets selected by facet_pred,
    glued along the arcs where exactly two of the three sides are selected.

    Computed as sum of facet Euler characteristics minus the correction
    chi(preimage of the gluing locus) - chi(locus), with singular-point
    corners grouped into chains by the local germ structure.
    """
    selected = {f.id for f in foam.facets.values() if facet_pred(f)}
    if not selected:
        return 0
    chi = sum(foam.facets[f].euler for f in selected)
    glue = {}
    for a in foam.arcs.values():
        inside = [s for s in (SLOT_A, SLOT_B, SLOT_AB) if a.sides[s] in selected]
        if len(inside) == 3:
            raise FoamError(f"arc {a.id}: three selected sides cannot happen")
        if len(inside) == 2:
            glue[a.id] = tuple(inside)
    # each glued interval arc: the two closed-interval copies (chi 2 with
    # endpoints counted separately below) collapse onto one edge: net +1;
    # circle bindings contribute 0 either way
    for aid in glue:
        if foam.arcs[aid].kind == "interval":
            chi += 1
    # singular points: corners of selected germs chained by glued arcs merge
    for p in foam.points.values():
        germs = p.germs or _match_point(foam, p)
        if germs is None:
            raise FoamError(f"point {p.id} invalid")
        corners = []  # corner = germ index; germ selected if its facet selected
        adj = {}
        for gi, (m1, m2) in enumerate(germs):
            aid, slot = m1
            fid = foam.arcs[aid].sides[slot]
            if fid in selected:
                corners.append(gi)
        cs = set(corners)
        if not cs:
            continue
        # union-find corners glued across interior arcs at this point:
        # two germs sharing a glued arc-end merge
        parent = {gi: gi for gi in cs}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        incident_arcids = {aid for aid, _ in p.incident}
        for aid in incident_arcids:
            if aid not in glue:
                continue
            touching = []
            for gi in cs:
                mentions = germs[gi]
                if any(m[0] == aid for m in mentions):
                    touching.append(gi)
            for gi in touching[1:]:
                parent[find(gi)] = find(touching[0])
        chains = len({find(gi) for gi in cs})
        involved = [gi for gi in cs
                    if any(m[0] in glue for m in germs[gi])]
        # preimage vertices: corners incident to glued arcs; locus vertices: chains
        # that contain at least one glued arc
        glued_chains = len({find(gi) for gi in involved})
        chi -= len(involved) - glued_chains
    return chi


def monochrome_euler(foam, coloring, i):
    chi = _subfoam_euler(foam, lambda f: i in coloring[f.id])
    if chi % 2:
        raise OddEuler(f"monochrome surface for pigment {i} has odd chi {chi}")
    return chi


def intersection_euler(foam, coloring, i, j):
    return _subfoam_euler(foam, lambda f: i in coloring[f.id] and j in coloring[f.id])


def bichrome_euler(foam, coloring, i, j):
    chi = (monochrome_euler(foam, coloring, i) + monochrome_euler(foam, coloring, j)
           - 2 * intersection_euler(foam, coloring, i, j))
    if chi % 2:
        raise OddEuler(f"bichrome surface ({i},{j}) has odd chi {chi}")
    return chi


def bichrome_euler_direct(foam, coloring, i, j):
    """Same as bichrome_euler but computed directly on the symmetric difference."""
    chi = _subfoam_euler(
        foam, lambda f: (i in coloring[f.id]) != (j in coloring[f.id]))
    if chi % 2:
        raise OddEuler(f"bichrome surface ({i},{j}) has odd chi {chi}")
    return chi


# -- theta circles -------------------------------------------------------------

def _separating_arcs(foam, coloring, i, j):
    """Arcs whose thin sides split {i, j}: i on one thin facet, j on the other."""
    out = {}
    for a in foam.arcs.values():
        sa = coloring[a.sides[SLOT_A]]
        sb = coloring[a.sides[SLOT_B]]
        if i in sa and j in sb:
            out[a.id] = +1  # i sits on the first thin facet
        elif j in sa and i in sb:
            out[a.id] = -1
    return out


def theta_counts(foam, coloring, i, j):
    """(theta_plus, theta_minus) for pigments i < j.

    The separating arcs chain through singular points into circles; a
    circle is positive when the cyclic order around it reads
    (i-facet, j-facet, both-facet), which with the stored (a, b, ab) tuple
    order means the i-pigment lies on the a-side.
    """
    if not i < j:
        raise ValueError("need i < j")
    seps = _separating_arcs(foam, coloring, i, j)
    if not seps:
        return (0, 0)
    # build chains: at each singular point, the incident separating arc-ends
    # must number 0 or 2 and connect to each other
    links = {}  # (arc_id, end) -> (arc_id, end)
    for p in foam.points.values():
        ends = [(aid, end) for aid, end in p.incident if aid in seps]
        if len(ends) not in (0, 2):
            raise BadCircleStructure(
                f"point {p.id}: {len(ends)} separating arcs for ({i},{j})")
        if len(ends) == 2:
            links[ends[0]] = ends[1]
            links[ends[1]] = ends[0]
    plus = minus = 0
    seen = set()
    for aid in sorted(seps):
        if aid in seen:
            continue
        a = foam.arcs[aid]
        if a.kind == "circle":
            seen.add(aid)
            signs = {seps[aid]}
        else:
            # walk the chain
            chain = [aid]
            seen.add(aid)
            cur = (aid, 1)
            while True:
                nxt = links.get(cur)
                if nxt is None:
                    raise BadCircleStructure(
                        f"arc {aid}: separating chain for ({i},{j}) is not closed")
                nid = nxt[0]
                if nid == chain[0] and len(chain) >= 1 and nxt[1] == 0:
                    break
                chain.append(nid)
                seen.add(nid)
                cur = (nid, 1 - nxt[1])
            signs = {seps[x] for x in chain}
        if len(signs) != 1:
            raise BadCircleStructure(
                f"circle through arc {aid} mixes positive and negative bindings")
        if signs.pop() > 0:
            plus += 1
        else:
            minus += 1
    return (plus, minus)


# -- Kempe moves ---------------------------------------------------------------

def kempe_components(foam, coloring, i, j):
    """Connected components of the bichrome surface F_ij.

    Returns a list of dicts with keys 'facets' (frozenset of ids) and
    'euler' (the component's Euler characteristic).
    """
    if i == j:
        raise ValueError("need distinct pigments")
    member = {f.id for f in foam.facets.values()
              if (i in coloring[f.id]) != (j in coloring[f.id])}
    if not member:
        return []
    parent = {fid: fid for fid in member}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in foam.arcs.values():
        inside = [a.sides[s] for s in (SLOT_A, SLOT_B, SLOT_AB) if a.sides[s] in member]
        for other in inside[1:]:
            parent[find(other)] = find(inside[0])
    groups = {}
    for fid in member:
        groups.setdefault(find(fid), set()).add(fid)
    out = []
    for root in sorted(groups):
        fs = frozenset(groups[root])
        chi = _subfoam_euler(foam, lambda f: f.id in fs)
        out.append({"facets": fs, "euler": chi})
    return out


def apply_kempe(foam, coloring, i, j, component):
    """Swap pigments i and j on all facets of the given component."""
    if isinstance(component, dict):
        facets = component["facets"]
    else:
        facets = frozenset(component)
    if not facets:
        raise ValueError("empty component")
    for fid in facets:
        s = coloring[fid]
        if not ((i in s) != (j in s)):
            raise ValueError(f"facet {fid} is not in the ({i},{j}) bichrome surface")
    new = Coloring(coloring)
    for fid in facets:
        s = set(coloring[fid])
        if i in s:
            s.discard(i)
            s.add(j)
        else:
            s.discard(j)
            s.add(i)
        new[fid] = frozenset(s)
    if not is_valid_coloring(foam, new):
        raise FoamError("Kempe move produced an invalid coloring")
    return new
