"""Builders for the closed foams used throughout the test suites.

All builders produce validated closed foams.  The cyclic order stored on
a binding is the tuple order of its sides (thin-a, thin-b, thick); the
builders fix these orders once and for all, and the regression suites pin
the resulting signs.
"""

from __future__ import annotations

from .foamcore import (BindingArc, Facet, Foam, SingularPoint, assert_valid)
from .polyring import MultiPoly
from .schur import (EMPTY, SchurCombo, VarSet, YoungDiagram, conjugate,
                    dual_in, rectangle, schur_eval)


def _dec(label, d=None, coeff=1):
    if d is None:
        return SchurCombo.one(label)
    if isinstance(d, SchurCombo):
        return d
    if isinstance(d, YoungDiagram):
        return SchurCombo.single(label, d, coeff)
    return SchurCombo.single(label, YoungDiagram(d), coeff)


def build_sphere(a, n, dec=None):
    """A single closed genus-0 facet labeled a, optionally decorated."""
    f = Facet("s", a, 0, [], _dec(a, dec))
    return assert_valid(Foam(n, [f], []))


def build_torus(a, n, dec=None, genus=1):
    """A closed genus-g facet labeled a (genus 1 by default)."""
    f = Facet("t", a, genus, [], _dec(a, dec))
    return assert_valid(Foam(n, [f], []))


def build_theta(a, b, n, dec_a=None, dec_b=None, dec_ab=None):
    """Three disks labeled a, b, a+b glued along one circle binding.

    The stored cyclic order is (a-facet, b-facet, (a+b)-facet).
    """
    if a + b > n:
        raise ValueError("label overflow: a+b must be at most N")
    fa = Facet("fa", a, 0, [[("c", 0)]], _dec(a, dec_a))
    fb = Facet("fb", b, 0, [[("c", 1)]], _dec(b, dec_b))
    fab = Facet("fab", a + b, 0, [[("c", 2)]], _dec(a + b, dec_ab))
    arc = BindingArc("c", "circle", ("fa", "fb", "fab"))
    return assert_valid(Foam(n, [fa, fb, fab], [arc]))


def build_gen_theta_closed(a_vec, n, strand_decs=None, partial_decs=None):
    """The closed pairing foam over the generalized theta web.

    For parts (a_1, ..., a_k) summing to N: disk facets S_i per strand,
    annulus facets P_i for the partial sums a_1+...+a_i (2 <= i < k), a
    disk P_k labeled N, and binding circles C_i with sides
    (P_{i-1}, S_i, P_i), where P_1 = S_1.

    strand_decs: optional list of k SchurCombo/diagram decorations for the
    strand facets.  partial_decs: optional decorations for P_2..P_k.
    """
    k = len(a_vec)
    if sum(a_vec) != n:
        raise ValueError("parts must sum to N")
    if k == 1:
        return build_sphere(a_vec[0], n,
                            strand_decs[0] if strand_decs else None)
    strand_decs = strand_decs or [None] * k
    partial_decs = partial_decs or [None] * (k - 1)
    facets = []
    arcs = []
    partial = []
    s = 0
    for i, a in enumerate(a_vec):
        s += a
        partial.append(s)
    # strands
    facets.append(Facet("S1", a_vec[0], 0, [[("C2", 0)]], _dec(a_vec[0], strand_decs[0])))
    for i in range(2, k + 1):
        facets.append(Facet(f"S{i}", a_vec[i - 1], 0, [[(f"C{i}", 1)]],
                            _dec(a_vec[i - 1], strand_decs[i - 1])))
    # partial sums
    for i in range(2, k):
        facets.append(Facet(f"P{i}", partial[i - 1], 0,
                            [[(f"C{i}", 2)], [(f"C{i+1}", 0)]],
                            _dec(partial[i - 1], partial_decs[i - 2])))
    facets.append(Facet(f"P{k}", n, 0, [[(f"C{k}", 2)]],
                        _dec(n, partial_decs[k - 2])))
    for i in range(2, k + 1):
        prev = "S1" if i == 2 else f"P{i-1}"
        arcs.append(BindingArc(f"C{i}", "circle", (prev, f"S{i}", f"P{i}")))
    return assert_valid(Foam(n, facets, arcs))


def sphere_formula(a, alpha, n):
    """Closed form for the decorated sphere, independent of the state sum.

    Expanding the sum of alternants by a Laplace argument: the value is
    zero unless the ladder {alpha^t_j + a - j} avoids {0, ..., n-a-1}
    (equivalently alpha is the full-width rectangle with n-a rows stacked
    over a residue beta), in which case it is
    (-1)^{a(a+1)/2} (sign of the exponent shuffle) s_mu(X_1..X_n).
    """
    if not isinstance(alpha, YoungDiagram):
        alpha = YoungDiagram(alpha)
    if alpha.ncols > a:
        raise ValueError("decoration has more columns than the label")
    at = conjugate(alpha)
    ladder = [at.row(j) + a - 1 - j for j in range(a)]
    lower = list(range(n - a - 1, -1, -1))
    if set(ladder) & set(lower):
        return MultiPoly.zero(n)
    merged = sorted(ladder + lower, reverse=True)
    inv = sum(1 for x in ladder for y in lower if x < y)
    mu = YoungDiagram(tuple(m - (n - 1 - i) for i, m in enumerate(merged)))
    from .schur import _schur_row
    value = _schur_row(mu, VarSet(range(1, n + 1)), n)
    if (a * (a + 1) // 2 + inv) % 2:
        value = -value
    return value


def theta_formula(a, b, n, alpha, beta, gamma):
    """Closed form for the theta foam: nonzero only on the dual pair.

    alpha in T(a, b) decorates the a-facet, beta in T(b, a) the b-facet,
    gamma in T(a+b, n-a-b) the thick facet; the value is
    (-1)^{(a+b)(a+b+1)/2 + |alpha|} when dual(beta) = alpha and gamma is
    the full rectangle rho(a+b, n-a-b), and 0 otherwise.
    """
    for d, cols, rows in ((alpha, a, b), (beta, b, a), (gamma, a + b, n - a - b)):
        if not d.fits(cols, rows):
            raise ValueError(f"{d!r} outside T({cols},{rows})")
    if gamma != rectangle(a + b, n - a - b):
        return 0
    if dual_in(beta, b, a) != alpha:
        return 0
    return (-1) ** (((a + b) * (a + b + 1)) // 2 + alpha.size)


def build_pocket_chain(a, n, a_dec=None, ends=("cap", "cap"), bubbles=(),
                       genus=0):
    """A closed foam built from one a-labeled facet with optional pockets
    and bubbles.

    ``ends``: two entries, each "cap" (the facet closes smoothly) or a
    pocket spec ("pocket", dec_comp, dec_full) attaching complementary
    disks labeled n-a and n along a binding circle.  ``bubbles``: specs
    (r, s, dec_r, dec_s) with r+s = a inserting a lens through a window
    in the host facet.  With two caps, no pockets and no bubbles this is
    the decorated sphere (or higher-genus surface via ``genus``).
    """
    host_circles = []
    facets = []
    arcs = []
    npock = 0
    for idx, end in enumerate(ends):
        if end == "cap":
            continue
        _, dec_comp, dec_full = end
        npock += 1
        cid = f"P{idx}"
        host_circles.append([(cid, 0)])
        facets.append(Facet(f"comp{idx}", n - a, 0, [[(cid, 1)]],
                            _dec(n - a, dec_comp)))
        facets.append(Facet(f"full{idx}", n, 0, [[(cid, 2)]],
                            _dec(n, dec_full)))
        arcs.append(BindingArc(cid, "circle", ("host", f"comp{idx}", f"full{idx}")))
    for bidx, (r, s, dec_r, dec_s) in enumerate(bubbles):
        if r + s != a:
            raise ValueError("bubble labels must sum to the host label")
        cid = f"B{bidx}"
        host_circles.append([(cid, 2)])
        facets.append(Facet(f"lr{bidx}", r, 0, [[(cid, 0)]], _dec(r, dec_r)))
        facets.append(Facet(f"ls{bidx}", s, 0, [[(cid, 1)]], _dec(s, dec_s)))
        arcs.append(BindingArc(cid, "circle", (f"lr{bidx}", f"ls{bidx}", "host")))
    facets.insert(0, Facet("host", a, genus, host_circles, _dec(a, a_dec)))
    return assert_valid(Foam(n, facets, arcs))


def build_pocket_sphere(a, n, a_dec=None, bot_comp=None, top_comp=None,
                        bubbles=()):
    """Cylinder with a pocket at each end; complement-disk decorations."""
    return build_pocket_chain(a, n, a_dec=a_dec,
                              ends=(("pocket", bot_comp, None),
                                    ("pocket", top_comp, None)),
                              bubbles=bubbles)


# -- pieces over the circle(a) web cross-section -------------------------------

def piece_tube(a, dec=None):
    from .openfoam import PFacet, Piece, circle_web
    w = circle_web(a)
    f = PFacet("host", a, 0, [[("bot", "e")], [("top", "e")]], _combo(a, dec))
    return Piece("tube", w, w, [f], [])


def piece_cupcap(a, dec_bot=None, dec_top=None):
    """Disjoint cap below and cup above: the sphere-forming closure."""
    from .openfoam import PFacet, Piece, circle_web
    w = circle_web(a)
    cap = PFacet("cap", a, 1, [[("bot", "e")]], _combo(a, dec_bot))
    cup = PFacet("cup", a, 1, [[("top", "e")]], _combo(a, dec_top))
    return Piece("cupcap", w, w, [cap, cup], [])


def piece_pocketpair(a, n, bot_host=None, top_host=None, bot_comp=None,
                     top_comp=None, bot_full=None, top_full=None):
    """Cut tube with a pocket on each side of the cut.

    Each cut end closes against a complement disk (label n-a) and a full
    disk (label n) along a binding circle with sides (host, complement,
    full).
    """
    from .openfoam import PArc, PFacet, Piece, circle_web
    w = circle_web(a)
    facets = [
        PFacet("hb", a, 0, [[("bot", "e")], [("arc", "cb", 0)]], _combo(a, bot_host)),
        PFacet("compb", n - a, 1, [[("arc", "cb", 1)]], _combo(n - a, bot_comp)),
        PFacet("fullb", n, 1, [[("arc", "cb", 2)]], _combo(n, bot_full)),
        PFacet("ht", a, 0, [[("top", "e")], [("arc", "ct", 0)]], _combo(a, top_host)),
        PFacet("compt", n - a, 1, [[("arc", "ct", 1)]], _combo(n - a, top_comp)),
        PFacet("fullt", n, 1, [[("arc", "ct", 2)]], _combo(n, top_full)),
    ]
    arcs = [PArc("cb", ("hb", "compb", "fullb"), None),
            PArc("ct", ("ht", "compt", "fullt"), None)]
    return Piece("pocketpair", w, w, facets, arcs)


def piece_bubble(r, s, dec_r=None, dec_s=None, host_dec=None):
    """Tube with an internal lens whose sheets carry labels r and s."""
    from .openfoam import PArc, PFacet, Piece, circle_web
    a = r + s
    w = circle_web(a)
    facets = [
        PFacet("host", a, -1, [[("bot", "e")], [("top", "e")], [("arc", "m", 2)]],
               _combo(a, host_dec)),
        PFacet("lr", r, 1, [[("arc", "m", 0)]], _combo(r, dec_r)),
        PFacet("ls", s, 1, [[("arc", "m", 1)]], _combo(s, dec_s)),
    ]
    return Piece("bubble", w, w, facets, [PArc("m", ("lr", "ls", "host"), None)])


# -- pieces over the closed theta(a, b) web cross-section ---------------------
#
# Web edges: s1 (label a), s2 (b), g (a+b); vertices v1, v2.  Every piece
# below keeps the side-tuple convention (a-facet, b-facet, thick-facet) so
# that cyclic orders stay coherent across gluings.

def _combo(label, d):
    if d is None:
        return SchurCombo.one(label)
    if isinstance(d, SchurCombo):
        return d
    return SchurCombo.single(label, d if isinstance(d, YoungDiagram) else YoungDiagram(d))


def piece_theta_prism(a, b, dec_s1=None, dec_s2=None, dec_g=None):
    """theta(a,b) x I: three square facets, two vertical arcs."""
    from .openfoam import PArc, PFacet, Piece, theta_web
    w = theta_web(a, b)
    f1 = PFacet("s1", a, 1,
                [[("bot", "s1"), ("arc", "u2", 0), ("top", "s1"), ("arc", "u1", 0)]],
                _combo(a, dec_s1))
    f2 = PFacet("s2", b, 1,
                [[("bot", "s2"), ("arc", "u2", 1), ("top", "s2"), ("arc", "u1", 1)]],
                _combo(b, dec_s2))
    fg = PFacet("g", a + b, 1,
                [[("bot", "g"), ("arc", "u2", 2), ("top", "g"), ("arc", "u1", 2)]],
                _combo(a + b, dec_g))
    arcs = [PArc("u1", ("s1", "s2", "g"), (("bot", "v1"), ("top", "v1"))),
            PArc("u2", ("s1", "s2", "g"), (("bot", "v2"), ("top", "v2")))]
    return Piece("prism", w, w, [f1, f2, fg], arcs)


def piece_theta_mcut(a, b, bot_decs=(None, None, None), top_decs=(None, None, None)):
    """Full cap-and-cup: all three sheets close off downward and upward.

    bot_decs and top_decs are decorations in the order (a-cap, b-cap, thick
    cap).
    """
    from .openfoam import PArc, PFacet, Piece, theta_web
    w = theta_web(a, b)
    facets = []
    for side, decs, arc in (("b", bot_decs, "cb"), ("t", top_decs, "ct")):
        port = "bot" if side == "b" else "top"
        facets.append(PFacet(f"ca{side}", a, 1, [[(port, "s1"), ("arc", arc, 0)]],
                             _combo(a, decs[0])))
        facets.append(PFacet(f"cb{side}", b, 1, [[(port, "s2"), ("arc", arc, 1)]],
                             _combo(b, decs[1])))
        facets.append(PFacet(f"cg{side}", a + b, 1, [[(port, "g"), ("arc", arc, 2)]],
                             _combo(a + b, decs[2])))
    arcs = [PArc("cb", ("cab", "cbb", "cgb"), (("bot", "v1"), ("bot", "v2"))),
            PArc("ct", ("cat", "cbt", "cgt"), (("top", "v1"), ("top", "v2")))]
    return Piece("mcut", w, w, facets, arcs)


def piece_theta_cut(a, b, survive, bot_decs=(None, None), top_decs=(None, None)):
    """Cut the two non-surviving sheets of the prism.

    ``survive`` names the edge whose sheet continues through: "g" gives
    the digon-style lens cut (the a and b sheets cap off), "s1" or "s2"
    give the return-digon cuts (the other thin sheet and the thick sheet
    cap off).  Decorations are for the two capped sheets, bottom and top,
    in side-tuple order restricted to the capped slots.
    """
    from .openfoam import PArc, PFacet, Piece, theta_web
    w = theta_web(a, b)
    labels = {"s1": a, "s2": b, "g": a + b}
    slots = {"s1": 0, "s2": 1, "g": 2}
    capped = [e for e in ("s1", "s2", "g") if e != survive]
    facets = []
    surv_label = labels[survive]
    facets.append(PFacet(
        "surv", surv_label, 0,
        [[("bot", survive), ("arc", "cb", slots[survive])],
         [("top", survive), ("arc", "ct", slots[survive])]],
        SchurCombo.one(surv_label)))
    for side, decs, arc in (("b", bot_decs, "cb"), ("t", top_decs, "ct")):
        port = "bot" if side == "b" else "top"
        for widx, e in enumerate(capped):
            facets.append(PFacet(f"cap_{e}_{side}", labels[e], 1,
                                 [[(port, e), ("arc", arc, slots[e])]],
                                 _combo(labels[e], decs[widx])))

    def side_facet(e, side):
        return "surv" if e == survive else f"cap_{e}_{side}"

    arcs = [PArc("cb", (side_facet("s1", "b"), side_facet("s2", "b"),
                        side_facet("g", "b")), (("bot", "v1"), ("bot", "v2"))),
            PArc("ct", (side_facet("s1", "t"), side_facet("s2", "t"),
                        side_facet("g", "t")), (("top", "v1"), ("top", "v2")))]
    return Piece(f"cut_{survive}", w, w, facets, arcs)


def piece_theta_unzip(a, b, dec_bot=None, dec_top=None, window_decs=(None, None)):
    """Unzip the thick sheet: it caps off while the window joins s1 and s2.

    The thick sheet ends both from below and from above; between the two
    arcs the cross-section is two circles whose sheets extend the s1 and
    s2 prisms.
    """
    from .openfoam import PArc, PFacet, Piece, theta_web
    w = theta_web(a, b)
    f1 = PFacet("w1", a, 0,
                [[("bot", "s1"), ("arc", "cb", 0)], [("top", "s1"), ("arc", "ct", 0)]],
                _combo(a, window_decs[0]))
    f2 = PFacet("w2", b, 0,
                [[("bot", "s2"), ("arc", "cb", 1)], [("top", "s2"), ("arc", "ct", 1)]],
                _combo(b, window_decs[1]))
    gb = PFacet("gb", a + b, 1, [[("bot", "g"), ("arc", "cb", 2)]], _combo(a + b, dec_bot))
    gt = PFacet("gt", a + b, 1, [[("top", "g"), ("arc", "ct", 2)]], _combo(a + b, dec_top))
    arcs = [PArc("cb", ("w1", "w2", "gb"), (("bot", "v1"), ("bot", "v2"))),
            PArc("ct", ("w1", "w2", "gt"), (("top", "v1"), ("top", "v2")))]
    return Piece("unzip", w, w, [f1, f2, gb, gt], arcs)


def piece_theta_bridge(a, b, dec_bot=None, dec_top=None, dec_lens=None):
    """Unzip and re-zip through a thick lens: the square-relation crossing
    term.  The s1 and s2 sheets become three-holed spheres joined by a
    thick lens along a closed binding."""
    from .openfoam import PArc, PFacet, Piece, theta_web
    w = theta_web(a, b)
    f1 = PFacet("w1", a, -1,
                [[("bot", "s1"), ("arc", "cb", 0)], [("top", "s1"), ("arc", "ct", 0)],
                 [("arc", "mid", 0)]],
                SchurCombo.one(a))
    f2 = PFacet("w2", b, -1,
                [[("bot", "s2"), ("arc", "cb", 1)], [("top", "s2"), ("arc", "ct", 1)],
                 [("arc", "mid", 1)]],
                SchurCombo.one(b))
    gb = PFacet("gb", a + b, 1, [[("bot", "g"), ("arc", "cb", 2)]], _combo(a + b, dec_bot))
    gt = PFacet("gt", a + b, 1, [[("top", "g"), ("arc", "ct", 2)]], _combo(a + b, dec_top))
    lens = PFacet("lens", a + b, 1, [[("arc", "mid", 2)]], _combo(a + b, dec_lens))
    arcs = [PArc("cb", ("w1", "w2", "gb"), (("bot", "v1"), ("bot", "v2"))),
            PArc("ct", ("w1", "w2", "gt"), (("top", "v1"), ("top", "v2"))),
            PArc("mid", ("w1", "w2", "lens"), None)]
    return Piece("bridge", w, w, [f1, f2, gb, gt, lens], arcs)


def piece_theta_durcut(a, b, n, bot_decs=None, top_decs=None):
    """Cut the return-digon pair (the b and a+b sheets) with pockets.

    The surviving a-sheet runs through; at each cut the b and thick
    sheets close against a pocket of complementary disks (labels n-a-b,
    n-a and n) through two tetrahedral points.  Decorations are dicts
    keyed by "s2cap", "gcap", "dc", "dna", "dn".
    """
    from .openfoam import PArc, PFacet, Piece, theta_web
    w = theta_web(a, b)
    c = n - a - b
    if c < 0:
        raise ValueError("needs a+b <= n")
    bot_decs = bot_decs or {}
    top_decs = top_decs or {}
    facets = [PFacet("s1", a, 0,
                     [[("bot", "s1"), ("arc", "v1b", 0), ("arc", "t4b", 0),
                       ("arc", "v2b", 0)],
                      [("top", "s1"), ("arc", "v1t", 0), ("arc", "t4t", 0),
                       ("arc", "v2t", 0)]])]
    for side, decs in (("b", bot_decs), ("t", top_decs)):
        port = "bot" if side == "b" else "top"
        facets += [
            PFacet(f"s2cap{side}", b, 1,
                   [[(port, "s2"), ("arc", f"v1{side}", 1),
                     ("arc", f"t3{side}", 0), ("arc", f"v2{side}", 1)]],
                   _combo(b, decs.get("s2cap"))),
            PFacet(f"gcap{side}", a + b, 1,
                   [[(port, "g"), ("arc", f"v1{side}", 2),
                     ("arc", f"t2{side}", 0), ("arc", f"v2{side}", 2)]],
                   _combo(a + b, decs.get("gcap"))),
            PFacet(f"dc{side}", c, 1,
                   [[("arc", f"t2{side}", 1), ("arc", f"t3{side}", 1)]],
                   _combo(c, decs.get("dc"))),
            PFacet(f"dna{side}", n - a, 1,
                   [[("arc", f"t3{side}", 2), ("arc", f"t4{side}", 1)]],
                   _combo(n - a, decs.get("dna"))),
            PFacet(f"dn{side}", n, 1,
                   [[("arc", f"t2{side}", 2), ("arc", f"t4{side}", 2)]],
                   _combo(n, decs.get("dn"))),
        ]
    arcs = []
    points = []
    for side in ("b", "t"):
        port = "bot" if side == "b" else "top"
        arcs += [
            PArc(f"v1{side}", ("s1", f"s2cap{side}", f"gcap{side}"),
                 ((port, "v1"), ("pt", f"P1{side}"))),
            PArc(f"v2{side}", ("s1", f"s2cap{side}", f"gcap{side}"),
                 ((port, "v2"), ("pt", f"P2{side}"))),
            PArc(f"t2{side}", (f"gcap{side}", f"dc{side}", f"dn{side}"),
                 (("pt", f"P1{side}"), ("pt", f"P2{side}"))),
            PArc(f"t3{side}", (f"s2cap{side}", f"dc{side}", f"dna{side}"),
                 (("pt", f"P1{side}"), ("pt", f"P2{side}"))),
            PArc(f"t4{side}", ("s1", f"dna{side}", f"dn{side}"),
                 (("pt", f"P1{side}"), ("pt", f"P2{side}"))),
        ]
        # tetra order at each point: (a,b|ab), (ab,c|abc), (b,c|bc), (a,bc|abc)
        points += [
            (f"P1{side}", [(f"v1{side}", 1), (f"t2{side}", 0),
                           (f"t3{side}", 0), (f"t4{side}", 0)]),
            (f"P2{side}", [(f"v2{side}", 1), (f"t2{side}", 1),
                           (f"t3{side}", 1), (f"t4{side}", 1)]),
        ]
    return Piece("durcut", w, w, facets, arcs, points)


def piece_theta3_prism(a, b, c, shape=("left", "left"), decs=None):
    """Identity prism over a closed three-strand web.

    ``shape`` gives the grouping of the (bottom-chain, top-chain)
    vertices; both chains are part of one cross-section web.
    """
    from .openfoam import PArc, PFacet, Piece, theta3_web
    w = theta3_web(a, b, c, shape)
    decs = decs or {}
    incid = {eid: [] for eid in w.edges}
    for vid, (ea, eb, eab) in sorted(w.vertices.items()):
        incid[ea].append((vid, 0))
        incid[eb].append((vid, 1))
        incid[eab].append((vid, 2))
    facets = []
    for eid, label in sorted(w.edges.items()):
        ends = incid[eid]
        if len(ends) != 2:
            raise ValueError("closed web edges must join two vertices")
        (va, sa), (vb, sb) = ends
        facets.append(PFacet(eid, label, 1,
                             [[("bot", eid), ("arc", f"u{vb}", sb),
                               ("top", eid), ("arc", f"u{va}", sa)]],
                             _combo(label, decs.get(eid))))
    arcs = [PArc(f"u{vid}", tpl, (("bot", vid), ("top", vid)))
            for vid, tpl in sorted(w.vertices.items())]
    return Piece("prism3", w, w, facets, arcs)


def piece_theta3_sixj(a, b, c, top_group="right"):
    """The one-singular-point regrouping piece on the lower chain.

    The lower chain changes grouping through a tetrahedral point while the
    upper chain runs through as a prism.  ``top_group`` is the grouping
    the lower chain acquires going up.
    """
    from .openfoam import PArc, PFacet, Piece, theta3_web
    other = "left" if top_group == "right" else "right"
    bot = theta3_web(a, b, c, (other, "left"))
    top = theta3_web(a, b, c, (top_group, "left"))
    n3 = a + b + c
    common = [
        PFacet("FMU", a + b, 1, [[("bot", "mT"), ("arc", "ut3", 0),
                                  ("top", "mT"), ("arc", "ut2", 2)]]),
    ]
    upper_arcs = [
        PArc("ut2", ("F1", "F2", "FMU"), (("bot", "t2"), ("top", "t2"))),
        PArc("ut3", ("FMU", "F3", "FG"), (("bot", "t3"), ("top", "t3"))),
    ]
    if top_group == "right":
        facets = [
            PFacet("F1", a, 1, [[("bot", "s1"), ("arc", "a1", 0),
                                 ("arc", "a4", 0), ("top", "s1"),
                                 ("arc", "ut2", 0)]]),
            PFacet("F2", b, 1, [[("bot", "s2"), ("arc", "a1", 1),
                                 ("arc", "a3", 0), ("top", "s2"),
                                 ("arc", "ut2", 1)]]),
            PFacet("F3", c, 1, [[("bot", "s3"), ("arc", "a2", 1),
                                 ("arc", "a3", 1), ("top", "s3"),
                                 ("arc", "ut3", 1)]]),
            PFacet("FG", n3, 1, [[("bot", "g"), ("arc", "a2", 2),
                                  ("arc", "a4", 2), ("top", "g"),
                                  ("arc", "ut3", 2)]]),
            PFacet("FMB", a + b, 1, [[("bot", "mB"), ("arc", "a2", 0),
                                      ("arc", "a1", 2)]]),
            PFacet("FMT", b + c, 1, [[("top", "mB"), ("arc", "a4", 1),
                                      ("arc", "a3", 2)]]),
        ] + common
        arcs = [
            PArc("a1", ("F1", "F2", "FMB"), (("bot", "b2"), ("pt", "P"))),
            PArc("a2", ("FMB", "F3", "FG"), (("bot", "b3"), ("pt", "P"))),
            PArc("a3", ("F2", "F3", "FMT"), (("pt", "P"), ("top", "b2"))),
            PArc("a4", ("F1", "FMT", "FG"), (("pt", "P"), ("top", "b3"))),
        ] + upper_arcs
    else:
        facets = [
            PFacet("F1", a, 1, [[("bot", "s1"), ("arc", "a2", 0),
                                 ("arc", "a3", 0), ("top", "s1"),
                                 ("arc", "ut2", 0)]]),
            PFacet("F2", b, 1, [[("bot", "s2"), ("arc", "a1", 0),
                                 ("arc", "a3", 1), ("top", "s2"),
                                 ("arc", "ut2", 1)]]),
            PFacet("F3", c, 1, [[("bot", "s3"), ("arc", "a1", 1),
                                 ("arc", "a4", 1), ("top", "s3"),
                                 ("arc", "ut3", 1)]]),
            PFacet("FG", n3, 1, [[("bot", "g"), ("arc", "a2", 2),
                                  ("arc", "a4", 2), ("top", "g"),
                                  ("arc", "ut3", 2)]]),
            PFacet("FMB", b + c, 1, [[("bot", "mB"), ("arc", "a2", 1),
                                      ("arc", "a1", 2)]]),
            PFacet("FMT", a + b, 1, [[("top", "mB"), ("arc", "a4", 0),
                                      ("arc", "a3", 2)]]),
        ] + common
        arcs = [
            PArc("a1", ("F2", "F3", "FMB"), (("bot", "b2"), ("pt", "P"))),
            PArc("a2", ("F1", "FMB", "FG"), (("bot", "b3"), ("pt", "P"))),
            PArc("a3", ("F1", "F2", "FMT"), (("pt", "P"), ("top", "b2"))),
            PArc("a4", ("FMT", "F3", "FG"), (("pt", "P"), ("top", "b3"))),
        ] + upper_arcs
    if top_group == "right":
        # incident arcs listed in tetra order (a,b|ab), (ab,c|abc), (b,c|bc),
        # (a,bc|abc)
        points = [("P", [("a1", 1), ("a2", 1), ("a3", 0), ("a4", 0)])]
    else:
        points = [("P", [("a3", 0), ("a4", 0), ("a1", 1), ("a2", 1)])]
    return Piece(f"sixj_{top_group}", bot, top, facets, arcs, points)


# -- local relations as term lists with a shared cross-section web -------------

class RelationInstance:
    """A local relation: lhs and rhs as signed piece lists over one web.

    ``lhs`` and ``rhs`` are lists of (coefficient, piece); closing against
    any piece with the same cross-section web must give equal evaluations.
    """

    def __init__(self, name, n, web, lhs, rhs, idempotent_rhs=False):
        self.name = name
        self.n = n
        self.web = web
        self.lhs = lhs
        self.rhs = rhs
        self.idempotent_rhs = idempotent_rhs


def build_relation(rid, params, n):
    """Instantiate a named local relation.

    Supported ids: "digon" (a, b), "digon-dur" (a, b), "square"
    (n1, m1, l1, k1) at its minimal parameters (1, 1, 1, 1),
    "dot-migration" (a, b, gamma), "neck-cutting" (a,), "joint" (r, s),
    "mp" (a, b, c).
    """
    from .openfoam import circle_web, theta3_web, theta_web
    from .schur import complement_in, dual_in, enumerate_box, lr_coeffs

    if rid == "digon":
        a, b = params
        web = theta_web(a, b)
        rhs = []
        for alpha in enumerate_box(a, b):
            t = piece_theta_cut(a, b, "g", bot_decs=(alpha, None),
                                top_decs=(None, dual_in(alpha, a, b)))
            rhs.append(((-1) ** (alpha.size % 2), t))
        return RelationInstance("digon", n, web,
                                [(1, piece_theta_prism(a, b))], rhs,
                                idempotent_rhs=True)
    if rid == "digon-dur":
        a, b = params
        web = theta_web(a, b)
        rhs = []
        for alpha in enumerate_box(b, n - a - b):
            t = piece_theta_durcut(
                a, b, n, bot_decs={"s2cap": alpha},
                top_decs={"dc": complement_in(alpha, b, n - a - b)})
            rhs.append(((-1) ** (alpha.size % 2), t))
        return RelationInstance("digon-dur", n, web,
                                [(1, piece_theta_prism(a, b))], rhs)
    if rid == "square":
        n1, m1, l1, k1 = params
        if (n1, m1, l1, k1) != (1, 1, 1, 1):
            raise ValueError("square relation is instantiated at (1,1,1,1)")
        # after removing the 0-labeled edges the square cross-section is the
        # closed theta(1,1) web and the two j-terms are the signed lens cuts
        web = theta_web(1, 1)
        rhs = []
        from .schur import EMPTY, YoungDiagram as YD
        terms = {0: YD([1]), 1: YD([])}  # j -> lens-cut index
        for j in (0, 1):
            alpha = terms[j]
            t = piece_theta_cut(1, 1, "g", bot_decs=(alpha, None),
                                top_decs=(None, dual_in(alpha, 1, 1)))
            rhs.append(((-1) ** (alpha.size % 2), t))
        return RelationInstance("square", n, web,
                                [(1, piece_theta_prism(1, 1))], rhs,
                                idempotent_rhs=True)
    if rid == "dot-migration":
        a, b, gamma = params
        web = theta_web(a, b)
        lhs = [(1, piece_theta_prism(a, b, dec_g=gamma))]
        rhs = [(c, piece_theta_prism(a, b, dec_s1=alpha, dec_s2=beta))
               for alpha, beta, c in _lr_pairs(gamma)]
        return RelationInstance("dot-migration", n, web, lhs, rhs)
    if rid == "neck-cutting":
        (a,) = params
        web = circle_web(a)
        rhs = []
        for alpha in enumerate_box(a, n - a):
            ah = dual_in(alpha, a, n - a)
            sgn = (-1) ** ((a * (n - a) - alpha.size + a * (a + 1) // 2) % 2)
            rhs.append((sgn, piece_pocketpair(a, n, bot_host=alpha,
                                              top_comp=ah)))
        return RelationInstance("neck-cutting", n, web,
                                [(1, piece_tube(a))], rhs,
                                idempotent_rhs=True)
    if rid == "joint":
        r, s = params
        web = circle_web(r + s)
        rhs = []
        for alpha in enumerate_box(r, s):
            sgn = (-1) ** ((r * s - alpha.size) % 2)
            dec = _combo(r + s, alpha) * _combo(r + s, dual_in(alpha, r, s))
            rhs.append((sgn, piece_tube(r + s, dec)))
        return RelationInstance("joint", n, web,
                                [(1, piece_bubble(r, s))], rhs,
                                idempotent_rhs=True)
    if rid == "mp":
        a, b, c = params
        web = theta3_web(a, b, c)
        up = piece_theta3_sixj(a, b, c, "right")
        down = piece_theta3_sixj(a, b, c, "left")
        return RelationInstance("mp", n, web,
                                [(1, [up, down])],
                                [(1, piece_theta3_prism(a, b, c))])
    raise ValueError(f"unknown relation {rid!r}")


def _lr_pairs(gamma):
    """All (alpha, beta, c^gamma_{alpha beta}) with nonzero coefficient."""
    from .schur import conjugate, lr_coeffs, enumerate_box
    gt = conjugate(gamma)
    out = []
    seen = set()
    for arows in range(gamma.size + 1):
        for alpha_t in enumerate_box(gt.ncols, arows):
            if alpha_t.size > gt.size or not gt.contains(alpha_t):
                continue
            if alpha_t in seen:
                continue
            seen.add(alpha_t)
            for lam, coeff in lr_coeffs_target(alpha_t, gt).items():
                out.append((conjugate(alpha_t), conjugate(lam), coeff))
    return out


def lr_coeffs_target(alpha, gamma):
    """beta -> c^gamma_{alpha beta}: fillings of gamma/alpha."""
    from .schur import _lr_fillings, enumerate_box
    out = {}
    rest = gamma.size - alpha.size
    if rest < 0:
        return out
    for beta in enumerate_box(gamma.ncols, gamma.nrows):
        if beta.size != rest:
            continue
        c = _lr_fillings(gamma, alpha, beta)
        if c:
            out[beta] = c
    return out


def closure_family(web, n, max_degree=None, relation_terms=()):
    """Deterministic list of named closure pieces for a cross-section web.

    Contains the identity prism, the mirror of every relation term, and
    single-facet decoration insertions of degree at most ``max_degree``
    (defaulting to 2N) on the prism.
    """
    from .openfoam import circle_web, theta3_web, theta_web
    from .schur import enumerate_box
    D = 2 * n if max_degree is None else max_degree
    out = []
    edges = dict(web.edges)
    if not web.vertices:  # circle web
        (eid, a), = edges.items()
        out.append(("tube", piece_tube(a)))
        for rows in range(1, n + 1):
            for mu in enumerate_box(a, rows):
                if mu.size and 2 * mu.size <= D:
                    out.append((f"tube+{mu.to_text()}", piece_tube(a, mu)))
        out.append(("cupcap", piece_cupcap(a)))
    elif set(edges) == {"s1", "s2", "g"}:
        a, b = edges["s1"], edges["s2"]
        out.append(("prism", piece_theta_prism(a, b)))
        for where, lab in (("s1", a), ("s2", b), ("g", a + b)):
            for rows in range(1, min(n, 3) + 1):
                for mu in enumerate_box(lab, rows):
                    if mu.size and 2 * mu.size <= D:
                        kw = {f"dec_{where}": mu}
                        out.append((f"prism+{where}:{mu.to_text()}",
                                    piece_theta_prism(a, b, **kw)))
        out.append(("mcut", piece_theta_mcut(a, b)))
    else:
        a, b, c = edges["s1"], edges["s2"], edges["s3"]
        out.append(("prism", piece_theta3_prism(a, b, c)))
        for eid, lab in sorted(edges.items()):
            for mu in enumerate_box(lab, 1):
                if mu.size and 2 * mu.size <= D and mu.size <= 1:
                    out.append((f"prism+{eid}:{mu.to_text()}",
                                piece_theta3_prism(a, b, c, decs={eid: mu})))
    for k, (coeff, term) in enumerate(relation_terms):
        if not isinstance(term, list):
            out.append((f"term{k}", term))
    # deduplicate names, keep deterministic order
    return out


def close_relation(rel, closure_piece):
    """Evaluate both sides of a relation against one closure piece.

    Returns (lhs_value, rhs_value) as MultiPoly.
    """
    from .foameval import eval as foam_eval
    from .openfoam import necklace
    from .polyring import MultiPoly

    def side_value(side):
        total = MultiPoly.zero(rel.n)
        for coeff, piece in side:
            stack = piece if isinstance(piece, list) else [piece]
            v = foam_eval(necklace([closure_piece] + stack, rel.n))
            total = total + v * coeff
        return total

    return side_value(rel.lhs), side_value(rel.rhs)


def zoo(n):
    """Named closed foams exercising every structural feature at pigment
    count n: spheres, tori, thetas, pairing foams, pockets, bubbles, and a
    singular-point composite."""
    from .openfoam import necklace
    out = {}
    out["sphere1"] = build_sphere(1, n)
    out["sphere1_dotted"] = build_sphere(1, n, YoungDiagram([1] * (n - 1)))
    out["torus1"] = build_torus(1, n)
    if n >= 2:
        out["sphere2"] = build_sphere(2, n)
        out["torus2"] = build_torus(2, n)
        out["torus1_genus2"] = build_torus(1, n, genus=2)
        out["theta112"] = build_theta(1, 1, n)
        out["theta112_dotted"] = build_theta(1, 1, n, dec_b=YoungDiagram([1]))
        out["gen_theta_11"] = build_gen_theta_closed([1, 1], 2).with_decorations({}) \
            if n == 2 else build_theta(1, 1, n)
        out["pocket_sphere1"] = build_pocket_sphere(1, n)
        out["bubble_torus"] = build_pocket_chain(2, n, genus=1,
                                                 bubbles=[(1, 1, None, None)])
        out["theta_x_s1"] = necklace([piece_theta_prism(1, 1)], n)
        out["lens_cut"] = necklace([piece_theta_prism(1, 1),
                                    piece_theta_cut(1, 1, "g")], n)
    if n >= 3:
        out["theta123"] = build_theta(1, 2, n)
        out["gen_theta_111"] = build_gen_theta_closed([1, 1, 1], 3) \
            if n == 3 else build_theta(1, 2, n)
        out["sixj_composite"] = necklace(
            [piece_theta3_sixj(1, 1, 1, "right"),
             piece_theta3_sixj(1, 1, 1, "left")], n)
        out["dur_cut"] = necklace([piece_theta_prism(1, 1),
                                   piece_theta_durcut(1, 1, n)], n)
    return out


def build_graph_times_circle(graph, n, edge_decs=None):
    """The product foam of a MOY graph with a circle.

    Every edge becomes a genus-0 facet with one boundary circle per
    incident vertex (a torus for free circles, an annulus for ordinary
    edges); every vertex becomes a circle binding whose stored cyclic
    order is uniformly (a-edge, b-edge, merged edge).
    """
    edge_decs = edge_decs or {}
    facets = []
    arcs = []
    vertex_circles = {}
    for v in graph.vertices:
        vertex_circles[v.id] = (f"V{v.id}", (v.a, v.b, v.ab))
    boundary = {e.id: [] for e in graph.edges}
    for v in graph.vertices:
        aid = f"V{v.id}"
        boundary[v.a].append([(aid, 0)])
        boundary[v.b].append([(aid, 1)])
        boundary[v.ab].append([(aid, 2)])
    for e in graph.edges:
        circles = boundary[e.id]
        genus = 1 if not circles else 0
        facets.append(Facet(f"E{e.id}", e.label, genus, circles,
                            _dec(e.label, edge_decs.get(e.id))))
    for v in graph.vertices:
        arcs.append(BindingArc(f"V{v.id}", "circle",
                               (f"E{v.a}", f"E{v.b}", f"E{v.ab}")))
    return assert_valid(Foam(n, facets, arcs))
