"""File formats: foams and MOY graphs as structured text (JSON documents).

Foam documents carry the pigment count, facets (id, label, genus,
boundary as lists of [arc, slot] pairs, decoration as a list of
[diagram-rows, coeff] pairs), arcs (id, kind, sides triple in cyclic
order, endpoints) and points (id, incident arc-ends).  MOY graph
documents mirror the structure with labeled directed edges and vertices.
"""

from __future__ import annotations

import json

from .foamcore import BindingArc, Facet, Foam, SingularPoint, assert_valid
from .moyflag import MoyGraph
from .schur import SchurCombo, YoungDiagram


class FormatError(ValueError):
    pass


def decoration_to_obj(dec):
    return [[list(d.rows), c] for d, c in sorted(
        dec.terms.items(), key=lambda kv: (kv[0].size, kv[0].rows))]


def decoration_from_obj(obj, arity):
    terms = {}
    for rows, coeff in obj:
        terms[YoungDiagram(rows)] = coeff
    return SchurCombo(arity, terms) if terms else SchurCombo(arity, {})


def foam_to_obj(foam):
    return {
        "n": foam.n,
        "facets": [
            {
                "id": f.id,
                "label": f.label,
                "genus": f.genus,
                "boundary": [[[aid, slot] for aid, slot in circ]
                             for circ in f.boundary],
                "decoration": decoration_to_obj(f.decoration),
            }
            for f in sorted(foam.facets.values(), key=lambda f: str(f.id))
        ],
        "arcs": [
            {
                "id": a.id,
                "kind": a.kind,
                "sides": list(a.sides),
                "endpoints": list(a.endpoints) if a.endpoints else None,
            }
            for a in sorted(foam.arcs.values(), key=lambda a: str(a.id))
        ],
        "points": [
            {"id": p.id, "incident": [[aid, end] for aid, end in p.incident]}
            for p in sorted(foam.points.values(), key=lambda p: str(p.id))
        ],
    }


def foam_from_obj(obj):
    try:
        n = int(obj["n"])
        facets = []
        for fo in obj["facets"]:
            dec_obj = fo.get("decoration") or [[[], 1]]
            dec = decoration_from_obj(dec_obj, int(fo["label"]))
            if not dec.terms:
                dec = SchurCombo.one(int(fo["label"]))
            facets.append(Facet(
                fo["id"], int(fo["label"]), int(fo.get("genus", 0)),
                [[(aid, int(slot)) for aid, slot in circ]
                 for circ in fo.get("boundary", [])],
                dec))
        arcs = []
        for ao in obj.get("arcs", []):
            arcs.append(BindingArc(ao["id"], ao["kind"], tuple(ao["sides"]),
                                   tuple(ao["endpoints"]) if ao.get("endpoints") else None))
        points = []
        for po in obj.get("points", []):
            points.append(SingularPoint(
                po["id"], [(aid, int(end)) for aid, end in po["incident"]]))
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed foam document: {exc}") from exc
    return assert_valid(Foam(n, facets, arcs, points))


def dump_foam(foam, path=None):
    obj = foam_to_obj(foam)
    text = json.dumps(obj, indent=1, sort_keys=True)
    if path is not None:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    return text


def load_foam(path_or_text):
    if isinstance(path_or_text, str) and path_or_text.lstrip().startswith("{"):
        text = path_or_text
    else:
        with open(path_or_text) as fh:
            text = fh.read()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    return foam_from_obj(obj)


def moy_to_obj(graph):
    return {
        "edges": [{"id": e.id, "label": e.label} for e in graph.edges],
        "vertices": [{"id": v.id, "a": v.a, "b": v.b, "ab": v.ab}
                     for v in graph.vertices],
    }


def moy_from_obj(obj):
    try:
        edges = [(e["id"], int(e["label"])) for e in obj["edges"]]
        vertices = [(v["id"], v["a"], v["b"], v["ab"])
                    for v in obj.get("vertices", [])]
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed MOY document: {exc}") from exc
    return MoyGraph(edges, vertices)


def dump_moy(graph, path=None):
    text = json.dumps(moy_to_obj(graph), indent=1, sort_keys=True)
    if path is not None:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    return text


def load_moy(path_or_text):
    if isinstance(path_or_text, str) and path_or_text.lstrip().startswith("{"):
        text = path_or_text
    else:
        with open(path_or_text) as fh:
            text = fh.read()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    return moy_from_obj(obj)
