"""JSON export payloads with stable field names and byte-stable encoding.

Scalars are rational-coordinate arrays in the field's power basis; the
field itself is described once in a header block.  Root/vertex indices are
1-based (matching the usual numbering of the root sequence and the labels
in the rendered picture); element and chamber ids are 0-based positions in
the listed order.
"""

from __future__ import annotations

import json
from itertools import combinations

from . import serialize
from .pipeline import Bundle


def _header(bundle: Bundle) -> dict:
    return {
        "field": bundle.system.field.describe(),
        "group": bundle.system.diagram.label,
        "rank": bundle.system.rank,
        "indexBase": 1,
    }


def export_ncp(bundle: Bundle) -> dict:
    ncp = bundle.ncp
    system = bundle.system
    elements = [{
        "id": pos,
        "length": ncp.length(pos),
        "matrix": serialize.matrix(system.elements[ncp.elements[pos]]),
    } for pos in range(ncp.size)]
    return {
        **_header(bundle),
        "elements": elements,
        "hasse": [[a, b] for a, b in ncp.hasse_edges()],
    }


def export_xc(bundle: Bundle) -> dict:
    xc = bundle.root_complex
    edges = sorted({e for f in xc.facets for e in combinations(f, 2)})
    return {
        **_header(bundle),
        "vertices": [serialize.vector(r) for r in bundle.ordered.roots],
        "edges": [[i + 1, j + 1] for i, j in edges],
        "facets": [[i + 1 for i in f] for f in xc.facets],
    }


def export_lattice(bundle: Bundle) -> dict:
    from .embed import flat_leq, intersection_lattice
    flats = intersection_lattice(bundle.system)
    order = []
    for a in range(len(flats)):
        for b in range(len(flats)):
            if a != b and flat_leq(bundle.system.field, flats[a], flats[b]):
                order.append([a, b])
    return {
        **_header(bundle),
        "flats": [{
            "id": i,
            "codim": f.codim,
            "normals": [serialize.vector(r) for r in f.normals],
        } for i, f in enumerate(flats)],
        "order": order,
    }


def export_embed(bundle: Bundle) -> dict:
    report = bundle.embedding
    chamber_rows = [{
        "id": pos,
        "element": chamber.element,
        "boundedSlice": bounded,
    } for pos, (chamber, bounded) in enumerate(
        zip(bundle.chamber_list, bundle.bounded_flags))]
    return {
        **_header(bundle),
        "facets": [[i + 1 for i in f] for f in report.facets],
        "chambers": chamber_rows,
        "boundedChamberIds": list(report.bounded_positions),
        "incidence": [list(row) for row in report.incidence],
        "columnWeights": list(report.column_weights),
        "rank": report.rank,
        "injective": report.injective,
    }


EXPORTERS = {
    "ncp": export_ncp,
    "xc": export_xc,
    "lattice": export_lattice,
    "embed": export_embed,
}


def to_json(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=1) + "\n"
