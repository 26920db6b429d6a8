"""Shared request pipeline behind the CLI and the HTTP service."""

from __future__ import annotations

from . import corpus, invariants as inv, restrictions as restr, topology
from .construction import build_complex, extend_signs, extract_hypersurface
from .documents import PatchworkDocument
from .lattice import InvalidArgument
from .regularity import check_regularity, convexify_star_moves, maximal_convex_refinement


def analyze_document(doc: PatchworkDocument, seed: int | None = None):
    from .lattice import validate_triangulation_fast

    t = doc.triangulation()
    report = validate_triangulation_fast(t)
    if not report.valid:
        raise InvalidArgument(f"invalid triangulation: {report.to_json()['violations']}")
    sigma = doc.sign_distribution()
    pc = build_complex(t, sigma)
    rep = topology.analyze(pc, seed)
    rr = restr.check_all(rep)
    return {
        "document": doc.to_json(),
        "topology": rep.to_json(),
        "restrictions": rr.to_json(),
        "mCurve": rep.is_m_curve,
    }


def build_document(doc: PatchworkDocument):
    from .lattice import validate_triangulation_fast

    t = doc.triangulation()
    report = validate_triangulation_fast(t)
    if not report.valid:
        raise InvalidArgument(f"invalid triangulation: {report.to_json()['violations']}")
    sigma = doc.sign_distribution()
    soc = extend_signs(t, sigma)
    affine = extract_hypersurface(soc)
    from .construction import projectivize

    projective = projectivize(affine)
    return {
        "affine": affine.to_json(),
        "projective": projective.to_json(),
    }


def regularity_document(doc: PatchworkDocument):
    sub = doc.subdivision()
    report = sub.validate()
    if not report.valid:
        raise InvalidArgument(f"invalid subdivision: {report.to_json()['violations']}")
    res = check_regularity(sub, prevalidated=True)
    return res.to_json()


def convexify_document(doc: PatchworkDocument):
    t = doc.triangulation()
    trace = convexify_star_moves(t)
    return trace.to_json()


def refine_document(doc: PatchworkDocument):
    from .documents import document_for

    sub = doc.subdivision()
    report = sub.validate()
    if not report.valid:
        raise InvalidArgument(f"invalid subdivision: {report.to_json()['violations']}")
    refined = maximal_convex_refinement(sub)
    meta = dict(doc.metadata)
    meta["refinedFrom"] = meta.pop("name", "input")
    signs = doc.sign_distribution() if doc.signs else None
    if signs is not None:
        # refinement introduces new vertices; extend by +1 (any value works
        # for regularity purposes, signs are only meaningful on the input)
        full = {v: signs.signs.get(v, 1) for v in refined.vertex_set}
        from .construction import SignDistribution

        signs = SignDistribution(full)
    return document_for(refined, signs, meta).to_json()


def validate_document(doc: PatchworkDocument):
    sub = doc.subdivision()
    return sub.validate().to_json()


def invariants_payload(n: int, d: int):
    ci = inv.complex_invariants(n, d)
    payload = {
        "n": n,
        "d": d,
        "chi": ci.chi,
        "b": ci.b_total,
        "harnack": inv.harnack_bound(d) if n == 2 else None,
        "hodge": {f"{p},{q}": h for (p, q), h in sorted(ci.hodge.items())},
    }
    if ci.sign is not None:
        payload["sign"] = ci.sign
    if ci.h11 is not None:
        payload["h11"] = ci.h11
    return payload


def examples_listing():
    out = []
    for name in corpus.example_ids():
        doc = corpus.example(name)
        out.append(
            {
                "id": name,
                "dim": doc.dim,
                "degree": doc.degree,
                "description": doc.metadata.get("description", ""),
            }
        )
    return {"examples": out}
