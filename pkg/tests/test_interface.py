import json
import subprocess
import sys
import time

import pytest
from fastapi.testclient import TestClient

from patchwork import corpus, pipeline
from patchwork.builders import grid_triangulation_2d, staircase_triangulation_3d
from patchwork.construction import SignDistribution, extend_signs, extract_hypersurface, projectivize
from patchwork.documents import PatchworkDocument, document_for, parse_rational, rational_str
from patchwork.render import render_obj, render_svg
from patchwork.service import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app(), raise_server_exceptions=False)


def cli(*args, expect=0):
    r = subprocess.run(
        [sys.executable, "-m", "patchwork.cli", *args], capture_output=True, text=True
    )
    assert r.returncode == expect, (r.returncode, r.stderr)
    return r.stdout


# --- documents


def test_document_round_trip():
    doc = corpus.example("d3-mcurve")
    again = PatchworkDocument.loads(doc.dumps())
    assert again == doc


def test_document_missing_keys_rejected():
    from patchwork.lattice import InvalidArgument

    with pytest.raises(InvalidArgument):
        PatchworkDocument.from_json({"dim": 2})


def test_rational_round_trip():
    from fractions import Fraction

    assert rational_str(Fraction(3, 2)) == "3/2"
    assert rational_str(Fraction(4, 2)) == 2
    assert parse_rational("3/2") == Fraction(3, 2)
    assert parse_rational(7) == 7


def test_document_sign_validation():
    from patchwork.lattice import InvalidArgument

    data = corpus.example("d2-oval").to_json()
    data["signs"]["0,0"] = 2
    with pytest.raises(InvalidArgument):
        PatchworkDocument.from_json(data)


# --- corpus


def test_corpus_contains_required_examples():
    ids = corpus.example_ids()
    for required in ("pinwheel-nonregular", "d3-mcurve", "d6-search-best"):
        assert required in ids


def test_corpus_d6_is_m_curve():
    doc = corpus.example("d6-search-best")
    payload = pipeline.analyze_document(doc)
    assert payload["topology"]["components"] == 11
    assert payload["mCurve"] is True


# --- CLI


def test_cli_invariants_spot_values():
    out = json.loads(cli("invariants", "--n", "3", "--d", "4"))
    assert out["chi"] == 24
    assert out["sign"] == -16
    assert out["b"] == 24
    assert out["h11"] == 20


def test_cli_analyze_d3_mcurve():
    out = json.loads(cli("analyze", "example:d3-mcurve"))
    assert out["topology"]["components"] == 2
    assert out["mCurve"] is True


def test_cli_validate_bad_document_exit_1(tmp_path):
    bad = {
        "schema": "patchwork/1",
        "dim": 2,
        "degree": 1,
        "cells": [
            [[0, 0], [1, 0], [0, 1]],
            [[0, 0], [1, 0], [0, 1]],
        ],
        "signs": {"0,0": 1, "1,0": 1, "0,1": 1},
    }
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(bad))
    out = cli("validate", str(path), expect=1)
    report = json.loads(out)
    assert not report["valid"]
    assert report["violations"]


def test_cli_regularity_check_pinwheel():
    out = json.loads(cli("regularity", "check", "example:pinwheel-nonregular"))
    assert out["status"] == "nonregular"
    assert out["certificate"]["inequalities"]


def test_cli_regularity_refine(tmp_path):
    doc = {
        "schema": "patchwork/1",
        "dim": 2,
        "degree": 2,
        "cells": [[[0, 0], [2, 0], [0, 2]]],
        "signs": {"0,0": 1, "2,0": 1, "0,2": 1},
    }
    path = tmp_path / "coarse.json"
    path.write_text(json.dumps(doc))
    out = json.loads(cli("regularity", "refine", str(path)))
    assert len(out["cells"]) == 4


def test_cli_search_writes_results(tmp_path):
    outdir = tmp_path / "results"
    out = json.loads(
        cli(
            "search",
            "--degree",
            "3",
            "--mode",
            "exhaustive",
            "--out",
            str(outdir),
        )
    )
    assert out["bestScore"] == 2
    index = json.loads((outdir / "index.json").read_text())
    assert index["instances"]
    best = json.loads((outdir / "best-0.json").read_text())
    assert best["score"] == 2


def test_cli_build_svg_and_json(tmp_path):
    svg_path = tmp_path / "curve.svg"
    out = json.loads(cli("build", "example:d2-oval", "--svg", str(svg_path)))
    assert out["projective"]["pieces"]
    assert svg_path.read_text().startswith("<svg")


# --- service


def test_service_analyze_degree_one(client):
    t = grid_triangulation_2d(1)
    doc = document_for(t, SignDistribution({v: 1 for v in t.vertex_set}))
    r = client.post("/api/v1/analyze", json=doc.to_json())
    assert r.status_code == 200
    body = r.json()
    assert body["topology"]["components"] == 1
    assert body["topology"]["oneSided"] == 1


def test_service_examples_listing(client):
    r = client.get("/api/v1/examples")
    ids = [e["id"] for e in r.json()["examples"]]
    for required in ("pinwheel-nonregular", "d3-mcurve", "d6-search-best"):
        assert required in ids


def test_service_example_fetch(client):
    r = client.get("/api/v1/examples/d3-mcurve")
    assert r.status_code == 200
    assert r.json()["degree"] == 3
    assert client.get("/api/v1/examples/nope").status_code == 404


def test_service_regularity_pinwheel(client):
    r = client.post(
        "/api/v1/regularity", json=corpus.example("pinwheel-nonregular").to_json()
    )
    assert r.status_code == 200
    assert r.json()["status"] == "nonregular"


def test_service_malformed_body(client):
    r = client.post("/api/v1/analyze", json={"nope": 1})
    assert r.status_code == 400
    body = r.json()
    assert body["code"] == "invalid-argument"
    assert "pointer" in body


def test_service_invariants(client):
    r = client.get("/api/v1/invariants", params={"n": 2, "d": 6})
    body = r.json()
    assert body["b"] == 22
    assert body["harnack"] == 11


def test_service_statelessness(client):
    doc = corpus.example("d2-oval").to_json()
    first = client.post("/api/v1/analyze", json=doc).text
    client.get("/api/v1/examples")
    client.get("/api/v1/invariants", params={"n": 3, "d": 4})
    second = client.post("/api/v1/analyze", json=doc).text
    assert first == second


def test_cli_service_byte_identical(client):
    for name in ("d2-oval", "d3-mcurve"):
        doc = corpus.example(name)
        srv = client.post("/api/v1/analyze", json=doc.to_json()).text
        out = cli("analyze", f"example:{name}")
        assert out.strip() == srv
    srv = client.get("/api/v1/invariants", params={"n": 3, "d": 4}).text
    out = cli("invariants", "--n", "3", "--d", "4")
    assert out.strip() == srv


def test_service_analyze_latency_d6(client):
    doc = corpus.example("d6-search-best").to_json()
    client.post("/api/v1/analyze", json=doc)  # warm imports
    t0 = time.perf_counter()
    r = client.post("/api/v1/analyze", json=doc)
    dt = time.perf_counter() - t0
    assert r.status_code == 200
    assert dt < 0.2, f"analyze at d=6 took {dt * 1000:.0f} ms"


# --- renderers


def test_svg_deterministic():
    t = grid_triangulation_2d(2)
    sigma = SignDistribution({v: (-1 if v == (1, 1) else 1) for v in t.vertex_set})
    soc = extend_signs(t, sigma)
    pc = projectivize(extract_hypersurface(soc))
    a = render_svg(soc, pc)
    b = render_svg(soc, pc)
    assert a == b
    assert "<svg" in a and "polyline" in a and "circle" in a


def test_obj_emits_pieces_and_identifications():
    t = staircase_triangulation_3d(2)
    sigma = SignDistribution({v: 1 for v in t.vertex_set})
    pc = projectivize(extract_hypersurface(extend_signs(t, sigma)))
    text, sidecar = render_obj(pc)
    assert text.startswith("#")
    assert "v " in text and "f " in text
    assert sidecar["identifiedVertexPairs"]


def test_complex_json_uses_exact_rationals():
    t = grid_triangulation_2d(1)
    pc = projectivize(
        extract_hypersurface(extend_signs(t, SignDistribution({v: 1 for v in t.vertex_set})))
    )
    data = pc.to_json()
    for piece in data["pieces"]:
        for point in piece:
            for c in point:
                assert isinstance(c, int) or ("/" in c)
