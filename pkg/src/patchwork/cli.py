"""Command line interface.

Exit codes: 0 success, 1 domain error (invalid input), 2 anomaly (a
topological restriction failed on a constructed hypersurface, which is a
theorem violation and therefore a build-stopping event).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import corpus, pipeline
from .documents import PatchworkDocument, canonical_json
from .lattice import InvalidArgument
from .search import SearchTask, run as run_search
from .topology import AnomalyError

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_ANOMALY = 2


def _load(path: str) -> PatchworkDocument:
    if path.startswith("example:"):
        return corpus.example(path.split(":", 1)[1])
    return PatchworkDocument.loads(Path(path).read_text())


def _emit(payload) -> None:
    sys.stdout.write(canonical_json(payload) + "\n")


def cmd_validate(args) -> int:
    doc = _load(args.file)
    report = pipeline.validate_document(doc)
    _emit(report)
    return EXIT_OK if report["valid"] else EXIT_DOMAIN


def cmd_regularity(args) -> int:
    doc = _load(args.file)
    if args.action == "check":
        _emit(pipeline.regularity_document(doc))
    elif args.action == "convexify":
        _emit(pipeline.convexify_document(doc))
    elif args.action == "refine":
        _emit(pipeline.refine_document(doc))
    return EXIT_OK


def cmd_build(args) -> int:
    doc = _load(args.file)
    payload = pipeline.build_document(doc)
    if args.svg:
        from .construction import extend_signs, extract_hypersurface, projectivize
        from .render import render_svg

        t = doc.triangulation()
        soc = extend_signs(t, doc.sign_distribution())
        pc = projectivize(extract_hypersurface(soc))
        Path(args.svg).write_text(render_svg(soc, pc))
    if args.obj:
        from .construction import extend_signs, extract_hypersurface, projectivize
        from .render import render_obj

        t = doc.triangulation()
        soc = extend_signs(t, doc.sign_distribution())
        pc = projectivize(extract_hypersurface(soc))
        text, sidecar = render_obj(pc)
        Path(args.obj).write_text(text)
        Path(args.obj + ".identifications.json").write_text(canonical_json(sidecar))
    _emit(payload)
    return EXIT_OK


def cmd_analyze(args) -> int:
    doc = _load(args.file)
    payload = pipeline.analyze_document(doc, seed=args.seed)
    if args.check:
        from . import restrictions as restr
        from . import topology as topo
        from .construction import build_complex

        t = doc.triangulation()
        rep = topo.analyze(build_complex(t, doc.sign_distribution()), args.seed)
        sys.stdout.write(restr.check_all(rep).table() + "\n")
    else:
        _emit(payload)
    if payload["restrictions"]["criticalAnomaly"]:
        return EXIT_ANOMALY
    return EXIT_OK


def cmd_invariants(args) -> int:
    _emit(pipeline.invariants_payload(args.n, args.d))
    return EXIT_OK


def cmd_examples(args) -> int:
    _emit(pipeline.examples_listing())
    return EXIT_OK


def cmd_search(args) -> int:
    from .builders import grid_triangulation_2d, staircase_triangulation_3d

    if args.file:
        t = _load(args.file).triangulation()
    elif args.dim == 2:
        t = grid_triangulation_2d(args.degree)
    else:
        t = staircase_triangulation_3d(args.degree)
    task = SearchTask(
        triangulation=t,
        mode=args.mode,
        seed=args.seed,
        samples=args.samples,
        budget=int(args.budget),
        objective=args.objective,
        workers=args.workers,
        flip_triangulations=args.flip_triangulations,
    )
    outdir = args.out
    try:
        result = run_search(task, reproducer_dir=outdir)
    except Exception as exc:
        from .search import SearchAnomaly

        if isinstance(exc, (SearchAnomaly, AnomalyError)):
            sys.stderr.write(f"ANOMALY: {exc}\n")
            return EXIT_ANOMALY
        raise
    if outdir:
        out = Path(outdir)
        out.mkdir(parents=True, exist_ok=True)
        index = []
        for i, entry in enumerate(result.best):
            name = f"best-{i}.json"
            (out / name).write_text(canonical_json(entry))
            index.append({"file": name, "score": entry["score"]})
        (out / "index.json").write_text(
            canonical_json({"result": result.to_json(), "instances": index})
        )
    _emit(result.to_json())
    return EXIT_OK


def cmd_serve(args) -> int:
    from .service import serve

    serve(host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="patchwork", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate a subdivision document")
    p.add_argument("file")
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("regularity", help="convexity decisions and refinements")
    p.add_argument("action", choices=["check", "convexify", "refine"])
    p.add_argument("file")
    p.set_defaults(fn=cmd_regularity)

    p = sub.add_parser("build", help="build the patchwork complex")
    p.add_argument("file")
    p.add_argument("--svg", help="write an SVG of the square model (n=2)")
    p.add_argument("--obj", help="write an OBJ of the octahedron model (n=3)")
    p.set_defaults(fn=cmd_build)

    p = sub.add_parser("analyze", help="topology + restriction report")
    p.add_argument("file")
    p.add_argument("--check", action="store_true", help="print the restriction table")
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("invariants", help="complex-hypersurface reference values")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(fn=cmd_invariants)

    p = sub.add_parser("examples", help="list packaged examples")
    p.set_defaults(fn=cmd_examples)

    p = sub.add_parser("search", help="search sign distributions")
    p.add_argument("--file", help="triangulation document (default: grid of --degree)")
    p.add_argument("--dim", type=int, default=2, choices=(2, 3))
    p.add_argument("--degree", type=int, default=4)
    p.add_argument("--mode", default="hillclimb", choices=("exhaustive", "random", "hillclimb"))
    p.add_argument("--seed", type=int, default=int(os.environ.get("PATCHWORK_SEED", "42")))
    p.add_argument("--samples", type=int, default=10000)
    p.add_argument("--budget", type=float, default=20000)
    p.add_argument(
        "--objective",
        default="max-components",
        choices=("max-components", "max-p-minus-n", "min-p-minus-n", "violation-hunt"),
    )
    p.add_argument("--out", help="results directory")
    p.add_argument("--workers", type=int, default=1, help="parallel workers (exhaustive mode)")
    p.add_argument(
        "--flip-triangulations",
        action="store_true",
        help="hillclimb: also explore triangulation edge flips",
    )
    p.set_defaults(fn=cmd_search)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8787)
    p.set_defaults(fn=cmd_serve)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (InvalidArgument, FileNotFoundError, KeyError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_DOMAIN
    except AnomalyError as exc:
        sys.stderr.write(f"ANOMALY: {exc}\n")
        return EXIT_ANOMALY


if __name__ == "__main__":
    sys.exit(main())
