"""Sign-distribution search: exhaustive audits, random sampling, hill-climbs.

Sign vectors are quotiented by global negation (the complex only depends on
sign changes): the representative of a class is the lexicographically
smaller of (sigma, -sigma).  Searches are deterministic given their seed,
and every visited instance runs through the full restriction oracle; a
violation aborts the run with a serialized reproducer, since the checked
statements are theorems for every T-hypersurface.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from pathlib import Path
from random import Random

from . import restrictions as restr
from . import topology
from .construction import ModelComplex, SignDistribution
from .lattice import InvalidArgument, Triangulation

DEFAULT_CAP = 1 << 26
DEFAULT_BUDGET = 20000


def _cap() -> int:
    return int(os.environ.get("PATCHWORK_CAP", str(DEFAULT_CAP)))


@dataclass(frozen=True)
class SearchTask:
    triangulation: Triangulation
    mode: str = "exhaustive"  # exhaustive | random | hillclimb
    seed: int = 0
    samples: int = 10000
    budget: int = DEFAULT_BUDGET
    objective: str = "max-components"  # max-components | max-p-minus-n | min-p-minus-n | violation-hunt
    filters: tuple = ()  # e.g. (("minComponents", 2), ("mCurveOnly", True))
    keep_best: int = 3
    workers: int = 1
    cap: int = 0  # 0 -> environment / default
    flip_triangulations: bool = False  # hillclimb only: try edge flips on plateaus


@dataclass
class SearchResult:
    mode: str
    seed: int
    visited: int
    best_score: int
    best: list  # list of {"signs": ..., "report": ...}
    component_histogram: dict
    p_minus_n_mod8_histogram: dict
    anomalies: list = field(default_factory=list)

    def to_json(self):
        return {
            "mode": self.mode,
            "seed": self.seed,
            "visited": self.visited,
            "bestScore": self.best_score,
            "best": self.best,
            "componentHistogram": {str(k): v for k, v in sorted(self.component_histogram.items())},
            "pMinusNMod8Histogram": {str(k): v for k, v in sorted(self.p_minus_n_mod8_histogram.items())},
            "anomalies": self.anomalies,
        }


class SearchAnomaly(RuntimeError):
    def __init__(self, message, reproducer):
        super().__init__(message)
        self.reproducer = reproducer


def _objective_fn(name):
    if name == "max-components":
        return lambda rep: rep.num_components
    if name == "max-p-minus-n":
        return lambda rep: rep.p_even - rep.n_odd
    if name == "min-p-minus-n":
        return lambda rep: -(rep.p_even - rep.n_odd)
    if name == "violation-hunt":
        return lambda rep: 0
    raise InvalidArgument(f"unknown objective {name}")


def signs_to_distribution(model: ModelComplex, bits) -> SignDistribution:
    return SignDistribution(
        {v: (1 if s > 0 else -1) for v, s in zip(model.base_vertices, bits)}
    )


def _canonical_class(bits):
    neg = tuple(-b for b in bits)
    return bits if bits <= neg else neg


def _passes_filters(rep, filters) -> bool:
    for key, value in filters:
        if key == "minComponents" and rep.num_components < value:
            return False
        if key == "maxComponents" and rep.num_components > value:
            return False
        if key == "mCurveOnly" and value and not rep.is_m_curve:
            return False
    return True


def run(task: SearchTask, reproducer_dir: str | None = None) -> SearchResult:
    model = ModelComplex(task.triangulation)
    k = len(model.base_vertices)
    score_fn = _objective_fn(task.objective)
    cap = task.cap or _cap()

    comp_hist = {}
    mod8_hist = {}
    best = []
    best_score = None
    visited = 0

    def consider(bits, current_model=None):
        nonlocal best_score, visited
        visited += 1
        rep = topology.analyze_signs(current_model or model, bits)
        rr = restr.check_all(rep)
        if rr.critical_anomaly:
            doc = {
                "signs": list(bits),
                "vertices": [list(v) for v in (current_model or model).base_vertices],
                "failures": [e.to_json() for e in rr.anomalies],
            }
            if reproducer_dir:
                Path(reproducer_dir).mkdir(parents=True, exist_ok=True)
                path = Path(reproducer_dir) / f"anomaly-{visited}.json"
                path.write_text(json.dumps(doc, indent=2, sort_keys=True))
            raise SearchAnomaly("restriction violated on a constructed T-hypersurface", doc)
        comp_hist[rep.num_components] = comp_hist.get(rep.num_components, 0) + 1
        if rep.dim == 2:
            m8 = (rep.p_even - rep.n_odd) % 8
            mod8_hist[m8] = mod8_hist.get(m8, 0) + 1
        score = score_fn(rep)
        if best_score is None or score > best_score:
            best_score = score
        if _passes_filters(rep, task.filters) and (
            len(best) < task.keep_best or score > best[-1][0]
        ):
            best.append((score, list(bits), rep.to_json()))
            best.sort(key=lambda x: -x[0])
            del best[task.keep_best:]
        return score

    if task.mode == "exhaustive":
        if 2 ** k > cap:
            raise InvalidArgument(
                f"exhaustive space 2^{k} exceeds cap {cap}; use random or hillclimb mode"
            )
        if task.workers > 1:
            return _run_exhaustive_parallel(task, model, k, score_fn, reproducer_dir)
        # fix the first sign to +1: one representative per negation class
        for code in range(1 << (k - 1)):
            consider(_bits_from_code(code, k))
    elif task.mode == "random":
        rng = Random(task.seed)
        seen = set()
        for _ in range(task.samples):
            bits = tuple(rng.choice((1, -1)) for _ in range(k))
            bits = _canonical_class(bits)
            if bits in seen:
                continue
            seen.add(bits)
            consider(bits)
    elif task.mode == "hillclimb":
        rng = Random(task.seed)
        spent = 0
        current_model = model
        while spent < task.budget:
            if task.flip_triangulations and current_model is not model and rng.random() < 0.5:
                current_model = model  # return to the input triangulation
            bits = list(_canonical_class(tuple(rng.choice((1, -1)) for _ in range(k))))
            current = consider(tuple(bits), current_model)
            spent += 1
            improved = True
            while improved and spent < task.budget:
                improved = False
                order = list(range(k))
                rng.shuffle(order)
                for j in order:
                    if spent >= task.budget:
                        break
                    bits[j] = -bits[j]
                    score = consider(tuple(bits), current_model)
                    spent += 1
                    if score > current:
                        current = score
                        improved = True
                    else:
                        bits[j] = -bits[j]
            if task.flip_triangulations and spent < task.budget:
                current_model = _flipped_model(current_model, rng) or current_model
    else:
        raise InvalidArgument(f"unknown search mode {task.mode}")

    return SearchResult(
        mode=task.mode,
        seed=task.seed,
        visited=visited,
        best_score=best_score if best_score is not None else 0,
        best=[{"score": s, "signs": b, "report": r} for s, b, r in best],
        component_histogram=comp_hist,
        p_minus_n_mod8_histogram=mod8_hist,
    )


def _bits_from_code(code: int, k: int):
    # vertex 0 pinned to +1; remaining k-1 signs from the code bits
    out = [1]
    for j in range(k - 1):
        out.append(-1 if (code >> j) & 1 else 1)
    return tuple(out)


def _flipped_model(model: ModelComplex, rng: Random) -> ModelComplex | None:
    """One random edge flip of the triangulation, revalidated.

    Optional triangulation moves for hill-climbs; the vertex set is
    unchanged, so sign vectors carry over.
    """
    from .builders import edge_flip, flippable_edges
    from .lattice import validate_triangulation_fast

    t = model.triangulation
    candidates = flippable_edges(t)
    if not candidates:
        return None
    flipped = edge_flip(t, candidates[rng.randrange(len(candidates))])
    if not validate_triangulation_fast(flipped).valid:
        return None
    if tuple(flipped.vertex_set) != tuple(t.vertex_set):
        return None
    return ModelComplex(flipped)


def _exhaustive_shard(args):
    """Worker for parallel exhaustive runs: scans [start, stop) codes."""
    doc_cells, dim, degree, start, stop, objective = args
    from .documents import PatchworkDocument

    doc = PatchworkDocument(dim=dim, degree=degree, cells=doc_cells, signs=None, metadata={})
    model = ModelComplex(doc.triangulation())
    score_fn = _objective_fn(objective)
    k = len(model.base_vertices)
    comp_hist = {}
    mod8_hist = {}
    best = None
    anomaly = None
    for code in range(start, stop):
        bits = _bits_from_code(code, k)
        rep = topology.analyze_signs(model, bits)
        rr = restr.check_all(rep)
        if rr.critical_anomaly:
            anomaly = {
                "signs": list(bits),
                "failures": [e.to_json() for e in rr.anomalies],
            }
            break
        comp_hist[rep.num_components] = comp_hist.get(rep.num_components, 0) + 1
        if rep.dim == 2:
            m8 = (rep.p_even - rep.n_odd) % 8
            mod8_hist[m8] = mod8_hist.get(m8, 0) + 1
        score = score_fn(rep)
        if best is None or score > best[0]:
            best = (score, list(bits), rep.to_json())
    return comp_hist, mod8_hist, best, stop - start, anomaly


def _run_exhaustive_parallel(task, model, k, score_fn, reproducer_dir):
    from multiprocessing import Pool

    total = 1 << (k - 1)
    workers = max(1, task.workers)
    chunk = (total + 4 * workers - 1) // (4 * workers)
    shards = []
    doc_cells = tuple(tuple(c.vertices) for c in task.triangulation.cells)
    dim = task.triangulation.target.ambient_dim
    degree = max(max(v) for v in task.triangulation.target.vertices)
    start = 0
    while start < total:
        stop = min(start + chunk, total)
        shards.append((doc_cells, dim, degree, start, stop, task.objective))
        start = stop
    comp_hist = {}
    mod8_hist = {}
    best = []
    visited = 0
    with Pool(workers) as pool:
        for ch, m8, b, count, anomaly in pool.imap(_exhaustive_shard, shards):
            if anomaly is not None:
                if reproducer_dir:
                    Path(reproducer_dir).mkdir(parents=True, exist_ok=True)
                    (Path(reproducer_dir) / "anomaly.json").write_text(
                        json.dumps(anomaly, indent=2, sort_keys=True)
                    )
                raise SearchAnomaly("restriction violated on a constructed T-hypersurface", anomaly)
            visited += count
            for key, v in ch.items():
                comp_hist[key] = comp_hist.get(key, 0) + v
            for key, v in m8.items():
                mod8_hist[key] = mod8_hist.get(key, 0) + v
            if b is not None:
                best.append(b)
    best.sort(key=lambda x: -x[0])
    del best[task.keep_best:]
    return SearchResult(
        mode=task.mode,
        seed=task.seed,
        visited=visited,
        best_score=best[0][0] if best else 0,
        best=[{"score": s, "signs": b, "report": r} for s, b, r in best],
        component_histogram=comp_hist,
        p_minus_n_mod8_histogram=mod8_hist,
    )


def flip_neighborhood(model: ModelComplex, sigma: SignDistribution, v) -> SignDistribution:
    """Flip the sign at one vertex; incident simplices are exactly the ones
    whose piece can change."""
    v = tuple(v)
    if v not in sigma.signs:
        raise InvalidArgument(f"vertex {v} not in the sign distribution")
    return sigma.flip(v)


class IncrementalComplex:
    """Maintains the piece set of a T-curve/T-surface under sign flips,
    recomputing only the simplices incident to the flipped vertex."""

    def __init__(self, model: ModelComplex, sigma: SignDistribution):
        from .construction import _mixed_piece_scaled

        self.model = model
        self.flat = [sigma[v] for v in model.base_vertices]
        self._mixed_piece = _mixed_piece_scaled
        self.incident = [[] for _ in model.base_vertices]
        for s_id, (_, vids, _) in enumerate(model.simplices):
            for vid in set(vids):
                self.incident[vid].append(s_id)
        self.pieces = {}
        for s_id in range(len(model.simplices)):
            self._refresh(s_id)

    def _signs(self, s_id):
        _, vids, mults = self.model.simplices[s_id]
        return tuple(m * self.flat[v] for v, m in zip(vids, mults))

    def _refresh(self, s_id):
        poly = self._mixed_piece(self.model.simplices[s_id][0], self._signs(s_id))
        if poly is None:
            self.pieces.pop(s_id, None)
        else:
            self.pieces[s_id] = poly

    def flip(self, v):
        vid = self.model.vindex[tuple(v)]
        self.flat[vid] = -self.flat[vid]
        for s_id in self.incident[vid]:
            self._refresh(s_id)

    def snapshot(self):
        return dict(self.pieces)


def full_piece_map(model: ModelComplex, flat):
    """From-scratch piece map, for incremental-equality checking."""
    from .construction import _mixed_piece_scaled

    out = {}
    for s_id, (coords, vids, mults) in enumerate(model.simplices):
        signs = tuple(m * flat[v] for v, m in zip(vids, mults))
        poly = _mixed_piece_scaled(coords, signs)
        if poly is not None:
            out[s_id] = poly
    return out
