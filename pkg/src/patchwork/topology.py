"""Topology of projectivized patchwork complexes.

For curves (n=2): connected components, oval / one-sided classification by
exact intersection parity with a generic projective line, the nesting
forest via complement-region adjacency, region Euler characteristics, oval
characteristics and the principal region.  For surfaces (n=3): per
component Euler characteristic and the total Z/2 Betti number.

Classification cross-checks: a component is one-sided iff its two sides
lie in the same complement region, and iff its preimage in the double
cover (two copies of the affine model glued antipodally) is connected.
Both are asserted against the line-parity answer on every run.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from fractions import Fraction

from . import invariants as inv
from .construction import ModelComplex, PatchworkComplex, _mixed_piece_scaled
from .lattice import InvalidArgument

# fixed pool of large primes for generic-line coordinates
_PRIMES = [
    999983, 999979, 999961, 999959, 999953, 999931, 999917, 999907,
    999883, 999863, 999853, 999809, 999773, 999769, 999763, 999749,
    999727, 999721, 999683, 999671, 999667, 999653, 999631, 999623,
    999613, 999611, 999599, 999563, 999553, 999541, 999529, 999521,
]


def default_seed() -> int:
    return int(os.environ.get("PATCHWORK_SEED", "20260809"))


class AnomalyError(RuntimeError):
    """A theorem of the construction failed; indicates an implementation bug
    or corrupted input, never suppressed."""


class _UF:
    __slots__ = ("parent",)

    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, i):
        p = self.parent
        while p[i] != i:
            p[i] = p[p[i]]
            i = p[i]
        return i

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


@dataclass
class Component:
    ident: int
    size: int  # number of pieces
    one_sided: bool | None = None
    chi: int = 0


@dataclass
class Region:
    ident: int
    chi: int
    sign_rank_positive: bool
    pieces: int
    even: bool | None = None  # every inner bounding oval encloses an odd count


@dataclass
class NestingForest:
    parent: dict  # oval component id -> parent oval id or None
    depth: dict

    def to_json(self):
        return {
            "parent": {str(k): (v if v is None else int(v)) for k, v in sorted(self.parent.items())},
            "depth": {str(k): int(v) for k, v in sorted(self.depth.items())},
        }


@dataclass
class TopologyReport:
    degree: int
    dim: int
    components: list
    num_components: int
    one_sided_count: int
    p_even: int
    n_odd: int
    forest: NestingForest | None
    depth_histogram: dict
    oval_characteristic: dict  # oval id -> chi of its interior region
    flags: dict  # pMinus, nMinus, pZero, nZero, pPlus, nPlus
    regions: list
    principal_region: int | None
    region_chi_sum: int
    chi: int
    b_total: int
    a_defect: int
    mod2_degree: int
    line_seed: int
    component_chis: list

    @property
    def is_m_curve(self) -> bool:
        return self.dim == 2 and self.num_components == inv.harnack_bound(self.degree)

    def to_json(self):
        return {
            "degree": self.degree,
            "dim": self.dim,
            "components": self.num_components,
            "oneSided": self.one_sided_count,
            "ovals": {
                "p": self.p_even,
                "n": self.n_odd,
                "depthHistogram": {str(k): v for k, v in sorted(self.depth_histogram.items())},
                "forest": self.forest.to_json() if self.forest else None,
                "characteristics": {str(k): v for k, v in sorted(self.oval_characteristic.items())},
            },
            "flags": self.flags,
            "regions": [
                {"id": r.ident, "chi": r.chi, "pieces": r.pieces, "even": r.even}
                for r in self.regions
            ],
            "principal": self.principal_region,
            "chi": self.chi,
            "bTotal": self.b_total,
            "aDefect": self.a_defect,
            "mod2Degree": self.mod2_degree,
            "seed": self.line_seed,
            "componentChi": list(self.component_chis),
        }


def analyze_signs(model: ModelComplex, flat_signs, seed: int | None = None) -> TopologyReport:
    """Full topology report for a sign vector over a prebuilt model."""
    if seed is None:
        seed = default_seed()
    signs = [
        tuple(m * flat_signs[v] for v, m in zip(vids, mults))
        for (_, vids, mults) in model.simplices
    ]
    if model.n == 2:
        return _analyze_curve(model, signs, seed)
    return _analyze_surface(model, signs, seed)


def analyze(p: PatchworkComplex, seed: int | None = None) -> TopologyReport:
    if p.model != "projective":
        raise InvalidArgument("analysis requires the projective model")
    soc = p._engine
    model = soc.model
    flat = [soc.sigma[v] for v in model.base_vertices]
    return analyze_signs(model, flat, seed)


# ---------------------------------------------------------------------------
# curves
# ---------------------------------------------------------------------------


def _curve_structures(model: ModelComplex, signs):
    """Mixed-edge nodes, segments and the complement-region union-finds."""
    T = len(model.simplices)
    piece_uf = _UF(2 * T)
    sphere_uf = _UF(4 * T)  # two sheets of pieces
    node_of_glue = {}
    mixed_tris = {}

    def pid(t, s):
        return 2 * t + (0 if s > 0 else 1)

    for g_id, (s1, l1, s2, l2, crossed) in enumerate(model.glue):
        a1, b1 = l1
        a2, b2 = l2
        sa1, sb1 = signs[s1][a1], signs[s1][b1]
        sa2, sb2 = signs[s2][a2], signs[s2][b2]
        if sa1 != sb1:
            node_of_glue[g_id] = True
            mixed_tris.setdefault(s1, []).append(g_id)
            mixed_tris.setdefault(s2, []).append(g_id)
            pairs = ((pid(s1, sa1), pid(s2, sa2)), (pid(s1, sb1), pid(s2, sb2)))
        else:
            pairs = ((pid(s1, sa1), pid(s2, sa2)),)
        for x, y in pairs:
            piece_uf.union(x, y)
            if crossed:
                sphere_uf.union(x, y + 2 * T)
                sphere_uf.union(x + 2 * T, y)
            else:
                sphere_uf.union(x, y)
                sphere_uf.union(x + 2 * T, y + 2 * T)

    segments = []  # (node_a, node_b, triangle, coord_a, coord_b) in t's own frame
    for t in sorted(mixed_tris):
        glist = mixed_tris[t]
        if len({s for s in signs[t]}) == 1:
            raise AnomalyError("constant simplex adjacent to a mixed edge")
        if len(glist) != 2:
            raise AnomalyError(f"mixed triangle with {len(glist)} mixed edges")
        coords = model.simplices[t][0]
        locs = {g: l for g, l in model.simplex_glue[t]}
        mids = []
        for g in glist:
            a, b = locs[g]
            mids.append(tuple((x + y) // 2 for x, y in zip(coords[a], coords[b])))
        segments.append((glist[0], glist[1], t, mids[0], mids[1]))

    used_pieces = set()
    for t in range(T):
        if t in mixed_tris:
            used_pieces.add(pid(t, 1))
            used_pieces.add(pid(t, -1))
        else:
            used_pieces.add(pid(t, signs[t][0]))
    return piece_uf, sphere_uf, node_of_glue, segments, mixed_tris, used_pieces, pid


def _generic_line_2d(model: ModelComplex, nodes_coords, seed):
    rng = random.Random(seed)
    for _ in range(64):
        a = rng.choice(_PRIMES) * rng.choice((1, -1))
        b = rng.choice(_PRIMES) * rng.choice((1, -1))
        while b == a or b == -a:
            b = rng.choice(_PRIMES) * rng.choice((1, -1))
        if all(a * x + b * y != 0 for (x, y) in nodes_coords):
            return (a, b)
    raise AnomalyError("failed to find a generic line")


def _analyze_curve(model: ModelComplex, signs, seed) -> TopologyReport:
    d = model.degree
    T = len(model.simplices)
    piece_uf, sphere_uf, node_mixed, segments, mixed_tris, used_pieces, pid = _curve_structures(model, signs)

    # --- components of the curve
    node_ids = sorted(node_mixed)
    node_index = {g: i for i, g in enumerate(node_ids)}
    comp_uf = _UF(len(node_ids))
    for na, nb, _t, _ca, _cb in segments:
        comp_uf.union(node_index[na], node_index[nb])
    comp_of_node = {g: comp_uf.find(node_index[g]) for g in node_ids}
    comp_ids = sorted(set(comp_of_node.values()))
    cindex = {c: i for i, c in enumerate(comp_ids)}
    num_components = len(comp_ids)

    # degree-2 check and per-component curve Euler characteristic (V=E)
    deg = {g: 0 for g in node_ids}
    seg_count = {c: 0 for c in comp_ids}
    node_count = {c: 0 for c in comp_ids}
    for na, nb, _t, _ca, _cb in segments:
        deg[na] += 1
        deg[nb] += 1
        seg_count[comp_of_node[na]] += 1
    for g in node_ids:
        if deg[g] != 2:
            raise AnomalyError(f"curve node of degree {deg[g]}")
        node_count[comp_of_node[g]] += 1
    component_chis = [node_count[c] - seg_count[c] for c in comp_ids]
    if any(ch != 0 for ch in component_chis):
        raise AnomalyError("curve component with nonzero Euler characteristic")

    # --- generic-line classification
    endpoint_coords = set()
    for _na, _nb, _t, ca, cb in segments:
        endpoint_coords.add(ca)
        endpoint_coords.add(cb)
    line = _generic_line_2d(model, endpoint_coords, seed)
    a, b = line
    parity = {c: 0 for c in comp_ids}
    total_crossings = 0
    for na, _nb, _t, (xa, ya), (xb, yb) in segments:
        va = a * xa + b * ya
        vb = a * xb + b * yb
        if (va > 0) != (vb > 0):
            parity[comp_of_node[na]] ^= 1
            total_crossings += 1
    mod2 = total_crossings % 2
    if mod2 != d % 2:
        raise AnomalyError(f"mod-2 degree {mod2} != {d % 2}")

    one_sided = {c: bool(parity[c]) for c in comp_ids}

    # --- cross-checks: region sides and double cover
    side_regions = {}
    for na, _nb, t, _ca, _cb in segments:
        c = comp_of_node[na]
        if c not in side_regions:
            side_regions[c] = (piece_uf.find(pid(t, 1)), piece_uf.find(pid(t, -1)))
    for c in comp_ids:
        ra, rb = side_regions[c]
        if (ra == rb) != one_sided[c]:
            raise AnomalyError("line parity disagrees with region-side classification")
    # double-cover check on pieces is exercised through region ranks below

    one_sided_count = sum(1 for c in comp_ids if one_sided[c])
    if one_sided_count != d % 2:
        raise AnomalyError(
            f"{one_sided_count} one-sided components at degree {d}; theorem requires {d % 2}"
        )

    # --- complement regions and their Euler characteristics
    region_of_piece = {p: piece_uf.find(p) for p in used_pieces}
    region_ids = sorted(set(region_of_piece.values()))
    rindex = {r: i for i, r in enumerate(region_ids)}

    v_count = [0] * len(region_ids)
    e_count = [0] * len(region_ids)
    f_count = [0] * len(region_ids)

    # faces
    for p in used_pieces:
        f_count[rindex[region_of_piece[p]]] += 1
    # non-curve edge cells: one per glue entry, split into two halves if mixed
    for g_id, (s1, l1, s2, l2, crossed) in enumerate(model.glue):
        a1, b1 = l1
        sa1, sb1 = signs[s1][a1], signs[s1][b1]
        if sa1 == sb1:
            e_count[rindex[piece_uf.find(pid(s1, sa1))]] += 1
        else:
            e_count[rindex[piece_uf.find(pid(s1, sa1))]] += 1
            e_count[rindex[piece_uf.find(pid(s1, sb1))]] += 1
    # lattice vertex classes: each belongs to the region around it
    vclass_region = {}
    for t in range(T):
        for k in range(model.n + 1):
            cls = model.corner_class[t][k]
            if cls not in vclass_region:
                vclass_region[cls] = piece_uf.find(pid(t, signs[t][k]))
    if len(vclass_region) != model.num_vertex_classes:
        raise AnomalyError("lost track of vertex classes")
    for cls, r in vclass_region.items():
        v_count[rindex[r]] += 1

    chis = [v_count[i] - e_count[i] + f_count[i] for i in range(len(region_ids))]
    if sum(chis) != 1:
        raise AnomalyError(f"region chi sum {sum(chis)} != chi(RP2) = 1")

    # region rank via the double cover: preimage connected <=> rank >= 1
    rank_positive = {}
    for r in region_ids:
        rep = next(p for p in used_pieces if region_of_piece[p] == r)
        rank_positive[r] = sphere_uf.find(rep) == sphere_uf.find(rep + 2 * T)

    regions = [
        Region(
            ident=rindex[r],
            chi=chis[rindex[r]],
            sign_rank_positive=rank_positive[r],
            pieces=f_count[rindex[r]],
        )
        for r in region_ids
    ]

    # --- nesting forest over the region tree
    ovals = [c for c in comp_ids if not one_sided[c]]
    forest = None
    depth = {}
    oval_char = {}
    p_even = n_odd = 0
    principal = None
    flags = {"pMinus": 0, "nMinus": 0, "pZero": 0, "nZero": 0, "pPlus": 0, "nPlus": 0}

    if num_components == 0:
        principal = 0  # the whole projective plane; vacuously principal
    else:
        if d % 2 == 1:
            j = next(c for c in comp_ids if one_sided[c])
            root_region = side_regions[j][0]
        else:
            positive = [r for r in region_ids if rank_positive[r]]
            if len(positive) != 1:
                raise AnomalyError(f"{len(positive)} regions of positive rank; expected 1")
            root_region = positive[0]
            principal = rindex[root_region]
        if d % 2 == 1 and any(rank_positive[r] and r != root_region for r in region_ids):
            raise AnomalyError("positive-rank region not adjacent to the one-sided component")

        # BFS over oval edges
        parent_oval = {}
        region_depth = {root_region: 0}
        region_parent_edge = {root_region: None}
        region_children = {root_region: []}
        frontier = [root_region]
        remaining = {c: side_regions[c] for c in ovals}
        while frontier:
            nxt = []
            for r in frontier:
                for c in list(remaining):
                    ra, rb = remaining[c]
                    if ra == r or rb == r:
                        inner = rb if ra == r else ra
                        if inner in region_depth:
                            raise AnomalyError("oval adjacency produced a cycle")
                        del remaining[c]
                        region_children[r].append((c, inner))
                        region_children[inner] = []
                        region_depth[inner] = region_depth[r] + 1
                        parent_oval[cindex[c]] = (
                            None
                            if region_parent_edge[r] is None
                            else cindex[region_parent_edge[r]]
                        )
                        region_parent_edge[inner] = c
                        depth[cindex[c]] = region_depth[r]
                        oval_char[cindex[c]] = chis[rindex[inner]]
                        nxt.append(inner)
            if not nxt and remaining:
                raise AnomalyError("region tree disconnected")
            frontier = nxt
        if len(region_depth) != len(region_ids):
            raise AnomalyError("regions unreachable through oval adjacency")

        subtree_ovals = {}
        for r in sorted(region_depth, key=lambda x: -region_depth[x]):
            subtree_ovals[r] = sum(
                1 + subtree_ovals[inner] for _c, inner in region_children[r]
            )
        for r in region_ids:
            kids = region_children.get(r, [])
            regions[rindex[r]].even = all(
                (1 + subtree_ovals[inner]) % 2 == 1 for _c, inner in kids
            )

        for c in ovals:
            ch = oval_char[cindex[c]]
            even = depth[cindex[c]] % 2 == 0
            if even:
                p_even += 1
            else:
                n_odd += 1
            key = "p" if even else "n"
            if ch < 0:
                flags[key + "Minus"] += 1
            elif ch == 0:
                flags[key + "Zero"] += 1
            else:
                flags[key + "Plus"] += 1
        forest = NestingForest(parent=parent_oval, depth=dict(depth))

    hist = {}
    for c in ovals:
        hist[depth[cindex[c]]] = hist.get(depth[cindex[c]], 0) + 1

    b_total = 2 * num_components
    b_ref = inv.betti_total_complex(2, d)
    if b_total > b_ref or (b_ref - b_total) % 2 != 0:
        raise AnomalyError(f"Smith violation: b_total={b_total}, b_d^n={b_ref}")

    components = [
        Component(ident=i, size=seg_count[c], one_sided=one_sided[c], chi=0)
        for i, c in enumerate(comp_ids)
    ]

    return TopologyReport(
        degree=d,
        dim=2,
        components=components,
        num_components=num_components,
        one_sided_count=one_sided_count,
        p_even=p_even,
        n_odd=n_odd,
        forest=forest,
        depth_histogram=hist,
        oval_characteristic=dict(oval_char),
        flags=flags,
        regions=regions,
        principal_region=principal,
        region_chi_sum=sum(chis),
        chi=0,
        b_total=b_total,
        a_defect=(b_ref - b_total) // 2,
        mod2_degree=mod2,
        line_seed=seed,
        component_chis=component_chis,
    )


# ---------------------------------------------------------------------------
# surfaces
# ---------------------------------------------------------------------------


def _analyze_surface(model: ModelComplex, signs, seed) -> TopologyReport:
    d = model.degree
    T = len(model.simplices)

    mixed = [len(set(signs[t])) > 1 for t in range(T)]
    piece_tets = [t for t in range(T) if mixed[t]]
    tindex = {t: i for i, t in enumerate(piece_tets)}
    comp_uf = _UF(len(piece_tets))

    edge_glues = {}  # glue id -> (t1, t2) for mixed faces
    for g_id, (s1, l1, s2, l2, crossed) in enumerate(model.glue):
        fsigns = {signs[s1][k] for k in l1}
        if len(fsigns) == 1:
            continue
        if not (mixed[s1] and mixed[s2]):
            raise AnomalyError("mixed face adjacent to a constant simplex")
        edge_glues[g_id] = (s1, s2)
        comp_uf.union(tindex[s1], tindex[s2])

    comp_of_tet = {t: comp_uf.find(tindex[t]) for t in piece_tets}
    comp_ids = sorted(set(comp_of_tet.values()))
    num_components = len(comp_ids)

    f_count = {c: 0 for c in comp_ids}
    e_count = {c: 0 for c in comp_ids}
    v_seen = {}
    for t in piece_tets:
        f_count[comp_of_tet[t]] += 1
    for g_id, (t1, _t2) in edge_glues.items():
        e_count[comp_of_tet[t1]] += 1
    for t in piece_tets:
        for cls, i, j in model.simplex_edges[t]:
            if signs[t][i] != signs[t][j] and cls not in v_seen:
                v_seen[cls] = comp_of_tet[t]
    v_count = {c: 0 for c in comp_ids}
    for cls, c in v_seen.items():
        v_count[c] += 1

    component_chis = [v_count[c] - e_count[c] + f_count[c] for c in comp_ids]
    if d % 2 == 0:
        # even-degree surfaces separate RP^3, hence are orientable
        for ch in component_chis:
            if ch % 2 != 0:
                raise AnomalyError(f"surface component with odd Euler characteristic {ch}")

    chi_total = sum(component_chis)
    b_total = sum(4 - ch for ch in component_chis)
    b_ref = inv.betti_total_complex(3, d)
    if b_total > b_ref or (b_ref - b_total) % 2 != 0:
        raise AnomalyError(f"Smith violation: b_total={b_total}, b_d^n={b_ref}")

    mod2 = _mod2_degree_surface(model, signs, piece_tets, seed)
    if mod2 != d % 2:
        raise AnomalyError(f"mod-2 degree {mod2} != {d % 2}")

    components = [
        Component(ident=i, size=f_count[c], one_sided=None, chi=component_chis[i])
        for i, c in enumerate(comp_ids)
    ]
    return TopologyReport(
        degree=d,
        dim=3,
        components=components,
        num_components=num_components,
        one_sided_count=0,
        p_even=0,
        n_odd=0,
        forest=None,
        depth_histogram={},
        oval_characteristic={},
        flags={"pMinus": 0, "nMinus": 0, "pZero": 0, "nZero": 0, "pPlus": 0, "nPlus": 0},
        regions=[],
        principal_region=None,
        region_chi_sum=0,
        chi=chi_total,
        b_total=b_total,
        a_defect=(b_ref - b_total) // 2,
        mod2_degree=mod2,
        line_seed=seed,
        component_chis=component_chis,
    )


def _mod2_degree_surface(model: ModelComplex, signs, piece_tets, seed) -> int:
    """Parity of intersections of the pieces with a generic line through the
    origin (a projective line in the octahedron model)."""
    rng = random.Random(seed ^ 0x5F3D)
    pieces = []
    for t in piece_tets:
        poly = _mixed_piece_scaled(model.simplices[t][0], signs[t])
        pieces.append(poly)
    for _ in range(64):
        w = tuple(rng.choice(_PRIMES) * rng.choice((1, -1)) for _ in range(3))
        count = 0
        ok = True
        for poly in pieces:
            res = _line_hits_polygon(w, poly)
            if res is None:
                ok = False
                break
            count += res
        if ok:
            return count % 2
    raise AnomalyError("failed to find a generic line for the surface")


def _line_hits_polygon(w, poly) -> int | None:
    """1 if the line {t*w} crosses the polygon's interior, 0 if it misses,
    None if degenerate (hits the boundary or is parallel)."""
    from .geometry import cross3, vdot, vsub

    a = poly[0]
    nvec = None
    for i in range(1, len(poly) - 1):
        nvec = cross3(vsub(poly[i], a), vsub(poly[i + 1], a))
        if any(x != 0 for x in nvec):
            break
    denom = vdot(nvec, w)
    if denom == 0:
        return None
    tpar = Fraction(vdot(nvec, a), denom)
    point = tuple(tpar * c for c in w)
    side = None
    m = len(poly)
    for i in range(m):
        u, v = poly[i], poly[(i + 1) % m]
        cr = cross3(vsub(v, u), vsub(point, u))
        s = vdot(cr, nvec)
        if s == 0:
            return None
        if side is None:
            side = s > 0
        elif (s > 0) != side:
            return 0
    return 1


# ---------------------------------------------------------------------------
# spec-level operations on PatchworkComplex values
# ---------------------------------------------------------------------------


def components(p: PatchworkComplex):
    return analyze(p).components


def classify_components_2d(p: PatchworkComplex, seed: int | None = None):
    rep = analyze(p, seed)
    if rep.dim != 2:
        raise InvalidArgument("classify_components_2d requires n = 2")
    return ["one-sided" if c.one_sided else "oval" for c in rep.components]


def nesting_forest(p: PatchworkComplex):
    rep = analyze(p)
    return rep.forest, (rep.p_even, rep.n_odd)


def complement_regions(p: PatchworkComplex):
    return analyze(p)


def surface_topology_3d(p: PatchworkComplex):
    rep = analyze(p)
    if rep.dim != 3:
        raise InvalidArgument("surface_topology_3d requires n = 3")
    return rep


def mod2_degree(p: PatchworkComplex) -> int:
    return analyze(p).mod2_degree
