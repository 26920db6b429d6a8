"""Building T-hypersurfaces from a triangulation and a sign distribution.

The model is the cross-polytope |x_1| + ... + |x_n| <= d, covered by the
2^n reflected copies of the triangulated simplex.  All coordinates are kept
scaled by 2 internally so that edge midpoints are integers; the public
complex exposes exact rationals in the unscaled model.

Signs extend to the reflected copies by sigma(e*v) = prod(e_k^{v_k}) *
sigma(v); a simplex whose vertex signs are not all equal contributes the
convex hull of the midpoints of its sign-changing edges (a midline segment
for n=2, a mid-triangle or planar mid-quadrilateral for n=3).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product

from . import geometry as geo
from .lattice import InvalidArgument, Triangulation


class SignDistribution:
    """A total map from triangulation vertices to {+1, -1}."""

    def __init__(self, signs):
        clean = {}
        for v, s in signs.items():
            if s not in (1, -1):
                raise InvalidArgument(f"sign at {v} must be +1 or -1, got {s}")
            clean[tuple(int(c) for c in v)] = int(s)
        self.signs = clean

    def __getitem__(self, v):
        return self.signs[tuple(v)]

    def __eq__(self, other):
        return isinstance(other, SignDistribution) and self.signs == other.signs

    def negate(self) -> "SignDistribution":
        return SignDistribution({v: -s for v, s in self.signs.items()})

    def flip(self, v) -> "SignDistribution":
        v = tuple(v)
        out = dict(self.signs)
        out[v] = -out[v]
        return SignDistribution(out)

    def items(self):
        return self.signs.items()


def _orthants(n):
    return [eps for eps in product((1, -1), repeat=n)]


def extension_multiplier(v, eps) -> int:
    """prod(eps_k ** v_k) for a lattice point v and orthant eps."""
    odd = sum(1 for e, c in zip(eps, v) if e < 0 and c % 2 == 1)
    return -1 if odd % 2 else 1


class ModelComplex:
    """Sign-independent combinatorial structure of the orthant model.

    Precomputes, for a triangulation of T_d^n, the reflected simplices in
    all 2^n orthants, the face classes through which adjacent simplices and
    antipodal boundary faces are glued, and the cell classes used for Euler
    characteristic counts.  Per-sign analysis is then a pure function of
    the sign vector.
    """

    def __init__(self, t: Triangulation):
        n = t.target.ambient_dim
        if n not in (2, 3):
            raise InvalidArgument(f"supported dimensions are 2 and 3, got {n}")
        self.n = n
        self.triangulation = t
        self.degree = max(max(v) for v in t.target.vertices)
        self.base_vertices = list(t.vertex_set)
        self.vindex = {v: i for i, v in enumerate(self.base_vertices)}
        self.nonprimitive_warning = not _all_primitive(t)
        d2 = 2 * self.degree

        simplices = []  # per simplex: (coords tuple, vertex ids, multipliers)
        for eps in _orthants(n):
            for cell in t.cells:
                coords = tuple(tuple(2 * e * c for e, c in zip(eps, v)) for v in cell.vertices)
                vids = tuple(self.vindex[v] for v in cell.vertices)
                mults = tuple(extension_multiplier(v, eps) for v in cell.vertices)
                simplices.append((coords, vids, mults))
        self.simplices = simplices

        def on_boundary(x):
            return sum(abs(c) for c in x) == d2

        def flat_on_boundary(pts):
            total = [0] * n
            for p in pts:
                for k in range(n):
                    total[k] += p[k]
            return all(on_boundary(p) for p in pts) and sum(abs(c) for c in total) == d2 * len(pts)

        self._on_boundary = on_boundary
        self._flat_on_boundary = flat_on_boundary

        # facet classes: (n-1)-faces of simplices, glued in pairs (shared or
        # antipodal); these carry both the hypersurface pieces' boundaries
        # and the complement-region gluing
        facet_map = {}
        for s_id, (coords, _, _) in enumerate(simplices):
            for drop in range(n + 1):
                fc = tuple(sorted(c for k, c in enumerate(coords) if k != drop))
                locs = tuple(k for k in range(n + 1) if k != drop)
                facet_map.setdefault(fc, []).append((s_id, locs))

        glue = []  # (s1, locs1, s2, locs2, crossed)
        seen = set()
        for fc, inc in sorted(facet_map.items()):
            if fc in seen:
                continue
            if len(inc) == 2:
                (s1, l1), (s2, l2) = inc
                l2m = _match_locs(simplices, s1, l1, s2, l2, antipodal=False)
                glue.append((s1, l1, s2, l2m, False))
                seen.add(fc)
            elif len(inc) == 1:
                if not flat_on_boundary(fc):
                    raise InvalidArgument(f"dangling interior face {fc}; triangulation invalid")
                anti = tuple(sorted(tuple(-c for c in p) for p in fc))
                partner = facet_map.get(anti)
                if anti == fc or partner is None or len(partner) != 1:
                    raise InvalidArgument(f"boundary face {fc} has no antipodal partner")
                (s1, l1) = inc[0]
                (s2, l2) = partner[0]
                l2m = _match_locs(simplices, s1, l1, s2, l2, antipodal=True)
                glue.append((s1, l1, s2, l2m, True))
                seen.add(fc)
                seen.add(anti)
            else:
                raise InvalidArgument(f"face {fc} shared by {len(inc)} simplices")
        self.glue = glue

        # per simplex: the glue entries it participates in, with its side
        self.simplex_glue = [[] for _ in simplices]
        for g_id, (s1, l1, s2, l2, crossed) in enumerate(glue):
            self.simplex_glue[s1].append((g_id, l1))
            self.simplex_glue[s2].append((g_id, l2))

        # projective vertex classes of the model (for region Euler counts)
        canon = {}
        self.corner_class = []
        for coords, _, _ in simplices:
            row = []
            for p in coords:
                key = min(p, tuple(-c for c in p)) if on_boundary(p) else p
                if key not in canon:
                    canon[key] = len(canon)
                row.append(canon[key])
            self.corner_class.append(tuple(row))
        self.num_vertex_classes = len(canon)

        # projective classes of simplex edges (1-faces); for n=2 these are
        # the facet classes above, for n=3 they carry the piece vertices
        if n == 3:
            edge_map = {}
            self.simplex_edges = []
            for s_id, (coords, _, _) in enumerate(simplices):
                row = []
                for i, j in combinations(range(4), 2):
                    u, v = coords[i], coords[j]
                    key = tuple(sorted((u, v)))
                    if flat_on_boundary((u, v)):
                        anti = tuple(sorted((tuple(-c for c in u), tuple(-c for c in v))))
                        key = min(key, anti)
                    if key not in edge_map:
                        edge_map[key] = len(edge_map)
                    row.append((edge_map[key], i, j))
                self.simplex_edges.append(tuple(row))
            self.num_edge_classes = len(edge_map)

    def signs_of(self, sigma) -> list:
        """Per-simplex extended corner signs for a sign vector.

        ``sigma`` may be a SignDistribution or a flat list indexed like
        ``base_vertices``.
        """
        if isinstance(sigma, SignDistribution):
            missing = [v for v in self.base_vertices if tuple(v) not in sigma.signs]
            if missing:
                raise InvalidArgument(f"sign distribution missing vertices: {missing}")
            flat = [sigma[v] for v in self.base_vertices]
        else:
            flat = list(sigma)
        return [
            tuple(m * flat[v] for v, m in zip(vids, mults))
            for (_, vids, mults) in self.simplices
        ]


def _match_locs(simplices, s1, l1, s2, l2, antipodal):
    """Reorder l2 so that corresponding corners match l1 pointwise."""
    c1 = simplices[s1][0]
    c2 = simplices[s2][0]
    out = []
    for k in l1:
        target = tuple(-c for c in c1[k]) if antipodal else c1[k]
        for m in l2:
            if c2[m] == target:
                out.append(m)
                break
        else:
            raise AssertionError("face corners failed to match")
    return tuple(out)


def _all_primitive(t: Triangulation) -> bool:
    from math import factorial

    unit = Fraction(1, factorial(t.target.ambient_dim))
    return all(geo.simplex_volume(c.vertices) == unit for c in t.cells)


@dataclass(frozen=True)
class SignedOrthantComplex:
    """The 2^n reflected triangulations with extended signs."""

    model: ModelComplex
    sigma: SignDistribution
    simplex_signs: tuple

    @property
    def n(self):
        return self.model.n

    @property
    def degree(self):
        return self.model.degree

    def sign_at(self, point) -> int:
        """Extended sign at a reflected vertex (2x-scaled coordinates not
        required; pass model coordinates)."""
        p = tuple(point)
        eps = tuple(1 if c >= 0 else -1 for c in p)
        base = tuple(abs(c) for c in p)
        return extension_multiplier(base, eps) * self.sigma[base]


def extend_signs(t: Triangulation, sigma: SignDistribution, model: ModelComplex | None = None) -> SignedOrthantComplex:
    if model is None:
        model = ModelComplex(t)
    signs = model.signs_of(sigma)
    return SignedOrthantComplex(model=model, sigma=sigma, simplex_signs=tuple(signs))


@dataclass(frozen=True)
class PatchworkComplex:
    """The glued PL hypersurface, with exact rational vertex coordinates in
    the cross-polytope model |x|_1 <= d."""

    n: int
    degree: int
    model: str  # "affine" | "projective"
    pieces: tuple  # tuple of tuples of coordinate tuples (Fractions)
    adjacency: dict  # face key -> tuple of piece ids
    nonprimitive_warning: bool
    _engine: object = field(default=None, repr=False, compare=False)
    _signs: tuple = field(default=None, repr=False, compare=False)

    def is_empty(self):
        return not self.pieces

    def to_json(self):
        def coord(c):
            return int(c) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"

        return {
            "dim": self.n,
            "degree": self.degree,
            "model": self.model,
            "nonprimitiveWarning": self.nonprimitive_warning,
            "pieces": [[[coord(c) for c in p] for p in piece] for piece in self.pieces],
            "adjacency": [
                {"pieces": list(v)} for _, v in sorted(self.adjacency.items())
            ],
        }


def _mixed_piece_scaled(coords, signs):
    """Scaled-midpoint polygon of a mixed simplex, in cyclic order."""
    pos = [k for k, s in enumerate(signs) if s > 0]
    neg = [k for k, s in enumerate(signs) if s < 0]
    if not pos or not neg:
        return None

    def mid(i, j):
        return tuple((a + b) // 2 for a, b in zip(coords[i], coords[j]))

    if len(coords) == 3:
        if len(pos) == 1:
            k = pos[0]
            others = neg
        else:
            k = neg[0]
            others = pos
        return (mid(k, others[0]), mid(k, others[1]))
    # tetrahedron
    if len(pos) == 1 or len(neg) == 1:
        k = pos[0] if len(pos) == 1 else neg[0]
        others = [m for m in range(4) if m != k]
        return tuple(mid(k, m) for m in others)
    p1, p2 = pos
    n1, n2 = neg
    return (mid(p1, n1), mid(p1, n2), mid(p2, n2), mid(p2, n1))


def extract_hypersurface(c: SignedOrthantComplex) -> PatchworkComplex:
    """Emit one separating piece per mixed simplex (affine model)."""
    model = c.model
    pieces = []
    piece_of_simplex = {}
    for s_id, signs in enumerate(c.simplex_signs):
        poly = _mixed_piece_scaled(model.simplices[s_id][0], signs)
        if poly is None:
            continue
        piece_of_simplex[s_id] = len(pieces)
        pieces.append(tuple(tuple(Fraction(x, 2) for x in p) for p in poly))

    adjacency = {}
    for g_id, (s1, l1, s2, l2, crossed) in enumerate(model.glue):
        if crossed:
            continue  # antipodal identifications belong to the projective model
        if s1 not in piece_of_simplex or s2 not in piece_of_simplex:
            continue
        signs1 = c.simplex_signs[s1]
        if len({signs1[k] for k in l1}) == 1:
            continue  # face not mixed: pieces do not meet there
        adjacency[("interior", g_id)] = (piece_of_simplex[s1], piece_of_simplex[s2])

    return PatchworkComplex(
        n=model.n,
        degree=model.degree,
        model="affine",
        pieces=tuple(pieces),
        adjacency=adjacency,
        nonprimitive_warning=model.nonprimitive_warning,
        _engine=c,
        _signs=c.simplex_signs,
    )


def projectivize(p: PatchworkComplex) -> PatchworkComplex:
    """Identify antipodal boundary faces of the cross-polytope model."""
    if p.model != "affine":
        raise InvalidArgument("projectivize expects an affine-model complex")
    soc = p._engine
    model = soc.model
    piece_of_simplex = {}
    idx = 0
    for s_id, signs in enumerate(soc.simplex_signs):
        if _mixed_piece_scaled(model.simplices[s_id][0], signs) is not None:
            piece_of_simplex[s_id] = idx
            idx += 1
    adjacency = dict(p.adjacency)
    for g_id, (s1, l1, s2, l2, crossed) in enumerate(model.glue):
        if not crossed:
            continue
        if s1 not in piece_of_simplex or s2 not in piece_of_simplex:
            continue
        signs1 = soc.simplex_signs[s1]
        if len({signs1[k] for k in l1}) == 1:
            continue
        adjacency[("antipodal", g_id)] = (piece_of_simplex[s1], piece_of_simplex[s2])
    return PatchworkComplex(
        n=p.n,
        degree=p.degree,
        model="projective",
        pieces=p.pieces,
        adjacency=adjacency,
        nonprimitive_warning=p.nonprimitive_warning,
        _engine=p._engine,
        _signs=p._signs,
    )


def build_complex(t: Triangulation, sigma: SignDistribution, model: ModelComplex | None = None) -> PatchworkComplex:
    """Convenience pipeline: extend, extract, projectivize."""
    return projectivize(extract_hypersurface(extend_signs(t, sigma, model)))


@dataclass(frozen=True)
class MomentImage:
    polytope_vertices: tuple
    samples: object  # ndarray (num_samples, n)

    def to_json(self):
        return {
            "vertices": [list(v) for v in self.polytope_vertices],
            "samples": [list(map(float, s)) for s in self.samples],
        }


def moment_render(delta, grid: int, span: float = 3.0) -> MomentImage:
    """Sample the moment map of a polytope on a log-uniform positive grid.

    Rendering-only: floating point is fine here, topology never touches it.
    """
    import numpy as np

    if grid < 1:
        raise InvalidArgument("grid must be >= 1")
    n = delta.ambient_dim
    if delta.dim != n:
        raise InvalidArgument("moment_render needs a full-dimensional polytope")
    points = np.array(delta.lattice_points(), dtype=float)
    if grid == 1:
        axes = [np.array([0.0])] * n
    else:
        axes = [np.linspace(-span, span, grid)] * n
    out = []
    for u in product(*axes):
        x = np.exp(np.array(u))
        weights = np.prod(x ** points, axis=1)
        total = weights.sum()
        out.append((weights @ points) / total)
    return MomentImage(polytope_vertices=tuple(delta.vertices), samples=np.array(out))


def moment_map_exact(delta, x):
    """Exact evaluation of the moment map at a positive rational point."""
    pts = delta.lattice_points()
    n = delta.ambient_dim
    num = [Fraction(0)] * n
    den = Fraction(0)
    xs = [Fraction(c) for c in x]
    for p in pts:
        w = Fraction(1)
        for k in range(n):
            w *= xs[k] ** p[k]
        den += w
        for k in range(n):
            num[k] += w * p[k]
    return tuple(c / den for c in num)
