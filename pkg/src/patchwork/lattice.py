"""Lattice polytopes, subdivisions and triangulations of the scaled simplex.

All predicates are exact: coordinates are integers, derived quantities are
``Fraction``s.  Cells are stored with a canonical (lexicographic) vertex
ordering so that validation reports and downstream constructions are
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

from . import geometry as geo


class InvalidArgument(ValueError):
    """Raised when an operation precondition is violated."""


@dataclass(frozen=True)
class LatticePolytope:
    """Convex lattice polytope given by its extreme points.

    The constructor normalizes the input: ``vertices`` holds exactly the
    extreme points of the convex hull of the given points, sorted
    lexicographically.
    """

    vertices: tuple
    dim: int = field(default=-1)

    def __init__(self, points):
        pts = [tuple(int(c) for c in p) for p in points]
        if not pts:
            raise InvalidArgument("empty point set")
        n = len(pts[0])
        if n < 1 or any(len(p) != n for p in pts):
            raise InvalidArgument("inconsistent coordinate dimension")
        verts = tuple(geo.extreme_points(pts))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "dim", geo.affine_rank(verts))

    @property
    def ambient_dim(self) -> int:
        return len(self.vertices[0])

    def volume(self) -> Fraction:
        if self.dim != self.ambient_dim:
            return Fraction(0)
        return geo.polytope_volume(self.vertices)

    def lattice_points(self):
        return geo.lattice_points_in(self.vertices)

    def contains(self, point) -> bool:
        return geo.point_in_hull(tuple(point), self.vertices)

    def faces(self):
        """Proper nonempty faces as sorted vertex tuples (dim <= 3)."""
        if self.dim == self.ambient_dim:
            return geo.polytope_faces(self.vertices)
        faces = {(v,) for v in self.vertices}
        if self.dim == 1:
            return faces
        raise InvalidArgument("face enumeration for degenerate cells of dim >= 2 unsupported")

    def is_simplex(self) -> bool:
        return len(self.vertices) == self.dim + 1


def standard_simplex(n: int, d: int) -> LatticePolytope:
    """The simplex with vertices 0, d*e_1, ..., d*e_n."""
    if n < 1 or d < 1:
        raise InvalidArgument(f"standard_simplex needs n >= 1 and d >= 1, got ({n}, {d})")
    verts = [tuple(0 for _ in range(n))]
    for k in range(n):
        v = [0] * n
        v[k] = d
        verts.append(tuple(v))
    return LatticePolytope(verts)


def lattice_point_count(n: int, d: int) -> int:
    """Number of lattice points of standard_simplex(n, d)."""
    return comb(n + d, n)


@dataclass(frozen=True)
class Violation:
    kind: str  # overlap | gap | non-face | outside
    cells: tuple
    detail: str

    def to_json(self):
        return {"kind": self.kind, "cells": list(self.cells), "detail": self.detail}


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple

    @property
    def valid(self) -> bool:
        return not self.violations

    def to_json(self):
        return {"valid": self.valid, "violations": [v.to_json() for v in self.violations]}


@dataclass(frozen=True)
class LatticeSubdivision:
    """A subdivision of ``target`` into full-dimensional lattice cells."""

    target: LatticePolytope
    cells: tuple  # tuple of LatticePolytope, canonical order
    vertex_set: tuple

    def __init__(self, target: LatticePolytope, cells):
        cells = tuple(sorted(cells, key=lambda c: c.vertices))
        verts = sorted({v for c in cells for v in c.vertices})
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "cells", cells)
        object.__setattr__(self, "vertex_set", tuple(verts))

    @property
    def dim(self) -> int:
        return self.target.dim

    def is_triangulation(self) -> bool:
        return all(c.is_simplex() for c in self.cells)

    def validate(self) -> ValidationReport:
        return validate_subdivision(list(self.cells), self.target)


class Triangulation(LatticeSubdivision):
    """A subdivision all of whose cells are simplices."""

    def __init__(self, target, cells):
        super().__init__(target, cells)
        for c in self.cells:
            if not c.is_simplex():
                raise InvalidArgument(f"cell {c.vertices} is not a simplex")


def validate_subdivision(cells, target: LatticePolytope) -> ValidationReport:
    """Check the subdivision axioms and report every violation found.

    A valid report means: every cell is inside the target, cells pairwise
    intersect in a common proper face (or not at all), and the cell volumes
    add up exactly to the target volume (which, together with the other two
    conditions, forces the union to equal the target).
    """
    cells = [c if isinstance(c, LatticePolytope) else LatticePolytope(c) for c in cells]
    if not cells:
        raise InvalidArgument("no cells")
    n = target.dim
    if target.ambient_dim != n:
        raise InvalidArgument("target must be full-dimensional in its ambient space")
    for i, c in enumerate(cells):
        if c.dim != n:
            raise InvalidArgument(f"cell {i} has dimension {c.dim}, target has {n}")

    violations = []
    for i, c in enumerate(cells):
        if not all(target.contains(v) for v in c.vertices):
            violations.append(Violation("outside", (i,), f"cell {c.vertices} not contained in target"))

    face_cache = {}

    def faces_of(i):
        if i not in face_cache:
            face_cache[i] = cells[i].faces()
        return face_cache[i]

    for i in range(len(cells)):
        for j in range(i + 1, len(cells)):
            inter = geo.intersect_polytopes(cells[i].vertices, cells[j].vertices)
            if not inter:
                continue
            key = tuple(sorted(inter))
            if geo.affine_rank(inter) == n:
                violations.append(Violation("overlap", (i, j), f"cells share interior, intersection {key}"))
                continue
            if key not in faces_of(i) or key not in faces_of(j):
                violations.append(
                    Violation("non-face", (i, j), f"intersection {key} is not a common face")
                )

    total = sum((c.volume() for c in cells), Fraction(0))
    tv = target.volume()
    if total != tv:
        kind = "gap" if total < tv else "overlap"
        violations.append(Violation(kind, (), f"cell volumes sum to {total}, target volume is {tv}"))

    return ValidationReport(tuple(violations))


def validate_triangulation_fast(t: LatticeSubdivision) -> ValidationReport:
    """Cheap exact validity check for simplicial subdivisions.

    For simplices, containment in the target plus exact volume additivity
    plus facet matching (every facet either shared by exactly two cells or
    lying in the target boundary) force a face-to-face subdivision; this is
    linear in the number of cells, unlike the pairwise intersection test.
    """
    from itertools import combinations

    n = t.target.dim
    violations = []
    for i, c in enumerate(t.cells):
        if not c.is_simplex():
            return validate_subdivision(list(t.cells), t.target)
        if not all(t.target.contains(v) for v in c.vertices):
            violations.append(Violation("outside", (i,), f"cell {c.vertices} not contained in target"))
    facets = {}
    for i, c in enumerate(t.cells):
        for facet in combinations(c.vertices, n):
            facets.setdefault(tuple(sorted(facet)), []).append(i)
    target_facets = geo.hull_inequalities(t.target.vertices)
    for facet, inc in facets.items():
        if len(inc) == 2:
            continue
        if len(inc) > 2:
            violations.append(Violation("overlap", tuple(inc), f"facet {facet} shared by {len(inc)} cells"))
            continue
        on_boundary = any(
            all(geo.vdot(nrm, v) == c0 for v in facet) for (nrm, c0) in target_facets
        )
        if not on_boundary:
            violations.append(Violation("non-face", tuple(inc), f"dangling interior facet {facet}"))
    total = sum((c.volume() for c in t.cells), Fraction(0))
    tv = t.target.volume()
    if total != tv:
        kind = "gap" if total < tv else "overlap"
        violations.append(Violation(kind, (), f"cell volumes sum to {total}, target volume is {tv}"))
    return ValidationReport(tuple(violations))


def is_primitive(t: LatticeSubdivision) -> bool:
    """True iff every cell is a simplex of minimal lattice volume 1/n!."""
    n = t.dim
    unit = Fraction(1, factorial(n))
    for c in t.cells:
        if not c.is_simplex():
            return False
        if geo.simplex_volume(c.vertices) != unit:
            return False
    return True


def is_maximal(s: LatticeSubdivision) -> bool:
    """True iff all cells are simplices and every lattice point of the
    target is a vertex of some cell.

    In the plane this coincides with primitivity (Pick); in dimension 3 it
    is weaker, since empty non-unimodular tetrahedra exist.
    """
    if not s.is_triangulation():
        return False
    used = set(s.vertex_set)
    return all(tuple(p) in used for p in s.target.lattice_points())
