"""Packaged example documents served by the CLI and the HTTP service."""

from __future__ import annotations

from .builders import grid_triangulation_2d, staircase_triangulation_3d
from .construction import SignDistribution
from .documents import PatchworkDocument, document_for

_PINWHEEL_CELLS = (
    ((0, 0), (4, 0), (2, 1)),
    ((0, 0), (2, 1), (1, 1)),
    ((4, 0), (0, 4), (1, 2)),
    ((4, 0), (1, 2), (2, 1)),
    ((0, 4), (0, 0), (1, 1)),
    ((0, 4), (1, 1), (1, 2)),
    ((1, 1), (2, 1), (1, 2)),
)


def _pinwheel() -> PatchworkDocument:
    return PatchworkDocument(
        dim=2,
        degree=4,
        cells=_PINWHEEL_CELLS,
        signs={v: 1 for cell in _PINWHEEL_CELLS for v in cell},
        metadata={
            "name": "pinwheel-nonregular",
            "description": "spiral triangulation of T_4^2 with the inner triangle "
            "(1,1),(2,1),(1,2); not convex, the checker emits a Farkas certificate",
        },
    )


def _d3_mcurve() -> PatchworkDocument:
    t = grid_triangulation_2d(3)
    sigma = SignDistribution({v: 1 for v in t.vertex_set})
    return document_for(
        t,
        sigma,
        {
            "name": "d3-mcurve",
            "description": "degree-3 M-curve (2 components: oval + pseudoline) on "
            "the grid triangulation; found by exhaustive search",
        },
    )


def _d6_search_best() -> PatchworkDocument:
    t = grid_triangulation_2d(6)
    sigma = SignDistribution({v: (-1) ** (v[0] * v[1]) for v in t.vertex_set})
    return document_for(
        t,
        sigma,
        {
            "name": "d6-search-best",
            "description": "degree-6 M-curve (11 components, Harnack bound) with "
            "sigma(i,j) = (-1)^(i j); rediscoverable by hill-climb search",
        },
    )


def _d2_oval() -> PatchworkDocument:
    t = grid_triangulation_2d(2)
    sigma = SignDistribution({v: (-1 if v == (1, 1) else 1) for v in t.vertex_set})
    return document_for(
        t,
        sigma,
        {
            "name": "d2-oval",
            "description": "degree-2 curve: a single oval",
        },
    )


def _d4_msurface() -> PatchworkDocument:
    t = staircase_triangulation_3d(4)
    sigma = SignDistribution({v: (-1 if v == (1, 1, 1) else 1) for v in t.vertex_set})
    return document_for(
        t,
        sigma,
        {
            "name": "d4-msurface",
            "description": "degree-4 M-surface (sphere + genus-10 component, "
            "b_total = 24) from one negative interior sign",
        },
    )


_EXAMPLES = {
    "pinwheel-nonregular": _pinwheel,
    "d3-mcurve": _d3_mcurve,
    "d6-search-best": _d6_search_best,
    "d2-oval": _d2_oval,
    "d4-msurface": _d4_msurface,
}


def example_ids():
    return sorted(_EXAMPLES)


def example(name: str) -> PatchworkDocument:
    if name not in _EXAMPLES:
        raise KeyError(name)
    return _EXAMPLES[name]()
