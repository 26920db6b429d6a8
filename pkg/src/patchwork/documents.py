"""JSON document formats shared by the CLI, the service and stored examples.

Persisted numbers are integers or decimal strings "p/q"; no floating point
ever enters a topology document.  Canonical serialization (sorted keys, no
whitespace) guarantees that the CLI and the service emit byte-identical
output for identical inputs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .construction import SignDistribution
from .lattice import InvalidArgument, LatticePolytope, LatticeSubdivision, Triangulation, standard_simplex

SCHEMA = "patchwork/1"


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def rational_str(x) -> str | int:
    f = Fraction(x)
    return int(f) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def parse_rational(x) -> Fraction:
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise InvalidArgument(f"expected integer or 'p/q' string, got {x!r}")


@dataclass(frozen=True)
class PatchworkDocument:
    """Serialized (triangulation, sign distribution) pair."""

    dim: int
    degree: int
    cells: tuple  # tuple of cells, each a tuple of vertex tuples
    signs: dict | None  # vertex tuple -> +-1
    metadata: dict

    def to_json(self):
        out = {
            "schema": SCHEMA,
            "dim": self.dim,
            "degree": self.degree,
            "cells": [[list(v) for v in cell] for cell in self.cells],
            "metadata": dict(self.metadata),
        }
        if self.signs is not None:
            out["signs"] = {",".join(map(str, v)): s for v, s in sorted(self.signs.items())}
        return out

    def dumps(self) -> str:
        return canonical_json(self.to_json())

    @staticmethod
    def from_json(data) -> "PatchworkDocument":
        if not isinstance(data, dict):
            raise InvalidArgument("document must be a JSON object")
        for key in ("dim", "degree", "cells"):
            if key not in data:
                raise InvalidArgument(f"document missing required key {key!r}")
        dim = int(data["dim"])
        degree = int(data["degree"])
        cells = tuple(
            tuple(tuple(int(c) for c in v) for v in cell) for cell in data["cells"]
        )
        signs = None
        if data.get("signs") is not None:
            signs = {}
            for key, val in data["signs"].items():
                vert = tuple(int(c) for c in key.split(","))
                if val not in (1, -1):
                    raise InvalidArgument(f"sign at {key} must be +1 or -1")
                signs[vert] = val
        return PatchworkDocument(
            dim=dim,
            degree=degree,
            cells=cells,
            signs=signs,
            metadata=dict(data.get("metadata", {})),
        )

    @staticmethod
    def loads(text: str) -> "PatchworkDocument":
        return PatchworkDocument.from_json(json.loads(text))

    def subdivision(self) -> LatticeSubdivision:
        target = standard_simplex(self.dim, self.degree)
        return LatticeSubdivision(target, [LatticePolytope(c) for c in self.cells])

    def triangulation(self) -> Triangulation:
        target = standard_simplex(self.dim, self.degree)
        return Triangulation(target, [LatticePolytope(c) for c in self.cells])

    def sign_distribution(self) -> SignDistribution:
        if self.signs is None:
            raise InvalidArgument("document has no sign distribution")
        return SignDistribution(self.signs)


def document_for(t, signs=None, metadata=None) -> PatchworkDocument:
    degree = max(max(v) for v in t.target.vertices)
    return PatchworkDocument(
        dim=t.target.ambient_dim,
        degree=degree,
        cells=tuple(tuple(c.vertices) for c in t.cells),
        signs=dict(signs.signs) if signs is not None else None,
        metadata=dict(metadata or {}),
    )
