"""JSON-ready report payloads.

Every payload is built from plain lists, strings and booleans in canonical
order, so ``json.dumps(..., sort_keys=True)`` is byte-deterministic.
Rationals are written as strings (``"1/2"``).
"""
from __future__ import annotations

import json

from . import __version__
from .cohomology import cohomology

ORDERING = "graded, then lexicographic on exponent vectors; generators in declaration order"


def fraction_list(v) -> list[str]:
    return [str(x) for x in v]


def header(cdga, kind: str) -> dict:
    return {
        "algebra": cdga.name,
        "command": kind,
        "engine_version": __version__,
        "ordering": ORDERING,
        "generators": [f"{n}:{d}" for n, d in cdga.algebra.generators],
    }


def representatives(cdga, cap: int) -> dict:
    return {str(k): [str(r) for r in cohomology(cdga, k).representatives] for k in range(cap + 1)}


def massey_payload(res) -> dict:
    space = res.representative.space
    return {
        "arguments": [str(c.representative) for c in res.classes],
        "degree": res.degree,
        "representative": str(res.cocycle),
        "representative_class": str(res.representative.representative),
        "coordinates": fraction_list(res.representative.coords),
        "reduced_coordinates": fraction_list(res.reduced),
        "cohomology_basis": [str(r) for r in space.representatives],
        "indeterminacy_basis": [str(c.representative) for c in res.indeterminacy_classes()],
        "indeterminacy_dimension": res.indeterminacy.dimension,
        "vanishes": res.vanishes,
        "primitives": [str(x) for x in res.primitives],
    }


def amassey_payload(res) -> dict:
    return {
        "arguments": [str(c.representative) for c in res.classes],
        "degree": 8,
        "representative": str(res.cocycle),
        "coordinates": fraction_list(res.representative.coords),
        "indeterminacy_basis": [str(c.representative) for c in res.denominator_classes()],
        "indeterminacy_dimension": res.denominator.dimension,
        "vanishes": res.vanishes,
        "primitives": [str(x) for x in res.primitives],
    }


def gysin_payload(rep, omega) -> dict:
    return {
        "omega": str(omega),
        "base_betti": rep.base_betti,
        "cup_ranks": rep.cup_ranks,
        "extension_betti": rep.extension_betti,
        "predicted_betti": rep.predicted_betti,
        "pullback_kernels": {str(k): [str(c.representative) for c in v]
                             for k, v in sorted(rep.pullback_kernels.items())},
        "consistent": rep.consistent,
        "problems": rep.problems,
    }


def dumps(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def to_text(payload: dict, indent: int = 0) -> str:
    """Plain indented rendering used by ``--text``."""
    pad = "  " * indent
    lines = []
    for key in sorted(payload):
        value = payload[key]
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.append(to_text(value, indent + 1))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}:")
            for item in value:
                lines.append(to_text(item, indent + 1))
                lines.append(f"{pad}  --")
        elif isinstance(value, list):
            lines.append(f"{pad}{key}: " + ", ".join(str(v) for v in value))
        else:
            lines.append(f"{pad}{key}: {value}")
    return "\n".join(line for line in lines if line)
