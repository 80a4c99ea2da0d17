"""JSON Schemas for problem files and configuration (draft 2020-12)."""

from __future__ import annotations

RATIONAL = {
    "oneOf": [
        {"type": "integer"},
        {"type": "string", "pattern": r"^-?[0-9]+(/[1-9][0-9]*)?$"},
    ]
}
GAUSS = {"oneOf": [RATIONAL, {"type": "array", "items": RATIONAL, "minItems": 2, "maxItems": 2}]}
INT_VECTOR = {"type": "array", "items": {"type": "integer"}, "minItems": 1}
RATIONAL_VECTOR = {"type": "array", "items": RATIONAL, "minItems": 1}
GAUSS_VECTOR = {"type": "array", "items": GAUSS, "minItems": 1}
RATIONAL_MATRIX = {"type": "array", "items": RATIONAL_VECTOR, "minItems": 1}

LATTICE = {
    "type": "object",
    "properties": {
        "rank": {"type": "integer", "minimum": 1},
        "weight": {"type": "integer"},
        "gram": {"type": "array", "items": INT_VECTOR, "minItems": 1},
    },
    "required": ["weight", "gram"],
    "additionalProperties": False,
}

HODGE = {
    "oneOf": [
        {
            "type": "object",
            "properties": {"weil": RATIONAL_MATRIX},
            "required": ["weil"],
            "additionalProperties": False,
        },
        {
            "type": "object",
            "properties": {
                "weight": {"type": "integer"},
                "pieces": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "properties": {
                            "p": {"type": "integer"},
                            "q": {"type": "integer"},
                            "basis": {"type": "array", "items": GAUSS_VECTOR},
                        },
                        "required": ["p", "q", "basis"],
                        "additionalProperties": False,
                    },
                },
            },
            "required": ["weight", "pieces"],
            "additionalProperties": False,
        },
    ]
}

HODGE_PRESETS = ["elliptic-curve", "elliptic-sym2", "hyperbolic-swap"]
ORBIT_PRESETS = ["sym2", "sym2-type", "trivial"]

ORBIT = {
    "type": "object",
    "properties": {
        "lattice": LATTICE,
        "N": RATIONAL_MATRIX,
        "Y": RATIONAL_MATRIX,
        "F": {
            "type": "object",
            "patternProperties": {r"^-?[0-9]+$": {"type": "array", "items": GAUSS_VECTOR}},
            "additionalProperties": False,
        },
    },
    "required": ["lattice", "N", "Y", "F"],
    "additionalProperties": False,
}

GRID = {"type": "string", "pattern": r"^\s*[xs]\s*=.*$"}


def _problem(kind: str, properties: dict, required: list[str], one_of: list[list[str]] | None = None) -> dict:
    schema = {
        "type": "object",
        "properties": {"kind": {"const": kind}, **properties},
        "required": ["kind", *required],
        "additionalProperties": False,
    }
    if one_of:
        schema["oneOf"] = [{"required": group} for group in one_of]
    return schema


_structure = {"lattice": LATTICE, "hodge": HODGE, "preset": {"enum": HODGE_PRESETS}}
_structure_choice = [["lattice", "hodge"], ["preset"]]
_orbit = {"orbit": ORBIT, "preset": {"enum": ORBIT_PRESETS}}
_orbit_choice = [["orbit"], ["preset"]]
_positive = {"type": "integer", "minimum": 1}

PROBLEMS = {
    "enumerate-selfdual": _problem("enumerate-selfdual", {**_structure, "q": _positive}, ["q"], _structure_choice),
    "enumerate-antiselfdual": _problem(
        "enumerate-antiselfdual", {**_structure, "q": _positive}, ["q"], _structure_choice
    ),
    "enumerate-pairs": _problem("enumerate-pairs", {**_structure, "q": _positive}, ["q"], _structure_choice),
    "orbit-classify": _problem("orbit-classify", {**_orbit, "vector": INT_VECTOR}, ["vector"], _orbit_choice),
    "orbit-scan": _problem("orbit-scan", {**_orbit, "vector": INT_VECTOR, "grid": GRID}, ["vector"], _orbit_choice),
    "check-reduced": _problem(
        "check-reduced",
        {"gram": RATIONAL_MATRIX, "basis": {"type": "array", "items": RATIONAL_VECTOR}, "t": RATIONAL},
        ["gram", "basis", "t"],
    ),
    "siegel-member": _problem(
        "siegel-member",
        {**_structure, "basis": {"type": "array", "items": RATIONAL_VECTOR}, "t": RATIONAL},
        ["basis", "t"],
        _structure_choice,
    ),
    "k3-locus": _problem(
        "k3-locus",
        {"lattice": LATTICE, "sigma": GAUSS_VECTOR, "vectors": {"type": "array", "items": INT_VECTOR}},
        ["lattice", "sigma"],
    ),
    "tadpole-demo": {
        **_problem("tadpole-demo", {**_structure, "ell": _positive}, ["ell"]),
        "dependentRequired": {"lattice": ["hodge"], "hodge": ["lattice"]},
        "not": {"required": ["preset", "lattice"]},
    },
}

PROBLEM = {
    "type": "object",
    "properties": {"kind": {"enum": sorted(PROBLEMS)}},
    "required": ["kind"],
}

CONFIG = {
    "type": "object",
    "properties": {
        "minkowski_constants": {
            "type": "object",
            "patternProperties": {r"^[1-9][0-9]*$": RATIONAL},
            "additionalProperties": False,
        }
    },
    "additionalProperties": False,
}
