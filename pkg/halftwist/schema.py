# Copyright the halftwist authors
# Licensed under the MIT license

"""
Versioned layouts of the JSON records written by the CLI.

Each record is one JSON object per line, stamped with its kind and layout
version so external checkers can re-verify certificates without this package.
Scalars are rendered as strings: Laurent polynomials as ``-A^3 + A^-1`` and
cyclotomic scalars as ``N=12:[1,0,-1/2,0]`` (power-basis coefficients modulo
the N-th cyclotomic polynomial).
"""

from typing import Any

SCHEMA_VERSION = 1

SCHEMA: dict[str, dict[int, tuple[str, ...]]] = {
    "dimension": {
        1: ("points", "n", "dimension"),
    },
    "matching": {
        1: ("n", "pairs"),
    },
    "word": {
        1: ("n", "letters"),
    },
    "matrix": {
        1: ("n", "ring", "word", "basis", "entries"),
    },
    "relator": {
        1: (
            "relator",
            "n",
            "ring",
            "is_scalar",
            "scalar",
            "expected_scalar",
            "pass",
        ),
    },
    "power": {
        1: ("n", "m", "ring", "pass", "scalar"),
    },
    "rescale": {
        1: ("n", "m", "ring", "value", "expected", "pass"),
    },
    "certificate": {
        1: ("ring", "word", "dimension", "verdict", "order", "scalar", "witness", "reason"),
    },
    "closure": {
        1: ("ring", "generators", "cap", "order", "cap_exceeded", "explored"),
    },
    "reproduce": {
        1: (
            "m",
            "n",
            "ring",
            "q_order",
            "pm_root",
            "birman",
            "power",
            "power_scalar",
            "verdict",
            "pass",
        ),
    },
    "explore": {
        1: ("ring", "word", "verdict", "certificate"),
    },
}

WITNESS_SCHEMA: dict[str, tuple[str, ...]] = {
    "trace-conjugate": ("type", "k", "trace_coeffs", "discriminant_coeffs", "precision"),
    "parabolic-trace": ("type", "trace_coeffs", "power"),
    "non-cyclotomic-ratio": ("type", "residual_poly", "factors"),
}


def record(kind: str, **fields: Any) -> dict[str, Any]:
    """
    Build a record of the given kind, in layout order, checking the field names.
    """
    layout = SCHEMA[kind][SCHEMA_VERSION]
    if set(fields) != set(layout):
        missing = sorted(set(layout) - set(fields))
        extra = sorted(set(fields) - set(layout))
        raise KeyError(f"{kind} record mismatch: missing={missing} extra={extra}")
    return {"schema": kind, "version": SCHEMA_VERSION, **{k: fields[k] for k in layout}}


def witness_record(kind: str, **fields: Any) -> dict[str, Any]:
    layout = WITNESS_SCHEMA[kind]
    fields["type"] = kind
    if set(fields) != set(layout):
        raise KeyError(f"{kind} witness mismatch: {sorted(fields)} vs {layout}")
    return {k: fields[k] for k in layout}


for key in SCHEMA:
    assert isinstance(key, str), f"SCHEMA[{key!r}] is not a string"
    assert SCHEMA_VERSION in SCHEMA[key], f"SCHEMA[{key}] lacks version {SCHEMA_VERSION}"
    for version, layout in SCHEMA[key].items():
        assert isinstance(version, int), f"SCHEMA[{key}][{version!r}] is not an int"
        assert len(set(layout)) == len(layout), f"SCHEMA[{key}][{version}] repeats"
        assert "schema" not in layout and "version" not in layout

for key, layout in WITNESS_SCHEMA.items():
    assert layout[0] == "type", f"WITNESS_SCHEMA[{key}] must lead with type"
