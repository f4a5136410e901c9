"""JSON encoding of groups, elements, polynomials, orbifolds and line bundles.

Formats (schema version 1):

    FgAbGroup    {"rank": n, "torsion": [d1, d2, ...]}
    GroupEl      {"free": [...], "tors": [...]}
    polynomial   [{"exp": GroupEl, "coef": "<decimal string>"}, ...]  (sorted by exp)
    Orbifold3    {"b1": n, "h2": FgAbGroup, "loci": [{"alpha": a, "kappa": GroupEl}],
                  "pairing": [[...]], "cup11": [[[...]]], "cup_h1h1": [[GroupEl]] (optional)}
    PicardElem   {"c": GroupEl, "betas": [...]}
"""

from __future__ import annotations

import json
from typing import Any

import jsonschema

from .abelian import FgAbGroup, GroupEl
from .groupring import GroupRingElem
from .orbifold import Locus, Orbifold3, PicardElem

SCHEMA_VERSION = "1"


class SchemaError(ValueError):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path
        self.message = message


_INT_ARRAY = {"type": "array", "items": {"type": "integer"}}

DEFS: dict[str, Any] = {
    "group": {
        "type": "object",
        "required": ["rank"],
        "properties": {
            "rank": {"type": "integer", "minimum": 0},
            "torsion": {"type": "array", "items": {"type": "integer", "minimum": 2}},
        },
        "additionalProperties": False,
    },
    "element": {
        "type": "object",
        "properties": {"free": _INT_ARRAY, "tors": _INT_ARRAY},
        "additionalProperties": False,
    },
    "coef": {
        "oneOf": [{"type": "string", "pattern": "^-?[0-9]+$"}, {"type": "integer"}],
    },
    "poly": {
        "type": "array",
        "items": {
            "type": "object",
            "required": ["exp", "coef"],
            "properties": {"exp": {"$ref": "#/$defs/element"}, "coef": {"$ref": "#/$defs/coef"}},
        },
    },
    "orbifold": {
        "type": "object",
        "required": ["b1", "h2"],
        "properties": {
            "b1": {"type": "integer", "minimum": 0},
            "h2": {"$ref": "#/$defs/group"},
            "loci": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["alpha"],
                    "properties": {
                        "alpha": {"type": "integer", "minimum": 2},
                        "kappa": {"$ref": "#/$defs/element"},
                    },
                    "additionalProperties": False,
                },
            },
            "pairing": {"type": "array", "items": _INT_ARRAY},
            "cup11": {"type": "array", "items": {"type": "array", "items": _INT_ARRAY}},
            "cup_h1h1": {
                "type": "array",
                "items": {"type": "array", "items": {"$ref": "#/$defs/element"}},
            },
        },
        "additionalProperties": False,
    },
    "picard": {
        "type": "object",
        "required": ["c"],
        "properties": {"c": {"$ref": "#/$defs/element"}, "betas": _INT_ARRAY},
        "additionalProperties": False,
    },
    "seifert_terms": {
        "type": "array",
        "items": {
            "type": "object",
            "required": ["seifert", "coef"],
            "properties": {"seifert": {"$ref": "#/$defs/picard"}, "coef": {"$ref": "#/$defs/coef"}},
        },
    },
}


def _obj(required: list[str], props: dict[str, Any], **extra: Any) -> dict[str, Any]:
    return {
        "$defs": DEFS,
        "type": "object",
        "required": required,
        "properties": props,
        "additionalProperties": False,
        **extra,
    }


def _ref(name: str) -> dict[str, str]:
    return {"$ref": f"#/$defs/{name}"}


SCHEMAS: dict[str, dict[str, Any]] = {
    "picard": _obj(
        ["orbifold"],
        {"orbifold": _ref("orbifold"), "bundles": {"type": "array", "items": _ref("picard")}},
    ),
    "cohomology": _obj(["orbifold", "chi"], {"orbifold": _ref("orbifold"), "chi": _ref("picard")}),
    "sw3": _obj(
        [],
        {
            "whitehead": {
                "type": "object",
                "required": ["delta1", "delta2"],
                "properties": {"delta1": _ref("poly"), "delta2": _ref("poly")},
                "additionalProperties": False,
            },
            "orbifold": _ref("orbifold"),
            "poly": _ref("poly"),
            "seifert_terms": _ref("seifert_terms"),
        },
        oneOf=[
            {"required": ["whitehead"], "not": {"anyOf": [{"required": ["orbifold"]}]}},
            {"required": ["orbifold", "poly"]},
            {"required": ["orbifold", "seifert_terms"]},
        ],
    ),
    "sw4": _obj(
        ["orbifold", "chi"],
        {
            "orbifold": _ref("orbifold"),
            "chi": _ref("picard"),
            "sw3": _ref("poly"),
            "seifert_terms": _ref("seifert_terms"),
        },
        oneOf=[{"required": ["sw3"]}, {"required": ["seifert_terms"]}],
    ),
    "alexander": _obj(
        ["seifert_matrix"],
        {"seifert_matrix": {"type": "array", "minItems": 2, "items": _INT_ARRAY}},
    ),
    "validate": _obj(
        ["orbifold", "chi", "proposed"],
        {
            "orbifold": _ref("orbifold"),
            "chi": _ref("picard"),
            "proposed": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["class", "value"],
                    "properties": {"class": _ref("element"), "value": _ref("coef")},
                    "additionalProperties": False,
                },
            },
        },
    ),
}


def json_path(parts) -> str:
    out = "$"
    for p in parts:
        out += f"[{p}]" if isinstance(p, int) else f".{p}"
    return out


def validate_schema(command: str, doc: Any) -> None:
    validator = jsonschema.Draft202012Validator(SCHEMAS[command])
    errors = sorted(validator.iter_errors(doc), key=lambda e: (len(e.absolute_path), list(map(str, e.absolute_path))))
    if errors:
        err = errors[-1]
        raise SchemaError(json_path(err.absolute_path), err.message)


# --------------------------------------------------------------------------
# encoders
# --------------------------------------------------------------------------


def encode_group(G: FgAbGroup) -> dict:
    return {"rank": G.free_rank, "torsion": list(G.torsion)}


def encode_element(g: GroupEl) -> dict:
    return {"free": list(g.free), "tors": list(g.tors)}


def encode_poly(p: GroupRingElem) -> list[dict]:
    return [{"exp": encode_element(g), "coef": str(c)} for g, c in p.items()]


def encode_orbifold(Y: Orbifold3) -> dict:
    out = {
        "b1": Y.b1,
        "h2": encode_group(Y.h2),
        "loci": [{"alpha": l.alpha, "kappa": encode_element(l.kappa)} for l in Y.loci],
        "pairing": [list(row) for row in Y.pairing],
        "cup11": [[list(r) for r in m] for m in Y.cup11],
    }
    if Y.cup_h1h1 is not None:
        out["cup_h1h1"] = [[encode_element(g) for g in row] for row in Y.cup_h1h1]
    return out


def encode_picard(L: PicardElem) -> dict:
    return {"c": encode_element(L.c), "betas": list(L.betas)}


# --------------------------------------------------------------------------
# decoders (documents are assumed schema-valid; shape errors carry a path)
# --------------------------------------------------------------------------


def decode_group(doc: dict, path: str = "$") -> FgAbGroup:
    try:
        return FgAbGroup(doc["rank"], tuple(doc.get("torsion", ())))
    except ValueError as exc:
        raise SchemaError(f"{path}.torsion", str(exc)) from None


def decode_element(G: FgAbGroup, doc: dict, path: str = "$") -> GroupEl:
    free = doc.get("free", [])
    tors = doc.get("tors", [])
    if len(free) != G.free_rank and not (not free and G.free_rank):
        raise SchemaError(f"{path}.free", f"expected {G.free_rank} free coordinates, got {len(free)}")
    if len(tors) != len(G.torsion) and not (not tors and G.torsion):
        raise SchemaError(f"{path}.tors", f"expected {len(G.torsion)} torsion coordinates, got {len(tors)}")
    return G.element(free, tors)


def decode_coef(value: str | int) -> int:
    return int(value)


def decode_poly(G: FgAbGroup, doc: list, path: str = "$") -> GroupRingElem:
    terms = [
        (decode_element(G, t["exp"], f"{path}[{i}].exp"), decode_coef(t["coef"])) for i, t in enumerate(doc)
    ]
    return GroupRingElem(G, terms)


def decode_orbifold(doc: dict, path: str = "$") -> Orbifold3:
    h2 = decode_group(doc["h2"], f"{path}.h2")
    loci = []
    for i, l in enumerate(doc.get("loci", [])):
        kappa = decode_element(h2, l.get("kappa", {}), f"{path}.loci[{i}].kappa")
        loci.append(Locus(l["alpha"], kappa))
    b1 = doc["b1"]
    pairing = doc.get("pairing", [])
    if pairing and (len(pairing) != b1 or any(len(r) != b1 for r in pairing)):
        raise SchemaError(f"{path}.pairing", f"expected a {b1} x {b1} matrix")
    cup11 = doc.get("cup11", [])
    if cup11 and (
        len(cup11) != b1 or any(len(m) != b1 or any(len(r) != b1 for r in m) for m in cup11)
    ):
        raise SchemaError(f"{path}.cup11", f"expected a {b1} x {b1} x {b1} tensor")
    table = doc.get("cup_h1h1")
    if table is not None:
        if len(table) != b1 or any(len(r) != b1 for r in table):
            raise SchemaError(f"{path}.cup_h1h1", f"expected a {b1} x {b1} table")
        table = tuple(
            tuple(decode_element(h2, g, f"{path}.cup_h1h1[{a}][{b}]") for b, g in enumerate(row))
            for a, row in enumerate(table)
        )
    return Orbifold3(h2=h2, b1=b1, loci=tuple(loci), pairing=pairing, cup11=cup11, cup_h1h1=table)


def decode_picard(Y: Orbifold3, doc: dict, path: str = "$") -> PicardElem:
    c = decode_element(Y.h2, doc["c"], f"{path}.c")
    betas = doc.get("betas", [])
    if len(betas) != Y.n_loci and not (not betas and Y.n_loci):
        raise SchemaError(f"{path}.betas", f"expected {Y.n_loci} betas, got {len(betas)}")
    return PicardElem(Y, c, tuple(betas))


def dumps(doc: Any, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"
