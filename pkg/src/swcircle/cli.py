"""Command-line front end: ``sw-circle <command> [--input PATH] [--output PATH] [--pretty]``.

Exit status: 0 on success, 1 when the input is well-formed but mathematically
invalid, 2 when it fails to parse or violates the schema.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any

from . import __version__
from .abelian import is_torsion
from .fourman import CircleFourManifold, intersection_form
from .groupring import Z, GroupRingElem, coefficient, format_poly, is_symmetric
from .jsonio import (
    SCHEMA_VERSION,
    SchemaError,
    decode_coef,
    decode_element,
    decode_orbifold,
    decode_picard,
    decode_poly,
    dumps,
    encode_element,
    encode_group,
    encode_orbifold,
    encode_picard,
    encode_poly,
    validate_schema,
)
from .orbifold import (
    E,
    Orbifold3,
    PicardElem,
    is_smooth_total_space,
    pic_add,
    pic_group,
    pic_identity,
    unit_circle_gluing,
)
from .swcalc import (
    SW3Invariant,
    alexander_from_seifert,
    check_simple_type,
    example_63,
    sw4_from_sw3,
    theorem_a_validate,
    wall_crossing_invariant,
    whitehead_construction,
)

COMMANDS = ("picard", "cohomology", "sw3", "sw4", "alexander", "example-63", "validate")


def _header(command: str) -> dict[str, Any]:
    return {"schema_version": SCHEMA_VERSION, "command": command}


def _cohomology_doc(X: CircleFourManifold) -> dict[str, Any]:
    rep = X.report
    pres = pic_group(X.base)
    Y = X.base
    return {
        "chi": encode_picard(X.chi),
        "chi_is_torsion": is_torsion(pres.group, pres.to_group(X.chi)),
        "h1": encode_group(rep.h1),
        "h2": encode_group(rep.h2),
        "h2_pullback_part": encode_group(rep.h2_pullback_part),
        "h2_kernel_rank": rep.h2_kernel_rank,
        "b1": rep.b1,
        "b2": rep.b2,
        "b3": rep.b3,
        "b_plus": rep.b_plus,
        "b_minus": rep.b_minus,
        "signature": rep.signature,
        "euler_char": rep.euler_char,
        "intersection_form": intersection_form(X).as_dict(),
        "pullback": {
            "h2": [encode_element(rep.pullback(pres.to_group(_h2_gen(Y, k)))) for k in range(Y.h2.ngens)],
            "E": [encode_element(rep.pullback(pres.to_group(E(Y, i)))) for i in range(Y.n_loci)],
        },
    }


def _h2_gen(Y: Orbifold3, k: int) -> PicardElem:
    return PicardElem(Y, Y.h2.gens()[k])


def _sw3_from_doc(doc: dict) -> SW3Invariant:
    if "whitehead" in doc:
        wh = doc["whitehead"]
        d1 = decode_poly(Z, wh["delta1"], "$.whitehead.delta1")
        d2 = decode_poly(Z, wh["delta2"], "$.whitehead.delta2")
        return whitehead_construction(d1, d2)
    Y = decode_orbifold(doc["orbifold"], "$.orbifold")
    return _sw3_over(Y, doc, "sw3" if "sw3" in doc else "poly")


def _sw3_over(Y: Orbifold3, doc: dict, key: str) -> SW3Invariant:
    if "seifert_terms" in doc:
        terms = [
            (decode_picard(Y, t["seifert"], f"$.seifert_terms[{i}].seifert"), decode_coef(t["coef"]))
            for i, t in enumerate(doc["seifert_terms"])
        ]
        return SW3Invariant.from_seifert_terms(Y, terms)
    G = pic_group(Y).group
    return SW3Invariant(Y, decode_poly(G, doc[key], f"$.{key}"))


def _sw3_doc(sw3: SW3Invariant) -> dict[str, Any]:
    pres = pic_group(sw3.orbifold)
    return {
        "orbifold": encode_orbifold(sw3.orbifold),
        "pic_group": encode_group(pres.group),
        "poly": encode_poly(sw3.poly),
        "symmetric": is_symmetric(sw3.poly),
        "total": str(sw3.poly.total()),
    }


def _sw4_doc(sw4) -> dict[str, Any]:
    X = sw4.manifold
    proj = X.report.pullback
    pres = pic_group(X.base)
    terms = encode_poly(sw4.poly)
    for t, (g, _) in zip(terms, sw4.poly.items()):
        t["lift"] = encode_picard(pres.from_group(proj.lift(g)))
    return {
        "h2_pullback_part": encode_group(X.report.h2_pullback_part),
        "poly": terms,
        "chamber_note": sw4.chamber_note.value,
        "simple_type": check_simple_type(sw4),
        "wall_crossing_invariant": wall_crossing_invariant(X),
        "b_plus": X.report.b_plus,
        "total": str(sw4.poly.total()),
    }


def _lifted_display(sw4, names=("x", "y")) -> str:
    X = sw4.manifold
    proj = X.report.pullback
    pres = pic_group(X.base)
    G = pres.group
    lifted = GroupRingElem(G, [(pres.to_group(pres.from_group(proj.lift(g))), c) for g, c in sw4.poly.items()])
    return format_poly(lifted, names)


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------


def cmd_picard(doc: dict) -> dict[str, Any]:
    Y = decode_orbifold(doc["orbifold"], "$.orbifold")
    pres = pic_group(Y)
    bundles = [decode_picard(Y, b, f"$.bundles[{i}]") for i, b in enumerate(doc.get("bundles", []))]
    total = pic_identity(Y)
    out_bundles = []
    for L in bundles:
        total = pic_add(total, L)
        g = pres.to_group(L)
        out_bundles.append(
            {
                "seifert": encode_picard(L),
                "class": encode_element(g),
                "order": pres.group.order(g),
                "desingularization": encode_element(L.c),
                "smooth_total_space": is_smooth_total_space(L),
                "gluing": [
                    {
                        "alpha": r.alpha,
                        "beta": r.beta,
                        "d": r.d,
                        "meridian_coeff": r.meridian_coeff,
                        "fiber_coeff": r.fiber_coeff,
                    }
                    for r in unit_circle_gluing(L)
                ],
            }
        )
    return {
        **_header("picard"),
        "pic_group": encode_group(pres.group),
        "generators": {
            "h2": [encode_element(pres.to_group(_h2_gen(Y, k))) for k in range(Y.h2.ngens)],
            "E": [encode_element(pres.to_group(E(Y, i))) for i in range(Y.n_loci)],
        },
        "bundles": out_bundles,
        "tensor_product": encode_picard(total),
    }


def cmd_cohomology(doc: dict) -> dict[str, Any]:
    Y = decode_orbifold(doc["orbifold"], "$.orbifold")
    X = CircleFourManifold(Y, decode_picard(Y, doc["chi"], "$.chi"))
    return {**_header("cohomology"), **_cohomology_doc(X)}


def cmd_sw3(doc: dict) -> dict[str, Any]:
    return {**_header("sw3"), **_sw3_doc(_sw3_from_doc(doc))}


def cmd_sw4(doc: dict) -> dict[str, Any]:
    Y = decode_orbifold(doc["orbifold"], "$.orbifold")
    X = CircleFourManifold(Y, decode_picard(Y, doc["chi"], "$.chi"))
    sw3 = _sw3_over(Y, doc, "sw3")
    return {**_header("sw4"), **_sw4_doc(sw4_from_sw3(X, sw3))}


def cmd_alexander(doc: dict) -> dict[str, Any]:
    delta = alexander_from_seifert(doc["seifert_matrix"])
    return {
        **_header("alexander"),
        "group": encode_group(Z),
        "poly": encode_poly(delta),
        "display": format_poly(delta, ["t"]),
        "genus": len(doc["seifert_matrix"]) // 2,
    }


def cmd_example_63(doc: dict | None = None) -> dict[str, Any]:
    ex = example_63()
    Y = ex.sw3.orbifold
    pres = pic_group(Y)
    at_22 = pres.to_group(PicardElem(Y, Y.h2.element((2, 2))))
    folded = ex.manifold.report.pullback(at_22)
    return {
        **_header("example-63"),
        "sw3": {**_sw3_doc(ex.sw3), "display": format_poly(ex.sw3.poly, ["x", "y"])},
        "cohomology": _cohomology_doc(ex.manifold),
        "sw4": {**_sw4_doc(ex.sw4), "display": _lifted_display(ex.sw4)},
        "spot_checks": {
            "sw3_at_2m1_plus_2m2": str(coefficient(ex.sw3.poly, at_22)),
            "sw4_at_pullback_of_2m1_plus_2m2": str(coefficient(ex.sw4.poly, folded)),
        },
    }


def cmd_validate(doc: dict) -> tuple[dict[str, Any], int]:
    Y = decode_orbifold(doc["orbifold"], "$.orbifold")
    X = CircleFourManifold(Y, decode_picard(Y, doc["chi"], "$.chi"))
    h2 = X.report.h2
    proposed: dict = {}
    for i, entry in enumerate(doc["proposed"]):
        g = decode_element(h2, entry["class"], f"$.proposed[{i}].class")
        proposed[g] = proposed.get(g, 0) + decode_coef(entry["value"])
    res = theorem_a_validate(X, proposed)
    out = {
        **_header("validate"),
        "h2": encode_group(h2),
        "b_plus": X.report.b_plus,
        "mode": res.mode,
        "accepted": res.accepted,
        "offending": [encode_element(g) for g in res.offending],
        "messages": list(res.messages),
    }
    return out, 0 if res.accepted else 1


HANDLERS = {
    "picard": cmd_picard,
    "cohomology": cmd_cohomology,
    "sw3": cmd_sw3,
    "sw4": cmd_sw4,
    "alexander": cmd_alexander,
    "validate": cmd_validate,
}


def run(command: str, doc: Any) -> tuple[dict[str, Any], int]:
    """Execute one job on an already-parsed document; returns (output, exit status)."""
    if command == "example-63":
        return cmd_example_63(), 0
    validate_schema(command, doc)
    result = HANDLERS[command](doc)
    if isinstance(result, tuple):
        return result
    return result, 0


def _read_input(arg: str | None) -> str:
    if arg is None or arg == "-":
        return sys.stdin.read()
    if arg.lstrip().startswith(("{", "[")):
        return arg
    return Path(arg).read_text(encoding="utf-8")


def _error(kind: str, message: str, path: str | None = None) -> str:
    err: dict[str, Any] = {"kind": kind, "message": message}
    if path is not None:
        err["path"] = path
    return dumps({"schema_version": SCHEMA_VERSION, "error": err})


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sw-circle",
        description="Seiberg-Witten invariants of 4-manifolds with fixed-point-free circle actions.",
    )
    parser.add_argument(
        "--version", action="version", version=f"sw-circle {__version__} (schema {SCHEMA_VERSION})"
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        if name != "example-63":
            p.add_argument("--input", "-i", default="-", help="JSON file, '-' for stdin, or an inline document")
        p.add_argument("--output", "-o", default=None, help="output file (default: stdout)")
        p.add_argument("--pretty", action="store_true", help="indent the JSON output")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    doc = None
    if args.command != "example-63":
        try:
            doc = json.loads(_read_input(args.input))
        except (OSError, json.JSONDecodeError) as exc:
            sys.stderr.write(_error("parse", str(exc)))
            return 2
    try:
        out, status = run(args.command, doc)
    except SchemaError as exc:
        sys.stderr.write(_error("schema", exc.message, exc.path))
        return 2
    except ValueError as exc:
        sys.stderr.write(_error("validation", str(exc)))
        return 1
    text = dumps(out, pretty=args.pretty)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
