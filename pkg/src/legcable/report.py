"""JSON models for CLI results and the table / ASCII renderings of them.

Renderers only read the model dicts, so every format shows the same data.
"""

from __future__ import annotations

import json
from typing import Any

from legcable.atlas import Branched, Classification, MountainRange
from legcable.cable23 import TransverseClassification, annulus_balance, non_thickenable_slope
from legcable.slopes import Slope, det, farey_path

Model = dict[str, Any]

_WIDTH_SCHEMA = {
    "type": "object",
    "oneOf": [
        {"required": ["exact"], "properties": {"exact": {"type": "string"}}},
        {
            "required": ["interval"],
            "properties": {
                "interval": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2}
            },
        },
    ],
}

_WORD_PAIR = {"type": "array", "items": {"type": "string"}, "minItems": 2, "maxItems": 2}

CLASSIFICATION_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["status", "expr", "tb_bar", "width", "utp", "shape", "parity"],
    "properties": {
        "status": {"const": "ok"},
        "expr": {"type": "string"},
        "tb_bar": {"type": "integer"},
        "width": _WIDTH_SCHEMA,
        "utp": {"enum": ["yes", "no", "unknown"]},
        "parity": {"enum": [0, 1]},
        "peaks_source": {"type": "string"},
        "shape": {
            "type": "object",
            "oneOf": [
                {
                    "required": ["simple"],
                    "properties": {
                        "simple": {
                            "type": "object",
                            "required": ["peaks"],
                            "properties": {"peaks": {"type": "array", "items": {"type": "integer"}}},
                        }
                    },
                },
                {
                    "required": ["branched"],
                    "properties": {
                        "branched": {
                            "type": "object",
                            "required": ["generators", "identifications", "non_identifications"],
                            "properties": {
                                "generators": {
                                    "type": "array",
                                    "items": {
                                        "type": "object",
                                        "required": ["name", "tb", "r", "allowed"],
                                        "properties": {
                                            "name": {"type": "string"},
                                            "tb": {"type": "integer"},
                                            "r": {"type": "integer"},
                                            "allowed": {"enum": ["both", "pos_only", "neg_only"]},
                                        },
                                    },
                                },
                                "identifications": {"type": "array", "items": _WORD_PAIR},
                                "non_identifications": {
                                    "type": "array",
                                    "items": {
                                        "type": "object",
                                        "required": ["left", "right", "scope"],
                                        "properties": {
                                            "left": {"type": "string"},
                                            "right": {"type": "string"},
                                            "scope": {"enum": ["single", "for_all_k"]},
                                            "step": {"type": "array", "items": {"type": "integer"}},
                                        },
                                    },
                                },
                            },
                        }
                    },
                },
            ],
        },
    },
}

RANGE_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["status", "expr", "tb_bar", "floor", "cells"],
    "properties": {
        "status": {"const": "ok"},
        "expr": {"type": "string"},
        "tb_bar": {"type": "integer"},
        "floor": {"type": "integer"},
        "cells": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["r", "tb", "mult"],
                "properties": {
                    "r": {"type": "integer"},
                    "tb": {"type": "integer"},
                    "mult": {"type": "integer", "minimum": 1},
                },
            },
        },
    },
}

NOT_COVERED_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["status", "hypothesis"],
    "properties": {"status": {"const": "not_covered"}, "hypothesis": {"type": "string"}},
}


# -- models ---------------------------------------------------------------------


def classification_model(expr: str, c: Classification) -> Model:
    if c.width is not None:
        width: Model = {"exact": str(c.width)}
    else:
        lo, hi = c.width_bounds
        width = {"interval": [int(lo), int(hi)]}
    if isinstance(c.shape, Branched):
        pres = c.shape.presentation
        shape: Model = {
            "branched": {
                "generators": [
                    {"name": g.name, "tb": g.tb, "r": g.r, "allowed": g.allowed.value}
                    for g in pres.generators
                ],
                "identifications": [[str(a), str(b)] for a, b in pres.identifications],
                "non_identifications": [
                    {"left": str(n.left), "right": str(n.right), "scope": n.scope}
                    | ({"step": list(n.step)} if n.step else {})
                    for n in pres.non_identifications
                ],
            }
        }
    else:
        shape = {"simple": {"peaks": list(c.shape.peaks)}}
    return {
        "status": "ok",
        "expr": expr,
        "tb_bar": c.tb_bar,
        "width": width,
        "utp": c.utp.value,
        "shape": shape,
        "parity": c.parity,
        "peaks_source": c.peaks_source,
    }


def range_model(expr: str, mr: MountainRange) -> Model:
    return {
        "status": "ok",
        "expr": expr,
        "tb_bar": mr.classification.tb_bar,
        "floor": mr.floor,
        "cells": [{"r": r, "tb": tb, "mult": m} for r, tb, m in mr.cells()],
    }


def transverse_model(expr: str, tc: TransverseClassification) -> Model:
    return {
        "status": "ok",
        "expr": expr,
        "floor": tc.floor,
        "classes": [{"sl": sl, "count": n} for sl, n in tc.counts.items()],
    }


def farey_model(s: Slope, t: Slope) -> Model:
    path = farey_path(s, t)
    return {
        "status": "ok",
        "from": str(s),
        "to": str(t),
        "det": det(s, t),
        "neighbors": s != t and abs(det(s, t)) == 1,
        "length": len(path) - 1,
        "path": [str(x) for x in path],
    }


def nonthick_model(max_k: int) -> Model:
    rows = []
    for k in range(max_k + 1):
        m1, m2 = annulus_balance(k)
        rows.append({"k": k, "slope": str(non_thickenable_slope(k)), "m1": m1, "m2": m2})
    return {"status": "ok", "max_k": max_k, "slopes": rows}


def not_covered_model(expr: str, hypothesis: str) -> Model:
    return {"status": "not_covered", "expr": expr, "hypothesis": hypothesis}


def to_json(model: Model) -> str:
    return json.dumps(model, sort_keys=True, indent=2)


# -- text renderings ---------------------------------------------------------------


def _table(headers: list[str], rows: list[list[Any]]) -> str:
    cols = [headers] + [[str(x) for x in row] for row in rows]
    widths = [max(len(r[i]) for r in cols) for i in range(len(headers))]
    lines = ["  ".join(h.rjust(w) for h, w in zip(row, widths)) for row in cols]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _width_text(width: Model) -> str:
    if "exact" in width:
        return width["exact"]
    lo, hi = width["interval"]
    return f"[{lo}, {hi}]"


def _scope_text(n: Model) -> str:
    if n["scope"] != "for_all_k":
        return ""
    a, b = n["step"]
    shift = "".join(f"S{sign}" + (f"^{k}" if k > 1 else "") for sign, k in (("+", a), ("-", b)) if k)
    return f"  (and after any power of {shift})"


def render_table(kind: str, model: Model) -> str:
    if model["status"] == "not_covered":
        return f"not covered: {model['hypothesis']}"
    if kind == "classify":
        out = [
            f"expr      {model['expr']}",
            f"tb_bar    {model['tb_bar']}",
            f"width     {_width_text(model['width'])}",
            f"utp       {model['utp']}",
            f"parity    {model['parity']}",
            f"source    {model['peaks_source']}",
        ]
        if "simple" in model["shape"]:
            out.append("peaks     " + " ".join(str(r) for r in model["shape"]["simple"]["peaks"]))
            return "\n".join(out)
        b = model["shape"]["branched"]
        out += ["", _table(["name", "tb", "r", "allowed"],
                           [[g["name"], g["tb"], g["r"], g["allowed"]] for g in b["generators"]])]
        out += ["", "identifications:"] + [f"  {x} = {y}" for x, y in b["identifications"]]
        out += ["non-identifications:"] + [
            f"  {n['left']} != {n['right']}" + _scope_text(n) for n in b["non_identifications"]
        ]
        return "\n".join(out)
    if kind == "range":
        return _table(["tb", "r", "mult"], [[c["tb"], c["r"], c["mult"]] for c in model["cells"]])
    if kind == "transverse":
        return _table(["sl", "count"], [[c["sl"], c["count"]] for c in model["classes"]])
    if kind == "farey":
        return "\n".join([
            f"det        {model['det']}",
            f"neighbors  {'yes' if model['neighbors'] else 'no'}",
            f"length     {model['length']}",
            f"path       {' -> '.join(model['path'])}",
        ])
    if kind == "nonthick":
        return _table(["k", "slope", "m1", "m2"],
                      [[r["k"], r["slope"], r["m1"], r["m2"]] for r in model["slopes"]])
    raise ValueError(f"unknown report kind {kind!r}")


def _glyph(m: int) -> str:
    if m == 0:
        return "."
    return str(m) if m < 10 else "+"


def ascii_plot(cells: list[Model], floor: int | None = None) -> str:
    """Grid with tb decreasing downward and r across; digits are multiplicities."""
    if not cells:
        return "(empty)"
    mult = {(c["r"], c["tb"]): c["mult"] for c in cells}
    rs = [c["r"] for c in cells]
    tbs = [c["tb"] for c in cells]
    r_lo, r_hi = min(rs), max(rs)
    top = max(tbs)
    bottom = min(tbs) if floor is None else floor
    cw = max(len(str(r_lo)), len(str(r_hi))) + 1
    lw = max(len(str(top)), len(str(bottom)))
    lines = []
    for tb in range(top, bottom - 1, -1):
        row = "".join(_glyph(mult.get((r, tb), 0)).rjust(cw) for r in range(r_lo, r_hi + 1))
        lines.append(f"{str(tb).rjust(lw)} |{row}")
    lines.append(" " * lw + " +" + "-" * (cw * (r_hi - r_lo + 1)))
    lines.append(" " * lw + "  " + "".join(str(r).rjust(cw) for r in range(r_lo, r_hi + 1)))
    lines.append(" " * lw + "  " + "r".center(cw * (r_hi - r_lo + 1)))
    return "\n".join(lines)


def render_ascii(kind: str, model: Model) -> str:
    if model["status"] == "not_covered":
        return f"not covered: {model['hypothesis']}"
    if kind == "range":
        return f"{model['expr']}  (tb_bar {model['tb_bar']})\n" + ascii_plot(model["cells"], model["floor"])
    if kind == "classify":
        shape = model["shape"]
        if "simple" in shape:
            cells = [{"r": r, "tb": model["tb_bar"], "mult": 1} for r in shape["simple"]["peaks"]]
        else:
            cells = [{"r": g["r"], "tb": g["tb"], "mult": 1} for g in shape["branched"]["generators"]]
        return render_table(kind, model) + "\n\nnon-destabilizable classes:\n" + ascii_plot(cells)
    if kind == "transverse":
        lw = max(len(str(c["sl"])) for c in model["classes"]) if model["classes"] else 1
        return "\n".join(
            f"sl {str(c['sl']).rjust(lw)} | " + "#" * c["count"] + f" {c['count']}"
            for c in model["classes"]
        )
    return render_table(kind, model)


def render(kind: str, model: Model, fmt: str) -> str:
    if fmt == "json":
        return to_json(model)
    if fmt == "table":
        return render_table(kind, model)
    if fmt == "ascii":
        return render_ascii(kind, model)
    raise ValueError(f"unknown format {fmt!r}")
