"""Deterministic text formats: partition keys, JSON, CSV and DOT output.

JSON schema (documented here, stable across runs):
  expansion      {"<key>": int, ...}          keys in box enumeration order
  table          {"kind": str, "k": int, "n": int, "index": [keys],
                  "rows": {key: expansion}}
  plan           {"alpha": [ints], "k": int, "n": int, "order": [ints],
                  "peak_form": {"a": [...], "b": [...]},
                  "dim": int, "steps": [{"k": int, "left": bound,
                  "right": bound, "l": int, "r": int}]}
  bound          {"type": "flag"|"factor", "index": int, "dim": int}

Partition keys are comma-joined parts with the empty partition written "0".
"""

from __future__ import annotations

import io
import json

from .engine import CsmTable, Expansion
from .errors import DomainError
from .partitions import Partition, normalize, size, to_peak_form
from .zelevinsky import ResolutionPlan


def part_key(p: Partition) -> str:
    p = normalize(p)
    return ",".join(str(x) for x in p) if p else "0"


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not text:
        raise DomainError("empty partition string")
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise DomainError(f"cannot parse partition {text!r}") from exc
    return normalize(parts)


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def expansion_obj(exp: Expansion, order: list[Partition]) -> dict:
    return {part_key(b): exp[b] for b in order if b in exp and exp[b]}


def expansion_json(exp: Expansion, order: list[Partition]) -> str:
    return dumps(expansion_obj(exp, order))


def expansion_pretty(exp: Expansion, order: list[Partition]) -> str:
    lines = [f"[{part_key(b)}] {exp[b]}" for b in order if b in exp and exp[b]]
    return "\n".join(lines)


def expansion_csv(exp: Expansion, order: list[Partition]) -> str:
    head = ",".join(f"({part_key(b).replace(',', ' ')})" for b in order)
    vals = ",".join(str(exp.get(b, 0)) for b in order)
    return head + "\n" + vals


def table_obj(t: CsmTable) -> dict:
    return {
        "kind": t.kind,
        "k": t.k,
        "n": t.n,
        "index": [part_key(a) for a in t.index],
        "rows": {
            part_key(a): expansion_obj(t.rows[a], list(t.index)) for a in t.index
        },
    }


def table_json(t: CsmTable) -> str:
    return dumps(table_obj(t))


def table_from_json(text: str) -> CsmTable:
    obj = json.loads(text)
    index = tuple(parse_partition(s) for s in obj["index"])
    rows = {
        parse_partition(a): {parse_partition(b): v for b, v in row.items()}
        for a, row in obj["rows"].items()
    }
    return CsmTable(obj["kind"], obj["k"], obj["n"], index, rows)


def table_csv(t: CsmTable) -> str:
    out = io.StringIO()
    head = ["alpha"] + [f"({part_key(b).replace(',', ' ')})" for b in t.index]
    out.write(",".join(head) + "\n")
    for a in t.index:
        row = [f"({part_key(a).replace(',', ' ')})"] + [
            str(t.rows[a].get(b, 0)) for b in t.index
        ]
        out.write(",".join(row) + "\n")
    return out.getvalue()


def table_pretty(t: CsmTable) -> str:
    keys = [part_key(a) for a in t.index]
    width = max(len(k) for k in keys) + 2
    cell = max(max((len(str(v)) for r in t.rows.values() for v in r.values()), default=1), 3)
    out = io.StringIO()
    out.write(f"{t.kind} table for Gr({t.k},{t.n})\n")
    out.write(" " * width + "".join(k.rjust(cell + 1) for k in keys) + "\n")
    for a, ka in zip(t.index, keys):
        vals = [t.rows[a].get(b, 0) for b in t.index]
        out.write(
            ka.ljust(width)
            + "".join((str(v) if v else ".").rjust(cell + 1) for v in vals)
            + "\n"
        )
    return out.getvalue()


def peak_form_str(alpha: Partition, k: int) -> str:
    pf = to_peak_form(alpha, k)
    return f"[{','.join(map(str, pf.a))}|{','.join(map(str, pf.b))}]"


def _bound_obj(b) -> dict:
    return {"type": b.kind, "index": b.index, "dim": b.dim}


def plan_obj(plan: ResolutionPlan) -> dict:
    pf = to_peak_form(plan.alpha, plan.k)
    return {
        "alpha": list(plan.alpha),
        "k": plan.k,
        "n": plan.n,
        "order": list(plan.order),
        "peak_form": {"a": list(pf.a), "b": list(pf.b)},
        "dim": size(plan.alpha),
        "steps": [
            {
                "k": s.k,
                "left": _bound_obj(s.left),
                "right": _bound_obj(s.right),
                "l": s.l,
                "r": s.r,
            }
            for s in plan.steps
        ],
    }


def plan_json(plan: ResolutionPlan) -> str:
    return dumps(plan_obj(plan))


def plan_dot(plan: ResolutionPlan) -> str:
    """Incidence graph: flag spaces and factors, one edge per inclusion."""
    from .partitions import flag_dimensions

    pf = to_peak_form(plan.alpha, plan.k)
    dims = flag_dimensions(pf)
    out = io.StringIO()
    out.write("digraph resolution {\n  rankdir=LR;\n")
    for i, d in enumerate(dims):
        out.write(f'  V{i} [label="V^{i} (dim {d})"];\n')
    for t, s in enumerate(plan.steps, start=1):
        out.write(f'  U{t} [label="U_{t} (dim {s.k})" shape=box];\n')
    for i in range(len(dims) - 1):
        out.write(f"  V{i} -> V{i + 1};\n")

    def node(b) -> str:
        return f"V{b.index}" if b.kind == "flag" else f"U{b.index}"

    for t, s in enumerate(plan.steps, start=1):
        out.write(f"  {node(s.left)} -> U{t};\n")
        out.write(f"  U{t} -> {node(s.right)};\n")
    out.write("}\n")
    return out.getvalue()
