"""Command line interface.

Subcommands: cell, variety, mather, euler-obs, d-matrix, table, smallness,
positivity, resolve, codim1, report. Exit codes: 0 success, 1 domain error
(bad partition, beta not below alpha), 2 internal invariant violation
(non-integral Bott sum, engine disagreement under --verify).
"""

from __future__ import annotations

import argparse
import sys

from . import engine, serialize, zelevinsky
from .cache import get_or_compute
from .errors import DomainError, InvariantError
from .partitions import enumerate_box, validate_in_box
from .serialize import parse_partition, part_key


def _common(sub: argparse.ArgumentParser, alpha=False, beta=False) -> None:
    sub.add_argument("--k", type=int, required=True)
    sub.add_argument("--n", type=int, required=True)
    if alpha:
        sub.add_argument("--alpha", required=True, help="partition, e.g. 2,1 (empty: 0)")
    if beta:
        sub.add_argument("--beta", required=True)
    sub.add_argument("--order", default="small", help="small|id|w0|perm:3,1,2")
    sub.add_argument("--engine", default="localization", choices=["localization", "gysin", "both"])
    sub.add_argument("--format", default="pretty", choices=["pretty", "json", "csv", "dot"])
    sub.add_argument("--weights", default=None, help="comma separated strictly increasing ints")
    sub.add_argument("--cache-dir", default=None)
    sub.add_argument("--jobs", type=int, default=1)
    sub.add_argument("--verify", action="store_true", help="cross-check engines (exit 2 on mismatch)")
    sub.add_argument("--figure", default=None, help="also render a PNG figure to this path")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="csm", description=__doc__)
    subs = p.add_subparsers(dest="command", required=True)
    for name, needs_alpha in [
        ("cell", True),
        ("variety", True),
        ("mather", True),
        ("d-matrix", False),
        ("smallness", False),
        ("positivity", False),
    ]:
        _common(subs.add_parser(name), alpha=needs_alpha)
    _common(subs.add_parser("euler-obs"), alpha=True, beta=True)
    t = subs.add_parser("table")
    _common(t)
    t.add_argument("--kind", default="cell", choices=["cell", "variety", "mather", "d-matrix", "euler-obs"])
    r = subs.add_parser("resolve")
    _common(r, alpha=True)
    c = subs.add_parser("codim1")
    _common(c, alpha=True)
    c.add_argument("--peak", type=int, default=None, help="1-based peak index; default all")
    rep = subs.add_parser("report")
    rep.add_argument("--k", type=int, required=True)
    rep.add_argument("--n", type=int, required=True)
    rep.add_argument("--out-dir", required=True)
    rep.add_argument("--cache-dir", default=None)
    rep.add_argument("--jobs", type=int, default=1)
    return p


def _strategy(args):
    if args.order.startswith("perm:"):
        return tuple(int(x) for x in args.order[5:].split(","))
    if args.order not in engine.ORDER_STRATEGIES:
        raise DomainError(f"unknown order {args.order!r}")
    return args.order


def _weights(args, n):
    if args.weights is None:
        return None
    return tuple(int(x) for x in args.weights.split(","))


def _box_order(k, n):
    return enumerate_box(k, n - k)


def _emit_expansion(exp, args) -> str:
    order = _box_order(args.k, args.n)
    if args.format == "json":
        return serialize.expansion_json(exp, order)
    if args.format == "csv":
        return serialize.expansion_csv(exp, order)
    if args.format == "dot":
        raise DomainError("dot format is only available for resolve")
    return serialize.expansion_pretty(exp, order)


def _single_class(args, kind: str) -> str:
    alpha = parse_partition(args.alpha)
    strategy = _strategy(args)
    eng = args.engine
    verify = args.verify or eng == "both"
    eng = "localization" if eng == "both" else eng
    weights = _weights(args, args.n)
    if kind == "cell":
        exp = engine.csm_cell(
            alpha, args.k, args.n, strategy, engine=eng, verify=verify, weights=weights
        )
    elif kind == "variety":
        exp = engine.csm_variety(
            alpha, args.k, args.n, strategy, engine=eng, verify=verify, weights=weights
        )
    else:
        exp = engine.chern_mather(
            alpha, args.k, args.n, engine=eng, verify=verify, weights=weights
        )
    return _emit_expansion(exp, args)


def _table(args, kind: str) -> engine.CsmTable:
    strategy = args.order if args.order in engine.ORDER_STRATEGIES else "small"
    key = {
        "kind": kind,
        "k": args.k,
        "n": args.n,
        "strategy": strategy,
        "engine": args.engine,
    }
    payload = get_or_compute(
        args.cache_dir,
        key,
        lambda: serialize.table_json(
            engine.table(args.k, args.n, kind, strategy, jobs=args.jobs, verify=args.verify)
        ),
    )
    return serialize.table_from_json(payload)


def _emit_table(t, args) -> str:
    if args.format == "json":
        return serialize.table_json(t)
    if args.format == "csv":
        return serialize.table_csv(t)
    return serialize.table_pretty(t)


def _run_smallness(args) -> str:
    rows = []
    for alpha in _box_order(args.k, args.n):
        m = zelevinsky.peak_count(alpha, args.k)
        ident = zelevinsky.identity_order(m)
        rev = zelevinsky.reversing_order(m)
        rows.append(
            {
                "alpha": part_key(alpha),
                "peaks": m,
                "id_small": zelevinsky.is_small(alpha, ident, args.k),
                "w0_small": zelevinsky.is_small(alpha, rev, args.k),
                "first_small": list(zelevinsky.find_small_order(alpha, args.k)),
            }
        )
    if args.format == "json":
        return serialize.dumps(rows)
    if args.format == "csv":
        head = "alpha,peaks,id_small,w0_small,first_small"
        body = [
            f"({r['alpha'].replace(',', ' ')}),{r['peaks']},{r['id_small']},{r['w0_small']},"
            f"\"{','.join(map(str, r['first_small']))}\""
            for r in rows
        ]
        return "\n".join([head] + body)
    lines = [
        f"[{r['alpha']}] peaks={r['peaks']} id_small={r['id_small']} "
        f"w0_small={r['w0_small']} first_small={tuple(r['first_small'])}"
        for r in rows
    ]
    return "\n".join(lines)


def _run_positivity(args) -> str:
    rep = engine.positivity_report(args.k, args.n)
    if args.format == "json":
        obj = {
            "k": rep.k,
            "n": rep.n,
            "all_nonnegative": rep.all_nonnegative,
            "minima": {
                kind: {part_key(a): v for a, v in per.items()}
                for kind, per in rep.minima.items()
            },
            "negatives": [
                {"kind": kind, "alpha": part_key(a), "beta": part_key(b), "value": v}
                for kind, a, b, v in rep.negatives
            ],
        }
        return serialize.dumps(obj)
    lines = []
    if args.format == "csv":
        lines.append("kind,alpha,min_coefficient")
        for kind, per in rep.minima.items():
            for a in _box_order(args.k, args.n):
                lines.append(f"{kind},({part_key(a).replace(',', ' ')}),{per[a]}")
        return "\n".join(lines)
    for kind, per in rep.minima.items():
        worst = min(per.values()) if per else 0
        lines.append(f"{kind}: minimum coefficient {worst}")
    if rep.negatives:
        for kind, a, b, v in rep.negatives:
            lines.append(f"NEGATIVE {kind} [{part_key(a)}] at [{part_key(b)}]: {v}")
    else:
        lines.append("all coefficients non-negative")
    return "\n".join(lines)


def _run_resolve(args) -> str:
    alpha = parse_partition(args.alpha)
    strategy = _strategy(args)
    order = engine.order_for(alpha, args.k, strategy)
    plan = zelevinsky.build_plan(alpha, order, args.k, args.n)
    if args.format == "dot":
        return serialize.plan_dot(plan)
    if args.format == "json":
        return serialize.plan_json(plan)
    pf = serialize.peak_form_str(alpha, args.k)
    lines = [
        f"alpha [{part_key(alpha)}] = {pf}, order {plan.order}, dim {plan.dim}",
    ]
    for t, s in enumerate(plan.steps, start=1):
        def describe(b):
            return f"V^{b.index}(dim {b.dim})" if b.kind == "flag" else f"U_{b.index}(dim {b.dim})"

        lines.append(
            f"step {t}: {describe(s.left)} < U_{t}(dim {s.k}) < {describe(s.right)}"
            f"  l={s.l} r={s.r}"
        )
    return "\n".join(lines)


def _run_codim1(args) -> str:
    alpha = parse_partition(args.alpha)
    validate_in_box(alpha, args.k, args.n - args.k)
    m = zelevinsky.peak_count(alpha, args.k)
    peaks = [args.peak] if args.peak is not None else list(range(1, m + 1))
    rows = []
    for i in peaks:
        beta = engine.peak_removal_target(alpha, i, args.k)
        rows.append(
            {
                "peak": i,
                "beta": part_key(beta),
                "cell_coefficient": engine.codim1_coefficient(alpha, i, args.k, args.n),
                "pushforward_coefficient": engine.codim1_pushforward_value(alpha, i, args.k),
            }
        )
    if args.format == "json":
        return serialize.dumps(rows)
    if args.format == "csv":
        head = "peak,beta,cell_coefficient,pushforward_coefficient"
        body = [
            f"{r['peak']},({r['beta'].replace(',', ' ')}),{r['cell_coefficient']},{r['pushforward_coefficient']}"
            for r in rows
        ]
        return "\n".join([head] + body)
    return "\n".join(
        f"peak {r['peak']}: beta [{r['beta']}] cell coefficient {r['cell_coefficient']} "
        f"(pushforward {r['pushforward_coefficient']})"
        for r in rows
    )


def _run_report(args) -> str:
    from pathlib import Path

    from .figures import table_figure

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for kind in ("cell", "variety", "mather", "d-matrix"):
        key = {"kind": kind, "k": args.k, "n": args.n, "strategy": "small", "engine": "localization"}
        payload = get_or_compute(
            args.cache_dir,
            key,
            lambda kind=kind: serialize.table_json(
                engine.table(args.k, args.n, kind, "small", jobs=args.jobs)
            ),
        )
        t = serialize.table_from_json(payload)
        csv_path = out_dir / f"{kind}.csv"
        csv_path.write_text(serialize.table_csv(t))
        written.append(csv_path)
        written.append(table_figure(t, out_dir / f"{kind}.png"))
    rep = engine.positivity_report(args.k, args.n)
    pos_path = out_dir / "positivity.csv"
    lines = ["kind,alpha,min_coefficient"]
    for kind, per in rep.minima.items():
        for a in enumerate_box(args.k, args.n - args.k):
            lines.append(f"{kind},({part_key(a).replace(',', ' ')}),{per[a]}")
    pos_path.write_text("\n".join(lines) + "\n")
    written.append(pos_path)
    return "\n".join(str(p) for p in written)


def run(argv) -> tuple[int, str]:
    """Execute a command line; returns (exit code, output text)."""
    args = build_parser().parse_args(argv)
    cmd = args.command
    try:
        if cmd in ("cell", "variety", "mather"):
            if getattr(args, "figure", None):
                raise DomainError("--figure applies to table and report commands")
            out = _single_class(args, cmd)
        elif cmd == "euler-obs":
            alpha = parse_partition(args.alpha)
            beta = parse_partition(args.beta)
            out = str(engine.euler_obstruction(alpha, beta, args.k, args.n))
        elif cmd == "d-matrix":
            t = _table(args, "d-matrix")
            out = _emit_table(t, args)
            if args.figure:
                from .figures import table_figure

                table_figure(t, args.figure)
        elif cmd == "table":
            t = _table(args, args.kind)
            if args.verify and args.kind in ("cell", "variety", "mather"):
                engine.verify_engines(args.k, args.n)
            out = _emit_table(t, args)
            if args.figure:
                from .figures import table_figure

                table_figure(t, args.figure)
        elif cmd == "smallness":
            out = _run_smallness(args)
        elif cmd == "positivity":
            out = _run_positivity(args)
        elif cmd == "resolve":
            out = _run_resolve(args)
        elif cmd == "codim1":
            out = _run_codim1(args)
        elif cmd == "report":
            out = _run_report(args)
        else:  # pragma: no cover
            raise DomainError(f"unknown command {cmd!r}")
    except DomainError as exc:
        return 1, f"error: {exc}"
    except InvariantError as exc:
        return 2, f"invariant violation: {exc}"
    return 0, out


def main(argv=None) -> int:
    code, out = run(sys.argv[1:] if argv is None else argv)
    stream = sys.stdout if code == 0 else sys.stderr
    print(out, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
