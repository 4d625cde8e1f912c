"""Command line front end.

Usage::

    $ mcf count --a 2,3,4 --b _,1,2 --c _,_,5
    37
    $ mcf expand --values 5/3,7/3 --format json > q.json
    $ mcf evaluate --input q.json
    first: 5/3 (1.66666666666667)
    second: 7/3 (2.33333333333333)

Quotient data comes either inline (``--a/--b/--c`` comma lists, ``_`` marks
a placeholder) or from a JSON document given with ``--input`` (``-`` reads
stdin).  See ``docs/schema.md`` for the document format.

Exit status is 0 on success, 1 on a domain error (for instance signed
conditions that break the mixed-tiling rules) and 2 on a usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import core, identities, jacobi
from .errors import MCFError
from .tiling import (
    HeightConditions,
    count_B,
    count_C,
    count_circular,
    count_degree_m,
    count_fast,
    count_mixed,
    enumerate_circular,
    enumerate_degree_m,
    enumerate_mixed,
    enumerate_plain,
    enumerate_prefixed,
)

SCHEMA_VERSION = 1
_INT64 = 2**63


class UsageError(Exception):
    pass


# -- input ---------------------------------------------------------------


def _parse_int(token, placeholder):
    if token is None or token == "_":
        return placeholder
    if isinstance(token, bool):
        raise UsageError(f"not an integer: {token!r}")
    if isinstance(token, int):
        return token
    if isinstance(token, str):
        try:
            return int(token.strip())
        except ValueError:
            pass
    raise UsageError(f"not an integer: {token!r}")


def _parse_list(text):
    return [t for t in text.split(",") if t.strip() != ""] if text else []


def _int_list(tokens, placeholder=0, first_placeholder=None):
    out = []
    for i, tok in enumerate(tokens):
        ph = first_placeholder if i == 0 and first_placeholder is not None else placeholder
        out.append(_parse_int(tok.strip() if isinstance(tok, str) else tok, ph))
    return out


def _load_document(path):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from None


def _document(args):
    """The job's input as a dict with raw (unparsed) lists."""
    if args.input is not None:
        if any(getattr(args, k, None) is not None for k in ("a", "b", "c", "bounds")):
            raise UsageError("give either --input or inline values, not both")
        doc = _load_document(args.input)
        if not isinstance(doc, dict):
            raise UsageError("input document must be a JSON object")
        version = doc.get("schema_version", SCHEMA_VERSION)
        if version != SCHEMA_VERSION:
            raise UsageError(f"unsupported schema_version {version!r}")
        return doc
    doc = {}
    for key in ("a", "b", "c"):
        value = getattr(args, key, None)
        if value is not None:
            doc[key] = _parse_list(value)
    bounds = getattr(args, "bounds", None)
    if bounds is not None:
        doc["bounds"] = [_parse_list(row) for row in bounds.split(";")]
    if not doc:
        raise UsageError("no input: give --a/--b/--c, --bounds or --input")
    return doc


def _abc(doc, mcf):
    if "a" not in doc:
        raise UsageError("input needs an 'a' sequence")
    a = _int_list(doc["a"])
    n1 = len(a)
    # b and c default to placeholders; for an MCF c_0 is 1 by convention
    b = _int_list(doc.get("b") or ["_"] * n1)
    c = _int_list(doc.get("c") or ["_"] * n1, first_placeholder=1 if mcf else None)
    if not len(a) == len(b) == len(c):
        raise UsageError(f"a, b, c must have equal length (got {len(a)}, {len(b)}, {len(c)})")
    return a, b, c


def _quotients(doc, n=None):
    a, b, c = _abc(doc, mcf=True)
    try:
        pq = core.PartialQuotients(a, b, c)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if n is not None:
        pq = pq.truncate(n)
    return pq


def _conditions(doc, args, n=None):
    a, b, c = _abc(doc, mcf=False)
    wrap = getattr(args, "wrap_bar", None)
    if wrap is None:
        wrap = _parse_int(doc.get("wrap_bar", 0), 0)
    h = HeightConditions(a, b, c, wrap)
    if n is not None:
        h = h.truncate(n)
    return h


def _bounds(doc):
    if "bounds" in doc:
        rows = [_int_list(row) for row in doc["bounds"]]
    elif "a" in doc:
        rows = list(_abc(doc, mcf=False))
    else:
        raise UsageError("degree-m input needs 'bounds'")
    degree = doc.get("degree")
    if degree is not None and degree != len(rows) - 1:
        raise UsageError(f"degree {degree} does not match {len(rows)} bound rows")
    return rows


# -- output --------------------------------------------------------------


def _json_int(x):
    return x if -_INT64 <= x < _INT64 else str(x)


def _float(x):
    return float(f"{float(x):.15g}")


def _emit(out, args, text_lines, payload):
    if args.format == "json":
        json.dump(payload, out, indent=2)
        out.write("\n")
    else:
        for line in text_lines:
            out.write(f"{line}\n")


# -- commands ------------------------------------------------------------


def cmd_expand(args, out):
    try:
        values = [Fraction(v) if not args.float else float(v) for v in _parse_list(args.values)]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad --values: {exc}") from None
    if not values:
        raise UsageError("--values needs at least one number")
    if len(values) == 2:
        if args.float:
            res = jacobi.jacobi_expand_float(*values, args.max_steps, args.zero_tol)
        else:
            res = jacobi.jacobi_expand(*values, args.max_steps)
        rows = [list(res.quotients.a), list(res.quotients.b), list(res.quotients.c)]
    else:
        res = jacobi.perron_expand(values, args.max_steps, args.zero_tol)
        rows = [list(r) for r in res.quotients] + [[1] * (res.steps + 1)]
    status = {
        "terminated": res.terminated,
        "exact": res.exact,
        "steps": res.steps,
        "remainder": [str(r) for r in res.remainder],
    }
    if len(values) == 2:
        payload = {
            "schema_version": SCHEMA_VERSION,
            "a": [_json_int(x) for x in rows[0]],
            "b": [_json_int(x) for x in rows[1]],
            "c": [_json_int(x) for x in rows[2]],
        }
        names = ["a", "b", "c"]
    else:
        payload = {
            "schema_version": SCHEMA_VERSION,
            "degree": len(values),
            "bounds": [[_json_int(x) for x in row] for row in rows],
        }
        names = [f"a({i})" for i in range(1, len(values) + 1)] + ["last"]
    payload.update(status)
    lines = [f"{name}: {' '.join(str(x) for x in row)}" for name, row in zip(names, rows)]
    lines += [
        f"terminated: {str(res.terminated).lower()}",
        f"exact: {str(res.exact).lower()}",
        f"steps: {res.steps}",
    ]
    if res.remainder and any(res.remainder):
        lines.append(f"remainder: {' '.join(str(r) for r in res.remainder)}")
    _emit(out, args, lines, payload)


def cmd_convergents(args, out):
    doc = _document(args)
    if "bounds" in doc:
        rows = _bounds(doc)
        vectors = jacobi.perron_convergents(rows[:-1], rows[-1])
        indexed = list(enumerate(vectors))
        if args.n is not None:
            indexed = [indexed[args.n]]
        lines = [
            ("" if args.n is not None else f"n={i} ") + " ".join(f"X{j}={x}" for j, x in enumerate(v))
            for i, v in indexed
        ]
        payload = {"convergents": [{"n": i, "vector": [str(x) for x in v]} for i, v in indexed]}
    else:
        pq = _quotients(doc)
        triples = core.convergents_by_matrix(pq)
        if args.n is not None:
            if not 0 <= args.n <= pq.n:
                raise UsageError(f"--n must be between 0 and {pq.n}")
            triples = [triples[args.n]]
        lines = [
            ("" if args.n is not None else f"n={t.index} ") + f"A={t.A} B={t.B} C={t.C}"
            for t in triples
        ]
        payload = {
            "convergents": [
                {"n": t.index, "A": str(t.A), "B": str(t.B), "C": str(t.C)} for t in triples
            ]
        }
    _emit(out, args, lines, payload)


def cmd_evaluate(args, out):
    pq = _quotients(_document(args), args.n)
    pair = core.evaluate_finite(pq)
    lines = [
        f"first: {pair.first} ({_float(pair.first)!r})",
        f"second: {pair.second} ({_float(pair.second)!r})",
    ]
    payload = {
        "n": pq.n,
        "first": str(pair.first),
        "second": str(pair.second),
        "first_float": _float(pair.first),
        "second_float": _float(pair.second),
    }
    _emit(out, args, lines, payload)


def _count_payload(out, args, kind, value):
    _emit(out, args, [str(value)], {"count": str(value), "kind": kind})


def cmd_count(args, out):
    h = _conditions(_document(args), args, args.n)
    fn = {"A": count_fast, "B": count_B, "C": count_C}[args.kind]
    _count_payload(out, args, args.kind, fn(h))


def cmd_count_circular(args, out):
    h = _conditions(_document(args), args, args.n)
    _count_payload(out, args, "circular", count_circular(h))


def cmd_count_mixed(args, out):
    h = _conditions(_document(args), args, args.n)
    _count_payload(out, args, "mixed", count_mixed(h))


def cmd_count_degree_m(args, out):
    rows = _bounds(_document(args))
    try:
        value = count_degree_m(rows, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _count_payload(out, args, f"degree-{len(rows) - 1}", value)


def cmd_enumerate(args, out):
    doc = _document(args)
    if args.mode == "degree-m":
        tilings = [
            " ".join(f"len{length}@{start}×{height}" for length, start, height in t)
            for t in enumerate_degree_m(_bounds(doc), args.n, args.budget)
        ]
    else:
        h = _conditions(doc, args, args.n)
        fn = {
            "plain": enumerate_plain,
            "prefixed": enumerate_prefixed,
            "circular": enumerate_circular,
            "mixed": enumerate_mixed,
        }[args.mode]
        tilings = [str(t) for t in fn(h, args.budget)]
    if args.format == "json":
        _emit(out, args, [], {"mode": args.mode, "count": len(tilings), "tilings": tilings})
    else:
        for line in tilings:
            out.write(f"{line}\n")


def cmd_identities(args, out):
    checks = ["factorial", "limit", "e"] if args.check == "all" else [args.check]
    lines, payload = [], {}
    for check in checks:
        if check == "factorial":
            n = 20 if args.n is None else args.n
            rep = identities.check_factorial_identity(n)
        elif check == "e":
            n = 15 if args.n is None else args.n
            rep = identities.check_e_remark(n)
        else:
            n = 15 if args.n is None else args.n
            exact = identities.estimate_limit(n, exact=True)
            lines += ["name: limit", f"n: {n}", f"estimate: {_float(exact)!r}", f"exact: {exact}"]
            payload["limit"] = {"n": n, "estimate": _float(exact), "exact": str(exact)}
            continue
        lines += [
            f"name: {rep.name}",
            f"verified_up_to: {rep.verified_up_to}",
            f"max_abs_error: {rep.max_abs_error}",
            f"witness: {'none' if rep.witness is None else rep.witness}",
        ]
        payload[rep.name] = {
            "verified_up_to": rep.verified_up_to,
            "max_abs_error": str(rep.max_abs_error),
            "witness": rep.witness,
            "ok": rep.ok,
        }
    _emit(out, args, lines, payload)


# -- parser --------------------------------------------------------------


def _add_input(p, bounds=False):
    p.add_argument("--a", help="square bounds / partial quotients a_0..a_n, comma separated")
    p.add_argument("--b", help="b_0..b_n; '_' is a placeholder (0)")
    p.add_argument("--c", help="c_0..c_n; '_' is a placeholder (0, or 1 for c_0 of an MCF)")
    if bounds:
        p.add_argument("--bounds", help="degree-m bounds, rows separated by ';'")
    p.add_argument("--input", metavar="PATH", help="JSON input document ('-' for stdin)")
    p.add_argument("--n", type=int, help="truncate to indices 0..n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mcf", description="Multidimensional continued fractions and tiling counts."
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", parents=[common], help="Jacobi / Perron expansion")
    p.add_argument("--values", required=True, help="comma separated numbers, e.g. 5/3,7/3")
    p.add_argument("--max-steps", type=int, default=30)
    p.add_argument("--float", action="store_true", help="floating mode (for irrational inputs)")
    p.add_argument("--zero-tol", type=float, default=jacobi.DEFAULT_ZERO_TOL)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("convergents", parents=[common], help="convergent triples A, B, C")
    _add_input(p, bounds=True)
    p.set_defaults(func=cmd_convergents)

    p = sub.add_parser("evaluate", parents=[common], help="exact value of a finite MCF")
    _add_input(p)
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("count", parents=[common], help="count linear tilings")
    _add_input(p)
    p.add_argument("--kind", choices=["A", "B", "C"], default="A")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", parents=[common], help="list tilings")
    _add_input(p, bounds=True)
    p.add_argument(
        "--mode", choices=["plain", "prefixed", "circular", "mixed", "degree-m"], default="plain"
    )
    p.add_argument("--wrap-bar", type=int, default=None)
    p.add_argument("--budget", type=int, default=None, help="overrides MCF_ENUM_BUDGET")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("count-circular", parents=[common], help="count circular tilings")
    _add_input(p)
    p.add_argument("--wrap-bar", type=int, default=None, help="bound for bars over n-1, n, 0")
    p.set_defaults(func=cmd_count_circular)

    p = sub.add_parser("count-mixed", parents=[common], help="count mixed (signed) tilings")
    _add_input(p)
    p.set_defaults(func=cmd_count_mixed)

    p = sub.add_parser("count-degree-m", parents=[common], help="count tilings with m+1 tile lengths")
    _add_input(p, bounds=True)
    p.set_defaults(func=cmd_count_degree_m)

    p = sub.add_parser("identities", parents=[common], help="check the factorial / e identities")
    p.add_argument("--check", choices=["factorial", "limit", "e", "all"], default="all")
    p.add_argument("--n", type=int, default=None)
    p.set_defaults(func=cmd_identities)
    return parser


def run(args, out=None) -> int:
    """Execute a parsed job, writing results to ``out``; returns the exit status."""
    out = sys.stdout if out is None else out
    try:
        args.func(args, out)
    except UsageError as exc:
        print(f"mcf {args.command}: usage error: {exc}", file=sys.stderr)
        return 2
    except MCFError as exc:
        print(f"mcf {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except (ValueError, TypeError, IndexError) as exc:
        print(f"mcf {args.command}: invalid input: {exc}", file=sys.stderr)
        return 2
    return 0


def main(argv=None, out=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    return run(args, out)


if __name__ == "__main__":
    sys.exit(main())
