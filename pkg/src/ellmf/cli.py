"""Command-line front end.

Every command prints deterministic output in one of three formats (text,
json, csv); json output is canonical (sorted keys, no floats) so golden
files regenerate byte-exactly.  Exit codes: 0 success, 1 failed
verification/classification, 2 invalid input.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import k0, mf as mfmod, shift, tables, tubular
from .poly import BivariatePoly
from .qlambda import Scalar, p_trim

RATIONAL_RE = re.compile(r"-?[0-9]+(/[1-9][0-9]*)?")


class SchemaError(ValueError):
    pass


def parse_rational(text: str, where: str = "argument") -> Fraction:
    if not RATIONAL_RE.fullmatch(text):
        raise SchemaError(f"{where}: not a rational literal: {text!r}")
    return Fraction(text)


def frac_str(v: Fraction) -> str:
    return str(v)


# --- serialization --------------------------------------------------------

def scalar_to_coeffs(s: Scalar, where: str) -> list[str]:
    try:
        coeffs = s.lambda_coeffs()
    except ValueError:
        raise SchemaError(f"{where}: coefficient is not polynomial "
                          "in lambda")
    return [frac_str(c) for c in coeffs]


def poly_to_json(p: BivariatePoly, where: str):
    return [{"x": i, "y": j, "c": scalar_to_coeffs(c, where)}
            for (i, j), c in p.terms]


def poly_from_json(obj, where: str, numeric: bool) -> BivariatePoly:
    if not isinstance(obj, list):
        raise SchemaError(f"{where}: expected array")
    terms = {}
    for k, t in enumerate(obj):
        path = f"{where}[{k}]"
        if not isinstance(t, dict) or set(t) != {"x", "y", "c"}:
            raise SchemaError(f"{path}: expected object with x, y, c")
        i, j, c = t["x"], t["y"], t["c"]
        if not isinstance(i, int) or not isinstance(j, int) or i < 0 or j < 0:
            raise SchemaError(f"{path}: bad exponents")
        if not isinstance(c, list) or not c:
            raise SchemaError(f"{path}.c: expected nonempty array")
        if numeric and len(c) != 1:
            raise SchemaError(f"{path}.c: numeric-lambda file requires "
                              "constant coefficients")
        vals = []
        for m, s in enumerate(c):
            if not isinstance(s, str):
                raise SchemaError(f"{path}.c[{m}]: expected string")
            vals.append(parse_rational(s, f"{path}.c[{m}]"))
        if (i, j) in terms:
            raise SchemaError(f"{path}: duplicate monomial")
        terms[(i, j)] = Scalar(p_trim(vals))
    return BivariatePoly.from_dict(terms)


def gm_to_json(g: mfmod.GradedMatrix, where: str):
    return {"rows": [[poly_to_json(e, f"{where}.rows[{i}][{j}]")
                      for j, e in enumerate(row)]
                     for i, row in enumerate(g.entries)],
            "row_twists": list(g.row_twists),
            "col_twists": list(g.col_twists)}


def gm_from_json(obj, where: str, numeric: bool) -> mfmod.GradedMatrix:
    if not isinstance(obj, dict) or set(obj) != {"rows", "row_twists",
                                                 "col_twists"}:
        raise SchemaError(f"{where}: expected rows/row_twists/col_twists")
    for key in ("row_twists", "col_twists"):
        tw = obj[key]
        if not isinstance(tw, list) or not all(isinstance(v, int)
                                               for v in tw):
            raise SchemaError(f"{where}.{key}: expected integer array")
    rows = obj["rows"]
    if not isinstance(rows, list):
        raise SchemaError(f"{where}.rows: expected array")
    entries = tuple(
        tuple(poly_from_json(e, f"{where}.rows[{i}][{j}]", numeric)
              for j, e in enumerate(row))
        for i, row in enumerate(rows))
    try:
        return mfmod.GradedMatrix(entries, tuple(obj["row_twists"]),
                                  tuple(obj["col_twists"]))
    except ValueError as exc:
        raise SchemaError(f"{where}: {exc}")


def mf_to_json(m: mfmod.MatrixFactorization, lam):
    return {"lambda": "sym" if lam is None else frac_str(lam),
            "f": poly_to_json(m.f, "f"),
            "A": gm_to_json(m.A, "A"),
            "B": gm_to_json(m.B, "B")}


def mf_from_json(obj) -> tuple[mfmod.MatrixFactorization, Fraction | None]:
    if not isinstance(obj, dict) or set(obj) != {"lambda", "f", "A", "B"}:
        raise SchemaError("root: expected lambda/f/A/B")
    lam_raw = obj["lambda"]
    if lam_raw == "sym":
        lam = None
    elif isinstance(lam_raw, str):
        lam = parse_rational(lam_raw, "lambda")
        if lam in (0, 1):
            raise SchemaError("lambda: must avoid 0 and 1")
    else:
        raise SchemaError('lambda: expected "sym" or rational string')
    numeric = lam is not None
    f = poly_from_json(obj["f"], "f", numeric)
    a = gm_from_json(obj["A"], "A", numeric)
    b = gm_from_json(obj["B"], "B", numeric)
    return mfmod.MatrixFactorization(a, b, f), lam


def betti_to_json(t: tables.BettiTable):
    return {"entries": [{"i": i, "j": j, "beta": v}
                        for (i, j), v in t.entries]}


def betti_from_json(obj) -> tables.BettiTable:
    if not isinstance(obj, dict) or set(obj) != {"entries"}:
        raise SchemaError("root: expected object with entries")
    if not isinstance(obj["entries"], list):
        raise SchemaError("entries: expected array")
    d = {}
    for k, e in enumerate(obj["entries"]):
        path = f"entries[{k}]"
        if not isinstance(e, dict) or set(e) != {"i", "j", "beta"}:
            raise SchemaError(f"{path}: expected i/j/beta")
        i, j, v = e["i"], e["j"], e["beta"]
        if i not in (0, 1) or not isinstance(j, int):
            raise SchemaError(f"{path}: bad index")
        if not isinstance(v, int) or v <= 0:
            raise SchemaError(f"{path}.beta: expected positive integer")
        if (i, j) in d:
            raise SchemaError(f"{path}: duplicate entry")
        d[(i, j)] = v
    return tables.BettiTable.from_dict(d)


def cohom_to_json(t: tables.CohomTable, r: int, d: int, tube: str,
                  mult: int):
    return {"rows": [list(row) for row in t.rows], "r": r, "d": d,
            "tube": tube, "mult": mult}


def emit_json(obj) -> None:
    print(json.dumps(obj, sort_keys=True, separators=(",", ":")))


def emit_csv_rows(rows) -> None:
    for row in rows:
        print(",".join(str(v) for v in row))


# --- commands -------------------------------------------------------------

def cmd_roots(args) -> int:
    roots = k0.enumerate_real_roots(args.m_max, args.n_min, args.n_max)
    recs = [(*cl.coords, k0.rank(cl), k0.degree(cl), k0.chi(cl))
            for cl in roots]
    if args.format == "json":
        emit_json([{"a0": r[0], "a": list(r[1:5]), "n": r[5],
                    "r": r[6], "d": r[7], "chi": r[8]} for r in recs])
    elif args.format == "csv":
        emit_csv_rows(recs)
    else:
        for r in recs:
            print(f"({r[0]}; {r[1]} {r[2]} {r[3]} {r[4]}; {r[5]})  "
                  f"r={r[6]} d={r[7]} chi={r[8]}")
    return 0


def cmd_class_info(args) -> int:
    cl = k0.K0Class(args.a0, (args.a1, args.a2, args.a3, args.a4), args.n)
    r, d, x, mu = k0.invariants(cl)
    q = k0.q_form(cl)
    info = k0.classify_root(cl)
    slope_str = ("undefined" if mu is None
                 else "inf" if mu == float("inf") else str(mu))
    if args.format == "json":
        emit_json({"a0": cl.a0, "a": list(cl.a), "n": cl.n, "r": r, "d": d,
                   "chi": x, "slope": None if mu is None else slope_str,
                   "q": q, "root": info.kind.value,
                   "sheaf": info.is_sheaf_class})
    elif args.format == "csv":
        emit_csv_rows([(*cl.coords, r, d, x, q, info.kind.value)])
    else:
        print(f"class: ({cl.a0}; {' '.join(map(str, cl.a))}; {cl.n})")
        print(f"rank: {r}")
        print(f"degree: {d}")
        print(f"chi: {x}")
        print(f"slope: {slope_str}")
        print(f"q-form: {q}")
        print(f"root: {info.kind.value}")
        print(f"sheaf-class: {'yes' if info.is_sheaf_class else 'no'}")
    return 0


def _cohom_records(p):
    recs = []
    one = tables.cohom_rank_one(p)
    if one is not None:
        recs.append((one, 1, "rank1"))
    for t, mult, tag in tables.cohom_rank_two(p):
        tube = "rank2O" if tag.startswith("socle") else "rank2"
        recs.append((t, mult, tube))
    return recs


def cmd_cohom(args) -> int:
    p = (args.r, args.d)
    try:
        recs = _cohom_records(p)
    except tables.NotReducedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        emit_json([cohom_to_json(t, args.r, args.d, tube, mult)
                   for t, mult, tube in recs])
    elif args.format == "csv":
        emit_csv_rows([(tube, mult, *[v for row in t.rows for v in row])
                       for t, mult, tube in recs])
    else:
        for t, mult, tube in recs:
            print(f"{tube} x{mult}:")
            for row in t.rows:
                print(f"  {row[0]} {row[1]}")
    return 0


def cmd_betti_catalog(args) -> int:
    cat = tables.catalog(args.a_max, args.b_max, args.r_max)
    if args.format == "json":
        emit_json([{"kind": c.kind, "params": list(c.params),
                    **betti_to_json(t)} for c, t in cat])
    elif args.format == "csv":
        emit_csv_rows([(c.kind, *c.params,
                        ";".join(f"{i}:{j}:{v}" for (i, j), v in t.entries))
                       for c, t in cat])
    else:
        for c, t in cat:
            cells = " ".join(f"b[{i},{j}]={v}" for (i, j), v in t.entries)
            print(f"{c.kind}{c.params}: {cells}")
    return 0


def _read_json(path: str):
    try:
        text = (sys.stdin.read() if path == "-"
                else open(path, encoding="utf-8").read())
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}")


def _count_json(c: tables.IndecCount):
    if c.finite is not None:
        return {"finite": c.finite}
    return {"level": c.level, "base": c.base}


def cmd_classify_betti(args) -> int:
    t = betti_from_json(_read_json(args.file))
    try:
        cls = tables.normalize_and_classify(t)
        r, d = tables.rd_from_betti(t)
        count = tables.indec_count(cls)
    except tables.TableError as exc:
        print(f"classification failed: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        emit_json({"kind": cls.kind, "params": list(cls.params),
                   "shift": cls.shift, "r": r, "d": d,
                   "count": _count_json(count)})
    elif args.format == "csv":
        emit_csv_rows([(cls.kind, *cls.params, cls.shift, r, d)])
    else:
        print(f"class: {cls}")
        print(f"rank: {r}")
        print(f"degree: {d}")
        if count.finite is not None:
            print(f"count: finite {count.finite}")
        else:
            print(f"count: family level {count.level} over {count.base}")
    return 0


def cmd_reduce_rd(args) -> int:
    p = (args.r, args.d)
    try:
        q, kk = shift.reduce_to_fundamental(p)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    reg = shift.region(q).name
    if args.format == "json":
        emit_json({"r": q[0], "d": q[1], "k": kk, "region": reg})
    elif args.format == "csv":
        emit_csv_rows([(q[0], q[1], kk, reg)])
    else:
        print(f"reduced: ({q[0]}, {q[1]}) via shift {kk}, region {reg}")
    return 0


def cmd_slope_word(args) -> int:
    try:
        q = parse_rational(args.slope, "slope")
        if q <= 0:
            raise SchemaError("slope: must be positive")
        word = tubular.word_for_slope(q)
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    m = tubular.phi_from_infinity(q)
    if args.format == "json":
        emit_json({"word": str(word), "matrix": [list(m[0]), list(m[1])]})
    elif args.format == "csv":
        emit_csv_rows([(str(word), m[0][0], m[0][1], m[1][0], m[1][1])])
    else:
        print(f"word: {word or '(empty)'}")
        print(f"matrix: [[{m[0][0]},{m[0][1]}],[{m[1][0]},{m[1][1]}]]")
    return 0


def cmd_ulrich(args) -> int:
    recs = []
    for c, t in tables.catalog(args.a_max, args.b_max, args.r_max):
        _, e, muv, is_ulrich = tables.hilbert(t)
        recs.append((c, e, muv, is_ulrich))
    if args.format == "json":
        emit_json([{"kind": c.kind, "params": list(c.params), "e": e,
                    "mu": muv, "ulrich": u} for c, e, muv, u in recs])
    elif args.format == "csv":
        emit_csv_rows([(c.kind, *c.params, e, muv, int(u))
                       for c, e, muv, u in recs])
    else:
        for c, e, muv, u in recs:
            star = "  ULRICH" if u else ""
            print(f"{c.kind}{c.params}: e={e} mu={muv}{star}")
    return 0


def _build_mf(args) -> tuple[mfmod.MatrixFactorization, Fraction | None]:
    lam = None
    if args.lam is not None:
        lam = parse_rational(args.lam, "--lambda")
        if lam in (0, 1):
            raise SchemaError("--lambda: must avoid 0 and 1")
    which = args.what[0]
    rest = args.what[1:]

    def point(need):
        if len(rest) != need:
            raise SchemaError(f"mf build {which}: expected {need} "
                              "point coordinates")
        vals = [parse_rational(s, "point") for s in rest]
        try:
            return mfmod.PointP1(Scalar.of(vals[0]), Scalar.of(vals[1]))
        except ValueError as exc:
            raise SchemaError(f"point: {exc}")

    if which == "kst":
        if rest:
            raise SchemaError("mf build kst takes no arguments")
        m = mfmod.mf_kst()
    elif which == "linear":
        if len(rest) != 1 or rest[0] not in ("1", "2", "3", "4"):
            raise SchemaError("mf build linear I: I must be 1..4")
        m = mfmod.mf_linear(int(rest[0]))
    elif which == "cone":
        m = mfmod.mf_cone(point(2))
    elif which == "reduced":
        m = mfmod.mf_Mp_reduced(point(2))
    else:
        raise SchemaError(f"unknown factorization {which!r}")
    if lam is not None:
        m = m.specialize(lam)
    return m, lam


def _print_mf_text(m: mfmod.MatrixFactorization) -> None:
    for label, g in (("A", m.A), ("B", m.B)):
        print(f"{label}: rows {list(g.row_twists)} cols "
              f"{list(g.col_twists)}")
        for row in g.entries:
            print("  [" + " | ".join(str(e) for e in row) + "]")


def cmd_mf(args) -> int:
    if args.action == "build":
        m, lam = _build_mf(args)
        if args.format == "text":
            _print_mf_text(m)
        else:
            emit_json(mf_to_json(m, lam))
        return 0

    if len(args.what) != 1:
        raise SchemaError(f"mf {args.action}: expected exactly one FILE")
    m, lam = mf_from_json(_read_json(args.what[0]))
    if args.action == "verify":
        cert = mfmod.verify_mf(m)
        if args.format == "json":
            emit_json({"ok": cert.ok,
                       "failures": [{"where": w, "i": i, "j": j,
                                     "defect": str(dd)}
                                    for w, i, j, dd in cert.failures]})
        else:
            print("ok" if cert.ok else "FAIL")
            for w, i, j, dd in cert.failures:
                print(f"  {w} ({i},{j}): {dd}")
        return 0 if cert.ok else 1
    if args.action == "reduce":
        try:
            red = mfmod.reduce_mf(m)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        if args.format == "text":
            _print_mf_text(red)
        else:
            emit_json(mf_to_json(red, lam))
        return 0
    if args.action == "betti":
        try:
            t = mfmod.betti_of_mf(m)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        if args.format == "json":
            emit_json(betti_to_json(t))
        elif args.format == "csv":
            emit_csv_rows([(i, j, v) for (i, j), v in t.entries])
        else:
            for (i, j), v in t.entries:
                print(f"b[{i},{j}] = {v}")
        return 0
    raise SchemaError(f"unknown mf action {args.action!r}")


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json", "csv"),
                     default="text")
    top = argparse.ArgumentParser(prog="ellmf")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", parents=[fmt])
    p.add_argument("--m-max", type=int, default=0)
    p.add_argument("--n-min", type=int, default=0)
    p.add_argument("--n-max", type=int, default=0)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("class-info", parents=[fmt])
    for name in ("a0", "a1", "a2", "a3", "a4", "n"):
        p.add_argument(name, type=int)
    p.set_defaults(func=cmd_class_info)

    p = sub.add_parser("cohom", parents=[fmt])
    p.add_argument("r", type=int)
    p.add_argument("d", type=int)
    p.set_defaults(func=cmd_cohom)

    p = sub.add_parser("betti-catalog", parents=[fmt])
    p.add_argument("--a-max", type=int, default=3)
    p.add_argument("--b-max", type=int, default=3)
    p.add_argument("--r-max", type=int, default=4)
    p.set_defaults(func=cmd_betti_catalog)

    p = sub.add_parser("classify-betti", parents=[fmt])
    p.add_argument("file")
    p.set_defaults(func=cmd_classify_betti)

    p = sub.add_parser("reduce-rd", parents=[fmt])
    p.add_argument("r", type=int)
    p.add_argument("d", type=int)
    p.set_defaults(func=cmd_reduce_rd)

    p = sub.add_parser("slope-word", parents=[fmt])
    p.add_argument("slope")
    p.set_defaults(func=cmd_slope_word)

    p = sub.add_parser("mf", parents=[fmt])
    p.add_argument("action", choices=("build", "verify", "reduce", "betti"))
    p.add_argument("what", nargs="+")
    p.add_argument("--lambda", dest="lam", default=None)
    p.set_defaults(func=cmd_mf)

    p = sub.add_parser("ulrich", parents=[fmt])
    p.add_argument("--a-max", type=int, default=20)
    p.add_argument("--b-max", type=int, default=20)
    p.add_argument("--r-max", type=int, default=40)
    p.set_defaults(func=cmd_ulrich)
    return top


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
