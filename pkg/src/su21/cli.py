"""Command-line surface.

Subcommands: dfun, cg, threej, wigner-eval, structure verify, action-matrix,
classify, diagram, intertwine, verify-all.  Machine output is deterministic
JSON (sorted keys, 15 significant digits); matrices can also be emitted as
CSV, and lattice diagrams as ASCII text or SVG files.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from fractions import Fraction

from .surd import Surd, HalfInt, half
from . import compact, structure, action, decomposition, diagrams, intertwine

EXIT_OK = 0
EXIT_NUMERIC = 1
EXIT_USAGE = 2


# ---------------------------------------------------------------------------
# parsing / formatting helpers
# ---------------------------------------------------------------------------


def parse_half(text: str) -> HalfInt:
    """Half-integer from '3/2', '-1/2', '2', or '1.5'."""
    return half(Fraction(text))


def parse_lambda(text: str):
    """Integer, real, or complex 'a+bi' induction parameter."""
    t = text.strip().replace(" ", "")
    try:
        f = Fraction(t)
        return int(f) if f.denominator == 1 else float(f)
    except ValueError:
        pass
    try:
        z = complex(t.replace("i", "j"))
        return int(z.real) if z.imag == 0 and z.real.is_integer() else z
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse lambda {text!r}") from None


def _f(x: float) -> float:
    """Floats rounded to 15 significant digits for byte-stable JSON."""
    if x != x or x in (math.inf, -math.inf):
        return x
    return float(f"{x:.15g}")


def jsonable(obj):
    if isinstance(obj, float):
        return _f(obj)
    if isinstance(obj, complex):
        return {"im": _f(obj.imag), "re": _f(obj.real)}
    if isinstance(obj, Surd):
        return {"exact": str(obj), "float": _f(obj.eval())}
    if isinstance(obj, HalfInt):
        return obj.twice / 2.0
    if isinstance(obj, Fraction):
        return {"exact": str(obj), "float": _f(float(obj))}
    if isinstance(obj, dict):
        return {k: jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    return obj


def emit(payload, args) -> None:
    text = json.dumps(jsonable(payload), sort_keys=True, indent=2)
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def idx_key(idx: compact.WignerIndex) -> str:
    return ",".join(str(t) for t in idx.key())


def _clambda_json(c: action.CLambda):
    return {
        "im": [jsonable(s) for s in c.im.coeffs],
        "re": [jsonable(s) for s in c.re.coeffs],
    }


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_dfun(args) -> int:
    d = compact.little_d(args.j, args.m1, args.m2)
    value = {"exact": str(d)}
    if args.theta is not None:
        value["float"] = _f(d.eval(args.theta))
    emit({"index": {"j_x2": args.j.twice, "m1_x2": args.m1.twice,
                    "m2_x2": args.m2.twice},
          "value": value}, args)
    return EXIT_OK


def cmd_cg(args) -> int:
    v = compact.cg(args.j1, args.m1, args.j2, args.m2, args.J, args.M)
    emit({"index": {"J_x2": args.J.twice, "M_x2": args.M.twice,
                    "j1_x2": args.j1.twice, "j2_x2": args.j2.twice,
                    "m1_x2": args.m1.twice, "m2_x2": args.m2.twice},
          "value": v}, args)
    return EXIT_OK


def cmd_threej(args) -> int:
    v = compact.threej(args.j1, args.j2, args.j3, args.m1, args.m2, args.m3)
    emit({"index": {"j1_x2": args.j1.twice, "j2_x2": args.j2.twice,
                    "j3_x2": args.j3.twice, "m1_x2": args.m1.twice,
                    "m2_x2": args.m2.twice, "m3_x2": args.m3.twice},
          "value": v}, args)
    return EXIT_OK


def cmd_wigner_eval(args) -> int:
    idx = compact.WignerIndex(args.j, args.n, args.m1, args.m2)
    angles = compact.EulerAngles(args.zeta, args.psi, args.theta, args.phi)
    v = compact.wigner_D(idx, angles)
    emit({"angles": {"phi": _f(args.phi), "psi": _f(args.psi),
                     "theta": _f(args.theta), "zeta": _f(args.zeta)},
          "index": {"j_x2": args.j.twice, "m1_x2": args.m1.twice,
                    "m2_x2": args.m2.twice, "n_x2": args.n.twice},
          "value": v}, args)
    return EXIT_OK


def cmd_structure_verify(args) -> int:
    results = structure.structure_identity_suite()
    if args.format == "json":
        emit({"checks": [{"name": n, "passed": ok} for n, ok in results],
              "passed": all(ok for _, ok in results)}, args)
    else:
        width = max(len(n) for n, _ in results)
        for name, ok in results:
            print(f"{name:<{width}}  {'PASS' if ok else 'FAIL'}")
        print(f"{'total':<{width}}  "
              f"{'PASS' if all(ok for _, ok in results) else 'FAIL'}")
    return EXIT_OK if all(ok for _, ok in results) else EXIT_NUMERIC


def _chi_from(delta: int, lam) -> action.InductionChar:
    if lam is None:
        return action.InductionChar(delta, mode="formal")
    if isinstance(lam, int) and (lam + delta) % 2 == 0:
        return action.InductionChar(delta, lam, mode="decomposition")
    return action.InductionChar(delta, complex(lam), mode="analytic")


def cmd_action_matrix(args) -> int:
    chi = _chi_from(args.delta, args.lam)
    mat = action.operator_matrix(args.op, chi, args.jmax)
    if args.format == "csv":
        lines = []
        if mat.numeric:
            lines.append("source,target,re,im")
            for src in sorted(mat.rows, key=lambda i: i.key()):
                for tgt, c in mat.rows[src]:
                    lines.append(f'"{idx_key(src)}","{idx_key(tgt)}",'
                                 f"{_f(c.real)},{_f(c.imag)}")
        else:
            lines.append("source,target,re0,re1,re2,im0,im1,im2")
            for src in sorted(mat.rows, key=lambda i: i.key()):
                for tgt, c in mat.rows[src]:
                    cs = [str(s) for s in c.re.coeffs] + [str(s) for s in c.im.coeffs]
                    lines.append(f'"{idx_key(src)}","{idx_key(tgt)}",'
                                 + ",".join(f'"{x}"' for x in cs))
        text = "\n".join(lines)
        if args.output:
            with open(args.output, "w") as fh:
                fh.write(text + "\n")
        else:
            print(text)
        return EXIT_OK
    rows = {}
    for src in sorted(mat.rows, key=lambda i: i.key()):
        rows[idx_key(src)] = [
            {"coeff": (c if mat.numeric else _clambda_json(c)), "target": idx_key(tgt)}
            for tgt, c in mat.rows[src]]
    emit({"delta": args.delta,
          "jmax_x2": (args.jmax if isinstance(args.jmax, HalfInt) else half(args.jmax)).twice,
          "lambda": None if args.lam is None else complex(args.lam),
          "leak_rows": sorted(idx_key(i) for i in mat.leak_rows),
          "op": args.op,
          "rows": rows}, args)
    return EXIT_OK


def cmd_classify(args) -> int:
    chamber = decomposition.chamber_classify(args.delta, args.lam)
    payload = {"chamber": chamber, "delta": args.delta, "lambda": args.lam}
    if chamber is not None:
        series = decomposition.composition_series(args.delta, args.lam)
        payload["levels"] = [sorted(lv) for lv in series.levels]
        payload["submodule_chain"] = [sorted(s) for s in series.submodule_chain()]
        table = decomposition.lowest_ktype_table(args.delta, args.lam)
        payload["subquotients"] = {
            tag: {"ktypes_kl": sorted(decomposition.subquotient_ktypes(
                      tag, args.delta, args.lam, args.kmax)),
                  "lowest_j": table[tag][0], "lowest_n": table[tag][1]}
            for tag in sorted(table)}
    if args.diagram == "txt":
        print(diagrams.render_text(args.delta, args.lam, args.kmax))

    elif args.diagram == "svg":
        path = args.output or f"chamber_d{args.delta}_l{args.lam}.svg"
        diagrams.render_svg(args.delta, args.lam, args.kmax, path)
        payload["diagram"] = path
        print(json.dumps(jsonable(payload), sort_keys=True, indent=2))
        return EXIT_OK
    emit(payload, args)
    return EXIT_OK


def cmd_diagram(args) -> int:
    if args.format == "txt":
        text = diagrams.render_text(args.delta, args.lam, args.kmax)
        if args.output:
            with open(args.output, "w") as fh:
                fh.write(text + "\n")
        else:
            print(text)
        return EXIT_OK
    path = args.output or f"chamber_d{args.delta}_l{args.lam}.svg"
    diagrams.render_svg(args.delta, args.lam, args.kmax, path)
    print(path)
    return EXIT_OK


def cmd_intertwine(args) -> int:
    paths = ("closed", "gammasum", "quadrature") if args.path == "all" else (args.path,)
    spec = intertwine.QuadratureSpec(rel_tol=args.tol) if args.tol else None
    try:
        res = intertwine.evaluate(args.j, args.m1, args.delta, args.lam,
                                  paths=paths, spec=spec)
    except intertwine.QuadratureError as exc:
        emit({"error": str(exc), "estimate": exc.estimate,
              "error_bound": _f(exc.bound)}, args)
        return EXIT_NUMERIC
    best = res.values.get("closed", next(iter(res.values.values())))
    payload = {
        "agreement": _f(res.agreement()),
        "delta": args.delta,
        "j_x2": res.j.twice,
        "lambda": complex(args.lam),
        "m1_x2": res.m1.twice,
        "paths": {k: v for k, v in res.values.items()},
        "value": best,
        "zero_pole_order": res.order,
    }
    emit(payload, args)
    ok = res.agreement() < (args.tol or 1e-6) or len(res.values) < 2
    return EXIT_OK if ok else EXIT_NUMERIC


def cmd_verify_all(args) -> int:
    from . import verify
    report = verify.run_all(kmax=args.kmax, jmax=args.jmax, threads=args.threads)
    width = max(len(name) for name, _, _ in report)
    for name, ok, note in report:
        print(f"{name:<{width}}  {'PASS' if ok else 'FAIL'}  {note}")
    passed = all(ok for _, ok, _ in report)
    print(f"{'TOTAL':<{width}}  {'PASS' if passed else 'FAIL'}")
    return EXIT_OK if passed else EXIT_NUMERIC


# ---------------------------------------------------------------------------
# argument wiring
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="su21",
        description="Wigner D calculus on U(2) and the SU(2,1) principal series")
    ap.add_argument("--threads", type=int,
                    default=int(os.environ.get("SU21_THREADS", "1")),
                    help="worker threads for verify-all (env SU21_THREADS)")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_out(p):
        p.add_argument("-o", "--output", help="write output to a file")

    p = sub.add_parser("dfun", help="little-d trig polynomial and evaluation")
    p.add_argument("--j", type=parse_half, required=True)
    p.add_argument("--m1", type=parse_half, required=True)
    p.add_argument("--m2", type=parse_half, required=True)
    p.add_argument("--theta", type=float, default=None)
    add_out(p)
    p.set_defaults(fn=cmd_dfun)

    p = sub.add_parser("cg", help="Clebsch-Gordan coefficient (exact)")
    for name in ("j1", "m1", "j2", "m2", "J", "M"):
        p.add_argument(f"--{name}", type=parse_half, required=True)
    add_out(p)
    p.set_defaults(fn=cmd_cg)

    p = sub.add_parser("threej", help="Wigner 3j symbol (exact)")
    for name in ("j1", "j2", "j3", "m1", "m2", "m3"):
        p.add_argument(f"--{name}", type=parse_half, required=True)
    add_out(p)
    p.set_defaults(fn=cmd_threej)

    p = sub.add_parser("wigner-eval", help="Wigner D-function at Euler angles")
    for name in ("j", "n", "m1", "m2"):
        p.add_argument(f"--{name}", type=parse_half, required=True)
    for name in ("zeta", "psi", "theta", "phi"):
        p.add_argument(f"--{name}", type=float, required=True)
    add_out(p)
    p.set_defaults(fn=cmd_wigner_eval)

    p = sub.add_parser("structure", help="3x3 matrix layer checks")
    ssub = p.add_subparsers(dest="subcommand", required=True)
    pv = ssub.add_parser("verify", help="run the exact identity suite")
    pv.add_argument("--format", choices=("txt", "json"), default="txt")
    add_out(pv)
    pv.set_defaults(fn=cmd_structure_verify)

    p = sub.add_parser("action-matrix", help="assembled generator action")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=parse_lambda, default=None,
                   help="omit for the formal (polynomial) matrix")
    p.add_argument("--jmax", type=parse_half, required=True)
    p.add_argument("--op", default="v(a2)",
                   help="generator program, e.g. 'v(a2)' or 'v(-a2) v(a2)'")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    add_out(p)
    p.set_defaults(fn=cmd_action_matrix)

    p = sub.add_parser("classify", help="chamber and composition series")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=int, required=True)
    p.add_argument("--kmax", type=int, default=12)
    p.add_argument("--diagram", choices=("txt", "svg"), default=None)
    add_out(p)
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("diagram", help="lattice diagram only")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=int, required=True)
    p.add_argument("--kmax", type=int, default=12)
    p.add_argument("--format", choices=("txt", "svg"), default="txt")
    add_out(p)
    p.set_defaults(fn=cmd_diagram)

    p = sub.add_parser("intertwine", help="long intertwining operator entry")
    p.add_argument("--j", type=parse_half, required=True)
    p.add_argument("--m1", type=parse_half, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=parse_lambda, required=True)
    p.add_argument("--path", choices=("closed", "gammasum", "quadrature", "all"),
                   default="all")
    p.add_argument("--tol", type=float, default=None)
    add_out(p)
    p.set_defaults(fn=cmd_intertwine)

    p = sub.add_parser("verify-all", help="run every verification suite")
    p.add_argument("--kmax", type=int, default=8)
    p.add_argument("--jmax", type=parse_half, default=half(2))
    add_out(p)
    p.set_defaults(fn=cmd_verify_all)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (ValueError, ZeroDivisionError, OverflowError) as exc:
        print(json.dumps({"error": str(exc)}, sort_keys=True), file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
