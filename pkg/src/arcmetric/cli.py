"""Command-line front end.

Exit codes: 0 success, 1 an invariant check failed, 2 bad input.
"""

import argparse
import csv
import json
import math
import sys
import warnings

import numpy as np

from . import checks, hyptrig, mcg, metrics, pantsnet, pinch, torus
from .errors import ArcMetricError, AssemblyError, DomainError
from .pinch import fmt
from .torus import DualArc, FNTorus, Slope

TOL = 1e-9


class UsageError(Exception):
    pass


# -- parsing helpers ---------------------------------------------------------------

def parse_floats(tokens):
    if isinstance(tokens, str):
        tokens = [tokens]
    out = []
    for tok in tokens:
        out.extend(float(x) for x in str(tok).split(",") if x.strip())
    return out


def parse_point(tokens):
    vals = parse_floats(tokens)
    if len(vals) == 2:
        vals.append(0.0)
    if len(vals) != 3:
        raise UsageError(f"a torus point needs ell,twist,L; got {tokens!r}")
    return FNTorus(*vals)


def parse_family(text, f=None):
    """``farey:N``, ``iter:p/q:K`` (needs a map), ``arcs`` (dual arcs of the
    curves so far), joined with ``+``."""
    fam = None
    want_arcs = False
    for part in text.split("+"):
        part = part.strip()
        if part == "arcs":
            want_arcs = True
            continue
        kind, _, rest = part.partition(":")
        if kind == "farey":
            new = metrics.farey_family(int(rest))
        elif kind == "iter":
            if f is None:
                raise UsageError("iter: families need --map")
            base, _, k = rest.rpartition(":")
            new = metrics.iterate_family(f, Slope.parse(base), int(k))
        elif kind == "slopes":
            new = metrics.Family(tuple(Slope.parse(s) for s in rest.split(";")), (), part)
        else:
            raise UsageError(f"unknown family term {part!r}")
        fam = new if fam is None else fam | new
    if fam is None:
        raise UsageError("family has no curves")
    return fam.with_dual_arcs() if want_arcs else fam


def _num(x):
    if isinstance(x, float):
        return float(fmt(x)) if math.isfinite(x) else None
    if isinstance(x, dict):
        return {k: _num(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_num(v) for v in x]
    return x


def emit_json(obj, out):
    out.write(json.dumps(_num(obj), indent=2) + "\n")


def emit_table(header, rows, fmt_name, out):
    if fmt_name == "json":
        emit_json([dict(zip(header, r)) for r in rows], out)
        return
    w = csv.writer(out, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([fmt(v) if isinstance(v, float) else v for v in r])


def emit_scalar(name, value, fmt_name, out, extra=None):
    if fmt_name == "json":
        emit_json({name: value, **(extra or {})}, out)
    elif fmt_name == "csv":
        emit_table([name] + list(extra or {}), [[value] + list((extra or {}).values())],
                   "csv", out)
    else:
        out.write(fmt(value) + "\n")


# -- subcommands ---------------------------------------------------------------

def _report(res, bad, out):
    emit_json({**res, "ok": not bad}, out)
    return 1 if bad else 0


def cmd_pants_arc(a, out):
    if a.agreement:
        worst = checks.arc_agreement(a.agreement, a.seed)
        return _report({"samples": a.agreement, "max_difference": worst}, worst > TOL, out)
    if a.two_cuffs:
        v = hyptrig.pants_arc_two_cuffs(*a.two_cuffs)
    else:
        v = hyptrig.pants_arc_one_cuff(*a.one_cuff)
    emit_scalar("length", v, a.format, out)
    return 0


def cmd_collar(a, out):
    if len(a.ell) == 1:
        emit_scalar("width", hyptrig.collar_width(a.ell[0]), a.format, out)
    else:
        emit_table(["ell", "width"], pinch.collar_widths(a.ell), a.format or "csv", out)
    return 0


def cmd_quad(a, out):
    if a.random:
        res = checks.quad_random(a.random, a.seed, a.factor)
        if a.sides:
            side = hyptrig.quad_side(*a.sides)
            x, y, ell = a.sides
            res = {"side": side, "asymptotic_gap": abs(side - (x + y + ell - math.log(4))), **res}
        return _report(res, bool(res["failures"]) or res.get("asymptotic_gap", 0) >= 0.01, out)
    if a.check:
        ratio, bound, ok = pinch.quad_ratio_check(*a.check, factor=a.factor)
        emit_json({"ratio": ratio, "bound": bound, "pass": ok}, out)
        return 0 if ok else 1
    if not a.sides or len(a.sides) != 3:
        raise UsageError("quad needs A B ELL or --check")
    emit_scalar("side", hyptrig.quad_side(*a.sides), a.format, out)
    return 0


def _load_pants(a):
    with open(a.pants) as fh:
        decomp = pantsnet.PantsDecomp.from_json(json.load(fh))
    if not a.point:
        raise UsageError("--pants needs --point")
    with open(a.point) as fh:
        point = pantsnet.FNPoint.from_json(json.load(fh))
    return decomp, point


def cmd_length(a, out):
    if a.naturality:
        worst = checks.twist_naturality(a.farey, a.naturality, a.seed)
        return _report({"samples": a.naturality, "farey": a.farey, "max_difference": worst},
                       worst > TOL, out)
    if a.levels:
        if not a.torus or not a.family:
            raise UsageError("--levels needs --torus and --family")
        X = parse_point(a.torus)
        rows = checks.curve_pinch_ratios(X, parse_family(a.family), parse_floats(a.levels))
        emit_table(["slope", "L", "relative_change"], rows, a.format or "csv", out)
        return 0
    if a.pants:
        decomp, point = _load_pants(a)
        if not a.word:
            raise UsageError("--pants needs --word")
        rep = pantsnet.build_glued_rep(decomp, point)
        emit_scalar("length", pantsnet.word_length(rep, a.word), a.format, out)
        return 0
    if not a.torus:
        raise UsageError("length needs --torus or --pants")
    X = parse_point(a.torus)
    if a.slope:
        v = torus.curve_length(X, Slope.parse(a.slope))
    elif a.arc:
        v = torus.dual_arc_length(X, DualArc(Slope.parse(a.arc)))
    elif a.word:
        v = hyptrig.translation_length(torus.evaluate(torus.build_rep(X), a.word))
    else:
        raise UsageError("length needs --slope, --arc or --word")
    emit_scalar("length", v, a.format, out)
    return 0


def cmd_rep_validate(a, out):
    if a.random:
        res = checks.holonomy_residuals(a.random, a.seed)
        return _report({"samples": a.random, "residuals": res},
                       any(v >= TOL for v in res.values()), out)
    if a.pants:
        decomp, point = _load_pants(a)
        try:
            pantsnet.build_glued_rep(decomp, point)
        except AssemblyError as exc:
            emit_json({"ok": False, "error": str(exc)}, out)
            return 1
        emit_json({"ok": True}, out)
        return 0
    if not a.torus:
        raise UsageError("rep-validate needs --torus or --pants")
    X = parse_point(a.torus)
    rep = torus.build_rep(X)
    x, y, z = torus.trace_triple(rep)
    res = {
        "trace_A": abs(abs(x) - 2 * math.cosh(X.ell / 2)),
        "commutator": abs(abs(np.trace(torus.commutator(rep))) - 2 * math.cosh(X.boundary / 2)),
        "markov": abs(torus.markov_residual(rep)),
    }
    ok = all(v < TOL for v in res.values())
    emit_json({"point": list(X.as_tuple()), "traces": [x, y, z], "residuals": res, "ok": ok}, out)
    return 0 if ok else 1


def cmd_dist(a, out):
    if a.axioms:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", RuntimeWarning)
            res = checks.estimator_axioms(a.axioms, a.seed)
        bad = (res["triangle_violation"] > 1e-12 or res["self_distance"] > 0
               or res["monotonicity_violation"] > 0 or res["square_point_rotation"] >= TOL)
        return _report(res, bad, out)
    if not (a.from_ and a.to):
        raise UsageError("dist needs --from and --to")
    f = mcg.MappingClass.parse(a.map) if a.map else None
    fam = parse_family(a.family, f)
    X, Y = parse_point(a.from_), parse_point(a.to)
    if a.drop_arcs and (X.boundary == 0 or Y.boundary == 0):
        fam = fam.without_arcs()
    est = metrics.dhat(X, Y, fam)
    emit_scalar("value", est.value, a.format, out,
                {"witness": str(est.witness), "family": est.family_label})
    return 0


def cmd_pinch_sweep(a, out):
    rows = pinch.pinch_sweep(parse_point(a.x0), parse_point(a.y0),
                             parse_floats(a.levels), a.farey)
    if a.format == "json":
        emit_json([{"L": r.L, "d_arc": r.d_arc, "d_th": r.d_th, "gap": r.gap,
                    "signed": r.signed, "witness_arc": r.witness_arc,
                    "witness_th": r.witness_th} for r in rows], out)
    else:
        out.write(pinch.sweep_csv(rows, signed=a.signed))
    return 0


def cmd_arc_residual(a, out):
    rows = [[L, pinch.arc_residual(a.lgamma, L)] for L in parse_floats(a.levels)]
    emit_table(["L", "residual"], rows, a.format or "csv", out)
    return 0


def cmd_dilatation(a, out):
    f = mcg.MappingClass.parse(a.map)
    r = mcg.dilatation_by_iteration(f, Slope.parse(a.base), parse_point(a.point), a.K)
    lam = mcg.dilatation(f)
    header, cols = ["k", "ratio", "error"], [r, [abs(v - lam) for v in r]]
    if a.conjugate:
        g = mcg.MappingClass.parse(a.conjugate)
        rc = mcg.dilatation_by_iteration(f.conjugate_by(g), g.act(Slope.parse(a.base)),
                                         parse_point(a.point), a.K)
        header += ["conjugate_ratio", "conjugate_error"]
        cols += [rc, [abs(v - lam) for v in rc]]
    if a.format == "json":
        emit_json({"map": str(f), "dilatation": lam,
                   **{h: c for h, c in zip(header[1:], cols)}}, out)
    else:
        emit_table(header, [[k] + [c[k] for c in cols] for k in range(len(r))], "csv", out)
    return 0


def cmd_translate(a, out):
    f = mcg.MappingClass.parse(a.map)
    cfg = mcg.SearchConfig(
        ell_bounds=tuple(parse_floats(a.ell_bounds)),
        twist_bounds=tuple(parse_floats(a.twist_bounds)),
        grid=tuple(int(v) for v in parse_floats(a.grid)),
        starts=a.starts, maxiter=a.maxiter, farey=a.farey, iterates=a.K, seed=a.seed)
    reports = []
    for n in (int(v) for v in parse_floats(a.powers)):
        est = mcg.translation_estimate(f, n, cfg)
        rep = est.report()
        rep["map"] = str(f)
        rep["per_power"] = est.per_power
        rep["witness"] = str(est.witness)
        reports.append(rep)
    if a.format == "csv":
        keys = ["power", "min_value", "per_power", "log_dilatation", "boundary_hit", "n_evals"]
        emit_table(keys, [[r[k] for k in keys] for r in reports], "csv", out)
    else:
        emit_json(reports, out)
    return 0


def cmd_tau(a, out):
    f = mcg.MappingClass.parse(a.map)
    X0 = parse_point(a.point)
    ll = math.log(mcg.dilatation(f))
    rows = [[n, v, ll, abs(v - ll)]
            for n, v in mcg.tau_sequence(f, X0, [int(v) for v in parse_floats(a.n)],
                                         a.farey, a.K)]
    emit_table(["n", "estimate", "log_dilatation", "error"], rows, a.format or "csv", out)
    return 0


def cmd_twist_pinch(a, out):
    rows = mcg.twist_pinch_experiment(Slope.parse(a.slope), parse_floats(a.levels),
                                      a.farey, a.power)
    emit_table(["eps", "displacement"], [list(r) for r in rows], a.format or "csv", out)
    return 0


# -- parser -----------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="arcmetric", description=__doc__.splitlines()[0])
    p.add_argument("--config", help="JSON file whose keys mirror the flags")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, **kw):
        sp = sub.add_parser(name, **kw)
        sp.set_defaults(func=func)
        sp.add_argument("--format", choices=["text", "csv", "json"], default=None)
        sp.add_argument("--seed", type=int, default=0)
        return sp

    sp = add("pants-arc", cmd_pants_arc, help="orthogeodesic lengths in a pair of pants")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--two-cuffs", nargs=3, type=float, metavar=("GAMMA", "BETA1", "BETA2"))
    g.add_argument("--one-cuff", nargs=3, type=float, metavar=("BETA", "GAMMA1", "GAMMA2"))
    g.add_argument("--agreement", type=int, metavar="N",
                   help="compare the two-cuff formula with N random pants reps")

    sp = add("collar", cmd_collar, help="collar width around a short geodesic")
    sp.add_argument("ell", nargs="+", type=float)

    sp = add("quad", cmd_quad, help="quadrilateral side and ratio check")
    sp.add_argument("sides", nargs="*", type=float, metavar="A B ELL")
    sp.add_argument("--check", nargs=6, type=float, metavar="X")
    sp.add_argument("--factor", type=float, default=1.05)
    sp.add_argument("--random", type=int, metavar="N", help="ratio bound on N random configs")

    sp = add("length", cmd_length, help="length of a curve, arc or word")
    sp.add_argument("--torus", nargs="+")
    sp.add_argument("--slope")
    sp.add_argument("--arc")
    sp.add_argument("--word")
    sp.add_argument("--pants")
    sp.add_argument("--point")
    sp.add_argument("--family", help="with --levels: curves to follow as L varies")
    sp.add_argument("--levels", help="boundary lengths, comma separated")
    sp.add_argument("--naturality", type=int, metavar="N",
                    help="twist naturality over farey(--farey) at N random points")
    sp.add_argument("--farey", type=int, default=6)

    sp = add("rep-validate", cmd_rep_validate, help="trace and Markov residuals")
    sp.add_argument("--torus", nargs="+")
    sp.add_argument("--random", type=int, metavar="N")
    sp.add_argument("--pants")
    sp.add_argument("--point")

    sp = add("dist", cmd_dist, help="family estimate of the arc/Thurston metric")
    sp.add_argument("--from", dest="from_", nargs="+")
    sp.add_argument("--to", nargs="+")
    sp.add_argument("--axioms", type=int, metavar="N",
                    help="triangle, identity and monotonicity checks on N random triples")
    sp.add_argument("--family", default="farey:8")
    sp.add_argument("--map")
    sp.add_argument("--drop-arcs", action="store_true")

    sp = add("pinch-sweep", cmd_pinch_sweep, help="arc metric vs Thurston metric as L -> 0")
    sp.add_argument("--x0", nargs="+", default=["1,0,0"])
    sp.add_argument("--y0", nargs="+", default=["1.3,0.4,0"])
    sp.add_argument("--levels", default=",".join(fmt(x) for x in pinch.DEFAULT_LEVELS))
    sp.add_argument("--farey", type=int, default=pinch.DEFAULT_FAREY)
    sp.add_argument("--signed", action="store_true")

    sp = add("arc-residual", cmd_arc_residual, help="two-cuff arc minus its small-L limit")
    sp.add_argument("--lgamma", type=float, default=1.0)
    sp.add_argument("--levels", default="1,0.5,0.1,0.01")

    sp = add("dilatation", cmd_dilatation, help="length ratios along f-iterates")
    sp.add_argument("--map", default="2,1,1,1")
    sp.add_argument("--base", default="1/0")
    sp.add_argument("--point", nargs="+", default=["1,0,0"])
    sp.add_argument("--K", type=int, default=10)
    sp.add_argument("--conjugate", help="also iterate g f g^-1 from g(base)")

    sp = add("translate", cmd_translate, help="minimize the displacement of f^n")
    sp.add_argument("--map", default="2,1,1,1")
    sp.add_argument("--powers", default="1,2,3,4")
    sp.add_argument("--farey", type=int, default=8)
    sp.add_argument("--K", type=int, default=10)
    sp.add_argument("--ell-bounds", default="0.2,6")
    sp.add_argument("--twist-bounds", default="-3,3")
    sp.add_argument("--grid", default="12,13")
    sp.add_argument("--starts", type=int, default=5)
    sp.add_argument("--maxiter", type=int, default=200)

    sp = add("tau", cmd_tau, help="(1/n) d(X0, f^n X0)")
    sp.add_argument("--map", default="2,1,1,1")
    sp.add_argument("--point", nargs="+", default=["1,0,0"])
    sp.add_argument("--n", default="12")
    sp.add_argument("--farey", type=int, default=8)
    sp.add_argument("--K", type=int, default=10)

    sp = add("twist-pinch", cmd_twist_pinch, help="Dehn twist displacement as its curve pinches")
    sp.add_argument("--slope", default="1/0")
    sp.add_argument("--levels", default="1,0.3,0.1,0.01")
    sp.add_argument("--farey", type=int, default=6)
    sp.add_argument("--power", type=int, default=1)
    return p


def config_argv(path):
    """Turn ``{"command": ..., "flag": value}`` into an argv list."""
    with open(path) as fh:
        cfg = json.load(fh)
    if "command" not in cfg:
        raise UsageError("config needs a 'command' key")
    argv = [cfg.pop("command")]
    positional = cfg.pop("args", [])
    for key, value in cfg.items():
        flag = "--" + key.replace("_", "-")
        if value is True:
            argv.append(flag)
        elif value is False or value is None:
            continue
        elif isinstance(value, list):
            argv.append(flag)
            argv.extend(str(v) for v in value)
        else:
            argv.extend([flag, str(value)])
    return argv + [str(v) for v in positional]


def main(argv=None, out=None):
    out = out or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        if argv[:1] == ["--config"] and len(argv) >= 2:
            argv = config_argv(argv[1]) + argv[2:]
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    except (UsageError, OSError, ValueError) as exc:
        sys.stderr.write(f"arcmetric: {exc}\n")
        return 2
    try:
        return args.func(args, out)
    except AssemblyError as exc:
        sys.stderr.write(f"arcmetric: {exc}\n")
        return 1
    except (UsageError, DomainError, ArcMetricError, OSError, ValueError) as exc:
        sys.stderr.write(f"arcmetric: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
