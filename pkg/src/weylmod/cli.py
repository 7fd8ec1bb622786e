"""Batch command-line front end.

Subcommands: act, verify, whittaker, quotient, gl, report.  Frames come from
flags or from an INI config file (WEYLMOD_CONFIG or --config); flags win.

Exit codes: 0 all passed, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import configparser
import json
import os
import sys
from fractions import Fraction as Q

from .frame import Frame, HypothesisError
from .textio import ParseError, format_vec, parse_vec, parse_word, vec_to_json

CONFIG_ENV = "WEYLMOD_CONFIG"


class CliError(Exception):
    pass


def _split_scalars(text):
    if text is None or text.strip() == "":
        return ()
    return tuple(Q(p.strip()) for p in text.split(","))


def _load_config(path):
    cfg = {"frame": {}, "quotient": {}, "gl": {}}
    if not path:
        return cfg
    parser = configparser.ConfigParser()
    read = parser.read(path)
    if not read:
        raise CliError("cannot read config file %s" % path)
    for section in cfg:
        if parser.has_section(section):
            cfg[section] = dict(parser.items(section))
    return cfg


def _frame_from(args, cfg) -> Frame:
    fr = cfg.get("frame", {})
    lam = args.lam if args.lam is not None else fr.get("lambda", "")
    mu = args.mu if args.mu is not None else fr.get("mu", "")
    shift = args.shift if args.shift is not None else int(fr.get("shift", 0))
    i0 = args.i0 if args.i0 is not None else (
        int(fr["i0"]) if "i0" in fr else None)
    j0 = args.j0 if args.j0 is not None else (
        int(fr["j0"]) if "j0" in fr else None)
    return Frame(lam=_split_scalars(lam), mu=_split_scalars(mu),
                 shift=shift or 0, i0=i0, j0=j0)


def _d_from(args, cfg) -> Q:
    if getattr(args, "d", None) is not None:
        return Q(args.d)
    q = cfg.get("quotient", {})
    return Q(q.get("d", "3"))


def _frame_flags(sp):
    sp.add_argument("--config", help="INI config file (default: $%s)" % CONFIG_ENV)
    sp.add_argument("--lambda", dest="lam", metavar="L0,L1,..",
                    help="functional values on a(0), a(1), ...")
    sp.add_argument("--mu", metavar="M1,M2,..",
                    help="functional values on a*(1), a*(2), ...")
    sp.add_argument("--shift", type=int, help="spectral shift s")
    sp.add_argument("--i0", type=int, help="A-pivot index (default largest nonzero)")
    sp.add_argument("--j0", type=int, help="S-pivot index (default largest nonzero)")


def build_parser():
    ap = argparse.ArgumentParser(prog="weylmod",
                                 description="exact Whittaker-module computations")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("act", help="apply an operator word to a vector")
    _frame_flags(p)
    p.add_argument("--op", required=True,
                   help="operator word, ';'-separated, e.g. 'E[1,1];I' or 'J0[5]'")
    p.add_argument("--vec", required=True, help="vector text, e.g. '1' or 'a[-1]^2'")

    p = sub.add_parser("verify", help="run a named verification suite")
    _frame_flags(p)
    p.add_argument("--suite", required=True,
                   help="suite name or 'all' (see weylmod.suites.SUITES)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-weight", dest="max_weight", type=int)
    p.add_argument("--n-vectors", dest="n_vectors", type=int)
    p.add_argument("--out", help="write the JSON report here (default stdout)")

    p = sub.add_parser("whittaker", help="solve for all Whittaker vectors at truncation")
    _frame_flags(p)
    p.add_argument("--max-weight", dest="max_weight", type=int, default=4)
    p.add_argument("--imax", type=int)
    p.add_argument("--jmax", type=int)
    p.add_argument("--out")

    p = sub.add_parser("quotient", help="operate in the simple quotient at eigenvalue d")
    _frame_flags(p)
    p.add_argument("--d", help="Casimir eigenvalue (rational)")
    p.add_argument("--op", help="operator word to apply to --vec")
    p.add_argument("--vec", help="class representative (pivot-free text)")
    p.add_argument("--probe", metavar="VEC",
                   help="run the cyclicity probe on this class")
    p.add_argument("--witness", action="store_true",
                   help="compute the non-tensor-product witness rank")

    p = sub.add_parser("gl", help="finite 2l-by-2l analog")
    p.add_argument("--config")
    p.add_argument("--ell", type=int)
    p.add_argument("--alpha", help="alpha_1..alpha_l, comma separated")
    p.add_argument("--beta", help="beta_1..beta_l, comma separated")
    p.add_argument("--d")
    p.add_argument("--op", help="'e[i,j]', 'a[i]', 'as[i]' or 'I'")
    p.add_argument("--vec", help="finite vector text, e.g. 'as_1^2*a_2'")
    p.add_argument("--probe", metavar="VEC")
    p.add_argument("--solve", type=int, metavar="DEG",
                   help="truncated Whittaker solver at total degree DEG")

    p = sub.add_parser("report", help="merge suite reports")
    p.add_argument("files", nargs="*", help="JSON report files")
    return ap


# ---------------------------------------------------------------------------


def cmd_act(args) -> int:
    cfg = _load_config(args.config or os.environ.get(CONFIG_ENV))
    F = _frame_from(args, cfg)
    from .weylact import act_word

    word = parse_word(args.op)
    vec = parse_vec(args.vec)
    out = act_word(word, vec, F)
    print(format_vec(out))
    print(json.dumps(vec_to_json(out), sort_keys=True))
    return 0


def cmd_verify(args) -> int:
    from .suites import run_suite

    cfg = _load_config(args.config or os.environ.get(CONFIG_ENV))
    F = _frame_from(args, cfg)
    try:
        report = run_suite(args.suite, F, args.seed,
                           max_weight=args.max_weight, n_vectors=args.n_vectors)
    except KeyError as e:
        raise CliError(str(e))
    text = json.dumps(report, indent=2, sort_keys=True)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
        print("%s: %d cases, %d failed" % (args.suite, report["n_cases"],
                                           report["n_failed"]))
    else:
        print(text)
    return 0 if report["ok"] else 1


def cmd_whittaker(args) -> int:
    from .quotient import whittaker_space

    cfg = _load_config(args.config or os.environ.get(CONFIG_ENV))
    F = _frame_from(args, cfg)
    res = whittaker_space(F, args.max_weight, i_max=args.imax, j_max=args.jmax)
    text = json.dumps(res.report(), indent=2, sort_keys=True)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    print(text)
    return 0 if res.stable else 1


def cmd_quotient(args) -> int:
    from .quotient import act_quot, cyclicity_probe, non_tensor_witness, project

    cfg = _load_config(args.config or os.environ.get(CONFIG_ENV))
    F = _frame_from(args, cfg)
    d = _d_from(args, cfg)
    did = False
    status = 0
    if args.witness:
        rep = non_tensor_witness(F, d)
        print(json.dumps(rep, sort_keys=True))
        status = max(status, 0 if rep["ok"] else 1)
        did = True
    if args.probe is not None:
        q = project(parse_vec(args.probe), d, F)
        pr = cyclicity_probe(q, d, F)
        print(json.dumps(pr.report(), sort_keys=True))
        status = max(status, 0 if pr.ok else 1)
        did = True
    if args.op is not None:
        if args.vec is None:
            raise CliError("--op needs --vec")
        q = project(parse_vec(args.vec), d, F)
        for op in parse_word(args.op):
            q = act_quot(op, q, d, F)
        print(format_vec(q))
        print(json.dumps(vec_to_json(q), sort_keys=True))
        did = True
    if not did:
        raise CliError("nothing to do: pass --op/--vec, --probe or --witness")
    return status


def _gl_frame(args, cfg):
    from .glfinite import GlFrame

    g = cfg.get("gl", {})
    ell = args.ell if args.ell is not None else int(g.get("ell", 0) or 0)
    alpha = args.alpha if args.alpha is not None else g.get("alpha", "")
    beta = args.beta if args.beta is not None else g.get("beta", "")
    if not ell:
        raise CliError("gl needs --ell (or a [gl] config section)")
    return GlFrame(ell, _split_scalars(alpha), _split_scalars(beta))


def cmd_gl(args) -> int:
    import re

    from . import glfinite as gl

    cfg = _load_config(args.config or os.environ.get(CONFIG_ENV))
    G = _gl_frame(args, cfg)
    d = Q(args.d) if args.d is not None else Q(cfg.get("gl", {}).get("d", "3"))
    did = False
    status = 0
    if args.solve is not None:
        sols = gl.whittaker_space_fin(G, args.solve)
        print(json.dumps({
            "frame": G.summary(), "maxDegree": args.solve,
            "dimension": len(sols),
            "basis": [gl.format_fin(v, G) for v in sols],
        }, sort_keys=True))
        did = True
    if args.probe is not None:
        q = gl.quotient_fin(gl.parse_fin(args.probe, G), d, G)
        sigma = gl.cyclicity_probe_fin(q, d, G)
        print(json.dumps({"sigma": None if sigma is None else str(sigma),
                          "ok": bool(sigma)}, sort_keys=True))
        status = max(status, 0 if sigma else 1)
        did = True
    if args.op is not None:
        if args.vec is None:
            raise CliError("--op needs --vec")
        v = gl.parse_fin(args.vec, G)
        m = re.fullmatch(r"\s*(I|e\[(-?\d+),(-?\d+)\]|a\[(\d+)\]|as\[(\d+)\])\s*",
                         args.op)
        if not m:
            raise CliError("bad gl operator %r" % args.op)
        if m.group(1) == "I":
            v = gl.act_I_fin(v, G)
        elif m.group(2):
            v = gl.act_e_fin(int(m.group(2)), int(m.group(3)), v, G)
        elif m.group(4):
            v = gl.act_gen_fin("a", int(m.group(4)), v, G)
        else:
            v = gl.act_gen_fin("as", int(m.group(5)), v, G)
        print(gl.format_fin(v, G))
        did = True
    if not did:
        raise CliError("nothing to do: pass --op/--vec, --probe or --solve")
    return status


def cmd_report(args) -> int:
    if not args.files:
        raise CliError("no report files given")
    rows = []
    failed_cases = []
    for path in args.files:
        try:
            with open(path) as fh:
                rep = json.load(fh)
            rows.append((rep["suite"], rep["n_cases"], rep["n_failed"], rep["ok"]))
            failed_cases.extend(
                (rep["suite"], c["id"], c.get("detail", ""))
                for c in rep["cases"] if not c["ok"]
            )
        except (OSError, json.JSONDecodeError, KeyError) as e:
            raise CliError("malformed report %s: %s" % (path, e))
    width = max(len(r[0]) for r in rows)
    print("%-*s  %7s  %7s  %s" % (width, "suite", "cases", "failed", "ok"))
    for suite, n, nf, ok in rows:
        print("%-*s  %7d  %7d  %s" % (width, suite, n, nf, "yes" if ok else "NO"))
    total_failed = sum(r[2] for r in rows)
    print("%d suites, %d failures" % (len(rows), total_failed))
    for suite, cid, detail in failed_cases:
        print("FAILED %s/%s: %s" % (suite, cid, detail))
    print(json.dumps({
        "schema": "1",
        "suites": [{"suite": s, "n_cases": n, "n_failed": nf, "ok": ok}
                   for s, n, nf, ok in rows],
        "ok": total_failed == 0,
    }, sort_keys=True))
    return 0 if total_failed == 0 else 1


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    handlers = {
        "act": cmd_act,
        "verify": cmd_verify,
        "whittaker": cmd_whittaker,
        "quotient": cmd_quotient,
        "gl": cmd_gl,
        "report": cmd_report,
    }
    try:
        return handlers[args.command](args)
    except (ParseError, CliError, ValueError) as e:
        if isinstance(e, HypothesisError):
            print("hypothesis violation: %s" % e, file=sys.stderr)
            return 1
        print("error: %s" % e, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
