"""Command-line interface.

Exit status: 0 success, 1 decoding failure, 2 usage or input error.
"""

import argparse
import csv
import io
import json
import sys

from . import analysis, gf
from .arraycode import (ArrayCodeSpec, build_grs_inner, build_interleaved, build_mds_instance,
                        encode_array, validate_spec)
from .combodec import SideInformation, report
from .grs import grs_spec
from .sim import (DECODERS, ChannelConfig, FormatError, decode_with, format_array, load_json,
                  read_array, read_side, run_campaign)

EXIT_OK, EXIT_DECODE_FAILURE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def load_spec(path):
    d = load_json(path)
    try:
        return ArrayCodeSpec.from_dict(d)
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError("bad code description: %s" % exc, source=str(path)) from None


def cmd_gen_spec(a):
    F = gf.field(a.q, a.modulus)
    if a.inner == "mds":
        spec = build_mds_instance(F, a.m, a.n, a.k)
    else:
        grs = grs_spec(F, a.n, a.k)
        spec = build_grs_inner(grs, a.m) if a.inner == "grs" else build_interleaved(grs, a.m)
    cert = validate_spec(spec, exhaustive_delta_check=a.exhaustive)
    sys.stderr.write("delta=%d check=%s ok=%s %s\n" % (cert.delta, cert.method, cert.ok, cert.detail))
    _emit(json.dumps(spec.to_dict(), indent=1) + "\n", a.out)
    return EXIT_OK if cert.ok else EXIT_USAGE


def cmd_encode(a):
    spec = load_spec(a.spec)
    msg, _ = read_array(a.input, spec.field.q)
    if len(msg) != spec.m or len(msg[0]) != spec.k:
        raise UsageError("message must be %d x %d" % (spec.m, spec.k))
    _emit(format_array(encode_array(spec, msg), spec.field.q), a.out)
    return EXIT_OK


def _received(a, spec):
    Y, _ = read_array(a.input, spec.field.q)
    if len(Y) != spec.m or len(Y[0]) != spec.n:
        raise UsageError("received array must be %d x %d" % (spec.m, spec.n))
    side = read_side(a.side) if a.side else SideInformation()
    try:
        side.validate(spec.m, spec.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return Y, side


def _decode_output(a, spec, out):
    rep = report(out)
    if a.format == "json":
        # the report goes to stdout, the corrected array (if any) to --out
        if out and a.out:
            with open(a.out, "w") as fh:
                fh.write(format_array(out.codeword, spec.field.q))
        sys.stdout.write(json.dumps(rep, indent=1) + "\n")
        return
    if not out:
        sys.stderr.write("decoding failed: %s at %s %s\n" % (out.kind, out.step, out.detail))
        return
    _emit(format_array(out.codeword, spec.field.q), a.out)
    if a.format == "text":
        sys.stderr.write("corrected %d entries (branch %s)\n" % (len(rep["corrected_positions"]), rep["branch"]))


def cmd_decode(a):
    spec = load_spec(a.spec)
    Y, side = _received(a, spec)
    try:
        out = decode_with(spec, a.decoder, Y, side)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _decode_output(a, spec, out)
    return EXIT_OK if out else EXIT_DECODE_FAILURE


def cmd_oracle(a):
    from .combodec import OracleBudgetExceeded, oracle_decode
    spec = load_spec(a.spec)
    Y, side = _received(a, spec)
    try:
        out = oracle_decode(spec, Y, side, a.tau_max, a.theta_max, a.budget)
    except OracleBudgetExceeded as exc:
        raise UsageError(str(exc)) from None
    _decode_output(a, spec, out)
    return EXIT_OK if out else EXIT_DECODE_FAILURE


CAMPAIGN_FIELDS = ["decoder", "seed", "tau", "rho", "theta", "varrho", "block_values", "trials",
                   "failures", "miscorrections", "rate", "bound", "threshold", "within_bound"]


def cmd_simulate(a):
    spec = load_spec(a.spec)
    cfg = ChannelConfig(a.tau, a.rho, a.theta, a.varrho, "uniform" if a.uniform else "nonzero", a.seed)
    try:
        res = run_campaign(spec, cfg, a.decoder, a.trials, workers=a.workers)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    row = {"decoder": a.decoder, "seed": a.seed, "tau": a.tau, "rho": a.rho, "theta": a.theta,
           "varrho": a.varrho, "block_values": cfg.block_values, "trials": res.trials,
           "failures": res.failures, "miscorrections": res.miscorrections, "rate": repr(res.rate),
           "bound": "" if res.bound is None else repr(res.bound),
           "threshold": "" if res.threshold is None else res.threshold,
           "within_bound": "" if res.within_bound is None else res.within_bound}
    if a.format == "json":
        text = json.dumps(res.to_dict(), indent=1) + "\n"
    elif a.format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, CAMPAIGN_FIELDS, lineterminator="\n")
        w.writeheader()
        w.writerow(row)
        text = buf.getvalue()
    else:
        text = "".join("%-15s %s\n" % (k, row[k]) for k in CAMPAIGN_FIELDS)
    _emit(text, a.out)
    return EXIT_OK


def cmd_analyze(a):
    try:
        rows = analysis.analyze(a.q, a.m, a.n, a.tau, a.rho, a.theta, a.varrho)
    except ValueError as exc:
        raise UsageError(str(exc)) from None

    def fmt(v):
        return "%.2f" % v if isinstance(v, float) else str(v)

    if a.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["scheme", "redundancy"])
        for name, v in rows:
            w.writerow([name, fmt(v)])
        text = buf.getvalue()
    elif a.format == "json":
        text = json.dumps([{"scheme": n, "redundancy": v} for n, v in rows], indent=1) + "\n"
    else:
        width = max(len(n) for n, _ in rows)
        text = "".join("%-*s  %s\n" % (width, n, fmt(v)) for n, v in rows)
    _emit(text, a.out)
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="arraycodes", description="Array codes for block and symbol errors.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen-spec", help="build and validate a code description")
    g.add_argument("--q", type=int, required=True)
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--inner", choices=["grs", "identity", "mds"], default="grs")
    g.add_argument("--modulus", type=int, default=None, help="field modulus as a base-p integer")
    g.add_argument("--exhaustive", action="store_true", help="check every delta-1 column subset")
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen_spec)

    e = sub.add_parser("encode", help="encode an m x k message array")
    e.add_argument("--spec", required=True)
    e.add_argument("--in", dest="input", required=True)
    e.add_argument("--out")
    e.set_defaults(func=cmd_encode)

    for name, func, helptext in (("decode", cmd_decode, "decode a received array"),
                                 ("oracle", cmd_oracle, "brute-force decode (tiny codes only)")):
        d = sub.add_parser(name, help=helptext)
        d.add_argument("--spec", required=True)
        d.add_argument("--in", dest="input", required=True)
        d.add_argument("--side")
        d.add_argument("--out")
        d.add_argument("--format", choices=["text", "csv", "json"], default="text")
        if name == "decode":
            d.add_argument("--decoder", choices=DECODERS, default="t124")
        else:
            d.add_argument("--tau-max", type=int)
            d.add_argument("--theta-max", type=int)
            d.add_argument("--budget", type=int, default=10 ** 6)
        d.set_defaults(func=func)

    s = sub.add_parser("simulate", help="Monte Carlo campaign")
    s.add_argument("--spec", required=True)
    s.add_argument("--decoder", choices=DECODERS, default="interleaved")
    s.add_argument("--trials", type=int, default=1000)
    s.add_argument("--seed", type=int, default=0)
    for c in ("tau", "rho", "theta", "varrho"):
        s.add_argument("--" + c, type=int, default=0)
    s.add_argument("--uniform", action="store_true", help="block error values uniform over F^m")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--format", choices=["text", "csv", "json"], default="csv")
    s.add_argument("--out")
    s.set_defaults(func=cmd_simulate)

    a = sub.add_parser("analyze", help="redundancy comparison table")
    a.add_argument("--q", type=int, required=True)
    a.add_argument("--m", type=int, required=True)
    a.add_argument("--n", type=int, required=True)
    for c in ("tau", "rho", "theta", "varrho"):
        a.add_argument("--" + c, type=int, default=0)
    a.add_argument("--format", choices=["text", "csv", "json"], default="text")
    a.add_argument("--out")
    a.set_defaults(func=cmd_analyze)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, FormatError, gf.FieldError, OSError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_USAGE
    except ValueError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
