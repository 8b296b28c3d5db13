"""Command-line interface.

Single-instance commands print one JSON report.  ``survey`` streams one
JSON line per verdict followed by a summary object.  Exit codes: 0 on
success, 1 if a counterexample or an oracle mismatch is found, 2 on
invalid input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from . import __version__, oracle
from .errors import NakayamaError
from .homext import (ext_dims, has_infinitely_many_selfext, hom_dim, is_rigid,
                     nonrigidity_criterion)
from .kupisch import (KINDS, format_series, is_selfinjective, loewy_length, parse_series)
from .modrep import (dimension_vector, global_dimension, gorenstein, injective_dimension,
                     is_injective, is_projective, parse_module, projective_dimension, socle,
                     syzygy, top)
from .theorems import (CHECKS, COUNTEREXAMPLE, reproduce_example_223, reproduce_example_kx3,
                       run_check, summarize, survey)

OUT_DIR_ENV = "NAKAYAMA_OUTPUT_DIR"


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, default=_default)


def _default(x):
    return _inf(x) if isinstance(x, float) else str(x)


def _inf(x):
    return "inf" if x == float("inf") else x


def _series(args):
    return parse_series(args.series, args.kind)


def _report(args, argv, A, inputs, outputs, started):
    return {
        "command": " ".join(argv),
        "algebra": format_series(A) if A is not None else None,
        "inputs": inputs,
        "outputs": outputs,
        "version": __version__,
        "elapsed": round(time.perf_counter() - started, 6),
    }


def cmd_validate(args, argv, started):
    A = _series(args)
    out = {"valid": True, "n": A.n, "loewy_length": loewy_length(A),
           "selfinjective": is_selfinjective(A)}
    return _report(args, argv, A, {"series": args.series}, out, started), 0


def cmd_module(args, argv, started):
    A = _series(args)
    M = parse_module(A, args.m)
    W = syzygy(A, M)
    out = {
        "module": str(M),
        "dimension_vector": dimension_vector(A, M),
        "top": top(A, M),
        "socle": socle(A, M),
        "projective": is_projective(A, M),
        "injective": is_injective(A, M),
        "syzygy": None if W is None else str(W),
        "pd": _inf(projective_dimension(A, M)),
        "injdim": _inf(injective_dimension(A, M)),
    }
    return _report(args, argv, A, {"m": args.m}, out, started), 0


def cmd_hom(args, argv, started):
    A = _series(args)
    N, M = parse_module(A, args.src), parse_module(A, args.dst)
    out = {"hom_dim": hom_dim(A, N, M)}
    code = 0
    if args.oracle:
        out["oracle_hom_dim"] = oracle.hom_dim_oracle(A, N, M)
        out["agree"] = out["oracle_hom_dim"] == out["hom_dim"]
        code = 0 if out["agree"] else 1
    return _report(args, argv, A, {"from": args.src, "to": args.dst}, out, started), code


def cmd_ext(args, argv, started):
    A = _series(args)
    N, M = parse_module(A, args.src), parse_module(A, args.dst)
    if args.max_degree < 1:
        raise UsageError("--max-degree must be at least 1")
    prof = ext_dims(A, N, M, args.max_degree)
    out = prof.to_json()
    code = 0
    if args.oracle:
        odims = [oracle.ext_dim_oracle(A, N, M, l) for l in range(args.max_degree + 1)]
        out["oracle_dims"] = odims
        out["agree"] = odims == list(prof.dims)
        code = 0 if out["agree"] else 1
    return _report(args, argv, A, {"from": args.src, "to": args.dst,
                                   "max_degree": args.max_degree}, out, started), code


def cmd_selfext(args, argv, started):
    A = _series(args)
    M = parse_module(A, args.m)
    cert = has_infinitely_many_selfext(A, M)
    prof = ext_dims(A, M, M, args.horizon)
    out = {
        "rigid": is_rigid(A, M),
        "criterion_nonrigid": nonrigidity_criterion(A, M),
        "certificate": cert.to_json(),
        "profile": prof.to_json(),
    }
    return _report(args, argv, A, {"m": args.m}, out, started), 0


def cmd_gldim(args, argv, started):
    A = _series(args)
    return _report(args, argv, A, {}, {"gldim": _inf(global_dimension(A))}, started), 0


def cmd_gorenstein(args, argv, started):
    A = _series(args)
    g = gorenstein(A)
    out = {"right_injdim": _inf(g.right_injdim), "left_injdim": _inf(g.left_injdim),
           "is_gorenstein": g.is_gorenstein}
    return _report(args, argv, A, {}, out, started), 0


def cmd_check(args, argv, started):
    A = _series(args)
    if args.check not in CHECKS:
        raise UsageError(f"unknown check {args.check!r}; choose from {', '.join(CHECKS)}")
    v = run_check(args.check, A)
    code = 1 if v.status == COUNTEREXAMPLE else 0
    return _report(args, argv, A, {"check": args.check}, v.to_json(), started), code


def cmd_paper(args, argv, started):
    if args.example == "2.2":
        v = reproduce_example_kx3(use_oracle=not args.no_oracle)
    else:
        n = args.n if args.n is not None else 2
        if n < 2:
            raise UsageError("--n must be at least 2")
        v = reproduce_example_223(n, use_oracle=not args.no_oracle)
    code = 1 if v.status == COUNTEREXAMPLE else 0
    A = parse_series(v.algebra)
    return _report(args, argv, A, {"example": args.example, "n": args.n}, v.to_json(), started), code


def _parse_range(text: str) -> range:
    try:
        if ".." in text:
            a, b = text.split("..")
            r = range(int(a), int(b) + 1)
        else:
            r = range(int(text), int(text) + 1)
    except ValueError:
        raise UsageError(f"cannot parse range {text!r}; expected 'a..b' or a single integer") from None
    if len(r) == 0 or r.start < 1:
        raise UsageError(f"empty or non-positive range {text!r}")
    return r


def _resolve_out(path: str | None, default_name: str) -> Path | None:
    base = os.environ.get(OUT_DIR_ENV)
    if path is None:
        return Path(base) / default_name if base else None
    p = Path(path)
    if base and not p.is_absolute():
        p = Path(base) / p
    return p


def _tsv(rec: dict) -> str:
    cols = [rec["check"], rec["algebra"], rec["status"], rec["reason"] or "",
            _dump(rec["witness"]), rec["replay"]]
    return "\t".join(str(c) for c in cols)


def cmd_survey(args, argv, started):
    n_range = _parse_range(args.n)
    if args.max_loewy < 2:
        raise UsageError("--max-loewy must be at least 2")
    checks = list(CHECKS) if args.checks == "all" else [c.strip() for c in args.checks.split(",")]
    unknown = [c for c in checks if c not in CHECKS]
    if unknown:
        raise UsageError(f"unknown checks {', '.join(unknown)}; choose from all, {', '.join(CHECKS)}")
    if args.resume_from and args.format != "jsonl":
        raise UsageError("--resume-from requires --format jsonl")
    default_name = f"survey-{args.kind}-n{n_range.start}-{n_range.stop - 1}-L{args.max_loewy}.{args.format}"
    out_path = _resolve_out(args.out, default_name)

    previous: list[dict] = []
    if args.resume_from:
        if out_path is None or not out_path.exists():
            raise UsageError("--resume-from needs an existing --out file")
        for line in out_path.read_text().splitlines():
            if line.strip():
                rec = json.loads(line)
                if not rec.get("summary"):
                    previous.append(rec)

    if out_path is not None:
        out_path.parent.mkdir(parents=True, exist_ok=True)
        sink = out_path.open("w")
        for rec in previous:
            sink.write(_dump(rec) + "\n")
    else:
        sink = sys.stdout

    records = list(previous)
    try:
        if args.format == "tsv":
            sink.write("check\talgebra\tstatus\treason\twitness\treplay\n")
        for rec in survey(args.kind, n_range, args.max_loewy, checks, jobs=args.jobs,
                          dedupe=args.dedupe, horizon=args.horizon, offset=args.resume_from):
            records.append(rec)
            sink.write((_dump(rec) if args.format == "jsonl" else _tsv(rec)) + "\n")
        summary = summarize(records)
        # only result-determining settings: --jobs, --out and --resume-from leave the records unchanged
        summary.update({
            "command": (f"nakayama survey --kind {args.kind} --n {args.n} --max-loewy {args.max_loewy}"
                        f" --checks {','.join(checks)} --{'' if args.dedupe else 'no-'}dedupe"
                        f" --horizon {args.horizon}"),
            "inputs": {"kind": args.kind, "n": args.n, "max_loewy": args.max_loewy,
                       "checks": checks, "dedupe": args.dedupe, "horizon": args.horizon},
            "version": __version__,
            "elapsed": round(time.perf_counter() - started, 6),
        })
        if args.kind == "linear" and n_range.start <= 1:
            summary["excluded"] = ["linear n = 1: semisimple, not surveyed"]
        line = _dump(summary)
        sink.write(("# " + line if args.format == "tsv" else line) + "\n")
    finally:
        if sink is not sys.stdout:
            sink.close()
    if out_path is not None:
        print(line)
    code = 1 if summary["counts"][COUNTEREXAMPLE] else 0
    return None, code


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nakayama", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def with_series(sp):
        sp.add_argument("--series", required=True,
                        help="Kupisch series, e.g. 'cyclic:2,3' or '2,3' together with --kind")
        sp.add_argument("--kind", choices=KINDS, default="cyclic")
        return sp

    sp = with_series(sub.add_parser("validate", help="check a Kupisch series"))
    sp.set_defaults(func=cmd_validate)

    sp = with_series(sub.add_parser("module", help="invariants of one indecomposable"))
    sp.add_argument("--m", required=True, help="module as 'i,k'")
    sp.set_defaults(func=cmd_module)

    sp = with_series(sub.add_parser("hom", help="dim Hom(N, M)"))
    sp.add_argument("--from", dest="src", required=True)
    sp.add_argument("--to", dest="dst", required=True)
    sp.add_argument("--oracle", action="store_true", help="also compute with explicit matrices")
    sp.set_defaults(func=cmd_hom)

    sp = with_series(sub.add_parser("ext", help="dims of Ext^l(N, M)"))
    sp.add_argument("--from", dest="src", required=True)
    sp.add_argument("--to", dest="dst", required=True)
    sp.add_argument("--max-degree", type=int, default=10)
    sp.add_argument("--oracle", action="store_true")
    sp.set_defaults(func=cmd_ext)

    sp = with_series(sub.add_parser("selfext", help="rigidity and self-extension support of M"))
    sp.add_argument("--m", required=True)
    sp.add_argument("--horizon", type=int, default=None)
    sp.set_defaults(func=cmd_selfext)

    sp = with_series(sub.add_parser("gldim", help="global dimension"))
    sp.set_defaults(func=cmd_gldim)
    sp = with_series(sub.add_parser("gorenstein", help="injective dimensions of the regular module"))
    sp.set_defaults(func=cmd_gorenstein)

    sp = with_series(sub.add_parser("check", help="run one named check on one algebra"))
    sp.add_argument("--check", required=True, help=", ".join(CHECKS))
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("survey", help="run checks over all enumerated algebras")
    sp.add_argument("--kind", choices=KINDS, default="cyclic")
    sp.add_argument("--n", default="1..3", help="vertex-count range 'a..b'")
    sp.add_argument("--max-loewy", type=int, default=8)
    sp.add_argument("--checks", default="all")
    sp.add_argument("--dedupe", action=argparse.BooleanOptionalAction, default=True,
                    help="one representative per rotation class (cyclic only)")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--horizon", type=int, default=50)
    sp.add_argument("--out", default=None, help=f"output file (relative to ${OUT_DIR_ENV} if set)")
    sp.add_argument("--format", choices=("jsonl", "tsv"), default="jsonl")
    sp.add_argument("--resume-from", type=int, default=0, metavar="OFFSET",
                    help="skip the first OFFSET algebras and append to --out")
    sp.set_defaults(func=cmd_survey)

    sp = sub.add_parser("paper", help="reproduce the worked examples")
    sp.add_argument("--example", required=True, choices=("1.5", "1.6", "2.2"))
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--no-oracle", action="store_true")
    sp.set_defaults(func=cmd_paper)
    return p


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        report, code = args.func(args, ["nakayama", *argv], started)
    except (NakayamaError, UsageError) as e:
        print(f"nakayama {args.command}: error: {e}", file=sys.stderr)
        return 2
    if report is not None:
        print(_dump(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
