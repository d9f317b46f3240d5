"""Command-line front end.

Examples::

    cisres verify --instance tropical --alphas 1,3 --betas 2,4
    cisres resultant --instance powerset --universe 1..5 --alphas "[1,2],[3,4]" --betas "[2,3],[4,5]"
    cisres permanent matrix.txt --instance tropical
    cisres rep res-from-syl pair.txt --trace
    cisres rep enumerate --mu 2,1,1 --nu 1,1

Exit status: 0 on success (or R = S), 1 when R and S differ or a sweep
finds a failure, 2 on usage, parse or precondition errors.
"""

from __future__ import annotations

import argparse
import json
import shlex
import sys
from pathlib import Path

from .errors import CisError, PreconditionError
from .instances import INSTANCE_TAGS, make_instance, standard_instances
from .instances._text import split_top
from .representations import (BoolMatrix, SylPair, TermExponent, Trace, enumerate_res_reps,
                              enumerate_syl_reps, flush_pair, res_from_syl, sort_pair,
                              syl_from_res)
from .resultant import (RootVectors, permanent, resultant_product, sweep_main_theorem,
                        sylvester_expression, sylvester_matrix, verify_main_theorem)
from .polynomial import poly_from_roots
from .semiring import check_axioms

EXIT_OK, EXIT_UNEQUAL, EXIT_USAGE = 0, 1, 2


class UsageError(CisError):
    pass


# ---------------------------------------------------------------------------
# argument helpers

def _param_pairs(items):
    params = {}
    for item in items or ():
        key, sep, val = item.partition("=")
        if not sep or not key.strip():
            raise UsageError(f"--params expects key=value, got {item!r}")
        params[key.strip()] = val.strip()
    return params


def build_instance(args):
    params = _param_pairs(getattr(args, "params", None))
    if getattr(args, "universe", None):
        params["universe"] = args.universe
    if "inner_params" in params:
        # nested parameters as a JSON object, e.g. inner_params={"universe":"1..3"}
        try:
            params["inner_params"] = json.loads(params["inner_params"])
        except json.JSONDecodeError as exc:
            raise UsageError(f"inner_params must be a JSON object: {exc}") from exc
    return make_instance(args.instance, **params)


def parse_values(inst, text, what):
    if text is None or not text.strip():
        raise UsageError(f"--{what} needs at least one value")
    return tuple(inst.parse(piece) for piece in split_top(text))


def read_value_matrix(inst, path):
    """Whitespace-separated values per row; shell-style quoting; ``#`` comments."""
    rows = []
    for line in _read(path).splitlines():
        tokens = shlex.split(line, comments=True)
        if tokens:
            rows.append(tuple(inst.parse(tok) for tok in tokens))
    if not rows:
        raise UsageError(f"{path}: no matrix rows")
    return rows


def _read(path):
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _blocks(text):
    blocks, cur = [], []
    for line in text.splitlines():
        stripped = line.split("#", 1)[0].strip()
        if not stripped or stripped == "---":
            if cur:
                blocks.append("\n".join(cur))
                cur = []
            continue
        cur.append(stripped)
    if cur:
        blocks.append("\n".join(cur))
    return blocks


def read_bool_matrices(path, count):
    blocks = _blocks(_read(path))
    if len(blocks) != count:
        what = "one matrix" if count == 1 else "two matrices separated by a blank line or ---"
        raise UsageError(f"{path}: expected {what}, found {len(blocks)}")
    return [BoolMatrix.parse(b) for b in blocks]


def _ints(text, what):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"--{what} must be comma-separated integers") from exc


# ---------------------------------------------------------------------------
# output

def _grid(M: BoolMatrix):
    return ["".join(map(str, r)) for r in M.rows]


def emit(args, payload, text):
    if args.format == "json":
        print(json.dumps(payload, ensure_ascii=False, indent=2))
    else:
        print(text)


def _job_payload(inst, alphas, betas, result, trace=()):
    return {
        "instance": inst.tag if inst is not None else None,
        "params": inst.params() if inst is not None else {},
        "alphas": [str(a) for a in alphas],
        "betas": [str(b) for b in betas],
        "result": result,
        "trace": list(trace),
    }


# ---------------------------------------------------------------------------
# commands

def _roots(args):
    inst = build_instance(args)
    alphas = parse_values(inst, args.alphas, "alphas")
    betas = parse_values(inst, args.betas, "betas")
    return inst, RootVectors(alphas, betas)


def cmd_resultant(args):
    inst, roots = _roots(args)
    trace = []
    if args.trace:
        for i, a in enumerate(roots.alphas, 1):
            for j, b in enumerate(roots.betas, 1):
                trace.append(f"alpha{i} + beta{j} = {a + b}")
    r = resultant_product(roots)
    text = "\n".join(trace + [str(r)])
    emit(args, _job_payload(inst, roots.alphas, roots.betas, str(r), trace), text)
    return EXIT_OK


def cmd_sylvester(args):
    inst, roots = _roots(args)
    trace = []
    if args.trace:
        M = sylvester_matrix(poly_from_roots(roots.alphas), poly_from_roots(roots.betas))
        trace = [" ".join(str(x) for x in row) for row in M]
    s = sylvester_expression(roots)
    emit(args, _job_payload(inst, roots.alphas, roots.betas, str(s), trace),
         "\n".join(trace + [str(s)]))
    return EXIT_OK


def cmd_verify(args):
    inst, roots = _roots(args)
    v = verify_main_theorem(roots)
    result = {"R": str(v.r), "S": str(v.s), "equal": v.equal}
    emit(args, _job_payload(inst, roots.alphas, roots.betas, result), str(v))
    return EXIT_OK if v.equal else EXIT_UNEQUAL


def cmd_permanent(args):
    inst = build_instance(args)
    rows = read_value_matrix(inst, args.file)
    p = permanent(rows)
    emit(args, _job_payload(inst, (), (), str(p)), str(p))
    return EXIT_OK


def cmd_axioms(args):
    inst = build_instance(args)
    report = check_axioms(inst, inst.samples())
    lines = []
    for res in report.results:
        status = "ok" if res.passed else f"FAILED at {res.witness}"
        lines.append(f"{res.name}: {status} ({res.checked} checks)")
    result = {r.name: r.passed for r in report.results}
    emit(args, _job_payload(inst, (), (), result), "\n".join(lines))
    return EXIT_OK if report.ok else EXIT_UNEQUAL


def cmd_sweep(args):
    if args.instance:
        insts = [build_instance(args)]
    else:
        insts = standard_instances()
    report = sweep_main_theorem(insts, args.max_m, args.max_n, args.draws, args.seed)
    lines = [f"checked {report.checked} root vectors in {report.seconds:.2f}s"]
    for tag, roots, verdict in report.failures:
        lines.append(f"FAIL {tag}: alphas={list(map(str, roots.alphas))} "
                     f"betas={list(map(str, roots.betas))}: {verdict}")
    if report.ok:
        lines.append("all equal")
    result = {"checked": report.checked, "failures": len(report.failures)}
    payload = _job_payload(None, (), (), result, lines[1:-1] if report.ok else lines[1:])
    payload["instance"] = [i.tag for i in insts]
    emit(args, payload, "\n".join(lines))
    return EXIT_OK if report.ok else EXIT_UNEQUAL


def _pair_text(p: SylPair):
    return "S1 =\n" + "\n".join(_grid(p.s1)) + "\nS2 =\n" + "\n".join(_grid(p.s2))


def _pair_json(p: SylPair):
    return {"S1": _grid(p.s1), "S2": _grid(p.s2)}


def cmd_rep(args):
    trace = Trace(snapshots=args.snapshots)
    action = args.action
    if action == "enumerate":
        if args.mu is None or args.nu is None:
            raise UsageError("rep enumerate needs --mu and --nu")
        t = TermExponent(_ints(args.mu, "mu"), _ints(args.nu, "nu"))
        res = enumerate_res_reps(t)
        syl = enumerate_syl_reps(t)
        lines = [f"term {t}", f"{len(res)} res-representations"]
        for M in res:
            lines += [""] + _grid(M)
        lines += ["", f"{len(syl)} syl-representations"]
        for p in syl:
            lines += [""] + _pair_text(p).splitlines()
        result = {"res": [_grid(M) for M in res], "syl": [_pair_json(p) for p in syl]}
        emit(args, _job_payload(None, (), (), result), "\n".join(lines))
        return EXIT_OK

    if args.file is None:
        raise UsageError(f"rep {action} needs a matrix file")
    if action == "syl-from-res":
        (M,) = read_bool_matrices(args.file, 1)
        out = syl_from_res(M, trace)
        result, text = _pair_json(out), _pair_text(out)
    else:
        p = SylPair(*read_bool_matrices(args.file, 2))
        if action == "res-from-syl":
            out = res_from_syl(p, trace)
            result, text = _grid(out), "\n".join(_grid(out))
        else:
            out = (sort_pair if action == "sort" else flush_pair)(p, trace)
            result, text = _pair_json(out), _pair_text(out)
    lines = trace.lines if args.trace else []
    emit(args, _job_payload(None, (), (), result, lines), "\n".join(lines + [text]))
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser

def _instance_args(p, required=True):
    p.add_argument("--instance", required=required,
                   help=f"carrier tag: {', '.join(INSTANCE_TAGS)}")
    p.add_argument("--params", action="append", metavar="KEY=VALUE",
                   help="instance parameter (repeatable)")
    p.add_argument("--universe", help="powerset universe, e.g. 1..5 or 1,2,7")


def _common(p):
    p.add_argument("--format", choices=("text", "json"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cisres",
        description="Resultants and Sylvester permanents over idempotent semirings.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn, help_ in (("resultant", cmd_resultant, "product of alpha_i + beta_j"),
                            ("sylvester", cmd_sylvester, "permanent of the Sylvester matrix"),
                            ("verify", cmd_verify, "compare the two; exit 1 if they differ")):
        p = sub.add_parser(name, help=help_)
        _instance_args(p)
        p.add_argument("--alphas", required=True, help="comma-separated value literals")
        p.add_argument("--betas", required=True, help="comma-separated value literals")
        p.add_argument("--trace", action="store_true")
        _common(p)
        p.set_defaults(func=fn)

    p = sub.add_parser("permanent", help="permanent of a square matrix read from FILE")
    p.add_argument("file", help="whitespace-separated values per row, '-' for stdin")
    _instance_args(p)
    _common(p)
    p.set_defaults(func=cmd_permanent)

    p = sub.add_parser("axioms", help="check the semiring axioms on built-in samples")
    _instance_args(p)
    _common(p)
    p.set_defaults(func=cmd_axioms)

    p = sub.add_parser("sweep", help="random check of R = S across instances")
    _instance_args(p, required=False)
    p.add_argument("--max-m", type=int, default=4)
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--draws", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    _common(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("rep", help="boolean-matrix representations of terms")
    p.add_argument("action", choices=("syl-from-res", "res-from-syl", "sort", "flush",
                                      "enumerate"))
    p.add_argument("file", nargs="?",
                   help="0/1 matrix file; pairs are separated by a blank line or ---")
    p.add_argument("--mu", help="alpha exponents for enumerate, e.g. 2,1,1")
    p.add_argument("--nu", help="beta exponents for enumerate, e.g. 1,1")
    p.add_argument("--trace", action="store_true", help="print one SWAP line per swap")
    p.add_argument("--snapshots", action="store_true",
                   help="with --trace, print the matrix after each swap")
    _common(p)
    p.set_defaults(func=cmd_rep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PreconditionError as exc:
        print(f"cisres: precondition failed [{exc.predicate}]: {exc}", file=sys.stderr)
    except CisError as exc:
        print(f"cisres: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
