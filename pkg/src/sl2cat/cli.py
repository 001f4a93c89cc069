"""Command-line workbench. Every subcommand writes one JSON report.

Exit status: 0 if every non-informational check passes, 1 if one fails,
2 for usage errors and 3 when a resource cap is exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

SCHEMA = "1"
DEFAULT_SEED = 20240611

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


def _parse_composition(text: str) -> tuple:
    try:
        parts = tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise argparse.ArgumentTypeError(f"composition must be comma separated integers, got {text!r}")
    if not parts or any(p <= 0 for p in parts):
        raise argparse.ArgumentTypeError(f"composition parts must be positive, got {text!r}")
    return parts


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def summarize(checks: dict) -> tuple:
    """(ok, failing names) over a flat {name: {"pass": ...}} report."""
    failures = [
        name for name, r in checks.items()
        if isinstance(r, dict) and not r.get("informational") and not r.get("pass", True)
    ]
    return not failures, sorted(failures)


def cmd_kl(args) -> dict:
    from .hecke import kl_report

    weights = [args.i] if args.i is not None else range(args.n + 1)
    for i in weights:
        if not 0 <= i <= args.n:
            raise ValueError(f"--i must lie in 0..{args.n}")
    return {"result": [kl_report(args.n, i, args.sign) for i in weights], "pass": True}


def cmd_canonical(args) -> dict:
    from .uqrep import basis_report

    return {"result": basis_report(args.n, dual=args.dual), "pass": True}


def cmd_groth(args) -> dict:
    from .groth import groth_check

    checks = groth_check(args.n, args.d)
    ok, failures = summarize(checks)
    return {"result": checks, "pass": ok, "failures": failures}


def cmd_vn(args) -> dict:
    from .coinv import vn_check

    checks = vn_check(args.n)
    ok, failures = summarize(checks)
    return {"result": checks, "pass": ok, "failures": failures}


def cmd_coinv(args) -> dict:
    from .coinv import coinv_check

    checks = coinv_check(args.n)
    ok, failures = summarize(checks)
    return {"result": checks, "pass": ok, "failures": failures}


def cmd_conjecture(args) -> dict:
    from .funcalg import conjecture_all, degeneration_check, naive_categorification

    ds = [args.d] if args.d else None
    reports = conjecture_all(args.n, ds, jobs=args.jobs, max_dim=args.max_dim,
                             graded=args.experimental_graded, seed=args.seed)
    naive = naive_categorification(args.n, graded=True)
    degen = degeneration_check(args.n)
    ok = all(r["pass"] for r in reports) and naive["pass"] and degen["pass"]
    out = {
        "result": {"compositions": reports, "naive": naive, "degeneration": degen},
        "pass": ok,
        "failures": [",".join(map(str, r["d"])) for r in reports if not r["pass"]],
    }
    if args.n >= 4:
        # open case: report what was found, never fail the run
        out["finding"] = "all cases agree" if ok else "disagreements found"
        out["assert"] = False
    if args.experimental_graded:
        out["note"] = "graded data uses the product grading on H and is experimental"
    return out


def dump_dictionary(n: int) -> dict:
    """Per weight: the six base-change matrices over standard classes and the
    row-by-row correspondence Hecke <-> tensor <-> Grothendieck classes."""
    from .groth import TAGS, base_change_suite, base_matrix, dictionary_suite
    from .hecke import kl_basis, twist
    from .symgroup import coset_of_seq, reverse_seq, seqs_of_weight
    from .uqrep import canonical_basis, dual_canonical_basis

    if not 1 <= n <= 5:
        raise ValueError("dump-dictionary supports 1 <= n <= 5")
    cb = canonical_basis(n)
    dcb = dual_canonical_basis(n)
    weights = []
    for i in range(n + 1):
        seqs = seqs_of_weight(n, i)
        kp = kl_basis(n, i, "positive")
        km = kl_basis(n, i, "negative")
        rows = []
        for a in seqs:
            ra = reverse_seq(a)
            rows.append({
                "seq": list(a),
                "coset": list(coset_of_seq(a).images),
                "tilting": list(ra),
                "canonical": repr(cb[ra]),
                "twisted_kl_positive": repr(twist(kp[a])),
                "simple": list(ra),
                "dual_canonical": repr(dcb[ra]),
                "twisted_kl_negative": repr(twist(km[a])),
            })
        weights.append({
            "weight": i,
            "index": [list(a) for a in seqs],
            "matrices": {tag: base_matrix(n, i, tag).to_json() for tag in TAGS},
            "correspondence": rows,
        })
    checks = {}
    checks.update(base_change_suite(n))
    checks.update(dictionary_suite(n))
    ok, failures = summarize(checks)
    return {"n": n, "weights": weights, "checks": checks, "pass": ok, "failures": failures}


def cmd_dump(args) -> dict:
    rep = dump_dictionary(args.n)
    return {"result": rep, "pass": rep["pass"], "failures": rep["failures"]}


COMMANDS = {
    "kl": cmd_kl,
    "canonical-basis": cmd_canonical,
    "groth-check": cmd_groth,
    "vn-check": cmd_vn,
    "coinv-check": cmd_coinv,
    "conjecture": cmd_conjecture,
    "dump-dictionary": cmd_dump,
}


def build_parser() -> argparse.ArgumentParser:
    from .funcalg import DEFAULT_MAX_DIM

    p = argparse.ArgumentParser(prog="sl2cat", description="Exact checks for sl2 categorification models.")
    p.add_argument("--output", "-o", help="write the JSON report here instead of stdout")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for sampled property checks")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--n", type=_positive, required=True)
        sp.add_argument("--output", "-o", default=argparse.SUPPRESS)
        sp.add_argument("--seed", type=int, default=argparse.SUPPRESS)
        return sp

    sp = add("kl", "KL bases of the permutation modules M^i")
    sp.add_argument("--i", type=int)
    sp.add_argument("--sign", choices=["positive", "negative"], default="positive")
    sp = add("canonical-basis", "canonical or dual canonical basis of V_1^n")
    sp.add_argument("--dual", action="store_true")
    sp = add("groth-check", "Grothendieck group identity suite")
    sp.add_argument("--d", type=_parse_composition)
    add("vn-check", "the V_n model on cohomology rings")
    add("coinv-check", "coinvariant algebra checks and freeness certificates")
    sp = add("conjecture", "brute-force check of the function algebra categorification")
    sp.add_argument("--d", type=_parse_composition)
    sp.add_argument("--max-dim", type=_positive, default=DEFAULT_MAX_DIM)
    sp.add_argument("--jobs", type=_positive, default=1)
    sp.add_argument("--experimental-graded", action="store_true",
                    help="also report graded multiplicities (non-normative)")
    add("dump-dictionary", "base-change matrices and the categorification dictionary")
    return p


def _validate(args, parser):
    limits = {"kl": 8, "canonical-basis": 8, "groth-check": 6, "vn-check": 10,
              "coinv-check": 5, "conjecture": 4, "dump-dictionary": 5}
    if args.n > limits[args.command]:
        parser.error(f"{args.command} supports n <= {limits[args.command]}")
    d = getattr(args, "d", None)
    if d is not None and sum(d) != args.n:
        parser.error(f"composition {','.join(map(str, d))} does not sum to n={args.n}")


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate(args, parser)
    config = {k: (list(v) if isinstance(v, tuple) else v) for k, v in sorted(vars(args).items()) if k != "output"}
    try:
        body = COMMANDS[args.command](args)
    except MemoryError as exc:
        print(f"sl2cat: resource error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ValueError as exc:
        print(f"sl2cat: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = {"schema": SCHEMA, "command": args.command, "config": config, **body}
    text = json.dumps(report, indent=2, sort_keys=True, default=str) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if body.get("assert") is False:
        return EXIT_OK
    return EXIT_OK if body["pass"] else EXIT_FAIL


def main() -> None:
    sys.exit(run())
