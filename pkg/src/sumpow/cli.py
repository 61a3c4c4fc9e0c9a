"""Command-line front end.

Every command produces a list of output records (plain dicts)::

    {"command": ..., "parameters": {...}, "result": {...}, "status": "ok"}

Text mode renders each record with :func:`render_text`; ``--json`` prints
each record as one JSON line instead. Rationals are always ``"num/den"``.

Exit codes: 0 success, 1 usage or domain error, 2 internal invariant
violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable, List, Optional

from sumpow.bernoulli import bernoulli_number
from sumpow.classifier import classify
from sumpow.errors import DomainError, InvariantViolation, ZeroDenominatorError
from sumpow.exactnum import format_rational
from sumpow.powersum import ProblemInstance, build
from sumpow.rootstructure import multiplicity_profile, squarefree_decomposition
from sumpow.search import find_solutions
from sumpow.verify import run_all

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INTERNAL = 2


class UsageError(DomainError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _record(command: str, parameters: dict, result: dict, status: str = "ok") -> dict:
    return {"command": command, "parameters": parameters, "result": result, "status": status}


# -- commands -> records ---------------------------------------------------


def _cmd_bernoulli(args) -> List[dict]:
    if args.i < 0:
        raise DomainError(f"index must be >= 0, got {args.i}")
    value = bernoulli_number(args.i)
    return [_record("bernoulli", {"i": args.i}, {"value": format_rational(value)})]


def _cmd_poly(args) -> List[dict]:
    pair = build(ProblemInstance(args.k, args.l))
    p = pair.H if args.normalization == "paper" else pair.S
    coeffs = [format_rational(p.coeff(i)) for i in range(p.degree + 1)]
    params = {"k": args.k, "l": args.l, "normalization": args.normalization}
    return [_record("poly", params, {"coefficients": coeffs})]


def _cmd_profile(args) -> List[dict]:
    inst = ProblemInstance(args.k, args.l)
    prof = multiplicity_profile(inst)
    factors = [
        {"multiplicity": e, "factor": [format_rational(c) for c in g.coefficients]}
        for g, e in squarefree_decomposition(build(inst).H)
    ]
    result = {
        "multiplicities": list(prof.multiplicities),
        "distinct_count": prof.distinct_count,
        "zero_multiplicity": prof.zero_multiplicity,
        "squarefree_factors": factors,
    }
    return [_record("profile", {"k": args.k, "l": args.l}, result)]


def _cmd_classify(args) -> List[dict]:
    if (args.n is None) == (args.nmax is None):
        raise UsageError("classify: give exactly one of <n> or --nmax")
    inst = ProblemInstance(args.k, args.l)
    ns = [args.n] if args.n is not None else list(range(2, args.nmax + 1))
    if not ns or ns[0] < 2:
        raise DomainError("n must be >= 2")
    return [_record("classify", {"k": args.k, "l": args.l, "n": n}, classify(inst, n).to_dict()) for n in ns]


def _cmd_search(args) -> List[dict]:
    inst = ProblemInstance(args.k, args.l)
    triples = find_solutions(inst, args.xmax, args.nmax, workers=args.workers)
    params = {"k": args.k, "l": args.l, "xmax": args.xmax, "nmax": args.nmax}
    return [_record("search", params, {"x": t.x, "y": t.y, "n": t.n}) for t in triples]


def _cmd_verify(args) -> List[dict]:
    if args.kmax < 2 or args.lmax < 2 or args.nmax < 2:
        raise DomainError("verify: --kmax, --lmax and --nmax must be >= 2")
    params = {"kmax": args.kmax, "lmax": args.lmax, "nmax": args.nmax}
    results = run_all(args.kmax, args.lmax, args.nmax)
    records = [_record("verify", params, r.to_dict()) for r in results]
    failed = [r.name for r in results if not r.passed]
    summary = {"passed": not failed, "checks": len(results), "failed": failed}
    records.append(_record("verify", params, {"summary": summary}))
    return records


# -- rendering -------------------------------------------------------------


def _render_classify(res: dict) -> str:
    def join(xs):
        return "-" if xs is None else ",".join(str(x) for x in xs)

    parts = [
        f"k={res['k']}",
        f"l={res['l']}",
        f"n={res['n']}",
        f"verdict={res['verdict']}",
        f"case={res['proof_case'] or '-'}",
        f"multiplicities={join(res['multiplicities'])}",
        f"t={join(res['t_values'])}",
        f"pattern={res['pattern'] or '-'}",
    ]
    obs = res["obstruction"]
    if obs is not None:
        parts.append(f"obstruction={obs['target']} v2={obs['v2']} obstructed={str(obs['obstructed']).lower()}")
    if res["notes"]:
        parts.append("notes=" + ";".join(n.replace(" ", "_") for n in res["notes"]))
    return " ".join(parts)


def render_text(record: dict) -> str:
    """Text form of one output record (no trailing newline)."""
    cmd, res = record["command"], record["result"]
    if record["status"] != "ok":
        return f"error: {res['message']}"
    if cmd == "bernoulli":
        return res["value"]
    if cmd == "poly":
        return "\n".join(f"{i}: {c}" for i, c in enumerate(res["coefficients"]))
    if cmd == "profile":
        lines = [
            "multiplicities: " + " ".join(str(r) for r in res["multiplicities"]),
            f"distinct_roots: {res['distinct_count']}",
            f"zero_multiplicity: {res['zero_multiplicity']}",
        ]
        for f in res["squarefree_factors"]:
            lines.append(f"factor^{f['multiplicity']}: " + " ".join(f["factor"]))
        return "\n".join(lines)
    if cmd == "classify":
        return _render_classify(res)
    if cmd == "search":
        return f"{res['x']} {res['y']} {res['n']}"
    if cmd == "verify":
        if "summary" in res:
            s = res["summary"]
            if s["passed"]:
                return f"PASS ({s['checks']} checks)"
            return f"FAIL ({len(s['failed'])} of {s['checks']} checks failed: {', '.join(s['failed'])})"
        status = "PASS" if res["passed"] else "FAIL"
        line = f"{status} {res['check']} ({res['cases']} cases)"
        if res["counterexample"]:
            line += f": first counterexample: {res['counterexample']}"
        return line
    raise ValueError(f"unknown command {cmd!r}")


def render_all(records: Iterable[dict]) -> str:
    return "".join(render_text(r) + "\n" for r in records)


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    json_flag = _Parser(add_help=False)
    json_flag.add_argument(
        "--json", action="store_true", default=argparse.SUPPRESS, help="one JSON record per line"
    )

    parser = _Parser(prog="sumpow", description=__doc__.splitlines()[0], parents=[json_flag])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("bernoulli", parents=[json_flag], help="print B_i")
    p.add_argument("i", type=int)
    p.set_defaults(func=_cmd_bernoulli)

    p = sub.add_parser("poly", parents=[json_flag], help="coefficients of the power-sum polynomial")
    p.add_argument("k", type=int)
    p.add_argument("l", type=int)
    p.add_argument("--normalization", choices=("paper", "sum"), default="paper")
    p.set_defaults(func=_cmd_poly)

    p = sub.add_parser("profile", parents=[json_flag], help="root multiplicity profile")
    p.add_argument("k", type=int)
    p.add_argument("l", type=int)
    p.set_defaults(func=_cmd_profile)

    p = sub.add_parser("classify", parents=[json_flag], help="finiteness classification")
    p.add_argument("k", type=int)
    p.add_argument("l", type=int)
    p.add_argument("n", type=int, nargs="?")
    p.add_argument("--nmax", type=int)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("search", parents=[json_flag], help="brute-force solution search")
    p.add_argument("k", type=int)
    p.add_argument("l", type=int)
    p.add_argument("--xmax", type=int, required=True)
    p.add_argument("--nmax", type=int)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("verify", parents=[json_flag], help="run the invariant suite")
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--lmax", type=int, required=True)
    p.add_argument("--nmax", type=int, default=50)
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    as_json = "--json" in argv

    def fail(command: str, message: str, code: int) -> int:
        if as_json:
            stdout.write(json.dumps(_record(command, {}, {"message": message}, "error")) + "\n")
        stderr.write(f"error: {message}\n")
        return code

    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        return fail("usage", str(exc), EXIT_USAGE)
    as_json = getattr(args, "json", False)
    try:
        records = args.func(args)
    except (InvariantViolation, ZeroDenominatorError) as exc:
        return fail(args.command, f"internal invariant violation: {exc}", EXIT_INTERNAL)
    except DomainError as exc:
        return fail(args.command, str(exc), EXIT_USAGE)

    if as_json:
        for r in records:
            stdout.write(json.dumps(r) + "\n")
    else:
        stdout.write(render_all(records))
    if args.command == "verify" and not records[-1]["result"]["summary"]["passed"]:
        return EXIT_INTERNAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
