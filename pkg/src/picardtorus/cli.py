"""Command-line entry point: ``picardtorus <command> ...``.

Exit codes: 0 success, 1 verification or consistency failure, 2 input error,
3 indeterminate certification.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from . import analysis, instances, verify
from .errors import ConsistencyError, IndeterminateError, InputError
from .polarization import PolarizationSearch

EXIT_OK, EXIT_FAILURE, EXIT_INPUT, EXIT_INDETERMINATE = 0, 1, 2, 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _text_lines(obj: Any, indent: int = 0) -> list[str]:
    pad = "  " * indent
    out = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v:
                out.append(f"{pad}{k}:")
                out.extend(_text_lines(v, indent + 1))
            else:
                out.append(f"{pad}{k}: {json.dumps(v) if isinstance(v, (dict, list)) else v}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, dict):
                out.append(f"{pad}-")
                out.extend(_text_lines(v, indent + 1))
            else:
                out.append(f"{pad}- {json.dumps(v) if isinstance(v, list) else v}")
    else:
        out.append(f"{pad}{obj}")
    return out


def _emit(args, payload: dict, text: str) -> None:
    doc = instances.report_document(payload, text, args.precision_bits)
    if args.format == "json":
        sys.stdout.write(instances.dumps_report(doc))
    else:
        sys.stdout.write("\n".join(_text_lines(doc)) + "\n")


def _load(args):
    text = _read(args.file)
    _, P = instances.parse_instance(text, args.precision_bits, args.max_precision_bits)
    return text, P


def _search(args) -> PolarizationSearch:
    return PolarizationSearch(bound=args.search_bound, precision=args.precision_bits)


def cmd_analyze(args) -> int:
    text, P = _load(args)
    report = analysis.classify(P, _search(args), strict=False)
    _emit(args, report.to_json(), text)
    return EXIT_FAILURE if report.failed else EXIT_OK


def cmd_classify(args) -> int:
    text, P = _load(args)
    report = analysis.classify(P, _search(args), strict=False)
    payload = {
        "g": report.g,
        "rho": report.rho,
        "degree_d": report.degree_d,
        "rho_maximal": report.rho_maximal,
        "polarized": report.polarization is not None,
        "consistency": [v.to_json() for v in report.consistency],
    }
    _emit(args, payload, text)
    return EXIT_FAILURE if report.failed else EXIT_OK


def cmd_bounds(args) -> int:
    text, P = _load(args)
    rho, _ = analysis.picard_number(P)
    degree = analysis.extension_degree(P)
    dij, bdij, bdeg = analysis.dij_bounds(P, degree)
    payload = {
        "g": P.g,
        "rho": rho,
        "degree_d": degree,
        "dij": {f"{i + 1},{j + 1}": v for (i, j), v in sorted(dij.items())},
        "bound_dij": bdij,
        "bound_degree": None if bdeg is None else str(bdeg),
        "bound_dij_holds": bdij is None or bdij <= rho,
        "bound_degree_holds": bdeg is None or bdeg <= rho,
    }
    _emit(args, payload, text)
    return EXIT_OK if payload["bound_dij_holds"] and payload["bound_degree_holds"] else EXIT_FAILURE


def cmd_ns_basis(args) -> int:
    text, P = _load(args)
    basis = analysis.ns_basis(P)
    _emit(args, {"g": P.g, "rho": len(basis), "ns_basis": [c.to_json() for c in basis]}, text)
    return EXIT_OK


def cmd_end_rank(args) -> int:
    text, P = _load(args)
    _emit(args, {"g": P.g, "end_rank": analysis.end_rank(P)}, text)
    return EXIT_OK


def cmd_gen(args) -> int:
    params: dict[str, Any] = {}
    if args.d is not None:
        params["d"] = args.d
    if args.g is not None:
        params["g"] = args.g
    if args.field is not None:
        params["field"] = args.field
    if args.base is not None:
        params["base"] = instances.load_instance(_read(args.base))
    inst = instances.generate_instance(args.kind, args.seed, **params)
    sys.stdout.write(inst.dumps())
    return EXIT_OK


def cmd_verify(args) -> int:
    ok, results = verify.run_verify_suite(args.suite)
    for r in results:
        if args.format == "json":
            sys.stdout.write(json.dumps(r.to_json(), sort_keys=True) + "\n")
        else:
            mark = "PASS" if r.passed else "FAIL"
            sys.stdout.write(f"{mark} {r.suite} {r.check} {r.instance}: expected {r.expected}, got {r.got}\n")
    if args.format == "text":
        sys.stdout.write(f"{sum(r.passed for r in results)}/{len(results)} checks passed\n")
    return EXIT_OK if ok else EXIT_FAILURE


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="picardtorus", description="Picard numbers of complex tori with algebraic periods.")
    p.add_argument("--precision-bits", type=int, default=256)
    p.add_argument("--max-precision-bits", type=int, default=4096)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--search-bound", type=int, default=2, help="coefficient box for the polarization search")
    sub = p.add_subparsers(dest="command", required=True)
    for name, fn, help_ in (
        ("analyze", cmd_analyze, "full report"),
        ("bounds", cmd_bounds, "d_ij values and lower bounds for rho"),
        ("ns-basis", cmd_ns_basis, "integral basis of the Neron-Severi lattice"),
        ("end-rank", cmd_end_rank, "rank of the endomorphism ring"),
        ("classify", cmd_classify, "rho, degree and consistency verdicts"),
    ):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("file", help="instance JSON file, or - for stdin")
        sp.set_defaults(func=fn)
    sp = sub.add_parser("gen", help="print a generated instance")
    sp.add_argument("kind", choices=("cm_power", "noncm_cubic_power", "cm_pair", "rho_zero", "random", "transformed"))
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--d", type=int)
    sp.add_argument("--g", type=int)
    sp.add_argument("--field")
    sp.add_argument("--base", help="instance file to transform")
    sp.set_defaults(func=cmd_gen)
    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("suite", choices=sorted(verify.SUITES))
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except IndeterminateError as exc:
        print(f"indeterminate: {exc}", file=sys.stderr)
        return EXIT_INDETERMINATE
    except ConsistencyError as exc:
        print(f"consistency failure: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
