"""Command-line front end.

Exit codes: 0 success, 1 property refuted (e.g. check-mu on a non-MU input),
2 usage or parse error, 3 guard exceeded, 4 a proven bound failed on verified
input (always a bug).
"""

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import report as reporting
from .bounds import certify, check_mu_bound, check_mu_bound_strict, construct_high_degree_mlean
from .cnf import full_clause_set, is_hitting, m_construction, parse_dimacs, serialize_dimacs
from .errors import DimacsError, GuardExceeded, NotMinimallyUnsatisfiable, TheoryViolation
from .matching import matching_lean_kernel, surplus
from .mu import BRUTE_GUARD, SOLVER_GUARD, is_lean, is_mu, lean_kernel, saturate
from .nonmersenne import NonMersenneTable, nm1, nm_recursive
from .oracle import enumerate_clause_sets, enumerate_mu

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_USAGE = 2
EXIT_GUARD = 3
EXIT_THEORY = 4


class Refuted(Exception):
    pass


def _env_int(name, default):
    value = os.environ.get(name)
    if value is None:
        return default
    try:
        return int(value)
    except ValueError:
        raise SystemExit(f"error: {name} must be an integer, got {value!r}")


def _read(path):
    if path == "-":
        return parse_dimacs(sys.stdin.buffer.read()), "<stdin>"
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise DimacsError(f"cannot read {path}: {exc.strerror}") from None
    return parse_dimacs(data), Path(path).name


def _emit(args, obj):
    if args.format == "json":
        print(reporting.dumps(obj))
    else:
        print(reporting.format_text(obj))


def _analyze_one(job):
    path, solver_guard, brute_guard, timings = job
    try:
        F, name = _read(path)
        rep = reporting.analyze(F, name, solver_guard, brute_guard, timings)
    except DimacsError as exc:
        return EXIT_USAGE, None, f"{path}: {exc}"
    except TheoryViolation as exc:
        return EXIT_THEORY, None, f"{path}: theory violation: {exc}"
    return EXIT_OK, rep, None


def cmd_analyze(args):
    jobs = [(p, args.solver_guard, args.brute_guard, args.timings) for p in args.files]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_analyze_one, jobs))
    else:
        results = [_analyze_one(j) for j in jobs]
    status = EXIT_OK
    for code, rep, err in results:
        if err:
            print(err, file=sys.stderr)
        else:
            _emit(args, rep)
        status = max(status, code)
    return status


def cmd_nm(args):
    variant = args.variant
    if args.table:
        table = NonMersenneTable.build(args.table, variant=variant)
        if args.format == "json":
            print(json.dumps({"variant": variant, "values": list(table.values),
                              "jumps": list(table.jumps)}))
        else:
            for k, value in enumerate(table.values, start=1):
                print(k, value)
        return EXIT_OK
    if args.k is None:
        raise argparse.ArgumentTypeError("nm needs k or --table")
    print(nm1(args.k) if variant == "nm1" else nm_recursive(args.k))
    return EXIT_OK


def cmd_surplus(args):
    F, name = _read(args.file)
    if F.n == 0:
        raise Refuted("surplus is undefined without variables")
    cert = surplus(F)
    _emit(args, {
        "input": name,
        "surplus": cert.surplus,
        "witness": sorted(cert.witness),
        "maximal_witness": sorted(cert.maximal_witness),
        "matching_lean": cert.surplus >= 1,
    })
    return EXIT_OK


def cmd_kernel(args):
    F, _ = _read(args.file)
    K = lean_kernel(F, args.brute_guard) if args.lean else matching_lean_kernel(F)
    sys.stdout.write(serialize_dimacs(K))
    return EXIT_OK


def cmd_certify(args):
    F, name = _read(args.file)
    if F.n == 0:
        raise Refuted("certify needs at least one variable")
    out = {"input": name}
    out.update(certify(F, args.solver_guard).as_dict())
    _emit(args, out)
    return EXIT_OK


def cmd_saturate(args):
    F, _ = _read(args.file)
    sys.stdout.write(serialize_dimacs(saturate(F, args.solver_guard)))
    return EXIT_OK


def cmd_check_mu(args):
    F, name = _read(args.file)
    if F.n == 0 or not is_mu(F, args.solver_guard):
        _emit(args, {"input": name, "mu": False})
        return EXIT_REFUTED
    check = (check_mu_bound_strict if args.strict else check_mu_bound)(F, args.solver_guard)
    _emit(args, {
        "input": name,
        "mu": True,
        "deficiency": check.deficiency,
        "minvdeg": check.minvdeg,
        "bound": check.bound,
        "variant": "nm1" if args.strict else "nm",
        "holds": check.holds,
        "strong_witness": check.strong_witness,
        "witness": check.witness.as_dict(),
    })
    if not check.holds or (not args.strict and not check.strong_witness):
        print("theory violation: degree bound fails on an MU input", file=sys.stderr)
        return EXIT_THEORY
    return EXIT_OK


def cmd_construct(args):
    if args.family == "A":
        F = full_clause_set(range(1, args.vars + 1))
    elif args.family == "M":
        F = m_construction(range(1, args.vars + 1))
    else:
        G = None
        if args.base:
            G, _ = _read(args.base)
        F = construct_high_degree_mlean(args.k, args.K, G)
    sys.stdout.write(serialize_dimacs(F))
    return EXIT_OK


_FILTERS = {
    "all": lambda F, a: True,
    "mu": lambda F, a: is_mu(F, a.solver_guard),
    "hitting": lambda F, a: is_hitting(F),
    "lean": lambda F, a: is_lean(F, a.brute_guard),
}


def cmd_enumerate(args):
    if args.filter == "mu":
        stream = enumerate_mu(args.vars, canonical=args.canonical)
        if args.max_clauses is not None:
            stream = (F for F in stream if F.c <= args.max_clauses)
    else:
        stream = enumerate_clause_sets(args.vars, args.max_clauses, canonical=args.canonical)
        keep = _FILTERS[args.filter]
        stream = (F for F in stream if keep(F, args))
    count = 0
    for F in stream:
        count += 1
        if args.format == "json":
            rep = reporting.analyze(F, f"enum-{count}", args.solver_guard, args.brute_guard) \
                if args.reports else {"input": f"enum-{count}", "n": F.n, "c": F.c,
                                      "deficiency": F.deficiency}
            rep["dimacs"] = serialize_dimacs(F)
            print(reporting.dumps(rep))
        else:
            print(f"c enum-{count}")
            sys.stdout.write(serialize_dimacs(F))
    print(f"c {count} clause-sets", file=sys.stderr)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cnfstruct",
        description="Deficiency, surplus, autarky and min-var-degree analysis of DIMACS CNF.")
    parser.add_argument("--format", choices=("json", "text"), default="json")
    parser.add_argument("--solver-guard", type=int,
                        default=_env_int("CNFSTRUCT_SOLVER_GUARD", SOLVER_GUARD),
                        help="max variables for SAT/MU decisions (env CNFSTRUCT_SOLVER_GUARD)")
    parser.add_argument("--brute-guard", type=int,
                        default=_env_int("CNFSTRUCT_BRUTE_GUARD", BRUTE_GUARD),
                        help="max variables for exhaustive autarky search (env CNFSTRUCT_BRUTE_GUARD)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report per input file")
    p.add_argument("files", nargs="+")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timings", action="store_true", help="include wall-clock timings (non-deterministic)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("nm", help="non-Mersenne numbers")
    p.add_argument("k", type=int, nargs="?")
    p.add_argument("--table", type=int, metavar="N")
    p.add_argument("--variant", choices=("nm", "nm1"), default="nm")
    p.set_defaults(func=cmd_nm)

    for name, func, help_ in (("surplus", cmd_surplus, "surplus with witnesses"),
                              ("certify", cmd_certify, "low-degree variable or autarky"),
                              ("saturate", cmd_saturate, "saturate an MU clause-set")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("file")
        p.set_defaults(func=func)

    p = sub.add_parser("kernel", help="matching-lean kernel (or lean kernel) as DIMACS")
    p.add_argument("file")
    p.add_argument("--lean", action="store_true")
    p.set_defaults(func=cmd_kernel)

    p = sub.add_parser("check-mu", help="verify MU and the min-var-degree bound")
    p.add_argument("file")
    p.add_argument("--strict", action="store_true", help="use the sharper nm1 bound")
    p.set_defaults(func=cmd_check_mu)

    p = sub.add_parser("construct", help="emit A(V), M(V) or a high-degree matching-lean instance")
    p.add_argument("family", choices=("A", "M", "mlean"))
    p.add_argument("--vars", type=int, default=2)
    p.add_argument("--k", type=int, default=2, help="deficiency (mlean)")
    p.add_argument("--K", type=int, default=2, help="positive literal degree lower bound (mlean)")
    p.add_argument("--base", help="DIMACS file for the base clause-set G (mlean)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("enumerate", help="stream all small clause-sets passing a filter")
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--filter", choices=tuple(_FILTERS), default="all")
    p.add_argument("--max-clauses", type=int)
    p.add_argument("--canonical", action="store_true", help="one per isomorphism class")
    p.add_argument("--reports", action="store_true", help="attach full analysis reports")
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DimacsError, argparse.ArgumentTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, TypeError) as exc:
        if isinstance(exc, NotMinimallyUnsatisfiable):
            print(f"refuted: {exc}", file=sys.stderr)
            return EXIT_REFUTED
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Refuted as exc:
        print(f"refuted: {exc}", file=sys.stderr)
        return EXIT_REFUTED
    except GuardExceeded as exc:
        print(f"guard exceeded: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except TheoryViolation as exc:
        print(f"theory violation: {exc}", file=sys.stderr)
        return EXIT_THEORY


if __name__ == "__main__":
    sys.exit(main())
