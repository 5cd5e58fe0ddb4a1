"""Machine-readable analysis reports (see ``report.schema.json``)."""

import json
import time
from importlib import resources

from .bounds import certify, check_mu_bound, mlcr_conditions
from .cnf import degrees, is_hitting
from .errors import GuardExceeded
from .matching import matching_lean_kernel, surplus
from .mu import BRUTE_GUARD, SOLVER_GUARD, is_mu, is_satisfiable, is_smu, lean_kernel
from .nonmersenne import nm1, nm_closed as nm

SCHEMA_VERSION = 1


def report_schema():
    return json.loads(resources.files(__package__).joinpath("report.schema.json").read_text())


def _size(F):
    return {"n": F.n, "c": F.c, "deficiency": F.deficiency}


def analyze(F, name, solver_guard=SOLVER_GUARD, brute_guard=BRUTE_GUARD, timings=False):
    """Full structural report for one multi-clause-set, as a JSON-ready dict.

    Exponential parts are skipped (reported as null and listed under
    ``skipped``) when the input exceeds the corresponding guard.
    """
    clock = {}
    skipped = []

    def timed(key, fn):
        start = time.perf_counter()
        try:
            return fn()
        except GuardExceeded:
            skipped.append(key)
            return None
        finally:
            clock[key] = round(time.perf_counter() - start, 6)

    table = degrees(F)
    report = {
        "schema_version": SCHEMA_VERSION,
        "input": name,
        "n": F.n,
        "c": F.c,
        "deficiency": F.deficiency,
        "max_multiplicity": F.max_multiplicity(),
        "has_empty_clause": F.has_empty_clause(),
        "degrees": {
            "minvdeg": table.minvdeg,
            "minldeg": table.minldeg,
            "min_vdeg_variables": table.min_vdeg_variables,
            "singular_variables": table.singular_variables,
            "non_singular": table.non_singular,
        },
        "hitting": is_hitting(F),
    }
    cert = timed("surplus", lambda: surplus(F)) if F.n else None
    report["surplus"] = None if cert is None else {
        "value": cert.surplus,
        "witness": sorted(cert.witness),
        "maximal_witness": sorted(cert.maximal_witness),
    }
    report["matching_lean"] = cert is None or cert.surplus >= 1
    mkernel = timed("matching_lean_kernel", lambda: matching_lean_kernel(F))
    lkernel = timed("lean_kernel", lambda: lean_kernel(F, brute_guard))
    report["kernels"] = {
        "matching_lean": _size(mkernel),
        "lean": None if lkernel is None else _size(lkernel),
    }
    sat = timed("satisfiable", lambda: is_satisfiable(F, solver_guard))
    report["satisfiable"] = None if sat is None else sat.satisfiable
    mu = timed("mu", lambda: is_mu(F, solver_guard))
    report["mu"] = mu
    report["smu"] = None if mu is None else (mu and timed("smu", lambda: is_smu(F, solver_guard)))

    bounds = {
        "nm_deficiency": nm(F.deficiency) if F.deficiency >= 1 else None,
        "nm1_deficiency": nm1(F.deficiency) if F.deficiency >= 1 else None,
        "nm_surplus": nm(cert.surplus) if cert is not None and cert.surplus >= 1 else None,
        "mu_bound": None,
    }
    bounds["minvdeg_le_nm_surplus"] = (
        None if bounds["nm_surplus"] is None else table.minvdeg <= bounds["nm_surplus"])
    if mu and F.n:
        check = timed("mu_bound", lambda: check_mu_bound(F, solver_guard))
        if check is not None:
            bounds["mu_bound"] = {
                "holds": check.holds,
                "strong_witness": check.strong_witness,
                "witness": check.witness.as_dict(),
                "nm1_holds": check.minvdeg <= nm1(check.deficiency),
            }
    report["bounds"] = bounds

    if F.n:
        mlcr = mlcr_conditions(F)
        report["mlcr"] = {
            "matching_lean": mlcr.matching_lean,
            "unique_minimizer": mlcr.unique_minimizer,
            "degree_exceeds_bound": mlcr.degree_exceeds_bound,
            "member": bool(mlcr),
        }
        verdict = timed("verdict", lambda: certify(F, solver_guard))
        report["verdict"] = None if verdict is None else verdict.as_dict()
    else:
        report["mlcr"] = None
        report["verdict"] = None
    report["guards"] = {"solver": solver_guard, "brute": brute_guard}
    report["skipped"] = skipped
    if timings:
        report["timings"] = clock
    return report


def dumps(report):
    """Canonical single-line JSON (sorted keys) for byte-stable output."""
    return json.dumps(report, sort_keys=True)


def format_text(report, indent=""):
    lines = []
    for key, value in report.items():
        if isinstance(value, dict):
            lines.append(f"{indent}{key}:")
            lines.append(format_text(value, indent + "  "))
        else:
            lines.append(f"{indent}{key}: {json.dumps(value)}")
    return "\n".join(lines)
