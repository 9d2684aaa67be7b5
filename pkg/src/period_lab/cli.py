"""Command-line interface.

Subcommands: ord, simulate, minpoly, period-set, ring (period-set,
period), algebra, verify.  Every subcommand takes --format text|json|csv;
JSON payloads carry a top-level {"schema": "period-lab/1"} key and are
byte-identical across runs for identical inputs.

Exit codes: 0 success, 1 computation error, 2 usage error.  Diagnostics
go to standard error only, so piped output stays clean.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .ff import parse_field_spec
from .orders import poly_order, poly_order_bruteforce
from .period_sets import (
    default_budget,
    order_set_bruteforce,
    period_set_closed_form,
    period_set_lower_bound,
)
from .poly import DEFAULT_SEED, format_poly, parse_poly
from .rings import (
    GroupAlgebra,
    group_algebra_max_period,
    make_product_ring,
    period_over_ring,
)
from .sequences import Recurrence, generate, minimal_poly, period_bruteforce
from .verify import SCOPES, run_verify

SCHEMA = "period-lab/1"


class UsageError(Exception):
    """Bad input values (field specs, polynomials, flag combinations)."""


def _split_top_level(text: str) -> list[str]:
    """Split on commas that are not inside [...] coordinate lists."""
    parts, buf, depth = [], "", 0
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append(buf)
            buf = ""
        else:
            buf += ch
    parts.append(buf)
    return [p.strip() for p in parts]


def _emit(args, payload: dict, text_lines: list[str], csv_rows: list[list]):
    fmt = getattr(args, "format", "text")
    if fmt == "json":
        print(json.dumps(payload))
    elif fmt == "csv":
        for row in csv_rows:
            print(",".join(str(c) for c in row))
    else:
        for line in text_lines:
            print(line)


# -- ord ------------------------------------------------------------------------

def _prepare_ord(args):
    field = parse_field_spec(args.field)
    return field, parse_poly(field, args.poly)


def _run_ord(args, inputs) -> int:
    field, f = inputs
    payload = {"schema": SCHEMA, "command": "ord",
               "field": field.spec(), "poly": format_poly(f),
               "method": args.method}
    text, rows = [], [["method", "order"]]
    if args.method in ("pipeline", "both"):
        result = poly_order(f, seed=args.seed)
        payload["order"] = result.order
        text.append(f"pipeline: {result.order}" if args.method == "both"
                    else str(result.order))
        rows.append(["pipeline", result.order])
        if args.explain:
            payload["strip_exponent"] = result.strip_exponent
            payload["factors"] = [
                {
                    "factor": format_poly(c.factor),
                    "multiplicity": c.multiplicity,
                    "base_order": c.base_order,
                    "char_exponent": c.char_exponent,
                    "contribution": c.contribution,
                }
                for c in result.contributions
            ]
            text.append(f"strip exponent: {result.strip_exponent}")
            for c in result.contributions:
                text.append(
                    f"factor {format_poly(c.factor)} ^ {c.multiplicity}: "
                    f"base order {c.base_order}, char exponent {c.char_exponent}, "
                    f"contribution {c.contribution}"
                )
    if args.method in ("bruteforce", "both"):
        brute = poly_order_bruteforce(f)
        payload["bruteforce"] = brute
        text.append(f"bruteforce: {brute}" if args.method == "both" else str(brute))
        rows.append(["bruteforce", brute])
    if args.method == "both":
        agree = payload["order"] == payload["bruteforce"]
        payload["agree"] = agree
        text.append(f"agree: {str(agree).lower()}")
    _emit(args, payload, text, rows)
    return 0


# -- simulate ---------------------------------------------------------------------

def _prepare_simulate(args):
    field = parse_field_spec(args.field)
    coeffs = tuple(field.parse_element(s) for s in _split_top_level(args.rec))
    init = tuple(field.parse_element(s) for s in _split_top_level(args.init))
    if args.terms < 0:
        raise UsageError("--terms must be >= 0")
    return field, Recurrence(field, coeffs), init


def _run_simulate(args, inputs) -> int:
    field, rec, init = inputs
    terms = generate(rec, init, args.terms)
    fmt_el = field.format_element
    payload = {
        "schema": SCHEMA, "command": "simulate", "field": field.spec(),
        "recurrence": [fmt_el(c) for c in rec.coeffs],
        "initial": [fmt_el(s) for s in init],
        "terms": [fmt_el(t) for t in terms],
    }
    text = [" ".join(fmt_el(t) for t in terms)]
    rows = [["n", "term"]] + [[i, fmt_el(t)] for i, t in enumerate(terms)]
    if args.period:
        period = period_bruteforce(rec, init)
        payload["period"] = period
        text.append(f"period: {period}")
        rows.append(["period", period])
    if args.trajectory:
        state = list(init)
        traj = [[fmt_el(s) for s in state]]
        from .sequences import _step

        for _ in range(max(args.terms - 1, 0)):
            _step(rec, state)
            traj.append([fmt_el(s) for s in state])
        payload["trajectory"] = traj
    _emit(args, payload, text, rows)
    return 0


# -- minpoly -----------------------------------------------------------------------

def _prepare_minpoly(args):
    field = parse_field_spec(args.field)
    terms = [field.parse_element(s) for s in _split_top_level(args.terms)]
    if args.bound < 0:
        raise UsageError("--bound must be >= 0")
    return field, terms


def _run_minpoly(args, inputs) -> int:
    field, terms = inputs
    m = minimal_poly(field, terms, args.bound)
    payload = {"schema": SCHEMA, "command": "minpoly", "field": field.spec(),
               "bound": args.bound, "minimal_poly": format_poly(m)}
    _emit(args, payload, [format_poly(m)], [["minimal_poly"], [format_poly(m)]])
    return 0


# -- period-set ----------------------------------------------------------------------

def _prepare_period_set(args):
    field = parse_field_spec(args.field)
    if args.degree < 1:
        raise UsageError("--degree must be >= 1")
    return (field,)


def _run_period_set(args, inputs) -> int:
    (field,) = inputs
    k, q = args.degree, field.q
    jobs = args.jobs if args.jobs > 0 else (os.cpu_count() or 1)
    budget = args.budget if args.budget is not None else default_budget()
    methods = ["closed", "bound", "bruteforce"] if args.method == "all" else [args.method]
    sets = {}
    for method in methods:
        if method == "closed":
            sets[method] = list(period_set_closed_form(k, q))
        elif method == "bound":
            sets[method] = list(period_set_lower_bound(k, q))
        else:
            sets[method] = list(
                order_set_bruteforce(field, k, budget=budget, jobs=jobs,
                                     seed=args.seed)
            )
    base = {"schema": SCHEMA, "command": "period-set",
            "q": q, "p": field.p, "e": field.e, "k": k}
    if args.method == "all":
        payload = dict(base, method="all", sets=sets,
                       equal=len({tuple(v) for v in sets.values()}) == 1)
    else:
        payload = dict(base, method=args.method, period_set=sets[args.method])
    text = [f"field: {field.spec()}", f"degree: {k}"]
    rows = [["period"]]
    for method, vals in sets.items():
        text.append(f"{method}: " + " ".join(str(v) for v in vals))
    if args.method == "all":
        text.append(f"equal: {str(payload['equal']).lower()}")
        rows = [["method", "period"]]
        for method, vals in sets.items():
            rows += [[method, v] for v in vals]
    else:
        rows += [[v] for v in sets[args.method]]
    _emit(args, payload, text, rows)
    return 0


# -- ring -------------------------------------------------------------------------

def _prepare_ring_common(args):
    specs = _split_top_level(args.components)
    if not specs or specs == [""]:
        raise UsageError("--components must list at least one field")
    return make_product_ring(specs)


def _prepare_ring_period_set(args):
    ring = _prepare_ring_common(args)
    if args.degree < 1:
        raise UsageError("--degree must be >= 1")
    return (ring,)


def _run_ring_period_set(args, inputs) -> int:
    (ring,) = inputs
    k = args.degree
    budget = args.budget if args.budget is not None else default_budget()
    from .rings import component_period_set

    component_sets = [
        component_period_set(c, k, budget=budget) for c in ring.components
    ]
    from .rings import lcm_closure

    combined = lcm_closure(component_sets)
    payload = {
        "schema": SCHEMA, "command": "ring-period-set",
        "components": [c.spec() for c in ring.components], "k": k,
        "component_period_sets": [list(s) for s in component_sets],
        "period_set": list(combined),
    }
    text = [f"ring: {ring.spec()}", f"degree: {k}"]
    for c, s in zip(ring.components, component_sets):
        text.append(f"component {c.spec()}: " + " ".join(str(v) for v in s))
    text.append("ring: " + " ".join(str(v) for v in combined))
    rows = [["period"]] + [[v] for v in combined]
    _emit(args, payload, text, rows)
    return 0


def _prepare_ring_period(args):
    ring = _prepare_ring_common(args)
    coeffs = tuple(ring.parse_element(s) for s in _split_top_level(args.rec))
    init = tuple(ring.parse_element(s) for s in _split_top_level(args.init))
    return ring, Recurrence(ring, coeffs), init


def _run_ring_period(args, inputs) -> int:
    ring, rec, init = inputs
    period = period_over_ring(rec, init)
    payload = {
        "schema": SCHEMA, "command": "ring-period",
        "components": [c.spec() for c in ring.components],
        "recurrence": [ring.format_element(c) for c in rec.coeffs],
        "initial": [ring.format_element(s) for s in init],
        "component_periods": [],
        "period": period,
    }
    from .rings import component_recurrence

    text = []
    rows = [["component", "period"]]
    for i, comp in enumerate(ring.components):
        cper = period_bruteforce(component_recurrence(rec, i),
                                 tuple(s[i] for s in init))
        payload["component_periods"].append(cper)
        text.append(f"component {comp.spec()}: {cper}")
        rows.append([comp.spec(), cper])
    if args.method in ("simulate", "both"):
        direct = period_over_ring(rec, init, direct=True)
        payload["simulated"] = direct
        text.append(f"simulated: {direct}")
        rows.append(["simulated", direct])
    text.append(f"period: {period}")
    rows.append(["lcm", period])
    _emit(args, payload, text, rows)
    return 0


# -- algebra ------------------------------------------------------------------------

def _prepare_algebra(args):
    if args.n < 2:
        raise UsageError("--n must be >= 2")
    if args.degree is not None and args.degree < 1:
        raise UsageError("--degree must be >= 1")
    return (GroupAlgebra(args.p, args.n),)


def _run_algebra(args, inputs) -> int:
    (ga,) = inputs
    budget = args.budget if args.budget is not None else default_budget()
    payload = {
        "schema": SCHEMA, "command": "algebra", "p": ga.p, "n": ga.n,
        "factors": [
            {"poly": format_poly(f, variable="t"), "multiplicity": m}
            for f, m in ga.factors
        ],
        "factor_count": sum(m for _, m in ga.factors),
        "semisimple": ga.semisimple,
        "components": [c.spec() for c in ga.decomposition.components]
        if ga.semisimple else None,
    }
    text = [
        f"algebra: F_{ga.p}[t]/<t^{ga.n}-1>",
        "t^n-1 = " + " * ".join(
            f"({format_poly(f, variable='t')})" + (f"^{m}" if m > 1 else "")
            for f, m in ga.factors
        ),
        f"semisimple: {str(ga.semisimple).lower()}",
    ]
    if ga.semisimple:
        text.append("components: " + " + ".join(payload["components"]))
    rows = [["key", "value"],
            ["semisimple", str(ga.semisimple).lower()],
            ["factor_count", payload["factor_count"]]]
    if args.max_period:
        k = args.degree or 1
        maxp = group_algebra_max_period(ga, k, budget=budget)
        payload["degree"] = k
        payload["max_period"] = maxp
        text.append(f"max period (degree {k}): {maxp}")
        rows.append([f"max_period_degree_{k}", maxp])
    _emit(args, payload, text, rows)
    return 0


# -- verify -------------------------------------------------------------------------

def _prepare_verify(args):
    return ()


def _run_verify_cmd(args, inputs) -> int:
    report = run_verify(args.scope)
    payload = {
        "schema": SCHEMA, "command": "verify", "scope": args.scope,
        "checks": [
            {"name": c.name, "scope": c.scope, "claim": c.claim,
             "expected": c.expected, "computed": c.computed, "pass": c.passed}
            for c in report.checks
        ],
        "passed": report.passed,
    }
    text = []
    for c in report.checks:
        status = "PASS" if c.passed else "FAIL"
        text.append(f"{status} {c.name} ({c.elapsed_ms:.1f} ms): {c.claim}")
        if not c.passed:
            text.append(f"     expected {c.expected}")
            text.append(f"     computed {c.computed}")
    n_pass = sum(1 for c in report.checks if c.passed)
    text.append(f"{n_pass}/{len(report.checks)} checks passed")
    rows = [["name", "scope", "pass"]] + [
        [c.name, c.scope, str(c.passed).lower()] for c in report.checks
    ]
    _emit(args, payload, text, rows)
    return 0 if report.passed else 1


# -- parser wiring ---------------------------------------------------------------------

def _add_common(sub, *, budget=False, jobs=False, seed=False):
    sub.add_argument("--format", choices=("text", "json", "csv"), default="text",
                     help="output format (default text)")
    if budget:
        sub.add_argument("--budget", type=int, default=None,
                         help="enumeration budget (default 10^6 or $PERIOD_LAB_BUDGET)")
    if jobs:
        sub.add_argument("--jobs", type=int, default=1,
                         help="worker processes for brute-force enumeration "
                              "(0 = all cores)")
    if seed:
        sub.add_argument("--seed", type=int, default=DEFAULT_SEED,
                         help="seed for the randomized factorization steps")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="period-lab",
        description="Periods of linear recurrences over finite fields, "
                    "products of fields, and cyclic group algebras.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p_ord = subs.add_parser("ord", help="order of a polynomial")
    p_ord.add_argument("--field", required=True, help="field spec, e.g. 2 or 3^2")
    p_ord.add_argument("--poly", required=True, help="polynomial text, e.g. x^5+x^4+1")
    p_ord.add_argument("--method", choices=("pipeline", "bruteforce", "both"),
                       default="pipeline")
    p_ord.add_argument("--explain", action="store_true",
                       help="include the per-factor ledger")
    _add_common(p_ord, seed=True)
    p_ord.set_defaults(prepare=_prepare_ord, run=_run_ord)

    p_sim = subs.add_parser("simulate", help="generate a recurrence sequence")
    p_sim.add_argument("--field", required=True)
    p_sim.add_argument("--rec", required=True,
                       help="coefficients c_0,...,c_{k-1}")
    p_sim.add_argument("--init", required=True, help="initial state a_0,...,a_{k-1}")
    p_sim.add_argument("--terms", type=int, required=True)
    p_sim.add_argument("--period", action="store_true",
                       help="also measure the period")
    p_sim.add_argument("--trajectory", action="store_true",
                       help="include the state trajectory (JSON)")
    _add_common(p_sim)
    p_sim.set_defaults(prepare=_prepare_simulate, run=_run_simulate)

    p_min = subs.add_parser("minpoly", help="minimal polynomial of a sequence prefix")
    p_min.add_argument("--field", required=True)
    p_min.add_argument("--terms", required=True, help="comma-separated terms")
    p_min.add_argument("--bound", type=int, required=True,
                       help="degree bound (prefix must have >= 2*bound terms)")
    _add_common(p_min)
    p_min.set_defaults(prepare=_prepare_minpoly, run=_run_minpoly)

    p_ps = subs.add_parser("period-set", help="period set of a fixed degree")
    p_ps.add_argument("--field", required=True)
    p_ps.add_argument("--degree", type=int, required=True)
    p_ps.add_argument("--method", choices=("closed", "bound", "bruteforce", "all"),
                      default="closed")
    _add_common(p_ps, budget=True, jobs=True, seed=True)
    p_ps.set_defaults(prepare=_prepare_period_set, run=_run_period_set)

    p_ring = subs.add_parser("ring", help="product-of-fields computations")
    ring_subs = p_ring.add_subparsers(dest="ring_command", required=True)

    p_rps = ring_subs.add_parser("period-set", help="period set over the ring")
    p_rps.add_argument("--components", required=True,
                       help="comma-separated field specs, e.g. 2,3,5")
    p_rps.add_argument("--degree", type=int, required=True)
    _add_common(p_rps, budget=True)
    p_rps.set_defaults(prepare=_prepare_ring_period_set, run=_run_ring_period_set)

    p_rp = ring_subs.add_parser("period", help="period of one ring recurrence")
    p_rp.add_argument("--components", required=True)
    p_rp.add_argument("--rec", required=True,
                      help="ring coefficients; parts joined with '|', e.g. 1|1|1,0|2|3")
    p_rp.add_argument("--init", required=True)
    p_rp.add_argument("--method", choices=("lcm", "simulate", "both"), default="lcm")
    _add_common(p_rp)
    p_rp.set_defaults(prepare=_prepare_ring_period, run=_run_ring_period)

    p_alg = subs.add_parser("algebra", help="cyclic group algebra F_p[t]/<t^n-1>")
    p_alg.add_argument("--p", type=int, required=True)
    p_alg.add_argument("--n", type=int, required=True)
    p_alg.add_argument("--degree", type=int, default=None)
    p_alg.add_argument("--max-period", action="store_true",
                       help="compute the maximum degree-k period")
    _add_common(p_alg, budget=True)
    p_alg.set_defaults(prepare=_prepare_algebra, run=_run_algebra)

    p_ver = subs.add_parser("verify", help="run the built-in verification suite")
    p_ver.add_argument("--scope", choices=("all",) + SCOPES, default="all")
    _add_common(p_ver)
    p_ver.set_defaults(prepare=_prepare_verify, run=_run_verify_cmd)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        inputs = args.prepare(args)
    except (UsageError, ValueError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    try:
        return args.run(args, inputs)
    except (ValueError, ArithmeticError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
