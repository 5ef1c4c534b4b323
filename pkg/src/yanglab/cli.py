"""Command line front end emitting machine-readable JSON reports.

Subcommands
-----------
r-check     build the fundamental R-matrix and verify the Yang-Baxter
            equation symbolically
construct   build an L-operator and report its space summary
verify      run identity checks (lie, adjoint, rll, linear, constraints,
            w, chi3, center) on a construction
weights     extract highest-weight data, ratios and conditions
finiteness  run the polynomial-existence criterion on the ratios
all         construct -> verify -> weights -> finiteness

Exit codes: 0 all requested checks passed, 1 some check failed,
2 configuration error.  Reports are schema-versioned JSON with every
scalar serialized exactly as a string; timings are reported but never
part of pass/fail.  Configuration may come from flags or a JSON file
(--config); flags override the file.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor

from .exact import Scalar, UniPoly
from .lops import (
    LOperator,
    build_gl2_js_chain,
    build_heisenberg_linear,
    build_js_quadratic,
    build_product,
    build_spinorial_linear,
    fuse_so3_from_gl2,
    heisenberg_vacuum,
    js_highest_vector,
    product_vector,
    spinor_flipped_vacuum,
    spinor_vacuum,
)
from .spaces import spinor_space
from .structure import check_ybe, fundamental_r, make_case
from .verify import (
    center_function,
    check_adjoint,
    check_chi3,
    check_lie,
    check_linear_constraint,
    check_rll,
    check_symmetric_constraints,
    check_w_tensor,
    cyclic_span,
)
from .weights import drinfeld_test, find_highest_weight, weight_report

SCHEMA = "yanglab-report/1"

DEFAULT_CHECKS = {
    "spinor": ["lie", "linear", "rll", "center"],
    "heisenberg": ["lie", "linear", "rll", "center"],
    "js": ["lie", "adjoint", "rll", "constraints", "w", "chi3", "center"],
    "product": ["lie", "adjoint", "rll", "constraints", "center"],
    "fuse3": ["rll"],
}


class ConfigError(Exception):
    pass


def _scalar_arg(value, name):
    if value is None:
        return None
    try:
        if isinstance(value, (int, Scalar)):
            return Scalar.of(value)
        return Scalar.from_string(str(value))
    except Exception as exc:
        raise ConfigError(f"cannot parse {name}={value!r}: {exc}") from exc


def resolve_case(cfg):
    family = cfg.get("family")
    if family not in ("so", "sp"):
        raise ConfigError("--family must be so or sp")
    m = cfg.get("m")
    if not isinstance(m, int) or m < 1:
        raise ConfigError("--m must be a positive integer")
    if family == "sp":
        return make_case("sp", m)
    return make_case("so_odd" if cfg.get("odd") else "so_even", m)


def _build_linear_factor(case, spec, trunc):
    op = spec.get("op", "spinor")
    if op == "spinor":
        lop = build_spinorial_linear(case, trunc=trunc)
        space, gens = spinor_space(case, trunc=trunc)
        if spec.get("vector") == "flipped":
            vec = spinor_flipped_vacuum(case, space, gens)
        else:
            vec = spinor_vacuum(lop.space)
        return lop, vec
    if op == "heisenberg":
        ell = _scalar_arg(spec.get("ell", 0), "ell")
        lop = build_heisenberg_linear(case, ell, max_degree=trunc)
        return lop, heisenberg_vacuum(lop.space)
    raise ConfigError(f"product factors must be linear (spinor|heisenberg), got {op!r}")


def build_operator(cfg):
    """Build the requested construction; returns (lop, canonical hw vector)."""
    op = cfg.get("op")
    params = cfg.get("params") or {}
    trunc = cfg.get("trunc") or 4
    if op in (None, ""):
        raise ConfigError("--op is required for this command")
    if op == "gl2chain" or op == "fuse3":
        chain = params.get("chain")
        if chain is None:
            raise ConfigError('--params must supply {"chain": [[u_k, d_k], ...]}')
        pairs = [(_scalar_arg(u, "u_k"), int(d)) for u, d in chain]
        gl2 = build_gl2_js_chain(pairs)
        if op == "gl2chain":
            return gl2, {gl2.hw_index: Scalar.of(1)}
        lop, qdet = fuse_so3_from_gl2(gl2)
        lop.params["qdet"] = qdet
        return lop, {gl2.hw_index: Scalar.of(1)}

    case = resolve_case(cfg)
    if op == "spinor":
        return _build_linear_factor(case, {"op": "spinor", **params}, trunc)
    if op == "heisenberg":
        ell = _scalar_arg(cfg.get("ell", params.get("ell", 0)), "ell")
        lop = build_heisenberg_linear(case, ell, max_degree=trunc)
        return lop, heisenberg_vacuum(lop.space)
    if op == "js":
        two_l = cfg.get("twoL", params.get("twoL"))
        if two_l is None:
            raise ConfigError("--twoL is required for the js construction")
        k = _scalar_arg(cfg.get("k", params.get("k")), "k")
        lop = build_js_quadratic(case, int(two_l), k=k)
        return lop, js_highest_vector(case, lop.space, int(two_l))
    if op == "product":
        delta = _scalar_arg(cfg.get("delta", params.get("delta", 0)), "delta")
        f1_spec = params.get("factor1", {"op": "spinor"})
        f2_spec = params.get("factor2", {"op": "spinor"})
        l1, v1 = _build_linear_factor(case, f1_spec, trunc)
        l2, v2 = _build_linear_factor(case, f2_spec, trunc)
        lop = build_product(l1, l2, delta)
        return lop, product_vector(l1.space, v1, l2.space, v2)
    raise ConfigError(f"unknown construction {op!r}")


def _stage(timings, name, fn, *args, **kwargs):
    started = time.perf_counter()
    out = fn(*args, **kwargs)
    timings[name] = round(time.perf_counter() - started, 6)
    return out


def run_checks(lop: LOperator, vec, names, mode="exact", points=3, jobs=1):
    """Run the named identity checks; independent checks may run on a
    bounded worker pool (results are deterministic regardless)."""
    span = None

    def get_span():
        nonlocal span
        if span is None and vec is not None and lop.space.trunc is None:
            span = cyclic_span(lop, [vec])
        return span

    def dispatch(name):
        if name == "lie":
            return check_lie(lop)
        if name == "adjoint":
            return check_adjoint(lop)
        if name == "rll":
            return check_rll(lop, mode=mode, points=points)
        if name == "linear":
            return check_linear_constraint(lop)
        if name == "constraints":
            return check_symmetric_constraints(lop, span=get_span())
        if name == "w":
            return check_w_tensor(lop)
        if name == "chi3":
            return check_chi3(lop)
        if name == "center":
            c, rep = center_function(lop, span=get_span())
            return rep
        raise ConfigError(f"unknown check {name!r}")

    if jobs > 1:
        get_span()  # materialize before sharing across workers
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(dispatch, names))
    else:
        results = [dispatch(name) for name in names]
    return results


def _weights_stage(cfg, lop, vec):
    selector = cfg.get("vector", "auto")
    if isinstance(lop, LOperator):
        if selector == "auto":
            vectors = [vec]
        elif selector == "kernel":
            vectors = find_highest_weight(lop)
            if not vectors:
                raise ConfigError("no highest-weight vector found in the safe subspace")
        else:
            try:
                positions = [int(x) for x in str(selector).split(",")]
            except ValueError as exc:
                raise ConfigError(f"bad --vector {selector!r}") from exc
            vectors = [{p: Scalar.of(1) for p in positions}]
        k = _scalar_arg(cfg.get("k"), "k")
        return [weight_report(lop, v, k=k) for v in vectors]
    # gl(2) chain: report its ratio and the shift-one criterion directly
    num, den = lop.ratio()
    from .exact import reduce_ratio

    reduced = [reduce_ratio(num, den)]
    gl2_case = make_case("so_even", 2)  # shift 1 for the single gl(2) ratio
    return [drinfeld_test(reduced, gl2_case)]


def run(cfg) -> tuple[dict, int]:
    """Execute one configured pipeline; returns (report dict, exit code)."""
    timings: dict = {}
    report: dict = {"schema": SCHEMA, "config": {k: v for k, v in sorted(cfg.items())
                                                 if v is not None}}
    command = cfg["command"]
    failed = False

    if command == "r-check":
        case = resolve_case(cfg)
        ybe = _stage(timings, "ybe", check_ybe, case)
        report["case"] = case.label()
        report["ybe"] = {"passed": ybe.passed}
        if not ybe.passed:
            a_idx, b_idx, residual = ybe.violation
            report["ybe"]["counterexample"] = {
                "row": list(a_idx), "col": list(b_idx),
                "residual": residual.to_strings(),
            }
            failed = True
        report["timings"] = timings
        return report, (1 if failed else 0)

    lop, vec = _stage(timings, "construct", build_operator, cfg)
    if isinstance(lop, LOperator):
        report["construction"] = lop.summary()
        if "qdet" in lop.params:
            report["construction"]["qdet"] = lop.params["qdet"].to_strings()
            report["construction"]["params"].pop("qdet", None)
        if lop.kind in ("heisenberg", "product"):
            # identities polynomial in the free parameter have degree <= 2,
            # so three rational parameter values certify them
            report["construction"]["parameter_certification"] = {
                "degree_bound": 2, "points_sufficient": 3}
    else:
        report["construction"] = {"kind": "gl2chain", "space": lop.space.summary()}

    if command in ("verify", "all") and isinstance(lop, LOperator):
        names = cfg.get("checks") or DEFAULT_CHECKS.get(lop.kind, ["rll"])
        results = _stage(timings, "verify", run_checks, lop, vec, names,
                         mode=cfg.get("mode", "exact"), points=cfg.get("points", 3),
                         jobs=cfg.get("jobs", 1))
        report["checks"] = [r.to_dict() for r in results]
        failed = failed or not all(r.passed for r in results)

    if command in ("weights", "finiteness", "all"):
        outcomes = _stage(timings, "weights", _weights_stage, cfg, lop, vec)
        if isinstance(lop, LOperator):
            report["weights"] = [w.to_dict() for w in outcomes]
            failed = failed or not all(w.passed for w in outcomes)
            if command in ("finiteness", "all"):
                failed = failed or not all(w.drinfeld.exists for w in outcomes)
        else:
            report["finiteness"] = [d.to_dict() for d in outcomes]
            failed = failed or not all(d.exists for d in outcomes)

    report["timings"] = timings
    return report, (1 if failed else 0)


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="yanglab",
        description="Exact verification of orthogonal/symplectic Yangian structures.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("r-check", "construct", "verify", "weights", "finiteness", "all"):
        cmd = sub.add_parser(name)
        cmd.add_argument("--family", choices=("so", "sp"))
        cmd.add_argument("--m", type=int)
        cmd.add_argument("--odd", action="store_true", default=None,
                         help="select so(2m+1) instead of so(2m)")
        cmd.add_argument("--op", choices=("spinor", "heisenberg", "js", "product",
                                          "gl2chain", "fuse3"))
        cmd.add_argument("--twoL", type=int, dest="twoL")
        cmd.add_argument("--ell")
        cmd.add_argument("--delta")
        cmd.add_argument("--k")
        cmd.add_argument("--trunc", type=int, help="truncation degree D")
        cmd.add_argument("--mode", choices=("exact", "sample"))
        cmd.add_argument("--points", type=int, help="sample-mode point count")
        cmd.add_argument("--checks", help="comma list of checks to run")
        cmd.add_argument("--vector", help="auto | kernel | comma basis positions")
        cmd.add_argument("--params", help="construction parameters as JSON")
        cmd.add_argument("--config", help="JSON file with defaults")
        cmd.add_argument("--json", dest="json_out", help="write the report here")
        cmd.add_argument("--jobs", type=int, help="worker-thread cap")
    return parser


def _load_config(ns) -> dict:
    cfg: dict = {}
    if ns.config:
        try:
            with open(ns.config, "r", encoding="utf-8") as handle:
                cfg.update(json.load(handle))
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read --config {ns.config}: {exc}") from exc
    for key, value in vars(ns).items():
        if key in ("config",) or value is None:
            continue
        cfg[key] = value
    if isinstance(cfg.get("params"), str):
        try:
            cfg["params"] = json.loads(cfg["params"])
        except json.JSONDecodeError as exc:
            raise ConfigError(f"--params is not valid JSON: {exc}") from exc
    if isinstance(cfg.get("checks"), str):
        cfg["checks"] = [c.strip() for c in cfg["checks"].split(",") if c.strip()]
    if cfg.get("jobs") is not None and cfg["jobs"] < 1:
        raise ConfigError("--jobs must be >= 1")
    return cfg


def main(argv=None) -> int:
    try:
        ns = _parser().parse_args(argv)
        cfg = _load_config(ns)
        report, code = run(cfg)
    except SystemExit as exc:  # argparse reports its own usage errors
        return exc.code if isinstance(exc.code, int) else 2
    except ConfigError as exc:
        print(f"yanglab: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError) as exc:
        print(f"yanglab: {exc}", file=sys.stderr)
        return 2
    text = json.dumps(report, indent=2, sort_keys=True)
    if cfg.get("json_out"):
        with open(cfg["json_out"], "w", encoding="utf-8") as handle:
            handle.write(text + "\n")
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
