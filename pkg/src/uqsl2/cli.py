"""Command-line interface: verification suites and JSON exports."""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .algebra import (
    AlgebraElement,
    all_monomials,
    casimir,
    casimir_eigenvalue,
    casimir_min_poly,
    eval_central_poly,
    is_central,
)
from .cyclotomic import CycNum, q_int
from .hopf import check_hopf_axioms
from .integrals import (
    check_dual_integrals,
    check_radford_symmetry,
    check_s2_inner,
    check_two_sided_integral,
    dual_integral_space_dimensions,
)
from .projectives import (
    check_casimir_blocks,
    check_idempotent_system,
    check_module_actions,
)
from .report import VerificationReport, merge_reports
from .slf import (
    check_decomposition,
    check_slf_suite,
    check_trig_identities,
    decompose_twisted_integral,
    expected_product,
    q_basis,
    slf_functionals,
)
from .projectives import all_idempotents

SUITE_ORDER = [
    "arith",
    "algebra",
    "hopf",
    "integrals",
    "casimir",
    "idempotents",
    "tables",
    "slf",
    "decomposition",
    "trig",
]

PUBLIC_SUITES = [
    "hopf",
    "integrals",
    "casimir",
    "idempotents",
    "tables",
    "slf",
    "decomposition",
    "trig",
    "all",
]


def run_arith(p: int) -> list[VerificationReport]:
    report = VerificationReport("arith", p)
    q = CycNum.q_power(p, 1)

    def roots():
        if q ** (2 * p) != CycNum.one(p):
            return False, "q^(2p) != 1"
        if q**p == CycNum.one(p):
            return False, "q^p == 1 (q is not primitive)"
        return True

    def q_integers():
        if q_int(p, 1) != CycNum.one(p):
            return False, "[1] != 1"
        if q_int(p, p):
            return False, "[p] != 0"
        for n in range(p):
            if q_int(p, p - n) != q_int(p, n):
                return False, f"[p-{n}] != [{n}]"
        return True

    def inverses():
        for k in range(1, 2 * p):
            x = q ** k + CycNum.one(p).scale(k)
            if x and x * x.inverse() != CycNum.one(p):
                return False, f"inverse failed at sample {k}"
        return True

    report.timed("primitive_root_of_unity", roots)
    report.timed("q_integer_identities", q_integers)
    report.timed("field_inverses", inverses)
    return [report]


def run_algebra(p: int) -> list[VerificationReport]:
    report = VerificationReport("algebra", p)
    E, F = AlgebraElement.gen_e(p), AlgebraElement.gen_f(p)
    K, Kinv = AlgebraElement.gen_k(p), AlgebraElement.gen_k_inv(p)

    def relations():
        q2 = CycNum.q_power(p, 2)
        if K * E != (E * K).scale(q2):
            return False, "KE != q^2 EK"
        if K * F != (F * K).scale(CycNum.q_power(p, -2)):
            return False, "KF != q^-2 FK"
        lhs = E * F - F * E
        denom = (CycNum.q_power(p, 1) - CycNum.q_power(p, -1)).inverse()
        if lhs != (K - Kinv).scale(denom):
            return False, "[E,F] relation fails"
        if K * Kinv != AlgebraElement.one(p):
            return False, "K K^-1 != 1"
        if E**p or F**p:
            return False, "E^p or F^p nonzero"
        if K ** (2 * p) != AlgebraElement.one(p):
            return False, "K^2p != 1"
        return True

    def closure():
        count = 0
        for mono in all_monomials(p):
            count += 1
            x = AlgebraElement.monomial(p, mono)
            for g in (E, F, K):
                for mono2 in (g * x).support():
                    m, n, l = mono2
                    if not (0 <= m < p and 0 <= n < p and 0 <= l < 2 * p):
                        return False, f"product escapes the basis at {mono}"
        return count == 2 * p**3, f"basis has {count} monomials, want {2 * p**3}"

    report.timed("defining_relations", relations)
    report.timed("basis_closure_2p3", closure)
    return [report]


def run_hopf(p: int) -> list[VerificationReport]:
    if p <= 3:
        return [check_hopf_axioms(p)]
    return [check_hopf_axioms(p, pair_sample=200, monomial_sample=200)]


def run_integrals(p: int) -> list[VerificationReport]:
    reports = [
        check_two_sided_integral(p),
        check_dual_integrals(p),
        check_s2_inner(p),
        check_radford_symmetry(p),
    ]
    report = VerificationReport("dual_integral_spaces", p)
    report.timed(
        "dual_integral_spaces_one_dimensional",
        lambda: (
            dual_integral_space_dimensions(p) == (1, 1),
            f"dimensions {dual_integral_space_dimensions(p)} != (1, 1)",
        ),
    )
    reports.append(report)
    return reports


def run_casimir(p: int) -> list[VerificationReport]:
    report = VerificationReport("casimir", p)
    cas = casimir(p)

    def annihilated():
        return (
            not eval_central_poly(cas, casimir_min_poly(p)),
            "Phi_p(C) != 0",
        )

    def minimal():
        roots = [casimir_eigenvalue(p, 0), casimir_eigenvalue(p, p)]
        for s in range(1, p):
            roots.extend([casimir_eigenvalue(p, s)] * 2)
        one = AlgebraElement.one(p)
        for skip in range(len(roots)):
            acc = one
            for i, beta in enumerate(roots):
                if i != skip:
                    acc = acc * (cas - one.scale(beta))
            if not acc:
                return False, f"factor-deleted polynomial {skip} annihilates C"
        return True

    report.timed("casimir_is_central", lambda: (is_central(cas), "C not central"))
    report.timed("minimal_polynomial_annihilates", annihilated)
    report.timed("minimal_polynomial_is_minimal", minimal)
    return [report]


def run_idempotents(p: int) -> list[VerificationReport]:
    reports = [check_idempotent_system(p), check_casimir_blocks(p)]
    merged = VerificationReport("module_actions", p)
    for alpha in (1, -1):
        for s in range(1, p + 1):
            for t in range(1, s + 1):
                sub = check_module_actions(p, alpha, s, t)
                tag = f"{'+' if alpha == 1 else '-'}({s},{t})"
                for check in sub.checks:
                    merged.add(f"{check.name}_{tag}", check.passed, check.detail)
    reports.append(merged)
    return reports


def run_tables(p: int) -> list[VerificationReport]:
    from .slf import verify_block_tables, verify_matrix_units

    reports = [verify_matrix_units(p, 0), verify_matrix_units(p, p)]
    for s in range(1, p):
        reports.append(verify_block_tables(p, s))
    return reports


def run_slf(p: int) -> list[VerificationReport]:
    return [check_slf_suite(p)]


def run_decomposition(p: int) -> list[VerificationReport]:
    return [check_decomposition(p)]


def run_trig(p: int) -> list[VerificationReport]:
    return [check_trig_identities(p)]


SUITE_RUNNERS = {
    "arith": run_arith,
    "algebra": run_algebra,
    "hopf": run_hopf,
    "integrals": run_integrals,
    "casimir": run_casimir,
    "idempotents": run_idempotents,
    "tables": run_tables,
    "slf": run_slf,
    "decomposition": run_decomposition,
    "trig": run_trig,
}


def _run_suite(args: tuple[str, int]) -> list[dict]:
    name, p = args
    return [r.to_json() for r in SUITE_RUNNERS[name](p)]


def _select_suites(raw: list[str]) -> list[str]:
    wanted = set()
    for chunk in raw:
        for name in chunk.split(","):
            name = name.strip()
            if not name:
                continue
            if name == "all":
                wanted.update(SUITE_ORDER)
            elif name in SUITE_RUNNERS:
                wanted.add(name)
            else:
                raise ValueError(f"unknown suite: {name}")
    return [name for name in SUITE_ORDER if name in wanted]


def _emit(text: str, out_path: str | None):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")
    else:
        print(text)


def cmd_verify(args) -> int:
    try:
        suites = _select_suites(args.suite)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.p > 8:
        print(
            f"warning: p={args.p} is large; pairwise symmetry checks scale as 4p^6",
            file=sys.stderr,
        )
    jobs = args.jobs or int(os.environ.get("UQSL2_JOBS", "1"))
    tasks = [(name, args.p) for name in suites]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_run_suite, tasks))
    else:
        chunks = [_run_suite(task) for task in tasks]
    reports = []
    for chunk in chunks:
        for payload in chunk:
            reports.append(VerificationReport.from_json(payload))
    merged = merge_reports(reports)
    if args.format == "json":
        _emit(json.dumps(merged.to_json(), indent=2, sort_keys=True), args.out)
    else:
        _emit(merged.render_text(), args.out)
    return 0 if merged.passed else 1


def _rational_string(value: CycNum) -> str:
    coeffs = value.to_strings()
    if all(c == "0" for c in coeffs[1:]):
        return coeffs[0]
    return "poly:" + ",".join(coeffs)


def cmd_tables(args) -> int:
    if not 0 <= args.s <= args.p:
        print(f"error: block label s must be in 0..{args.p}", file=sys.stderr)
        return 2
    basis = q_basis(args.p, args.s)
    labels = {e.key(): e.label() for e in basis}
    cells = []
    for x in basis:
        for y in basis:
            key = expected_product(x, y)
            cells.append(
                {
                    "row-label": x.label(),
                    "col-label": y.label(),
                    "result-label": labels[key] if key is not None else "0",
                }
            )
    payload = {"p": args.p, "s": args.s, "cells": cells}
    _emit(json.dumps(payload, indent=2, sort_keys=True), args.out)
    return 0


def cmd_export(args) -> int:
    p = args.p
    if args.what == "idempotents":
        payload = {
            "p": p,
            "idempotents": [
                {"label": label.pretty(), "element": elem.to_json()}
                for label, elem in all_idempotents(p)
            ],
        }
    elif args.what == "slf-basis":
        payload = {
            "p": p,
            "functionals": [
                {"name": name, "functional": func.to_json()}
                for name, func in slf_functionals(p).named()
            ],
        }
    else:  # coefficients
        coeffs = decompose_twisted_integral(p)
        alphas = []
        betas = []
        alphas_c = []
        betas_c = []
        for s in range(1, p):
            for value in (coeffs.alpha_plus[s - 1], coeffs.alpha_minus[s - 1]):
                alphas.append(_rational_string(value))
                z = value.to_complex()
                alphas_c.append([z.real, z.imag])
            betas.append(_rational_string(coeffs.beta[s - 1]))
            z = coeffs.beta[s - 1].to_complex()
            betas_c.append([z.real, z.imag])
        z0 = coeffs.alpha0.to_complex()
        zp = coeffs.alphap.to_complex()
        payload = {
            "p": p,
            "alpha0": _rational_string(coeffs.alpha0),
            "alphap": _rational_string(coeffs.alphap),
            "alphas": alphas,
            "betas": betas,
            "complex": {
                "alpha0": [z0.real, z0.imag],
                "alphap": [zp.real, zp.imag],
                "alphas": alphas_c,
                "betas": betas_c,
            },
        }
    _emit(json.dumps(payload, indent=2, sort_keys=True), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="uqsl2",
        description="Exact verification suites for the restricted quantum "
        "group U_q(sl2) at a 2p-th root of unity.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run verification suites")
    verify.add_argument("--p", type=int, required=True, help="root-of-unity order (>= 2)")
    verify.add_argument(
        "--suite",
        action="append",
        default=None,
        help=f"comma-separated suites from {{{','.join(PUBLIC_SUITES)}}} "
        "(repeatable; default all)",
    )
    verify.add_argument("--format", choices=["text", "json"], default="text")
    verify.add_argument("--out", default=None, help="write output to this path")
    verify.add_argument(
        "--jobs",
        type=int,
        default=0,
        help="worker processes (default: UQSL2_JOBS env var or 1)",
    )
    verify.set_defaults(func=cmd_verify)

    tables = sub.add_parser("tables", help="export a block multiplication table")
    tables.add_argument("--p", type=int, required=True)
    tables.add_argument("--s", type=int, required=True, help="block label (0..p)")
    tables.add_argument("--out", default=None)
    tables.set_defaults(func=cmd_tables)

    export = sub.add_parser("export", help="export elements or coefficients as JSON")
    export.add_argument("--p", type=int, required=True)
    export.add_argument(
        "--what",
        choices=["idempotents", "slf-basis", "coefficients"],
        required=True,
    )
    export.add_argument("--out", default=None)
    export.set_defaults(func=cmd_export)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "p", 2) < 2:
        print("error: p must be at least 2", file=sys.stderr)
        return 2
    if args.command == "verify" and not args.suite:
        args.suite = ["all"]
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
