"""Command-line front end.

Exit status: 0 when everything requested passed, 1 on a verification
failure, 2 on usage or input errors.  Results go to stdout, diagnostics to
stderr.  ``QSYMTRI_WORKERS`` sets the number of worker processes used for
the per-degree rank computations.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Sequence

from .bijection import check_initial_ascent_lemma, dyck_to_triangulation, triangulation_to_dyck
from .combinatorics import (
    DyckPath,
    InvalidDyckPath,
    InvalidTriangulation,
    Triangulation,
    catalan,
    enumerate_dyck_paths,
    enumerate_triangulations,
)
from .polynomial import (
    basis_polynomial,
    dyck_monomial,
    format_monomial,
    leading_monomial,
    verify_involution,
    verify_leading_monomials,
    verify_piece_factorization,
)
from .qsym import default_workers, monomial_basis_reports, quotient_dimensions, verify_basis

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

#: largest n accepted by ``verify --check basis`` unless ``--limit`` raises it
BASIS_N_LIMIT = 6

CHECKS = ("leading", "lemma", "involution", "pieces", "basis", "monomial")
ALL_CHECKS = CHECKS


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    command: str
    n: int | None = None
    format: str = "text"
    check: str = "all"
    kind: str = "triangulations"
    triangulation: str | None = None
    path: str | None = None
    max_degree: int | None = None
    limit: int = BASIS_N_LIMIT
    workers: int = 1


def _emit(out, fmt: str, text: str, payload) -> None:
    if fmt == "json":
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        out.write(text.rstrip("\n") + "\n")


def _require_n(cfg: CliConfig) -> int:
    if cfg.n is None:
        raise UsageError(f"{cfg.command}: --n is required")
    if cfg.n < 0:
        raise UsageError("--n must be non-negative")
    return cfg.n


def _parse_triangulation(cfg: CliConfig) -> Triangulation:
    try:
        return Triangulation.from_json(cfg.triangulation, n=cfg.n)
    except InvalidTriangulation as exc:
        raise UsageError(f"invalid triangulation: {exc}") from None


def _parse_path(cfg: CliConfig) -> DyckPath:
    try:
        path = DyckPath(cfg.path.strip().upper())
    except InvalidDyckPath as exc:
        raise UsageError(f"invalid Dyck path: {exc}") from None
    if cfg.n is not None and path.n != cfg.n:
        raise UsageError(f"path of length {len(path)} does not match --n {cfg.n}")
    return path


def _cmd_enumerate(cfg: CliConfig, out) -> int:
    n = _require_n(cfg)
    if cfg.kind == "paths":
        items = [p.steps for p in enumerate_dyck_paths(n)]
    else:
        items = [t.encode() for t in enumerate_triangulations(n)]
    payload = {"n": n, "kind": cfg.kind, "count": len(items), "items": items}
    lines = [json.dumps(x) if cfg.kind != "paths" else x for x in items]
    lines.append(f"# {len(items)} {cfg.kind} (Catalan c_{n + 1} = {catalan(n + 1)})")
    _emit(out, cfg.format, "\n".join(lines), payload)
    return EXIT_OK


def _cmd_bijection(cfg: CliConfig, out) -> int:
    if cfg.triangulation is not None:
        if cfg.n is None:
            raise UsageError("bijection: --n is required with a bare diagonal list")
        t = _parse_triangulation(cfg)
        d = triangulation_to_dyck(t)
        _emit(out, cfg.format, f"{t} ↦ {d}", {"triangulation": t.to_json(), "path": d.steps})
        return EXIT_OK
    if cfg.path is not None:
        d = _parse_path(cfg)
        t = dyck_to_triangulation(d)
        _emit(out, cfg.format, f"{d} ↦ {t}", {"path": d.steps, "triangulation": t.to_json()})
        return EXIT_OK
    n = _require_n(cfg)
    rows = [(t, triangulation_to_dyck(t)) for t in enumerate_triangulations(n)]
    text = "\n".join(f"{t} ↦ {d}" for t, d in rows)
    payload = {"n": n, "table": [{"triangulation": t.encode(), "path": d.steps} for t, d in rows]}
    _emit(out, cfg.format, text, payload)
    return EXIT_OK


def _cmd_poly(cfg: CliConfig, out) -> int:
    if cfg.triangulation is None:
        raise UsageError("poly: --triangulation is required")
    t = _parse_triangulation(cfg)
    b = basis_polynomial(t)
    lead = leading_monomial(b)
    text = f"B_T = {b}\nleading monomial: {format_monomial(lead)}"
    payload = {"triangulation": t.to_json(), "polynomial": b.to_json(), "leading_monomial": list(lead)}
    _emit(out, cfg.format, text, payload)
    return EXIT_OK


def _cmd_monomial(cfg: CliConfig, out) -> int:
    if cfg.path is None:
        raise UsageError("monomial: --path is required")
    d = _parse_path(cfg)
    m = dyck_monomial(d)
    _emit(out, cfg.format, f"M_D = {format_monomial(m)}", {"path": d.steps, "monomial": list(m)})
    return EXIT_OK


def _run_check(name: str, n: int, cfg: CliConfig) -> dict:
    cases = catalan(n + 1)
    if name == "leading":
        return {"ok": verify_leading_monomials(n), "cases": cases}
    if name == "lemma":
        return {"ok": check_initial_ascent_lemma(n), "cases": cases}
    if name == "involution":
        return {"ok": verify_involution(n), "cases": cases}
    if name == "pieces":
        return {"ok": verify_piece_factorization(n), "cases": cases}
    if name == "basis":
        report = verify_basis(n, cfg.max_degree, cfg.workers)
        return {"ok": report.ok, "cases": cases, "report": report}
    if name == "monomial":
        reports = monomial_basis_reports(n, cfg.max_degree, cfg.workers)
        return {"ok": all(r.ok for r in reports), "cases": cases, "reports": reports}
    raise UsageError(f"unknown check {name!r}")


def _cmd_verify(cfg: CliConfig, out) -> int:
    n = _require_n(cfg)
    names = ALL_CHECKS if cfg.check == "all" else (cfg.check,)
    if any(c in ("basis", "monomial") for c in names) and n > cfg.limit:
        raise UsageError(
            f"verify basis: n={n} exceeds the configured limit {cfg.limit} for exact linear algebra "
            f"(raise it with --limit)"
        )
    results = {name: _run_check(name, n, cfg) for name in names}
    ok = all(r["ok"] for r in results.values())

    lines = []
    payload: dict = {"n": n, "ok": ok, "checks": {}}
    for name, r in results.items():
        lines.append(f"{name}: {'PASS' if r['ok'] else 'FAIL'} ({r['cases']} cases)")
        entry = {"ok": r["ok"], "cases": r["cases"]}
        for rep in [r["report"]] if "report" in r else r.get("reports", ()):
            entry.setdefault("reports", []).append(rep.to_json())
            lines.append(rep.table())
        payload["checks"][name] = entry
    _emit(out, cfg.format, "\n".join(lines), payload)
    return EXIT_OK if ok else EXIT_FAIL


def _cmd_hilbert(cfg: CliConfig, out) -> int:
    n = _require_n(cfg)
    d_max = n + 1 if cfg.max_degree is None else cfg.max_degree
    report = quotient_dimensions(n, d_max, cfg.workers)
    dims = [r.dim_Q for r in report.per_degree]
    text = report.table()
    payload = {
        "n": n,
        "dim_Q": dims,
        "per_degree": [r.to_json() for r in report.per_degree],
        "total_quotient_dim": report.total_quotient_dim,
        "catalan": catalan(n + 1),
    }
    _emit(out, cfg.format, text, payload)
    return EXIT_OK


COMMANDS = {
    "enumerate": _cmd_enumerate,
    "bijection": _cmd_bijection,
    "poly": _cmd_poly,
    "monomial": _cmd_monomial,
    "verify": _cmd_verify,
    "hilbert": _cmd_hilbert,
}


def run(cfg: CliConfig, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        return COMMANDS[cfg.command](cfg, out)
    except UsageError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qsymtri",
        description="Triangulation basis of the quasi-symmetric coinvariants: bijection, polynomials, checks.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="polygon has n+3 vertices; paths have length 2n+2")
    common.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list triangulations or Dyck paths")
    p.add_argument("--kind", choices=("triangulations", "paths"), default="triangulations")

    p = sub.add_parser("bijection", parents=[common], help="triangulation <-> Dyck path")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--triangulation", help='JSON diagonal list, e.g. \'[["N",1],["P",2,2]]\'')
    group.add_argument("--path", help="Dyck path over U/D, e.g. UUDD")

    p = sub.add_parser("poly", parents=[common], help="expand B_T and give its leading monomial")
    p.add_argument("--triangulation", required=True)

    p = sub.add_parser("monomial", parents=[common], help="monomial M_D of a Dyck path")
    p.add_argument("--path", required=True)

    p = sub.add_parser("verify", parents=[common], help="run verification checks")
    p.add_argument("--check", choices=CHECKS + ("all",), default="all")
    p.add_argument("--max-degree", type=int, default=None, help="top degree for rank checks (default n+1)")
    p.add_argument("--limit", type=int, default=BASIS_N_LIMIT, help="largest n allowed for rank checks")

    p = sub.add_parser("hilbert", parents=[common], help="graded dimensions of the quotient")
    p.add_argument("--max-degree", type=int, default=None)
    return parser


def parse_config(argv: Sequence[str] | None = None) -> CliConfig:
    args = build_parser().parse_args(argv)
    return CliConfig(
        command=args.command,
        n=args.n,
        format=args.format,
        check=getattr(args, "check", "all"),
        kind=getattr(args, "kind", "triangulations"),
        triangulation=getattr(args, "triangulation", None),
        path=getattr(args, "path", None),
        max_degree=getattr(args, "max_degree", None),
        limit=getattr(args, "limit", BASIS_N_LIMIT),
        workers=default_workers(),
    )


def main(argv: Sequence[str] | None = None) -> int:
    return run(parse_config(argv))


if __name__ == "__main__":
    sys.exit(main())
