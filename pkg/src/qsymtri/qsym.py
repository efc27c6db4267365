"""Quasi-symmetric generators, the graded coinvariant ideal, and basis certificates.

The ideal ``I`` of ``Z[x_1, ..., x_{n+1}]`` is generated by the monomial
quasi-symmetric polynomials ``M_alpha`` with ``|alpha| >= 1``.  Its degree-d
piece is spanned by the products ``x^beta * M_alpha`` with
``|beta| + |alpha| = d``; everything here is exact linear algebra on those
spanning sets, with columns indexed by the degree-d monomials in
lex-descending order.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Callable, Iterable, Sequence

from .combinatorics import catalan, enumerate_dyck_paths, enumerate_triangulations
from .linalg import Echelon, SparseRow
from .polynomial import (
    Monomial,
    Polynomial,
    basis_polynomial,
    dyck_monomial,
    leading_monomial,
    reverse_variables,
)

__all__ = [
    "DegreeRecord",
    "GradedBasisReport",
    "enumerate_compositions",
    "monomial_qsym",
    "is_quasisymmetric",
    "monomials_of_degree",
    "ideal_spanning_set",
    "ideal_echelon",
    "ideal_graded_basis",
    "quotient_dimensions",
    "family_report",
    "verify_basis",
    "monomial_basis_reports",
    "verify_monomial_basis",
]


@dataclass(frozen=True)
class DegreeRecord:
    d: int
    dim_R: int
    dim_I: int
    dim_Q: int
    count_BT: int | None = None
    independent: bool | None = None

    @property
    def ok(self) -> bool:
        if self.count_BT is None:
            return True
        return bool(self.independent) and self.count_BT == self.dim_Q

    def to_json(self) -> dict:
        out = {"d": self.d, "dim_R_d": self.dim_R, "dim_I_d": self.dim_I, "dim_Q_d": self.dim_Q}
        if self.count_BT is not None:
            out["count_BT_d"] = self.count_BT
            out["independent"] = self.independent
        return out


@dataclass(frozen=True)
class GradedBasisReport:
    n: int
    per_degree: tuple[DegreeRecord, ...]
    family: str = "B_T"
    total_quotient_dim: int = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "total_quotient_dim", sum(r.dim_Q for r in self.per_degree))

    @property
    def expected_total(self) -> int:
        return catalan(self.n + 1)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.per_degree) and self.total_quotient_dim == self.expected_total

    def failures(self) -> list[DegreeRecord]:
        return [r for r in self.per_degree if not r.ok]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "family": self.family,
            "per_degree": [r.to_json() for r in self.per_degree],
            "total_quotient_dim": self.total_quotient_dim,
            "catalan": self.expected_total,
            "ok": self.ok,
        }

    def table(self) -> str:
        with_family = any(r.count_BT is not None for r in self.per_degree)
        head = f"{'d':>3} {'dim R':>7} {'dim I':>7} {'dim Q':>7}"
        if with_family:
            head += f" {'#' + self.family:>7}  status"
        lines = [head]
        for r in self.per_degree:
            line = f"{r.d:>3} {r.dim_R:>7} {r.dim_I:>7} {r.dim_Q:>7}"
            if with_family:
                line += f" {r.count_BT:>7}  {'OK' if r.ok else 'FAIL'}"
            lines.append(line)
        lines.append(f"total dim Q = {self.total_quotient_dim} (Catalan c_{self.n + 1} = {self.expected_total})")
        return "\n".join(lines)


def enumerate_compositions(d: int, max_parts: int) -> list[tuple[int, ...]]:
    """Compositions of ``d`` with at most ``max_parts`` parts.

    Ordered by number of parts, then lex-descending: ``(3), (2, 1), (1, 2), (1, 1, 1)``.
    """
    if d < 1 or max_parts < 1:
        raise ValueError("d and max_parts must be positive")
    out = []
    for k in range(1, min(d, max_parts) + 1):
        # choose k-1 cut points in 1..d-1
        comps = []
        for cuts in combinations(range(1, d), k - 1):
            bounds = (0,) + cuts + (d,)
            comps.append(tuple(b - a for a, b in zip(bounds, bounds[1:])))
        out.extend(sorted(comps, reverse=True))
    return out


def monomial_qsym(alpha: Sequence[int], nvars: int) -> Polynomial:
    """``M_alpha = sum over i_1 < ... < i_l of x_{i_1}^{alpha_1} ... x_{i_l}^{alpha_l}``."""
    alpha = tuple(alpha)
    if not alpha or any(a < 1 for a in alpha):
        raise ValueError(f"not a composition: {alpha}")
    if len(alpha) > nvars:
        raise ValueError(f"composition {alpha} has more parts than the {nvars} variables")
    terms = {}
    for idx in combinations(range(nvars), len(alpha)):
        exps = [0] * nvars
        for i, a in zip(idx, alpha):
            exps[i] = a
        terms[tuple(exps)] = 1
    return Polynomial(nvars, terms)


def is_quasisymmetric(p: Polynomial) -> bool:
    """All monomials sharing the same sequence of nonzero exponents have equal coefficients."""
    nvars = p.nvars
    seen: dict[tuple[int, ...], int] = {}
    for mono, coeff in p.items():
        pattern = tuple(e for e in mono if e)
        if pattern in seen:
            if seen[pattern] != coeff:
                return False
            continue
        seen[pattern] = coeff
    for pattern, coeff in seen.items():
        if not pattern:
            continue
        for idx in combinations(range(nvars), len(pattern)):
            exps = [0] * nvars
            for i, a in zip(idx, pattern):
                exps[i] = a
            if p.coefficient(tuple(exps)) != coeff:
                return False
    return True


@lru_cache(maxsize=None)
def monomials_of_degree(nvars: int, d: int) -> tuple[Monomial, ...]:
    """All exponent vectors of total degree ``d`` in ``nvars`` variables, lex-descending."""
    if nvars == 0:
        return ((),) if d == 0 else ()

    def gen(k: int, rest: int):
        if k == nvars - 1:
            yield (rest,)
            return
        for e in range(rest, -1, -1):
            for tail in gen(k + 1, rest - e):
                yield (e,) + tail

    return tuple(gen(0, d))


@lru_cache(maxsize=None)
def _column_index(nvars: int, d: int) -> dict[Monomial, int]:
    return {m: i for i, m in enumerate(monomials_of_degree(nvars, d))}


def as_row(p: Polynomial, d: int) -> SparseRow:
    """Coefficient vector of a homogeneous degree-``d`` polynomial, as a sparse row."""
    index = _column_index(p.nvars, d)
    row = {}
    for mono, coeff in p.items():
        if sum(mono) != d:
            raise ValueError(f"polynomial is not homogeneous of degree {d}")
        row[index[mono]] = coeff
    return row


def ideal_spanning_set(n: int, d: int) -> Iterable[SparseRow]:
    """Rows of ``x^beta * M_alpha`` over all ``|alpha| >= 1``, ``|alpha| + |beta| = d``.

    Generators with larger ``|alpha|`` come first; they are few and tend to
    fill the echelon form with short reductions.
    """
    nvars = n + 1
    index = _column_index(nvars, d)
    for a in range(d, 0, -1):
        for alpha in enumerate_compositions(a, nvars):
            m_alpha = monomial_qsym(alpha, nvars)
            for beta in monomials_of_degree(nvars, d - a):
                row = {}
                for mono, coeff in m_alpha.items():
                    row[index[tuple(x + y for x, y in zip(mono, beta))]] = coeff
                yield row


@lru_cache(maxsize=None)
def _ideal_echelon_cached(n: int, d: int) -> Echelon:
    ech = Echelon(len(monomials_of_degree(n + 1, d)))
    if d > 0:
        ech.extend(ideal_spanning_set(n, d))
    return ech


def ideal_echelon(n: int, d: int) -> Echelon:
    """Exact echelon form of the degree-``d`` piece of the ideal (a fresh copy)."""
    if n < 0 or d < 0:
        raise ValueError("n and d must be non-negative")
    return _ideal_echelon_cached(n, d).copy()


def ideal_graded_basis(n: int, d: int) -> list[tuple[int, ...]]:
    """Echelon basis of ``I_d`` as dense integer vectors over the lex-descending degree-d monomials."""
    ech = ideal_echelon(n, d)
    width = ech.ncols
    return [tuple(row.get(c, 0) for c in range(width)) for row in ech.rows()]


def _dimensions(n: int, d: int) -> DegreeRecord:
    dim_r = comb(d + n, n)
    dim_i = ideal_echelon(n, d).rank
    return DegreeRecord(d, dim_r, dim_i, dim_r - dim_i)


def _map(fn: Callable, args: list, workers: int) -> list:
    if workers <= 1 or len(args) <= 1:
        return [fn(*a) for a in args]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(fn, *a) for a in args]
        return [f.result() for f in futures]


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("QSYMTRI_WORKERS", "1")))
    except ValueError:
        return 1


def quotient_dimensions(n: int, d_max: int, workers: int | None = None) -> GradedBasisReport:
    """Graded dimensions ``dim R_d - dim I_d`` for ``d = 0..d_max``."""
    workers = default_workers() if workers is None else workers
    records = _map(_dimensions, [(n, d) for d in range(d_max + 1)], workers)
    return GradedBasisReport(n, tuple(records), family="")


def _family_degree(n: int, d: int, rows: list[SparseRow]) -> DegreeRecord:
    base = _dimensions(n, d)
    ech = ideal_echelon(n, d)
    independent = all(ech.insert(row) for row in rows)
    return DegreeRecord(d, base.dim_R, base.dim_I, base.dim_Q, len(rows), independent)


def family_report(
    n: int,
    family: Iterable[Polynomial],
    max_degree: int | None = None,
    name: str = "B_T",
    workers: int | None = None,
) -> GradedBasisReport:
    """Check a family of homogeneous polynomials degree by degree against the quotient.

    For each ``d`` the family members of degree ``d`` are stacked on an
    echelon basis of ``I_d``; they are independent modulo the ideal iff
    every one of them raises the exact rank.
    """
    workers = default_workers() if workers is None else workers
    max_degree = n + 1 if max_degree is None else max_degree
    by_degree: dict[int, list[SparseRow]] = {d: [] for d in range(max_degree + 1)}
    for p in family:
        d = p.degree()
        if d <= max_degree:
            by_degree[d].append(as_row(p, d))
    records = _map(_family_degree, [(n, d, by_degree[d]) for d in range(max_degree + 1)], workers)
    return GradedBasisReport(n, tuple(records), family=name)


def verify_basis(n: int, max_degree: int | None = None, workers: int | None = None) -> GradedBasisReport:
    """Certify that the classes of the ``B_T`` form a basis of the quotient.

    Degrees ``0..n`` carry the ``B_T``; degree ``n + 1`` (the default upper
    end) is a probe where the quotient must vanish.
    """
    family = [basis_polynomial(t) for t in enumerate_triangulations(n)]
    return family_report(n, family, max_degree, "B_T", workers)


def monomial_basis_reports(n: int, max_degree: int | None = None, workers: int | None = None):
    """Reports for the Dyck monomials ``M_D`` and for the leading monomials of ``B_T`` in reversed order.

    The reversed-order leading monomial of ``B_T`` is read off ``B_T``
    itself (lex order with ``x_{n+1}`` most significant), not from a formula.
    """
    nvars = n + 1
    dyck = [Polynomial.monomial(dyck_monomial(d)) for d in enumerate_dyck_paths(n)]
    reversed_lead = []
    for t in enumerate_triangulations(n):
        lead = leading_monomial(reverse_variables(basis_polynomial(t)))
        reversed_lead.append(Polynomial(nvars, {lead[::-1]: 1}))
    return (
        family_report(n, dyck, max_degree, "M_D", workers),
        family_report(n, reversed_lead, max_degree, "revLM", workers),
    )


def verify_monomial_basis(n: int, max_degree: int | None = None, workers: int | None = None) -> bool:
    return all(r.ok for r in monomial_basis_reports(n, max_degree, workers))

