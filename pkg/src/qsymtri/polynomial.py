"""Exact sparse polynomials over the integers, and the polynomials attached to triangulations.

Monomials are plain exponent tuples ``(e_1, ..., e_m)`` for ``x_1 ... x_m``.
Python tuple comparison is exactly the lexicographic order with ``x_1``
most significant, which is the monomial order used throughout.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .bijection import diagonals_at_star, ext_set, triangulation_to_dyck
from .combinatorics import (
    Diagonal,
    DyckPath,
    Negative,
    Triangulation,
    enumerate_triangulations,
    reflect_triangulation,
)

__all__ = [
    "Monomial",
    "Polynomial",
    "lex_compare",
    "leading_monomial",
    "reverse_variables",
    "diagonal_polynomial",
    "basis_polynomial",
    "dyck_monomial",
    "verify_leading_monomials",
    "piece_factorization",
    "format_monomial",
    "reversed_leading_monomial",
    "verify_involution",
    "verify_piece_factorization",
]

Monomial = tuple[int, ...]


def lex_compare(a: Monomial, b: Monomial) -> int:
    """-1, 0 or 1 as ``a`` is smaller, equal or greater than ``b`` in lex order."""
    if len(a) != len(b):
        raise ValueError("monomials live in different numbers of variables")
    return (a > b) - (a < b)


def format_monomial(m: Monomial) -> str:
    factors = [f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in enumerate(m, start=1) if e]
    return "·".join(factors) if factors else "1"


class Polynomial:
    """Immutable polynomial in ``nvars`` variables with integer coefficients.

    Terms are kept in lex-descending order, so the leading term is always
    the first one and structural equality is term-by-term.
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, int] = {}
        for mono, coeff in items:
            mono = tuple(mono)
            if len(mono) != nvars:
                raise ValueError(f"monomial {mono} does not have {nvars} exponents")
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in {mono}")
            acc[mono] = acc.get(mono, 0) + int(coeff)
        self.nvars = nvars
        self._terms = {m: acc[m] for m in sorted(acc, reverse=True) if acc[m]}
        self._hash = None

    @classmethod
    def constant(cls, nvars: int, c: int = 1) -> Polynomial:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> Polynomial:
        """The variable ``x_i`` (1-based)."""
        if not 1 <= i <= nvars:
            raise ValueError(f"x_{i} is not one of x_1..x_{nvars}")
        return cls(nvars, {tuple(int(k == i - 1) for k in range(nvars)): 1})

    @classmethod
    def monomial(cls, mono: Monomial, coeff: int = 1) -> Polynomial:
        return cls(len(mono), {tuple(mono): coeff})

    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, mono: Monomial) -> int:
        return self._terms.get(tuple(mono), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def degrees(self) -> set[int]:
        return {sum(m) for m in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int:
        """Total degree of a homogeneous polynomial."""
        degs = self.degrees()
        if len(degs) != 1:
            raise ValueError("degree is defined here only for nonzero homogeneous polynomials")
        return degs.pop()

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise ValueError("polynomials in different numbers of variables")
            return other
        if isinstance(other, int):
            return Polynomial.constant(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial(self.nvars, list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(self.nvars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial(self.nvars, {m: c * other for m, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                acc[m] = acc.get(m, 0) + c1 * c2
        return Polynomial(self.nvars, acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        if k < 0:
            raise ValueError("negative power")
        out = Polynomial.constant(self.nvars)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Polynomial.constant(self.nvars, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and list(self._terms.items()) == list(other._terms.items())

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, tuple(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial({self.nvars}, {self._terms!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for idx, (m, c) in enumerate(self._terms.items()):
            body = format_monomial(m)
            mag = abs(c)
            if body == "1":
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}·{body}"
            if idx == 0:
                parts.append(text if c > 0 else "-" + text)
            else:
                parts.append(("+ " if c > 0 else "- ") + text)
        return " ".join(parts)

    def to_json(self) -> list:
        """``[[coefficient, [e_1, ..., e_m]], ...]`` in lex-descending monomial order."""
        return [[c, list(m)] for m, c in self._terms.items()]

    @classmethod
    def from_json(cls, data: list, nvars: int | None = None) -> Polynomial:
        if nvars is None:
            if not data:
                raise ValueError("nvars is required to decode the zero polynomial")
            nvars = len(data[0][1])
        return cls(nvars, [(tuple(m), c) for c, m in data])


def leading_monomial(p: Polynomial) -> Monomial:
    """Lex-greatest monomial with a nonzero coefficient."""
    if p.is_zero():
        raise ValueError("the zero polynomial has no leading monomial")
    return next(iter(p._terms))


def reverse_variables(p: Polynomial) -> Polynomial:
    """Substitute ``x_i -> x_{m+1-i}`` where ``m = p.nvars``."""
    return Polynomial(p.nvars, {m[::-1]: c for m, c in p.items()})


def diagonal_polynomial(d: Diagonal, n: int) -> Polynomial:
    """1 for a negative diagonal, ``x_i - x_{j+1}`` for ``Positive(i, j)``; in ``n + 1`` variables."""
    nvars = n + 1
    if isinstance(d, Negative):
        return Polynomial.constant(nvars)
    return Polynomial.variable(nvars, d.i) - Polynomial.variable(nvars, d.j + 1)


def basis_polynomial(t: Triangulation) -> Polynomial:
    out = Polynomial.constant(t.n + 1)
    for d in t.positives:
        out = out * diagonal_polynomial(d, t.n)
    return out


def dyck_monomial(d: DyckPath) -> Monomial:
    """Exponent vector (length n+1) of the monomial of a Dyck path.

    Every up step preceded by ``k >= 1`` down steps contributes ``x_k``.
    """
    exps = [0] * (d.n + 1)
    downs = 0
    for s in d.steps:
        if s == "D":
            downs += 1
        elif downs:
            exps[downs - 1] += 1
    return tuple(exps)


def verify_leading_monomials(n: int) -> bool:
    """Check ``LM(B_T) == M_{D(T)}`` for every triangulation of size ``n``."""
    return all(
        leading_monomial(basis_polynomial(t)) == dyck_monomial(triangulation_to_dyck(t))
        for t in enumerate_triangulations(n)
    )


def piece_factorization(t: Triangulation) -> list[Polynomial]:
    """Group the factors of ``B_T`` by the pieces of the cut at the star vertex.

    Returns ``[left, piece_c1, piece_c2, ...]``: the left factor collects
    ``x_i - x_{j+1}`` over ``Positive(i, j)`` with ``j < c_1``; the factor of
    the piece right of cut ``c`` is the cut's own ``x_{c+1} - x_{n+1}`` times
    ``x_{c+1} - x_{i+1}`` for the diagonals ``Positive(c+1, i)`` with
    ``i < c'`` times ``x_i - x_{j+1}`` for ``c+1 < i <= j < c'`` (``c'`` is the
    next cut, or ``n`` after the last one).
    """
    n = t.n
    if not diagonals_at_star(t):
        raise ValueError("no diagonal through the star vertex")
    cuts = ext_set(t)
    nvars = n + 1
    x = [None] + [Polynomial.variable(nvars, i) for i in range(1, nvars + 1)]
    one = Polynomial.constant(nvars)
    positives = t.positives

    left = one
    for d in positives:
        if d.j < cuts[0]:
            left = left * (x[d.i] - x[d.j + 1])
    factors = [left]
    for idx, c in enumerate(cuts):
        nxt = cuts[idx + 1] if idx + 1 < len(cuts) else n
        f = x[c + 1] - x[n + 1]
        for d in positives:
            if d.i == c + 1 and d.j < nxt:
                f = f * (x[c + 1] - x[d.j + 1])
        for d in positives:
            if c + 1 < d.i and d.j < nxt:
                f = f * (x[d.i] - x[d.j + 1])
        factors.append(f)
    return factors


def reversed_leading_monomial(p: Polynomial) -> Monomial:
    """Leading monomial for the opposite variable order ``x_m >> ... >> x_1``."""
    return leading_monomial(reverse_variables(p))[::-1]


def verify_involution(n: int) -> bool:
    """``reverse(B_T) == (-1)^{p(T)} B_{T'}`` with ``T'`` the mirror of ``T``, for every ``T``.

    Also checks that mirroring and variable reversal are involutions.
    """
    for t in enumerate_triangulations(n):
        mirror = reflect_triangulation(t)
        if reflect_triangulation(mirror) != t:
            return False
        b = basis_polynomial(t)
        if reverse_variables(reverse_variables(b)) != b:
            return False
        sign = -1 if len(t.positives) % 2 else 1
        if reverse_variables(b) != basis_polynomial(mirror) * sign:
            return False
    return True


def verify_piece_factorization(n: int) -> bool:
    """The per-piece factors multiply back to ``B_T`` for every ``T`` with a diagonal through the star."""
    for t in enumerate_triangulations(n):
        if not diagonals_at_star(t):
            continue
        prod = Polynomial.constant(n + 1)
        for f in piece_factorization(t):
            prod = prod * f
        if prod != basis_polynomial(t):
            return False
    return True
