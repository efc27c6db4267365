"""Polygon diagonals, triangulations and Dyck paths.

Labelling of the (n+3)-gon.  Going around the boundary in counterclockwise
order the vertices are ``H, B, v_n, ..., v_1, v_0``.  ``H`` (``#``) is the apex
of the base fan, ``B`` (``*``) is its counterclockwise neighbour.  We often
write ``v_{n+1}`` for ``B``.

* ``Negative(k)`` joins ``H`` to ``v_k`` for ``1 <= k <= n``.
* ``Positive(i, j)`` joins ``v_{i-1}`` to ``v_{j+1}`` for ``1 <= i <= j <= n``;
  it crosses exactly the negative diagonals ``i, ..., j``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Union

__all__ = [
    "Negative",
    "Positive",
    "Diagonal",
    "Triangulation",
    "DyckPath",
    "InvalidTriangulation",
    "InvalidDyckPath",
    "catalan",
    "crossing",
    "all_diagonals",
    "fan",
    "enumerate_triangulations",
    "enumerate_dyck_paths",
    "reflect_triangulation",
    "initial_ascent",
    "decompose_irreducible",
]


class InvalidTriangulation(ValueError):
    pass


class InvalidDyckPath(ValueError):
    pass


@dataclass(frozen=True)
class Negative:
    k: int

    @property
    def key(self) -> tuple[int, int]:
        return (0, self.k)

    def endpoints(self, n: int) -> tuple[int, int]:
        # boundary positions: v_m -> m, B -> n+1, H -> n+2
        return (self.k, n + 2)

    def __repr__(self) -> str:
        return f"Negative({self.k})"


@dataclass(frozen=True)
class Positive:
    i: int
    j: int

    @property
    def key(self) -> tuple[int, int]:
        return (self.i, self.j)

    def endpoints(self, n: int) -> tuple[int, int]:
        return (self.i - 1, self.j + 1)

    def __repr__(self) -> str:
        return f"Positive({self.i}, {self.j})"


Diagonal = Union[Negative, Positive]


def diagonal_from_endpoints(a: int, b: int, n: int) -> Diagonal:
    """Inverse of ``endpoints``: the diagonal joining boundary positions ``a < b``."""
    if b == n + 2:
        return Negative(a)
    return Positive(a + 1, b - 1)


def _check_diagonal(d: Diagonal, n: int) -> None:
    if isinstance(d, Negative):
        if not 1 <= d.k <= n:
            raise InvalidTriangulation(f"{d!r} out of range for n={n}")
    elif isinstance(d, Positive):
        if not 1 <= d.i <= d.j <= n:
            raise InvalidTriangulation(f"{d!r} out of range for n={n}")
    else:
        raise InvalidTriangulation(f"not a diagonal: {d!r}")


def crossing(d1: Diagonal, d2: Diagonal) -> bool:
    """True iff the two diagonals meet in the interior of the polygon.

    Diagonals sharing an endpoint do not cross.
    """
    if isinstance(d1, Negative) and isinstance(d2, Negative):
        return False
    if isinstance(d1, Negative):
        return d2.i <= d1.k <= d2.j
    if isinstance(d2, Negative):
        return d1.i <= d2.k <= d1.j
    a, b = d1.i - 1, d1.j + 1
    c, d = d2.i - 1, d2.j + 1
    return a < c < b < d or c < a < d < b


def all_diagonals(n: int) -> list[Diagonal]:
    """Every diagonal of the (n+3)-gon, in canonical order."""
    diags: list[Diagonal] = [Negative(k) for k in range(1, n + 1)]
    diags += [Positive(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
    return sorted(diags, key=lambda d: d.key)


@dataclass(frozen=True)
class Triangulation:
    """A maximal set of pairwise non-crossing diagonals of the (n+3)-gon.

    ``diagonals`` is stored sorted by the canonical encoding
    (``Negative(k)`` as ``(0, k)``, ``Positive(i, j)`` as ``(i, j)``).
    Construction validates the diagonal set and raises
    :class:`InvalidTriangulation` naming the violated condition.
    """

    n: int
    diagonals: tuple[Diagonal, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 0:
            raise InvalidTriangulation(f"n must be a non-negative integer, got {self.n!r}")
        diags = tuple(sorted(set(self.diagonals), key=lambda d: d.key))
        for d in diags:
            _check_diagonal(d, self.n)
        if len(diags) != len(self.diagonals):
            raise InvalidTriangulation("duplicate diagonals")
        if len(diags) != self.n:
            raise InvalidTriangulation(
                f"a triangulation of the {self.n + 3}-gon has {self.n} diagonals, got {len(diags)}"
            )
        for d1, d2 in combinations(diags, 2):
            if crossing(d1, d2):
                raise InvalidTriangulation(f"crossing diagonals {d1!r} and {d2!r}")
        object.__setattr__(self, "diagonals", diags)

    @classmethod
    def of(cls, n: int, diagonals: Iterable[Diagonal]) -> Triangulation:
        return cls(n, tuple(diagonals))

    @property
    def negatives(self) -> tuple[Negative, ...]:
        return tuple(d for d in self.diagonals if isinstance(d, Negative))

    @property
    def positives(self) -> tuple[Positive, ...]:
        return tuple(d for d in self.diagonals if isinstance(d, Positive))

    @property
    def key(self) -> tuple[tuple[int, int], ...]:
        return tuple(d.key for d in self.diagonals)

    def __contains__(self, d: object) -> bool:
        return d in self.diagonals

    def encode(self) -> list[list]:
        """Canonical JSON-ready diagonal list: ``["N", k]`` or ``["P", i, j]``."""
        return [["N", d.k] if isinstance(d, Negative) else ["P", d.i, d.j] for d in self.diagonals]

    def to_json(self) -> dict:
        return {"n": self.n, "diagonals": self.encode()}

    @classmethod
    def from_json(cls, data: dict | list | str, n: int | None = None) -> Triangulation:
        """Parse the JSON encoding.

        Accepts the full object ``{"n": ..., "diagonals": [...]}`` or a bare
        diagonal list together with ``n``.  Strings are decoded first.
        """
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as exc:
                raise InvalidTriangulation(f"malformed JSON: {exc}") from None
        if isinstance(data, dict):
            if n is not None and data.get("n") != n:
                raise InvalidTriangulation(f"n mismatch: literal has {data.get('n')}, expected {n}")
            n = data.get("n")
            data = data.get("diagonals")
        if n is None:
            raise InvalidTriangulation("n is required for a bare diagonal list")
        if not isinstance(data, list):
            raise InvalidTriangulation("diagonals must be a list")
        diags: list[Diagonal] = []
        for item in data:
            if isinstance(item, list) and len(item) == 2 and item[0] == "N" and isinstance(item[1], int):
                diags.append(Negative(item[1]))
            elif (
                isinstance(item, list)
                and len(item) == 3
                and item[0] == "P"
                and all(isinstance(x, int) for x in item[1:])
            ):
                diags.append(Positive(item[1], item[2]))
            else:
                raise InvalidTriangulation(f"bad diagonal encoding {item!r}")
        return cls(n, tuple(diags))

    def __str__(self) -> str:
        if not self.diagonals:
            return "{}"
        return "{" + ", ".join(repr(d) for d in self.diagonals) + "}"


@dataclass(frozen=True)
class DyckPath:
    """Balanced word over ``U``/``D`` whose prefixes never have more ``D`` than ``U``."""

    steps: str

    def __post_init__(self) -> None:
        if not isinstance(self.steps, str):
            raise InvalidDyckPath("steps must be a string over 'U'/'D'")
        bad = set(self.steps) - {"U", "D"}
        if bad:
            raise InvalidDyckPath(f"invalid step letters {sorted(bad)}")
        if not self.steps:
            raise InvalidDyckPath("a Dyck path has length at least 2")
        height = 0
        for pos, s in enumerate(self.steps):
            height += 1 if s == "U" else -1
            if height < 0:
                raise InvalidDyckPath(f"path goes below the diagonal at step {pos + 1}")
        if height != 0:
            raise InvalidDyckPath(f"unbalanced path: {self.steps.count('U')} ups, {self.steps.count('D')} downs")

    @property
    def n(self) -> int:
        return len(self.steps) // 2 - 1

    def __len__(self) -> int:
        return len(self.steps)

    def __add__(self, other: DyckPath) -> DyckPath:
        return DyckPath(self.steps + other.steps)

    def __str__(self) -> str:
        return self.steps


def catalan(m: int) -> int:
    """Catalan number ``C(2m, m) / (m + 1)``, exact."""
    if m < 0:
        raise ValueError("m must be non-negative")
    return comb(2 * m, m) // (m + 1)


def fan(n: int) -> Triangulation:
    return Triangulation(n, tuple(Negative(k) for k in range(1, n + 1)))


def _polygon_triangulations(lo: int, hi: int) -> Iterator[list[tuple[int, int]]]:
    # triangulations of the convex polygon on boundary positions lo..hi,
    # as lists of chords; (lo, hi) is taken to be an edge.
    if hi - lo < 2:
        yield []
        return
    for apex in range(lo + 1, hi):
        left_chord = [(lo, apex)] if apex - lo >= 2 else []
        right_chord = [(apex, hi)] if hi - apex >= 2 else []
        for left in _polygon_triangulations(lo, apex):
            for right in _polygon_triangulations(apex, hi):
                yield left_chord + right_chord + left + right


def enumerate_triangulations(n: int) -> list[Triangulation]:
    """All triangulations of the (n+3)-gon, sorted by canonical encoding."""
    if n < 0:
        raise ValueError("n must be non-negative")
    out = []
    # positions 0..n+2 with (0, n+2) = edge v_0 H as the root edge
    for chords in _polygon_triangulations(0, n + 2):
        out.append(Triangulation(n, tuple(diagonal_from_endpoints(a, b, n) for a, b in chords)))
    out.sort(key=lambda t: t.key)
    return out


def enumerate_dyck_paths(n: int) -> list[DyckPath]:
    """All Dyck paths of length 2n+2, in lexicographic order with ``U < D``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    half = n + 1
    out: list[DyckPath] = []

    def walk(prefix: list[str], ups: int, downs: int) -> None:
        if ups == half and downs == half:
            out.append(DyckPath("".join(prefix)))
            return
        if ups < half:
            prefix.append("U")
            walk(prefix, ups + 1, downs)
            prefix.pop()
        if downs < ups:
            prefix.append("D")
            walk(prefix, ups, downs + 1)
            prefix.pop()

    walk([], 0, 0)
    return out


def reflect_triangulation(t: Triangulation) -> Triangulation:
    """Mirror image fixing ``H``: ``v_m -> v_{n+1-m}`` (so ``B <-> v_0``)."""
    n = t.n
    diags: list[Diagonal] = []
    for d in t.diagonals:
        if isinstance(d, Negative):
            diags.append(Negative(n + 1 - d.k))
        else:
            diags.append(Positive(n + 1 - d.j, n + 1 - d.i))
    return Triangulation(n, tuple(diags))


def initial_ascent(d: DyckPath) -> int:
    """Length of the maximal prefix of up steps."""
    return len(d.steps) - len(d.steps.lstrip("U"))


def decompose_irreducible(d: DyckPath) -> list[DyckPath]:
    """Split a Dyck path at each return to height 0."""
    parts: list[DyckPath] = []
    height = 0
    start = 0
    for pos, s in enumerate(d.steps):
        height += 1 if s == "U" else -1
        if height == 0:
            parts.append(DyckPath(d.steps[start : pos + 1]))
            start = pos + 1
    return parts
