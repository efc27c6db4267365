"""Recursive bijection between triangulations of the (n+3)-gon and Dyck paths of length 2n+2.

Anchor vertex is ``B`` (the star).  If no diagonal ends at ``B`` the triangle
``(v_n, B, H)`` is removed and the path of the smaller polygon is wrapped in
``U ... D``.  Otherwise the polygon is cut along every diagonal ``v_c B``; the
pieces are read left to right (the piece containing ``H`` first, then by
increasing ``c``) and their paths are concatenated.

Cuts are indexed by ``c`` in ``0..n-1``: ``Positive(c + 1, n)`` joins ``v_c``
to ``B``.  ``c = 0`` is allowed (the diagonal ``v_0 B``), in which case the
leftmost piece is the bare triangle ``(H, v_0, B)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .combinatorics import (
    Diagonal,
    DyckPath,
    Negative,
    Positive,
    Triangulation,
    decompose_irreducible,
    enumerate_triangulations,
    initial_ascent,
)

__all__ = [
    "PieceDecomposition",
    "diagonals_at_star",
    "ext_set",
    "split_at_star",
    "glue_pieces",
    "triangulation_to_dyck",
    "dyck_to_triangulation",
    "check_initial_ascent_lemma",
]


@dataclass(frozen=True)
class PieceDecomposition:
    """Cut of a triangulation along its diagonals through ``B``.

    ``indexed_pieces`` holds ``(c, piece)`` for the piece bordered on the
    left by the cut ``v_c B``; every piece is relabelled as a standalone
    triangulation whose distinguished vertex is ``v_c``.
    """

    n: int
    left_piece: Triangulation
    indexed_pieces: tuple[tuple[int, Triangulation], ...]
    cut_diagonals: tuple[Positive, ...]

    @property
    def pieces(self) -> tuple[Triangulation, ...]:
        return (self.left_piece,) + tuple(p for _, p in self.indexed_pieces)

    @property
    def cuts(self) -> tuple[int, ...]:
        return tuple(c for c, _ in self.indexed_pieces)


def diagonals_at_star(t: Triangulation) -> list[Positive]:
    """The diagonals of ``t`` through ``B``, i.e. ``Positive(i, n)``, sorted by ``i``."""
    return sorted((d for d in t.positives if d.j == t.n), key=lambda d: d.i)


def ext_set(t: Triangulation) -> tuple[int, ...]:
    """Cut indices ``c = i - 1`` of the diagonals ``Positive(i, n)`` of ``t``, increasing."""
    return tuple(d.i - 1 for d in diagonals_at_star(t))


def _piece_size(cuts: tuple[int, ...], n: int, t: int) -> int:
    upper = cuts[t + 1] if t + 1 < len(cuts) else n
    return upper - cuts[t] - 1


def _to_local(d: Positive, c: int) -> Diagonal:
    # piece right of cut c: H' = v_c, v'_k = v_{c+1+k}, B' = B
    if d.i == c + 1:
        return Negative(d.j - c)
    return Positive(d.i - c - 1, d.j - c - 1)


def _from_local(d: Diagonal, c: int) -> Positive:
    if isinstance(d, Negative):
        return Positive(c + 1, c + d.k)
    return Positive(d.i + c + 1, d.j + c + 1)


def split_at_star(t: Triangulation) -> PieceDecomposition:
    """Cut ``t`` along all of its diagonals through ``B``.

    Raises ``ValueError`` if no diagonal of ``t`` contains ``B``.
    """
    n = t.n
    cut_diagonals = diagonals_at_star(t)
    if not cut_diagonals:
        raise ValueError("no diagonal through the star vertex; the star lies in a single triangle")
    cuts = tuple(d.i - 1 for d in cut_diagonals)
    cut_set = set(cut_diagonals)

    first = cuts[0]
    left: list[Diagonal] = []
    buckets: list[list[Diagonal]] = [[] for _ in cuts]
    for d in t.diagonals:
        if d in cut_set:
            continue
        if isinstance(d, Negative) or d.j < first:
            # left piece keeps the global labels (v_m, H, with B' = B)
            left.append(d)
            continue
        # v_{i-1} and v_{j+1} both lie in one piece: c_t <= i-1 < j+1 <= c_{t+1}
        for idx in range(len(cuts) - 1, -1, -1):
            if d.i - 1 >= cuts[idx]:
                buckets[idx].append(_to_local(d, cuts[idx]))
                break

    left_piece = Triangulation(first, tuple(left))
    indexed = tuple(
        (c, Triangulation(_piece_size(cuts, n, idx), tuple(buckets[idx]))) for idx, c in enumerate(cuts)
    )
    return PieceDecomposition(n, left_piece, indexed, tuple(cut_diagonals))


def glue_pieces(left_piece: Triangulation, pieces: list[Triangulation]) -> Triangulation:
    """Reassemble a triangulation from its left piece and the pieces to the right of the cuts."""
    cuts = []
    c = left_piece.n
    for piece in pieces:
        cuts.append(c)
        c += piece.n + 1
    n = c
    diags: list[Diagonal] = list(left_piece.diagonals)
    for cut, piece in zip(cuts, pieces):
        diags.append(Positive(cut + 1, n))
        diags.extend(_from_local(d, cut) for d in piece.diagonals)
    return Triangulation(n, tuple(diags))


def triangulation_to_dyck(t: Triangulation) -> DyckPath:
    n = t.n
    if n == 0:
        return DyckPath("UD")
    if not diagonals_at_star(t):
        # star in a single triangle (v_n, B, H): Negative(n) is a diagonal
        smaller = Triangulation(n - 1, tuple(d for d in t.diagonals if d != Negative(n)))
        return DyckPath("U" + triangulation_to_dyck(smaller).steps + "D")
    split = split_at_star(t)
    return DyckPath("".join(triangulation_to_dyck(p).steps for p in split.pieces))


def dyck_to_triangulation(d: DyckPath) -> Triangulation:
    components = decompose_irreducible(d)
    if len(components) == 1:
        if d.n == 0:
            return Triangulation(0, ())
        inner = dyck_to_triangulation(DyckPath(d.steps[1:-1]))
        return Triangulation(d.n, inner.diagonals + (Negative(d.n),))
    pieces = [dyck_to_triangulation(c) for c in components]
    return glue_pieces(pieces[0], pieces[1:])


def check_initial_ascent_lemma(n: int) -> bool:
    """Initial ascent of ``D(T)`` equals the number of negative diagonals plus one, for every ``T``."""
    return all(
        initial_ascent(triangulation_to_dyck(t)) == len(t.negatives) + 1 for t in enumerate_triangulations(n)
    )
