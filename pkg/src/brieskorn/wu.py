"""Spherical Wu class and the Neumann-Siebenmann invariant mu-bar.

For a plumbing with unimodular intersection matrix A the spherical Wu class
is the unique vector w with coordinates in {0, 1} satisfying

    A w = diag(A)  (mod 2),

i.e. the characteristic-vector condition w.x = x.x (mod 2) for all x.  With w
lifted to an integer 0/1 vector,

    mubar = (signature(A) - w^T A w) / 8,

an integer by van der Blij's lemma.  mubar != 0 obstructs bounding an
integral homology ball.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EvenDeterminant, NotNegativeDefinite, NotUnimodular
from .plumbing import (
    IntMatrix,
    PlumbingGraph,
    determinant,
    intersection_matrix,
    is_negative_definite,
)


@dataclass(frozen=True)
class WuClass:
    """0/1 coordinates of the spherical Wu class, one per vertex."""

    coords: tuple[int, ...]

    def __post_init__(self):
        if any(c not in (0, 1) for c in self.coords):
            raise ValueError("Wu coordinates must be 0 or 1")


@dataclass(frozen=True)
class MubarResult:
    signature: int
    wu_square: int
    mubar: int
    obstructed: bool


def wu_class(m: IntMatrix) -> WuClass:
    """Unique {0,1} solution of A w = diag(A) mod 2, by GF(2) elimination.

    Rows are kept as bitmasks; pivoting picks the first row with a 1 in the
    current column, so the run is deterministic.  Requires det(A) odd.
    """
    n = m.n
    rows = []
    for i in range(n):
        mask = 0
        for j in range(n):
            if m.entries[i][j] & 1:
                mask |= 1 << j
        mask |= (m.entries[i][i] & 1) << n  # augmented column
        rows.append(mask)
    pivots = []
    r = 0
    for col in range(n):
        sel = None
        for i in range(r, n):
            if rows[i] >> col & 1:
                sel = i
                break
        if sel is None:
            raise EvenDeterminant("intersection form is singular over GF(2)")
        rows[r], rows[sel] = rows[sel], rows[r]
        for i in range(n):
            if i != r and rows[i] >> col & 1:
                rows[i] ^= rows[r]
        pivots.append(col)
        r += 1
    w = [0] * n
    for i, col in enumerate(pivots):
        w[col] = rows[i] >> n & 1
    return WuClass(tuple(w))


def wu_square(m: IntMatrix, w: WuClass) -> int:
    """w^T A w over the integers, with w lifted as a 0/1 vector."""
    support = [i for i, c in enumerate(w.coords) if c]
    total = 0
    for i in support:
        row = m.entries[i]
        for j in support:
            total += row[j]
    return total


def mubar(g: PlumbingGraph) -> MubarResult:
    """Neumann-Siebenmann invariant of a negative-definite unimodular plumbing.

    (signature - wu_square)/8 with everything computed in the plumbing basis.
    Refuses indefinite or non-unimodular input instead of extrapolating.
    """
    m = intersection_matrix(g)
    det = determinant(m)
    if det not in (1, -1):
        raise NotUnimodular(f"|det| = {abs(det)}")
    if not is_negative_definite(m):
        raise NotNegativeDefinite("plumbing form is not negative definite")
    sig = -m.n
    w = wu_class(m)
    w2 = wu_square(m, w)
    assert (sig - w2) % 8 == 0, "van der Blij violated: implementation bug"
    mu = (sig - w2) // 8
    return MubarResult(signature=sig, wu_square=w2, mubar=mu, obstructed=mu != 0)


def obstructs_integral_ball(r: MubarResult) -> bool:
    """True iff mubar != 0 (a vanishing value is inconclusive)."""
    return r.mubar != 0
