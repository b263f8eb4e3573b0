"""Independent brute-force verification of Reidemeister numbers.

Reducing every exponent mod m collapses the graph group onto a finite
group of order m^(n+N): the correction terms of the multiplication law are
bilinear with integer coefficients, so the reduction is well defined and
endomorphisms descend.  Counting orbits of the twisted action
b -> c * b * phi(c)^{-1} in such a quotient gives a check on the
determinant product formula that shares none of its code path.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .exactlin import ExtNat, IntMatrix, smith_normal_form
from .morphism import Endo
from .nilgroup import Presentation

SIZE_LIMIT = 10**6


class QuotientSizeError(ValueError):
    """The finite quotient would exceed the enumeration feasibility limit."""


@dataclass(frozen=True)
class FiniteQuotient:
    """The graph group with all exponents reduced mod ``modulus``."""

    presentation: Presentation
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 2:
            raise ValueError("modulus must be at least 2")
        if self.size > SIZE_LIMIT:
            raise QuotientSizeError(
                f"quotient has {self.size} elements, over the limit {SIZE_LIMIT}"
            )

    @property
    def size(self) -> int:
        p = self.presentation
        return self.modulus ** (p.n + p.N)


def _mod_multiply(p: Presentation, m: int, a, b):
    """Product of exponent tuples (z-part then t-part), all entries mod m."""
    n = p.n
    z = tuple((a[i] + b[i]) % m for i in range(n))
    t = tuple(
        (a[n + l] + b[n + l] + b[i] * a[j]) % m for l, (i, j) in enumerate(p.nonedges)
    )
    return z + t


def _mod_inverse(p: Presentation, m: int, a):
    n = p.n
    z = tuple((-a[i]) % m for i in range(n))
    t = tuple(
        (-a[n + l] + a[i] * a[j]) % m for l, (i, j) in enumerate(p.nonedges)
    )
    return z + t


def _generator_moves(q: FiniteQuotient, e: Endo):
    """For each group generator c: the pair (c, phi(c)^{-1}) reduced mod m."""
    p = q.presentation
    m = q.modulus
    n, N = p.n, p.N
    moves = []
    for i in range(n):
        c = tuple(1 if k == i else 0 for k in range(n)) + (0,) * N
        img = e.images[i]
        phic = tuple(x % m for x in img.z) + tuple(x % m for x in img.t)
        moves.append((c, _mod_inverse(p, m, phic)))
    for l in range(N):
        c = (0,) * n + tuple(1 if k == l else 0 for k in range(N))
        col = e.commutator_matrix.column(l)
        phic = (0,) * n + tuple(x % m for x in col)
        moves.append((c, _mod_inverse(p, m, phic)))
    return moves


def count_twisted_classes(q: FiniteQuotient, e: Endo) -> int:
    """Number of orbits of b -> c b phi(c)^{-1} on the finite quotient,
    by union-find over the full element table with all generator moves."""
    p = q.presentation
    if e.presentation is not p and e.presentation != p:
        raise ValueError("endomorphism and quotient use different presentations")
    m = q.modulus
    k = p.n + p.N
    size = q.size
    moves = _generator_moves(q, e)

    strides = [m ** (k - 1 - pos) for pos in range(k)]
    parent = list(range(size))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for idx, b in enumerate(product(range(m), repeat=k)):
        for c, phic_inv in moves:
            moved = _mod_multiply(p, m, _mod_multiply(p, m, c, b), phic_inv)
            tgt = 0
            for pos in range(k):
                tgt += moved[pos] * strides[pos]
            ra, rb = find(idx), find(tgt)
            if ra != rb:
                parent[rb] = ra

    return sum(1 for x in range(size) if parent[x] == x)


def abelian_class_count(mat: IntMatrix) -> ExtNat:
    """Order of coker(1 - mat) via the Smith normal form: infinite when a
    diagonal entry vanishes, else the product of the diagonal.  Equals
    |det(1 - mat)| with 0 mapped to infinity."""
    if not mat.is_square:
        raise ValueError("need a square matrix")
    diff = IntMatrix.identity(mat.rows) - mat
    return smith_normal_form(diff).cokernel_order()
