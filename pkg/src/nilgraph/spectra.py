"""Reidemeister spectra: closed-form families with exact bounded membership,
decomposition-driven classification, rule-based detection of the
everything-is-infinite case, and a pruned exhaustive search over
automorphisms with bounded matrix entries.

Convention: 'positive integers' here means {1, 2, 3, ...}; every spectrum
implicitly contains infinity, so membership of the infinite element is
always true.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import gcd, isqrt

from .exactlin import ExtNat, IntMatrix
from .graphs import (
    Graph,
    connected_components,
    induced_subgraph,
    is_connected,
    is_isomorphic,
    join_decompose,
)
from .morphism import Endo, _commutator_entries
from .nilgroup import GroupElement, Presentation


class SearchBudgetExceeded(RuntimeError):
    """The pruned enumeration tree exceeded the configured node budget."""


class SpectrumConsistencyError(RuntimeError):
    """A search result contradicts a closed form or a structure theorem."""


# ---------------------------------------------------------------------------
# Closed-form spectrum families
# ---------------------------------------------------------------------------


def _is_square(w: int) -> bool:
    return w >= 0 and isqrt(w) ** 2 == w


def _is_positive_cube(w: int) -> bool:
    if w < 1:
        return False
    k = round(w ** (1 / 3))
    return any((k + d) ** 3 == w for d in (-1, 0, 1))


def _divisors(v: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= v:
        if v % d == 0:
            small.append(d)
            if d != v // d:
                large.append(v // d)
        d += 1
    return small + large[::-1]


def _squares_family(w: int) -> bool:
    """w is a nonzero square or |k^2 - 4| for an integer k with k^2 != 4."""
    if w >= 1 and _is_square(w):
        return True
    return _is_square(w + 4) or w in (3, 4)


def _one_edge_values(v: int) -> bool:
    """v = |a b (a+b)^2| or |a b (a^2 - b^2 - 4b)| for nonzero contributions.

    Any factor of absolute value >= 1 bounds the others, so |a|, |b| <= v
    suffices for the enumeration.
    """
    for a in range(-v, v + 1):
        if a == 0:
            continue
        for b in range(-v, v + 1):
            if b == 0:
                continue
            if abs(a * b) > v:
                continue
            if abs(a * b * (a + b) ** 2) == v:
                return True
            if abs(a * b * (a * a - b * b - 4 * b)) == v:
                return True
    return False


def _pinched_cube_values(v: int) -> bool:
    """v = |(a-2)(a+2)^2| for an integer a; |a - 2| <= v forces |a| <= v + 2."""
    return any(abs((a - 2) * (a + 2) ** 2) == v for a in range(-v - 2, v + 3))


_ATOMS: dict[str, tuple] = {
    # kind: (membership on finite v >= 1, rendered description)
    "FullN0": (lambda v: True, "N0 ∪ {inf}"),
    "TwoN0": (lambda v: v % 2 == 0, "2N0 ∪ {inf}"),
    "FourN0": (lambda v: v % 4 == 0, "4N0 ∪ {inf}"),
    "OddUnion4N0": (lambda v: v % 2 == 1 or v % 4 == 0, "(2N0-1) ∪ 4N0 ∪ {inf}"),
    "TwoOddUnion8N0": (lambda v: v % 4 == 2 or v % 8 == 0, "2(2N0-1) ∪ 8N0 ∪ {inf}"),
    "Z1": (lambda v: v == 2, "{2, inf}"),
    "TwoSquares": (
        lambda v: v % 2 == 0 and _squares_family(v // 2),
        "2N0^2 ∪ 2|N^2-4| ∪ {inf}",
    ),
    "FourSquares": (
        lambda v: v % 4 == 0 and _squares_family(v // 4),
        "4N0^2 ∪ 4|N^2-4| ∪ {inf}",
    ),
    "OneEdgeFamily": (
        lambda v: v % 2 == 0 and _one_edge_values(v // 2),
        "{2|nm(n+m)^2|, 2|nm(n^2-m^2-4m)| : n,m in Z} ∪ {inf}",
    ),
    "TwoEdgeFamily": (
        lambda v: _is_positive_cube(v) or _one_edge_values(v) or _pinched_cube_values(v),
        "N0^3 ∪ {|nm(n+m)^2|, |nm(n^2-m^2-4m)|, |(n-2)(n+2)^2| : n,m in Z} ∪ {inf}",
    ),
    "RInfinityOnly": (lambda v: False, "{inf}"),
}


class SpectrumForm:
    """Symbolic spectrum: a set of positive integers together with infinity."""

    def contains(self, v: int) -> bool:
        raise NotImplementedError

    def render(self) -> str:
        raise NotImplementedError

    def simplify(self) -> "SpectrumForm":
        return self

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class AtomForm(SpectrumForm):
    kind: str

    def __post_init__(self) -> None:
        if self.kind not in _ATOMS:
            raise ValueError(f"unknown spectrum family {self.kind!r}")

    def contains(self, v: int) -> bool:
        return v >= 1 and _ATOMS[self.kind][0](v)

    def render(self) -> str:
        return _ATOMS[self.kind][1]


FULL_N0 = AtomForm("FullN0")
TWO_N0 = AtomForm("TwoN0")
FOUR_N0 = AtomForm("FourN0")
ODD_UNION_4N0 = AtomForm("OddUnion4N0")
TWO_ODD_UNION_8N0 = AtomForm("TwoOddUnion8N0")
Z1 = AtomForm("Z1")
TWO_SQUARES = AtomForm("TwoSquares")
FOUR_SQUARES = AtomForm("FourSquares")
ONE_EDGE_FAMILY = AtomForm("OneEdgeFamily")
TWO_EDGE_FAMILY = AtomForm("TwoEdgeFamily")
R_INFINITY_ONLY = AtomForm("RInfinityOnly")


@dataclass(frozen=True)
class ProductForm(SpectrumForm):
    """Product set of spectra: {m * n : m in M, n in N}, infinity absorbing."""

    factors: tuple[SpectrumForm, ...]

    def contains(self, v: int) -> bool:
        return v >= 1 and _product_contains(self.factors, v)

    def render(self) -> str:
        return " · ".join(f"({f.render()})" for f in self.factors)

    def simplify(self) -> SpectrumForm:
        flat: list[SpectrumForm] = []
        for f in self.factors:
            s = f.simplify()
            if isinstance(s, ProductForm):
                flat.extend(s.factors)
            else:
                flat.append(s)
        if any(f == R_INFINITY_ONLY for f in flat):
            return R_INFINITY_ONLY
        changed = True
        while changed:
            changed = False
            for i in range(len(flat)):
                for j in range(len(flat)):
                    if i == j:
                        continue
                    merged = _product_rewrite(flat[i], flat[j])
                    if merged is not None:
                        lo, hi = min(i, j), max(i, j)
                        del flat[hi]
                        del flat[lo]
                        flat.insert(lo, merged)
                        changed = True
                        break
                if changed:
                    break
        if not flat:
            return FULL_N0  # unreachable for nonempty graphs
        if len(flat) == 1:
            return flat[0]
        return ProductForm(tuple(flat))


def _product_rewrite(a: SpectrumForm, b: SpectrumForm) -> SpectrumForm | None:
    """Exact rewrite of a 2-factor product, or None.  Only set identities
    that hold on the nose are used: {2}*2N0 = 4N0, {2}*((2N0-1) ∪ 4N0) =
    2(2N0-1) ∪ 8N0, {2}*squares-family doubles it, and N0*X collapses when
    1 ∈ X or X is 2N0/4N0."""
    if a == Z1 and b == TWO_N0:
        return FOUR_N0
    if a == Z1 and b == ODD_UNION_4N0:
        return TWO_ODD_UNION_8N0
    if a == Z1 and b == TWO_SQUARES:
        return FOUR_SQUARES
    if a == FULL_N0:
        if isinstance(b, AtomForm) and b.contains(1):
            return FULL_N0
        if b in (TWO_N0, FOUR_N0):
            return b
        if b == FULL_N0:
            return FULL_N0
    return None


@dataclass(frozen=True)
class PartialProductsForm(SpectrumForm):
    """Union over i = 1..k of the i-fold product sets of ``base`` with itself.

    This is the spectrum of a direct product of k copies of a group whose
    spectrum is ``base``, when the factors may additionally be permuted.
    """

    base: SpectrumForm
    k: int

    def contains(self, v: int) -> bool:
        if v < 1:
            return False
        return any(_iterated_contains(self.base, v, i) for i in range(1, self.k + 1))

    def render(self) -> str:
        return f"∪_(i=1..{self.k}) ({self.base.render()})^i"

    def simplify(self) -> SpectrumForm:
        base = self.base.simplify()
        if self.k == 1 or base in (TWO_N0, FULL_N0, R_INFINITY_ONLY):
            # products of evens stay even and contain 2N0; similarly for N0.
            return base
        return PartialProductsForm(base, self.k)


def _product_contains(forms: tuple[SpectrumForm, ...], v: int) -> bool:
    if not forms:
        return v == 1
    if len(forms) == 1:
        return forms[0].contains(v)
    head, rest = forms[0], forms[1:]
    return any(head.contains(d) and _product_contains(rest, v // d) for d in _divisors(v))


def _iterated_contains(base: SpectrumForm, v: int, i: int) -> bool:
    if i == 1:
        return base.contains(v)
    return any(
        base.contains(d) and _iterated_contains(base, v // d, i - 1) for d in _divisors(v)
    )


def spectrum_membership(form: SpectrumForm, v) -> bool:
    """Exact membership of ``v`` (an int or ExtNat); infinity always belongs."""
    if isinstance(v, ExtNat):
        if v.is_infinite:
            return True
        v = v.value
    return form.contains(v)


# ---------------------------------------------------------------------------
# Rule-based detection of the everything-is-infinite case
# ---------------------------------------------------------------------------


def _is_cycle(g: Graph) -> bool:
    return g.n >= 3 and all(d == 2 for d in g.degrees()) and is_connected(g)


def _is_path(g: Graph) -> bool:
    if g.n < 2 or len(g.edges) != g.n - 1 or not is_connected(g):
        return False
    degs = sorted(g.degrees())
    return degs[:2] == [1, 1] and all(d == 2 for d in degs[2:])


def detect_r_infinity(g: Graph) -> str | None:
    """First applicable rule forcing every automorphism to have infinitely
    many twisted classes, or None.

    Rules: a unique vertex of maximal degree n-2; a simplicial-join factor
    that is itself flagged; a cycle on >= 5 vertices; a path on >= 4.
    """
    degs = g.degrees()
    if g.n >= 2:
        md = max(degs)
        if md == g.n - 2 and degs.count(md) == 1:
            return "MaxDegreeOnce"
    jd = join_decompose(g)
    if jd.apex or len(jd.factors) > 1:
        for f in jd.factors:
            if detect_r_infinity(induced_subgraph(g, f)) is not None:
                return "JoinFactorRInf"
    if _is_cycle(g) and g.n >= 5:
        return "CycleAtLeast5"
    if _is_path(g) and g.n >= 4:
        return "PathAtLeast4"
    return None


# ---------------------------------------------------------------------------
# Decomposition-driven classification
# ---------------------------------------------------------------------------


def _is_complete_plus_point(g: Graph) -> bool:
    """Complete graph on n-1 vertices plus one isolated vertex, any labelling."""
    if g.n < 3:
        return False
    degs = sorted(g.degrees())
    return degs[0] == 0 and all(d == g.n - 2 for d in degs[1:])


def _base_spectrum(h: Graph) -> SpectrumForm | None:
    """Spectrum of a join-indecomposable graph, when a closed form is known."""
    n = h.n
    if n == 1:
        return Z1
    if h.is_edgeless:
        if n == 2:
            return TWO_N0
        if n == 3:
            return ODD_UNION_4N0
        return FULL_N0
    if _is_complete_plus_point(h):
        return TWO_SQUARES if n == 3 else TWO_ODD_UNION_8N0
    if n == 4 and len(h.edges) == 1:
        return ONE_EDGE_FAMILY
    if n == 4 and len(h.edges) == 2 and all(d == 1 for d in h.degrees()):
        return TWO_EDGE_FAMILY
    if detect_r_infinity(h) is not None:
        return R_INFINITY_ONLY
    return None


def spectrum_by_decomposition(g: Graph) -> SpectrumForm | None:
    """Closed-form spectrum assembled recursively from the graph structure:
    peel the vertices adjacent to everything (they contribute the spectrum
    of a free abelian group), split the rest along the simplicial join, and
    combine the factor spectra by type (isomorphic factors contribute a
    union of partial products, distinct types multiply)."""
    if g.n == 0:
        return None
    if g.is_complete:
        return Z1 if g.n == 1 else FULL_N0
    jd = join_decompose(g)
    forms: list[SpectrumForm] = []
    r = len(jd.apex)
    if r == 1:
        forms.append(Z1)
    elif r >= 2:
        forms.append(FULL_N0)
    for type_indices in jd.types:
        rep = induced_subgraph(g, jd.factors[type_indices[0]])
        base = _base_spectrum(rep)
        if base is None:
            return None
        k = len(type_indices)
        forms.append(base if k == 1 else PartialProductsForm(base, k))
    if len(forms) == 1:
        return forms[0]
    return ProductForm(tuple(forms))


# ---------------------------------------------------------------------------
# Bounded automorphism enumeration
# ---------------------------------------------------------------------------


class _Budget:
    __slots__ = ("left",)

    def __init__(self, limit: int | None):
        self.left = limit

    def spend(self, amount: int) -> None:
        if self.left is not None:
            self.left -= amount
            if self.left < 0:
                raise SearchBudgetExceeded("search node budget exhausted")


def _det_flat(a: list, n: int) -> int:
    """Determinant of a flat row-major list (destroyed); direct formulas up
    to 4x4, in-place fraction-free elimination beyond."""
    if n == 0:
        return 1
    if n == 1:
        return a[0]
    if n == 2:
        return a[0] * a[3] - a[1] * a[2]
    if n == 3:
        return (
            a[0] * (a[4] * a[8] - a[5] * a[7])
            - a[1] * (a[3] * a[8] - a[5] * a[6])
            + a[2] * (a[3] * a[7] - a[4] * a[6])
        )
    if n == 4:
        c23 = a[10] * a[15] - a[11] * a[14]
        c13 = a[9] * a[15] - a[11] * a[13]
        c12 = a[9] * a[14] - a[10] * a[13]
        c03 = a[8] * a[15] - a[11] * a[12]
        c02 = a[8] * a[14] - a[10] * a[12]
        c01 = a[8] * a[13] - a[9] * a[12]
        return (
            (a[0] * a[5] - a[1] * a[4]) * c23
            - (a[0] * a[6] - a[2] * a[4]) * c13
            + (a[0] * a[7] - a[3] * a[4]) * c12
            + (a[1] * a[6] - a[2] * a[5]) * c03
            - (a[1] * a[7] - a[3] * a[5]) * c02
            + (a[2] * a[7] - a[3] * a[6]) * c01
        )
    sign = 1
    prev = 1
    for k in range(n - 1):
        kk = k * n + k
        if a[kk] == 0:
            for r in range(k + 1, n):
                if a[r * n + k] != 0:
                    rb, kb = r * n, k * n
                    for j in range(k, n):
                        a[kb + j], a[rb + j] = a[rb + j], a[kb + j]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[kk]
        kb = k * n
        for i in range(k + 1, n):
            ib = i * n
            aik = a[ib + k]
            for j in range(k + 1, n):
                a[ib + j] = (a[ib + j] * akk - aik * a[kb + j]) // prev
        prev = akk
    return sign * a[n * n - 1]


def _make_finite_r(p: Presentation):
    """Specialized evaluator: finite Reidemeister number of a column tuple,
    or None when infinite."""
    n, N = p.n, p.N
    nonedges = p.nonedges
    rng_n = range(n)
    diag_n = [i * n + i for i in rng_n]
    diag_N = [i * N + i for i in range(N)]

    def finite_r(cols) -> int | None:
        a = [-cols[c][r] for r in rng_n for c in rng_n]
        for i in diag_n:
            a[i] += 1
        d1 = _det_flat(a, n)
        if d1 == 0:
            return None
        if N == 0:
            return abs(d1)
        b = []
        for am, bm in nonedges:
            for cl, dl in nonedges:
                cc = cols[cl]
                cd = cols[dl]
                b.append(cd[am] * cc[bm] - cd[bm] * cc[am])
        for i in diag_N:
            b[i] += 1
        d2 = _det_flat(b, N)
        if d2 == 0:
            return None
        return abs(d1 * d2)

    return finite_r


def _charpoly_key(cols, n) -> tuple:
    """Principal-minor sums of the matrix with the given columns (the
    characteristic polynomial coefficients up to sign); an isospectrality key."""
    if n == 4:
        return _charpoly_key4(cols)
    sums = [0] * n
    for size in range(1, n + 1):
        total = 0
        for subset in combinations(range(n), size):
            sub = [cols[c][r] for r in subset for c in subset]
            total += _det_flat(sub, size)
        sums[size - 1] = total
    return tuple(sums)


def _charpoly_key4(cols) -> tuple:
    c0, c1, c2, c3 = cols
    a, e, i, m = c0
    b, f, j, n_ = c1
    c, g, k, o = c2
    d, h, l, p = c3
    s1 = a + f + k + p
    s2 = (
        (a * f - b * e)
        + (a * k - c * i)
        + (a * p - d * m)
        + (f * k - g * j)
        + (f * p - h * n_)
        + (k * p - l * o)
    )
    s3 = (
        a * (f * k - g * j) - b * (e * k - g * i) + c * (e * j - f * i)
        + a * (f * p - h * n_) - b * (e * p - h * m) + d * (e * n_ - f * m)
        + a * (k * p - l * o) - c * (i * p - l * m) + d * (i * o - k * m)
        + f * (k * p - l * o) - g * (j * p - l * n_) + h * (j * o - k * n_)
    )
    ko_lp = k * p - l * o
    jo_ln = j * p - l * n_
    jn_ko = j * o - k * n_
    ip_lm = i * p - l * m
    io_km = i * o - k * m
    in_jm = i * n_ - j * m
    s4 = (
        (a * f - b * e) * ko_lp
        - (a * g - c * e) * jo_ln
        + (a * h - d * e) * jn_ko
        + (b * g - c * f) * ip_lm
        - (b * h - d * f) * io_km
        + (c * h - d * g) * in_jm
    )
    return (s1, s2, s3, s4)


def _canonical_pool(rows_allowed: tuple[int, ...], n: int, bound: int) -> list[tuple[int, ...]]:
    """All nonzero primitive vectors supported on the given rows with entries
    in [-bound, bound], first nonzero entry positive, sorted."""
    pool = []
    span = range(-bound, bound + 1)
    k = len(rows_allowed)
    for lead in range(k):
        for head in range(1, bound + 1):
            for tail in product(span, repeat=k - lead - 1):
                values = (0,) * lead + (head,) + tail
                g = 0
                for x in values:
                    g = gcd(g, x)
                    if g == 1:
                        break
                if g != 1:
                    continue
                vec = [0] * n
                for r, x in zip(rows_allowed, values):
                    vec[r] = x
                pool.append(tuple(vec))
    pool.sort()
    return pool


def _minors_vanish(nonedges, u, w) -> bool:
    for a, b in nonedges:
        if u[a] * w[b] != u[b] * w[a]:
            return False
    return True


class _Search:
    """Column-by-column enumeration of relation-preserving unimodular
    matrices with bounded entries.

    Columns are placed in a static order (most constrained first); the last
    column is solved from the linear determinant equation instead of being
    enumerated.  Column signs are canonicalized during the walk and expanded
    at the leaves, which is lossless because every constraint in play is
    invariant under negating a column.  Partial column sets are pruned by
    the gcd of their maximal minors (a prefix of a unimodular matrix always
    has coprime maximal minors).
    """

    def __init__(self, p: Presentation, bound: int, struct_prunes: bool, budget: _Budget):
        g = p.graph
        self.p = p
        self.n = g.n
        self.bound = bound
        self.nonedges = p.nonedges
        self.budget = budget
        degs = g.degrees()
        self.degs = degs
        n = self.n

        self.filtration_rows = [
            tuple(r for r in range(n) if degs[r] >= degs[v]) if struct_prunes else tuple(range(n))
            for v in range(n)
        ]

        self.comp_of: list[int | None] = [None] * n
        self.comp_rows: list[tuple[int, ...]] = []
        self.iso_targets: list[list[int]] = []
        if struct_prunes:
            dec = connected_components(g)
            for ci, comp in enumerate(dec.components):
                for v in comp:
                    self.comp_of[v] = ci
            self.comp_rows = [tuple(c) for c in dec.components]
            subs = [induced_subgraph(g, c) for c in dec.components]
            self.iso_targets = [
                [cj for cj in range(len(subs)) if is_isomorphic(subs[ci], subs[cj])]
                for ci in range(len(subs))
            ]
        self.use_components = struct_prunes and len(self.comp_rows) > 1

        self.adj = [tuple(g.neighbors(v)) for v in range(n)]
        self._pools: dict[tuple[int, ...], list[tuple[int, ...]]] = {}

        # Static placement order: smallest unconstrained pool first, so the
        # relation checks bite early; the last placed column is solved.
        sizes = [len(self._pool(self.filtration_rows[v])) for v in range(n)]
        self.order = sorted(range(n), key=lambda v: (sizes[v], v))

    def _pool(self, rows_allowed: tuple[int, ...]) -> list[tuple[int, ...]]:
        cached = self._pools.get(rows_allowed)
        if cached is None:
            cached = _canonical_pool(rows_allowed, self.n, self.bound)
            self._pools[rows_allowed] = cached
        return cached

    def _column_options(self, v: int, target, used_targets):
        """Yield (component_choice, rows_allowed) branches for column v."""
        base_rows = self.filtration_rows[v]
        ci = self.comp_of[v] if self.use_components else None
        if ci is None:
            yield None, base_rows
            return
        assigned = target[ci]
        if assigned is not None:
            rows = tuple(r for r in base_rows if r in self.comp_rows[assigned])
            yield None, rows
            return
        for cj in self.iso_targets[ci]:
            if cj in used_targets:
                continue
            rows = tuple(r for r in base_rows if r in self.comp_rows[cj])
            yield (ci, cj), rows

    def run(self):
        for batch in self.batches():
            yield from batch

    def batches(self):
        """Yield lists of completed column tuples, one list per search leaf."""
        n = self.n
        if n == 0:
            yield [()]
            return
        placed: list[tuple[int, ...]] = []
        # minors[k][mask] = det of the placed columns on the rows in mask.
        minor_stack: list[list[int]] = [[0] * (1 << n)]
        minor_stack[0][0] = 1
        self._level_masks = [
            [sum(1 << r for r in c) for c in combinations(range(n), k)] for k in range(n)
        ]
        target: list[int | None] = [None] * len(self.comp_rows)
        used: set[int] = set()
        yield from self._place(0, placed, minor_stack, target, used)

    def _extend_minors(self, minors_prev: list[int], col: tuple[int, ...], k: int):
        """Minors of k placed columns from those of k-1, plus their gcd."""
        n = self.n
        table = [0] * (1 << n)
        g = 0
        for mask in self._level_masks[k]:
            acc = 0
            rest = mask
            idx = 0
            while rest:
                low = rest & -rest
                r = low.bit_length() - 1
                c = col[r]
                if c:
                    term = c * minors_prev[mask ^ low]
                    acc += term if (idx + k - 1) % 2 == 0 else -term
                rest ^= low
                idx += 1
            table[mask] = acc
            g = gcd(g, acc)
        return table, g

    def _place(self, depth: int, placed, minor_stack, target, used):
        n = self.n
        v = self.order[depth]
        last = depth == n - 1
        for choice, rows in self._column_options(v, target, used):
            if choice is not None:
                target[choice[0]] = choice[1]
                used.add(choice[1])
            if last:
                batch = self._solve_last(v, rows, placed, minor_stack[-1])
                if batch:
                    yield batch
            else:
                pool = self._pool(rows)
                self.budget.spend(len(pool))
                neighbors_placed = [
                    placed[k] for k in range(depth) if self.order[k] in self.adj[v]
                ]
                nonedges = self.nonedges
                for vec in pool:
                    ok = True
                    for u in neighbors_placed:
                        if not _minors_vanish(nonedges, u, vec):
                            ok = False
                            break
                    if not ok:
                        continue
                    table, g = self._extend_minors(minor_stack[-1], vec, depth + 1)
                    if g != 1:
                        continue
                    placed.append(vec)
                    minor_stack.append(table)
                    yield from self._place(depth + 1, placed, minor_stack, target, used)
                    minor_stack.pop()
                    placed.pop()
            if choice is not None:
                target[choice[0]] = None
                used.discard(choice[1])

    def _solve_last(self, v: int, rows, placed, minors_top) -> list:
        """Solve sum_r g_r c_r = +-1 for the final column over the allowed box;
        returns the completed column tuples for this leaf (original order)."""
        n = self.n
        full = (1 << n) - 1
        gvec = {}
        for r in rows:
            m = minors_top[full ^ (1 << r)]
            if m:
                gvec[r] = m if (r + n - 1) % 2 == 0 else -m
        if not gvec:
            return []
        pivot = max(gvec, key=lambda r: (abs(gvec[r]), -r))
        gp = gvec[pivot]
        free = [r for r in rows if r != pivot]
        coeffs = [gvec.get(r, 0) for r in free]
        bound = self.bound
        span = range(-bound, bound + 1)
        self.budget.spend(2 * (2 * bound + 1) ** len(free))
        neighbors_placed = [
            placed[k] for k in range(n - 1) if self.order[k] in self.adj[v]
        ]
        nonedges = self.nonedges
        solutions = []
        for assign in product(span, repeat=len(free)):
            partial = 0
            for c, x in zip(coeffs, assign):
                partial += c * x
            for s in (1, -1):
                q, rem = divmod(s - partial, gp)
                if rem or not (-bound <= q <= bound):
                    continue
                vec = [0] * n
                for r, x in zip(free, assign):
                    vec[r] = x
                vec[pivot] = q
                cvec = tuple(vec)
                ok = True
                for u in neighbors_placed:
                    if not _minors_vanish(nonedges, u, cvec):
                        ok = False
                        break
                if ok:
                    solutions.append(cvec)
        if not solutions:
            return []
        solutions.sort()
        order = self.order
        oriented = [(w, tuple(-x for x in w)) for w in placed]
        out = []
        for cvec in solutions:
            for signs in product((0, 1), repeat=n - 1):
                cols: list = [None] * n
                for k in range(n - 1):
                    cols[order[k]] = oriented[k][signs[k]]
                cols[v] = cvec
                out.append(tuple(cols))
        return out


def _automorphism_columns(
    p: Presentation, bound: int, struct_prunes: bool = True, node_budget: int | None = None
):
    """Stream of column tuples (original vertex order) of every
    relation-preserving matrix with entries in [-bound, bound] and
    determinant +1 or -1."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    search = _Search(p, bound, struct_prunes, _Budget(node_budget))
    return search.run()


def _endo_from_columns(p: Presentation, cols) -> Endo:
    n, N = p.n, p.N
    images = tuple(GroupElement(c, (0,) * N) for c in cols)
    vm = IntMatrix(n, n, tuple(cols[j][i] for i in range(n) for j in range(n)))
    rows = _commutator_entries(p.nonedges, cols)
    cm = IntMatrix(N, N, tuple(e for r in rows for e in r))
    return Endo(p, images, vm, cm)


def enumerate_automorphisms(
    p: Presentation, bound: int, *, struct_prunes: bool = True, node_budget: int | None = None
):
    """Yield every automorphism whose vertex matrix has entries in
    [-bound, bound], as endomorphisms with zero commutator parts in the
    generator images.  Deterministic order."""
    for cols in _automorphism_columns(p, bound, struct_prunes, node_budget):
        yield _endo_from_columns(p, cols)


# ---------------------------------------------------------------------------
# Spectrum reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Classification:
    kind: str  # "closed_form" | "r_infinity_rule" | "search_only"
    form: SpectrumForm | None = None
    rule: str | None = None

    def to_json(self) -> dict:
        if self.kind == "closed_form":
            return {"kind": self.kind, "form": self.form.render()}
        if self.kind == "r_infinity_rule":
            return {"kind": self.kind, "rule": self.rule}
        return {"kind": self.kind}


@dataclass(frozen=True)
class SpectrumReport:
    graph: Graph
    classification: Classification
    observed: tuple[int, ...]
    bound: int
    witnesses: dict  # finite value -> vertex matrix rows (tuple of tuples)

    def to_json(self) -> dict:
        return {
            "graph": self.graph.to_json(),
            "classification": self.classification.to_json(),
            "observed": list(self.observed),
            "bound": self.bound,
            "witnesses": {str(v): [list(r) for r in m] for v, m in sorted(self.witnesses.items())},
        }


def default_bound(g: Graph) -> int:
    """Search bound heuristic: 3 for up to 3 vertices; 2 for 4-vertex graphs
    whose relation pruning keeps the tree small (some edge, some non-edge,
    and neither isolated vertices nor a vertex joined to everything, since
    those carry unconstrained blocks that blow up the enumeration); 1
    otherwise."""
    if g.n <= 3:
        return 3
    if g.n == 4:
        degs = g.degrees()
        if 0 < len(g.edges) and min(degs) >= 1 and max(degs) <= g.n - 2:
            return 2
    return 1


def _check_block_structure(p: Presentation, cols, degs, comp_of, n_comps) -> None:
    n = p.n
    for c in range(n):
        dc = degs[c]
        col = cols[c]
        for r in range(n):
            if col[r] != 0 and degs[r] < dc:
                raise SpectrumConsistencyError(
                    f"degree filtration violated at entry ({r}, {c})"
                )
    if n_comps > 1:
        seen = {}
        for c in range(n):
            ci = comp_of[c]
            if ci is None:
                continue
            tgt = {comp_of[r] for r in range(n) if cols[c][r] != 0}
            if len(tgt) != 1 or None in tgt:
                raise SpectrumConsistencyError(
                    f"column {c} is not supported in a single component"
                )
            ti = tgt.pop()
            if seen.setdefault(ci, ti) != ti:
                raise SpectrumConsistencyError(
                    f"component {ci} maps to two different components"
                )
        if len(set(seen.values())) != len(seen):
            raise SpectrumConsistencyError("component assignment is not injective")


def compute_spectrum_report(
    g: Graph,
    bound: int | None = None,
    *,
    struct_prunes: bool = True,
    node_budget: int | None = None,
) -> SpectrumReport:
    """Classify the graph's spectrum and search for realized finite values.

    Every observed value carries the lexicographically smallest witness
    matrix, re-verified against the closed form when one is known; a
    violation raises :class:`SpectrumConsistencyError`.
    """
    if bound is None:
        bound = default_bound(g)
    if bound < 1:
        raise ValueError("bound must be >= 1")
    rule = detect_r_infinity(g)
    if rule is not None:
        classification = Classification("r_infinity_rule", rule=rule)
    else:
        form = spectrum_by_decomposition(g)
        if form is not None:
            classification = Classification("closed_form", form=form.simplify())
        else:
            classification = Classification("search_only")

    p = Presentation.of(g)
    n = p.n
    degs = g.degrees()
    dec = connected_components(g)
    comp_of: list[int | None] = [None] * n
    for ci, comp in enumerate(dec.components):
        for v in comp:
            comp_of[v] = ci
    n_comps = len(dec.components)
    check_structure = n_comps > 1 or len(set(degs)) > 1

    finite_r = _make_finite_r(p)
    search = _Search(p, bound, struct_prunes, _Budget(node_budget))
    # Witness ties are broken by the lexicographically smallest column tuple.
    observed: dict[int, tuple] = {}
    if g.is_edgeless and n >= 2:
        # Both determinant layers are symmetric functions of the eigenvalues
        # here (the commutator action is the full second compound), so the
        # value only depends on the characteristic polynomial.
        cache: dict[tuple, int | None] = {}
        sentinel = object()
        for batch in search.batches():
            for cols in batch:
                key = _charpoly_key(cols, n)
                value = cache.get(key, sentinel)
                if value is sentinel:
                    value = finite_r(cols)
                    cache[key] = value
                if value is None:
                    continue
                best = observed.get(value)
                if best is None or cols < best:
                    observed[value] = cols
    else:
        for batch in search.batches():
            for cols in batch:
                if check_structure:
                    _check_block_structure(p, cols, degs, comp_of, n_comps)
                value = finite_r(cols)
                if value is None:
                    continue
                best = observed.get(value)
                if best is None or cols < best:
                    observed[value] = cols
    witnesses = {
        v: tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
        for v, cols in observed.items()
    }

    if classification.kind == "closed_form":
        for value in observed:
            if not classification.form.contains(value):
                raise SpectrumConsistencyError(
                    f"search realized {value}, outside {classification.form.render()}"
                )
    if classification.kind == "r_infinity_rule" and observed:
        raise SpectrumConsistencyError(
            f"rule {classification.rule} fired but finite values {sorted(observed)} were realized"
        )
    return SpectrumReport(
        graph=g,
        classification=classification,
        observed=tuple(sorted(witnesses)),
        bound=bound,
        witnesses=witnesses,
    )
