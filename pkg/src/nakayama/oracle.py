"""Independent recomputation of Hom and Ext from explicit quiver representations.

A module is a vector space at each vertex with one matrix per arrow.  Hom
spaces are solution spaces of the intertwiner equations and projective
resolutions are built by linear algebra: tops are found as complements of
radicals, and syzygies as kernels of projective covers.  Nothing here uses
the closed-form syzygy rule, so agreement with ``homext`` is a genuine
cross-check.  All arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import linalg
from .kupisch import KupischSeries, opposite
from .modrep import Indecomposable


@dataclass
class MatrixRep:
    """``arrows[v]`` is the ``dims[w] x dims[v]`` matrix of the arrow ``v -> w``."""

    A: KupischSeries
    dims: tuple[int, ...]
    arrows: dict[int, np.ndarray]

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def path_map(self, v: int, length: int) -> np.ndarray:
        """Action of the path of the given length starting at ``v``."""
        m = linalg.identity(self.dims[v])
        u = v
        for _ in range(length):
            w = self.A.shift(u, 1)
            if w is None:
                return linalg.zeros(0, self.dims[v])
            m = self.arrows[u].dot(m)
            u = w
        return m

    def check_relations(self) -> bool:
        for v in self.A.vertices():
            pm = self.path_map(v, self.A.c[v])
            if pm.size and any(x != 0 for x in pm.flat):
                return False
        return True


def _arrow_targets(A):
    return {v: A.shift(v, 1) for v in A.vertices() if A.shift(v, 1) is not None}


def _basis(A: KupischSeries, i: int, k: int) -> dict[int, list[int]]:
    """Path lengths ``0..k-1`` from ``i`` grouped by end vertex."""
    b: dict[int, list[int]] = {v: [] for v in A.vertices()}
    for l in range(k):
        b[A.shift(i, l)].append(l)
    return b


def rep_of(A: KupischSeries, M: Indecomposable) -> MatrixRep:
    i, k = M
    basis = _basis(A, i, k)
    pos = {l: basis[v].index(l) for v in basis for l in basis[v]}
    dims = tuple(len(basis[v]) for v in A.vertices())
    arrows = {}
    for v, w in _arrow_targets(A).items():
        m = linalg.zeros(dims[w], dims[v])
        for l in basis[v]:
            if l + 1 < k:
                m[pos[l + 1], pos[l]] = Fraction(1)
        arrows[v] = m
    rep = MatrixRep(A, dims, arrows)
    assert rep.check_relations()
    return rep


def hom_dim_reps(X: MatrixRep, Y: MatrixRep) -> int:
    """dim of ``{(f_v) : f_w X_a = Y_a f_v for every arrow a: v -> w}``."""
    A = X.A
    offset = {}
    n_unknowns = 0
    for v in A.vertices():
        offset[v] = n_unknowns
        n_unknowns += Y.dims[v] * X.dims[v]

    def var(v, p, q):  # entry (p, q) of f_v : X_v -> Y_v
        return offset[v] + p * X.dims[v] + q

    rows = []
    for v, w in _arrow_targets(A).items():
        xa, ya = X.arrows[v], Y.arrows[v]
        for p in range(Y.dims[w]):
            for q in range(X.dims[v]):
                row: dict[int, Fraction] = {}
                for r in range(X.dims[w]):
                    if xa[r, q]:
                        j = var(w, p, r)
                        row[j] = row.get(j, 0) + xa[r, q]
                for s in range(Y.dims[v]):
                    if ya[p, s]:
                        j = var(v, s, q)
                        row[j] = row.get(j, 0) - ya[p, s]
                if row:
                    rows.append(row)
    return n_unknowns - linalg.sparse_rank(rows)


def hom_dim_oracle(A: KupischSeries, N: Indecomposable, M: Indecomposable) -> int:
    return hom_dim_reps(rep_of(A, N), rep_of(A, M))


class FreeSum:
    """Direct sum of indecomposable projectives ``e_v A``, with explicit path bases."""

    def __init__(self, A: KupischSeries, tops: list[int]):
        self.A = A
        self.tops = list(tops)
        # basis[u] lists (summand, path length) pairs living at u
        self.basis: dict[int, list[tuple[int, int]]] = {u: [] for u in A.vertices()}
        for r, v in enumerate(self.tops):
            for l in range(A.c[v]):
                self.basis[A.shift(v, l)].append((r, l))
        self.index = {u: {b: t for t, b in enumerate(self.basis[u])} for u in A.vertices()}
        dims = tuple(len(self.basis[u]) for u in A.vertices())
        arrows = {}
        for v, w in _arrow_targets(A).items():
            m = linalg.zeros(dims[w], dims[v])
            for t, (r, l) in enumerate(self.basis[v]):
                if l + 1 < A.c[self.tops[r]]:
                    m[self.index[w][(r, l + 1)], t] = Fraction(1)
            arrows[v] = m
        self.rep = MatrixRep(A, dims, arrows)


def _top_generators(X: MatrixRep) -> list[tuple[int, np.ndarray]]:
    """Vectors spanning a complement of the radical at each vertex."""
    A = X.A
    gens = []
    into: dict[int, list[int]] = {u: [] for u in A.vertices()}
    for v, w in _arrow_targets(A).items():
        into[w].append(v)
    for u in A.vertices():
        d = X.dims[u]
        if d == 0:
            continue
        rad = [X.arrows[v] for v in into[u] if X.arrows[v].shape[1]]
        if rad:
            _, pivots = linalg.rref(np.hstack(rad).T.copy())
        else:
            pivots = []
        for j in range(d):
            if j not in pivots:
                e = linalg.zeros(d, 1)
                e[j, 0] = Fraction(1)
                gens.append((u, e))
    return gens


@dataclass
class CoverStep:
    cover: FreeSum
    # per-vertex matrix of the cover map onto the module being covered
    maps: dict[int, np.ndarray]


def projective_cover(X: MatrixRep) -> CoverStep:
    A = X.A
    gens = _top_generators(X)
    P = FreeSum(A, [u for u, _ in gens])
    maps = {}
    for u in A.vertices():
        m = linalg.zeros(X.dims[u], P.rep.dims[u])
        for t, (r, l) in enumerate(P.basis[u]):
            v, g = gens[r]
            m[:, t] = X.path_map(v, l).dot(g)[:, 0]
        maps[u] = m
    return CoverStep(P, maps)


def kernel(P: MatrixRep, maps: dict[int, np.ndarray]) -> tuple[MatrixRep, dict[int, np.ndarray]]:
    """Kernel subrepresentation and its inclusion (columns = basis vectors in P)."""
    A = P.A
    incl = {u: linalg.nullspace(maps[u]) for u in A.vertices()}
    dims = tuple(incl[u].shape[1] for u in A.vertices())
    arrows = {}
    for v, w in _arrow_targets(A).items():
        arrows[v] = linalg.solve(incl[w], P.arrows[v].dot(incl[v]))
    return MatrixRep(A, dims, arrows), incl


@dataclass
class OracleResolution:
    """Minimal projective resolution ``... -> P_1 -> P_0 -> N`` built by linear algebra.

    ``images[j]`` (j >= 1) lists, for each generator of ``P_j``, the image of
    that generator in ``P_{j-1}`` as ``{(summand, path length): coefficient}``.
    """

    A: KupischSeries
    N: MatrixRep
    terms: list[FreeSum] = field(default_factory=list)
    images: list[list[dict]] = field(default_factory=list)
    _pending: MatrixRep | None = None
    finished: bool = False

    def __post_init__(self):
        self._pending = self.N
        self._incl: dict[int, np.ndarray] = {}

    def extend(self, upto: int) -> None:
        """Compute terms ``P_0..P_upto`` (fewer if the resolution ends)."""
        while len(self.terms) <= upto and not self.finished:
            X = self._pending
            if X.total_dim == 0:
                self.finished = True
                return
            step = projective_cover(X)
            j = len(self.terms)
            if j > 0:
                # compose with the inclusion of X into the previous term
                prev = self.terms[j - 1]
                imgs = []
                for r, v in enumerate(step.cover.tops):
                    col = self._incl[v].dot(step.maps[v][:, step.cover.index[v][(r, 0)]])
                    imgs.append({prev.basis[v][t]: x for t, x in enumerate(col) if x != 0})
                self.images.append(imgs)
            else:
                self.images.append([])
            self.terms.append(step.cover)
            K, incl = kernel(step.cover.rep, step.maps)
            self._pending = K
            self._incl = incl

    def length(self):
        """Projective dimension if the resolution has been seen to end, else None."""
        return len(self.terms) - 1 if self.finished else None


_RESOLUTIONS: dict = {}


def resolution(A: KupischSeries, N: Indecomposable, upto: int) -> OracleResolution:
    key = (A, N)
    res = _RESOLUTIONS.get(key)
    if res is None:
        if len(_RESOLUTIONS) > 4096:
            _RESOLUTIONS.clear()
        res = _RESOLUTIONS[key] = OracleResolution(A, rep_of(A, N))
    res.extend(upto)
    return res


def _hom_free(P: FreeSum, Y: MatrixRep) -> int:
    # Hom(e_v A, Y) = Y e_v
    return sum(Y.dims[v] for v in P.tops)


def _cochain_map(res: OracleResolution, j: int, Y: MatrixRep) -> np.ndarray:
    """Matrix of ``Hom(P_{j-1}, Y) -> Hom(P_j, Y)``, f -> f o d_j."""
    src, dst = res.terms[j - 1], res.terms[j]
    col_off, row_off = [], []
    acc = 0
    for v in src.tops:
        col_off.append(acc)
        acc += Y.dims[v]
    ncols = acc
    acc = 0
    for u in dst.tops:
        row_off.append(acc)
        acc += Y.dims[u]
    m = linalg.zeros(acc, ncols)
    for rr, img in enumerate(res.images[j]):
        u = dst.tops[rr]
        for (r, l), coeff in img.items():
            v = src.tops[r]
            block = Y.path_map(v, l)
            if block.shape[0] != Y.dims[u]:
                continue
            m[row_off[rr]:row_off[rr] + Y.dims[u], col_off[r]:col_off[r] + Y.dims[v]] += coeff * block
    return m


def ext_dim_oracle(A: KupischSeries, N: Indecomposable, M: Indecomposable, l: int) -> int:
    res = resolution(A, N, l + 1)
    if l >= len(res.terms):
        return 0
    Y = rep_of(A, M)
    dim = _hom_free(res.terms[l], Y)
    if l >= 1:
        dim -= linalg.rank(_cochain_map(res, l, Y))
    if l + 1 < len(res.terms):
        dim -= linalg.rank(_cochain_map(res, l + 1, Y))
    return dim


def cochain_dims_oracle(A: KupischSeries, N: Indecomposable, M: Indecomposable, upto: int) -> list[int]:
    """dim Hom(P_j, M) via the intertwiner equations, for the oracle's resolution terms."""
    res = resolution(A, N, upto)
    Y = rep_of(A, M)
    return [hom_dim_reps(P.rep, Y) for P in res.terms[:upto + 1]]


def identify_uniserial(X: MatrixRep) -> Indecomposable | None:
    """(top vertex, length) of an indecomposable uniserial representation; None for zero."""
    if X.total_dim == 0:
        return None
    gens = _top_generators(X)
    if len(gens) != 1:
        raise ValueError(f"representation has {len(gens)} top summands, not uniserial")
    return Indecomposable(gens[0][0], X.total_dim)


def syzygy_oracle(A: KupischSeries, M: Indecomposable) -> Indecomposable | None:
    step = projective_cover(rep_of(A, M))
    K, _ = kernel(step.cover.rep, step.maps)
    return identify_uniserial(K)


def dual_rep(X: MatrixRep) -> MatrixRep:
    """Vector-space dual: a representation of the opposite quiver with transposed arrows."""
    Aop = opposite(X.A)
    arrows = {}
    for v, w in _arrow_targets(X.A).items():
        assert Aop.shift(w, 1) == v
        arrows[w] = X.arrows[v].T.copy()
    return MatrixRep(Aop, X.dims, arrows)


def dual_oracle(A: KupischSeries, M: Indecomposable) -> Indecomposable:
    return identify_uniserial(dual_rep(rep_of(A, M)))


def injective_envelope_dims(A: KupischSeries) -> list[int]:
    """dim of the injective envelope of each simple: total multiplicity of S_j in the regular module."""
    out = [0] * A.n
    for v in A.vertices():
        rep = rep_of(A, Indecomposable(v, A.c[v]))
        for j in A.vertices():
            out[j] += rep.dims[j]
    return out
