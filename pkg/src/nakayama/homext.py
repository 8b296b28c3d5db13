"""Hom and Ext dimensions between indecomposables, by counting paths.

Ext is computed from the minimal projective resolution of the source.
Each term is a single indecomposable projective ``e_a A`` and each
differential is left multiplication by a path, so after applying
``Hom(-, M)`` every cochain map sends basis paths of ``M e_a`` to basis
paths (or to zero).  Ranks are therefore plain counts; no field
arithmetic is involved and the answer does not depend on the ground field.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import HypothesisViolated, OutOfRange
from .kupisch import KupischSeries
from .modrep import (INF, Indecomposable, is_projective, syzygy,
                     syzygy_orbit)

DEFAULT_MIN_HORIZON = 50


def _count_paths(A: KupischSeries, i: int, a: int, hi: int) -> int:
    """Number of lengths 0 <= l < hi admitting a path i -> a."""
    if hi <= 0:
        return 0
    d = A.step * (a - i)
    if A.is_cyclic:
        d %= A.n
        return 0 if d >= hi else (hi - 1 - d) // A.n + 1
    return int(0 <= d < hi)


def hom_dim(A: KupischSeries, N: Indecomposable, M: Indecomposable) -> int:
    """dim Hom(M(s,t), M(i,k)): paths i -> s of length in [max(0, k - t), k - 1]."""
    s, t = N
    i, k = M
    return _count_paths(A, i, s, k) - _count_paths(A, i, s, k - t)


def _cochain_dim(A, M, a):
    # dim Hom(e_a A, M)
    return _count_paths(A, M.i, a, M.k)


def _cochain_rank(A, M, state):
    # rank of Hom(P(a), M) -> Hom(P(a + t), M) induced by the inclusion of Omega(state)
    return _count_paths(A, M.i, state.i, M.k - state.k)


def _ext_from_states(A, M, prev, cur):
    """dim Ext^l(N, M) given the (l-1)-th and l-th syzygies of N."""
    if cur is None:
        return 0
    dim = _cochain_dim(A, M, cur.i) - _cochain_rank(A, M, prev)
    if not is_projective(A, cur):
        dim -= _cochain_rank(A, M, cur)
    return dim


def ext_dim(A: KupischSeries, N: Indecomposable, M: Indecomposable, l: int) -> int:
    if l == 0:
        return hom_dim(A, N, M)
    orbit = syzygy_orbit(A, N)
    prev = orbit.state(l - 1)
    if prev is None or is_projective(A, prev):
        return 0
    return _ext_from_states(A, M, prev, syzygy(A, prev))


def cochain_dims(A: KupischSeries, N: Indecomposable, M: Indecomposable, upto: int) -> list[int]:
    """``dim Hom(P_j, M)`` for the terms ``P_j`` of the minimal resolution of N, j <= upto."""
    orbit = syzygy_orbit(A, N)
    out = []
    for j in range(upto + 1):
        st = orbit.state(j)
        if st is None:
            break
        out.append(_cochain_dim(A, M, st.i))
    return out


@dataclass(frozen=True)
class ExtProfile:
    source: Indecomposable
    target: Indecomposable
    dims: tuple[int, ...]
    pd: float
    preperiod: int | None = None
    period: int | None = None
    infinite: bool = False
    support: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "support",
                           tuple(l for l, d in enumerate(self.dims) if l >= 1 and d > 0))

    @property
    def horizon(self) -> int:
        return len(self.dims) - 1

    def to_json(self) -> dict:
        return {
            "source": str(self.source),
            "target": str(self.target),
            "dims": list(self.dims),
            "support": list(self.support),
            "horizon": self.horizon,
            "pd": "inf" if self.pd == INF else self.pd,
            "periodic": None if self.period is None else {"rho": self.preperiod, "pi": self.period},
            "infinite": self.infinite,
        }


def default_horizon(A: KupischSeries, N: Indecomposable) -> int:
    orbit = syzygy_orbit(A, N)
    if orbit.is_cycle:
        return max(2 * (orbit.preperiod + orbit.period), DEFAULT_MIN_HORIZON)
    return max(orbit.projective_at + 1, DEFAULT_MIN_HORIZON)


def ext_dims(A: KupischSeries, N: Indecomposable, M: Indecomposable,
             horizon: int | None = None) -> ExtProfile:
    """Dimensions of Ext^l(N, M) for 0 <= l <= horizon."""
    if horizon is None:
        horizon = default_horizon(A, N)
    orbit = syzygy_orbit(A, N)
    dims = [hom_dim(A, N, M)]
    for l in range(1, horizon + 1):
        prev = orbit.state(l - 1)
        if prev is None or is_projective(A, prev):
            dims.append(0)
        else:
            dims.append(_ext_from_states(A, M, prev, orbit.state(l)))
    infinite = orbit.is_cycle and _periodic_witness(A, N, M) is not None
    return ExtProfile(N, M, tuple(dims), orbit.pd, orbit.preperiod, orbit.period, infinite)


def ext1_via_lemma(A: KupischSeries, N: Indecomposable, M: Indecomposable) -> int:
    """dim Ext^1(N, M) as dim Hom(Omega N, M), valid when N is not projective and len N >= len M."""
    if is_projective(A, N):
        raise HypothesisViolated(f"source {N} is projective")
    if N.k < M.k:
        raise HypothesisViolated(f"need length of source >= length of target, got {N.k} < {M.k}")
    return hom_dim(A, syzygy(A, N), M)


def nonrigidity_criterion(A: KupischSeries, M: Indecomposable) -> bool:
    return A.n <= M.k <= A.c[M.i] - A.n


def is_rigid(A: KupischSeries, M: Indecomposable) -> bool:
    return ext_dim(A, M, M, 1) == 0


def hom_syzygy_dim(A: KupischSeries, M: Indecomposable, l: int) -> int:
    """dim Hom(Omega^l M, M)."""
    st = syzygy_orbit(A, M).state(l)
    if st is None:
        raise OutOfRange(f"Omega^{l} of {M} is zero (projective dimension {syzygy_orbit(A, M).pd})")
    return hom_dim(A, st, M)


def _periodic_witness(A, N, M):
    orbit = syzygy_orbit(A, N)
    rho, pi = orbit.preperiod, orbit.period
    for l in range(rho + 1, rho + pi + 1):
        if ext_dim(A, N, M, l) > 0:
            return l
    return None


@dataclass(frozen=True)
class SelfExtCertificate:
    """Ext^l(M, M) for l > preperiod depends only on l mod period; ``witness`` is a nonzero degree there."""

    infinite: bool
    pd: float
    preperiod: int | None = None
    period: int | None = None
    witness: int | None = None

    def __bool__(self):
        return self.infinite

    def to_json(self) -> dict:
        return {
            "infinite": self.infinite,
            "pd": "inf" if self.pd == INF else self.pd,
            "rho": self.preperiod,
            "pi": self.period,
            "witness_degree": self.witness,
        }


def has_infinitely_many_selfext(A: KupischSeries, M: Indecomposable) -> SelfExtCertificate:
    orbit = syzygy_orbit(A, M)
    if not orbit.is_cycle:
        return SelfExtCertificate(False, orbit.pd)
    w = _periodic_witness(A, M, M)
    return SelfExtCertificate(w is not None, INF, orbit.preperiod, orbit.period, w)
