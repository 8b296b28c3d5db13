"""Indecomposable modules over a Nakayama algebra and their homological dimensions.

Every indecomposable is uniserial, ``M(i, k) = e_i A / e_i J^k`` with top
``S_i`` and length ``1 <= k <= c_i``.  Syzygies of uniserials are uniserial,
so minimal projective resolutions are walks on the finite set of
``(vertex, length)`` pairs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .errors import InvalidModule
from .kupisch import KupischSeries, loewy_length, opposite, path_count

INF = math.inf


class Indecomposable(NamedTuple):
    i: int
    k: int

    def __str__(self):
        return f"{self.i},{self.k}"


def indecomposable(A: KupischSeries, i: int, k: int) -> Indecomposable:
    if not 0 <= i < A.n:
        raise InvalidModule(f"vertex {i} out of range 0..{A.n - 1}")
    if not 1 <= k <= A.c[i]:
        raise InvalidModule(f"length {k} out of range 1..{A.c[i]} at vertex {i}")
    return Indecomposable(i, k)


def parse_module(A: KupischSeries, text: str) -> Indecomposable:
    try:
        i, k = (int(x) for x in text.split(","))
    except ValueError:
        raise InvalidModule(f"cannot parse module {text!r}; expected 'i,k'") from None
    return indecomposable(A, i, k)


def all_modules(A: KupischSeries) -> list[Indecomposable]:
    return [Indecomposable(i, k) for i in A.vertices() for k in range(1, A.c[i] + 1)]


def simple(A: KupischSeries, i: int) -> Indecomposable:
    return indecomposable(A, i, 1)


def projective(A: KupischSeries, i: int) -> Indecomposable:
    return Indecomposable(i, A.c[i])


def is_projective(A: KupischSeries, M: Indecomposable) -> bool:
    return M.k == A.c[M.i]


def top(A: KupischSeries, M: Indecomposable) -> int:
    return M.i


def socle(A: KupischSeries, M: Indecomposable) -> int:
    return A.shift(M.i, M.k - 1)


def dimension_vector(A: KupischSeries, M: Indecomposable) -> list[int]:
    return [sum(path_count(A, M.i, v, l) for l in range(M.k)) for v in A.vertices()]


def syzygy(A: KupischSeries, M: Indecomposable) -> Indecomposable | None:
    """Kernel of the projective cover: ``M(i + k, c_i - k)``, or None for projectives."""
    if is_projective(A, M):
        return None
    j = A.shift(M.i, M.k)
    length = A.c[M.i] - M.k
    assert j is not None and 1 <= length <= A.c[j], (A, M)
    return Indecomposable(j, length)


@dataclass(frozen=True)
class SyzygyOrbit:
    """``states[j]`` is the j-th syzygy.

    Either a projective is reached at ``projective_at`` (the projective
    dimension), or ``states[preperiod + period] == states[preperiod]`` and
    the orbit cycles forever.
    """

    states: tuple[Indecomposable, ...]
    projective_at: int | None = None
    preperiod: int | None = None
    period: int | None = None

    @property
    def pd(self):
        return INF if self.projective_at is None else self.projective_at

    @property
    def is_cycle(self) -> bool:
        return self.projective_at is None

    def state(self, j: int) -> Indecomposable | None:
        """j-th syzygy, None once the resolution has ended."""
        if j < len(self.states):
            return self.states[j]
        if not self.is_cycle:
            return None
        rho, pi = self.preperiod, self.period
        return self.states[rho + (j - rho) % pi]


@lru_cache(maxsize=None)
def syzygy_orbit(A: KupischSeries, M: Indecomposable) -> SyzygyOrbit:
    seen: dict[Indecomposable, int] = {}
    states: list[Indecomposable] = []
    cur = M
    while True:
        if cur in seen:
            rho = seen[cur]
            pi = len(states) - rho
            assert rho + pi <= A.n * loewy_length(A)
            return SyzygyOrbit(tuple(states), preperiod=rho, period=pi)
        seen[cur] = len(states)
        states.append(cur)
        nxt = syzygy(A, cur)
        if nxt is None:
            return SyzygyOrbit(tuple(states), projective_at=len(states) - 1)
        cur = nxt


def projective_dimension(A: KupischSeries, M: Indecomposable):
    return syzygy_orbit(A, M).pd


_opposite = lru_cache(maxsize=None)(opposite)


def dual(A: KupischSeries, M: Indecomposable) -> Indecomposable:
    """D(M) over the opposite algebra: same length, top at the socle of M."""
    return Indecomposable(socle(A, M), M.k)


def injective_dimension(A: KupischSeries, M: Indecomposable):
    return projective_dimension(_opposite(A), dual(A, M))


def is_injective(A: KupischSeries, M: Indecomposable) -> bool:
    return is_projective(_opposite(A), dual(A, M))


@lru_cache(maxsize=None)
def global_dimension(A: KupischSeries):
    return max(projective_dimension(A, Indecomposable(i, 1)) for i in A.vertices())


@dataclass(frozen=True)
class GorensteinData:
    right_injdim: float
    left_injdim: float
    is_gorenstein: bool


def _regular_injdim(A: KupischSeries):
    return max(injective_dimension(A, projective(A, i)) for i in A.vertices())


@lru_cache(maxsize=None)
def gorenstein(A: KupischSeries) -> GorensteinData:
    right = _regular_injdim(A)
    left = _regular_injdim(_opposite(A))
    ok = right != INF and left != INF
    if ok:
        assert right == left, (A, right, left)
    return GorensteinData(right, left, ok)


def find_nonrigid_witness(A: KupischSeries) -> Indecomposable | None:
    """``M(i, n)`` for the smallest vertex with ``c_i >= 2n``."""
    for i in A.vertices():
        if A.c[i] >= 2 * A.n:
            return Indecomposable(i, A.n)
    return None
