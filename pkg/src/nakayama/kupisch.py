"""Kupisch series: the combinatorial data determining a Nakayama algebra.

Vertex convention: the indecomposable projective at vertex ``i`` has
composition factors ``S_i, S_{i+1}, ..., S_{i+c_i-1}`` read from the top,
so taking radicals moves the top one step along the quiver.  Opposite
algebras keep the vertex labels and instead run the quiver backwards;
this is recorded by the ``reversed`` flag, which flips the direction of
every step.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import InvalidSeries

CYCLIC = "cyclic"
LINEAR = "linear"
KINDS = (CYCLIC, LINEAR)


@dataclass(frozen=True)
class KupischSeries:
    kind: str
    c: tuple[int, ...]
    reversed: bool = False

    def __post_init__(self):
        object.__setattr__(self, "c", tuple(int(x) for x in self.c))
        _check(self.kind, self.c, self.reversed)

    @property
    def n(self) -> int:
        return len(self.c)

    @property
    def step(self) -> int:
        return -1 if self.reversed else 1

    @property
    def is_cyclic(self) -> bool:
        return self.kind == CYCLIC

    def __getitem__(self, i: int) -> int:
        # c_i is defined for all integers on a cycle
        if self.is_cyclic:
            return self.c[i % self.n]
        return self.c[i]

    def __len__(self) -> int:
        return self.n

    def __iter__(self):
        # without this, iteration would fall back to the wrapping __getitem__ and never stop
        return iter(self.c)

    def vertex(self, i: int) -> int:
        return i % self.n if self.is_cyclic else i

    def shift(self, i: int, length: int) -> int | None:
        """Endpoint of the path of the given length starting at ``i`` (None if it leaves the quiver)."""
        v = i + self.step * length
        if self.is_cyclic:
            return v % self.n
        return v if 0 <= v < self.n else None

    def vertices(self) -> range:
        return range(self.n)

    def __str__(self) -> str:
        return format_series(self)


def _check(kind: str, c: Sequence[int], rev: bool) -> None:
    if kind not in KINDS:
        raise InvalidSeries(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    if len(c) == 0:
        raise InvalidSeries("series must be non-empty")
    for idx, x in enumerate(c):
        if x < 1:
            raise InvalidSeries(f"entries must be >= 1, got c_{idx} = {x}", idx)
    n = len(c)
    step = -1 if rev else 1
    if kind == CYCLIC:
        for i in range(n):
            if c[i] < 2:
                raise InvalidSeries(f"cyclic series need c_{i} >= 2, got {c[i]}", i)
            j = (i + step) % n
            if c[j] < c[i] - 1:
                raise InvalidSeries(f"c_{j} = {c[j]} < c_{i} - 1 = {c[i] - 1}", j)
        return
    if n < 2:
        raise InvalidSeries("linear series need at least 2 vertices (n = 1 is semisimple)")
    sink = 0 if rev else n - 1
    order = range(n - 1, -1, -1) if rev else range(n)
    for i in order:
        if i == sink:
            if c[i] != 1:
                raise InvalidSeries(f"linear series need c_{i} = 1 at the sink, got {c[i]}", i)
            continue
        if c[i] < 2:
            raise InvalidSeries(f"linear series need c_{i} >= 2 away from the sink, got {c[i]}", i)
        j = i + step
        if c[j] < c[i] - 1:
            raise InvalidSeries(f"c_{j} = {c[j]} < c_{i} - 1 = {c[i] - 1}", j)


def validate(kind: str, seq: Sequence[int]) -> KupischSeries:
    """Build a Kupisch series in the standard orientation, raising InvalidSeries on bad input."""
    return KupischSeries(kind, tuple(seq))


def loewy_length(A: KupischSeries) -> int:
    return max(A.c)


def is_selfinjective(A: KupischSeries) -> bool:
    return A.is_cyclic and len(set(A.c)) == 1


def path_count(A: KupischSeries, i: int, s: int, length: int) -> int:
    """1 if there is a path of the given length from ``i`` to ``s`` in the quiver, else 0.

    No truncation by the Loewy lengths is applied.
    """
    if length < 0:
        return 0
    d = A.step * (s - i)
    if A.is_cyclic:
        return int((length - d) % A.n == 0)
    return int(d == length)


def opposite(A: KupischSeries) -> KupischSeries:
    """Kupisch series of the opposite algebra.

    Vertex ``j`` keeps its label; its projective has Loewy length equal to
    the number of nonzero paths of ``A`` ending at ``j``.
    """
    L = loewy_length(A)
    cop = []
    for j in A.vertices():
        count = 0
        for length in range(L):
            u = j - A.step * length
            if A.is_cyclic:
                u %= A.n
            elif not 0 <= u < A.n:
                break
            if A.c[u] > length:
                count += 1
        cop.append(count)
    return KupischSeries(A.kind, tuple(cop), not A.reversed)


def min_rotation(c: Sequence[int]) -> tuple[int, ...]:
    c = tuple(c)
    return min(c[r:] + c[:r] for r in range(len(c)))


def enumerate_series(kind: str, n: int, L_max: int,
                     dedupe_rotations: bool = False) -> Iterator[KupischSeries]:
    """Yield every valid series with ``n`` vertices and entries at most ``L_max``, lexicographically."""
    lo = 2 if kind == CYCLIC else 1
    for c in itertools.product(range(lo, L_max + 1), repeat=n):
        try:
            A = KupischSeries(kind, c)
        except InvalidSeries:
            continue
        if dedupe_rotations and kind == CYCLIC and c != min_rotation(c):
            continue
        yield A


def format_series(A: KupischSeries) -> str:
    prefix = A.kind + ("-op" if A.reversed else "")
    return prefix + ":" + ",".join(str(x) for x in A.c)


def parse_series(text: str, default_kind: str = CYCLIC) -> KupischSeries:
    """Parse ``kind:c0,c1,...`` (kind optional, ``-op`` suffix marks a reversed quiver)."""
    text = text.strip()
    kind, rev = default_kind, False
    if ":" in text:
        kind, _, text = text.partition(":")
        kind = kind.strip()
        if kind.endswith("-op"):
            kind, rev = kind[:-3], True
    try:
        c = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise InvalidSeries(f"cannot parse series {text!r}; expected comma-separated integers") from None
    return KupischSeries(kind, c, rev)
