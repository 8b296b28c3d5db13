import itertools

import pytest
from hypothesis import assume, strategies as st

from nakayama.kupisch import KupischSeries, enumerate_series


def all_cyclic(n_max, L_max, dedupe=False):
    return [A for n in range(1, n_max + 1) for A in enumerate_series("cyclic", n, L_max, dedupe)]


def all_linear(n_max, L_max=None):
    return [A for n in range(2, n_max + 1) for A in enumerate_series("linear", n, L_max or n)]


@st.composite
def kupisch_series(draw, n_max=4, L_max=10, kinds=("cyclic", "linear")):
    kind = draw(st.sampled_from(kinds))
    lo = 1 if kind == "cyclic" else 2
    n = draw(st.integers(lo, n_max))
    if kind == "linear":
        # build backwards from the sink: c_{i} <= c_{i+1} + 1
        c = [1]
        for _ in range(n - 1):
            c.append(draw(st.integers(2, min(L_max, c[-1] + 1))))
        return KupischSeries("linear", tuple(reversed(c)))
    c = [draw(st.integers(2, L_max))]
    for _ in range(n - 1):
        c.append(draw(st.integers(max(2, c[-1] - 1), L_max)))
    # wrap-around constraint c_0 >= c_{n-1} - 1
    assume(c[0] >= c[-1] - 1)
    return KupischSeries("cyclic", tuple(c))


def brute_force_valid(kind, c):
    n = len(c)
    if kind == "cyclic":
        return all(x >= 2 for x in c) and all(c[(i + 1) % n] >= c[i] - 1 for i in range(n))
    return (n >= 2 and c[-1] == 1 and all(x >= 2 for x in c[:-1])
            and all(c[i + 1] >= c[i] - 1 for i in range(n - 1)))


@pytest.fixture(scope="session")
def small_cyclic():
    return all_cyclic(3, 6)


@pytest.fixture(scope="session")
def small_linear():
    return all_linear(5)


def brute_force_series(kind, n, L_max):
    return [c for c in itertools.product(range(1, L_max + 1), repeat=n) if brute_force_valid(kind, c)]
