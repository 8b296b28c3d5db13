import pytest
from hypothesis import given, settings, strategies as st

from conftest import all_cyclic, all_linear, kupisch_series
from nakayama.errors import HypothesisViolated, OutOfRange
from nakayama.homext import (cochain_dims, default_horizon, ext1_via_lemma, ext_dim, ext_dims,
                             has_infinitely_many_selfext, hom_dim, hom_syzygy_dim, is_rigid,
                             nonrigidity_criterion)
from nakayama import oracle
from nakayama.kupisch import is_selfinjective, validate
from nakayama.modrep import (INF, Indecomposable, all_modules, is_projective,
                             projective_dimension, syzygy_orbit)

A3 = validate("cyclic", [3])
A23 = validate("cyclic", [2, 3])
A44 = validate("cyclic", [4, 4])


def test_hom_dim_examples():
    M = Indecomposable(0, 2)
    assert hom_dim(A3, M, M) == 2
    A22 = validate("cyclic", [2, 2])
    assert hom_dim(A22, Indecomposable(0, 1), Indecomposable(0, 1)) == 1
    assert hom_dim(A22, Indecomposable(0, 1), Indecomposable(1, 1)) == 0


def brute_hom_dim(A, N, M):
    # left multiplications by paths z: i -> s of length < k with z * (paths of length t) = 0 in M
    (s, t), (i, k) = N, M
    count = 0
    for length in range(k):
        if A.shift(i, length) == s and length + t >= k:
            count += 1
    return count


@pytest.mark.parametrize("A", all_cyclic(3, 8) + all_linear(6), ids=str)
def test_hom_dim_brute_force(A):
    mods = all_modules(A)
    for N in mods:
        for M in mods:
            assert hom_dim(A, N, M) == brute_hom_dim(A, N, M)


def test_ext_dims_examples():
    M = Indecomposable(0, 2)
    prof = ext_dims(A3, M, M, 6)
    assert prof.dims[2] == 1
    assert prof.dims == (2, 1, 1, 1, 1, 1, 1)
    S0 = Indecomposable(0, 1)
    prof = ext_dims(A23, S0, S0, 5)
    assert prof.dims == (1, 0, 1, 0, 0, 0)
    assert prof.support == (2,) and prof.pd == 2 and not prof.infinite
    for N in (Indecomposable(0, 2), Indecomposable(1, 3)):
        for M in all_modules(A23):
            assert all(d == 0 for d in ext_dims(A23, N, M, 10).dims[1:])


def test_ext_profile_json():
    prof = ext_dims(A3, Indecomposable(0, 1), Indecomposable(0, 1), 4)
    js = prof.to_json()
    assert js["source"] == "0,1" and js["target"] == "0,1"
    assert js["dims"] == [1, 1, 1, 1, 1]
    assert js["support"] == [1, 2, 3, 4]
    assert js["periodic"] == {"rho": 0, "pi": 2}
    assert js["infinite"] is True and js["pd"] == "inf"


def test_default_horizon():
    assert default_horizon(A3, Indecomposable(0, 1)) == 50
    assert len(ext_dims(A3, Indecomposable(0, 1), Indecomposable(0, 1)).dims) == 51


def test_ext1_via_lemma():
    M = Indecomposable(0, 2)
    assert ext1_via_lemma(A3, M, M) == 1 == ext_dim(A3, M, M, 1)
    assert ext1_via_lemma(A44, M, M) >= 1
    assert ext1_via_lemma(A44, M, M) == ext_dim(A44, M, M, 1)
    with pytest.raises(HypothesisViolated):
        ext1_via_lemma(A23, Indecomposable(0, 1), Indecomposable(0, 2))
    with pytest.raises(HypothesisViolated):
        ext1_via_lemma(A23, Indecomposable(1, 3), Indecomposable(0, 1))


def test_rigidity_examples():
    assert not is_rigid(A44, Indecomposable(0, 2))
    assert nonrigidity_criterion(A44, Indecomposable(0, 2))
    A22 = validate("cyclic", [2, 2])
    for M in all_modules(A22):
        assert is_rigid(A22, M) and not nonrigidity_criterion(A22, M)
    S = Indecomposable(0, 1)
    assert not is_rigid(A3, S) and ext_dim(A3, S, S, 1) == 1


@pytest.mark.parametrize("A", all_cyclic(3, 8) + all_linear(6), ids=str)
def test_lemma_sweep(A):
    mods = all_modules(A)
    for M in mods:
        assert is_rigid(A, M) != nonrigidity_criterion(A, M)
    for N in mods:
        if is_projective(A, N):
            continue
        for M in mods:
            if N.k >= M.k:
                assert ext1_via_lemma(A, N, M) == ext_dim(A, N, M, 1)


def test_hom_syzygy_dim_examples():
    M = Indecomposable(0, 2)
    assert hom_syzygy_dim(A3, M, 2) == 2 and ext_dim(A3, M, M, 2) == 1
    M = Indecomposable(1, 2)
    assert hom_syzygy_dim(A23, M, 2) == 1 and ext_dim(A23, M, M, 2) == 0
    M = Indecomposable(0, 2)
    for l in range(1, 21):
        assert hom_syzygy_dim(A44, M, l) == ext_dim(A44, M, M, l)
    with pytest.raises(OutOfRange):
        hom_syzygy_dim(A23, Indecomposable(0, 1), 3)
    assert hom_syzygy_dim(A23, Indecomposable(0, 2), 0) == 1


def test_has_infinitely_many_selfext_examples():
    cert = has_infinitely_many_selfext(A44, Indecomposable(0, 2))
    assert cert and cert.witness is not None
    cert = has_infinitely_many_selfext(A23, Indecomposable(0, 1))
    assert not cert and cert.pd == 2
    S = Indecomposable(0, 1)
    cert = has_infinitely_many_selfext(A3, S)
    assert cert and (cert.preperiod, cert.period) == (0, 2)
    assert set(ext_dims(A3, S, S, 30).dims[1:]) == {1}


def test_has_infinitely_many_can_be_false_for_infinite_pd():
    # S_0 over (3, 4) has a periodic syzygy orbit but no self-extensions at all
    A = validate("cyclic", [3, 4])
    S = Indecomposable(0, 1)
    assert projective_dimension(A, S) == INF
    assert not has_infinitely_many_selfext(A, S)
    assert all(d == 0 for d in ext_dims(A, S, S, 20).dims[1:])
    assert all(oracle.ext_dim_oracle(A, S, S, l) == 0 for l in range(1, 7))


@pytest.mark.parametrize("A", all_cyclic(4, 10, dedupe=True) + all_linear(6), ids=str)
def test_periodicity_certificate(A):
    # the certificate equals "support meets the tail of the horizon"
    for M in all_modules(A):
        cert = has_infinitely_many_selfext(A, M)
        prof = ext_dims(A, M, M)
        if not cert:
            if cert.preperiod is not None:
                assert all(prof.dims[l] == 0 for l in range(cert.preperiod + 1, prof.horizon + 1))
            continue
        rho, pi = cert.preperiod, cert.period
        for l in range(rho + 1, prof.horizon + 1 - pi):
            assert prof.dims[l] == prof.dims[l + pi]
        assert prof.dims[cert.witness] > 0


@pytest.mark.parametrize("A", all_cyclic(3, 8) + all_linear(6), ids=str)
def test_internal_consistency_and_euler(A):
    mods = all_modules(A)
    for N in mods:
        pd = projective_dimension(A, N)
        for M in mods:
            prof = ext_dims(A, N, M, 12)
            assert prof.dims[0] == hom_dim(A, N, M)
            if pd != INF:
                assert all(d == 0 for d in prof.dims[pd + 1:])
                C = cochain_dims(A, N, M, pd)
                assert len(C) == pd + 1
                lhs = sum((-1) ** l * prof.dims[l] for l in range(pd + 1))
                rhs = sum((-1) ** j * C[j] for j in range(pd + 1))
                assert lhs == rhs


@pytest.mark.parametrize("n,w", [(n, w) for n in range(1, 6) for w in range(2, 11)])
def test_selfinjective_ext_equals_hom_syzygy(n, w):
    A = validate("cyclic", [w] * n)
    for M in all_modules(A):
        if is_projective(A, M) or 2 * M.k > w:
            continue
        for l in range(1, 2 * n * w + 1):
            assert ext_dim(A, M, M, l) == hom_syzygy_dim(A, M, l)


def test_selfinjective_hypothesis_is_sharp():
    M = Indecomposable(0, 2)
    assert 2 * M.k > 3
    assert ext_dim(A3, M, M, 2) != hom_syzygy_dim(A3, M, 2)


@pytest.mark.parametrize("n,w", [(n, w) for n in range(1, 6) for w in range(2, 11)])
def test_selfinjective_nonrigid_all_degrees(n, w):
    A = validate("cyclic", [w] * n)
    assert is_selfinjective(A)
    for M in all_modules(A):
        if is_rigid(A, M):
            continue
        prof = ext_dims(A, M, M, 60)
        assert all(d > 0 for d in prof.dims[1:])
        assert has_infinitely_many_selfext(A, M)


@settings(max_examples=150, deadline=None)
@given(kupisch_series(n_max=5, L_max=12), st.data())
def test_property_ext_shift(A, data):
    """Ext^l(N, M) = Ext^1(Omega^{l-1} N, M) along the resolution."""
    mods = all_modules(A)
    N = data.draw(st.sampled_from(mods))
    M = data.draw(st.sampled_from(mods))
    l = data.draw(st.integers(1, 15))
    W = syzygy_orbit(A, N).state(l - 1)
    if W is None:
        assert ext_dim(A, N, M, l) == 0
    else:
        assert ext_dim(A, N, M, l) == ext_dim(A, W, M, 1)
    assert ext_dim(A, N, M, l) >= 0
    assert ext_dims(A, N, M, l).dims[l] == ext_dim(A, N, M, l)
