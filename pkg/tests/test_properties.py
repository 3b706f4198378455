from math import comb

from hypothesis import given, settings
from hypothesis import strategies as st

from synchq.involutions import phi, phi_inverse, tau
from synchq.qpoly import ZERO, QPoly
from synchq.qseries import gauss_binomial
from synchq.syncpart import RootedSyncPartition, SyncPartition
from strategies import qpolys, zqlaurents

fixed = settings(max_examples=1000, derandomize=True, deadline=None)


@fixed
@given(qpolys, qpolys, qpolys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO


@fixed
@given(qpolys, st.integers(0, 12))
def test_truncate_noop_above_degree(a, extra):
    d = a.degree()
    assert a.truncate((d or 0) + extra) == a


@fixed
@given(zqlaurents, zqlaurents)
def test_product_rule(a, b):
    assert (a * b).derivative() == a.derivative() * b + a * b.derivative()


@fixed
@given(zqlaurents, zqlaurents)
def test_eval_z1_multiplicative(a, b):
    assert (a * b).eval_z1() == a.eval_z1() * b.eval_z1()


@fixed
@given(st.integers(0, 30).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n))))
def test_gauss_binomial_properties(nk):
    n, k = nk
    g = gauss_binomial(n, k)
    assert g == gauss_binomial(n, n - k)
    assert g.degree() == k * (n - k)
    assert all(c > 0 for _, c in g)
    assert g.eval_at(1) == comb(n, k)


def _distinct(lo, hi):
    return st.sets(st.integers(lo, hi), max_size=6).map(lambda s: tuple(sorted(s, reverse=True)))


rooted = st.tuples(_distinct(1, 9), _distinct(0, 9)).filter(
    lambda ab: len(ab[0]) != len(ab[1])
).flatmap(lambda ab: st.integers(1, abs(len(ab[0]) - len(ab[1]))).map(
    lambda bar: RootedSyncPartition(SyncPartition(*ab), bar)))


@fixed
@given(rooted)
def test_tau_phi_properties(s):
    if s.degenerate:
        t = phi(s)
        assert not t.has_zero and t.sign == s.sign and t.weight == s.weight
        assert phi_inverse(t) == s
    else:
        t = tau(s, (9, 9))
        assert tau(t) == s and t.sign == -s.sign and t.weight == s.weight
        assert not t.degenerate
