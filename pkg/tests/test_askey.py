from math import comb

import pytest
from hypothesis import given, settings

from corpus import fixtures, valid_arrays
from leonard.askey import (
    askey_data,
    inverse_identity_check,
    local_scalar_sums_check,
    orthogonality_check,
    reconcile_walk,
    recurrence_check,
    row_sum_check,
    trace_identity_check,
    walk_identity_check,
)
from leonard.families import krawtchouk_array, krawtchouk_p
from leonard.field import GF, Q
from leonard.matrix import Matrix
from leonard.params import local_scalars

KRAWTCHOUK_3_P = Matrix(Q, [[1, 3, 3, 1], [1, 1, -1, -1], [1, -1, -1, 1], [1, -3, 3, -1]])


def test_krawtchouk_three():
    data = askey_data(krawtchouk_array(3))
    assert data.P == KRAWTCHOUK_3_P
    assert data.P_star == KRAWTCHOUK_3_P
    assert data.k == data.k_star == tuple(Q(x) for x in (1, 3, 3, 1))
    assert data.nu == 8
    assert data.P @ data.P == Matrix.identity(Q, 4).scale(8)


@pytest.mark.parametrize("d", range(11))
def test_krawtchouk_against_hypergeometric_sum(d):
    pa = krawtchouk_array(d)
    data = askey_data(pa)
    assert data.P == krawtchouk_p(d)
    assert data.P == data.P_star
    assert data.nu == 2**d
    assert data.k == tuple(Q(comb(d, j)) for j in range(d + 1))
    sc = local_scalars(pa)
    assert all(x == 0 for x in sc.a + sc.a_star)


def test_krawtchouk_over_finite_field():
    pa = krawtchouk_array(4, GF(11))
    assert askey_data(pa).P == krawtchouk_p(4, GF(11))


def test_walk_reconciliation_krawtchouk():
    rec = reconcile_walk(krawtchouk_array(3))
    # theta*_0 - theta*_k for k = 1, 2, 3 is 2, 4, 6
    assert rec.predicted_ratio == 48 and rec.implied_ratio == 48
    assert rec.consistent and rec.weight == KRAWTCHOUK_3_P


@pytest.mark.parametrize("name", sorted(n for n, pa in fixtures().items() if pa.d <= 6))
def test_identities_on_fixtures(name):
    pa = fixtures()[name]
    data = askey_data(pa)
    assert inverse_identity_check(pa, data)
    assert trace_identity_check(pa)
    assert orthogonality_check(pa, data)
    assert recurrence_check(pa, data)
    assert row_sum_check(pa)
    assert walk_identity_check(pa, data)
    assert local_scalar_sums_check(pa)


@settings(max_examples=25, deadline=None)
@given(valid_arrays(max_d=4))
def test_identities_on_random_arrays(pa):
    data = askey_data(pa)
    assert inverse_identity_check(pa, data)
    assert orthogonality_check(pa, data)
    assert recurrence_check(pa, data)
    assert walk_identity_check(pa, data)


def test_first_row_and_column():
    for pa in fixtures().values():
        data = askey_data(pa)
        n = pa.d + 1
        assert all(data.P[i, 0] == 1 for i in range(n))
        assert all(data.P[0, j] == data.k[j] for j in range(n))


def test_corrupted_data_is_caught():
    pa = krawtchouk_array(3)
    data = askey_data(pa)
    bad = askey_data(pa).__class__(data.poly, data.P, data.P_star, data.k, data.k_star, data.nu + 1)
    assert not inverse_identity_check(pa, bad)
    assert not orthogonality_check(pa, bad)
