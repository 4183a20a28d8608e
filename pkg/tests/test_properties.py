"""Property checks over the full enumerated population of small orders."""

from hypothesis import given, settings, strategies as st

from quandles import (
    are_isomorphic,
    automorphism_group,
    canonical_form,
    np_count,
    parse_matrix,
    permute,
)
from quandles.permutation import Permutation

from math import factorial


def _matrix(data, matrices_for, max_n=5):
    n = data.draw(st.integers(1, max_n))
    return data.draw(st.sampled_from(matrices_for(n)))


def _perm(data, n):
    return Permutation(data.draw(st.permutations(list(range(1, n + 1)))))


@given(data=st.data())
def test_relabelling_preserves_validity_and_class_data(data, matrices_for):
    m = _matrix(data, matrices_for)
    rho = _perm(data, m.n)
    out = permute(m, rho)
    assert out.is_standard()
    assert out.verify().valid
    assert out.trace() == m.trace()
    assert out.is_latin() == m.is_latin()
    assert out.is_connected() == m.is_connected()
    assert sorted(len(b) for b in out.orbits()) == sorted(len(b) for b in m.orbits())
    assert canonical_form(out) == canonical_form(m)


@given(data=st.data())
def test_relabelling_action_law(data, matrices_for):
    m = _matrix(data, matrices_for, max_n=4)
    sigma = _perm(data, m.n)
    tau = _perm(data, m.n)
    assert permute(permute(m, sigma), tau) == permute(m, tau.compose(sigma))
    assert permute(m, Permutation.identity(m.n)) == m


@given(data=st.data())
def test_witness_recovery(data, matrices_for):
    m = _matrix(data, matrices_for, max_n=4)
    rho = _perm(data, m.n)
    out = permute(m, rho)
    witness = are_isomorphic(m, out)
    assert witness is not None
    assert permute(m, witness) == out


@given(data=st.data())
def test_dual_is_involution(data, matrices_for):
    m = _matrix(data, matrices_for)
    d = m.dual()
    assert d.verify().valid
    assert d.dual() == m


@given(data=st.data())
def test_structural_invariants(data, matrices_for):
    m = _matrix(data, matrices_for)
    n = m.n
    assert m.trace() == n * (n + 1) // 2
    if m.is_latin():
        assert m.is_connected()
    assert (len(m.orbits()) == 1) == m.is_connected()
    for j in range(1, n + 1):
        assert m.column_permutation(j)(j) == j
    assert m.standardized() is m


@settings(max_examples=40)
@given(data=st.data())
def test_orbit_stabilizer(data, matrices_for):
    m = _matrix(data, matrices_for)
    assert np_count(m) * automorphism_group(m).order == factorial(m.n)


@given(data=st.data())
def test_text_roundtrip(data, matrices_for):
    m = _matrix(data, matrices_for)
    assert parse_matrix(m.to_text()) == m
