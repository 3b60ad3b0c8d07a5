import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from primelattice import DomainError, ExponentVector, PrimeSupport, factorize
from primelattice.lattice import add, align, dominates, join, meet, reconstruct

nonzero_ints = st.integers(min_value=-(10**6), max_value=10**6).filter(lambda v: v != 0)


def _vectors_for(*values):
    return align([factorize(abs(v)) for v in values])


def test_align_60_90():
    support, (v60, v90) = _vectors_for(60, 90)
    assert support.primes == (2, 3, 5)
    assert v60.exponents == (2, 1, 1)
    assert v90.exponents == (1, 2, 1)


def test_align_pads_missing_primes_with_zero():
    support, (v2, v3) = _vectors_for(2, 3)
    assert support.primes == (2, 3)
    assert v2.exponents == (1, 0)
    assert v3.exponents == (0, 1)


def test_align_of_ones():
    support, vectors = _vectors_for(1, 1)
    assert support.primes == ()
    assert all(v.exponents == () for v in vectors)


def test_meet_join_pointwise():
    _, (a, b) = _vectors_for(60, 90)
    assert meet([a, b]).exponents == (1, 1, 1)
    assert join([a, b]).exponents == (2, 2, 1)


def test_add_is_multiplication():
    _, (a, b) = _vectors_for(24, 16)
    assert reconstruct(add(a, b)) == 24 * 16


def test_dominates_is_divisibility():
    _, (a, b, c) = _vectors_for(12, 6, 8)
    assert dominates(a, b)          # 6 divides 12
    assert not dominates(b, a)
    assert not dominates(a, c)      # 8 does not divide 12


def test_mismatched_supports_are_an_error():
    _, (a,) = _vectors_for(6)
    _, (b,) = _vectors_for(10)
    for op in (lambda: meet([a, b]), lambda: join([a, b]), lambda: add(a, b), lambda: dominates(a, b)):
        with pytest.raises(DomainError):
            op()


def test_equal_supports_from_separate_align_calls_are_compatible():
    _, (a,) = _vectors_for(12)
    _, (b,) = _vectors_for(18)
    # both supports are exactly (2, 3), so the vectors are comparable
    assert reconstruct(meet([a, b])) == 6


def test_empty_vector_list_rejected():
    with pytest.raises(DomainError):
        meet([])
    with pytest.raises(DomainError):
        align([])


def test_support_validation():
    with pytest.raises(DomainError):
        PrimeSupport((4,))
    with pytest.raises(DomainError):
        PrimeSupport((3, 2))
    with pytest.raises(DomainError):
        PrimeSupport((5, 5))
    assert len(PrimeSupport(())) == 0


def test_vector_validation():
    support = PrimeSupport((2, 5))
    with pytest.raises(DomainError):
        ExponentVector(support, (1,))
    with pytest.raises(DomainError):
        ExponentVector(support, (1, -1))
    assert ExponentVector(support, (0, 3)).exponents == (0, 3)


@given(nonzero_ints, nonzero_ints)
def test_meet_reconstructs_to_gcd(x, y):
    _, (a, b) = _vectors_for(x, y)
    assert reconstruct(meet([a, b])) == math.gcd(x, y)


@given(nonzero_ints, nonzero_ints)
def test_join_reconstructs_to_lcm(x, y):
    _, (a, b) = _vectors_for(x, y)
    assert reconstruct(join([a, b])) == math.lcm(x, y)


@given(nonzero_ints, nonzero_ints, nonzero_ints)
def test_lattice_laws(x, y, z):
    _, (a, b, c) = _vectors_for(x, y, z)
    assert meet([a, b]) == meet([b, a])
    assert join([a, b]) == join([b, a])
    assert meet([a, a]) == a
    assert join([a, a]) == a
    assert meet([meet([a, b]), c]) == meet([a, meet([b, c])])
    assert join([join([a, b]), c]) == join([a, join([b, c])])
    # absorption ties the two operations together
    assert join([a, meet([a, b])]) == a
    assert meet([a, join([a, b])]) == a


@given(nonzero_ints, nonzero_ints)
def test_meet_and_join_bound_their_arguments(x, y):
    _, (a, b) = _vectors_for(x, y)
    low, high = meet([a, b]), join([a, b])
    assert dominates(a, low) and dominates(b, low)
    assert dominates(high, a) and dominates(high, b)


@given(nonzero_ints, nonzero_ints)
def test_add_matches_integer_product(x, y):
    _, (a, b) = _vectors_for(x, y)
    assert reconstruct(add(a, b)) == abs(x) * abs(y)
