"""Permutations, the dihedral group, and the two sign characters."""

import itertools
from random import Random

import pytest
from hypothesis import given, strategies as st

from dihedrant.perm import (
    DihedralElement,
    DihedralKind,
    Permutation,
    ResourceLimitError,
    compose,
    dihedral_group,
    find_dihedral_element,
    identity_perm,
    inverse,
    mod1,
    reflection_perm,
    rotation_perm,
    sgn,
    sig,
    symmetric_group,
)


def perms_of(n: int):
    return st.permutations(tuple(range(1, n + 1))).map(lambda xs: Permutation(tuple(xs)))


# ---------------------------------------------------------------------------
# construction and validation

def test_permutation_rejects_non_bijections():
    with pytest.raises(ValueError):
        Permutation((1, 1, 3))
    with pytest.raises(ValueError):
        Permutation((0, 1, 2))
    with pytest.raises(ValueError):
        Permutation(())


def test_permutation_is_one_based():
    s = Permutation((3, 1, 2))
    assert s(1) == 3 and s(2) == 1 and s(3) == 2
    with pytest.raises(ValueError):
        s(0)
    with pytest.raises(ValueError):
        s(4)


def test_mod1_wraps_into_range():
    assert [mod1(x, 4) for x in range(-3, 10)] == [1, 2, 3, 4, 1, 2, 3, 4, 1, 2, 3, 4, 1]


@given(st.integers(1, 8).flatmap(perms_of))
def test_images_are_always_a_bijection(s):
    assert sorted(s.images) == list(range(1, s.n + 1))


# ---------------------------------------------------------------------------
# rotations and reflections

def test_rotation_values():
    assert rotation_perm(5, 3).images == (3, 4, 5, 1, 2)
    assert rotation_perm(4, 1) == identity_perm(4)
    # mod1(i+3, 4) for i = 1..4, worked by hand
    assert rotation_perm(4, 4).images == (4, 1, 2, 3)


def test_rotation_defining_values():
    # rho_k(1) = k, rho_k(n-k+1) = n, rho_k(n-k+2) = 1, rho_k(n) = k-1
    for n in range(2, 9):
        for k in range(2, n + 1):
            rho = rotation_perm(n, k)
            assert rho(1) == k
            assert rho(n - k + 1) == n
            assert rho(n - k + 2) == 1
            assert rho(n) == k - 1


def test_reflection_values():
    assert reflection_perm(4, 4).images == (4, 3, 2, 1)
    # mu_1 at n=3 fixes vertex 1 and swaps 2,3 (axis through vertex 1)
    assert reflection_perm(3, 1).images == (1, 3, 2)
    assert reflection_perm(2, 1).images == (1, 2)


def test_reflection_defining_values():
    # mu_k(1) = k, mu_k(2) = k-1, mu_k(k) = 1, mu_k(k+1) = n, mu_k(n) = k+1
    for n in range(3, 9):
        for k in range(2, n):
            mu = reflection_perm(n, k)
            assert mu(1) == k
            assert mu(2) == k - 1
            assert mu(k) == 1
            assert mu(k + 1) == n
            assert mu(n) == k + 1


def test_index_out_of_range_is_rejected():
    for bad in (0, 5, -1):
        with pytest.raises(ValueError):
            rotation_perm(4, bad)
        with pytest.raises(ValueError):
            reflection_perm(4, bad)


# ---------------------------------------------------------------------------
# group enumeration

def test_dihedral_group_order_and_layout():
    for n in range(1, 9):
        elems = dihedral_group(n)
        assert len(elems) == 2 * n
        assert [e.kind for e in elems[:n]] == [DihedralKind.ROTATION] * n
        assert [e.kind for e in elems[n:]] == [DihedralKind.REFLECTION] * n
        assert [e.index for e in elems] == list(range(1, n + 1)) * 2


def test_dihedral_group_n3_is_full_symmetric_group():
    assert {e.perm.images for e in dihedral_group(3)} == {
        p.images for p in symmetric_group(3)
    }


def test_dihedral_group_small_orders_keep_duplicates():
    ones = dihedral_group(1)
    assert len(ones) == 2
    assert all(e.perm == identity_perm(1) for e in ones)
    twos = dihedral_group(2)
    assert len(twos) == 4
    assert len({e.perm.images for e in twos}) == 2


def test_dihedral_group_n4_has_distinct_permutations():
    assert len({e.perm.images for e in dihedral_group(4)}) == 8


def test_dihedral_element_validates_its_permutation():
    with pytest.raises(ValueError):
        DihedralElement(rotation_perm(4, 2), DihedralKind.REFLECTION, 2)


def test_symmetric_group_enumeration():
    assert len(list(symmetric_group(3))) == 6
    assert [p.images for p in symmetric_group(1)] == [(1,)]
    perms = [p.images for p in symmetric_group(4)]
    assert len(perms) == 24 and len(set(perms)) == 24
    assert perms == sorted(perms)  # documented lexicographic order


def test_symmetric_group_cap():
    with pytest.raises(ResourceLimitError, match="10"):
        next(symmetric_group(11))
    # a raised cap unlocks the same order
    assert sum(1 for _ in symmetric_group(4, cap=4)) == 24
    with pytest.raises(ResourceLimitError, match="3"):
        next(symmetric_group(4, cap=3))


# ---------------------------------------------------------------------------
# composition, inversion, parity

def test_compose_examples():
    s = Permutation((2, 3, 1))
    assert compose(identity_perm(3), s) == s
    assert compose(rotation_perm(4, 2), rotation_perm(4, 2)) == rotation_perm(4, 3)
    assert compose(reflection_perm(4, 2), reflection_perm(4, 2)) == identity_perm(4)


def test_compose_order_of_application():
    # result(i) = tau(sigma(i))
    tau = Permutation((2, 1, 3))
    sigma = Permutation((3, 1, 2))
    assert compose(tau, sigma).images == (3, 2, 1)


def test_compose_size_mismatch():
    with pytest.raises(ValueError):
        compose(identity_perm(3), identity_perm(4))


def test_inverse_examples():
    assert inverse(identity_perm(5)) == identity_perm(5)
    assert inverse(Permutation((3, 4, 5, 1, 2))).images == (4, 5, 1, 2, 3)


def test_reflections_are_involutions():
    for n in range(1, 9):
        for k in range(1, n + 1):
            mu = reflection_perm(n, k)
            assert inverse(mu) == mu
            assert compose(mu, mu) == identity_perm(n)


@given(st.integers(1, 7).flatmap(perms_of))
def test_inverse_composes_to_identity(s):
    assert compose(s, inverse(s)) == identity_perm(s.n)
    assert compose(inverse(s), s) == identity_perm(s.n)


def test_sgn_examples():
    assert sgn(identity_perm(4)) == 1
    assert sgn(Permutation((2, 1, 3, 4))) == -1
    assert sgn(reflection_perm(4, 4)) == 1  # (1 4)(2 3), two transpositions


@given(st.integers(1, 7).flatmap(lambda n: st.tuples(perms_of(n), perms_of(n))))
def test_sgn_is_multiplicative(pair):
    tau, sigma = pair
    assert sgn(compose(tau, sigma)) == sgn(tau) * sgn(sigma)


def test_sig_examples():
    elems = dihedral_group(5)
    assert sig(elems[0]) == 1  # rho_1, the identity
    assert sig(elems[5 + 2]) == -1  # mu_3
    d1 = dihedral_group(1)
    assert sig(d1[1]) == -1  # the reflection copy of the identity


# ---------------------------------------------------------------------------
# dihedral group laws

def test_closure_and_composition_kind_law():
    # rotation*rotation and reflection*reflection land on rotations,
    # mixed compositions land on reflections
    for n in range(3, 9):
        for a, b in itertools.product(dihedral_group(n), repeat=2):
            composed = find_dihedral_element(compose(a.perm, b.perm))
            assert composed is not None
            mixed = a.kind != b.kind
            expected = DihedralKind.REFLECTION if mixed else DihedralKind.ROTATION
            assert composed.kind == expected


def test_sig_is_multiplicative_on_dihedral_elements():
    for n in range(3, 9):
        for a, b in itertools.product(dihedral_group(n), repeat=2):
            composed = find_dihedral_element(compose(a.perm, b.perm))
            assert sig(composed) == sig(a) * sig(b)


def test_sig_of_inverse_matches():
    for n in range(3, 9):
        for elem in dihedral_group(n):
            inv = find_dihedral_element(inverse(elem.perm))
            assert sig(inv) == sig(elem)


def test_sig_equals_sgn_exactly_at_order_three():
    assert all(sig(e) == sgn(e.perm) for e in dihedral_group(3))
    for n in (4, 5, 6):
        assert any(sig(e) != sgn(e.perm) for e in dihedral_group(n))


def test_find_dihedral_element_rejects_outsiders():
    assert find_dihedral_element(Permutation((2, 1, 3, 4))) is None
