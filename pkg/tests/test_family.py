import pytest

from ucf import (
    InvalidInputError,
    InvariantError,
    SetFamily,
)


def fam(n, *sets):
    return SetFamily.from_sets(n, [list(s) for s in sets])


def test_from_sets_roundtrip():
    f = fam(3, (), (1,), (1, 3))
    assert f.n == 3
    assert f.members() == [(), (1,), (1, 3)]
    assert len(f) == 3
    assert 0b101 in f


def test_masks_are_bit_encoded():
    f = fam(4, (2, 4))
    assert f.masks == (0b1010,)


def test_rejects_bad_domains_and_masks():
    with pytest.raises(InvalidInputError):
        SetFamily(0, ())
    with pytest.raises(InvalidInputError):
        SetFamily(2, (4,))
    with pytest.raises(InvalidInputError):
        SetFamily(2, (1, 1))
    with pytest.raises(InvalidInputError):
        fam(2, (1, 2, 3))


def test_weight_is_total_membership():
    f = fam(4, (4,), (3, 4), (2, 3, 4))
    assert f.weight() == 6
    assert f.size_histogram() == {1: 1, 2: 1, 3: 1}


def test_l_fold_weight_counts_subsets():
    f = fam(4, (4,), (3, 4), (2, 3, 4))
    assert f.l_fold_weight(1) == 6
    assert f.l_fold_weight(2) == 4
    assert f.l_fold_weight(3) == 1
    assert f.l_fold_weight(4) == 0


def test_degree_profile_double_counts():
    f = fam(4, (4,), (3, 4), (2, 3, 4))
    prof = f.degree_profile()
    assert prof.degrees == (0, 1, 2, 3)
    assert prof.weight == 6 == sum(prof.degrees)
    assert prof.size == 3


def test_union_closed_detection():
    assert fam(3, (1,), (2,), (1, 2)).is_union_closed()
    assert not fam(3, (1,), (2,)).is_union_closed()
    assert fam(3).is_union_closed()
    assert fam(3, ()).is_union_closed()


def test_union_closure_is_idempotent_and_minimal():
    f = fam(3, (1,), (2,), (3,))
    closed = f.union_closure()
    assert closed.is_union_closed()
    assert set(f.masks) <= set(closed.masks)
    assert len(closed) == 7  # all nonempty subsets, never the empty set
    assert 0 not in closed.masks
    again = closed.union_closure()
    assert again.masks == closed.masks


def test_separation_basics():
    f = fam(3, (1,), (1, 2), (1, 2, 3))
    assert f.is_separating()
    assert f.separates(1, 2)
    g = fam(3, (1, 2), (1, 2, 3))
    assert not g.separates(1, 2)
    assert g.separation_partition().classes == ((1, 2), (3,))


def test_reduce_merges_inseparable_elements():
    g = fam(3, (1, 2), (1, 2, 3))
    r = g.reduce()
    assert r.n == 2
    assert len(r) == len(g)
    assert r.is_separating()
    assert r.members() == [(1,), (1, 2)]


def test_reduce_on_separating_family_is_relabeling_only():
    f = fam(3, (1,), (1, 2), (1, 2, 3))
    r = f.reduce()
    assert r.n == 3 and len(r) == 3


def test_induced_family_renumbers():
    f = fam(4, (1,), (1, 2), (1, 2, 4), (3,))
    sub, renumber = f.induced([1])
    assert sub.n == 3
    assert renumber == {2: 1, 3: 2, 4: 3}
    assert sub.members() == [(), (1,), (1, 3)]
    with pytest.raises(InvalidInputError):
        f.induced([1, 2, 3, 4])


def test_relabel_by_degree_sorts_degrees():
    f = fam(3, (1,), (1, 2))
    g, order = f.relabel_by_degree()
    degs = g.degree_profile().degrees
    assert list(degs) == sorted(degs)
    assert sorted(order) == [1, 2, 3]
    assert g.masks == f.relabel(order).masks


def test_relabel_rejects_non_permutations():
    f = fam(3, (1,))
    with pytest.raises(InvalidInputError):
        f.relabel((1, 1, 2))


def test_frankl_witness_prefers_lex_least():
    f = fam(2, (1,), (2,), (1, 2))
    wit = f.frankl_witness(1)
    assert wit.subset == (1,)
    assert wit.count == 2
    assert wit.meets_threshold  # 2 >= 3/2
    assert wit.margin == wit.count - wit.threshold


def test_frankl_witness_empty_family_meets_zero_threshold():
    f = fam(2)
    wit = f.frankl_witness(1)
    assert wit.count == 0 and wit.meets_threshold


def test_expected_l_degree_exact():
    from fractions import Fraction
    f = fam(4, (4,), (3, 4), (2, 3, 4))
    assert f.expected_l_degree(1) == Fraction(6, 4)
    assert f.expected_l_degree(2) == Fraction(4, 6)


def test_degree_validation():
    f = fam(2, (1,))
    with pytest.raises(InvalidInputError):
        f.separates(0, 1)
    with pytest.raises(InvalidInputError):
        f.frankl_witness(3)


def test_l_fold_weight_edges():
    f = SetFamily.from_sets(3, [[], [1], [1, 2], [1, 2, 3]])
    assert f.l_fold_weight(0) == len(f)
    assert f.l_fold_weight(1) == f.weight()
    with pytest.raises(InvalidInputError):
        f.l_fold_weight(-1)


def test_induced_on_one_element_counts_degree():
    f = SetFamily.from_sets(3, [[], [1], [1, 2], [1, 2, 3], [2, 3]])
    degrees = f.degree_profile().degrees
    for x in (1, 2, 3):
        sub, renumber = f.induced([x])
        assert len(sub) == degrees[x - 1]
        assert sub.n == 2
        assert sorted(renumber) == [y for y in (1, 2, 3) if y != x]
