import pytest
from hypothesis import given, strategies as st

from schubert_csm.errors import DomainError
from schubert_csm.partitions import (
    PeakForm,
    cell_center,
    conjugate,
    depth_vector,
    dual_in_box,
    enumerate_box,
    from_peak_form,
    leq,
    normalize,
    padded,
    remove_peak,
    size,
    subpartitions,
    to_peak_form,
)


def test_normalize_trims_and_validates():
    assert normalize((3, 2, 0, 0)) == (3, 2)
    assert normalize([]) == ()
    with pytest.raises(DomainError):
        normalize((1, 2))
    with pytest.raises(DomainError):
        normalize((2, -1))


def test_conjugate_examples():
    assert conjugate((5, 5, 2, 1)) == (4, 3, 2, 2, 2)
    assert conjugate(()) == ()
    assert conjugate((2, 1)) == (2, 1)


def test_conjugate_involution_small_boxes():
    for alpha in enumerate_box(4, 4):
        assert conjugate(conjugate(alpha)) == alpha


def test_dual_in_box_examples():
    assert dual_in_box((1, 1), 2, 2) == (1, 1)
    assert dual_in_box((2,), 2, 2) == (2,)
    assert dual_in_box((3, 1), 3, 3) == (3, 2)
    with pytest.raises(DomainError):
        dual_in_box((3,), 2, 2)


def test_dual_involution_and_conjugate_compatibility():
    for k, w in [(2, 2), (2, 3), (3, 3)]:
        for alpha in enumerate_box(k, w):
            assert dual_in_box(dual_in_box(alpha, k, w), k, w) == alpha
            # transposing commutes with taking the box complement
            assert conjugate(dual_in_box(alpha, k, w)) == dual_in_box(conjugate(alpha), w, k)


def test_leq():
    assert leq((1, 1), (2, 1))
    assert not leq((2,), (1, 1))
    assert leq((), (3, 2))
    assert not leq((1, 1, 1), (3, 3))


def test_enumerate_box_counts():
    assert len(enumerate_box(2, 2)) == 6
    assert len(enumerate_box(3, 3)) == 20
    assert enumerate_box(1, 1) == [(1,), ()]


def test_enumerate_box_refines_containment():
    parts = enumerate_box(3, 3)
    pos = {p: i for i, p in enumerate(parts)}
    for b in parts:
        for a in parts:
            if b != a and leq(b, a):
                assert pos[b] > pos[a]


@pytest.mark.parametrize(
    "alpha,k,a,b",
    [
        ((5, 5, 2, 1), 4, (1, 1, 2), (1, 1, 3)),
        ((2, 1), 2, (1, 1), (1, 1)),
        ((2,), 2, (1, 1), (0, 2)),
        ((3, 3, 3), 3, (3,), (3,)),
        ((), 2, (2,), (0,)),
    ],
)
def test_to_peak_form(alpha, k, a, b):
    pf = to_peak_form(alpha, k)
    assert (pf.a, pf.b) == (a, b)
    assert sum(pf.a) == k
    assert from_peak_form(pf) == padded(alpha, k)


def test_peak_form_round_trip_exhaustive():
    for k, w in [(2, 2), (3, 3), (4, 4), (2, 6), (6, 2)]:
        for alpha in enumerate_box(k, w):
            pf = to_peak_form(alpha, k)
            assert normalize(from_peak_form(pf)) == alpha
            assert pf.b[0] >= 0 and all(x > 0 for x in pf.b[1:])


@given(st.lists(st.integers(0, 6), min_size=1, max_size=6))
def test_peak_form_round_trip_random(parts):
    parts = tuple(sorted(parts, reverse=True))
    k = len(parts)
    assert from_peak_form(to_peak_form(parts, k)) == parts


@pytest.mark.parametrize(
    "pf,j,expected",
    [
        (PeakForm((1, 1, 2), (1, 1, 3)), 1, PeakForm((1, 2), (2, 3))),
        (PeakForm((1, 1, 2), (1, 1, 3)), 2, PeakForm((2, 2), (1, 4))),
        (PeakForm((1, 1), (1, 1)), 1, PeakForm((1,), (2,))),
        (PeakForm((1, 1), (1, 1)), 2, PeakForm((2,), (1,))),
        (PeakForm((2,), (3,)), 1, PeakForm((), ())),
    ],
)
def test_remove_peak(pf, j, expected):
    assert remove_peak(pf, j) == expected


def test_remove_peak_range():
    with pytest.raises(DomainError):
        remove_peak(PeakForm((1, 1), (1, 1)), 3)


def test_cell_center():
    assert cell_center((), 2, 4) == (1, 2)
    assert cell_center((2, 1), 2, 4) == (2, 4)
    assert cell_center((2, 2), 2, 4) == (3, 4)


def test_depth_vector_examples():
    assert depth_vector((2, 1), (2, 1), 2, 4) == (0, 0, 0)
    assert depth_vector((2, 1), (), 2, 4) == (0, 1, 0)
    assert depth_vector((3, 1), (1,), 2, 5) == (0, 0, 0)
    with pytest.raises(DomainError):
        depth_vector((1, 1), (2,), 2, 4)


def test_depth_vector_zero_on_diagonal_exhaustive():
    for alpha in enumerate_box(3, 3):
        assert not any(depth_vector(alpha, alpha, 3, 6))


def test_depth_vector_ends_are_zero():
    for alpha in enumerate_box(3, 3):
        for beta in subpartitions(alpha):
            vec = depth_vector(alpha, beta, 3, 6)
            assert vec[0] == 0 and vec[-1] == 0


def test_subpartitions_counts():
    assert len(subpartitions((3, 3, 3))) == 20
    assert subpartitions(()) == [()]
