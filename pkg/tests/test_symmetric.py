import itertools
import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from schubert_csm.errors import DomainError
from schubert_csm.partitions import conjugate, enumerate_box, normalize, padded, subpartitions
from schubert_csm.symmetric import (
    binomial_det,
    chern_schur_eval,
    det_int,
    gaussian_binomial,
    invert_unipotent,
    lr_coefficients,
    lr_skew_counts,
    schur_eval,
    straighten,
)

# ---------------------------------------------------------------------------
# independent oracles


def schur_by_ssyt(lam, weights):
    """Sum over semistandard tableaux of the monomial weights (brute force)."""
    lam = normalize(lam)
    n = len(weights)
    if not lam:
        return 1
    if len(lam) > n:
        return 0
    total = 0
    rows = len(lam)

    def fill(r, c, grid):
        nonlocal total
        if r == rows:
            total += math.prod(weights[v - 1] for row in grid for v in row)
            return
        if c == lam[r]:
            fill(r + 1, 0, grid)
            return
        lo = grid[r][c - 1] if c > 0 else 1
        if r > 0 and c < lam[r - 1]:
            lo = max(lo, grid[r - 1][c] + 1)
        for v in range(lo, n + 1):
            grid[r].append(v)
            fill(r, c + 1, grid)
            grid[r].pop()

    fill(0, 0, [[] for _ in range(rows)])
    return total


def det_by_permutations(rows):
    n = len(rows)
    total = 0
    for perm in itertools.permutations(range(n)):
        sign = 1
        seen = [False] * n
        # compute parity by cycle counting
        p = list(perm)
        for i in range(n):
            if not seen[i]:
                j, ln = i, 0
                while not seen[j]:
                    seen[j] = True
                    j = p[j]
                    ln += 1
                if ln % 2 == 0:
                    sign = -sign
        total += sign * math.prod(rows[i][perm[i]] for i in range(n))
    return total


def gaussian_by_inversions(n, k):
    """[n choose k]_q as the inversion generating function of 0/1 words."""
    coeffs = [0] * (k * (n - k) + 1)
    for ones in itertools.combinations(range(n), k):
        word = [1 if i in ones else 0 for i in range(n)]
        inv = sum(
            1
            for i in range(n)
            for j in range(i + 1, n)
            if word[i] == 1 and word[j] == 0
        )
        coeffs[inv] += 1
    return tuple(coeffs)


# ---------------------------------------------------------------------------
# determinants and binomial determinants


def test_det_int_matches_permutation_expansion():
    rng = random.Random(7)
    for n in range(5):
        m = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
        assert det_int(m) == det_by_permutations(m)


def test_binomial_det_examples():
    assert binomial_det((2, 1), (2, 1), 2) == 1
    assert binomial_det((3,), (3,), 1) == 1
    # brute-force 2x2 determinant of binomials
    rows = [[math.comb(1 + 2 - 1, 0 + 2 - 1), math.comb(1 + 2 - 1, 0 + 2 - 2)],
            [math.comb(0 + 2 - 2, 0 + 2 - 1), math.comb(0 + 2 - 2, 0 + 2 - 2)]]
    assert det_by_permutations(rows) == 2
    assert binomial_det((1,), (), 2) == 2


def test_binomial_det_diagonal_is_one():
    for lam in enumerate_box(3, 3):
        assert binomial_det(lam, lam, 3) == 1


def test_binomial_det_nonnegative_exhaustive():
    for n in (1, 2, 3, 4):
        for lam in enumerate_box(n, 4):
            for mu in subpartitions(lam):
                assert binomial_det(lam, mu, n) >= 0


# ---------------------------------------------------------------------------
# Schur evaluation


def test_schur_eval_examples():
    assert schur_eval((1,), (3, 5)) == 8
    assert schur_eval((2,), (2, 3)) == 4 + 6 + 9
    assert schur_eval((1, 1), (2, 3)) == 6
    assert schur_eval((), (1, 2, 3)) == 1
    assert schur_eval((1, 1, 1), (2, 3)) == 0


def test_schur_eval_matches_ssyt_oracle():
    rng = random.Random(3)
    for lam in [(1,), (2,), (1, 1), (2, 1), (3, 1), (2, 2), (2, 1, 1)]:
        for _ in range(3):
            w = tuple(rng.randint(0, 5) for _ in range(rng.randint(1, 4)))
            assert schur_eval(lam, w) == schur_by_ssyt(lam, w)


@given(
    st.permutations([1, 2, 3, 5]),
    st.sampled_from([(1,), (2, 1), (2, 2), (3, 1, 1)]),
)
def test_schur_eval_symmetric(weights, lam):
    assert schur_eval(lam, weights) == schur_eval(lam, sorted(weights))


def test_schur_eval_stability_under_zero():
    for lam in [(2, 1), (3,), (1, 1)]:
        assert schur_eval(lam, (2, 5)) == schur_eval(lam, (2, 5, 0))


def test_chern_schur_eval_examples():
    assert chern_schur_eval((1, 1), (2, 3)) == (2 + 3) ** 2 - 2 * 3
    assert chern_schur_eval((1,), (7,)) == 7
    assert chern_schur_eval((2,), (2, 3)) == 6


def test_chern_schur_is_conjugate_schur():
    rng = random.Random(11)
    for beta in enumerate_box(3, 3):
        w = tuple(rng.randint(-3, 6) for _ in range(3))
        assert chern_schur_eval(beta, w) == schur_eval(conjugate(beta), w)


# ---------------------------------------------------------------------------
# straightening


def test_straighten_examples():
    assert straighten((1, 3)) == (-1, (2, 2))
    assert straighten((0, 1)) == (0, None)
    for lam in enumerate_box(3, 3):
        sign, out = straighten(padded(lam, 3))
        assert (sign, out) == (1, lam)


def test_straighten_idempotent_on_partitions():
    for lam in enumerate_box(2, 4):
        sign, out = straighten(padded(lam, 2))
        assert sign == 1
        assert straighten(padded(out, 2)) == (sign, out)


def _bialternant(seq, weights):
    n = len(seq)
    num = det_by_permutations(
        [[weights[i] ** (seq[j] + n - 1 - j) for j in range(n)] for i in range(n)]
    )
    den = det_by_permutations(
        [[weights[i] ** (n - 1 - j) for j in range(n)] for i in range(n)]
    )
    return num, den


def test_straighten_consistent_with_bialternant():
    # alternant comparison is only meaningful while all shifted exponents
    # stay non-negative; below that the Jacobi-Trudi convention says 0
    rng = random.Random(5)
    checked = 0
    while checked < 25:
        n = rng.randint(2, 3)
        seq = tuple(rng.randint(-2, 4) for _ in range(n))
        if min(seq[j] + n - 1 - j for j in range(n)) < 0:
            continue
        checked += 1
        w = random.sample(range(1, 9), n)
        sign, out = straighten(seq)
        num, den = _bialternant(seq, w)
        if sign == 0:
            assert num == 0
        else:
            assert num == sign * schur_eval(out, w) * den


def test_straighten_negative_tail_vanishes():
    assert straighten((-1, 0)) == (0, None)
    assert straighten((0, -2)) == (0, None)
    sign, out = straighten((0, 2))  # v = (1, 2): swap, subtract staircase
    assert (sign, out) == (-1, (1, 1))


# ---------------------------------------------------------------------------
# Littlewood-Richardson


def test_lr_pieri_and_identity():
    assert lr_coefficients((1,), (1,)) == {(2,): 1, (1, 1): 1}
    assert lr_coefficients((), (2, 1)) == {(2, 1): 1}
    assert lr_coefficients((2,), (1, 1)) == {(3, 1): 1, (2, 1, 1): 1}


def test_lr_symmetry():
    for lam, mu in [((2, 1), (1, 1)), ((2,), (2, 1)), ((1, 1), (2, 2))]:
        assert lr_coefficients(lam, mu) == lr_coefficients(mu, lam)


@settings(deadline=None, max_examples=20)
@given(
    st.sampled_from([(1,), (2,), (1, 1), (2, 1), (2, 2)]),
    st.sampled_from([(1,), (2,), (1, 1), (2, 1), (3, 1)]),
)
def test_lr_expands_products_numerically(lam, mu):
    rng = random.Random(hash((lam, mu)) & 0xFFFF)
    nvars = sum(lam) + sum(mu)
    w = tuple(rng.randint(1, 7) for _ in range(nvars))
    lhs = schur_eval(lam, w) * schur_eval(mu, w)
    rhs = sum(c * schur_eval(nu, w) for nu, c in lr_coefficients(lam, mu).items())
    assert lhs == rhs


def test_lr_degree_and_positivity():
    for lam, mu in [((2, 1), (2, 1)), ((3, 1), (2,))]:
        for nu, c in lr_coefficients(lam, mu).items():
            assert c > 0
            assert sum(nu) == sum(lam) + sum(mu)


def test_lr_skew_counts_whole_shape():
    # nu/0 fillings are ordinary ballot tableaux; content nu itself appears once
    counts = lr_skew_counts((3, 2, 1), ())
    assert counts[(3, 2, 1)] == 1


# ---------------------------------------------------------------------------
# Gaussian binomials and unipotent inversion


def test_gaussian_binomial_examples():
    assert gaussian_binomial(2, 1) == (1, 1)
    assert gaussian_binomial(4, 2) == (1, 1, 2, 1, 1)
    assert gaussian_binomial(5, 0) == (1,)
    with pytest.raises(DomainError):
        gaussian_binomial(2, 3)


def test_gaussian_binomial_matches_inversion_statistic():
    for n in range(7):
        for k in range(n + 1):
            assert gaussian_binomial(n, k) == gaussian_by_inversions(n, k)


def test_gaussian_binomial_at_one():
    for n in range(8):
        for k in range(n + 1):
            assert sum(gaussian_binomial(n, k)) == math.comb(n, k)


def test_invert_unipotent():
    assert invert_unipotent([[1, 2], [0, 1]]) == [[1, -2], [0, 1]]
    assert invert_unipotent([[1]]) == [[1]]
    rng = random.Random(2)
    for n in (3, 5, 8):
        m = [[1 if i == j else (rng.randint(-5, 5) if j > i else 0) for j in range(n)] for i in range(n)]
        inv = invert_unipotent(m)
        for i in range(n):
            assert inv[i][i] == 1
            assert all(inv[i][j] == 0 for j in range(i))
        prod = [
            [sum(m[i][t] * inv[t][j] for t in range(n)) for j in range(n)]
            for i in range(n)
        ]
        assert prod == [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def test_invert_unipotent_rejects_bad_input():
    with pytest.raises(DomainError):
        invert_unipotent([[2, 0], [0, 1]])
    with pytest.raises(DomainError):
        invert_unipotent([[1, 0], [3, 1]])
