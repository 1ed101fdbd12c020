"""Exact combinatorial kernels: binomial determinants, Schur evaluation,
straightening, Littlewood-Richardson coefficients, Gaussian binomials and
unipotent integer matrix inversion.

Everything is arbitrary-precision integer arithmetic; no floating point.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Sequence

from .errors import DomainError
from .partitions import Partition, normalize, padded

# ---------------------------------------------------------------------------
# small integer helpers


def comb0(n: int, k: int) -> int:
    """Binomial coefficient with the convention comb(n, k) = 0 outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def det_int(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix (fraction-free Bareiss)."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    if any(len(r) != n for r in m):
        raise DomainError("determinant of a non-square matrix")
    sign = 1
    prev = 1
    for i in range(n - 1):
        if m[i][i] == 0:
            for r in range(i + 1, n):
                if m[r][i] != 0:
                    m[i], m[r] = m[r], m[i]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                m[r][c] = (m[r][c] * m[i][i] - m[r][i] * m[i][c]) // prev
            m[r][i] = 0
        prev = m[i][i]
    return sign * m[n - 1][n - 1]


def poly_mul(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    out = [0] * (len(p) + len(q) - 1)
    for i, pi in enumerate(p):
        if pi:
            for j, qj in enumerate(q):
                out[i + j] += pi * qj
    return tuple(out)


# ---------------------------------------------------------------------------
# symmetric polynomial values at integer weight multisets


def elementary_values(weights: Sequence[int], top: int) -> list[int]:
    """e_0 .. e_top of the weight multiset (e_p = 0 for p > len(weights))."""
    e = [0] * (top + 1)
    e[0] = 1
    deg = 0
    for w in weights:
        deg = min(deg + 1, top)
        for p in range(deg, 0, -1):
            e[p] += w * e[p - 1]
    return e


def complete_values(weights: Sequence[int], top: int) -> list[int]:
    """h_0 .. h_top of the weight multiset.

    Multiplies the series 1/(1 - w t) in one variable at a time.
    """
    h = [0] * (top + 1)
    h[0] = 1
    for w in weights:
        for p in range(1, top + 1):
            h[p] += w * h[p - 1]
    return h


def schur_eval(lam: Partition, weights: Sequence[int]) -> int:
    """Value of the Schur polynomial s_lam at an integer weight multiset.

    Jacobi-Trudi determinant in complete homogeneous values; returns 0 when
    lam has more rows than there are weights.
    """
    lam = normalize(lam)
    if not lam:
        return 1
    ell = len(lam)
    top = lam[0] + ell
    h = complete_values(tuple(weights), top)

    def entry(i, j):
        d = lam[i] - (i + 1) + (j + 1)
        return h[d] if 0 <= d <= top else 0

    return det_int([[entry(i, j) for j in range(ell)] for i in range(ell)])


def chern_schur_eval(beta: Partition, weights: Sequence[int]) -> int:
    """Schur determinant in Chern classes: det(c_{beta_i + j - i}) with
    c_p = e_p(weights). Equals schur_eval(conjugate(beta), weights)."""
    beta = normalize(beta)
    if not beta:
        return 1
    ell = len(beta)
    top = beta[0] + ell + len(tuple(weights))
    e = elementary_values(tuple(weights), top)

    def entry(i, j):
        d = beta[i] - (i + 1) + (j + 1)
        return e[d] if 0 <= d <= top else 0

    return det_int([[entry(i, j) for j in range(ell)] for i in range(ell)])


# ---------------------------------------------------------------------------
# binomial determinants and straightening


def binomial_det(lam: Partition, mu: Partition, nparts: int) -> int:
    """det( comb(lam_i + N - i, mu_j + N - j) ) over N = nparts padded parts.

    Out-of-range binomials are zero; the result is always a non-negative
    integer (a non-intersecting lattice path count).
    """
    lam_p = padded(normalize(lam), nparts)
    mu_p = padded(normalize(mu), nparts)
    rows = [
        [comb0(lam_p[i] + nparts - (i + 1), mu_p[j] + nparts - (j + 1)) for j in range(nparts)]
        for i in range(nparts)
    ]
    return det_int(rows)


def straighten(seq: Sequence[int]) -> tuple[int, Partition | None]:
    """Normalize a Schur index to (sign, partition).

    Adds the staircase (N-1, ..., 0), sorts descending tracking the
    permutation sign, and subtracts the staircase again. Repeated staircase
    values give sign 0; a negative trailing part means the class vanishes.
    """
    n = len(seq)
    v = [seq[i] + n - 1 - i for i in range(n)]
    if len(set(v)) != n:
        return 0, None
    inversions = sum(1 for i in range(n) for j in range(i + 1, n) if v[i] < v[j])
    sign = -1 if inversions % 2 else 1
    v.sort(reverse=True)
    parts = [v[i] - (n - 1 - i) for i in range(n)]
    if parts and parts[-1] < 0:
        return 0, None
    return sign, normalize(parts)


# ---------------------------------------------------------------------------
# Littlewood-Richardson by tableau enumeration (desk scale)


@lru_cache(maxsize=None)
def lr_skew_counts(nu: Partition, lam: Partition) -> dict[Partition, int]:
    """Count Littlewood-Richardson fillings of nu/lam, tallied by content.

    A filling is a semistandard skew tableau whose reverse reading word is a
    ballot sequence; lr_skew_counts(nu, lam)[mu] is the coefficient
    c^nu_{lam, mu}.
    """
    nu = normalize(nu)
    lam = normalize(lam)
    if len(lam) > len(nu):
        return {}
    lam_p = padded(lam, len(nu))
    if any(lam_p[i] > nu[i] for i in range(len(nu))):
        return {}
    cells = [(r, c) for r in range(len(nu)) for c in range(nu[r] - 1, lam_p[r] - 1, -1)]
    # reading order: rows top to bottom, right to left within a row
    grid: dict[tuple[int, int], int] = {}
    counts: dict[tuple[int, ...], int] = {}
    maxv = len(nu)

    def rec(idx: int, tally: list[int]):
        if idx == len(cells):
            content = tuple(tally)
            while content and content[-1] == 0:
                content = content[:-1]
            counts[content] = counts.get(content, 0) + 1
            return
        r, c = cells[idx]
        lo, hi = 1, min(r + 1, maxv)
        if (r, c + 1) in grid:
            hi = min(hi, grid[(r, c + 1)])
        if (r - 1, c) in grid:
            lo = max(lo, grid[(r - 1, c)] + 1)
        for v in range(lo, hi + 1):
            if v > 1 and tally[v - 2] <= tally[v - 1]:
                continue  # ballot condition would fail
            grid[(r, c)] = v
            tally[v - 1] += 1
            rec(idx + 1, tally)
            tally[v - 1] -= 1
            del grid[(r, c)]

    rec(0, [0] * maxv)
    return {normalize(c): n for c, n in counts.items()}


def lr_coefficients(lam: Partition, mu: Partition) -> dict[Partition, int]:
    """All c^nu_{lam, mu} for |nu| = |lam| + |mu|."""
    lam = normalize(lam)
    mu = normalize(mu)
    total = sum(lam) + sum(mu)
    out: dict[Partition, int] = {}
    max_len = len(lam) + len(mu)
    max_part = (lam[0] if lam else 0) + (mu[0] if mu else 0)
    for nu in _partitions_of(total, max_len, max_part):
        if len(nu) >= len(lam) and all(nu[i] >= lam[i] for i in range(len(lam))):
            c = lr_skew_counts(nu, lam).get(mu, 0)
            if c:
                out[nu] = c
    return out


def _partitions_of(total: int, max_len: int, max_part: int) -> list[Partition]:
    out: list[Partition] = []

    def rec(rem: int, cap: int, acc: list[int]):
        if rem == 0:
            out.append(tuple(acc))
            return
        if len(acc) == max_len:
            return
        for p in range(min(cap, rem), 0, -1):
            acc.append(p)
            rec(rem - p, p, acc)
            acc.pop()

    rec(total, max_part, [])
    return out


@lru_cache(maxsize=None)
def schur_product(lam: Partition, mu: Partition, max_len: int) -> dict[Partition, int]:
    """s_lam * s_mu in an alphabet of max_len variables (rows beyond vanish)."""
    return {nu: c for nu, c in lr_coefficients(lam, mu).items() if len(nu) <= max_len}


# ---------------------------------------------------------------------------
# Gaussian binomials and unipotent matrices


def gaussian_binomial(n: int, k: int) -> tuple[int, ...]:
    """q-binomial [n choose k]_q as a coefficient tuple (ascending powers)."""
    if not 0 <= k <= n:
        raise DomainError(f"gaussian binomial out of range: ({n}, {k})")
    # q-Pascal recursion [n k] = [n-1 k-1] + q^k [n-1 k]
    row: list[tuple[int, ...]] = [(1,)]
    for nn in range(1, n + 1):
        new = [(1,)]
        for kk in range(1, nn):
            left = row[kk - 1]
            right = row[kk] if kk < len(row) else None
            term = list(left)
            if right is not None:
                term += [0] * (kk + len(right) - len(term))
                for i, c in enumerate(right):
                    term[kk + i] += c
            new.append(tuple(term))
        new.append((1,))
        row = new
    return row[k]


def invert_unipotent(matrix: Sequence[Sequence[int]]) -> list[list[int]]:
    """Exact inverse of an upper triangular integer matrix with unit diagonal."""
    n = len(matrix)
    for i in range(n):
        if len(matrix[i]) != n:
            raise DomainError("matrix is not square")
        if matrix[i][i] != 1:
            raise DomainError("diagonal entry is not 1")
        if any(matrix[i][j] != 0 for j in range(i)):
            raise DomainError("matrix is not upper triangular")
    inv = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n - 1, -1, -1):
        for j in range(i + 1, n):
            s = -sum(matrix[i][t] * inv[t][j] for t in range(i + 1, j + 1))
            inv[i][j] = s
    return inv
