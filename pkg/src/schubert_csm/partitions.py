"""Partition arithmetic, peak notation and depth vectors for Schubert indices.

Partitions are plain tuples of weakly decreasing non-negative integers with
trailing zeros trimmed, e.g. (2, 1) or (). When a partition indexes a Schubert
cell of Gr(k, n) it lives in the box P(k, n-k): at most k parts, each at most
n-k, and the cell has complex dimension equal to the partition size.
"""

from __future__ import annotations

import itertools
from typing import Iterable, NamedTuple

from .errors import DomainError

Partition = tuple[int, ...]


def normalize(parts: Iterable[int]) -> Partition:
    """Return the canonical tuple form, validating weak decrease and sign."""
    t = tuple(int(p) for p in parts)
    for i in range(len(t) - 1):
        if t[i] < t[i + 1]:
            raise DomainError(f"parts not weakly decreasing: {t}")
    if t and t[-1] < 0:
        raise DomainError(f"negative part in {t}")
    while t and t[-1] == 0:
        t = t[:-1]
    return t


def size(alpha: Partition) -> int:
    return sum(alpha)


def padded(alpha: Partition, k: int) -> tuple[int, ...]:
    """Pad with zeros to exactly k parts."""
    if len(alpha) > k:
        raise DomainError(f"{alpha} has more than {k} parts")
    return tuple(alpha) + (0,) * (k - len(alpha))


def validate_in_box(alpha: Partition, k: int, width: int) -> Partition:
    """Check alpha fits in the k x width box and return its canonical form."""
    a = normalize(alpha)
    if len(a) > k or (a and a[0] > width):
        raise DomainError(f"{a} does not fit in the {k}x{width} box")
    return a


def conjugate(alpha: Partition) -> Partition:
    """Transpose the Young diagram (count column heights)."""
    a = normalize(alpha)
    if not a:
        return ()
    return tuple(sum(1 for p in a if p > j) for j in range(a[0]))


def leq(beta: Partition, alpha: Partition) -> bool:
    """Containment order: True iff beta_i <= alpha_i for all i."""
    b, a = normalize(beta), normalize(alpha)
    if len(b) > len(a):
        return False
    return all(b[i] <= a[i] for i in range(len(b)))


def dual_in_box(alpha: Partition, k: int, width: int) -> Partition:
    """Box complement (width - a_k, ..., width - a_1); an involution on P(k, width)."""
    a = padded(validate_in_box(alpha, k, width), k)
    return normalize(width - a[k - 1 - i] for i in range(k))


def subpartitions(alpha: Partition) -> list[Partition]:
    """All beta <= alpha in containment order."""
    a = normalize(alpha)
    out: list[Partition] = []

    def rec(i: int, cap: int, acc: list[int]):
        if i == len(a):
            out.append(normalize(acc))
            return
        for p in range(min(cap, a[i]), -1, -1):
            acc.append(p)
            rec(i + 1, p, acc)
            acc.pop()

    rec(0, a[0] if a else 0, [])
    # dedupe (trailing-zero choices collapse) while keeping first occurrence
    seen = set()
    uniq = []
    for b in out:
        if b not in seen:
            seen.add(b)
            uniq.append(b)
    return uniq


def enumerate_box(k: int, width: int) -> list[Partition]:
    """All partitions in the k x width box.

    Total order: decreasing size, ties broken by descending lexicographic
    order on the k-padded parts. This refines containment (beta < alpha
    implies beta comes later), so unipotent matrices over it are upper
    triangular.
    """
    if k < 0 or width < 0:
        raise DomainError("box dimensions must be non-negative")
    parts = []
    for combo in itertools.combinations_with_replacement(range(width, -1, -1), k):
        parts.append(normalize(combo))
    parts = sorted(set(parts), key=lambda a: (-size(a), tuple(-p for p in padded(a, k))))
    return parts


class PeakForm(NamedTuple):
    """Run-length encoding [a_1..a_m ; b_0..b_{m-1}] of a k-padded partition.

    a_i is the multiplicity of the i-th distinct part (smallest first) and the
    i-th distinct part equals b_0 + ... + b_{i-1}. b_0 is zero exactly when
    the padded partition has zero parts; all later b_i are positive.
    """

    a: tuple[int, ...]
    b: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.a)


def to_peak_form(alpha: Partition, k: int) -> PeakForm:
    """Peak notation of alpha padded to k parts."""
    p = padded(normalize(alpha), k)
    if k == 0:
        return PeakForm((), ())
    values = sorted(set(p))
    a = tuple(sum(1 for q in p if q == v) for v in values)
    b = [values[0]] + [values[i] - values[i - 1] for i in range(1, len(values))]
    return PeakForm(a, tuple(b))


def from_peak_form(pf: PeakForm) -> tuple[int, ...]:
    """Inverse of to_peak_form; returns the k-padded part tuple."""
    parts: list[int] = []
    value = 0
    for i in range(pf.m):
        value += pf.b[i]
        parts = [value] * pf.a[i] + parts
    return tuple(parts)


def flag_dimensions(pf: PeakForm) -> tuple[int, ...]:
    """Dimensions (D_0, ..., D_m) of the partial flag attached to the peak form."""
    dims = [0]
    for i in range(pf.m):
        dims.append(dims[-1] + pf.a[i] + pf.b[i])
    return tuple(dims)


def remove_peak(pf: PeakForm, j: int) -> PeakForm:
    """Merge away the j-th peak (1-based), with a_0 = b_m = infinity dropped."""
    m = pf.m
    if not 1 <= j <= m:
        raise DomainError(f"peak index {j} out of range 1..{m}")
    a, b = pf.a, pf.b
    if m == 1:
        return PeakForm((), ())
    if j == 1:
        return PeakForm(a[1:], (b[0] + b[1],) + b[2:])
    if j == m:
        return PeakForm(a[: m - 2] + (a[m - 2] + a[m - 1],), b[: m - 1])
    return PeakForm(
        a[: j - 2] + (a[j - 2] + a[j - 1],) + a[j:],
        b[: j - 1] + (b[j - 1] + b[j],) + b[j + 1 :],
    )


def cell_center(beta: Partition, k: int, n: int) -> tuple[int, ...]:
    """Index set of the torus-fixed center of the cell of beta in Gr(k, n).

    The spanned coordinate subspace span(e_i : i in result) lies in the open
    cell; the t-th smallest index is t + beta_{k+1-t}.
    """
    b = padded(validate_in_box(beta, k, n - k), k)
    return tuple(t + b[k - t] for t in range(1, k + 1))


def depth_vector(alpha: Partition, beta: Partition, k: int, n: int) -> tuple[int, ...]:
    """Relative depth vector (c_0, ..., c_m) of the pair (alpha, beta).

    Evaluated at the cell center of beta: c_i is the excess of
    dim(U_beta intersect V^i) over the incidence bound a_1 + ... + a_i.
    """
    a_n = validate_in_box(alpha, k, n - k)
    b_n = validate_in_box(beta, k, n - k)
    if not leq(b_n, a_n):
        raise DomainError(f"{b_n} is not contained in {a_n}")
    pf = to_peak_form(a_n, k)
    dims = flag_dimensions(pf)
    center = cell_center(b_n, k, n)
    vec = []
    bound = 0
    for i in range(pf.m + 1):
        if i > 0:
            bound += pf.a[i - 1]
        vec.append(sum(1 for s in center if s <= dims[i]) - bound)
    if any(c < 0 for c in vec):
        raise DomainError(f"negative depth for pair ({a_n}, {b_n})")
    return tuple(vec)
