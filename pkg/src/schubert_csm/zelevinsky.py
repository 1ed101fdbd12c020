"""Zelevinsky resolutions of Schubert varieties.

A resolution plan records the iterated Grassmannian-bundle construction: one
step per peak of the partition, in the order given by a permutation of the
peaks. Fiber Euler characteristics over cells are computed by the peak-removal
recursion, threading (peak form, depth vector) states; fiber dimensions come
from two independent recursions that must agree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError, InvariantError
from .partitions import (
    Partition,
    depth_vector,
    flag_dimensions,
    leq,
    normalize,
    remove_peak,
    size,
    subpartitions,
    to_peak_form,
    validate_in_box,
)
from .symmetric import comb0, gaussian_binomial, poly_mul


@dataclass(frozen=True)
class BoundRef:
    """Reference to a bounding subspace: a fixed flag space or an earlier factor."""

    kind: str  # "flag" or "factor"
    index: int  # flag level, or 1-based step number
    dim: int


@dataclass(frozen=True)
class Step:
    k: int
    left: BoundRef
    right: BoundRef

    @property
    def l(self) -> int:
        return self.k - self.left.dim

    @property
    def r(self) -> int:
        return self.right.dim - self.k


@dataclass(frozen=True)
class ResolutionPlan:
    alpha: Partition
    k: int
    n: int
    order: tuple[int, ...]
    steps: tuple[Step, ...]

    @property
    def m(self) -> int:
        return len(self.steps)

    @property
    def dim(self) -> int:
        return size(self.alpha)


def identity_order(m: int) -> tuple[int, ...]:
    return tuple(range(1, m + 1))


def reversing_order(m: int) -> tuple[int, ...]:
    return tuple(range(m, 0, -1))


def peak_count(alpha: Partition, k: int) -> int:
    return to_peak_form(alpha, k).m


def _validate_order(order: tuple[int, ...], m: int) -> tuple[int, ...]:
    order = tuple(int(x) for x in order)
    if sorted(order) != list(range(1, m + 1)):
        raise DomainError(f"{order} is not a permutation of 1..{m}")
    return order


def build_plan(alpha: Partition, order: tuple[int, ...], k: int, n: int) -> ResolutionPlan:
    """Construct the resolution plan for alpha with the given peak order.

    Each step replaces the pair of flag spaces around the removed peak by the
    newly chosen factor, then recurses on the merged peak form.
    """
    alpha = validate_in_box(alpha, k, n - k)
    pf = to_peak_form(alpha, k)
    order = _validate_order(order, pf.m)
    dims = flag_dimensions(pf)
    flag: list[BoundRef] = [BoundRef("flag", i, dims[i]) for i in range(pf.m + 1)]
    remaining = list(range(1, pf.m + 1))
    steps: list[Step] = []
    for t, label in enumerate(order, start=1):
        j = remaining.index(label) + 1
        remaining.remove(label)
        k_t = flag[j - 1].dim + pf.a[j - 1]
        left, right = flag[j - 1], flag[j]
        steps.append(Step(k_t, left, right))
        flag[j - 1 : j + 1] = [BoundRef("factor", t, k_t)]
        pf = remove_peak(pf, j)
    if steps and steps[-1].k != k:
        raise InvariantError("last factor does not have rank k")
    if sum(s.l * s.r for s in steps) != size(alpha):
        raise InvariantError("plan dimension does not match |alpha|")
    return ResolutionPlan(alpha, k, n, order, tuple(steps))


# ---------------------------------------------------------------------------
# fiber invariants via the peak-removal recursion
#
# State: current peak form (a, b), current depth vector c (length m+1), and
# the remaining original peak labels in removal order. The first and last
# entries of every reachable depth vector are zero.


def _merge_state(a, b, c, j, d):
    m = len(a)
    if m == 1:
        a2, b2 = (), ()
    elif j == 1:
        a2, b2 = a[1:], (b[0] + b[1],) + b[2:]
    elif j == m:
        a2, b2 = a[: m - 2] + (a[m - 2] + a[m - 1],), b[: m - 1]
    else:
        a2 = a[: j - 2] + (a[j - 2] + a[j - 1],) + a[j:]
        b2 = b[: j - 1] + (b[j - 1] + b[j],) + b[j + 1 :]
    c2 = c[: j - 1] + (d,) + c[j + 1 :]
    return a2, b2, c2


def _current_peak(order: tuple[int, ...]) -> int:
    return sorted(order).index(order[0]) + 1


@lru_cache(maxsize=None)
def _euler_rec(a, b, c, order) -> int:
    if not a:
        return 1
    j = _current_peak(order)
    aj, bj1, cj, cj1 = a[j - 1], b[j - 1], c[j], c[j - 1]
    total = 0
    for d in range(min(cj, cj1) + 1):
        w = comb0(aj + cj - cj1, cj - d) * comb0(bj1 - cj + cj1, cj1 - d)
        if w:
            a2, b2, c2 = _merge_state(a, b, c, j, d)
            total += w * _euler_rec(a2, b2, c2, order[1:])
    return total


@lru_cache(maxsize=None)
def _poincare_rec(a, b, c, order) -> tuple[int, ...]:
    if not a:
        return (1,)
    j = _current_peak(order)
    aj, bj1, cj, cj1 = a[j - 1], b[j - 1], c[j], c[j - 1]
    acc: list[int] = []
    for d in range(min(cj, cj1) + 1):
        if cj - d > aj + cj - cj1 or cj1 - d > bj1 - cj + cj1:
            continue
        g1 = gaussian_binomial(aj + cj - cj1, cj - d)
        g2 = gaussian_binomial(bj1 - cj + cj1, cj1 - d)
        a2, b2, c2 = _merge_state(a, b, c, j, d)
        term = poly_mul(poly_mul(g1, g2), _poincare_rec(a2, b2, c2, order[1:]))
        if len(term) > len(acc):
            acc += [0] * (len(term) - len(acc))
        for i, t in enumerate(term):
            acc[i] += t
    return tuple(acc)


@lru_cache(maxsize=None)
def _dim_rec(a, b, c, order) -> int:
    if not a:
        return 0
    j = _current_peak(order)
    aj, bj1, cj, cj1 = a[j - 1], b[j - 1], c[j], c[j - 1]
    best = None
    for d in range(min(cj, cj1) + 1):
        if cj - d > aj + cj - cj1 or cj1 - d > bj1 - cj + cj1:
            continue
        a2, b2, c2 = _merge_state(a, b, c, j, d)
        v = (cj - d) * (aj - cj1 + d) + (cj1 - d) * (bj1 - cj + d) + _dim_rec(a2, b2, c2, order[1:])
        best = v if best is None else max(best, v)
    if best is None:
        raise InvariantError("empty stratum in fiber dimension recursion")
    return best


def _state(alpha: Partition, order, beta: Partition, k: int):
    pf = to_peak_form(alpha, k)
    order = _validate_order(tuple(order), pf.m)
    # depth vector needs an ambient wide enough for alpha
    n = k + (alpha[0] if alpha else 0)
    c = depth_vector(alpha, beta, k, n)
    return pf.a, pf.b, c, order


def euler_fiber(alpha: Partition, order, beta: Partition, k: int) -> int:
    """Euler characteristic of the fiber of Z_{alpha, order} over the cell of beta."""
    return _euler_rec(*_state(alpha, order, beta, k))


def fiber_poincare(alpha: Partition, order, beta: Partition, k: int) -> tuple[int, ...]:
    """q-refinement of euler_fiber: cell counts of the fiber by complex dimension.

    Gaussian binomials replace the binomials of the recursion; the value at
    q = 1 is euler_fiber and the degree is the fiber dimension.
    """
    return _poincare_rec(*_state(alpha, order, beta, k))


def fiber_dimension(alpha: Partition, order, beta: Partition, k: int) -> int:
    """Fiber dimension over the cell of beta, by the max-over-strata recursion."""
    return _dim_rec(*_state(alpha, order, beta, k))


# ---------------------------------------------------------------------------
# smallness and the singular locus


def is_small(alpha: Partition, order, k: int) -> bool:
    """True iff loci with i-dimensional fibers have codimension > 2i for all i >= 1."""
    alpha = normalize(alpha)
    d = size(alpha)
    for beta in subpartitions(alpha):
        if beta == alpha:
            continue
        fd = fiber_dimension(alpha, order, beta, k)
        if fd >= 1 and d - size(beta) <= 2 * fd:
            return False
    return True


def find_small_order(alpha: Partition, k: int) -> tuple[int, ...]:
    """First peak order (lexicographically) giving a small resolution."""
    m = peak_count(alpha, k)
    for perm in itertools.permutations(range(1, m + 1)):
        if is_small(alpha, perm, k):
            return perm
    raise InvariantError(f"no small order found for {alpha}; contradicts existence theorem")


def singular_locus(alpha: Partition, k: int, n: int) -> tuple[Partition, ...]:
    """Maximal beta <= alpha whose cells lie in the singular locus of X_alpha.

    A cell is singular exactly when the relative depth vector is nonzero.
    """
    alpha = validate_in_box(alpha, k, n - k)
    sing = [
        beta
        for beta in subpartitions(alpha)
        if any(depth_vector(alpha, beta, k, n))
    ]
    maximal = [b for b in sing if not any(b != c and leq(b, c) for c in sing)]
    maximal.sort(key=lambda p: (-size(p), tuple(-q for q in p)))
    return tuple(maximal)


def fixed_point_partition(index_set, k: int) -> Partition:
    """Partition whose cell center is the given sorted k-element index set."""
    s = tuple(sorted(index_set))
    if len(s) != k:
        raise DomainError(f"index set {s} does not have {k} elements")
    return normalize(tuple(s[t - 1] - t for t in range(k, 0, -1)))


def plan_fixed_point_count(alpha: Partition, order, k: int) -> int:
    """Sum of fiber Euler characteristics over all cells below alpha."""
    return sum(euler_fiber(alpha, order, beta, k) for beta in subpartitions(alpha))
