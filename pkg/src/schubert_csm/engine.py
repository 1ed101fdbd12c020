"""CSM classes of Schubert cells and varieties, Chern-Mather classes, local
Euler obstructions, the codimension-one formula and positivity audits.

The pipeline: assemble the unipotent matrix d of fiber Euler characteristics
over the stratification, invert it exactly, and combine resolution
pushforwards with the inverse rows. Each cell class uses the resolution of
its own partition.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from . import gysin, localization
from .errors import DomainError, InvariantError
from .partitions import (
    Partition,
    enumerate_box,
    leq,
    normalize,
    padded,
    subpartitions,
    to_peak_form,
    validate_in_box,
)
from .symmetric import invert_unipotent
from .zelevinsky import (
    build_plan,
    euler_fiber,
    find_small_order,
    identity_order,
    is_small,
    peak_count,
    reversing_order,
)

Expansion = dict[Partition, int]


@dataclass(frozen=True)
class CsmTable:
    """Square table of Schubert expansions over the box enumeration order."""

    kind: str  # cell-CSM | variety-CSM | mather | euler-obstruction | d-matrix
    k: int
    n: int
    index: tuple[Partition, ...]
    rows: dict[Partition, Expansion] = field(compare=False)

    def value(self, alpha: Partition, beta: Partition) -> int:
        return self.rows.get(normalize(alpha), {}).get(normalize(beta), 0)


ORDER_STRATEGIES = ("small", "id", "w0")


def order_for(alpha: Partition, k: int, strategy: str) -> tuple[int, ...]:
    """Peak order chosen by a named strategy (or an explicit permutation)."""
    if isinstance(strategy, (tuple, list)):
        return tuple(strategy)
    m = peak_count(alpha, k)
    if strategy == "small":
        return find_small_order(alpha, k)
    if strategy == "id":
        return identity_order(m)
    if strategy == "w0":
        return reversing_order(m)
    raise DomainError(f"unknown order strategy {strategy!r}")


@lru_cache(maxsize=None)
def _pushforward_cached(alpha: Partition, k: int, n: int, order: tuple[int, ...]) -> tuple:
    plan = build_plan(alpha, order, k, n)
    return tuple(sorted(localization.pushforward_csm(plan).items()))


def resolution_pushforward(
    alpha: Partition,
    k: int,
    n: int,
    order,
    engine: str = "localization",
    weights=None,
    verify: bool = False,
) -> Expansion:
    """Schubert expansion of the pushforward of c(TZ) cap [Z] for one plan."""
    alpha = validate_in_box(alpha, k, n - k)
    order = tuple(order)
    if weights is None and engine == "localization" and not verify:
        return dict(_pushforward_cached(alpha, k, n, order))
    plan = build_plan(alpha, order, k, n)
    loc = localization.pushforward_csm(plan, weights) if engine != "gysin" else None
    gys = None
    if engine == "gysin" or (verify and order == reversing_order(plan.m)):
        gys = gysin.pushforward_csm_w0(plan)
    if engine == "gysin":
        return gys
    if gys is not None and gys != loc:
        raise InvariantError(f"engine disagreement for {alpha} with order {order}")
    return loc


def d_matrix(k: int, n: int, strategy: str = "small") -> CsmTable:
    """Unipotent matrix of fiber Euler characteristics d_{alpha, beta}."""
    index = tuple(enumerate_box(k, n - k))
    rows: dict[Partition, Expansion] = {}
    for alpha in index:
        order = order_for(alpha, k, strategy)
        rows[alpha] = {
            beta: euler_fiber(alpha, order, beta, k) for beta in subpartitions(alpha)
        }
    return CsmTable("d-matrix", k, n, index, rows)


def e_matrix(dmat: CsmTable) -> CsmTable:
    """Exact integer inverse of the d-matrix."""
    index = dmat.index
    raw = [[dmat.rows[a].get(b, 0) for b in index] for a in index]
    inv = invert_unipotent(raw)
    rows = {
        a: {b: inv[i][j] for j, b in enumerate(index) if inv[i][j]}
        for i, a in enumerate(index)
    }
    return CsmTable("e-matrix", dmat.k, dmat.n, index, rows)


@lru_cache(maxsize=None)
def _matrices(k: int, n: int, strategy: str) -> tuple[CsmTable, CsmTable]:
    d = d_matrix(k, n, strategy)
    return d, e_matrix(d)


def csm_cell(
    alpha: Partition,
    k: int,
    n: int,
    strategy: str = "small",
    engine: str = "localization",
    verify: bool = False,
    weights=None,
) -> Expansion:
    """CSM class of the open Schubert cell of alpha, in the Schubert basis."""
    alpha = validate_in_box(alpha, k, n - k)
    _, emat = _matrices(k, n, strategy)
    total: Expansion = {}
    for beta, coeff in emat.rows[alpha].items():
        order = order_for(beta, k, strategy)
        push = resolution_pushforward(
            beta, k, n, order, engine=engine, verify=verify, weights=weights
        )
        for gamma, v in push.items():
            total[gamma] = total.get(gamma, 0) + coeff * v
    out = {g: v for g, v in total.items() if v}
    if out.get(alpha) != 1:
        raise InvariantError(f"leading coefficient of cell {alpha} is not 1")
    if out.get((), 0) != 1:
        raise InvariantError(f"point coefficient of cell {alpha} is not 1")
    return out


def csm_variety(alpha: Partition, k: int, n: int, strategy: str = "small", **kw) -> Expansion:
    """CSM class of the Schubert variety: sum of cell classes below alpha."""
    alpha = validate_in_box(alpha, k, n - k)
    total: Expansion = {}
    for beta in subpartitions(alpha):
        for gamma, v in csm_cell(beta, k, n, strategy, **kw).items():
            total[gamma] = total.get(gamma, 0) + v
    return {g: v for g, v in total.items() if v}


def chern_mather(
    alpha: Partition,
    k: int,
    n: int,
    engine: str = "localization",
    verify: bool = False,
    weights=None,
) -> Expansion:
    """Chern-Mather class: pushforward of c(TZ) over a small resolution."""
    alpha = validate_in_box(alpha, k, n - k)
    if engine == "gysin":
        order = reversing_order(peak_count(alpha, k))
        if not is_small(alpha, order, k):
            raise DomainError(
                "Gysin engine needs the order-reversing resolution to be small"
            )
    else:
        order = find_small_order(alpha, k)
    return resolution_pushforward(
        alpha, k, n, order, engine=engine, verify=verify, weights=weights
    )


def euler_obstruction(alpha: Partition, beta: Partition, k: int, n: int) -> int:
    """Local Euler obstruction of X_alpha along the cell of beta."""
    alpha = validate_in_box(alpha, k, n - k)
    beta = validate_in_box(beta, k, n - k)
    if not leq(beta, alpha):
        raise DomainError(f"{beta} is not contained in {alpha}")
    return euler_fiber(alpha, find_small_order(alpha, k), beta, k)


def table(k: int, n: int, kind: str, strategy: str = "small", jobs: int = 1, verify: bool = False) -> CsmTable:
    """Full table of one kind over the box enumeration order."""
    index = tuple(enumerate_box(k, n - k))
    if kind == "d-matrix":
        return d_matrix(k, n, strategy)
    if kind == "euler-obs":
        d = d_matrix(k, n, "small")
        return CsmTable("euler-obstruction", k, n, index, d.rows)

    def row(alpha: Partition) -> Expansion:
        if kind == "cell":
            return csm_cell(alpha, k, n, strategy, verify=verify)
        if kind == "variety":
            return csm_variety(alpha, k, n, strategy, verify=verify)
        if kind == "mather":
            return chern_mather(alpha, k, n)
        raise DomainError(f"unknown table kind {kind!r}")

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(row, index))
        rows = dict(zip(index, results))
    else:
        rows = {alpha: row(alpha) for alpha in index}
    kind_name = {"cell": "cell-CSM", "variety": "variety-CSM", "mather": "mather"}[kind]
    return CsmTable(kind_name, k, n, index, rows)


def verify_engines(k: int, n: int) -> None:
    """Cross-check the localization and Gysin engines on every w0 plan."""
    for alpha in enumerate_box(k, n - k):
        order = reversing_order(peak_count(alpha, k))
        resolution_pushforward(alpha, k, n, order, verify=True)


# ---------------------------------------------------------------------------
# codimension-one coefficients


def peak_removal_target(alpha: Partition, i: int, k: int) -> Partition:
    """alpha minus the corner box of its i-th peak (distinct parts, smallest first)."""
    alpha = normalize(alpha)
    pf = to_peak_form(alpha, k)
    if not 1 <= i <= pf.m:
        raise DomainError(f"peak index {i} out of range 1..{pf.m}")
    value = sum(pf.b[: i])
    if value == 0:
        raise DomainError("cannot remove a box from a zero part")
    p = list(padded(alpha, k))
    row = max(r for r in range(k) if p[r] == value)
    p[row] -= 1
    return normalize(p)


def codim1_pushforward_value(alpha: Partition, i: int, k: int) -> int:
    """Coefficient of the codim-1 stratum in the resolution pushforward:
    (a_i + ... + a_m) + (b_0 + ... + b_{i-1})."""
    pf = to_peak_form(normalize(alpha), k)
    if not 1 <= i <= pf.m:
        raise DomainError(f"peak index {i} out of range 1..{pf.m}")
    return sum(pf.a[i - 1 :]) + sum(pf.b[:i])


def codim1_coefficient(alpha: Partition, i: int, k: int, n: int) -> int:
    """Cell-CSM coefficient at the codim-1 partition under peak i.

    Equals the pushforward value minus one: the number of boxes in the
    anti-hook of the removed corner box.
    """
    validate_in_box(alpha, k, n - k)
    value = codim1_pushforward_value(alpha, i, k) - 1
    if value <= 0:
        raise InvariantError("codim-1 coefficient must be positive")
    return value


# ---------------------------------------------------------------------------
# positivity


@dataclass(frozen=True)
class PositivityReport:
    k: int
    n: int
    minima: dict[str, dict[Partition, int]]
    negatives: tuple[tuple[str, Partition, Partition, int], ...]

    @property
    def all_nonnegative(self) -> bool:
        return not self.negatives


def positivity_report(k: int, n: int, strategy: str = "small") -> PositivityReport:
    """Minimum coefficient of every cell-CSM, variety-CSM and Mather class."""
    minima: dict[str, dict[Partition, int]] = {}
    negatives: list[tuple[str, Partition, Partition, int]] = []
    for kind in ("cell", "variety", "mather"):
        t = table(k, n, kind, strategy)
        per: dict[Partition, int] = {}
        for alpha, row in t.rows.items():
            per[alpha] = min(row.values()) if row else 0
            for beta, v in row.items():
                if v < 0:
                    negatives.append((kind, alpha, beta, v))
        minima[kind] = per
    return PositivityReport(k, n, minima, tuple(negatives))


def weak_positivity_check(a: int, b: int, p: int, k: int, n: int) -> bool:
    """Verify the one-peak-off identity and positivity for alpha = (b+p, p^a).

    The order-reversing resolution has fiber P^b over the rectangle
    beta = ((p-1)^(a+1)) and is an isomorphism elsewhere, so
    csm(X_alpha) = push(Z_alpha) - b * csm(X_beta). Returns True when the
    identity holds and every coefficient of csm(X_alpha) is non-negative.
    """
    if min(a, b, p) <= 0:
        raise DomainError("a, b, p must be positive")
    alpha = validate_in_box((b + p,) + (p,) * a, k, n - k)
    beta = normalize(((p - 1),) * (a + 1))
    order = reversing_order(peak_count(alpha, k))
    push = resolution_pushforward(alpha, k, n, order)
    lhs = csm_variety(alpha, k, n)
    rhs: Expansion = dict(push)
    for gamma, v in csm_variety(beta, k, n).items():
        rhs[gamma] = rhs.get(gamma, 0) - b * v
    rhs = {g: v for g, v in rhs.items() if v}
    return lhs == rhs and all(v >= 0 for v in lhs.values())
