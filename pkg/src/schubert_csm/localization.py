"""Torus fixed points and Bott-residue integration on Zelevinsky resolutions.

A fixed point is a tuple of index subsets of {1..n}, one per factor, nested
according to the plan's incidence bounds. Classes restrict to fixed points as
graded integer vectors (degree 0..dim Z); the Bott formula sums the top-degree
component divided by the product of tangent weights, in exact rationals.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import prod
from typing import Sequence

from .errors import DomainError, InvariantError
from .partitions import Partition, normalize, size, subpartitions
from .symmetric import chern_schur_eval, elementary_values
from .zelevinsky import ResolutionPlan

FixedPoint = tuple[tuple[int, ...], ...]


def default_weights(n: int) -> tuple[int, ...]:
    """The paper-style assignment w_i = i - 1."""
    return tuple(range(n))


def _check_weights(weights: Sequence[int], n: int) -> tuple[int, ...]:
    w = tuple(int(x) for x in weights)
    if len(w) != n:
        raise DomainError(f"expected {n} weights, got {len(w)}")
    if any(w[i] >= w[i + 1] for i in range(n - 1)):
        raise DomainError("weights must be strictly increasing")
    return w


def _bound_indices(bound, chosen: list[tuple[int, ...]]) -> frozenset[int]:
    if bound.kind == "flag":
        return frozenset(range(1, bound.dim + 1))
    return frozenset(chosen[bound.index - 1])


def enumerate_fixed_points(plan: ResolutionPlan) -> list[FixedPoint]:
    """All torus-fixed points, in construction order (nested subset DFS)."""
    out: list[FixedPoint] = []
    chosen: list[tuple[int, ...]] = []

    def rec(i: int):
        if i == plan.m:
            out.append(tuple(chosen))
            return
        step = plan.steps[i]
        left = _bound_indices(step.left, chosen)
        right = _bound_indices(step.right, chosen)
        pool = sorted(right - left)
        for extra in itertools.combinations(pool, step.k - len(left)):
            chosen.append(tuple(sorted(left | set(extra))))
            rec(i + 1)
            chosen.pop()

    rec(0)
    return out


def tangent_weights(plan: ResolutionPlan, fp: FixedPoint, weights: Sequence[int]) -> tuple[int, ...]:
    """Multiset of tangent character values at a fixed point; size = dim Z."""
    w = _check_weights(weights, plan.n)
    out: list[int] = []
    chosen = list(fp)
    for i, step in enumerate(plan.steps):
        s = set(fp[i])
        left = _bound_indices(step.left, chosen)
        right = _bound_indices(step.right, chosen)
        for a_idx in sorted(s - left):
            for b_idx in sorted(right - s):
                t = w[b_idx - 1] - w[a_idx - 1]
                if t == 0:
                    raise InvariantError("zero tangent weight; weights not generic")
                out.append(t)
    if len(out) != plan.dim:
        raise InvariantError("tangent weight count differs from dim Z")
    return tuple(out)


# ---------------------------------------------------------------------------
# graded per-fixed-point class values
#
# A class spec is one of:
#   ("one",)                     the fundamental class
#   ("chern_total_tangent",)     c(TZ)
#   ("c1_dual_sub", i)           c_1(U_i dual)
#   ("c1_dual_quot", i, j)       c_1((U_i/U_j) dual), U_j inside U_i
#   ("extractor", beta)          Schur determinant in Chern classes of V/U_m


def _graded(values: dict[int, int], top: int) -> list[int]:
    return [values.get(d, 0) for d in range(top + 1)]


def class_value(plan: ResolutionPlan, fp: FixedPoint, weights: Sequence[int], spec) -> list[int]:
    """Restriction of a class spec to a fixed point, as a graded vector."""
    w = tuple(weights)
    top = plan.dim
    kind = spec[0]
    if kind == "one":
        return _graded({0: 1}, top)
    if kind == "chern_total_tangent":
        tw = tangent_weights(plan, fp, w)
        return elementary_values(tw, top)
    if kind == "c1_dual_sub":
        i = spec[1]
        return _graded({0: 1, 1: -sum(w[a - 1] for a in fp[i - 1])}, top)
    if kind == "c1_dual_quot":
        i, j = spec[1], spec[2]
        idx = set(fp[i - 1]) - set(fp[j - 1])
        return _graded({0: 1, 1: -sum(w[a - 1] for a in idx)}, top)
    if kind == "extractor":
        beta = normalize(spec[1])
        quot = [w[b - 1] for b in range(1, plan.n + 1) if b not in set(fp[-1])]
        return _graded({size(beta): chern_schur_eval(beta, quot)}, top)
    raise DomainError(f"unknown class spec {spec!r}")


def _product_top(factors: list[list[int]], top: int) -> int:
    acc = [0] * (top + 1)
    acc[0] = 1
    for f in factors:
        new = [0] * (top + 1)
        for d1, v1 in enumerate(acc):
            if v1:
                for d2 in range(0, top + 1 - d1):
                    if f[d2]:
                        new[d1 + d2] += v1 * f[d2]
        acc = new
    return acc[top]


def bott_terms(plan: ResolutionPlan, integrand, weights=None) -> list[Fraction]:
    """Per-fixed-point contributions of the Bott residue formula."""
    w = _check_weights(weights if weights is not None else default_weights(plan.n), plan.n)
    terms = []
    for fp in enumerate_fixed_points(plan):
        tw = tangent_weights(plan, fp, w)
        euler = prod(tw) if tw else 1
        if euler == 0:
            raise InvariantError("zero Euler class denominator")
        top = _product_top([class_value(plan, fp, w, s) for s in integrand], plan.dim)
        terms.append(Fraction(top, euler))
    return terms


def bott_integral(plan: ResolutionPlan, integrand, weights=None) -> Fraction:
    """Integral over Z of a product of class specs, as an exact rational."""
    return sum(bott_terms(plan, integrand, weights), Fraction(0))


def pushforward_csm(plan: ResolutionPlan, weights=None) -> dict[Partition, int]:
    """Schubert expansion of the pushforward of c(TZ) cap [Z] to Gr(k, n).

    The coefficient of the Schubert variety of beta is the Bott integral of
    c(TZ) against the Chern-Schur extractor of beta; every integral must be
    an exact integer.
    """
    w = _check_weights(weights if weights is not None else default_weights(plan.n), plan.n)
    betas = subpartitions(plan.alpha)
    gamma = {b: Fraction(0) for b in betas}
    top = plan.dim
    for fp in enumerate_fixed_points(plan):
        tw = tangent_weights(plan, fp, w)
        euler = prod(tw) if tw else 1
        ctz = elementary_values(tw, top)
        quot = [w[b - 1] for b in range(1, plan.n + 1) if b not in set(fp[-1])]
        for beta in betas:
            num = ctz[top - size(beta)] * chern_schur_eval(beta, quot)
            if num:
                gamma[beta] += Fraction(num, euler)
    out: dict[Partition, int] = {}
    for beta, val in gamma.items():
        if val.denominator != 1:
            raise InvariantError(f"non-integral Bott sum {val} at {beta}")
        if val:
            out[beta] = int(val)
    return out
