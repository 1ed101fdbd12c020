"""Symbolic Gysin pushforward for order-reversing resolution plans.

For the order-reversing peak order the resolution embeds in a partial flag
variety Fl(k_m, ..., k_1; V') over the trimmed ambient space V' = V^m (the
largest flag space used by alpha; Schubert classes below alpha do not see the
rest of V). Classes are integer combinations of monomials

    prod_i s_{lam(i)}(A_i),   A_i = U_{i-1}/U_i,  U_0 = V',

with rank(A_i) = r_i from the plan. Pushforward to the Grassmannian is the
Fulton-Pragacz index shift applied blockwise, followed by straightening and
conversion to the Schubert basis.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import DomainError, InvariantError
from .partitions import (
    Partition,
    conjugate,
    dual_in_box,
    enumerate_box,
    leq,
    normalize,
    padded,
    subpartitions,
)
from .symmetric import binomial_det, lr_skew_counts, schur_product, straighten
from .zelevinsky import ResolutionPlan, reversing_order

FlagExpr = dict[tuple[Partition, ...], int]


def _require_w0(plan: ResolutionPlan) -> None:
    if plan.order != reversing_order(plan.m):
        raise DomainError("Gysin engine requires the order-reversing plan")


def trimmed_ambient(plan: ResolutionPlan) -> int:
    """Dimension of V^m = V_{k + alpha_1}; the flag tower lives inside it."""
    return plan.k + (plan.alpha[0] if plan.alpha else 0)


def _ranks(plan: ResolutionPlan) -> tuple[int, ...]:
    return tuple(step.r for step in plan.steps)


def expr_mul(e1: FlagExpr, e2: FlagExpr, ranks: tuple[int, ...]) -> FlagExpr:
    """Product of two expressions, componentwise Littlewood-Richardson."""
    out: FlagExpr = {}
    for m1, c1 in e1.items():
        for m2, c2 in e2.items():
            partial: list[tuple[list[Partition], int]] = [([], c1 * c2)]
            for i in range(len(ranks)):
                nxt = []
                for mono, c in partial:
                    for nu, lr in schur_product(m1[i], m2[i], ranks[i]).items():
                        nxt.append((mono + [nu], c * lr))
                partial = nxt
                if not partial:
                    break
            for mono, c in partial:
                key = tuple(mono)
                out[key] = out.get(key, 0) + c
    return {k: v for k, v in out.items() if v}


def _monomial(ranks: tuple[int, ...], position: int, lam: Partition) -> FlagExpr:
    if len(lam) > ranks[position]:
        return {}
    mono = tuple(lam if i == position else () for i in range(len(ranks)))
    return {mono: 1}


@lru_cache(maxsize=None)
def _schur_in_leading(nu: Partition, upto: int, ranks: tuple[int, ...]) -> tuple:
    """s_nu(A_1 + ... + A_upto) as (monomial, coeff) pairs."""
    if upto == 1:
        return tuple(_monomial(ranks, 0, nu).items())
    out: FlagExpr = {}
    for rho in subpartitions(nu):
        skew = lr_skew_counts(nu, rho)
        left = dict(_schur_in_leading(rho, upto - 1, ranks))
        if not left:
            continue
        for sigma, c in skew.items():
            if len(sigma) > ranks[upto - 1]:
                continue
            for mono, cl in left.items():
                key = mono[: upto - 1] + (sigma,) + mono[upto:]
                out[key] = out.get(key, 0) + c * cl
    return tuple(sorted(out.items()))


def schur_in_leading_alphabets(nu: Partition, upto: int, ranks: tuple[int, ...]) -> FlagExpr:
    """Expand a Schur class of the direct sum A_1 + ... + A_upto."""
    return dict(_schur_in_leading(normalize(nu), upto, tuple(ranks)))


def fundamental_class_w0(plan: ResolutionPlan) -> FlagExpr:
    """Class of Z in the flag variety: a product of rectangular factors.

    The i-th incidence condition contributes the Thom-Porteous rectangle with
    r_i rows of width dim(W_left_i) in the alphabet A_i.
    """
    _require_w0(plan)
    ranks = _ranks(plan)
    mono = []
    for i, step in enumerate(plan.steps):
        width = step.left.dim
        mono.append(normalize((width,) * ranks[i]))
    return {tuple(mono): 1}


def tangent_factor(plan: ResolutionPlan, i: int) -> FlagExpr:
    """Factor i of c(TZ) expanded into quotient alphabets.

    c((U_i/W_left)^dual x (W_right/U_i)) expands with binomial-determinant
    coefficients; the dual sub side re-alphabets to s_{mu'}(A_1 + .. + A_i)
    and the quotient side is already the alphabet A_i.
    """
    _require_w0(plan)
    ranks = _ranks(plan)
    step = plan.steps[i - 1]
    li, ri = step.l, step.r
    out: FlagExpr = {}
    for lam in enumerate_box(li, ri):
        dd = conjugate(dual_in_box(lam, li, ri))
        for mu in subpartitions(lam):
            coeff = binomial_det(lam, mu, li)
            if not coeff:
                continue
            left = schur_in_leading_alphabets(conjugate(mu), i, ranks)
            if not left:
                continue
            term = expr_mul(left, _monomial(ranks, i - 1, dd), ranks)
            for mono, c in term.items():
                out[mono] = out.get(mono, 0) + coeff * c
    return {k: v for k, v in out.items() if v}


def expand_in_quotient_alphabets(plan: ResolutionPlan, spec) -> FlagExpr:
    """Expand a supported bundle class into the flag quotient alphabets.

    Specs: ("fundamental",), ("tangent_factor", i),
    ("dual_sub_schur", i, mu) for s_mu((U_i/W_left_i)^dual), and
    ("step_quotient_schur", i, lam) for s_lam(W_right_i/U_i).
    """
    _require_w0(plan)
    ranks = _ranks(plan)
    kind = spec[0]
    if kind == "fundamental":
        return fundamental_class_w0(plan)
    if kind == "tangent_factor":
        return tangent_factor(plan, spec[1])
    if kind == "dual_sub_schur":
        i, mu = spec[1], normalize(spec[2])
        return schur_in_leading_alphabets(conjugate(mu), i, ranks)
    if kind == "step_quotient_schur":
        i, lam = spec[1], normalize(spec[2])
        return _monomial(ranks, i - 1, lam)
    raise DomainError(f"unsupported bundle expression {spec!r}")


def fp_pushforward(lam, mu, s_rank: int, q_rank: int) -> tuple[int, ...]:
    """Fulton-Pragacz index shift for one Grassmannian bundle.

    For integer sequences lam (q_rank entries) and mu (s_rank entries), the
    pushforward of s_lam(Q) s_mu(S) is s_Lambda(E) with
    Lambda = (lam_1 - s, ..., lam_q - s, mu_1, ..., mu_s).
    """
    lam = tuple(lam)
    mu = tuple(mu)
    if len(lam) != q_rank or len(mu) != s_rank:
        raise DomainError("sequence length does not match bundle rank")
    return tuple(x - s_rank for x in lam) + mu


def flag_to_grassmannian_push(expr: FlagExpr, ranks: tuple[int, ...]) -> dict[Partition, int]:
    """Push a flag expression down the Grassmannian-bundle tower.

    Each monomial maps to the straightened Schur class of the block sequence
    Lambda_i = lam(i) - r_i x (r_{i+1} + ... + r_m) in the final quotient.
    """
    tails = [sum(ranks[i + 1 :]) for i in range(len(ranks))]
    out: dict[Partition, int] = {}
    for mono, c in expr.items():
        seq: list[int] = []
        for i, lam in enumerate(mono):
            if len(lam) > ranks[i]:
                raise InvariantError("monomial row count exceeds alphabet rank")
            seq.extend(p - tails[i] for p in padded(lam, ranks[i]))
        sign, nu = straighten(seq)
        if sign:
            out[nu] = out.get(nu, 0) + sign * c
    return {k: v for k, v in out.items() if v}


def to_schubert_expansion(classes: dict[Partition, int], k: int, n: int) -> dict[Partition, int]:
    """Convert quotient Schur classes on Gr(k, n) to the Schubert basis.

    s_nu(V/U) is the class of the Schubert variety of the box dual of the
    conjugate of nu; classes outside the box vanish.
    """
    width = n - k
    out: dict[Partition, int] = {}
    for nu, c in classes.items():
        nu = normalize(nu)
        if len(nu) > width or (nu and nu[0] > k):
            continue
        beta = dual_in_box(conjugate(nu), k, width)
        out[beta] = out.get(beta, 0) + c
    return {b: v for b, v in out.items() if v}


def pushforward_csm_w0(plan: ResolutionPlan) -> dict[Partition, int]:
    """Schubert expansion of the pushforward of c(TZ) cap [Z], symbolically.

    Must agree coefficient-by-coefficient with the localization engine on the
    same plan.
    """
    _require_w0(plan)
    ranks = _ranks(plan)
    ambient = trimmed_ambient(plan)
    expr = fundamental_class_w0(plan)
    for i in range(1, plan.m + 1):
        expr = expr_mul(expr, tangent_factor(plan, i), ranks)
    pushed = flag_to_grassmannian_push(expr, ranks)
    result = to_schubert_expansion(pushed, plan.k, ambient)
    for beta in result:
        if not leq(beta, plan.alpha):
            raise InvariantError(f"pushforward not supported below alpha: {beta}")
    return result
