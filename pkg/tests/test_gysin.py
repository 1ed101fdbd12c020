import itertools
import random

import pytest

from schubert_csm.errors import DomainError
from schubert_csm.gysin import (
    expand_in_quotient_alphabets,
    expr_mul,
    flag_to_grassmannian_push,
    fp_pushforward,
    fundamental_class_w0,
    pushforward_csm_w0,
    schur_in_leading_alphabets,
    tangent_factor,
    to_schubert_expansion,
    trimmed_ambient,
)
from schubert_csm.localization import pushforward_csm
from schubert_csm.partitions import enumerate_box, leq, subpartitions
from schubert_csm.symmetric import binomial_det, schur_eval
from schubert_csm.zelevinsky import build_plan, peak_count, reversing_order


def w0_plan(alpha, k, n):
    return build_plan(alpha, reversing_order(peak_count(alpha, k)), k, n)


def test_requires_order_reversing_plan():
    plan = build_plan((2, 1), (1, 2), 2, 4)
    with pytest.raises(DomainError):
        pushforward_csm_w0(plan)


def test_fundamental_class_one_peak():
    # a one-peak variety fills its trimmed ambient flag variety entirely
    plan = w0_plan((2, 2), 2, 4)
    assert fundamental_class_w0(plan) == {((),): 1}
    plan = w0_plan((1, 1), 2, 4)
    assert fundamental_class_w0(plan) == {((),): 1}
    assert pushforward_csm_w0(w0_plan((1, 1), 2, 4))[(1, 1)] == 1


def test_fundamental_class_two_factors():
    plan = w0_plan((2, 1), 2, 4)
    assert fundamental_class_w0(plan) == {((2,), ()): 1}


def test_fp_pushforward_index_shift():
    assert fp_pushforward((3, 3), (0, 0, 0), 3, 2) == (0, 0, 0, 0, 0)
    assert fp_pushforward((0, 0), (0,), 1, 2) == (-1, -1, 0)
    with pytest.raises(DomainError):
        fp_pushforward((1,), (0,), 1, 2)


def test_flag_push_of_fundamental_class_is_cycle_class():
    # Giambelli consistency: pushing [Z] yields the single Schubert class of alpha
    for k, n in [(2, 5), (3, 6)]:
        for alpha in enumerate_box(k, n - k):
            plan = w0_plan(alpha, k, n)
            ranks = tuple(s.r for s in plan.steps)
            pushed = flag_to_grassmannian_push(fundamental_class_w0(plan), ranks)
            exp = to_schubert_expansion(pushed, k, trimmed_ambient(plan))
            assert exp == {alpha: 1}


def test_to_schubert_expansion_examples():
    assert to_schubert_expansion({(2,): 1}, 2, 4) == {(1, 1): 1}
    assert to_schubert_expansion({(2, 2): 1}, 2, 4) == {(): 1}
    assert to_schubert_expansion({(): 1}, 2, 4) == {(2, 2): 1}
    # rows beyond the quotient rank or parts beyond k vanish
    assert to_schubert_expansion({(3,): 1}, 2, 4) == {}


def test_schur_in_leading_alphabets_matches_union_evaluation():
    rng = random.Random(9)
    ranks = (1, 2, 1)
    alphabets = [tuple(rng.randint(1, 6) for _ in range(r)) for r in ranks]
    for nu in [(1,), (2,), (1, 1), (2, 1), (2, 2)]:
        for upto in (1, 2, 3):
            expr = schur_in_leading_alphabets(nu, upto, ranks)
            val = sum(
                c
                * eval_monomial(mono, alphabets)
                for mono, c in expr.items()
            )
            union = tuple(w for al in alphabets[:upto] for w in al)
            assert val == schur_eval(nu, union)


def eval_monomial(mono, alphabets):
    out = 1
    for lam, alphabet in zip(mono, alphabets):
        out *= schur_eval(lam, alphabet)
    return out


def test_expr_mul_matches_numeric_product():
    rng = random.Random(4)
    ranks = (2, 1)
    alphabets = [tuple(rng.randint(1, 5) for _ in range(r)) for r in ranks]
    e1 = {((1,), ()): 2, ((), (1,)): 1}
    e2 = {((1, 1), (2,)): 3, ((), ()): 1}
    prod = expr_mul(e1, e2, ranks)
    lhs = sum(c * eval_monomial(m, alphabets) for m, c in e1.items()) * sum(
        c * eval_monomial(m, alphabets) for m, c in e2.items()
    )
    rhs = sum(c * eval_monomial(m, alphabets) for m, c in prod.items())
    assert lhs == rhs


def test_dual_chern_class_sign_rule():
    # c_p of a dual alphabet: evaluate s over negated roots
    for p, lam in [(1, (1,)), (2, (1, 1)), (2, (2,))]:
        w = (2, 5, 7)
        assert schur_eval(lam, tuple(-x for x in w)) == (-1) ** sum(lam) * schur_eval(lam, w)


def test_tensor_chern_class_expansion_identity():
    # c(E^dual x F) = sum of D^l_{lam,mu} s_mu(E^dual) s_{Dtilde(lam)}(F),
    # checked as a polynomial identity at random integer root alphabets
    from schubert_csm.partitions import conjugate, dual_in_box

    rng = random.Random(17)
    for l, r in [(1, 1), (1, 2), (2, 1), (2, 2), (2, 3)]:
        for _ in range(3):
            e = tuple(rng.randint(-3, 4) for _ in range(l))
            f = tuple(rng.randint(-3, 4) for _ in range(r))
            direct = 1
            for a in e:
                for b in f:
                    direct *= 1 + b - a
            total = 0
            for lam in enumerate_box(l, r):
                dd = conjugate(dual_in_box(lam, l, r))
                for mu in subpartitions(lam):
                    d = binomial_det(lam, mu, l)
                    if d:
                        dual_val = schur_eval(mu, tuple(-x for x in e))
                        total += d * dual_val * schur_eval(dd, f)
            assert total == direct


def test_engine_equivalence_p23():
    for alpha in enumerate_box(2, 3):
        plan = w0_plan(alpha, 2, 5)
        assert pushforward_csm_w0(plan) == pushforward_csm(plan)


def test_engine_equivalence_sampled_p33():
    for alpha in [(3, 2, 1), (2, 2, 1), (3, 3, 1), (2, 1, 1), (3, 3, 3)]:
        plan = w0_plan(alpha, 3, 6)
        assert pushforward_csm_w0(plan) == pushforward_csm(plan)


def test_pushforward_supported_below_alpha():
    for alpha in enumerate_box(2, 3):
        plan = w0_plan(alpha, 2, 5)
        assert all(leq(beta, alpha) for beta in pushforward_csm_w0(plan))


def test_corollary_terms_push_to_nonnegative_classes():
    # every single (lambda, mu) choice across the tangent factors pushes to a
    # non-negative Schubert combination
    for alpha in enumerate_box(2, 3):
        plan = w0_plan(alpha, 2, 5)
        ranks = tuple(s.r for s in plan.steps)
        ambient = trimmed_ambient(plan)
        per_factor = []
        for i, step in enumerate(plan.steps, start=1):
            choices = []
            for lam in enumerate_box(step.l, step.r):
                for mu in subpartitions(lam):
                    d = binomial_det(lam, mu, step.l)
                    if d:
                        choices.append((i, lam, mu, d))
            per_factor.append(choices)
        for combo in itertools.product(*per_factor):
            expr = fundamental_class_w0(plan)
            coeff = 1
            for i, lam, mu, d in combo:
                coeff *= d
                from schubert_csm.partitions import conjugate, dual_in_box

                dd = conjugate(dual_in_box(lam, plan.steps[i - 1].l, plan.steps[i - 1].r))
                part = expr_mul(
                    expand_in_quotient_alphabets(plan, ("dual_sub_schur", i, mu)),
                    expand_in_quotient_alphabets(plan, ("step_quotient_schur", i, dd)),
                    ranks,
                )
                expr = expr_mul(expr, part, ranks)
            pushed = to_schubert_expansion(
                flag_to_grassmannian_push(expr, ranks), 2, ambient
            )
            assert all(coeff * v >= 0 for v in pushed.values()), (alpha, combo, pushed)


def test_push_then_straighten_consistency():
    # pushing a non-partition block sequence equals straightening first
    ranks = (1, 2)
    expr = {((3,), (1, 0)): 2, ((2,), (2, 1)): 1}
    direct = flag_to_grassmannian_push(expr, ranks)
    assert all(v for v in direct.values())
    total_direct = sum(direct.values())
    # straighten-first route: monomials already have partition blocks here,
    # so both routes must literally agree
    again = flag_to_grassmannian_push(dict(expr), ranks)
    assert direct == again and total_direct == sum(again.values())
