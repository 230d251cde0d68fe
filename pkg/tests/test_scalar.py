import random

import pytest
from fractions import Fraction

from qplane.scalar import Coeff, ParameterContext, Scalar, C_I, C_ONE
from qplane.errors import (
    DomainError,
    IndeterminateError,
    PoleError,
    UnresolvedSymbolError,
)


@pytest.fixture(scope="module")
def ctx():
    return ParameterContext(4)


def test_additive_inverse(ctx):
    r = ctx.r
    a = (r - 1 / r) + (1 / r - r)
    assert a.is_zero()


def test_reduction_example(ctx):
    # (1 - r^-2) / ((1 - r^-4)(1 + r^2)) == 1 / (2 + r^2 + r^-2)
    r = ctx.r
    lhs = (ctx.one - r ** -2) / ((ctx.one - r ** -4) * (ctx.one + r ** 2))
    rhs = ctx.one / (ctx.from_int(2) + r ** 2 + r ** -2)
    assert lhs == rhs


def test_expansion_example(ctx):
    r = ctx.r
    assert (r - 1 / r) * (r + 1 / r) == r ** 2 - r ** -2


def test_conj_r(ctx):
    assert ctx.r.conj() == ctx.r ** -1


def test_conj_q_minkowski():
    # Appendix A parameters: conj(q) = q / r^2 with q = q12
    ctx = ParameterContext(4, minkowski=True)
    q = ctx.q_pair(1, 2)
    assert q.conj() == q * ctx.r ** -2


def test_conj_i_lambda(ctx):
    # i * (r - 1/r) is fixed: i -> -i and r -> 1/r compensate
    a = ctx.i * ctx.lam
    assert a.conj() == a


def test_conj_involutive_random(ctx):
    rng = random.Random(7)
    for _ in range(40):
        a = _random_scalar(ctx, rng)
        assert a.conj().conj() == a


def test_conj_bullet_rules(ctx):
    # qbar_1 = 1/q_1 (index 1 not in {2,3}), qbar_2 = 1/q_3 = q_2/r^2
    q1, q2 = ctx.q_dot(1), ctx.q_dot(2)
    assert q1.conj() == q1 ** -1
    assert q2.conj() == ctx.q_dot(3) ** -1
    assert q2.conj() == q2 * ctx.r ** -2


def test_derived_bullet_resolution(ctx):
    # resolving q_a then q_a' multiplies to r^2, and twice is idempotent
    for a in (1, 2):
        assert ctx.q_dot(a) * ctx.q_dot(ctx.prime(a)) == ctx.r ** 2
    assert ctx.q_dot(3) == ctx.q_dot(3)


def test_pair_resolution(ctx):
    # q_ba = r^2/q_ab and q_a'b' = q_ba
    q12 = ctx.q_pair(1, 2)
    assert ctx.q_pair(2, 1) == ctx.r ** 2 / q12
    assert ctx.q_pair(4, 3) == ctx.q_pair(2, 1)
    assert ctx.q_pair(3, 4) == q12
    assert ctx.q_pair(2, 4) == ctx.q_pair(1, 3)


def test_eval_unit_circle(ctx):
    # eval(r - 1/r; r = (3+4i)/5) -> 8i/5
    rv = Coeff(Fraction(3, 5), Fraction(4, 5))
    val = (ctx.r - ctx.r ** -1).eval(_assign(ctx, r=rv))
    assert val == Coeff(0, Fraction(8, 5))


def test_eval_indeterminate(ctx):
    # Q_4(r) at r = 1 is 0/0
    r = ctx.r
    q4 = (ctx.one - r ** -2) / ((ctx.one - r ** -4) * (ctx.one + r ** 2))
    with pytest.raises(IndeterminateError):
        q4.eval(_assign(ctx, r=Coeff(1)))


def test_eval_pole(ctx):
    a = ctx.one / (ctx.r - ctx.one)
    with pytest.raises(PoleError):
        a.eval(_assign(ctx, r=Coeff(1)))


def test_eval_hbar(ctx):
    assert ctx.hbar.eval(_assign(ctx, hbar=Coeff(1))) == C_ONE


def test_eval_homomorphism(ctx):
    rng = random.Random(3)
    pt = _assign(ctx, r=Coeff(Fraction(3, 5), Fraction(4, 5)))
    for _ in range(25):
        a = _random_scalar(ctx, rng)
        b = _random_scalar(ctx, rng)
        assert (a + b).eval(pt) == a.eval(pt) + b.eval(pt)
        assert (a * b).eval(pt) == a.eval(pt) * b.eval(pt)


def test_field_axioms_random(ctx):
    rng = random.Random(11)
    for _ in range(200):
        a = _random_scalar(ctx, rng)
        b = _random_scalar(ctx, rng)
        c = _random_scalar(ctx, rng)
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        if not a.is_zero():
            assert a * a.inverse() == ctx.one


def test_equality_congruence(ctx):
    rng = random.Random(13)
    for _ in range(100):
        a = _random_scalar(ctx, rng)
        num, den = a.num, a.den
        scale = _random_scalar(ctx, rng)
        while scale.is_zero():
            scale = _random_scalar(ctx, rng)
        b = (a * scale) / scale
        c = a + ctx.zero
        assert a == b and b == c and a == c


def test_zero_difference_is_canonical_zero(ctx):
    rng = random.Random(17)
    for _ in range(50):
        a = _random_scalar(ctx, rng)
        b = _random_scalar(ctx, rng)
        diff = a - b
        assert diff.is_zero() == (a == b)


def test_conj_eval_compatibility(ctx):
    # eval(conj(a); pt) equals the complex conjugate of eval(a; conj-pt),
    # where conj-pt sends each symbol to conj(eval(involution image; pt));
    # for |r| = 1 this keeps r fixed and moves the q's per the table.
    rng = random.Random(23)
    rv = Coeff(Fraction(3, 5), Fraction(4, 5))
    pt = _assign(ctx, r=rv)
    cpt = {}
    for name in ctx.symbols:
        unit = ctx.r if name == "r" else ctx._mono(ctx._unit_exp(name))
        cpt[name] = unit.conj().eval(pt).conj()
    assert cpt["r"] == rv  # unit modulus: r is fixed by the conj point
    for _ in range(25):
        a = _random_scalar(ctx, rng)
        try:
            lhs = a.conj().eval(pt)
            rhs = a.eval(cpt).conj()
        except (PoleError, IndeterminateError):
            continue
        assert lhs == rhs


def test_zero_inverse_raises(ctx):
    with pytest.raises(DomainError):
        ctx.zero.inverse()


def test_unknown_symbol(ctx):
    with pytest.raises(UnresolvedSymbolError):
        ctx.q_pair(1, 4)  # b = a' is not a twist slot


def test_half_powers_odd_n():
    ctx = ParameterContext(5)
    # rho = (3/2, 1/2, 0, -1/2, -3/2) in half units
    assert [ctx.rho2(a) for a in range(1, 6)] == [3, 1, 0, -1, -3]
    s = ctx.r_half_power(3)
    assert s * s == ctx.r ** 3
    sq = Coeff(2)
    val = s.eval(_assign(ctx, sqrt_r=sq, r=sq * sq))
    assert val == Coeff(8)


def test_text_round_trip_examples(ctx):
    from qplane.parser import parse_scalar
    rng = random.Random(29)
    for _ in range(40):
        a = _random_scalar(ctx, rng)
        text = a.text()
        b = parse_scalar(text, ctx)
        assert a == b
        assert b.text() == text


def _assign(ctx, **over):
    base = {
        "r": Coeff(Fraction(3, 5), Fraction(4, 5)),
        "hbar": Coeff(1),
        "qa1": Coeff(Fraction(2)),
        "qa2": Coeff(Fraction(3)),
        "q12": Coeff(Fraction(5, 2)),
        "q13": Coeff(Fraction(7, 3)),
    }
    base.update(over)
    return {k: v for k, v in base.items() if k in ctx.symbols or k in ("sqrt_r", "r")}


def _random_scalar(ctx, rng, maxterms=3):
    def rand_poly():
        p = ctx.zero
        for _ in range(rng.randint(1, maxterms)):
            coeff = ctx.from_coeff(Coeff(rng.randint(-3, 3), rng.randint(-1, 1)))
            mono = ctx.r ** rng.randint(-2, 2)
            if "qa1" in ctx.symbols:
                mono = mono * ctx.q_dot(1) ** rng.randint(-1, 1)
            p = p + coeff * mono
        return p

    num = rand_poly()
    den = rand_poly()
    while den.is_zero():
        den = rand_poly()
    return num / den
