import random
from fractions import Fraction

import pytest

from quivertex import descendent as dc
from quivertex import quiver as qv
from quivertex.descendent import DescendentPoly
from quivertex.symfunc import SymFunc


F = Fraction
A1 = qv.builtin("linear(1)")
BEILINSON = qv.builtin("beilinson_p2")


def ch(k, v="1"):
    return DescendentPoly.ch(k, v)


def test_r_op_basic():
    assert dc.r_op(A1, 1, ch(2)) == ch(3).scale(6)  # 2*3
    assert dc.r_op(A1, -1, ch(0)) == DescendentPoly.zero()
    assert dc.r_op(A1, -1, ch(3)) == ch(2)
    assert dc.r_op(A1, 0, ch(4)) == ch(4).scale(4)
    assert dc.r_op(A1, 2, ch(1) * ch(1)) == (ch(3) * ch(1)).scale(12)


def test_r_op_kills_ch0():
    for n in range(0, 4):
        assert dc.r_op(A1, n, ch(0)) == DescendentPoly.zero()


def test_r_op_is_derivation():
    rng = random.Random(2)
    for n in range(-1, 4):
        for _ in range(10):
            f = _random_poly(rng, BEILINSON)
            g = _random_poly(rng, BEILINSON)
            lhs = dc.r_op(BEILINSON, n, f * g)
            rhs = dc.r_op(BEILINSON, n, f) * g + f * dc.r_op(BEILINSON, n, g)
            assert lhs == rhs


def test_t_element_a1():
    assert dc.t_element(A1, 0) == ch(0) * ch(0)
    assert dc.t_element(A1, 1) == (ch(0) * ch(1)).scale(2)
    assert dc.t_element(A1, -1) == DescendentPoly.zero()


def test_t_element_beilinson_degree0():
    # sum chi(v,w) ch_0(v) ch_0(w) with chi rows (1,-3,6),(0,1,-3),(0,0,1)
    t0 = dc.t_element(BEILINSON, 0)
    c = lambda v: DescendentPoly.ch(0, v)
    expected = (
        c("1") * c("1")
        + c("2") * c("2")
        + c("3") * c("3")
        + (c("1") * c("2")).scale(-3)
        + (c("2") * c("3")).scale(-3)
        + (c("1") * c("3")).scale(6)
    )
    assert t0 == expected


def test_l_op_examples():
    assert dc.l_op(A1, -1, ch(1)) == ch(0)
    assert dc.l_op(A1, 0, DescendentPoly.one()) == ch(0) * ch(0)
    assert dc.l_op(A1, 1, ch(1)) == ch(2).scale(2) + (ch(0) * ch(1) * ch(1)).scale(2)


def test_framed_t_element():
    n_framing = qv.FramingVector(A1, [5])
    assert dc.framed_t_element(A1, n_framing, 1) == (ch(0) * ch(1)).scale(2) - ch(1).scale(5)
    assert dc.framed_t_element(A1, n_framing, 0) == ch(0) * ch(0) - ch(0).scale(5)


def test_virasoro_bracket():
    # [L_n, L_m] = (m - n) L_{n+m} on monomials of ch-weight <= 6
    rng = random.Random(4)
    for quiver in (A1, BEILINSON):
        monos = [_random_poly(rng, quiver) for _ in range(6)]
        for n in range(-1, 4):
            for m in range(-1, 4):
                for f in monos:
                    lhs = dc.l_op(quiver, n, dc.l_op(quiver, m, f)) - dc.l_op(
                        quiver, m, dc.l_op(quiver, n, f)
                    )
                    rhs = dc.l_op(quiver, n + m, f).scale(m - n) if n + m >= -1 else f.scale(0)
                    assert lhs == rhs, (quiver, n, m)


def test_framed_virasoro_bracket():
    rng = random.Random(9)
    framing = qv.FramingVector(BEILINSON, [2, 0, 1])
    monos = [_random_poly(rng, BEILINSON) for _ in range(5)]
    for n in range(0, 4):
        for m in range(0, 4):
            for f in monos:
                lhs = dc.l_op_framed(
                    BEILINSON, framing, n, dc.l_op_framed(BEILINSON, framing, m, f)
                ) - dc.l_op_framed(
                    BEILINSON, framing, m, dc.l_op_framed(BEILINSON, framing, n, f)
                )
                rhs = dc.l_op_framed(BEILINSON, framing, n + m, f).scale(m - n)
                assert lhs == rhs, (n, m)


def test_l_wt0_constant_and_kernel():
    assert dc.l_wt0(A1, DescendentPoly.one()) == DescendentPoly.zero()
    # frozen two-step evaluation on ch_1: -L_{-1}(ch_1) + L_0(R_{-1} ch_1)
    expected = ch(0) * ch(0) * ch(0) - ch(0)
    assert dc.l_wt0(A1, ch(1)) == expected


def test_l_wt0_lands_in_r_minus1_kernel():
    rng = random.Random(6)
    dims = {"1": 2, "2": 1, "3": 3}
    for quiver in (A1, BEILINSON):
        for _ in range(8):
            f = _random_poly(rng, quiver, max_weight=4)
            image = dc.l_wt0(quiver, f)
            shifted = dc.r_op(quiver, -1, image)
            assert shifted == DescendentPoly.zero()
            # and in the quotient ch_0(v) = d_v as well
            assert shifted.substitute_ch0(dims) == DescendentPoly.zero()


def test_substitute_ch0():
    f = ch(0) * ch(1) + ch(2).scale(3)
    g = f.substitute_ch0({"1": 4})
    assert g == ch(1).scale(4) + ch(2).scale(3)


def test_to_symfunc():
    assert dc.to_symfunc(ch(2), 0) == SymFunc({(2,): F(1, 2)})
    assert dc.to_symfunc(ch(0) * ch(1), 3) == SymFunc({(1,): 3})
    with pytest.raises(ValueError):
        dc.to_symfunc(DescendentPoly.ch(1, "1") * DescendentPoly.ch(1, "2"), 0)


def test_framed_t_to_symfunc():
    # with ch_0 = k: sum_{a+b=n, a,b>0} p_a p_b + (2k - N) p_n
    n_framing = qv.FramingVector(A1, [4])
    for n in (1, 2, 3):
        for k in (0, 1, 3):
            got = dc.to_symfunc(dc.framed_t_element(A1, n_framing, n), k)
            expected = SymFunc.zero()
            for a in range(1, n):
                expected = expected + SymFunc.p(a) * SymFunc.p(n - a)
            expected = expected + SymFunc.p(n).scale(2 * k - 4)
            assert got == expected, (n, k)


def _random_poly(rng, quiver, max_weight=6):
    """Random monomial with total ch-index <= max_weight, as a 1-term poly."""
    factors = []
    weight = 0
    for _ in range(rng.randint(1, 3)):
        k = rng.randint(0, max(0, max_weight - weight))
        weight += k
        v = rng.choice(quiver.vertices)
        factors.append((k, v))
    return DescendentPoly({tuple(sorted(factors)): 1})
