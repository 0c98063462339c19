import itertools

import pytest

from galex import (
    gamma,
    gamma_inv,
    proj,
    psi,
    psi_lambda,
    verify_chain_map,
    verify_gamma_degenerate_spans,
)


# ----------------------------------------------------------------------- gamma

def test_gamma_t5_example(t5_trivial):
    s = t5_trivial.s
    gen = (None, (s.x_of(3, 1), s.x_of(1, 1), s.x_of(2, 1)))
    assert gamma(t5_trivial, gen) == ((1, 1, 1), (2, 6, 2))


def test_gamma_inv_t5_example(t5_trivial):
    s = t5_trivial.s
    out = gamma_inv(t5_trivial, ((1, 1, 1), (2, 6, 2)))
    assert out == (None, (s.x_of(3, 1), s.x_of(1, 1), s.x_of(2, 1)))


def test_gamma_equal_module_parts(t1_trivial):
    s = t1_trivial.s
    gen = (None, (s.x_of(2, 0), s.x_of(2, 1), s.x_of(2, 1)))
    gs, ms = gamma(t1_trivial, gen)
    assert ms == (0, 0, 2)


def test_gamma_xset_includes_slot_zero_difference(t1_xset):
    s = t1_xset.s
    gen = (s.x_of(1, 0), (s.x_of(0, 1), s.x_of(2, 1)))
    gs, ms = gamma(t1_xset, gen)
    assert gs == (0, 1, 1)
    assert ms[0] == 1  # 1 - 0
    assert ms[1] == 1  # 0 - 2 mod 3
    assert ms[2] == 2


def test_gamma_round_trip_exhaustive_degree2(t1_trivial, t1_xset):
    for sys in (t1_trivial, t1_xset):
        for gen in sys.basis("br", 2):
            assert gamma_inv(sys, gamma(sys, gen)) == gen
        for gen in sys.basis("bru", 2):
            assert gamma(sys, gamma_inv(sys, gen)) == gen


@pytest.mark.parametrize("degree", [2, 3])
def test_gamma_chain_square_t1(degree, t1_trivial, t1_xset):
    for sys in (t1_trivial, t1_xset):
        rep = verify_chain_map(sys, "gamma", degree)
        assert rep.passed, rep.failures()


@pytest.mark.parametrize("degree", [1, 2, 3])
def test_gamma_degenerate_span_equality_t1(degree, t1_trivial, t1_xset):
    for sys in (t1_trivial, t1_xset):
        assert verify_gamma_degenerate_spans(sys, degree)


# ------------------------------------------------------------------------- psi

def test_psi_three_term_expansion_trivial(t5_trivial):
    sys = t5_trivial
    s = sys.s
    act, phi, mul = s.module.act, s.phi.phi, s.group.mul

    def u(*gbits):
        total = s.group.identity
        for g, k in gbits:
            if k:
                total = mul[total][g]
        return total

    for gs, ms in [((1, 2, 1), (3, 5, 6)), ((0, 1, 2), (1, 2, 3))]:
        g1, g2, g3 = gs
        m1, m2, m3 = ms
        raw = [
            (((act[u((g2, 1), (g3, 1))][m1],
               act[mul[phi[g2]][g3]][m2],
               act[phi[mul[g2][g3]]][m3])), 1),
            (((act[g2][m1], act[phi[g2]][m2], act[phi[g2]][m3])), -1),
            (((act[g3][m1], act[g3][m2], act[phi[g3]][m3])), -1),
            (((m1, m2, m3)), 1),
        ]
        expected = {}
        for tup, c in raw:
            key = sys.canonical_gp(tup)
            expected[key] = expected.get(key, 0) + c
        expected = {k: v for k, v in expected.items() if v}
        assert psi(sys, (gs, ms)).terms == expected


def test_psi_eight_term_expansion_xset(t5_xset):
    sys = t5_xset
    s = sys.s
    act, phi, mul = s.module.act, s.phi.phi, s.group.mul
    e = s.group.identity
    gs = (2, 1, 2, 1)
    ms = (4, 3, 5, 6)
    expected = {}
    for k1, k2, k3 in itertools.product((0, 1), repeat=3):
        sign = -1 if (k1 + k2 + k3) % 2 else 1
        p1 = gs[1] if k1 else e
        p12 = mul[p1][gs[2]] if k2 else p1
        p123 = mul[p12][gs[3]] if k3 else p12
        u0 = p123
        u1 = mul[phi[p1]][mul[gs[2] if k2 else e][gs[3] if k3 else e]]
        u2 = mul[phi[p12]][gs[3] if k3 else e]
        u3 = phi[p123]
        tup = (act[u0][ms[0]], act[u1][ms[1]], act[u2][ms[2]], act[u3][ms[3]])
        key = sys.canonical_gp(tup)
        expected[key] = expected.get(key, 0) + sign
    expected = {k: v for k, v in expected.items() if v}
    assert psi(sys, (gs, ms)).terms == expected


def test_psi_t1_two_term_example(t1_trivial):
    # leading exponent fixed at zero leaves two patterns in degree two
    out = psi(t1_trivial, ((1, 1), (1, 2)))
    assert out.terms == {(1, 2): 1, (1, 1): -1}


def test_psi_does_not_depend_on_leading_group_entry(t5_trivial):
    sys = t5_trivial
    for g1, g1p in [(0, 1), (1, 2)]:
        for gs_tail in itertools.product(range(3), repeat=2):
            for ms in itertools.product(range(7), repeat=3):
                a = psi(sys, ((g1,) + gs_tail, ms))
                b = psi(sys, ((g1p,) + gs_tail, ms))
                assert a.terms == b.terms


@pytest.mark.parametrize("degree", [2, 3])
def test_psi_chain_square_t1(degree, t1_trivial, t1_xset):
    for sys in (t1_trivial, t1_xset):
        rep = verify_chain_map(sys, "psi", degree)
        assert rep.passed, rep.failures()


# ------------------------------------------------------------------ psi_lambda

def test_psi_lambda_zero_hom_kills_everything(t5_trivial, t5_lambda_zero):
    for gen in itertools.islice(iter(t5_trivial.basis("bru", 2)), 50):
        assert psi_lambda(t5_trivial, gen, t5_lambda_zero) == {}


def test_psi_lambda_weights_by_leading_entry(t4_trivial, t4_lambda):
    gen = ((1, 1), (2, 2))
    base = psi(t4_trivial, gen)
    weighted = psi_lambda(t4_trivial, gen, t4_lambda)
    assert weighted == {k: (v * t4_lambda(1)) % 3 for k, v in base.terms.items()
                        if (v * t4_lambda(1)) % 3}


def test_psi_lambda_identity_leading_entry_vanishes(t4_trivial, t4_lambda):
    gen = ((0, 2), (1, 2))
    assert t4_lambda(0) == 0
    assert psi_lambda(t4_trivial, gen, t4_lambda) == {}


@pytest.mark.parametrize("degree", [2, 3])
def test_psi_lambda_degenerate_containment_t4(degree, t4_trivial, t4_lambda):
    rep = verify_chain_map(t4_trivial, "psi_lambda", degree, lam=t4_lambda)
    assert rep.passed, rep.failures()


@pytest.mark.parametrize("degree", [2, 3])
def test_psi_lambda_degenerate_containment_t4_xset(degree, t4_xset, t4_lambda):
    rep = verify_chain_map(t4_xset, "psi_lambda", degree, lam=t4_lambda)
    assert rep.passed, rep.failures()


# ------------------------------------------------------------------------ proj

def test_proj_all_singletons(t4_trivial):
    gen = (None, ((7,), (8,), (15,)))
    out = proj(t4_trivial, gen)
    assert out.terms == {(None, (7, 8, 15)): 1}


def test_proj_kills_joint_brackets(t4_trivial):
    assert proj(t4_trivial, (None, ((7,), (8, 9)))).is_zero()


def test_proj_zero_below_degree_two(t4_trivial):
    assert proj(t4_trivial, (None, ((7,),))).is_zero()


def test_proj_xset_keeps_slot_zero(t4_xset):
    gen = (3, ((7,), (8,)))
    assert proj(t4_xset, gen).terms == {(3, (7, 8)): 1}


@pytest.mark.parametrize("degree", [2, 3])
def test_proj_square_mod_degenerates_t4(degree, t4_trivial):
    rep = verify_chain_map(t4_trivial, "proj", degree)
    assert rep.passed, rep.failures()


@pytest.mark.parametrize("degree", [2, 3])
def test_proj_square_mod_degenerates_t1_xset(degree, t1_xset):
    rep = verify_chain_map(t1_xset, "proj", degree)
    assert rep.passed, rep.failures()
