import pytest

from galex import (
    self_under_x_set,
    trivial_x_set,
    verify_biquandle,
    verify_mcb,
    verify_x_set,
)


def test_under_by_identity_slot_fixes_everything(t1):
    # acting element (n, e): the module term vanishes since phi(e) = e
    for x in range(t1.size):
        for n in range(t1.nm):
            a = t1.x_of(n, t1.group.identity)
            assert t1.under[x][a] == x


def test_t1_under_example(t1):
    # (1,g) under (2,g) = (0,g):  1*2 + 2*(1-2) = 0 mod 3
    g = 1
    x = t1.x_of(1, g)
    a = t1.x_of(2, g)
    assert t1.under[x][a] == t1.x_of(0, g)


def test_t1_over_is_trivial_when_phi_is(t1):
    for x in range(t1.size):
        for a in range(t1.size):
            assert t1.over[x][a] == x


@pytest.mark.parametrize("fixture", ["t1", "t4", "t5"])
def test_biquandle_axioms_pass(fixture, request):
    s = request.getfixturevalue(fixture)
    rep = verify_biquandle(s)
    assert rep.passed, rep.failures()


@pytest.mark.parametrize("fixture", ["t1", "t4", "t5"])
def test_mcb_axioms_pass(fixture, request):
    s = request.getfixturevalue(fixture)
    rep = verify_mcb(s)
    assert rep.passed, rep.failures()


def test_corrupted_over_table_fails_exchange(t1):
    over = [list(row) for row in t1.over]
    # swap two values in one row, keeping the translation bijective
    a, b = 2, 3
    over[0][a], over[1][a] = over[1][a], over[0][a]
    bad = t1.with_tables(over=tuple(tuple(r) for r in over))
    rep = verify_biquandle(bad)
    assert not rep.passed
    assert any("exchange" in c.name or "diagonal" in c.name for c in rep.failures())


def test_corrupted_component_product_fails_homomorphy(t4):
    under = [list(row) for row in t4.under]
    x, a = 5, 7
    under[x][a] = (under[x][a] + t4.ng) % t4.size  # jump to another component
    bad = t4.with_tables(under=tuple(tuple(r) for r in under))
    rep = verify_mcb(bad)
    assert not rep.passed


@pytest.mark.parametrize("fixture", ["t1", "t4", "t5"])
def test_trivial_x_set_passes(fixture, request):
    s = request.getfixturevalue(fixture)
    rep = verify_x_set(s, trivial_x_set(s), mcb=True)
    assert rep.passed, rep.failures()


@pytest.mark.parametrize("fixture", ["t1", "t4", "t5"])
def test_self_under_x_set_passes(fixture, request):
    s = request.getfixturevalue(fixture)
    rep = verify_x_set(s, self_under_x_set(s), mcb=True)
    assert rep.passed, rep.failures()


def test_corrupted_self_action_fails(t1):
    action = [list(row) for row in t1.under]
    action[0][0] = (action[0][0] + 1) % t1.size
    from galex import XSetSpec
    bad = XSetSpec("self-under", t1.size, tuple(tuple(r) for r in action))
    rep = verify_x_set(t1, bad)
    assert not rep.passed


def test_diagonal_identity_exhaustive(t5):
    for x in range(t5.size):
        assert t5.under[x][x] == t5.over[x][x]


def test_pair_map_is_bijection(t4):
    size = t4.size
    image = {(t4.over[y][x], t4.under[x][y]) for x in range(size) for y in range(size)}
    assert len(image) == size * size


def test_component_homomorphy_spotcheck(t5):
    # (ab) under x = (a under x)(b under x) within one component
    s = t5
    for m in range(s.nm):
        off = m * s.ng
        for g in range(s.ng):
            for h in range(s.ng):
                p = s.comp_mul(off + g, off + h)
                for a in (0, 5, 11):
                    lhs = s.under[p][a]
                    rhs = s.comp_mul(s.under[off + g][a], s.under[off + h][a])
                    assert lhs == rhs
