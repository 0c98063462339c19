import itertools

import pytest

from galex import (
    abelian_group,
    check_g_invariance,
    cyclic_group,
    scalar_power_action,
    scalar_product_map,
    symmetric_group,
    validate_central_hom,
    validate_coeff_hom,
    validate_gmodule,
    validate_group,
    validate_multilinear,
)
from galex.errors import (
    ActionNotCompatible,
    NonAssociative,
    NotCentral,
    NotHomomorphism,
    NotMultilinear,
)


def test_z2_table_validates():
    g = validate_group([[0, 1], [1, 0]])
    assert g.order == 2
    assert g.identity == 0
    assert g.center == (0, 1)


def test_broken_associativity_names_witness():
    table = [[0, 1, 2], [1, 2, 0], [2, 0, 1]]
    table[1][1] = 1  # now (1*1)*1 = 2 but 1*(1*1) = 2... breaks elsewhere
    with pytest.raises(NonAssociative) as exc:
        validate_group(table)
    assert len(exc.value.witness) == 3


def test_s3_center_is_trivial():
    s3 = symmetric_group(3)
    assert s3.order == 6
    # independent scan over the raw table
    center = [z for z in range(6)
              if all(s3.mul[z][x] == s3.mul[x][z] for x in range(6))]
    assert center == [s3.identity]
    assert s3.center == (s3.identity,)


def test_gmodule_z3_with_doubling_action():
    g = cyclic_group(2)
    m = abelian_group([3])
    mod = validate_gmodule(g, m, scalar_power_action(g, m, 2))
    # (x.g).g = x for all three elements
    for x in range(3):
        assert mod.act[1][mod.act[1][x]] == x


def test_gmodule_identity_must_act_trivially():
    g = cyclic_group(2)
    m = abelian_group([3])
    with pytest.raises(ActionNotCompatible):
        validate_gmodule(g, m, [[[2]], [[2]]])


def test_gmodule_z7_order_three_action():
    g = cyclic_group(3)
    m = abelian_group([7])
    mod = validate_gmodule(g, m, scalar_power_action(g, m, 2))
    for x in range(7):
        y = x
        for _ in range(3):
            y = mod.act[1][y]
        assert y == x


def test_central_hom_trivial_always_valid():
    s3 = symmetric_group(3)
    phi = validate_central_hom(s3, [s3.identity] * 6)
    assert all(v == s3.identity for v in phi.phi)


def test_central_hom_identity_on_abelian():
    z2 = cyclic_group(2)
    phi = validate_central_hom(z2, [0, 1])
    assert phi(1) == 1


def test_central_hom_identity_on_s3_rejected():
    s3 = symmetric_group(3)
    with pytest.raises(NotCentral):
        validate_central_hom(s3, list(range(6)))


def test_bilinear_invariance_on_t1_algebra():
    g = cyclic_group(2)
    m = abelian_group([3])
    mod = validate_gmodule(g, m, scalar_power_action(g, m, 2))
    f2 = scalar_product_map(mod, 3, 1, 2)
    ok, witness = check_g_invariance(f2)
    assert ok and witness is None


def test_trilinear_not_invariant_on_t1_algebra():
    g = cyclic_group(2)
    m = abelian_group([3])
    mod = validate_gmodule(g, m, scalar_power_action(g, m, 2))
    f3 = scalar_product_map(mod, 3, 1, 3)
    ok, witness = check_g_invariance(f3)
    assert not ok
    args, gw = witness
    # 8abc = 2abc != abc mod 3 at the all-ones tuple
    assert f3.eval(args) != f3.eval(tuple(mod.act_el(x, gw) for x in args))


def test_trilinear_invariant_on_z7():
    g = cyclic_group(3)
    m = abelian_group([7])
    mod = validate_gmodule(g, m, scalar_power_action(g, m, 2))
    f3 = scalar_product_map(mod, 7, 1, 3)
    ok, _ = check_g_invariance(f3)
    assert ok


def test_multilinear_agrees_with_sum_decompositions():
    g = cyclic_group(2)
    m = abelian_group([3])
    mod = validate_gmodule(g, m, scalar_power_action(g, m, 2))
    f = scalar_product_map(mod, 3, 2, 2)
    for a, b, c in itertools.product(m.elements, repeat=3):
        left = f.eval((m.add(a, b), c))
        assert left == (f.eval((a, c)) + f.eval((b, c))) % 3
        assert f.eval((m.zero, c)) == 0


def test_multilinear_torsion_compatibility_enforced():
    g = cyclic_group(2)
    m = abelian_group([3])
    mod = validate_gmodule(g, m, scalar_power_action(g, m, 2))
    with pytest.raises(NotMultilinear):
        validate_multilinear(mod, 2, 4, [[1]])  # 3*1 != 0 mod 4


def test_coeff_hom_zero_and_reduction():
    z6 = cyclic_group(6)
    lam = validate_coeff_hom(z6, 3, [k % 3 for k in range(6)])
    for j in range(6):
        for k in range(6):
            assert lam((j + k) % 6) == (lam(j) + lam(k)) % 3


def test_coeff_hom_order_obstruction():
    z2 = cyclic_group(2)
    with pytest.raises(NotHomomorphism):
        validate_coeff_hom(z2, 3, [0, 1])
