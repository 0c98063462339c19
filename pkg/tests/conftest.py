import pytest

from galex import (
    ChainSystem,
    abelian_group,
    build_g_alexander,
    cyclic_group,
    scalar_power_action,
    trivial_central_hom,
    validate_coeff_hom,
    validate_gmodule,
    zero_coeff_hom,
)


def make_instance(group_order, module_order, base):
    """Cyclic group acting on a cyclic module by powers of ``base``."""
    group = cyclic_group(group_order)
    carrier = abelian_group([module_order])
    module = validate_gmodule(group, carrier, scalar_power_action(group, carrier, base))
    phi = trivial_central_hom(group)
    return build_g_alexander(group, module, phi)


@pytest.fixture(scope="session")
def t1():
    # |G| = 2, M = Z_3, action by 2
    return make_instance(2, 3, 2)


@pytest.fixture(scope="session")
def t4():
    # |G| = 6, M = Z_3, action by 2^k, coefficients Z_3
    return make_instance(6, 3, 2)


@pytest.fixture(scope="session")
def t5():
    # |G| = 3, M = Z_7, action by 2^k, coefficients Z_7
    return make_instance(3, 7, 2)


@pytest.fixture(scope="session")
def t1_trivial(t1):
    return ChainSystem(t1, "trivial")


@pytest.fixture(scope="session")
def t1_xset(t1):
    return ChainSystem(t1, "xset")


@pytest.fixture(scope="session")
def t4_trivial(t4):
    return ChainSystem(t4, "trivial")


@pytest.fixture(scope="session")
def t4_xset(t4):
    return ChainSystem(t4, "xset")


@pytest.fixture(scope="session")
def t5_trivial(t5):
    return ChainSystem(t5, "trivial")


@pytest.fixture(scope="session")
def t5_xset(t5):
    return ChainSystem(t5, "xset")


@pytest.fixture(scope="session")
def t4_lambda(t4):
    # k mod 3 is a homomorphism Z_6 -> Z_3
    return validate_coeff_hom(t4.group, 3, [k % 3 for k in range(6)])


@pytest.fixture(scope="session")
def t5_lambda_zero(t5):
    return zero_coeff_hom(t5.group, 7)


@pytest.fixture(scope="session")
def t5z21_lambda(t5):
    # 7k is a homomorphism Z_3 -> Z_21
    return validate_coeff_hom(t5.group, 21, [0, 7, 14])
