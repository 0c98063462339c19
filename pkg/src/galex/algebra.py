"""Validated finite algebra: groups, abelian groups, right modules, homomorphisms.

All structures are index-based: group elements are 0..order-1, module elements
are residue tuples enumerated in lexicographic order.  Validation is exhaustive
and every structure is immutable after construction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (
    ActionNotCompatible,
    ArityMismatch,
    NoIdentity,
    NoInverse,
    NonAssociative,
    NotAutomorphism,
    NotCentral,
    NotGInvariant,
    NotHomomorphism,
    NotMultilinear,
    ValidationError,
)


@dataclass(frozen=True)
class FiniteGroup:
    """Group given by a Cayley table on indices 0..order-1."""

    order: int
    mul: tuple
    identity: int
    inv: tuple
    center: tuple
    name: str = "G"

    def conj(self, a: int, c: int) -> int:
        """c^-1 * a * c."""
        return self.mul[self.mul[self.inv[c]][a]][c]

    def elements(self):
        return range(self.order)

    def is_abelian(self) -> bool:
        return len(self.center) == self.order

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order})"


def validate_group(table, name: str = "G") -> FiniteGroup:
    """Validate a raw Cayley table and compute identity, inverses and center."""
    n = len(table)
    if n == 0:
        raise ValidationError("empty multiplication table")
    rows = []
    for row in table:
        row = tuple(int(v) for v in row)
        if len(row) != n or any(v < 0 or v >= n for v in row):
            raise ValidationError(f"table is not a square index table of size {n}")
        rows.append(row)
    mul = tuple(rows)
    for a in range(n):
        for b in range(n):
            ab = mul[a][b]
            for c in range(n):
                if mul[ab][c] != mul[a][mul[b][c]]:
                    raise NonAssociative(a, b, c)
    identity = None
    for e in range(n):
        if all(mul[e][x] == x and mul[x][e] == x for x in range(n)):
            identity = e
            break
    if identity is None:
        raise NoIdentity()
    inv = []
    for a in range(n):
        found = None
        for b in range(n):
            if mul[a][b] == identity and mul[b][a] == identity:
                found = b
                break
        if found is None:
            raise NoInverse(a)
        inv.append(found)
    center = tuple(
        z for z in range(n) if all(mul[z][x] == mul[x][z] for x in range(n))
    )
    return FiniteGroup(n, mul, identity, tuple(inv), center, name)


def cyclic_group(n: int) -> FiniteGroup:
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return validate_group(table, name=f"Z{n}")


def symmetric_group(n: int) -> FiniteGroup:
    """Symmetric group on n letters; elements are permutations in lex order."""
    perms = sorted(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [
        [index[tuple(p[q[i]] for i in range(n))] for q in perms] for p in perms
    ]
    return validate_group(table, name=f"S{n}")


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Direct sum of finite cyclic groups; elements are residue tuples."""

    orders: tuple
    elements: tuple
    index: dict

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def zero(self) -> tuple:
        return (0,) * len(self.orders)

    def add(self, a: tuple, b: tuple) -> tuple:
        return tuple((x + y) % d for x, y, d in zip(a, b, self.orders))

    def neg(self, a: tuple) -> tuple:
        return tuple((-x) % d for x, d in zip(a, self.orders))

    def sub(self, a: tuple, b: tuple) -> tuple:
        return tuple((x - y) % d for x, y, d in zip(a, b, self.orders))

    def scale(self, k: int, a: tuple) -> tuple:
        return tuple((k * x) % d for x, d in zip(a, self.orders))

    def __repr__(self):
        return "FiniteAbelianGroup" + repr(self.orders)


def abelian_group(orders) -> FiniteAbelianGroup:
    orders = tuple(int(d) for d in orders)
    if not orders or any(d < 1 for d in orders):
        raise ValidationError("module factor orders must be positive integers")
    elements = tuple(itertools.product(*(range(d) for d in orders)))
    return FiniteAbelianGroup(orders, elements, {e: i for i, e in enumerate(elements)})


class GModule:
    """Finite abelian group with a validated right action by automorphisms.

    ``act[g][i]`` gives the index of ``elements[i] . g``; ``matrices[g]`` holds
    the residue matrix of the action in row-vector convention
    ``(x.g)_j = sum_i x_i * A[i][j]``.
    """

    __slots__ = ("group", "carrier", "matrices", "act")

    def __init__(self, group: FiniteGroup, carrier: FiniteAbelianGroup, matrices, act):
        self.group = group
        self.carrier = carrier
        self.matrices = matrices
        self.act = act

    def act_el(self, x: tuple, g: int) -> tuple:
        return self.carrier.elements[self.act[g][self.carrier.index[x]]]

    def __repr__(self):
        return f"GModule(|M|={self.carrier.size}, G={self.group.name})"


def validate_gmodule(group: FiniteGroup, carrier: FiniteAbelianGroup, matrices) -> GModule:
    """Check that the matrices define a right action by automorphisms."""
    if len(matrices) != group.order:
        raise ValidationError("need one action matrix per group element")
    k = len(carrier.orders)
    mats = []
    for g, mat in enumerate(matrices):
        mat = tuple(tuple(int(v) for v in row) for row in mat)
        if len(mat) != k or any(len(row) != k for row in mat):
            raise ValidationError(f"action matrix of element {g} is not {k}x{k}")
        mats.append(mat)

    def apply(mat, x):
        return tuple(
            sum(x[i] * mat[i][j] for i in range(k)) % carrier.orders[j]
            for j in range(k)
        )

    act = []
    for g, mat in enumerate(mats):
        # well-defined on residues: order of generator i must kill column scale
        for i in range(k):
            for j in range(k):
                if (carrier.orders[i] * mat[i][j]) % carrier.orders[j] != 0:
                    raise NotAutomorphism(g, " (matrix not defined on residues)")
        images = [carrier.index[apply(mat, x)] for x in carrier.elements]
        if len(set(images)) != carrier.size:
            raise NotAutomorphism(g)
        act.append(tuple(images))

    e = group.identity
    if act[e] != tuple(range(carrier.size)):
        raise ActionNotCompatible(e, e)
    for g in range(group.order):
        for h in range(group.order):
            gh = group.mul[g][h]
            for i in range(carrier.size):
                if act[h][act[g][i]] != act[gh][i]:
                    raise ActionNotCompatible(g, h, carrier.elements[i])
    return GModule(group, carrier, tuple(mats), tuple(act))


def scalar_power_action(group: FiniteGroup, carrier: FiniteAbelianGroup, base: int):
    """Matrices for g_k acting as multiplication by base^k on a cyclic group.

    Only meaningful for cyclic groups presented additively (element k is the
    k-th power of the generator).
    """
    k = len(carrier.orders)
    mats = []
    for g in range(group.order):
        s = pow(base, g)
        mats.append([[s % carrier.orders[j] if i == j else 0 for j in range(k)] for i in range(k)])
    return mats


@dataclass(frozen=True)
class CentralHom:
    """Group endomorphism with image inside the center."""

    group: FiniteGroup
    phi: tuple

    def __call__(self, g: int) -> int:
        return self.phi[g]


def validate_central_hom(group: FiniteGroup, phi) -> CentralHom:
    phi = tuple(int(v) for v in phi)
    if len(phi) != group.order or any(v < 0 or v >= group.order for v in phi):
        raise ValidationError("central homomorphism must be a total map on the group")
    if phi[group.identity] != group.identity:
        raise NotHomomorphism(group.identity, group.identity)
    for a in range(group.order):
        for b in range(group.order):
            if phi[group.mul[a][b]] != group.mul[phi[a]][phi[b]]:
                raise NotHomomorphism(a, b)
    central = set(group.center)
    for g in range(group.order):
        if phi[g] not in central:
            bad = next(h for h in range(group.order)
                       if group.mul[phi[g]][h] != group.mul[h][phi[g]])
            raise NotCentral(phi[g], bad)
    return CentralHom(group, phi)


def trivial_central_hom(group: FiniteGroup) -> CentralHom:
    return CentralHom(group, (group.identity,) * group.order)


def identity_central_hom(group: FiniteGroup) -> CentralHom:
    return validate_central_hom(group, tuple(range(group.order)))


class MultilinearMap:
    """Multilinear map M^arity -> Z_q stored as a coefficient tensor.

    The tensor is indexed by one generator choice per argument (one index per
    cyclic factor of M); evaluation is the polynomial
    ``sum_t c[t] * prod_s x_s[t_s]`` reduced mod q.  q = 0 means coefficients
    in the integers.
    """

    __slots__ = ("module", "arity", "modulus", "coeffs", "g_invariant")

    def __init__(self, module: GModule, arity: int, modulus: int, coeffs: dict):
        self.module = module
        self.arity = arity
        self.modulus = modulus
        self.coeffs = coeffs
        self.g_invariant = None

    def eval(self, args) -> int:
        if len(args) != self.arity:
            raise ArityMismatch(self.arity, len(args))
        q = self.modulus
        total = 0
        for idx, c in self.coeffs.items():
            p = c
            for s, j in enumerate(idx):
                p *= args[s][j]
                if p == 0:
                    break
            total += p
        return total % q if q else total

    def eval_chain(self, terms) -> int:
        """Evaluate linearly on {tuple-of-elements: coefficient} data."""
        q = self.modulus
        total = 0
        for tup, c in terms:
            total += c * self.eval(tup)
        return total % q if q else total

    def __add__(self, other):
        if (self.module is not other.module or self.arity != other.arity
                or self.modulus != other.modulus):
            raise ArityMismatch((self.arity, self.modulus), (other.arity, other.modulus))
        coeffs = dict(self.coeffs)
        q = self.modulus
        for idx, c in other.coeffs.items():
            v = coeffs.get(idx, 0) + c
            v = v % q if q else v
            if v:
                coeffs[idx] = v
            else:
                coeffs.pop(idx, None)
        return validate_multilinear(self.module, self.arity, self.modulus, coeffs)


def validate_multilinear(module: GModule, arity: int, modulus: int, tensor) -> MultilinearMap:
    """Validate a coefficient tensor (nested lists or index dict)."""
    if arity < 1:
        raise ValidationError("arity must be at least 1")
    if modulus < 0:
        raise ValidationError("coefficient modulus must be >= 0")
    k = len(module.carrier.orders)
    coeffs = {}
    if isinstance(tensor, dict):
        items = tensor.items()
    else:
        items = []
        for idx in itertools.product(range(k), repeat=arity):
            node = tensor
            try:
                for j in idx:
                    node = node[j]
            except (IndexError, TypeError) as exc:
                raise NotMultilinear(f"tensor too shallow at index {idx}") from exc
            items.append((idx, node))
    for idx, c in items:
        idx = tuple(int(j) for j in idx)
        if len(idx) != arity or any(j < 0 or j >= k for j in idx):
            raise NotMultilinear(f"bad tensor index {idx}")
        c = int(c) % modulus if modulus else int(c)
        if not c:
            continue
        # sending a generator around its cyclic order must land on 0 mod q
        for j in idx:
            if modulus and (module.carrier.orders[j] * c) % modulus != 0:
                raise NotMultilinear(
                    f"coefficient {c} at {idx} incompatible with factor order "
                    f"{module.carrier.orders[j]} and modulus {modulus}"
                )
            if not modulus and module.carrier.orders[j] * c != 0:
                raise NotMultilinear(
                    f"nonzero coefficient at {idx} cannot be integral on torsion"
                )
        coeffs[idx] = c
    return MultilinearMap(module, arity, modulus, coeffs)


def scalar_product_map(module: GModule, modulus: int, coeff: int, arity: int) -> MultilinearMap:
    """f(x_1,..,x_n) = coeff * x_1 * ... * x_n for a one-factor module."""
    if len(module.carrier.orders) != 1:
        raise ValidationError("scalar product form needs a single cyclic factor")
    return validate_multilinear(module, arity, modulus, {(0,) * arity: coeff})


def check_g_invariance(f: MultilinearMap):
    """Exhaustively test invariance under the diagonal action.

    Returns (True, None) or (False, witness) with witness = (args, g).
    """
    module = f.module
    group = module.group
    elements = module.carrier.elements
    for args in itertools.product(elements, repeat=f.arity):
        base = f.eval(args)
        for g in range(group.order):
            moved = tuple(module.act_el(x, g) for x in args)
            if f.eval(moved) != base:
                f.g_invariant = False
                return False, (args, g)
    f.g_invariant = True
    return True, None


@dataclass(frozen=True)
class CoeffHom:
    """Group homomorphism into the cyclic coefficient group Z_q."""

    group: FiniteGroup
    modulus: int
    values: tuple

    def __call__(self, g: int) -> int:
        return self.values[g]

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values)


def validate_coeff_hom(group: FiniteGroup, modulus: int, values) -> CoeffHom:
    if modulus < 0:
        raise ValidationError("coefficient modulus must be >= 0")
    values = tuple((int(v) % modulus if modulus else int(v)) for v in values)
    if len(values) != group.order:
        raise ValidationError("coefficient homomorphism must be total on the group")
    red = (lambda v: v % modulus) if modulus else (lambda v: v)
    for a in range(group.order):
        for b in range(group.order):
            if values[group.mul[a][b]] != red(values[a] + values[b]):
                raise NotHomomorphism(a, b)
    return CoeffHom(group, modulus, values)


def zero_coeff_hom(group: FiniteGroup, modulus: int) -> CoeffHom:
    return CoeffHom(group, modulus, (0,) * group.order)
