"""Cocycle construction from invariant multilinear maps, and its certification.

Two factories: one builds cochains on tuple chains by composing the collapse
maps, the other builds cochains on bracket words by first projecting away
non-singleton words.  Closed-form evaluators for the same cochains live in
``explicit_formula`` under opaque variant ids (see ``VARIANTS``); the exhaustive
``cross_check`` ties the two routes together pointwise.
"""

from __future__ import annotations

import time

from .algebra import CoeffHom, MultilinearMap, check_g_invariance
from .biquandle import AxiomReport
from .chains import ChainSystem
from .errors import (
    ArityMismatch,
    MissingLambda,
    NotGInvariant,
    ShapeMismatch,
    ValidationError,
)
from .linalg import solve_mod
from .maps import gamma, psi, psi_lambda, proj


class Cochain:
    """Dense cochain table: generator -> value in Z_q (q = 0 means Z)."""

    __slots__ = ("kind", "regime", "degree", "modulus", "table", "name")

    def __init__(self, kind, regime, degree, modulus, table, name=""):
        self.kind = kind
        self.regime = regime
        self.degree = degree
        self.modulus = modulus
        self.table = table
        self.name = name

    def value(self, gen) -> int:
        return self.table.get(gen, 0)

    def is_zero(self) -> bool:
        return not any(self.table.values())

    def shape(self):
        return (self.kind, self.regime, self.degree, self.modulus)

    def perturbed(self, gen, delta=1) -> "Cochain":
        table = dict(self.table)
        q = self.modulus
        table[gen] = (table.get(gen, 0) + delta) % q if q else table.get(gen, 0) + delta
        return Cochain(self.kind, self.regime, self.degree, self.modulus, table,
                       name=self.name + "+delta")

    def __repr__(self):
        return (f"Cochain({self.name or 'anonymous'}, kind={self.kind}, "
                f"degree={self.degree}, q={self.modulus})")


def _eval_gp_chain(sys: ChainSystem, f: MultilinearMap, terms) -> int:
    elements = sys.s.module.carrier.elements
    q = f.modulus
    total = 0
    for tup, c in terms:
        total += c * f.eval(tuple(elements[m] for m in tup))
    return total % q if q else total


def _require_invariant(f: MultilinearMap):
    if f.g_invariant is None:
        check_g_invariance(f)
    if not f.g_invariant:
        ok, witness = check_g_invariance(f)
        raise NotGInvariant(witness)


def build_phi_biquandle(sys: ChainSystem, f: MultilinearMap, n: int) -> Cochain:
    """Cochain on tuple chains: f evaluated on the collapsed difference chain."""
    expected = n + 1 if sys.xset else n
    if f.arity != expected:
        raise ArityMismatch(expected, f.arity)
    _require_invariant(f)
    table = {}
    for gen in sys.basis("br", n):
        chain = psi(sys, gamma(sys, gen))
        table[gen] = _eval_gp_chain(sys, f, chain.terms.items())
    return Cochain("br", sys.regime, n, f.modulus, table, name=f"phi-br-{n}")


def build_phi_mcb(sys: ChainSystem, f: MultilinearMap, lam: CoeffHom | None,
                  n: int) -> Cochain:
    """Cochain on bracket words via projection onto all-singleton words.

    The trivial regime weights every value by the coefficient homomorphism at
    the leading group entry and so requires one; the self-action regime also
    admits the unweighted variant (pass ``lam=None``).
    """
    expected = n + 1 if sys.xset else n
    if f.arity != expected:
        raise ArityMismatch(expected, f.arity)
    if not sys.xset and lam is None:
        raise MissingLambda()
    if lam is not None and lam.modulus != f.modulus:
        raise ShapeMismatch(("modulus", f.modulus), ("modulus", lam.modulus))
    _require_invariant(f)
    q = f.modulus
    table = {}
    for gen in sys.basis("p", n):
        pr = proj(sys, gen)
        if pr.is_zero():
            table[gen] = 0
            continue
        (br_gen, coeff), = pr.terms.items()
        bru = gamma(sys, br_gen)
        if lam is None:
            val = _eval_gp_chain(sys, f, psi(sys, bru).terms.items())
        else:
            val = _eval_gp_chain(sys, f, psi_lambda(sys, bru, lam).items())
        val *= coeff
        table[gen] = val % q if q else val
    name = f"phi-mcb-{n}" + ("-weighted" if lam is not None else "")
    return Cochain("p", sys.regime, n, q, table, name=name)


def _minus_action(sys: ChainSystem, m: int, t: int) -> int:
    """m - m.t for a module element index m and group element t."""
    carrier = sys.s.module.carrier
    acted = sys.s.module.act[t][m]
    return carrier.index[carrier.sub(carrier.elements[m], carrier.elements[acted])]


def _mdiff(sys: ChainSystem, a: int, b: int) -> int:
    carrier = sys.s.module.carrier
    return carrier.index[carrier.sub(carrier.elements[a], carrier.elements[b])]


def _el(sys: ChainSystem, m: int):
    return sys.s.module.carrier.elements[m]


def _tuple_args_2(sys, f, xs):
    """f(m1 - m2, m2 (1 - phi(g2) g2^-1)) on a pair of elements."""
    s = sys.s
    (m1, _), (m2, g2) = s.pair(xs[0]), s.pair(xs[1])
    t = s.group.mul[s.phi.phi[g2]][s.group.inv[g2]]
    return f.eval((_el(sys, _mdiff(sys, m1, m2)), _el(sys, _minus_action(sys, m2, t))))


def _tuple_args_3(sys, f, xs):
    """f((m1-m2)(1 - phi(g2)^-1 g2), m2-m3, m3 (1 - phi(g3) g3^-1))."""
    s = sys.s
    (m1, _), (m2, g2), (m3, g3) = s.pair(xs[0]), s.pair(xs[1]), s.pair(xs[2])
    d12 = _mdiff(sys, m1, m2)
    t2 = s.group.mul[s.group.inv[s.phi.phi[g2]]][g2]
    a1 = _minus_action(sys, d12, t2)
    a2 = _mdiff(sys, m2, m3)
    t3 = s.group.mul[s.phi.phi[g3]][s.group.inv[g3]]
    a3 = _minus_action(sys, m3, t3)
    return f.eval((_el(sys, a1), _el(sys, a2), _el(sys, a3)))


def _slot_args_12(sys, seq):
    """Shared arguments (m0'(1-phi(g1)^-1 g1), m1') of the slot-0 forms."""
    s = sys.s
    (m0, _), (m1, g1), (m2, _) = s.pair(seq[0]), s.pair(seq[1]), s.pair(seq[2])
    d01 = _mdiff(sys, m0, m1)
    t1 = s.group.mul[s.group.inv[s.phi.phi[g1]]][g1]
    return _minus_action(sys, d01, t1), _mdiff(sys, m1, m2)


def _xset_args_3(sys, f, seq):
    """f(m0'(1-phi(g1)^-1 g1), m1', m2 (1-phi(g2) g2^-1)) on slot-0 triples."""
    s = sys.s
    a1, a2 = _slot_args_12(sys, seq)
    m2, g2 = s.pair(seq[2])
    t2 = s.group.mul[s.phi.phi[g2]][s.group.inv[g2]]
    a3 = _minus_action(sys, m2, t2)
    return f.eval((_el(sys, a1), _el(sys, a2), _el(sys, a3)))


def _xset_args_4(sys, f, seq):
    """Two-term slot-0 form in degree three, second term twisted by g2."""
    s = sys.s
    act = s.module.act
    a1, a2 = _slot_args_12(sys, seq)
    (m2, g2), (m3, g3) = s.pair(seq[2]), s.pair(seq[3])
    a3 = _mdiff(sys, m2, m3)
    t3 = s.group.mul[s.phi.phi[g3]][s.group.inv[g3]]
    a4 = _minus_action(sys, m3, t3)
    first = f.eval((_el(sys, a1), _el(sys, a2), _el(sys, a3), _el(sys, a4)))
    pg2 = s.phi.phi[g2]
    second = f.eval((
        _el(sys, act[g2][a1]),
        _el(sys, act[g2][a2]),
        _el(sys, act[pg2][a3]),
        _el(sys, act[pg2][a4]),
    ))
    q = f.modulus
    return (first - second) % q if q else first - second


VARIANTS = {
    # id: (kind, regime, degree, arity, needs_lambda)
    "3.2-1": ("br", "trivial", 2, 2, False),
    "3.2-2": ("br", "trivial", 3, 3, False),
    "4.2-1": ("br", "xset", 2, 3, False),
    "4.2-2": ("br", "xset", 3, 4, False),
    "5.2-1": ("p", "trivial", 2, 2, True),
    "5.2-2": ("p", "trivial", 3, 3, True),
    "6.2-1": ("p", "xset", 2, 3, False),
    "6.2-2": ("p", "xset", 3, 4, False),
    "6.3-1": ("p", "xset", 2, 3, True),
    "6.3-2": ("p", "xset", 3, 4, True),
}


def explicit_formula(sys: ChainSystem, f: MultilinearMap,
                     lam: CoeffHom | None, variant: str) -> Cochain:
    """Closed-form cochain table for one of the tabulated variant ids."""
    if variant not in VARIANTS:
        raise ValidationError(f"unknown variant {variant!r}")
    kind, regime, degree, arity, needs_lambda = VARIANTS[variant]
    if regime != sys.regime:
        raise ShapeMismatch(("regime", sys.regime), ("regime", regime))
    if f.arity != arity:
        raise ArityMismatch(arity, f.arity)
    if needs_lambda and lam is None:
        raise MissingLambda()
    q = f.modulus

    def base_value(seq):
        if variant == "3.2-1":
            return _tuple_args_2(sys, f, seq)
        if variant in ("3.2-2", "5.2-2"):
            return _tuple_args_3(sys, f, seq)
        if variant == "5.2-1":
            return _tuple_args_2(sys, f, seq)
        if variant in ("4.2-1", "6.2-1", "6.3-1"):
            return _xset_args_3(sys, f, seq)
        return _xset_args_4(sys, f, seq)

    table = {}
    if kind == "br":
        for gen in sys.basis("br", degree):
            y, xs = gen
            seq = xs if y is None else (y,) + xs
            v = base_value(seq)
            table[gen] = v % q if q else v
    else:
        for gen in sys.basis("p", degree):
            y, brackets = gen
            if len(brackets) != degree:
                table[gen] = 0
                continue
            firsts = tuple(b[0] for b in brackets)
            seq = firsts if y is None else (y,) + firsts
            v = base_value(seq)
            if needs_lambda:
                lead = sys.s.g_of(seq[0]) if sys.xset else sys.s.g_of(firsts[0])
                v *= lam(lead)
            table[gen] = v % q if q else v
    return Cochain(kind, sys.regime, degree, q, table, name=f"explicit-{variant}")


def verify_cocycle(sys: ChainSystem, c: Cochain) -> AxiomReport:
    """Exhaustive coboundary check, plus degeneracy conditions for brackets."""
    t0 = time.perf_counter()
    rep = AxiomReport(f"cocycle-{c.name}")
    if c.regime != sys.regime:
        raise ShapeMismatch(("regime", sys.regime), ("regime", c.regime))
    n = c.degree
    q = c.modulus

    if c.is_zero():
        rep.add("coboundary-vanishes", True, "identically-zero cochain")
    else:
        w = None
        table = c.table
        for gen in sys.basis(c.kind, n + 1):
            total = 0
            for term, coeff in sys.boundary(c.kind, gen).terms.items():
                total += coeff * table.get(term, 0)
            if (total % q if q else total) != 0:
                w = sys.format_generator(c.kind, gen)
                break
        rep.add("coboundary-vanishes", w is None, w)

    if c.kind == "p":
        w = None
        for vec in sys.degenerate_generators("p", n):
            total = 0
            for gen, coeff in vec.terms.items():
                total += coeff * c.value(gen)
            if (total % q if q else total) != 0:
                w = sys.format_chain(vec)
                break
        rep.add("bracket-degenerates-vanish", w is None, w)

        def on_br(br_gen):
            y, xs = br_gen
            return c.value((y, tuple((x,) for x in xs)))

        w = None
        for vec in sys.degenerate_generators("br", n):
            total = 0
            for gen, coeff in vec.terms.items():
                total += coeff * on_br(gen)
            if (total % q if q else total) != 0:
                w = sys.format_chain(vec)
                break
        rep.add("tuple-degenerates-vanish", w is None, w)

    rep.elapsed = time.perf_counter() - t0
    return rep


def cross_check(a: Cochain, b: Cochain, sys: ChainSystem):
    """Pointwise equality over the full basis; witnesses the first mismatch."""
    if a.shape() != b.shape():
        raise ShapeMismatch(a.shape(), b.shape())
    q = a.modulus
    for gen in sys.basis(a.kind, a.degree):
        va, vb = a.value(gen), b.value(gen)
        diff = (va - vb) % q if q else va - vb
        if diff:
            return False, (sys.format_generator(a.kind, gen), va, vb)
    return True, None


def is_coboundary(sys: ChainSystem, c: Cochain):
    """Solve u . boundary = c over Z_q; returns a certified witness or None."""
    if c.modulus <= 0:
        raise ValidationError("coboundary solving needs finite coefficients")
    n = c.degree
    lower = sys.basis(c.kind, n - 1)
    index = {g: i for i, g in enumerate(lower)}
    rows = []
    rhs = []
    for gen in sys.basis(c.kind, n):
        row = [0] * len(lower)
        for term, coeff in sys.boundary(c.kind, gen).terms.items():
            row[index[term]] += coeff
        rows.append(row)
        rhs.append(c.value(gen))
    if c.kind == "p":
        for vec in sys.degenerate_generators("p", n - 1):
            row = [0] * len(lower)
            for gen, coeff in vec.terms.items():
                row[index[gen]] += coeff
            rows.append(row)
            rhs.append(0)
    if not lower:
        if any(v % c.modulus for v in rhs):
            return None
        return {}
    sol = solve_mod(rows, rhs, c.modulus)
    if sol is None:
        return None
    return {g: sol[i] for g, i in index.items() if sol[i]}


def serialize_cochain(c: Cochain, sys: ChainSystem) -> str:
    lines = [f"# {c.name or 'cochain'} kind={c.kind} regime={c.regime} "
             f"degree={c.degree} modulus={c.modulus}"]
    for gen in sys.basis(c.kind, c.degree):
        lines.append(f"{sys.format_generator(c.kind, gen)} -> {c.value(gen)}")
    return "\n".join(lines) + "\n"
