"""Chain maps between the four complexes, plus a commuting-square verifier.

The comparison map on tuple chains replaces module coordinates by successive
differences; its inverse takes suffix sums.  The collapse onto group chains
sums signed exponent patterns, and the bracket-to-tuple projection keeps only
all-singleton words.  The projection intertwines the two boundaries up to a
global orientation sign (the bracket boundary orients its act-terms
positively, the tuple boundary its deletions), recorded in
``PROJ_BOUNDARY_SIGN``; the sign cancels in every cocycle pullback.
"""

from __future__ import annotations

import itertools

from .algebra import CoeffHom
from .biquandle import AxiomReport
from .chains import ChainSystem, ChainVector, _acc
from .errors import ValidationError

PROJ_BOUNDARY_SIGN = -1


def gamma(sys: ChainSystem, gen):
    """Difference coordinates: (m_i, g_i) tuples become (g ; m_i - m_{i+1})."""
    y, xs = gen
    s = sys.s
    seq = xs if y is None else (y,) + xs
    gs = tuple(s.g_of(x) for x in seq)
    mseq = [s.m_of(x) for x in seq]
    carrier = s.module.carrier
    ms = tuple(
        carrier.index[carrier.sub(carrier.elements[mseq[i]], carrier.elements[mseq[i + 1]])]
        for i in range(len(seq) - 1)
    ) + (mseq[-1],)
    return (gs, ms)


def gamma_inv(sys: ChainSystem, gen):
    """Suffix sums undo the difference coordinates."""
    gs, ms = gen
    s = sys.s
    carrier = s.module.carrier
    total = carrier.zero
    sums = [None] * len(ms)
    for i in range(len(ms) - 1, -1, -1):
        total = carrier.add(total, carrier.elements[ms[i]])
        sums[i] = carrier.index[total]
    xs = tuple(s.x_of(sums[i], gs[i]) for i in range(len(gs)))
    if sys.xset:
        return (xs[0], xs[1:])
    return (None, xs)


def gamma_chain(sys: ChainSystem, chain: ChainVector) -> ChainVector:
    out = {}
    for gen, c in chain.terms.items():
        _acc(out, gamma(sys, gen), c)
    return ChainVector("bru", chain.degree, out)


def gamma_inv_chain(sys: ChainSystem, chain: ChainVector) -> ChainVector:
    out = {}
    for gen, c in chain.terms.items():
        _acc(out, gamma_inv(sys, gen), c)
    return ChainVector("br", chain.degree, out)


def psi(sys: ChainSystem, gen) -> ChainVector:
    """Signed collapse onto group chains.

    Exponent patterns run over the non-leading slots; in the self-action
    regime the output picks up one extra slot, so the degree rises by one.
    """
    gs, ms = gen
    out = {}
    if not sys.xset:
        n = len(gs)
        deg = n
        for bits in itertools.product((0, 1), repeat=n - 1):
            k = (0,) + bits
            sign = -1 if sum(bits) % 2 else 1
            tup = _psi_tuple(sys, gs, ms, k, slot0=False)
            _acc(out, sys.canonical_gp(tup), sign)
    else:
        n = len(gs) - 1
        deg = n + 1
        for k in itertools.product((0, 1), repeat=n):
            sign = -1 if sum(k) % 2 else 1
            tup = _psi_tuple(sys, gs, ms, k, slot0=True)
            _acc(out, sys.canonical_gp(tup), sign)
    return ChainVector("gp", deg, out)


def _psi_tuple(sys, gs, ms, k, slot0):
    s = sys.s
    group = s.group
    act = s.module.act
    phi = s.phi.phi
    e = group.identity
    if slot0:
        body_g = gs[1:]
        body_m = ms[1:]
    else:
        body_g = gs
        body_m = ms
    n = len(body_g)
    # suffix products of g_j^{k_j} for j > i
    suffix = [e] * (n + 1)
    for i in range(n - 1, -1, -1):
        gi = body_g[i] if k[i] else e
        suffix[i] = group.mul[gi][suffix[i + 1]]
    prefix = e
    entries = []
    if slot0:
        entries.append(act[suffix[0]][ms[0]])
    for i in range(n):
        if k[i]:
            prefix = group.mul[prefix][body_g[i]]
        u = group.mul[phi[prefix]][suffix[i + 1]]
        entries.append(act[u][body_m[i]])
    return tuple(entries)


def psi_chain(sys: ChainSystem, chain: ChainVector) -> ChainVector:
    shift = 1 if sys.xset else 0
    out = ChainVector("gp", chain.degree + shift, {})
    for gen, c in chain.terms.items():
        out = out + psi(sys, gen).scale(c)
    return out


def psi_lambda(sys: ChainSystem, gen, lam: CoeffHom) -> dict:
    """Collapse weighted by the coefficient homomorphism at the leading slot."""
    gs, _ = gen
    w = lam(gs[0])
    q = lam.modulus
    if q and w % q == 0 or (not q and w == 0):
        return {}
    out = {}
    for g, c in psi(sys, gen).terms.items():
        v = c * w % q if q else c * w
        if v:
            out[g] = v
    return out


def psi_lambda_chain(sys: ChainSystem, chain: ChainVector, lam: CoeffHom) -> dict:
    q = lam.modulus
    out = {}
    for gen, c in chain.terms.items():
        for g, v in psi_lambda(sys, gen, lam).items():
            w = out.get(g, 0) + c * v
            w = w % q if q else w
            if w:
                out[g] = w
            else:
                del out[g]
    return out


def proj(sys: ChainSystem, gen) -> ChainVector:
    """All-singleton bracket words map to tuples; everything else to zero."""
    y, brackets = gen
    n = sum(len(b) for b in brackets)
    if n < 2 or len(brackets) != n:
        return ChainVector("br", n, {})
    return ChainVector("br", n, {(y, tuple(b[0] for b in brackets)): 1})


def proj_chain(sys: ChainSystem, chain: ChainVector) -> ChainVector:
    out = ChainVector("br", chain.degree, {})
    for gen, c in chain.terms.items():
        out = out + proj(sys, gen).scale(c)
    return out


def verify_chain_map(sys: ChainSystem, map_id: str, degree: int,
                     lam: CoeffHom | None = None) -> AxiomReport:
    """Check the defining property of one map on every generator of a degree.

    ``gamma`` and ``psi`` must commute with the boundaries on the nose;
    ``proj`` commutes up to the orientation sign and modulo the degenerate
    span; ``psi_lambda`` must send the degenerate family into the weighted
    degenerate group chains.
    """
    rep = AxiomReport(f"{map_id}-degree-{degree}")
    if map_id == "gamma":
        w_sq = w_rt = None
        for gen in sys.basis("br", degree):
            lhs = gamma_chain(sys, sys.boundary_br(gen))
            rhs = sys.boundary_bru(gamma(sys, gen))
            if w_sq is None and lhs.terms != rhs.terms:
                w_sq = gen
            if w_rt is None and gamma_inv(sys, gamma(sys, gen)) != gen:
                w_rt = gen
            if w_sq and w_rt:
                break
        rep.add("square", w_sq is None, w_sq)
        rep.add("left-inverse", w_rt is None, w_rt)
        w = next((g for g in sys.basis("bru", degree)
                  if gamma(sys, gamma_inv(sys, g)) != g), None)
        rep.add("right-inverse", w is None, w)
    elif map_id == "psi":
        w = None
        for gen in sys.basis("bru", degree):
            lhs = psi_chain(sys, sys.boundary_bru(gen))
            rhs = _gp_boundary_chain(sys, psi(sys, gen))
            if lhs.terms != rhs.terms:
                w = gen
                break
        rep.add("square", w is None, w)
    elif map_id == "proj":
        w = None
        for gen in sys.basis("p", degree):
            lhs = proj_chain(sys, sys.boundary_p(gen))
            rhs = _br_boundary_chain(sys, proj(sys, gen))
            residual = lhs - rhs.scale(PROJ_BOUNDARY_SIGN)
            if not sys.in_degenerate_span(residual):
                w = gen
                break
        rep.add("square-mod-degenerate", w is None, w)
    elif map_id == "psi_lambda":
        if lam is None:
            raise ValidationError("psi_lambda verification needs a coefficient homomorphism")
        w = None
        for vec in sys.degenerate_generators("bru", degree):
            img = psi_lambda_chain(sys, vec, lam)
            if any(not sys.gp_is_degenerate_strict(g) for g in img):
                w = vec
                break
        rep.add("degenerate-containment", w is None, w)
    else:
        raise ValidationError(f"unknown chain map {map_id!r}")
    return rep


def _gp_boundary_chain(sys, chain):
    out = {}
    for gen, c in chain.terms.items():
        for k, v in sys.boundary_gp(gen).terms.items():
            _acc(out, k, c * v)
    return ChainVector("gp", chain.degree - 1, out)


def _br_boundary_chain(sys, chain):
    out = {}
    for gen, c in chain.terms.items():
        for k, v in sys.boundary_br(gen).terms.items():
            _acc(out, k, c * v)
    return ChainVector("br", chain.degree - 1, out)


def verify_gamma_degenerate_spans(sys: ChainSystem, degree: int) -> bool:
    """The difference map carries one degenerate family onto the other."""
    from .linalg import lattice_equal

    index = sys.basis_index("bru", degree)
    mapped = []
    for vec in sys.degenerate_generators("br", degree):
        img = gamma_chain(sys, vec)
        mapped.append({index[g]: c for g, c in img.terms.items()})
    native = []
    for vec in sys.degenerate_generators("bru", degree):
        native.append({index[g]: c for g, c in vec.terms.items()})
    return lattice_equal(mapped, native)
