"""The biquandle and multiple-conjugation structure on X = M x G.

Elements of X are flat indices ``m * |G| + g``.  The two binary operations are

    (m,g) under (n,h) = (m.h + n.(phi(h)) - n.h,  h^-1 g h)
    (m,g) over  (n,h) = (m.phi(h),                g)

and each component {m} x G carries the product (m,g)(m,h) = (m, gh).  All
axioms are certified by exhaustive enumeration; reports carry witnesses.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .algebra import CentralHom, FiniteGroup, GModule
from .errors import ValidationError


@dataclass
class Check:
    name: str
    passed: bool
    witness: object = None

    def as_dict(self):
        return {"name": self.name, "status": "pass" if self.passed else "fail",
                "witness": repr(self.witness) if self.witness is not None else None}


@dataclass
class AxiomReport:
    subject: str
    checks: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name, passed, witness=None):
        self.checks.append(Check(name, passed, witness))

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def as_dict(self):
        return {"subject": self.subject,
                "status": "pass" if self.passed else "fail",
                "checks": [c.as_dict() for c in self.checks]}


class GAlexanderStructure:
    """Operation tables of the structure on X = M x G, with component data."""

    __slots__ = ("group", "module", "phi", "ng", "nm", "size",
                 "under", "over", "raw")

    def __init__(self, group, module, phi, under, over, raw=False):
        self.group = group
        self.module = module
        self.phi = phi
        self.ng = group.order
        self.nm = module.carrier.size
        self.size = self.ng * self.nm
        self.under = under
        self.over = over
        self.raw = raw

    # -- index helpers -------------------------------------------------
    def x_of(self, m: int, g: int) -> int:
        return m * self.ng + g

    def m_of(self, x: int) -> int:
        return x // self.ng

    def g_of(self, x: int) -> int:
        return x % self.ng

    def comp_of(self, x: int) -> int:
        return x // self.ng

    def comp_mul(self, a: int, b: int) -> int:
        """Product inside one component: (m,g)(m,h) = (m,gh)."""
        return (a - a % self.ng) + self.group.mul[a % self.ng][b % self.ng]

    def comp_inv(self, a: int) -> int:
        return (a - a % self.ng) + self.group.inv[a % self.ng]

    def comp_id(self, m: int) -> int:
        return m * self.ng + self.group.identity

    def pair(self, x: int):
        return (self.m_of(x), self.g_of(x))

    def fmt(self, x: int) -> str:
        m = self.module.carrier.elements[self.m_of(x)]
        ms = str(m[0]) if len(m) == 1 else ".".join(map(str, m))
        return f"({ms},{self.g_of(x)})"

    def with_tables(self, under=None, over=None) -> "GAlexanderStructure":
        """Raw-table escape hatch for mutation tests; skips construction checks."""
        return GAlexanderStructure(
            self.group, self.module, self.phi,
            under if under is not None else self.under,
            over if over is not None else self.over,
            raw=True,
        )

    def __repr__(self):
        return f"GAlexanderStructure(|X|={self.size}, G={self.group.name})"


def build_g_alexander(group: FiniteGroup, module: GModule,
                      phi: CentralHom) -> GAlexanderStructure:
    """Build the full operation tables and check translation bijectivity."""
    if module.group is not group:
        raise ValidationError("module and homomorphism must share the same group")
    ng = group.order
    nm = module.carrier.size
    size = ng * nm
    carrier = module.carrier
    act = module.act
    mul = group.mul
    under = []
    over = []
    for x in range(size):
        m, g = divmod(x, ng)
        urow = []
        orow = []
        for a in range(size):
            n, h = divmod(a, ng)
            ph = phi.phi[h]
            # m.h + n.phi(h) - n.h
            mh = act[h][m]
            nph = act[ph][n]
            nh = act[h][n]
            mm = carrier.index[carrier.sub(
                carrier.add(carrier.elements[mh], carrier.elements[nph]),
                carrier.elements[nh])]
            urow.append(mm * ng + group.conj(g, h))
            orow.append(act[ph][m] * ng + g)
        under.append(tuple(urow))
        over.append(tuple(orow))
    s = GAlexanderStructure(group, module, phi, tuple(under), tuple(over))
    for a in range(size):
        if len({s.under[x][a] for x in range(size)}) != size:
            raise ValidationError(f"right translation by {s.fmt(a)} under is not bijective")
        if len({s.over[x][a] for x in range(size)}) != size:
            raise ValidationError(f"right translation by {s.fmt(a)} over is not bijective")
    return s


def verify_biquandle(s: GAlexanderStructure) -> AxiomReport:
    """Idempotence on the diagonal, bijectivity, and the three exchange laws."""
    t0 = time.perf_counter()
    rep = AxiomReport("biquandle")
    size = s.size
    under, over = s.under, s.over

    bad = next((x for x in range(size) if under[x][x] != over[x][x]), None)
    rep.add("diagonal", bad is None, None if bad is None else s.fmt(bad))

    bad = None
    for a in range(size):
        if len({under[x][a] for x in range(size)}) != size:
            bad = ("under", s.fmt(a))
            break
        if len({over[x][a] for x in range(size)}) != size:
            bad = ("over", s.fmt(a))
            break
    rep.add("translations-bijective", bad is None, bad)

    seen = {(over[y][x], under[x][y]) for x in range(size) for y in range(size)}
    rep.add("pair-map-bijective", len(seen) == size * size)

    w1 = w2 = w3 = None
    for x in range(size):
        ux, ox = under[x], over[x]
        for y in range(size):
            xy_u = ux[y]
            xy_o = ox[y]
            uy, oy = under[y], over[y]
            for z in range(size):
                zy_u = under[z][y]
                yz_o = oy[z]
                if w1 is None and under[xy_u][zy_u] != under[under[x][z]][yz_o]:
                    w1 = (s.fmt(x), s.fmt(y), s.fmt(z))
                if w2 is None and over[xy_u][zy_u] != under[over[x][z]][yz_o]:
                    w2 = (s.fmt(x), s.fmt(y), s.fmt(z))
                if w3 is None and over[xy_o][over[z][y]] != over[over[x][z]][under[y][z]]:
                    w3 = (s.fmt(x), s.fmt(y), s.fmt(z))
            if w1 and w2 and w3:
                break
    rep.add("exchange-under-under", w1 is None, w1)
    rep.add("exchange-under-over", w2 is None, w2)
    rep.add("exchange-over-over", w3 is None, w3)
    rep.elapsed = time.perf_counter() - t0
    return rep


def verify_mcb(s: GAlexanderStructure) -> AxiomReport:
    """Component-product compatibility axioms, on top of the exchange laws."""
    t0 = time.perf_counter()
    rep = AxiomReport("mcb")
    size = s.size
    ng = s.ng
    under, over = s.under, s.over

    base = verify_biquandle(s)
    for c in base.checks:
        if c.name.startswith("exchange"):
            rep.add(c.name, c.passed, c.witness)

    # under/over act by homomorphisms on each component
    w = None
    for a in range(size):
        for m in range(s.nm):
            off = m * ng
            for g in range(ng):
                for h in range(ng):
                    p = s.comp_mul(off + g, off + h)
                    if under[p][a] != s.comp_mul(under[off + g][a], under[off + h][a]):
                        w = ("under", s.fmt(off + g), s.fmt(off + h), s.fmt(a))
                        break
                    if over[p][a] != s.comp_mul(over[off + g][a], over[off + h][a]):
                        w = ("over", s.fmt(off + g), s.fmt(off + h), s.fmt(a))
                        break
                if w:
                    break
            if w:
                break
        if w:
            break
    rep.add("translation-homomorphism", w is None, w)

    # product expansion and identity laws
    w_u = w_o = w_id = None
    for m in range(s.nm):
        off = m * ng
        e = s.comp_id(m)
        for x in range(size):
            if w_id is None and (under[x][e] != x or over[x][e] != x):
                w_id = (s.fmt(x), s.fmt(e))
        for g in range(ng):
            a = off + g
            for h in range(ng):
                b = off + h
                ab = s.comp_mul(a, b)
                boa = over[b][a]
                for x in range(size):
                    if w_u is None and under[x][ab] != under[under[x][a]][boa]:
                        w_u = (s.fmt(x), s.fmt(a), s.fmt(b))
                    if w_o is None and over[x][ab] != over[over[x][a]][boa]:
                        w_o = (s.fmt(x), s.fmt(a), s.fmt(b))
                if w_u and w_o:
                    break
    rep.add("under-product-expansion", w_u is None, w_u)
    rep.add("over-product-expansion", w_o is None, w_o)
    rep.add("component-identities", w_id is None, w_id)

    # a^-1 b over a = b a^-1 under a  inside one component
    w = None
    for m in range(s.nm):
        off = m * ng
        for g in range(ng):
            a = off + g
            ainv = s.comp_inv(a)
            for h in range(ng):
                b = off + h
                if over[s.comp_mul(ainv, b)][a] != under[s.comp_mul(b, ainv)][a]:
                    w = (s.fmt(a), s.fmt(b))
                    break
            if w:
                break
        if w:
            break
    rep.add("twist-compatibility", w is None, w)
    rep.elapsed = time.perf_counter() - t0
    return rep


@dataclass(frozen=True)
class XSetSpec:
    """Auxiliary carrier acted on by X; trivial (singleton) or X acting on itself."""

    variant: str           # "trivial" | "self-under"
    size: int
    action: tuple          # action[y][x]; empty for the trivial variant

    def act(self, y, x):
        if self.variant == "trivial":
            return y
        return self.action[y][x]


def trivial_x_set(s: GAlexanderStructure) -> XSetSpec:
    return XSetSpec("trivial", 1, ())


def self_under_x_set(s: GAlexanderStructure) -> XSetSpec:
    return XSetSpec("self-under", s.size, s.under)


def verify_x_set(s: GAlexanderStructure, xs: XSetSpec, mcb: bool = False) -> AxiomReport:
    """Certify the action axioms; with ``mcb`` also the product laws."""
    t0 = time.perf_counter()
    rep = AxiomReport(f"x-set-{xs.variant}")
    size = s.size
    under, over = s.under, s.over

    ys = range(xs.size)
    w = None
    for y in ys:
        for a in range(size):
            ya = xs.act(y, a)
            oa = over[a]
            for b in range(size):
                if xs.act(ya, over[b][a]) != xs.act(xs.act(y, b), under[a][b]):
                    w = (y, s.fmt(a), s.fmt(b))
                    break
            if w:
                break
        if w:
            break
    rep.add("action-exchange", w is None, w)

    w = None
    for a in range(size):
        if len({xs.act(y, a) for y in ys}) != xs.size:
            w = s.fmt(a)
            break
    rep.add("action-bijective", w is None, w)

    if mcb:
        w_id = w_pr = None
        for y in ys:
            for m in range(s.nm):
                e = s.comp_id(m)
                if w_id is None and xs.act(y, e) != y:
                    w_id = (y, s.fmt(e))
                off = m * s.ng
                for g in range(s.ng):
                    a = off + g
                    ya = xs.act(y, a)
                    for h in range(s.ng):
                        b = off + h
                        if xs.act(y, s.comp_mul(a, b)) != xs.act(ya, over[b][a]):
                            w_pr = (y, s.fmt(a), s.fmt(b))
                            break
                    if w_pr:
                        break
                if w_pr:
                    break
            if w_pr:
                break
        rep.add("action-identity", w_id is None, w_id)
        rep.add("action-product", w_pr is None, w_pr)

    rep.elapsed = time.perf_counter() - t0
    return rep
