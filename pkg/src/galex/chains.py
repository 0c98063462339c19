"""Chain groups and boundary maps over a fixed structure and regime.

Four kinds of chains share one sparse representation:

  * ``br``  - tuples over X, optionally prefixed by a carrier element;
  * ``bru`` - split tuples (group coordinates ; module coordinates);
  * ``gp``  - tuples over M up to the diagonal group action (stored canonically);
  * ``p``   - bracketed words, every bracket inside a single component.

Generator keys are plain tuples so chains are dicts from key to integer.
The regime is either ``trivial`` (singleton carrier, suppressed in keys) or
``xset`` (the structure acts on itself by the under operation; keys carry a
slot-0 element).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .biquandle import GAlexanderStructure, verify_x_set, self_under_x_set
from .errors import ComponentMismatch, UnsupportedKind, ValidationError, XSetAssumptionFailed
from .linalg import LatticeBasis

REGIME_TRIVIAL = "trivial"
REGIME_XSET = "xset"
KINDS = ("br", "bru", "gp", "p")


@dataclass
class ChainVector:
    """Formal integer combination of generators of one kind and degree."""

    kind: str
    degree: int
    terms: dict

    def __post_init__(self):
        self.terms = {k: v for k, v in self.terms.items() if v}

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            w = out.get(k, 0) + v
            if w:
                out[k] = w
            else:
                del out[k]
        return ChainVector(self.kind, self.degree, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c: int):
        if not c:
            return ChainVector(self.kind, self.degree, {})
        return ChainVector(self.kind, self.degree, {k: c * v for k, v in self.terms.items()})

    def _check(self, other):
        if self.kind != other.kind or self.degree != other.degree:
            raise ValidationError(
                f"cannot combine chains of kind/degree ({self.kind},{self.degree}) "
                f"and ({other.kind},{other.degree})")

    def items_sorted(self):
        return sorted(self.terms.items(), key=lambda kv: _sort_key(kv[0]))


def _sort_key(gen):
    # tuples may contain None (suppressed carrier); map it below all ints
    def fix(t):
        if t is None:
            return (-1,)
        if isinstance(t, tuple):
            return tuple(fix(x) for x in t)
        return t
    return fix(gen)


def _acc(d, key, coeff):
    v = d.get(key, 0) + coeff
    if v:
        d[key] = v
    else:
        del d[key]


class ChainSystem:
    """All chain-level operations for one structure in one regime."""

    def __init__(self, structure: GAlexanderStructure, regime: str):
        if regime not in (REGIME_TRIVIAL, REGIME_XSET):
            raise ValidationError(f"unknown regime {regime!r}")
        self.s = structure
        self.regime = regime
        if regime == REGIME_XSET:
            rep = verify_x_set(structure, self_under_x_set(structure), mcb=True)
            if not rep.passed:
                raise XSetAssumptionFailed(rep.failures()[0].witness)
        self._basis = {}
        self._canon = {}
        self._deg_span = {}
        self._shuffles = {}

    # -- small helpers --------------------------------------------------
    @property
    def xset(self) -> bool:
        return self.regime == REGIME_XSET

    def y_values(self):
        return tuple(range(self.s.size)) if self.xset else (None,)

    def act_y(self, y, a):
        return None if y is None else self.s.under[y][a]

    def _group_pow(self, g, k):
        return g if k else self.s.group.identity

    def canonical_gp(self, ms: tuple) -> tuple:
        """Lexicographically least tuple over the diagonal orbit."""
        cached = self._canon.get(ms)
        if cached is not None:
            return cached
        act = self.s.module.act
        best = ms
        for g in range(1, self.s.group.order):
            row = act[g]
            cand = tuple(row[m] for m in ms)
            if cand < best:
                best = cand
        self._canon[ms] = best
        return best

    # -- generator enumeration -------------------------------------------
    def basis(self, kind: str, degree: int):
        key = (kind, degree)
        got = self._basis.get(key)
        if got is None:
            got = tuple(self._enumerate(kind, degree))
            self._basis[key] = got
        return got

    def _enumerate(self, kind, degree):
        s = self.s
        if kind == "br":
            if degree < 1:
                return
            for y in self.y_values():
                for xs in itertools.product(range(s.size), repeat=degree):
                    yield (y, xs)
        elif kind == "bru":
            if degree < 1:
                return
            width = degree + 1 if self.xset else degree
            for gs in itertools.product(range(s.ng), repeat=width):
                for ms in itertools.product(range(s.nm), repeat=width):
                    yield (gs, ms)
        elif kind == "gp":
            if degree < 1:
                return
            for ms in itertools.product(range(s.nm), repeat=degree):
                if self.canonical_gp(ms) == ms:
                    yield ms
        elif kind == "p":
            if degree < 0:
                return
            for y in self.y_values():
                if degree == 0:
                    yield (y, ())
                    continue
                for comp in _compositions(degree):
                    for brackets in itertools.product(
                            *(self._component_brackets(size) for size in comp)):
                        yield (y, brackets)
        else:
            raise UnsupportedKind(kind)

    def _component_brackets(self, size):
        s = self.s
        out = []
        for m in range(s.nm):
            off = m * s.ng
            for gs in itertools.product(range(s.ng), repeat=size):
                out.append(tuple(off + g for g in gs))
        return out

    def basis_index(self, kind, degree):
        key = ("idx", kind, degree)
        got = self._basis.get(key)
        if got is None:
            got = {gen: i for i, gen in enumerate(self.basis(kind, degree))}
            self._basis[key] = got
        return got

    # -- boundary maps ----------------------------------------------------
    def boundary(self, kind: str, gen) -> ChainVector:
        if kind == "br":
            return self.boundary_br(gen)
        if kind == "bru":
            return self.boundary_bru(gen)
        if kind == "gp":
            return self.boundary_gp(gen)
        if kind == "p":
            return self.boundary_p(gen)
        raise UnsupportedKind(kind)

    def boundary_chain(self, kind: str, chain: ChainVector) -> ChainVector:
        out = {}
        for gen, c in chain.terms.items():
            for k, v in self.boundary(kind, gen).terms.items():
                _acc(out, k, c * v)
        return ChainVector(kind, chain.degree - 1, out)

    def boundary_br(self, gen) -> ChainVector:
        y, xs = gen
        n = len(xs)
        if n < 2:
            return ChainVector("br", n - 1, {})
        under, over = self.s.under, self.s.over
        out = {}
        sign = 1
        for i in range(n):
            xi = xs[i]
            _acc(out, (y, xs[:i] + xs[i + 1:]), sign)
            acted = tuple(under[xs[j]][xi] for j in range(i)) \
                + tuple(over[xs[j]][xi] for j in range(i + 1, n))
            _acc(out, (self.act_y(y, xi), acted), -sign)
            sign = -sign
        return ChainVector("br", n - 1, out)

    def boundary_bru(self, gen) -> ChainVector:
        gs, ms = gen
        n = len(gs) - 1 if self.xset else len(gs)
        if n < 2:
            return ChainVector("bru", n - 1, {})
        group = self.s.group
        act = self.s.module.act
        carrier = self.s.module.carrier
        phi = self.s.phi.phi

        def madd(a, b):
            return carrier.index[carrier.add(carrier.elements[a], carrier.elements[b])]

        out = {}
        sign = 1
        for i in range(n):
            if self.xset:
                c = gs[i + 1]
                pc = phi[c]
                del_gs = gs[:i + 1] + gs[i + 2:]
                del_ms = ms[:i] + (madd(ms[i], ms[i + 1]),) + ms[i + 2:]
                tw_gs = tuple(group.conj(gs[j], c) for j in range(i + 1)) + gs[i + 2:]
                tw_ms = tuple(act[c][ms[j]] for j in range(i)) \
                    + (madd(act[c][ms[i]], act[pc][ms[i + 1]]),) \
                    + tuple(act[pc][ms[j]] for j in range(i + 2, n + 1))
            elif i == 0:
                c = gs[0]
                pc = phi[c]
                del_gs, del_ms = gs[1:], ms[1:]
                tw_gs = gs[1:]
                tw_ms = tuple(act[pc][m] for m in ms[1:])
            else:
                c = gs[i]
                pc = phi[c]
                del_gs = gs[:i] + gs[i + 1:]
                del_ms = ms[:i - 1] + (madd(ms[i - 1], ms[i]),) + ms[i + 1:]
                tw_gs = tuple(group.conj(gs[j], c) for j in range(i)) + gs[i + 1:]
                tw_ms = tuple(act[c][ms[j]] for j in range(i - 1)) \
                    + (madd(act[c][ms[i - 1]], act[pc][ms[i]]),) \
                    + tuple(act[pc][ms[j]] for j in range(i + 1, n))
            _acc(out, (del_gs, del_ms), sign)
            _acc(out, (tw_gs, tw_ms), -sign)
            sign = -sign
        return ChainVector("bru", n - 1, out)

    def boundary_gp(self, gen) -> ChainVector:
        ms = gen
        n = len(ms)
        if n < 2:
            return ChainVector("gp", n - 1, {})
        carrier = self.s.module.carrier

        def madd(a, b):
            return carrier.index[carrier.add(carrier.elements[a], carrier.elements[b])]

        out = {}
        _acc(out, self.canonical_gp(ms[1:]), 1)
        sign = -1
        for k in range(n - 1):
            folded = ms[:k] + (madd(ms[k], ms[k + 1]),) + ms[k + 2:]
            _acc(out, self.canonical_gp(folded), sign)
            sign = -sign
        _acc(out, self.canonical_gp(ms[:-1]), 1 if n % 2 == 0 else -1)
        return ChainVector("gp", n - 1, out)

    def boundary_p(self, gen) -> ChainVector:
        y, brackets = gen
        n = sum(len(b) for b in brackets)
        if n < 1:
            return ChainVector("p", n - 1, {})
        s = self.s
        under, over = s.under, s.over
        out = {}
        prefix_sign = 1
        for i, br in enumerate(brackets):
            a = br[0]
            ainv = s.comp_inv(a)
            tilde = tuple(over[s.comp_mul(ainv, br[j])][a] for j in range(1, len(br)))
            new_brs = tuple(tuple(under[x][a] for x in b) for b in brackets[:i])
            if tilde:
                new_brs += (tilde,)
            new_brs += tuple(tuple(over[x][a] for x in b) for b in brackets[i + 1:])
            _acc(out, (self.act_y(y, a), new_brs), prefix_sign)
            inner = 1
            for j in range(len(br)):
                inner = -inner
                short = br[:j] + br[j + 1:]
                del_brs = brackets[:i] + ((short,) if short else ()) + brackets[i + 1:]
                _acc(out, (y, del_brs), prefix_sign * inner)
            if len(br) % 2:
                prefix_sign = -prefix_sign
        return ChainVector("p", n - 1, out)

    # -- shuffle merge ------------------------------------------------------
    def _patterns(self, s_len, t_len):
        key = (s_len, t_len)
        got = self._shuffles.get(key)
        if got is None:
            total = s_len + t_len
            pats = []
            for mu in itertools.combinations(range(1, total + 1), s_len):
                sign = -1 if sum(mu[k] - (k + 1) for k in range(s_len)) % 2 else 1
                floors = []
                cnt = 0
                nxt = 0
                for j in range(1, total + 1):
                    while nxt < s_len and mu[nxt] <= j:
                        cnt += 1
                        nxt += 1
                    floors.append(cnt)
                pats.append((sign, tuple(floors)))
            got = tuple(pats)
            self._shuffles[key] = got
        return got

    def shuffle_merge(self, a_br: tuple, b_br: tuple):
        """Signed sum of interleavings of two brackets from one component.

        Entry j of a merged bracket is a_{floor(j)} * b_{j - floor(j)} with the
        convention a_0 = b_0 = the component identity.
        """
        if not a_br:
            raise ValidationError("left bracket must be nonempty")
        s = self.s
        comp = s.comp_of(a_br[0])
        if any(s.comp_of(x) != comp for x in a_br + b_br):
            raise ComponentMismatch(a_br, b_br)
        e = s.comp_id(comp)
        sl, tl = len(a_br), len(b_br)
        out = []
        for sign, floors in self._patterns(sl, tl):
            merged = []
            for j, fl in enumerate(floors, start=1):
                av = a_br[fl - 1] if fl else e
                bv = b_br[j - fl - 1] if j - fl else e
                merged.append(s.comp_mul(av, bv))
            out.append((sign, tuple(merged)))
        return out

    # -- degenerate families --------------------------------------------------
    def degenerate_generators(self, kind: str, degree: int):
        """Generating family of the degenerate subgroup, as chain vectors.

        The zero-slot family for ``gp`` covers every slot and the split
        families for ``br``/``bru`` include the bottom degree; this is the
        smallest enlargement of the printed families that is closed under the
        boundary in every degree.
        """
        if kind == "gp":
            return self._deg_gp(degree)
        if kind == "br":
            return self._deg_br(degree)
        if kind == "bru":
            return self._deg_bru(degree)
        if kind == "p":
            return self._deg_p(degree)
        raise UnsupportedKind(kind)

    def _deg_gp(self, n):
        if n < 1:
            return []
        zero = self.s.module.carrier.index[self.s.module.carrier.zero]
        seen = set()
        out = []
        for ms in self.basis("gp", n):
            if zero in ms and ms not in seen:
                seen.add(ms)
                out.append(ChainVector("gp", n, {ms: 1}))
        return out

    def gp_is_degenerate_strict(self, ms: tuple) -> bool:
        """Zero in an interior slot (all but the last), the narrow family."""
        zero = self.s.module.carrier.index[self.s.module.carrier.zero]
        return zero in ms[:-1]

    def _deg_br(self, n):
        if n < 1:
            return []
        s = self.s
        size = s.size
        out = []
        # repeated component coordinate in adjacent slots
        for y in self.y_values():
            for i in range(n - 1):
                for ctx in itertools.product(range(size), repeat=n - 2):
                    for m in range(s.nm):
                        off = m * s.ng
                        for g in range(s.ng):
                            for h in range(s.ng):
                                xs = ctx[:i] + (off + g, off + h) + ctx[i:]
                                out.append(ChainVector("br", n, {(y, xs): 1}))
        # product splitting
        under, over = s.under, s.over
        for y in self.y_values():
            for i in range(n):
                for ctx in itertools.product(range(size), repeat=n - 1):
                    for m in range(s.nm):
                        off = m * s.ng
                        for g in range(s.ng):
                            a = off + g
                            for h in range(s.ng):
                                gh = off + s.group.mul[g][h]
                                t1 = (y, ctx[:i] + (gh,) + ctx[i:])
                                t2 = (y, ctx[:i] + (a,) + ctx[i:])
                                acted = tuple(under[x][a] for x in ctx[:i]) \
                                    + (over[off + h][a],) \
                                    + tuple(over[x][a] for x in ctx[i:])
                                t3 = (self.act_y(y, a), acted)
                                terms = {}
                                _acc(terms, t1, 1)
                                _acc(terms, t2, -1)
                                _acc(terms, t3, -1)
                                out.append(ChainVector("br", n, terms))
        return out

    def _deg_bru(self, n):
        if n < 1:
            return []
        s = self.s
        group = s.group
        act = s.module.act
        phi = s.phi.phi
        width = n + 1 if self.xset else n
        zero = s.module.carrier.index[s.module.carrier.zero]
        out = []
        lo = 1 if self.xset else 0
        for gs in itertools.product(range(s.ng), repeat=width):
            for ms in itertools.product(range(s.nm), repeat=width - 1):
                for slot in range(lo, lo + n - 1):
                    full = ms[:slot] + (zero,) + ms[slot:]
                    out.append(ChainVector("bru", n, {(gs, full): 1}))
        for gs in itertools.product(range(s.ng), repeat=width):
            for ms in itertools.product(range(s.nm), repeat=width):
                for i in range(1, n + 1):
                    slot = i if self.xset else i - 1
                    gi = gs[slot]
                    pg = phi[gi]
                    for h in range(s.ng):
                        t1 = (gs[:slot] + (group.mul[gi][h],) + gs[slot + 1:], ms)
                        t3g = tuple(group.conj(gs[j], gi) for j in range(slot)) \
                            + (h,) + gs[slot + 1:]
                        t3m = tuple(act[gi][ms[j]] for j in range(slot)) \
                            + tuple(act[pg][ms[j]] for j in range(slot, width))
                        terms = {}
                        _acc(terms, t1, 1)
                        _acc(terms, (gs, ms), -1)
                        _acc(terms, (t3g, t3m), -1)
                        out.append(ChainVector("bru", n, terms))
        return out

    def bru_is_degenerate_strict(self, gen) -> bool:
        """Zero module entry in an interior slot, the narrow zero-slot family."""
        gs, ms = gen
        zero = self.s.module.carrier.index[self.s.module.carrier.zero]
        lo = 1 if self.xset else 0
        n = len(gs) - 1 if self.xset else len(gs)
        return zero in ms[lo:lo + n - 1]

    def _deg_p(self, n):
        if n < 2:
            return []
        out = []
        for gen in self.basis("p", n):
            y, brackets = gen
            for i in range(len(brackets) - 1):
                a_br, b_br = brackets[i], brackets[i + 1]
                if self.s.comp_of(a_br[0]) != self.s.comp_of(b_br[0]):
                    continue
                terms = {gen: 1}
                for sign, merged in self.shuffle_merge(a_br, b_br):
                    key = (y, brackets[:i] + (merged,) + brackets[i + 2:])
                    _acc(terms, key, -sign)
                out.append(ChainVector("p", n, terms))
        return out

    # -- span membership -----------------------------------------------------
    def degenerate_span(self, kind: str, degree: int) -> LatticeBasis:
        key = (kind, degree)
        got = self._deg_span.get(key)
        if got is None:
            index = self.basis_index(kind, degree)
            got = LatticeBasis()
            for vec in self.degenerate_generators(kind, degree):
                got.insert({index[g]: c for g, c in vec.terms.items()})
            self._deg_span[key] = got
        return got

    def in_degenerate_span(self, v: ChainVector) -> bool:
        if v.is_zero():
            return True
        index = self.basis_index(v.kind, v.degree)
        span = self.degenerate_span(v.kind, v.degree)
        return span.contains({index[g]: c for g, c in v.terms.items()})

    # -- global verification ---------------------------------------------------
    def verify_dd_zero(self, kind: str, degree: int):
        """Is the double boundary zero on every generator of this degree?"""
        for gen in self.basis(kind, degree):
            out = {}
            for mid, c in self.boundary(kind, gen).terms.items():
                for k, v in self.boundary(kind, mid).terms.items():
                    _acc(out, k, c * v)
            if out:
                return False, gen
        return True, None

    def verify_degenerate_closure(self, kind: str, degree: int):
        """Boundary of every degenerate generator stays in the degenerate span."""
        for vec in self.degenerate_generators(kind, degree):
            img = self.boundary_chain(kind, vec)
            if not self.in_degenerate_span(img):
                return False, vec
        return True, None

    # -- serialization ----------------------------------------------------------
    def format_generator(self, kind: str, gen) -> str:
        s = self.s
        if kind == "br":
            y, xs = gen
            body = "".join(s.fmt(x) for x in xs)
            return body if y is None else f"[{s.fmt(y)}]{body}"
        if kind == "bru":
            gs, ms = gen
            mm = ",".join(self._fmt_m(m) for m in ms)
            return f"({' '.join(map(str, gs))} ; {mm})"
        if kind == "gp":
            return "(" + ",".join(self._fmt_m(m) for m in gen) + ")"
        if kind == "p":
            y, brackets = gen
            body = "".join("<" + "".join(s.fmt(x) for x in br) + ">" for br in brackets)
            if not body:
                body = "<>"
            return body if y is None else f"[{s.fmt(y)}]{body}"
        raise UnsupportedKind(kind)

    def _fmt_m(self, m: int) -> str:
        el = self.s.module.carrier.elements[m]
        return str(el[0]) if len(el) == 1 else ".".join(map(str, el))

    def format_chain(self, v: ChainVector) -> str:
        if v.is_zero():
            return "0"
        lines = [f"{c} * {self.format_generator(v.kind, g)}"
                 for g, c in v.items_sorted()]
        return "\n".join(lines)


def _compositions(n):
    """Ordered compositions of n into positive parts, lexicographic."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            yield (first,) + rest


def shuffle_term_count(s_len: int, t_len: int) -> int:
    return comb(s_len + t_len, s_len)
