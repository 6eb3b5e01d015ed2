"""Ideals in polynomial rings: Groebner bases and exact operations built on them.

The basis engine is plain Buchberger with the sugar selection strategy and
the two classical pair-dropping criteria, followed by full inter-reduction,
so a (ring, order) pair determines the basis uniquely.  Everything downstream
(membership, colon, saturation, elimination, intersection) reduces to it.
"""

import heapq
from dataclasses import dataclass

from .errors import LuError, ResourceLimit
from .orders import degrevlex, elimination_order
from .parse import parse_poly
from .poly import (
    Polynomial,
    mono_deg,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)


@dataclass(frozen=True)
class Limits:
    """Budget for one basis computation."""

    reductions: int = 10_000
    term_ops: int = 1_000_000


DEFAULT_LIMITS = Limits()


class _Meter:
    __slots__ = ("limits", "reductions", "term_ops")

    def __init__(self, limits):
        self.limits = limits or DEFAULT_LIMITS
        self.reductions = 0
        self.term_ops = 0

    def step_reduction(self):
        self.reductions += 1
        if self.reductions > self.limits.reductions:
            raise ResourceLimit(
                f"basis computation exceeded {self.limits.reductions} reductions"
            )

    def charge(self, n):
        self.term_ops += n
        if self.term_ops > self.limits.term_ops:
            raise ResourceLimit(
                f"basis computation exceeded {self.limits.term_ops} term operations"
            )


def normal_form(f, basis, order, meter=None):
    """Remainder of f under full division by basis (head and tail reduction).

    Reducer choice is the first basis element whose leading term divides, so
    the result is deterministic for a fixed basis tuple; for a Groebner basis
    it does not depend on the choice at all.
    """
    if f.is_zero() or not basis:
        return f
    ring = f.ring
    F = ring.field
    lts = [(g.leading(order), g) for g in basis]
    rem = {}
    p = dict(f.terms)
    while p:
        e = max(p, key=order.key)
        c = p.pop(e)
        hit = None
        for (eg, cg), g in lts:
            if mono_divides(eg, e):
                hit = (eg, cg, g)
                break
        if hit is None:
            rem[e] = c
            continue
        eg, cg, g = hit
        shift = mono_div(e, eg)
        scale = F.div(c, cg)
        if meter:
            meter.charge(len(g.terms))
        for e2, c2 in g.terms.items():
            if e2 == eg:
                continue
            e3 = mono_mul(e2, shift)
            s = F.sub(p.get(e3, F.zero), F.mul(c2, scale))
            if s == F.zero:
                p.pop(e3, None)
            else:
                p[e3] = s
    return Polynomial(ring, rem)


def exact_divide(f, d, order=None):
    """Quotient f/d when f lies in the principal ideal (d); raises otherwise."""
    if d.is_zero():
        raise LuError("division by the zero polynomial")
    order = order or degrevlex(f.ring.n)
    ring = f.ring
    F = ring.field
    ed, cd = d.leading(order)
    q = {}
    p = dict(f.terms)
    while p:
        e = max(p, key=order.key)
        if not mono_divides(ed, e):
            raise LuError("division is not exact")
        shift = mono_div(e, ed)
        scale = F.div(p[e], cd)
        q[shift] = scale
        for e2, c2 in d.terms.items():
            e3 = mono_mul(e2, shift)
            s = F.sub(p.get(e3, F.zero), F.mul(c2, scale))
            if s == F.zero:
                p.pop(e3, None)
            else:
                p[e3] = s
    return Polynomial(ring, q)


def s_polynomial(f, g, order):
    (ef, cf) = f.leading(order)
    (eg, cg) = g.leading(order)
    l = mono_lcm(ef, eg)
    F = f.ring.field
    mf = Polynomial(f.ring, {mono_div(l, ef): F.inv(cf)})
    mg = Polynomial(g.ring, {mono_div(l, eg): F.inv(cg)})
    return mf * f - mg * g


def inter_reduce(G, order):
    """Minimal reduced basis: monic, mutually irreducible, biggest first."""
    G = [g for g in G if not g.is_zero()]
    G.sort(key=lambda g: order.key(g.leading(order)[0]))
    keep = []
    for i, g in enumerate(G):
        eg = g.leading(order)[0]
        dominated = False
        for k, h in enumerate(G):
            if k == i:
                continue
            eh = h.leading(order)[0]
            if mono_divides(eh, eg) and (eh != eg or k < i):
                dominated = True
                break
        if not dominated:
            keep.append(g)
    out = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1 :]
        r = normal_form(g, others, order)
        out.append(r.monic(order))
    out.sort(key=lambda g: order.key(g.leading(order)[0]), reverse=True)
    return tuple(out)


def buchberger(gens, order, limits=None):
    """Reduced Groebner basis of the ideal the generators span."""
    meter = _Meter(limits)
    G = [g.monic(order) for g in gens if not g.is_zero()]
    if not G:
        return ()

    sugar = [g.degree() for g in G]
    pending = set()
    heap = []

    def lt(i):
        return G[i].leading(order)[0]

    def push_pair(i, j):
        l = mono_lcm(lt(i), lt(j))
        s = max(
            sugar[i] + mono_deg(l) - mono_deg(lt(i)),
            sugar[j] + mono_deg(l) - mono_deg(lt(j)),
        )
        heapq.heappush(heap, (s, mono_deg(l), i, j))
        pending.add((i, j))

    for j in range(len(G)):
        for i in range(j):
            push_pair(i, j)

    while heap:
        s, _, i, j = heapq.heappop(heap)
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        li, lj = lt(i), lt(j)
        l = mono_lcm(li, lj)
        if l == mono_mul(li, lj):
            continue  # coprime leading terms reduce to zero
        chained = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            if mono_divides(lt(k), l):
                a = (min(i, k), max(i, k))
                b = (min(j, k), max(j, k))
                if a not in pending and b not in pending:
                    chained = True
                    break
        if chained:
            continue
        meter.step_reduction()
        h = normal_form(s_polynomial(G[i], G[j], order), G, order, meter)
        if h.is_zero():
            continue
        G.append(h.monic(order))
        sugar.append(max(s, h.degree()))
        new = len(G) - 1
        for i2 in range(new):
            push_pair(i2, new)

    return inter_reduce(G, order)


def _fresh_name(ring, base):
    if base not in ring.index:
        return base
    k = 0
    while f"{base}{k}" in ring.index:
        k += 1
    return f"{base}{k}"


class Ideal:
    """A finitely generated ideal with cached reduced bases per order."""

    __slots__ = ("ring", "gens", "_gb")

    def __init__(self, ring, gens):
        self.ring = ring
        cleaned = []
        for g in gens:
            if isinstance(g, (int,)):
                g = ring.const(g)
            if g.ring != ring:
                raise LuError(f"generator lives in {g.ring!r}, not {ring!r}")
            if not g.is_zero():
                cleaned.append(g)
        self.gens = tuple(cleaned)
        self._gb = {}

    @classmethod
    def parse(cls, ring, texts):
        return cls(ring, [parse_poly(ring, t) for t in texts])

    def __repr__(self):
        inner = ", ".join(g.text() for g in self.gens) or "0"
        return f"Ideal({inner})"

    def groebner(self, order=None, limits=None):
        order = order or degrevlex(self.ring.n)
        if order not in self._gb:
            self._gb[order] = buchberger(self.gens, order, limits)
        return self._gb[order]

    def canonical_gb(self, limits=None):
        return self.groebner(self.ring.canonical, limits)

    def canonical_strings(self, limits=None):
        return [g.text() for g in self.canonical_gb(limits)]

    def normal_form(self, f, order=None, limits=None):
        order = order or degrevlex(self.ring.n)
        return normal_form(f, self.groebner(order, limits), order)

    def contains(self, f, limits=None):
        return self.normal_form(f, limits=limits).is_zero()

    def contains_ideal(self, other, limits=None):
        return all(self.contains(g, limits) for g in other.gens)

    def is_zero_ideal(self):
        return not self.groebner()

    def is_unit_ideal(self):
        gb = self.groebner()
        return len(gb) == 1 and gb[0].constant_value() is not None

    def __eq__(self, other):
        return (
            isinstance(other, Ideal)
            and self.ring == other.ring
            and self.groebner() == other.groebner()
        )

    def __hash__(self):
        return hash((self.ring, self.groebner()))

    def __add__(self, other):
        if isinstance(other, Ideal):
            if other.ring != self.ring:
                raise LuError("sum of ideals from different rings")
            return Ideal(self.ring, self.gens + other.gens)
        return Ideal(self.ring, self.gens + tuple(other))

    def multiply(self, other):
        if other.ring != self.ring:
            raise LuError("product of ideals from different rings")
        if not self.gens or not other.gens:
            return Ideal(self.ring, [])
        gens = [a * b for a in self.gens for b in other.gens]
        return Ideal(self.ring, buchberger(gens, degrevlex(self.ring.n)))

    def power(self, k):
        if k < 0:
            raise LuError("negative ideal power")
        acc = Ideal(self.ring, [self.ring.one()])
        for _ in range(k):
            acc = acc.multiply(self)
        return acc

    def eliminate(self, drop, limits=None):
        """Generators of the ideal's contraction to the subring avoiding `drop`.

        Result still lives in the ambient ring; its generators mention no
        dropped variable and form a basis of the contraction.
        """
        order = elimination_order(self.ring.names, drop)
        gb = self.groebner(order, limits)
        dropset = set(drop)
        kept = [g for g in gb if not (g.variables() & dropset)]
        return Ideal(self.ring, kept)

    def eliminate_restrict(self, drop, limits=None):
        """Same as eliminate, reinterpreted in the smaller ring."""
        small = self.ring.drop(drop)
        return Ideal(small, [g.restrict_to(small) for g in self.eliminate(drop, limits).gens])

    def intersect(self, other, limits=None):
        if other.ring != self.ring:
            raise LuError("intersection of ideals from different rings")
        ring = self.ring
        tname = _fresh_name(ring, "_T")
        big = ring.extend([tname])
        t = big.var(tname)
        gens = [t * g.substitute(big) for g in self.gens]
        gens += [(big.one() - t) * g.substitute(big) for g in other.gens]
        inner = Ideal(big, gens).eliminate([tname], limits)
        return Ideal(ring, [g.restrict_to(ring) for g in inner.gens])

    def colon(self, f, limits=None):
        """The transporter (self : f) for a single polynomial f."""
        if not isinstance(f, Polynomial):
            f = self.ring.const(f)
        if f.is_zero():
            return Ideal(self.ring, [self.ring.one()])
        if f.constant_value() is not None:
            return self
        if self.contains(f, limits):
            return Ideal(self.ring, [self.ring.one()])
        meet = self.intersect(Ideal(self.ring, [f]), limits)
        return Ideal(self.ring, [exact_divide(g, f) for g in meet.gens])

    def colon_ideal(self, other, limits=None):
        """(self : other) for an ideal, as the meet of the generator transporters."""
        if not other.gens:
            return Ideal(self.ring, [self.ring.one()])
        acc = None
        for g in other.gens:
            c = self.colon(g, limits)
            acc = c if acc is None else acc.intersect(c, limits)
        return acc

    def saturation(self, f, limits=None):
        """(self : f^infinity) together with the stabilization exponent.

        Returns (J, N) where J = (self : f^N) = (self : f^(N+1)); N = 0 means
        the ideal was already saturated.
        """
        prev = self
        n = 0
        while True:
            nxt = prev.colon(f, limits)
            if nxt == prev:
                return prev, n
            prev = nxt
            n += 1

    def minimal_generators(self):
        """Reduced default-order basis; a small deterministic generating set."""
        return list(self.groebner())
