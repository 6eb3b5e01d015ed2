"""Weight valuations of finite rank and their instance certificates.

A weight valuation is given by a support prime P and an integer weight row
per rank coordinate.  The value of a residue class is the lexicographic
minimum of the weight vectors of the monomials in its normal form against P.
That normal form computes the true filtration value exactly when P falls in
one of three certified classes: the zero ideal, an ideal generated by
variables, or an ideal whose reduced basis is weight homogeneous (then the
weight graded ring of R is R itself regraded, so multiplicativity is the
primality of P and no representative can beat the normal form).  certify()
refuses anything else rather than returning values that may undershoot.
"""

import random

from .decomp import NOT_PRIME, is_prime, minimal_primes
from .errors import (
    CertificationError,
    InitialIdealNotPrime,
    LuError,
    NotCentered,
    NotMinimalPrime,
    UnsupportedInstance,
)
from .ideals import Ideal
from .orders import weight_order


class Value:
    """Element of Z^k ordered lexicographically, or infinity."""

    __slots__ = ("vec",)

    def __init__(self, vec):
        self.vec = None if vec is None else tuple(int(x) for x in vec)

    @classmethod
    def infinite(cls):
        return cls(None)

    @property
    def is_infinite(self):
        return self.vec is None

    def _key(self):
        return (1,) if self.vec is None else (0, self.vec)

    def __eq__(self, other):
        return isinstance(other, Value) and self.vec == other.vec

    def __hash__(self):
        return hash(self.vec)

    def __lt__(self, other):
        if self.is_infinite:
            return False
        if other.is_infinite:
            return True
        if len(self.vec) != len(other.vec):
            raise LuError("comparing values of different rank")
        return self.vec < other.vec

    def __le__(self, other):
        return self == other or self < other

    def __gt__(self, other):
        return not self <= other

    def __ge__(self, other):
        return not self < other

    def __add__(self, other):
        if self.is_infinite or other.is_infinite:
            return Value(None)
        return Value(tuple(a + b for a, b in zip(self.vec, other.vec)))

    def __sub__(self, other):
        if other.is_infinite:
            raise LuError("cannot subtract an infinite value")
        if self.is_infinite:
            return Value(None)
        return Value(tuple(a - b for a, b in zip(self.vec, other.vec)))

    @property
    def is_positive(self):
        if self.is_infinite:
            return True
        return self.vec > (0,) * len(self.vec)

    @property
    def is_zero(self):
        return self.vec == (0,) * len(self.vec) if self.vec is not None else False

    def truncate(self, r):
        if self.is_infinite:
            return Value(None)
        return Value(self.vec[:r])

    def text(self):
        if self.is_infinite:
            return "inf"
        return "(" + ",".join(str(x) for x in self.vec) + ")"

    def __repr__(self):
        return f"Value({self.text()})"


class WeightValuation:
    """Support prime plus a weight row per rank coordinate."""

    __slots__ = ("ring", "support", "rows", "_order")

    def __init__(self, ring, support, rows):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if not rows:
            raise LuError("a weight valuation needs at least one row")
        for r in rows:
            if len(r) != ring.n:
                raise LuError(
                    f"weight row of length {len(r)} in a ring with {ring.n} variables"
                )
        if support.ring != ring:
            raise LuError("support lives in a different ring")
        self.ring = ring
        self.support = support
        self.rows = rows
        self._order = weight_order(rows, ring.n)

    @property
    def rank(self):
        return len(self.rows)

    def column(self, name):
        i = self.ring.index[name]
        return tuple(r[i] for r in self.rows)

    def weight_of_exps(self, e):
        return tuple(sum(r[i] * e[i] for i in range(len(e))) for r in self.rows)

    def value_of(self, f):
        nf = self.support.normal_form(f, self._order)
        if nf.is_zero():
            return Value(None)
        return Value(min(self.weight_of_exps(e) for e in nf.terms))

    def __repr__(self):
        w = "; ".join(",".join(str(x) for x in r) for r in self.rows)
        return f"WeightValuation(rows=[{w}], support={self.support!r})"


def support_class(nu):
    """'zero', 'variables', or 'weight-homogeneous'; None outside the classes."""
    gb = nu.support.canonical_gb()
    if not gb:
        return "zero"
    if all(len(g.terms) == 1 and sum(next(iter(g.terms))) == 1 for g in gb):
        return "variables"
    homogeneous = True
    for g in gb:
        weights = {nu.weight_of_exps(e) for e in g.terms}
        if len(weights) != 1:
            homogeneous = False
            break
    if homogeneous:
        return "weight-homogeneous"
    return None


def center_ideal(nu):
    """Support plus every variable of positive value."""
    gens = list(nu.support.gens)
    for nm in nu.ring.names:
        if nu.value_of(nu.ring.var(nm)).is_positive:
            gens.append(nu.ring.var(nm))
    return Ideal(nu.ring, gens)


def certify(nu, defining, center):
    """Run the instance checks tying nu to a presented local ring.

    Returns the admitting support class.  Raises InitialIdealNotPrime,
    NotMinimalPrime, NotCentered, or UnsupportedInstance.
    """
    if not nu.support.contains_ideal(defining):
        raise CertificationError("support does not contain the defining ideal")
    if nu.support.is_unit_ideal():
        raise CertificationError("support is the unit ideal")
    cls = support_class(nu)
    if cls is None:
        raise UnsupportedInstance(
            "support must be zero, variable generated, or weight homogeneous "
            "for normal forms to compute the filtration value"
        )
    verdict = is_prime(nu.support)
    if verdict.verdict == NOT_PRIME:
        w = ""
        if verdict.witness:
            w = f"({verdict.witness[0].text()}) * ({verdict.witness[1].text()})"
        raise InitialIdealNotPrime(
            "weight graded ring has zero divisors", w or verdict.reason
        )
    if not verdict.is_prime:
        raise UnsupportedInstance(f"support primality undecided: {verdict.reason}")
    mins = minimal_primes(defining)
    if not any(nu.support == q for q in mins):
        raise NotMinimalPrime(
            "support is not a minimal prime of the defining ideal",
            f"candidates: {[q.canonical_strings() for q in mins]}",
        )
    for nm in nu.ring.names:
        col = nu.column(nm)
        if col < (0,) * nu.rank:
            raise NotCentered(f"variable {nm} has negative weight column {col}")
    for g in center.canonical_gb():
        if not nu.value_of(g).is_positive:
            raise NotCentered(
                f"center generator {g.text()} has value {nu.value_of(g).text()}"
            )
    ring = nu.ring
    samples = [ring.one()]
    samples += [ring.one() + g for g in center.gens[:6]]
    for nm in ring.names:
        v = ring.var(nm)
        if not center.contains(v):
            samples.append(v)
    for f in samples:
        if center.contains(f):
            continue
        v = nu.value_of(f)
        if not v.is_zero:
            raise NotCentered(
                f"element {f.text()} outside the center has value {v.text()}"
            )
    return cls


def decompose(nu, r=1):
    """Split off the first r rows: a coarser valuation and the rest on its center.

    Returns (nu1, nu2) where nu1 keeps the support with rows[:r] and nu2 lives
    on the quotient by nu1's center with the remaining rows.
    """
    if not 1 <= r < nu.rank:
        raise LuError(f"split index {r} must satisfy 1 <= r < rank {nu.rank}")
    nu1 = WeightValuation(nu.ring, nu.support, nu.rows[:r])
    p1 = center_ideal(nu1)
    nu2 = WeightValuation(nu.ring, p1, nu.rows[r:])
    return nu1, nu2


def sample_polynomials(ring, rng, max_deg=4, max_terms=4):
    """One nonzero polynomial with small random support; deterministic per rng."""
    while True:
        acc = ring.zero()
        for _ in range(rng.randint(1, max_terms)):
            e = [0] * ring.n
            for _ in range(rng.randint(0, max_deg)):
                e[rng.randrange(ring.n)] += 1
            c = rng.randint(-3, 3)
            acc = acc + ring.monomial(tuple(e), c)
        if not acc.is_zero():
            return acc


def axiom_violations(nu, count=200, seed=0xC0FFEE):
    """Sampled checks of multiplicativity and the ultrametric inequality.

    Distinct values sharpen the inequality to an equality, and that is
    checked too.  Returns a list of (axiom, f, g) triples that failed;
    empty means the sample saw no violation.
    """
    rng = random.Random(seed)
    bad = []
    for _ in range(count):
        f = sample_polynomials(nu.ring, rng)
        g = sample_polynomials(nu.ring, rng)
        vf, vg = nu.value_of(f), nu.value_of(g)
        if nu.value_of(f * g) != vf + vg:
            bad.append(("multiplicativity", f, g))
        vs = nu.value_of(f + g)
        if vs < min(vf, vg):
            bad.append(("ultrametric", f, g))
        elif vf != vg and vs != min(vf, vg):
            bad.append(("ultrametric-strict", f, g))
    return bad
