"""Exact multivariate polynomials with dictionary term storage."""

from fractions import Fraction

from .errors import DimensionMismatch, ExponentOverflow, LuError
from .orders import canonical_order

EXP_CAP = 1 << 16


def mono_mul(a, b):
    c = tuple(x + y for x, y in zip(a, b))
    for x in c:
        if x > EXP_CAP:
            raise ExponentOverflow(f"exponent {x} exceeds the cap {EXP_CAP}")
    return c


def mono_divides(a, b):
    """True when the monomial with exponents a divides the one with exponents b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(b, a):
    """Exponent difference b - a; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(b, a))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_gcd(a, b):
    return tuple(min(x, y) for x, y in zip(a, b))


def mono_deg(a):
    return sum(a)


class PolyRing:
    """Polynomial ring over a fixed field with an ordered tuple of named variables."""

    __slots__ = ("field", "names", "index", "canonical")

    def __init__(self, field, names):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise LuError(f"duplicate variable names: {names}")
        self.field = field
        self.names = names
        self.index = {nm: i for i, nm in enumerate(names)}
        self.canonical = canonical_order(names)

    @property
    def n(self):
        return len(self.names)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.field == other.field
            and self.names == other.names
        )

    def __hash__(self):
        return hash((self.field, self.names))

    def __repr__(self):
        return f"{self.field!r}[{', '.join(self.names)}]"

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.const(1)

    def const(self, c):
        c = self.field.coerce(c)
        if c == self.field.zero:
            return Polynomial(self, {})
        return Polynomial(self, {(0,) * self.n: c})

    def var(self, name):
        if name not in self.index:
            raise LuError(f"no variable {name!r} in {self!r}")
        e = [0] * self.n
        e[self.index[name]] = 1
        return Polynomial(self, {tuple(e): self.field.one})

    def gens(self):
        return [self.var(nm) for nm in self.names]

    def monomial(self, exps, coeff=1):
        exps = tuple(exps)
        if len(exps) != self.n:
            raise DimensionMismatch(f"expected {self.n} exponents, got {len(exps)}")
        if any(x < 0 for x in exps):
            raise LuError(f"negative exponent in {exps}")
        if any(x > EXP_CAP for x in exps):
            raise ExponentOverflow(f"exponent above cap in {exps}")
        c = self.field.coerce(coeff)
        if c == self.field.zero:
            return self.zero()
        return Polynomial(self, {exps: c})

    def from_terms(self, items):
        """Build a polynomial from (exps, coeff) pairs, merging duplicates."""
        acc = self.zero()
        for e, c in items:
            acc = acc + self.monomial(e, c)
        return acc

    def extend(self, extra):
        """Same field, variables of self followed by the new names."""
        return PolyRing(self.field, self.names + tuple(extra))

    def drop(self, names):
        gone = set(names)
        return PolyRing(self.field, tuple(nm for nm in self.names if nm not in gone))


class Polynomial:
    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        # takes ownership of terms; callers guarantee no zero coefficients
        self.ring = ring
        self.terms = terms

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise LuError(f"mixed rings: {self.ring!r} and {other.ring!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def is_zero(self):
        return not self.terms

    def constant_value(self):
        """The coefficient if this is a constant, else None."""
        if not self.terms:
            return self.ring.field.zero
        if len(self.terms) == 1:
            (e, c), = self.terms.items()
            if not any(e):
                return c
        return None

    def degree(self):
        if not self.terms:
            return -1
        return max(mono_deg(e) for e in self.terms)

    def variables(self):
        """Names that actually occur."""
        seen = set()
        for e in self.terms:
            for i, x in enumerate(e):
                if x:
                    seen.add(self.ring.names[i])
        return seen

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        F = self.ring.field
        t = dict(self.terms)
        for e, c in other.terms.items():
            s = F.add(t.get(e, F.zero), c)
            if s == F.zero:
                t.pop(e, None)
            else:
                t[e] = s
        return Polynomial(self.ring, t)

    __radd__ = __add__

    def __neg__(self):
        F = self.ring.field
        return Polynomial(self.ring, {e: F.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        F = self.ring.field
        t = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = mono_mul(ea, eb)
                s = F.add(t.get(e, F.zero), F.mul(ca, cb))
                if s == F.zero:
                    t.pop(e, None)
                else:
                    t[e] = s
        return Polynomial(self.ring, t)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise LuError(f"polynomial power must be a nonnegative integer, got {k!r}")
        acc = self.ring.one()
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base_needed = k >> 1
            if base_needed:
                base = base * base
            k = base_needed
        return acc

    def scale(self, c):
        c = self.ring.field.coerce(c)
        if c == self.ring.field.zero:
            return self.ring.zero()
        F = self.ring.field
        return Polynomial(self.ring, {e: F.mul(v, c) for e, v in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def leading(self, order=None):
        """(exponents, coefficient) of the biggest term, or None for zero."""
        if not self.terms:
            return None
        order = order or self.ring.canonical
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def monic(self, order=None):
        if not self.terms:
            return self
        _, c = self.leading(order)
        return self.scale(self.ring.field.inv(c))

    def term_list(self, order=None):
        """Terms as (exponents, coefficient), biggest first."""
        order = order or self.ring.canonical
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def derivative(self, name):
        i = self.ring.index[name]
        F = self.ring.field
        t = {}
        for e, c in self.terms.items():
            if not e[i]:
                continue
            c2 = F.mul(c, F.coerce(e[i]))
            if c2 == F.zero:
                continue  # characteristic divides the exponent
            e2 = e[:i] + (e[i] - 1,) + e[i + 1 :]
            t[e2] = F.add(t.get(e2, F.zero), c2) if e2 in t else c2
        return Polynomial(self.ring, {e: c for e, c in t.items() if c != F.zero})

    def substitute(self, target, mapping=None):
        """Image in `target` sending each variable to mapping[name].

        Variables missing from the mapping go to the same-named variable of
        the target ring.  Values may be polynomials of the target ring or
        constants.
        """
        mapping = dict(mapping or {})
        images = []
        for nm in self.ring.names:
            v = mapping.get(nm)
            if v is None:
                v = target.var(nm)
            elif not isinstance(v, Polynomial):
                v = target.const(v)
            elif v.ring != target:
                raise LuError(f"substitution value for {nm!r} lives in {v.ring!r}")
            images.append(v)
        acc = target.zero()
        for e, c in self.terms.items():
            part = target.const(c)
            for i, k in enumerate(e):
                if k:
                    part = part * images[i] ** k
            acc = acc + part
        return acc

    def restrict_to(self, small):
        """Reinterpret in a subring that must contain every occurring variable."""
        pos = []
        for nm in self.ring.names:
            pos.append(small.index.get(nm))
        t = {}
        for e, c in self.terms.items():
            e2 = [0] * small.n
            for i, k in enumerate(e):
                if not k:
                    continue
                if pos[i] is None:
                    raise LuError(
                        f"polynomial mentions {self.ring.names[i]!r}, absent from {small!r}"
                    )
                e2[pos[i]] = k
            t[tuple(e2)] = small.field.coerce(c)
        return Polynomial(small, t)

    def evaluate(self, point):
        """Value at a point given as {name: constant}; every variable needs a value."""
        F = self.ring.field
        vals = []
        for nm in self.ring.names:
            if nm not in point:
                raise LuError(f"no value for variable {nm!r}")
            vals.append(F.coerce(point[nm]))
        total = F.zero
        for e, c in self.terms.items():
            part = c
            for i, k in enumerate(e):
                for _ in range(k):
                    part = F.mul(part, vals[i])
            total = F.add(total, part)
        return total

    def text(self, order=None):
        """Deterministic rendering, biggest term first under the canonical order."""
        if not self.terms:
            return "0"
        order = order or self.ring.canonical
        F = self.ring.field
        parts = []
        for e, c in self.term_list(order):
            sign, mag = F.sign_abs(c)
            mono = "*".join(
                nm if k == 1 else f"{nm}^{k}"
                for nm, k in zip(self.ring.names, e)
                if k
            )
            if not mono:
                body = F.str_of(mag)
            elif mag == F.one:
                body = mono
            else:
                body = f"{F.str_of(mag)}*{mono}"
            if not parts:
                parts.append(body if sign > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if sign > 0 else f"- {body}")
        return " ".join(parts)

    def __str__(self):
        return self.text()

    def __repr__(self):
        return f"<{self.text()}>"
