"""The rank-induction reduction driver and its three constructive steps.

Every step returns the blowups it performed and re-verifies its own claim on
the instance afterwards: step one that the associated-prime count strictly
drops until one remains, step two that the reduced ring becomes regular with
the dimension count r + t matching, step three that the nilpotent graded
pieces become free along the center.  Rank one instances are delegated to an
oracle after step one; higher rank splits off the first value row, uniformizes
the localized and quotient data recursively, and lifts each blowup back.
Nothing is trusted across a lift: the lifted chart re-runs the full
certificate chain before it is accepted.
"""

from dataclasses import dataclass, field

from .decomp import associated_primes, is_prime
from .errors import (
    CertificationError,
    IsomorphismCheckFailed,
    LuError,
    UnsupportedInstance,
)
from .ideals import Ideal
from .localring import (
    LocalRing,
    cotangent_presentation,
    graded_piece,
    is_free_at,
    is_normally_flat,
    is_regular_local,
    nilpotent_length,
)
from .modules import rank_mod_prime
from .blowup import (
    lift_from_localization,
    lift_from_quotient,
    local_blowup,
    transport_through_blowup,
)
from .valuations import certify, center_ideal, decompose

UNIFORMIZED = "Uniformized"
UNSUPPORTED = "Unsupported"
BUDGET_EXCEEDED = "BudgetExceeded"

LABELS = ("ass-prime", "trim", "regularize", "normal-flat", "oracle")


@dataclass(frozen=True)
class TraceStep:
    label: str
    blowup: object
    report: dict


@dataclass
class ReductionTrace:
    steps: list
    verdict: str
    reason: str
    final_ring: LocalRing
    final_nu: object


class _BudgetExhausted(Exception):
    pass


class _Budget:
    __slots__ = ("left",)

    def __init__(self, left):
        self.left = left

    def spend(self):
        if self.left <= 0:
            raise _BudgetExhausted()
        self.left -= 1

    def clone(self):
        return _Budget(self.left)


def _apply(L, nu, B, label, report, budget, steps):
    budget.spend()
    nu2 = transport_through_blowup(nu, B)
    certify(nu2, B.chart.defining, B.chart.center)
    report = dict(report)
    report.setdefault("stabilization_N", B.stabilization_N)
    steps.append(TraceStep(label, B, report))
    return B.chart, nu2


def _local_associated(L):
    """Associated primes visible at the center; flags off-center components."""
    ass = associated_primes(L.defining)
    inside = [q for q in ass if L.center.contains_ideal(q)]
    return inside, len(inside) != len(ass)


def step1(L, nu, budget=None, steps=None):
    """Blow up associated primes away until exactly one remains.

    Picks the candidate with the lexicographically smallest reduced basis,
    divides by its generator of least value, and demands a strict drop of
    the count after every blowup.
    """
    budget = budget or _Budget(32)
    steps = [] if steps is None else steps
    while True:
        ass, off_center = _local_associated(L)
        if not ass:
            raise CertificationError(
                "associated primes", "no associated prime lies at the center"
            )
        if len(ass) == 1:
            if not off_center and ass[0] != L.nilradical():
                raise CertificationError(
                    "associated primes",
                    "unique associated prime differs from the nilradical",
                )
            return L, nu, steps
        cands = [q for q in ass if not nu.support.contains_ideal(q)]
        if not cands:
            raise CertificationError(
                "associated primes", "every associated prime lies in the support"
            )
        q = min(cands, key=lambda p: tuple(p.canonical_strings()))
        gens = q.canonical_gb()
        bi = min(range(len(gens)), key=lambda i: (nu.value_of(gens[i]), i))
        b = gens[bi]
        rest = gens[:bi] + gens[bi + 1 :]
        before = len(ass)
        B = local_blowup(L, b, rest, nu=nu)
        after = len(_local_associated(B.chart)[0])
        if after >= before:
            raise CertificationError(
                "associated primes",
                f"count went from {before} to {after} across the blowup",
            )
        L, nu = _apply(
            L, nu, B, "ass-prime",
            {"ass_before": before, "ass_after": after}, budget, steps,
        )


def _select_basis(ring, gens, rows, prime, nu=None):
    """Smallest generator subset whose classes span the cokernel at a prime.

    Generators are tried in ascending value order (then input order), so a
    chart variable beats the products it divides; rank is tested over the
    residue field by adjoining unit rows.
    """
    s = len(gens)
    order = list(range(s))
    if nu is not None:
        order.sort(key=lambda i: (nu.value_of(gens[i]), i))
    aug = [list(r) for r in rows]
    rank = rank_mod_prime(aug, prime) if aug else 0
    chosen = []
    for i in order:
        if rank == s:
            break
        unit = [ring.one() if j == i else ring.zero() for j in range(s)]
        r2 = rank_mod_prime(aug + [unit], prime)
        if r2 > rank:
            chosen.append(i)
            aug.append(unit)
            rank = r2
    if rank != s:
        raise CertificationError(
            "basis selection", "generators do not span at the prime"
        )
    return sorted(chosen)


def _absorption(L, p1, basis, modulus, g):
    """How the generator g reduces into (basis) + modulus.

    Returns ('unit', None) when the colon leaves the center (g is already
    absorbed after localizing), ('blowup', b) with b in the center but not
    in p1, or ('stuck', None) when the colon sits inside p1.
    """
    Q = (Ideal(L.ring, basis) + modulus).colon(g)
    cands = [c for c in Q.canonical_gb() if not p1.contains(c)]
    if not cands:
        return "stuck", None
    for c in cands:
        if not L.center.contains(c):
            return "unit", None
    return "blowup", cands[0]


def _trim_probe(L, nu):
    """Parameters at the split center and the extras still obstructing them."""
    nu1, _ = decompose(nu, 1)
    p1 = center_ideal(nu1)
    nil = L.nilradical()
    red_at_p = LocalRing(L.ring, nil, p1, check=False)
    reg = is_regular_local(red_at_p)
    if not reg.regular:
        raise CertificationError(
            "hypothesis", "reduced ring is not regular at the split center"
        )
    gens, rows = cotangent_presentation(red_at_p)
    idx = _select_basis(L.ring, gens, rows, p1, nu=nu)
    params = [gens[i] for i in idx]
    extras = []
    for j, g in enumerate(gens):
        if j in idx:
            continue
        kind, b = _absorption(L, p1, params, L.defining, g)
        if kind == "stuck":
            raise CertificationError(
                "trim", f"generator {g.text()} admits no relation with a unit"
            )
        if kind == "blowup":
            extras.append((g, b))
    return p1, params, extras


def _verify_split_criterion(L, nu, check_freeness):
    """r parameters at the split center plus the quotient's dimension must
    reach the reduced ring's dimension; after a trim the parameter relations
    must vanish at the split center."""
    nu1, _ = decompose(nu, 1)
    p1 = center_ideal(nu1)
    nil = L.nilradical()
    red_at_p = LocalRing(L.ring, nil, p1, check=False)
    reg = is_regular_local(red_at_p)
    if not reg.regular:
        raise CertificationError(
            "regularity criterion", "reduced ring is not regular at the split center"
        )
    r = reg.embedding_dimension
    quotient = LocalRing(L.ring, p1, L.center, check=False)
    t = quotient.dimension()
    total = LocalRing(L.ring, nil, L.center, check=False).dimension()
    if r + t != total:
        raise CertificationError(
            "regularity criterion",
            f"r + t = {r} + {t} does not reach the dimension {total}",
        )
    if check_freeness:
        gens, rows = cotangent_presentation(
            LocalRing(L.ring, L.defining, p1, check=False)
        )
        idx = _select_basis(L.ring, gens, rows, p1, nu=nu)
        params = [gens[i] for i in idx]
        from .modules import relation_module

        for row in relation_module(params, p1.power(2) + L.defining):
            for entry in row:
                if not p1.contains(entry):
                    raise CertificationError(
                        "freeness",
                        f"parameter relation entry {entry.text()} survives "
                        "at the split center",
                    )
    return r, t


def step2(L, nu, budget=None, steps=None):
    """Make the reduced ring regular at the center.

    Nothing to do when it already is; otherwise blow up along the split
    center's parameters against a unit-coefficient relation, absorbing one
    extra generator per step, then re-verify the dimension criterion and the
    freeness of the parameter presentation.
    """
    if nu.rank < 2:
        raise UnsupportedInstance("splitting needs a valuation of rank at least two")
    budget = budget or _Budget(32)
    steps = [] if steps is None else steps
    if is_regular_local(L.reduced()).regular:
        _verify_split_criterion(L, nu, check_freeness=False)
        return L, nu, steps
    for _ in range(32):
        p1, params, extras = _trim_probe(L, nu)
        if not extras:
            break
        g, b = extras[0]
        B = local_blowup(L, b, params, nu=nu)
        L, nu = _apply(
            L, nu, B, "trim",
            {"absorbed": g.text(), "extras_left": len(extras) - 1}, budget, steps,
        )
        left = len(_trim_probe(L, nu)[2])
        if left >= len(extras):
            raise CertificationError("trim", "blowup did not absorb a generator")
    else:
        raise CertificationError("trim", "extras did not stabilize")
    _verify_split_criterion(L, nu, check_freeness=True)
    reg = is_regular_local(L.reduced())
    if not reg.regular:
        raise CertificationError(
            "regularity criterion", "reduced ring is still not regular"
        )
    return L, nu, steps


def _piece_probe(L, nu, n):
    """Local basis of the n-th graded piece at the split center and extras."""
    nu1, _ = decompose(nu, 1)
    p1 = center_ideal(nu1)
    gens, rows = graded_piece(L, n)
    idx = _select_basis(L.ring, gens, rows, p1, nu=nu)
    basis = [gens[i] for i in idx]
    modulus = L.nilradical().power(n + 1) + L.defining
    extras = []
    for j, g in enumerate(gens):
        if j in idx:
            continue
        kind, b = _absorption(L, p1, basis, modulus, g)
        if kind == "stuck":
            raise CertificationError(
                "normal flatness",
                f"piece generator {g.text()} admits no relation with a unit",
            )
        if kind == "blowup":
            extras.append((g, b))
    return p1, basis, extras


def step3(L, nu, budget=None, steps=None):
    """Make every nilpotent graded piece free at the center.

    The pieces must already be free at the split center; a piece that fails
    at the center is repaired by blowing up its local basis against a unit
    relation, one absorbed generator per blowup, with the local rank checked
    stable across each step.
    """
    if nu.rank < 2:
        raise UnsupportedInstance("splitting needs a valuation of rank at least two")
    budget = budget or _Budget(32)
    steps = [] if steps is None else steps
    for _ in range(32):
        nu1, _ = decompose(nu, 1)
        p1 = center_ideal(nu1)
        length = nilpotent_length(L)
        for n in range(1, length):
            fr = is_free_at(L, n, prime=p1)
            if not fr.free:
                raise CertificationError(
                    "hypothesis",
                    f"graded piece {n} is not free at the split center",
                )
        bad = None
        for n in range(1, length):
            if not is_free_at(L, n).free:
                bad = n
                break
        if bad is None:
            return L, nu, steps
        _, basis, extras = _piece_probe(L, nu, bad)
        if not extras:
            raise CertificationError(
                "normal flatness",
                f"piece {bad} is not free at the center yet nothing absorbs",
            )
        rank_before = len(basis)
        g, b = extras[0]
        B = local_blowup(L, b, basis, nu=nu)
        L, nu = _apply(
            L, nu, B, "normal-flat",
            {"piece": bad, "absorbed": g.text(), "extras_left": len(extras) - 1},
            budget, steps,
        )
        if nilpotent_length(L) > bad:
            _, basis_after, extras_after = _piece_probe(L, nu, bad)
            if len(basis_after) != rank_before:
                raise CertificationError(
                    "normal flatness", "local rank moved across the blowup"
                )
            if extras_after and len(extras_after) >= len(extras):
                raise CertificationError(
                    "normal flatness", "blowup did not absorb a generator"
                )
    raise CertificationError("normal flatness", "pieces did not stabilize")


def toric_uniformizer(L, nu, cap=16):
    """Rank one oracle for zero, monomial, and weight homogeneous binomial
    prime presentations: Euclidean descent on variable values.

    Repeatedly divides the positive variable of least value into the next
    one until the reduced chart is regular and normally flat.
    """
    if nu.rank != 1:
        raise UnsupportedInstance("the descent oracle needs a rank one valuation")
    blowups = []
    for _ in range(cap):
        if is_regular_local(L.reduced()).regular and is_normally_flat(L).flat:
            return blowups
        gb = L.defining.canonical_gb()
        monomial = all(len(g.terms) == 1 for g in gb)
        if gb and not monomial:
            if any(len(g.terms) > 2 for g in gb):
                raise UnsupportedInstance(
                    "descent handles zero, monomial, or binomial presentations"
                )
            for g in gb:
                if len({nu.weight_of_exps(e) for e in g.terms}) != 1:
                    raise UnsupportedInstance(
                        "binomial presentation is not weight homogeneous"
                    )
            if not is_prime(L.defining).is_prime:
                raise UnsupportedInstance("binomial presentation is not prime")
        ring = L.ring
        finite = []
        for i, nm in enumerate(ring.names):
            v = nu.value_of(ring.var(nm))
            if not v.is_infinite and v.is_positive:
                finite.append((v, i, nm))
        finite.sort(key=lambda c: (c[0], c[1]))
        if not finite:
            raise UnsupportedInstance("no variable of positive finite value to divide")
        b = ring.var(finite[0][2])
        if len(finite) >= 2:
            a = ring.var(finite[1][2])
        else:
            infinite = [
                nm for nm in ring.names
                if nu.value_of(ring.var(nm)).is_infinite
                and L.center.contains(ring.var(nm))
            ]
            if not infinite:
                raise UnsupportedInstance("no second variable for the descent pair")
            a = ring.var(infinite[0])
        B = local_blowup(L, b, [a], nu=nu)
        nu = transport_through_blowup(nu, B)
        certify(nu, B.chart.defining, B.chart.center)
        blowups.append(B)
        L = B.chart
    raise UnsupportedInstance(f"descent did not terminate within {cap} blowups")


def _lift_loops(L, nu, oracle, budget, steps):
    for source in ("localization", "quotient"):
        for _ in range(32):
            nu1, nu2 = decompose(nu, 1)
            p1 = center_ideal(nu1)
            if source == "localization":
                sub_ring = LocalRing(L.ring, L.defining, p1)
                sub_nu = nu1
            else:
                sub_ring = LocalRing(L.ring, p1, L.center)
                sub_nu = nu2
            sub_steps = []
            _reduce(sub_ring, sub_nu, oracle, budget.clone(), sub_steps)
            if not sub_steps:
                break
            B0 = sub_steps[0].blowup
            if source == "localization":
                B = lift_from_localization(L, nu, 1, B0.b, list(B0.a_list))
            else:
                B = lift_from_quotient(L, nu, p1, B0.b, list(B0.a_list))
            L, nu = _apply(
                L, nu, B, "regularize", {"lifted_from": source}, budget, steps
            )
        else:
            raise CertificationError(
                "regularize", f"{source} lifting did not stabilize"
            )
    return L, nu


def _reduce(L, nu, oracle, budget, steps):
    certify(nu, L.defining, L.center)
    L, nu, _ = step1(L, nu, budget, steps)
    if nu.rank == 1:
        fn = oracle or toric_uniformizer
        for B in fn(L, nu):
            if B.source != L:
                raise IsomorphismCheckFailed(
                    "oracle blowup does not start on the current chart"
                )
            L, nu = _apply(L, nu, B, "oracle", {}, budget, steps)
    else:
        L, nu = _lift_loops(L, nu, oracle, budget, steps)
        L, nu, _ = step2(L, nu, budget, steps)
        L, nu, _ = step3(L, nu, budget, steps)
    reg = is_regular_local(L.reduced())
    flat = is_normally_flat(L)
    if not (reg.regular and flat.flat):
        raise CertificationError(
            "final verification",
            f"regular={reg.regular}, normally_flat={flat.flat}",
        )
    return L, nu


def run_reduction(L, nu, oracle=None, budget=32):
    """Drive the full reduction; never raises except for isomorphism failures.

    Returns a ReductionTrace whose verdict is Uniformized, Unsupported (with
    the refusing reason), or BudgetExceeded.
    """
    steps = []
    pool = _Budget(budget)
    try:
        L2, nu2 = _reduce(L, nu, oracle, pool, steps)
        return ReductionTrace(steps, UNIFORMIZED, "", L2, nu2)
    except _BudgetExhausted:
        cur = steps[-1].blowup.chart if steps else L
        return ReductionTrace(
            steps, BUDGET_EXCEEDED, f"more than {budget} blowups", cur, nu
        )
    except IsomorphismCheckFailed:
        raise
    except LuError as e:
        cur = steps[-1].blowup.chart if steps else L
        return ReductionTrace(steps, UNSUPPORTED, str(e), cur, nu)
