"""Experiment pipelines built on the core layers.

Four entry points:

* ``analyze``: one ideal, one order -> full degeneration report (basis,
  initial ideal, complex invariants, obstruction certificates, conjecture
  verdicts).
* ``scan_orders``: the same ideal over every permutation order of a family,
  deduplicated by initial ideal.
* ``lift_search``: enumerate or sample homogeneous lifts of a non-face ideal
  and test each valid one for singularities at the coordinate points.
* ``count_points``: exact point counts of a plane curve over GF(p), with the
  trace and supersingularity flags when the curve is a smooth cubic.

Everything is deterministic: sampling is seeded, parallel runs pre-generate
their work lists so worker count never changes the answer.
"""

from __future__ import annotations

import hashlib
import itertools
import multiprocessing
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from functools import partial
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from .complexes import (
    CohomologyProfile,
    ComplexPropertyReport,
    SimplicialComplex,
    complex_from_squarefree_ideal,
    property_report,
    reduced_cohomology,
    to_ideal,
)
from .errors import DegreeCapExceeded, ScanBoundExceeded
from .fields import Field, GFElement, QQ, is_prime
from .groebner import GroebnerBasis, MonomialIdeal, buchberger, initial_ideal
from .ring import Monomial, MonomialOrder, Polynomial, RingContext
from .singularity import (
    JacobianAnalysis,
    ObstructionVerdict,
    ProjPoint,
    SupportViolation,
    ci_obstruction,
    jacobian_rank_at,
    leafless_obstruction,
    lex_obstruction,
    support_exclusions,
)

SCAN_VARIABLE_BOUND = 8
DEFAULT_DEGREE_CAP = 40
DEFAULT_BUDGET = 200
DEFAULT_POOL_QQ = (-2, -1, 1, 2)


def ideal_digest(ctx: RingContext, gens) -> str:
    """Order-independent sha256 of ring plus generators.

    Terms are re-sorted by raw exponent vector so the digest identifies the
    ideal presentation regardless of which monomial order the polynomials
    happen to carry.
    """
    entries = []
    for g in gens:
        terms = sorted((m.exps, ctx.field.render_scalar(c)) for m, c in g.terms)
        entries.append(repr(terms))
    entries.sort()
    blob = ctx.render() + "||" + "|".join(entries)
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()


def _cohomology_dict(coh: CohomologyProfile) -> dict:
    return {
        "field": coh.field.render(),
        "dims": list(coh.dims),
        "reduced_euler_characteristic": coh.reduced_euler,
        "acyclic": coh.is_acyclic(),
    }


def _conjecture_summary(field, props: ComplexPropertyReport, points) -> dict:
    """Three-valued verdicts for the Cohen-Macaulay conjectures.

    ``consistent`` means the conclusion holds, or some hypothesis is provably
    false (a coordinate point of the scheme is singular, or the complex fails
    strong connectedness / Buchsbaumness, which smooth equidimensional
    degenerations cannot do). ``violation_candidate`` means the conclusion
    fails, nothing refutes the hypotheses, and at least one coordinate point
    lies on the scheme to witness the probe; ``hypothesis_unverified`` means
    the conclusion fails but no coordinate point even lies on the scheme, so
    the probe says nothing.
    """
    refuted = []
    if not props.strongly_connected:
        refuted.append("not_strongly_connected")
    if not props.buchsbaum:
        refuted.append("not_buchsbaum")
    for a in points:
        if a.verdict == "singular":
            refuted.append(f"singular_coordinate_point {a.point.render(field)}")
    probe = any(a.on_scheme for a in points)

    def verdict(conclusion: bool) -> str:
        if conclusion or refuted:
            return "consistent"
        return "violation_candidate" if probe else "hypothesis_unverified"

    cm = props.cohen_macaulay
    return {
        "cm": verdict(cm),
        "cm_negative_a": verdict(cm and props.negative_a_invariant_given_cm),
        "cm_acyclic": verdict(cm and props.acyclic),
        "hypothesis_refuted_by": refuted,
    }


@dataclass(frozen=True)
class DegenerationReport:
    """Everything ``analyze`` learns about one (ideal, order) pair.

    The combinatorial fields are ``None`` when the initial ideal is not
    square-free (or the ideal is the unit ideal): there is no complex to
    analyze, so downstream fields are simply absent from ``as_dict``.
    """

    digest: str
    order: MonomialOrder
    generators: Tuple[Polynomial, ...]
    basis: GroebnerBasis
    initial: MonomialIdeal
    squarefree: bool
    delta: Optional[SimplicialComplex]
    properties: Optional[ComplexPropertyReport]
    cohomology: Optional[CohomologyProfile]
    coordinate_points: Tuple[JacobianAnalysis, ...]
    obstructions: Tuple[ObstructionVerdict, ...]
    conjectures: Optional[Dict[str, object]]
    producing_orders: Tuple[str, ...]

    @property
    def ctx(self) -> RingContext:
        return self.basis.ctx

    def necessary_conditions(self) -> Optional[dict]:
        """The combinatorial conditions a Groebner smoothing forces."""
        if self.properties is None:
            return None
        return {
            "strongly_connected": self.properties.strongly_connected,
            "normal": self.properties.normal,
            "buchsbaum": self.properties.buchsbaum,
        }

    def as_dict(self) -> dict:
        ctx = self.ctx
        out = {
            "ideal_digest": self.digest,
            "ring": ctx.render(),
            "order": self.order.render(),
            "generators": [g.render() for g in self.generators],
            "reduced_groebner_basis": list(self.basis.render_polys()),
            "initial_ideal": list(self.initial.render_gens()),
            "squarefree": self.squarefree,
            "producing_orders": list(self.producing_orders),
        }
        if not self.squarefree:
            return out
        out["facets"] = self.delta.render()
        out["complex"] = self.properties.as_dict()
        out["cohomology"] = _cohomology_dict(self.cohomology)
        out["necessary_conditions"] = self.necessary_conditions()
        out["coordinate_points"] = [a.as_dict(ctx.field) for a in self.coordinate_points]
        out["obstructions"] = [o.as_dict() for o in self.obstructions]
        out["conjectures"] = self.conjectures
        return out


def analyze(gens, order: MonomialOrder, *, degree_cap: int = DEFAULT_DEGREE_CAP) -> DegenerationReport:
    """Degenerate a homogeneous ideal along one order and report everything."""
    ctx = order.ctx
    polys = [g.with_order(order) for g in gens]
    for g in polys:
        homogeneous, _ = g.is_homogeneous()
        if not homogeneous:
            raise ValueError(f"inhomogeneous generator: {g.render()}")
    digest = ideal_digest(ctx, polys)
    B = buchberger(polys, order, degree_cap=degree_cap)
    M = initial_ideal(B)
    squarefree = B.is_proper() and M.is_squarefree()
    if not squarefree:
        return DegenerationReport(
            digest, order, tuple(polys), B, M, False,
            None, None, None, (), (), None, (order.render(),),
        )

    if all(M.contains(Monomial.variable(i, ctx.n)) for i in range(ctx.n)):
        raise ValueError("initial ideal contains every variable: the projective scheme is empty")
    delta = complex_from_squarefree_ideal(M)
    props = property_report(delta, ctx.field)
    coh = reduced_cohomology(delta, ctx.field)

    standard = all(g == 1 for g in ctx.grading)
    points: Tuple[JacobianAnalysis, ...] = ()
    obstructions: List[ObstructionVerdict] = []
    if standard and B.polys:
        codim = (ctx.n - 1) - delta.dim
        points = tuple(
            jacobian_rank_at(B, ProjPoint.coordinate(ctx.field, ctx.n, i), codim)
            for i in range(ctx.n)
        )
        obstructions.append(ci_obstruction(B))
        if delta.dim == 1 and not delta.ghost_vertices():
            obstructions.append(leafless_obstruction(B, delta))
    obstructions.append(lex_obstruction(delta))
    conjectures = _conjecture_summary(ctx.field, props, points)

    return DegenerationReport(
        digest, order, tuple(polys), B, M, True,
        delta, props, coh, points, tuple(obstructions), conjectures,
        (order.render(),),
    )


def _scan_task(gens, degree_cap, task):
    kind, perm = task
    order = MonomialOrder(kind, gens[0].ctx, perm=perm)
    B = buchberger([g.with_order(order) for g in gens], order, degree_cap=degree_cap)
    return tuple(m.exps for m in initial_ideal(B).gens)


_FAMILIES = {
    "lex": ("lex",),
    "degrevlex": ("degrevlex",),
    "both": ("lex", "degrevlex"),
}


def scan_orders(
    gens,
    *,
    family: str = "both",
    bound: int = SCAN_VARIABLE_BOUND,
    workers: int = 1,
    degree_cap: int = DEFAULT_DEGREE_CAP,
) -> List[DegenerationReport]:
    """Walk every permutation order of the family, dedupe by initial ideal.

    Each distinct initial ideal yields one full report whose
    ``producing_orders`` lists every order that realized it, in scan order.
    The scan refuses to run past ``bound`` variables (factorial blowup).
    """
    gens = list(gens)
    if not gens:
        raise ValueError("order scan needs at least one generator")
    ctx = gens[0].ctx
    if ctx.n > bound:
        raise ScanBoundExceeded(
            f"scanning {ctx.n} variables means {ctx.n}! permutations; the bound is {bound}"
        )
    kinds = _FAMILIES.get(family)
    if kinds is None:
        raise ValueError(f"unknown order family {family!r} (want lex, degrevlex, or both)")

    tasks = [(kind, perm) for kind in kinds for perm in itertools.permutations(range(ctx.n))]
    run = partial(_scan_task, gens, degree_cap)
    if workers > 1:
        chunk = max(1, len(tasks) // (workers * 8))
        with ProcessPoolExecutor(
            max_workers=workers, mp_context=multiprocessing.get_context("fork")
        ) as pool:
            keys = list(pool.map(run, tasks, chunksize=chunk))
    else:
        keys = [run(t) for t in tasks]

    first_order: Dict[tuple, MonomialOrder] = {}
    producers: Dict[tuple, List[str]] = {}
    ordered_keys: List[tuple] = []
    for (kind, perm), key in zip(tasks, keys):
        order = MonomialOrder(kind, ctx, perm=perm)
        if key not in first_order:
            first_order[key] = order
            producers[key] = []
            ordered_keys.append(key)
        producers[key].append(order.render())

    reports = []
    for key in ordered_keys:
        report = analyze(gens, first_order[key], degree_cap=degree_cap)
        reports.append(replace(report, producing_orders=tuple(producers[key])))
    return reports


def _monomials_of_degree(n: int, d: int):
    for combo in itertools.combinations_with_replacement(range(n), d):
        exps = [0] * n
        for i in combo:
            exps[i] += 1
        yield Monomial(tuple(exps))


def _build_lift(ctx, order, targets, slots, coeffs, assignment):
    zero = ctx.field.zero
    terms = {ti: [(t, ctx.field.one)] for ti, t in enumerate(targets)}
    for (ti, m), choice in zip(slots, assignment):
        c = coeffs[choice]
        if c != zero:
            terms[ti].append((m, c))
    return [Polynomial(ctx, order, terms[ti]) for ti in range(len(targets))]


def _lift_batch(ctx, order, targets, slots, coeffs, degree_cap, assignments):
    flags = []
    for assignment in assignments:
        polys = _build_lift(ctx, order, targets, slots, coeffs, assignment)
        try:
            B = buchberger(polys, order, degree_cap=degree_cap)
        except DegreeCapExceeded:
            flags.append(False)
            continue
        flags.append(set(B.polys) == set(polys))
    return flags


@dataclass(frozen=True)
class ValidLift:
    """One lift whose reduced basis is exactly the candidate set."""

    polys: Tuple[Polynomial, ...]
    coordinate_points: Tuple[JacobianAnalysis, ...]
    support_violations: Tuple[SupportViolation, ...]

    def singular_at_every_scheme_point(self) -> bool:
        on = [a for a in self.coordinate_points if a.on_scheme]
        return bool(on) and all(a.verdict == "singular" for a in on)

    def as_dict(self, field) -> dict:
        return {
            "generators": [g.render() for g in self.polys],
            "coordinate_points": [a.as_dict(field) for a in self.coordinate_points],
            "singular_at_every_scheme_point": self.singular_at_every_scheme_point(),
            "support_violations": [v.as_dict() for v in self.support_violations],
        }


@dataclass(frozen=True)
class LiftSearchResult:
    delta: SimplicialComplex
    order: MonomialOrder
    pool: Tuple
    budget: int
    seed: int
    exhaustive: bool
    space: int
    tried: int
    targets: Tuple[Monomial, ...]
    empty_tail_targets: Tuple[Monomial, ...]
    lifts: Tuple[ValidLift, ...]

    def top_variable(self) -> int:
        return self.order.greatest_variable()

    def lifts_singular_at_top_point(self) -> int:
        top = self.top_variable()
        return sum(
            1
            for lift in self.lifts
            if lift.coordinate_points and lift.coordinate_points[top].verdict == "singular"
        )

    def as_dict(self) -> dict:
        ctx = self.order.ctx
        field = ctx.field
        top = self.top_variable()
        return {
            "facets": self.delta.render(),
            "ring": ctx.render(),
            "order": self.order.render(),
            "pool": [field.render_scalar(c) for c in self.pool],
            "budget": self.budget,
            "seed": self.seed,
            "exhaustive": self.exhaustive,
            "candidate_space": self.space,
            "candidates_tried": self.tried,
            "targets": [ctx.render_monomial(m) for m in self.targets],
            "empty_tail_targets": [ctx.render_monomial(m) for m in self.empty_tail_targets],
            "top_variable": ctx.names[top],
            "valid_lift_count": len(self.lifts),
            "lifts_singular_at_top_point": self.lifts_singular_at_top_point(),
            "valid_lifts": [lift.as_dict(field) for lift in self.lifts],
        }


def lift_search(
    delta: SimplicialComplex,
    order: MonomialOrder,
    *,
    pool=None,
    budget: int = DEFAULT_BUDGET,
    seed: int = 0,
    workers: int = 1,
    degree_cap: int = DEFAULT_DEGREE_CAP,
) -> LiftSearchResult:
    """Search homogeneous lifts of the non-face ideal of ``delta``.

    Every minimal non-face monomial may pick up tail terms: same degree,
    strictly smaller in the order, outside the non-face ideal. Coefficients
    range over ``pool`` ({-2,-1,1,2} over QQ, the whole field over GF(p); 0
    always means "drop the tail"). The whole space is enumerated when its
    size fits the budget, otherwise ``budget`` seeded-random draws. A lift is
    valid when Buchberger returns the candidate set itself, i.e. the chosen
    tails already form a reduced basis with the prescribed initial ideal.
    Valid lifts get Jacobian verdicts at all coordinate points, plus the
    tail-support exclusion checks in the one-dimensional setting.
    """
    ctx = order.ctx
    if ctx.n != delta.n:
        raise ValueError("complex and ring have different vertex counts")
    if any(g != 1 for g in ctx.grading):
        raise ValueError("lift search requires the standard grading")
    field = ctx.field

    if pool is None:
        p = field.characteristic()
        pool = DEFAULT_POOL_QQ if p == 0 else tuple(range(p))
    coeffs = []
    for c in pool:
        v = field.of(c)
        if v not in coeffs:
            coeffs.append(v)
    if not coeffs:
        raise ValueError("empty coefficient pool")

    M = to_ideal(delta, ctx)
    targets = list(M.gens)
    tails_of: List[List[Monomial]] = []
    for t in targets:
        d = t.degree()
        tails = [
            m
            for m in _monomials_of_degree(ctx.n, d)
            if order.compare(m, t) < 0 and not M.contains(m)
        ]
        tails.sort(key=order.sort_key, reverse=True)
        tails_of.append(tails)
    empty = tuple(t for t, tails in zip(targets, tails_of) if not tails)
    slots = [(ti, m) for ti, tails in enumerate(tails_of) for m in tails]

    space = len(coeffs) ** len(slots)
    exhaustive = space <= budget
    if exhaustive:
        assignments = list(itertools.product(range(len(coeffs)), repeat=len(slots)))
    else:
        rng = random.Random(seed)
        assignments = [
            tuple(rng.randrange(len(coeffs)) for _ in slots) for _ in range(budget)
        ]

    run = partial(_lift_batch, ctx, order, targets, slots, coeffs, degree_cap)
    if workers > 1 and assignments:
        step = max(1, (len(assignments) + workers * 4 - 1) // (workers * 4))
        batches = [assignments[i : i + step] for i in range(0, len(assignments), step)]
        with ProcessPoolExecutor(
            max_workers=workers, mp_context=multiprocessing.get_context("fork")
        ) as pool_exec:
            flags = [f for batch_flags in pool_exec.map(run, batches) for f in batch_flags]
    else:
        flags = run(assignments)

    seen = set()
    lifts = []
    codim = (ctx.n - 1) - delta.dim
    check_supports = delta.dim == 1 and not delta.ghost_vertices()
    for assignment, ok in zip(assignments, flags):
        if not ok or assignment in seen:
            continue
        seen.add(assignment)
        polys = _build_lift(ctx, order, targets, slots, coeffs, assignment)
        points = tuple(
            jacobian_rank_at(polys, ProjPoint.coordinate(field, ctx.n, i), codim)
            for i in range(ctx.n)
        ) if polys else ()
        violations: Tuple[SupportViolation, ...] = ()
        if check_supports and polys:
            B = buchberger(polys, order, degree_cap=degree_cap)
            violations = tuple(support_exclusions(B, delta))
        lifts.append(ValidLift(tuple(polys), points, violations))

    return LiftSearchResult(
        delta, order, tuple(coeffs), budget, seed, exhaustive, space,
        len(assignments), tuple(targets), empty, tuple(lifts),
    )


@dataclass(frozen=True)
class PointCountResult:
    curve: str
    prime: int
    count: int
    trace: int
    smooth: bool
    singular_points: Tuple[str, ...]
    supersingular: Optional[bool]
    hasse_ok: Optional[bool]

    def as_dict(self) -> dict:
        return {
            "curve": self.curve,
            "prime": self.prime,
            "projective_points": self.count,
            "trace": self.trace,
            "smooth": self.smooth,
            "singular_points": list(self.singular_points),
            "supersingular": self.supersingular,
            "hasse_bound_ok": self.hasse_ok,
        }


def _integer_terms_mod_p(f: Polynomial, p: int):
    """Clear denominators to a primitive integer form, then reduce mod p."""
    field = f.ctx.field
    char = field.characteristic()
    if char == p:
        ints = [(m.exps, c.v) for m, c in f.terms]
    elif char == 0:
        den = 1
        for _, c in f.terms:
            den = den * c.denominator // gcd(den, c.denominator)
        if den % p == 0:
            bad = next(c for _, c in f.terms if c.denominator % p == 0)
            raise ValueError(f"bad prime {p}: denominator of coefficient {bad} vanishes")
        ints = [(m.exps, c.numerator * (den // c.denominator)) for m, c in f.terms]
        content = 0
        for _, c in ints:
            content = gcd(content, c)
        ints = [(e, c // content) for e, c in ints]
    else:
        raise ValueError(f"curve lives over GF({char}), cannot reduce mod {p}")
    return [(e, c % p) for e, c in ints if c % p]


def count_points(f: Polynomial, p: int) -> PointCountResult:
    """Count projective points of a plane curve over GF(p), exactly.

    Works for any nonzero homogeneous ternary form; the trace ``p + 1 - N``
    is always reported, while the supersingularity and Hasse-bound fields are
    filled only when the reduction is a smooth cubic (the elliptic case).
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    ctx = f.ctx
    if ctx.n != 3:
        raise ValueError("point counting is for plane curves in three variables")
    if any(g != 1 for g in ctx.grading):
        raise ValueError("point counting requires the standard grading")
    homogeneous, degree = f.is_homogeneous()
    if not homogeneous or f.is_zero():
        raise ValueError("point counting needs a nonzero homogeneous form")

    terms = _integer_terms_mod_p(f, p)
    if not terms:
        raise ValueError(f"bad prime {p}: the form vanishes identically mod {p}")
    partials = []
    for j in range(3):
        rows = []
        for e, c in terms:
            if e[j]:
                low = list(e)
                low[j] -= 1
                rows.append((tuple(low), c * e[j] % p))
        partials.append([(e, c) for e, c in rows if c])

    def value(terms_, x, y, z):
        total = 0
        for (a, b, c_), co in terms_:
            total += co * pow(x, a, p) * pow(y, b, p) * pow(z, c_, p)
        return total % p

    points = []
    for y in range(p):
        for z in range(p):
            points.append((1, y, z))
    for z in range(p):
        points.append((0, 1, z))
    points.append((0, 0, 1))

    on_curve = [pt for pt in points if value(terms, *pt) == 0]
    singular = [
        pt
        for pt in on_curve
        if all(value(partials[j], *pt) == 0 for j in range(3))
    ]
    count = len(on_curve)
    trace = p + 1 - count
    smooth = not singular
    elliptic = smooth and degree == 3
    supersingular = (trace % p == 0) if elliptic else None
    hasse_ok = (trace * trace <= 4 * p) if elliptic else None

    def render_pt(pt):
        return "[" + ":".join(str(c) for c in pt) + "]"

    return PointCountResult(
        f.render(), p, count, trace, smooth,
        tuple(render_pt(pt) for pt in singular), supersingular, hasse_ok,
    )


@dataclass(frozen=True)
class ComplexReport:
    """Standalone combinatorial analysis of one complex over one field."""

    delta: SimplicialComplex
    field: Field
    properties: ComplexPropertyReport
    cohomology: CohomologyProfile
    lex: ObstructionVerdict

    def as_dict(self) -> dict:
        return {
            "facets": self.delta.render(),
            "n": self.delta.n,
            "dim": self.delta.dim,
            "f_vector": list(self.delta.f_vector()),
            "properties": self.properties.as_dict(),
            "cohomology": _cohomology_dict(self.cohomology),
            "lex_obstruction": self.lex.as_dict(),
        }


def analyze_complex(delta: SimplicialComplex, field: Field = QQ) -> ComplexReport:
    return ComplexReport(
        delta,
        field,
        property_report(delta, field),
        reduced_cohomology(delta, field),
        lex_obstruction(delta),
    )
