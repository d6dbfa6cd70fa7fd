"""Buchberger, reduced bases, mod-p reduction, regular elements."""

import pickle
import random
from fractions import Fraction

import pytest

from grodeg import (
    ContextMismatchError,
    DegreeCapExceeded,
    GroebnerBasis,
    Monomial,
    MonomialIdeal,
    MonomialOrder,
    Polynomial,
    PrimeField,
    buchberger,
    cone_point_certificate,
    ideal_membership,
    initial_ideal,
    is_variable_regular,
    normal_form,
    parse_polynomial,
    reduce_mod_p,
    s_polynomial,
    standard_context,
    to_ideal,
)

from conftest import (
    ctx_n,
    ctx_xyz,
    random_complex,
    random_path_reduce,
    random_poly,
    ref_initial_monomials,
)


def P(text, ctx, order):
    return parse_polynomial(text, ctx, order)


@pytest.fixture
def twisted(request):
    """The lex basis of (x^2 - y*z, x*y - z^2), a small but non-trivial run."""
    ctx = ctx_xyz()
    lex = MonomialOrder.lex(ctx)
    gens = [P("x^2 - y*z", ctx, lex), P("x*y - z^2", ctx, lex)]
    return ctx, lex, gens, buchberger(gens, lex)


@pytest.fixture
def minors():
    ctx = ctx_n(6)
    drl = MonomialOrder.degrevlex(ctx)
    gens = [
        P("x1*x5 - x2*x4", ctx, drl),
        P("x1*x6 - x3*x4", ctx, drl),
        P("x2*x6 - x3*x5", ctx, drl),
    ]
    return ctx, drl, gens, buchberger(gens, drl)


class TestNormalForm:
    def test_frozen(self):
        ctx = ctx_xyz()
        lex = MonomialOrder.lex(ctx)
        f = P("x^2*y", ctx, lex)
        assert normal_form(f, [P("x*y - z", ctx, lex)]) == P("x*z", ctx, lex)
        assert normal_form(P("x*y - z", ctx, lex), [P("x*y - z", ctx, lex)]).is_zero()
        assert normal_form(P("z^5 + 1", ctx, lex), [P("x*y - z", ctx, lex)]) == P(
            "z^5 + 1", ctx, lex
        )

    def test_reduces_tail_terms(self):
        ctx = ctx_xyz()
        lex = MonomialOrder.lex(ctx)
        # lead z^3 is irreducible but the tail term x*y is not
        f = P("z^3 + x*y", ctx, lex)
        assert normal_form(f, [P("x*y - z", ctx, lex)]) == P("z^3 + z", ctx, lex)

    def test_divisor_context_mismatch(self):
        ctx = ctx_xyz()
        lex = MonomialOrder.lex(ctx)
        other = ctx_n(3)
        with pytest.raises(ContextMismatchError, match="different ring context"):
            normal_form(P("x", ctx, lex), [P("x1", other, MonomialOrder.lex(other))])

    def test_remainder_is_irreducible(self):
        rng = random.Random(37)
        ctx = ctx_xyz()
        drl = MonomialOrder.degrevlex(ctx)
        for _ in range(60):
            divisors = [random_poly(rng, ctx, drl) for _ in range(2)]
            divisors = [d for d in divisors if not d.is_zero()]
            f = random_poly(rng, ctx, drl, 5, 5)
            r = normal_form(f, divisors)
            for m, _ in r.terms:
                assert not any(d.leading_monomial().divides(m) for d in divisors)


class TestSPolynomial:
    def test_frozen_minor_pair(self, minors):
        ctx, drl, gens, _ = minors
        s = s_polynomial(gens[0], gens[1])
        assert s.render() == "-x1*x3*x5 + x1*x2*x6"
        assert normal_form(s, [gens[2]]).is_zero()

    def test_self_pair_vanishes(self, twisted):
        ctx, lex, gens, _ = twisted
        assert s_polynomial(gens[0], gens[0]).is_zero()

    def test_coprime_leads_reduce_to_zero(self):
        ctx = ctx_xyz()
        lex = MonomialOrder.lex(ctx)
        f, g = P("x*y - 1", ctx, lex), P("z^2 - 1", ctx, lex)
        s = s_polynomial(f, g)
        assert normal_form(s, [f, g]).is_zero()

    def test_ignores_input_scaling(self, twisted):
        ctx, lex, gens, _ = twisted
        assert s_polynomial(3 * gens[0], gens[1] * Fraction(-1, 2)) == s_polynomial(
            gens[0], gens[1]
        )

    def test_context_mismatch(self):
        ctx, other = ctx_xyz(), ctx_n(3)
        with pytest.raises(ContextMismatchError):
            s_polynomial(
                P("x", ctx, MonomialOrder.lex(ctx)),
                P("x1", other, MonomialOrder.lex(other)),
            )


class TestBuchbergerFrozen:
    def test_principal_ideal(self):
        ctx = ctx_xyz()
        lex = MonomialOrder.lex(ctx)
        B = buchberger([P("x*y*z + y^3 + z^3", ctx, lex)], lex)
        assert B.render_polys() == ("x*y*z + y^3 + z^3",)

    def test_twisted_cubic_lex(self, twisted):
        ctx, lex, gens, B = twisted
        assert B.render_polys() == (
            "x^2 - y*z",
            "x*y - z^2",
            "x*z^2 - y^2*z",
            "y^3*z - z^4",
        )

    def test_minors_already_a_basis(self, minors):
        ctx, drl, gens, B = minors
        assert set(B.polys) == set(g.monic() for g in gens)
        assert initial_ideal(B).render_gens() == ("x3*x5", "x3*x4", "x2*x4")

    def test_linear_pair(self):
        ctx = standard_context(("x", "y"))
        lex = MonomialOrder.lex(ctx)
        B = buchberger([P("x", ctx, lex), P("x + y", ctx, lex)], lex)
        assert B.render_polys() == ("x", "y")

    def test_zero_ideal(self):
        ctx = ctx_xyz()
        lex = MonomialOrder.lex(ctx)
        for gens in ([], [Polynomial.zero(ctx, lex)]):
            B = buchberger(gens, lex)
            assert B.is_zero_ideal()
            assert B.is_proper()
            assert B.polys == ()
        assert initial_ideal(buchberger([], lex)).is_zero()

    def test_unit_ideal(self):
        ctx = ctx_xyz()
        lex = MonomialOrder.lex(ctx)
        B = buchberger([P("x + 1", ctx, lex), P("x", ctx, lex)], lex)
        assert not B.is_proper()
        assert B.render_polys() == ("1",)

    def test_initial_ideal_frozen(self, twisted):
        ctx, lex, gens, B = twisted
        M = initial_ideal(B)
        assert M.render_gens() == ("x*y", "x^2", "x*z^2", "y^3*z")
        assert not M.is_squarefree()

    def test_membership_frozen(self, twisted):
        ctx, lex, gens, B = twisted
        assert ideal_membership(P("y^3*z - z^4", ctx, lex), B)
        assert ideal_membership(
            P("(x^2 - y*z)*(x + y) - (x*y - z^2)*z", ctx, lex), B
        )
        assert not ideal_membership(P("x", ctx, lex), B)
        assert not ideal_membership(P("1", ctx, lex), B)


class TestBuchbergerProperties:
    def test_matches_criterion_free_reference(self):
        rng = random.Random(41)
        ctx = ctx_xyz()
        checked = 0
        for _ in range(40):
            order = rng.choice(
                [MonomialOrder.lex(ctx), MonomialOrder.degrevlex(ctx)]
            )
            gens = [random_poly(rng, ctx, order, 3, 3) for _ in range(2)]
            try:
                B = buchberger(gens, order, degree_cap=12)
            except DegreeCapExceeded:
                continue
            got = sorted(m.exps for m in initial_ideal(B).gens)
            assert got == ref_initial_monomials(gens, order)
            checked += 1
        assert checked >= 25

    def test_output_is_a_groebner_basis(self, twisted, minors):
        for fixture in (twisted, minors):
            _, order, _, B = fixture
            polys = list(B.polys)
            for i in range(len(polys)):
                for j in range(i):
                    s = s_polynomial(polys[i], polys[j])
                    assert normal_form(s, polys).is_zero()

    def test_reduced_basis_shape(self):
        """Monic, pairwise irreducible, sorted descending by leading monomial."""
        rng = random.Random(43)
        ctx = ctx_xyz()
        seen = 0
        for _ in range(30):
            order = rng.choice([MonomialOrder.lex(ctx), MonomialOrder.degrevlex(ctx)])
            gens = [random_poly(rng, ctx, order, 3, 3) for _ in range(2)]
            try:
                B = buchberger(gens, order, degree_cap=12)
            except DegreeCapExceeded:
                continue
            polys = list(B.polys)
            leads = [g.leading_monomial() for g in polys]
            for k, g in enumerate(polys):
                assert g.leading_coefficient() == ctx.field.one
                others = [h for h in polys if h is not g]
                for m, _ in g.terms:
                    assert not any(h.leading_monomial().divides(m) for h in others)
                if k:
                    assert order.compare(leads[k - 1], leads[k]) == 1
            seen += 1
        assert seen >= 20

    def test_canonical_under_presentation_changes(self, twisted):
        ctx, lex, gens, B = twisted
        rng = random.Random(47)
        for _ in range(10):
            shuffled = list(gens)
            rng.shuffle(shuffled)
            scaled = [g * Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 2, 5])) for g in shuffled]
            assert buchberger(scaled, lex).polys == B.polys
        assert buchberger(gens, lex, strategy="fifo").polys == B.polys

    def test_same_ideal_same_basis(self, twisted):
        ctx, lex, gens, B = twisted
        f, g = gens
        assert buchberger([f + g, f - g], lex).polys == B.polys

    def test_confluence_against_random_paths(self, twisted):
        ctx, lex, gens, B = twisted
        rng = random.Random(53)
        for _ in range(80):
            f = random_poly(rng, ctx, lex, 5, 5)
            assert random_path_reduce(rng, f, list(B.polys)) == normal_form(
                f, list(B.polys)
            )

    def test_gf_coefficients(self):
        ctx = ctx_xyz(PrimeField(7))
        lex = MonomialOrder.lex(ctx)
        gens = [P("x^2 - y*z", ctx, lex), P("x*y - z^2", ctx, lex)]
        B = buchberger(gens, lex)
        assert B.render_polys() == (
            "x^2 + 6*y*z",
            "x*y + 6*z^2",
            "x*z^2 + 6*y^2*z",
            "y^3*z + 6*z^4",
        )

    def test_degree_cap(self, twisted):
        ctx, lex, gens, _ = twisted
        with pytest.raises(DegreeCapExceeded):
            buchberger(gens, lex, degree_cap=3)
        # the run must consider one degree-5 S-pair lcm, so 5 is the threshold
        with pytest.raises(DegreeCapExceeded):
            buchberger(gens, lex, degree_cap=4)
        assert buchberger(gens, lex, degree_cap=5).polys == buchberger(gens, lex).polys

    def test_unknown_strategy(self, twisted):
        ctx, lex, gens, _ = twisted
        with pytest.raises(ValueError, match="unknown strategy 'sugar'"):
            buchberger(gens, lex, strategy="sugar")


class TestMonomialIdeal:
    def test_minimalization_and_sorting(self):
        ctx = ctx_xyz()
        M = MonomialIdeal.from_monomials(
            ctx, [Monomial((2, 1, 0)), Monomial((1, 1, 0)), Monomial((0, 0, 3))]
        )
        assert M.render_gens() == ("x*y", "z^3")

    def test_contains(self):
        ctx = ctx_xyz()
        M = MonomialIdeal.from_monomials(ctx, [Monomial((1, 1, 0))])
        assert M.contains(Monomial((2, 1, 1)))
        assert not M.contains(Monomial((1, 0, 5)))

    def test_squarefree_zero_same(self):
        ctx = ctx_xyz()
        sq = MonomialIdeal.from_monomials(ctx, [Monomial((1, 1, 0))])
        assert sq.is_squarefree() and not sq.is_zero()
        nsq = MonomialIdeal.from_monomials(ctx, [Monomial((2, 0, 0))])
        assert not nsq.is_squarefree()
        zero = MonomialIdeal.from_monomials(ctx, [])
        assert zero.is_zero() and zero.is_squarefree()
        assert sq.same_monomials(
            MonomialIdeal.from_monomials(ctx, [Monomial((1, 1, 0)), Monomial((1, 2, 0))])
        )
        assert not sq.same_monomials(nsq)


class TestGroebnerBasisContainer:
    def test_accessors(self, twisted):
        ctx, lex, gens, B = twisted
        assert B.leading_monomials() == tuple(g.leading_monomial() for g in B.polys)
        assert B.normal_form(P("x^2", ctx, lex)) == P("y*z", ctx, lex)
        assert not B.is_zero_ideal()
        assert B.is_proper()

    def test_pickle(self, minors):
        _, _, _, B = minors
        back = pickle.loads(pickle.dumps(B))
        assert back == B
        assert back.render_polys() == B.render_polys()


class TestVariableRegular:
    def test_minors_quotient_is_a_domain(self, minors):
        # every variable is regular mod the minors ideal, but only the two
        # vertices lying in all facets of the degeneration get a certificate
        _, _, _, B = minors
        for i in range(6):
            assert is_variable_regular(B, i)
        assert [cone_point_certificate(B, i) for i in range(6)] == [
            True, False, False, False, False, True,
        ]

    def test_small_monomial_cases(self):
        ctx = standard_context(("x", "y"))
        lex = MonomialOrder.lex(ctx)
        assert not is_variable_regular(buchberger([P("x*y", ctx, lex)], lex), 0)
        assert is_variable_regular(buchberger([P("y", ctx, lex)], lex), 0)
        assert is_variable_regular(buchberger([], lex), 0)

    def test_variable_in_ideal_not_regular(self):
        ctx = standard_context(("x", "y"))
        lex = MonomialOrder.lex(ctx)
        assert not is_variable_regular(buchberger([P("x", ctx, lex)], lex), 0)

    def test_unit_ideal_rejected(self):
        ctx = ctx_xyz()
        lex = MonomialOrder.lex(ctx)
        B = buchberger([P("1", ctx, lex)], lex)
        with pytest.raises(ValueError, match="unit ideal"):
            is_variable_regular(B, 0)

    def test_index_range(self, minors):
        _, _, _, B = minors
        with pytest.raises(ValueError):
            is_variable_regular(B, 6)

    def test_matches_cone_points_on_stanley_reisner_ideals(self):
        """For a face ideal, x_v is regular exactly when v lies in every facet."""
        rng = random.Random(59)
        for _ in range(25):
            n = rng.randint(2, 5)
            delta = random_complex(rng, n)
            ideal = to_ideal(delta)
            ctx = ideal.ctx
            drl = MonomialOrder.degrevlex(ctx)
            gens = [
                Polynomial(ctx, drl, [(m, 1)]) for m in ideal.gens
            ]
            B = buchberger(gens, drl)
            for v in range(1, n + 1):
                expected = all(v in f for f in delta.facets)
                assert is_variable_regular(B, v - 1) == expected, (
                    delta.render(),
                    v,
                )
                assert cone_point_certificate(B, v - 1) == expected


class TestConePointCertificate:
    def test_frozen(self, minors):
        _, _, _, B = minors
        assert cone_point_certificate(B, 0)
        assert cone_point_certificate(B, 5)
        assert not cone_point_certificate(B, 1)

    def test_triangle_has_no_cone_point(self):
        ctx = ctx_xyz()
        lex = MonomialOrder.lex(ctx)
        B = buchberger([P("x*y*z", ctx, lex)], lex)
        for i in range(3):
            assert not cone_point_certificate(B, i)

    def test_zero_ideal_every_variable(self):
        ctx = ctx_xyz()
        B = buchberger([], MonomialOrder.lex(ctx))
        assert all(cone_point_certificate(B, i) for i in range(3))

    def test_requires_squarefree(self, twisted):
        _, _, _, B = twisted
        with pytest.raises(ValueError, match="square-free initial ideal"):
            cone_point_certificate(B, 0)


class TestReduceModP:
    def test_twisted_cubic_good_prime(self, twisted):
        _, _, _, B = twisted
        red = reduce_mod_p(B, 5)
        assert red.prime == 5
        assert red.initial_ideal_stable
        assert [g.render() for g in red.basis_mod_p.polys] == [
            "x^2 + 4*y*z",
            "x*y + 4*z^2",
            "x*z^2 + 4*y^2*z",
            "y^3*z + 4*z^4",
        ]
        assert red.generators == tuple(red.basis_mod_p.polys)

    def test_minors_stable(self, minors):
        _, _, _, B = minors
        assert reduce_mod_p(B, 7).initial_ideal_stable

    def test_bad_prime_from_denominator(self):
        ctx = ctx_xyz()
        lex = MonomialOrder.lex(ctx)
        B = buchberger([P("x^2 + y^2/7", ctx, lex)], lex)
        with pytest.raises(
            ValueError, match="bad prime 7: denominator of coefficient 1/7 vanishes"
        ):
            reduce_mod_p(B, 7)
        assert reduce_mod_p(B, 5).initial_ideal_stable

    def test_hand_built_non_monic_basis_can_lose_the_lead(self):
        ctx = standard_context(("x", "y"))
        drl = MonomialOrder.degrevlex(ctx)
        f = P("2*x + y", ctx, drl)
        B = GroebnerBasis((f,), drl, ctx)
        red = reduce_mod_p(B, 2)
        assert [g.render() for g in red.generators] == ["y"]
        assert not red.initial_ideal_stable

    def test_rejects_gf_input(self):
        ctx = ctx_xyz(PrimeField(5))
        lex = MonomialOrder.lex(ctx)
        B = buchberger([P("x*y", ctx, lex)], lex)
        with pytest.raises(ValueError, match="expects a basis over QQ"):
            reduce_mod_p(B, 7)

    def test_library_bases_always_stable_at_good_primes(self):
        """Reduced monic bases keep their initial ideal at any prime that does
        not divide a coefficient denominator."""
        rng = random.Random(61)
        ctx = ctx_xyz()
        stable_checked = 0
        for _ in range(40):
            order = rng.choice([MonomialOrder.lex(ctx), MonomialOrder.degrevlex(ctx)])
            gens = [random_poly(rng, ctx, order, 3, 3) for _ in range(2)]
            try:
                B = buchberger(gens, order, degree_cap=12)
            except DegreeCapExceeded:
                continue
            if not B.is_proper() or B.is_zero_ideal():
                continue
            for p in (2, 3, 5, 7):
                try:
                    red = reduce_mod_p(B, p)
                except ValueError:
                    continue  # bad prime for these denominators
                assert red.initial_ideal_stable, (B.render_polys(), p)
                stable_checked += 1
        assert stable_checked >= 40
