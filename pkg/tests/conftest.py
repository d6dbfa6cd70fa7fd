"""Shared helpers: independent reference implementations used as oracles.

Everything here is deliberately written from scratch against the textbook
definitions (plain Gaussian elimination, first-difference comparators,
criterion-free completion, brute-force counting) so that agreement with the
library is a real check and not a tautology.
"""

from __future__ import annotations

import random
from fractions import Fraction

from grodeg import Monomial, Polynomial, SimplicialComplex, standard_context


# ---------------------------------------------------------------------------
# reference linear algebra


def ref_rank_fraction(rows):
    """Rank over QQ by plain fraction Gaussian elimination."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, nrows) if m[i][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pv = m[rank][col]
        m[rank] = [x / pv for x in m[rank]]
        for i in range(nrows):
            if i != rank and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def ref_rank_mod_p(rows, p):
    """Rank over GF(p), reducing entries first."""
    m = [[int(x) % p for x in row] for row in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, nrows) if m[i][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = pow(m[rank][col], p - 2, p)
        m[rank] = [x * inv % p for x in m[rank]]
        for i in range(nrows):
            if i != rank and m[i][col]:
                f = m[i][col]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


# ---------------------------------------------------------------------------
# reference monomial comparators
#
# Both return -1 / 0 / +1 for a <order b / equal / a >order b, taking raw
# exponent tuples plus the permutation listing variables from largest to
# smallest.


def ref_lex_cmp(a, b, perm):
    for i in perm:
        if a[i] != b[i]:
            return 1 if a[i] > b[i] else -1
    return 0


def ref_degrevlex_cmp(a, b, perm, grading=None):
    if grading is None:
        da, db = sum(a), sum(b)
    else:
        da = sum(e * w for e, w in zip(a, grading))
        db = sum(e * w for e, w in zip(b, grading))
    if da != db:
        return 1 if da > db else -1
    # same degree: the monomial whose last difference (scanning the
    # permutation from the smallest variable back) is negative is larger
    for i in reversed(perm):
        if a[i] != b[i]:
            return -1 if a[i] > b[i] else 1
    return 0


# ---------------------------------------------------------------------------
# seeded random generators


def random_monomial(rng: random.Random, n, maxdeg=4):
    exps = [0] * n
    for _ in range(rng.randint(0, maxdeg)):
        exps[rng.randrange(n)] += 1
    return Monomial(tuple(exps))


def random_poly(rng: random.Random, ctx, order, nterms=4, maxdeg=4):
    terms = []
    for _ in range(rng.randint(1, nterms)):
        c = rng.choice([-3, -2, -1, 1, 2, 3])
        terms.append((random_monomial(rng, ctx.n, maxdeg), c))
    return Polynomial(ctx, order, terms)


def random_homogeneous_poly(rng: random.Random, ctx, order, deg, nterms=4):
    """Nonzero homogeneous polynomial of the given degree (standard grading)."""
    while True:
        terms = []
        for _ in range(rng.randint(1, nterms)):
            exps = [0] * ctx.n
            for _ in range(deg):
                exps[rng.randrange(ctx.n)] += 1
            c = rng.choice([-3, -2, -1, 1, 2, 3])
            terms.append((Monomial(tuple(exps)), c))
        p = Polynomial(ctx, order, terms)
        if not p.is_zero():
            return p


def random_complex(rng: random.Random, n, max_facets=6):
    """Random simplicial complex on vertex slots 1..n (ghosts allowed)."""
    while True:
        cands = []
        for _ in range(rng.randint(1, max_facets)):
            k = rng.randint(1, min(n, 4))
            cands.append(tuple(sorted(rng.sample(range(1, n + 1), k))))
        try:
            return SimplicialComplex.from_facets(n, cands)
        except ValueError:
            continue


# ---------------------------------------------------------------------------
# criterion-free Buchberger (initial ideal oracle)


def _ref_reduce(p, basis):
    """Full normal form, always taking the first divisor in list order."""
    remainder = []
    while not p.is_zero():
        lm, lc = p.leading_term()
        for g in basis:
            glm, glc = g.leading_term()
            if glm.divides(lm):
                p = p - g.times_term(lm.divide(glm), lc / glc)
                break
        else:
            remainder.append((lm, lc))
            p = p.drop_leading()
    return Polynomial(p.ctx, p.order, remainder)


def ref_initial_monomials(gens, order):
    """Minimal generators of the initial ideal, via pair-exhaustive completion.

    No product or chain criterion, no degree cap: only suitable for the small
    inputs the tests feed it.
    """
    basis = [g.with_order(order).monic() for g in gens if not g.is_zero()]
    pairs = [(i, j) for i in range(len(basis)) for j in range(i)]
    while pairs:
        i, j = pairs.pop()
        f, g = basis[i], basis[j]
        lf, lg = f.leading_monomial(), g.leading_monomial()
        l = lf.lcm(lg)
        s = f.times_term(l.divide(lf), 1) - g.times_term(l.divide(lg), 1)
        r = _ref_reduce(s, basis)
        if not r.is_zero():
            basis.append(r.monic())
            pairs.extend((len(basis) - 1, k) for k in range(len(basis) - 1))
    leads = [g.leading_monomial() for g in basis]
    minimal = [
        m
        for m in leads
        if not any(other != m and other.divides(m) for other in leads)
    ]
    return sorted(set(m.exps for m in minimal))


def random_path_reduce(rng: random.Random, p, basis):
    """Normal form via random reduction choices (any reducible term, any divisor)."""
    while True:
        options = []
        for t_idx, (m, c) in enumerate(p.terms):
            for g in basis:
                if g.leading_monomial().divides(m):
                    options.append((t_idx, g))
        if not options:
            return p
        t_idx, g = rng.choice(options)
        m, c = p.terms[t_idx]
        glm, glc = g.leading_term()
        p = p - g.times_term(m.divide(glm), c / glc)


# ---------------------------------------------------------------------------
# brute-force reduced homology (field coefficients)


def _boundary_matrix(faces_lo, faces_hi):
    """Matrix of the simplicial boundary map C_hi -> C_lo over ZZ."""
    index = {f: i for i, f in enumerate(faces_lo)}
    rows = []
    for face in faces_hi:
        row = [0] * len(faces_lo)
        for j in range(len(face)):
            sub = face[:j] + face[j + 1 :]
            row[index[sub]] = (-1) ** j
        rows.append(row)
    return rows


def ref_homology_dims(delta: SimplicialComplex, p=0):
    """Reduced homology dimensions over QQ (p=0) or GF(p), indices 0..dim.

    Over a field these agree with reduced cohomology, which is what the
    library reports.
    """
    chains = [[()]] + [sorted(group) for group in delta.faces_by_dim()]
    rank = (lambda m: ref_rank_mod_p(m, p)) if p else ref_rank_fraction
    ranks = []
    for i in range(1, len(chains)):
        ranks.append(rank(_boundary_matrix(chains[i - 1], chains[i])))
    ranks.append(0)
    dims = []
    for i in range(delta.dim + 1):
        dims.append(len(chains[i + 1]) - ranks[i] - ranks[i + 1])
    return tuple(dims)


# ---------------------------------------------------------------------------
# brute-force plane curve point count


def _coeff_mod_p(c, p):
    if isinstance(c, Fraction):
        return c.numerator * pow(c.denominator, p - 2, p) % p
    return int(getattr(c, "v", c)) % p


def brute_projective_count(poly, p):
    """Points of V(f) in P^2(F_p) by affine enumeration over F_p^3 minus 0."""
    terms = [(m.exps, _coeff_mod_p(c, p)) for m, c in poly.terms]
    affine = 0
    for x in range(p):
        for y in range(p):
            for z in range(p):
                if x == y == z == 0:
                    continue
                total = 0
                for exps, c in terms:
                    total += c * pow(x, exps[0], p) * pow(y, exps[1], p) * pow(z, exps[2], p)
                if total % p == 0:
                    affine += 1
    assert affine % (p - 1) == 0
    return affine // (p - 1)


# ---------------------------------------------------------------------------
# tiny conveniences used all over the tests


def ctx_xyz(field=None):
    if field is None:
        return standard_context(("x", "y", "z"))
    return standard_context(("x", "y", "z"), field=field)


def ctx_n(n, field=None):
    names = tuple(f"x{i}" for i in range(1, n + 1))
    if field is None:
        return standard_context(names)
    return standard_context(names, field=field)
