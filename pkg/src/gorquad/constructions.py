"""Builders for the artinian algebras under study.

Everything here returns `Ideal` objects whose quotients are artinian, and
every randomized builder takes an explicit seed and raises
`GenericityError` after a bounded number of rescue attempts instead of
looping forever.  The linkage machinery verifies each step against the
predicted h-vector and refuses to return an unverified result.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass

from .core import (
    AlgebraError,
    FieldSpec,
    GenericityError,
    LinkageError,
    RingMismatchError,
)
from .groebner import Ideal
from .idealops import colon_form, intersect, random_linear_form
from .invariants import (
    HVector,
    classify,
    hilbert_function,
    nonstandard_monomials,
    standard_monomials,
)
from .linalg import left_kernel
from .poly import Polynomial, RingCtx, ring

__all__ = [
    "LinkStep",
    "apolar_ideal",
    "complete_intersection_hvector",
    "contract",
    "double_link",
    "embed_with_linear_gens",
    "expected_group_hvector",
    "expected_link_hvector",
    "gorenstein_cut",
    "group_table_algebra",
    "link",
    "link_by_squares",
    "nonunique_hf_pair",
    "quadric_ci",
    "random_dual_form",
    "random_homogeneous",
    "regular_sequence_in",
    "tensor_algebras",
]


# -- random forms ----------------------------------------------------------------


def random_homogeneous(R: RingCtx, degree: int, rng: random.Random,
                       all_nonzero: bool = False) -> Polynomial:
    """Random homogeneous form of the given degree, resampled until nonzero.

    With ``all_nonzero`` every monomial gets a nonzero coefficient, which is
    the right notion of "dense" for small fields.
    """
    mons = R.monomials_of_degree(degree)
    if not mons:
        raise ValueError(f"no monomials of degree {degree}")
    field = R.field
    draw = field.random_nonzero if all_nonzero else field.random
    while True:
        p = R.from_terms((k, draw(rng)) for k in mons)
        if not p.is_zero():
            return p


def random_dual_form(R: RingCtx, degree: int, rng: random.Random) -> Polynomial:
    """Dense random form used as a dual socle generator (all coefficients
    nonzero, so no accidental rank drop at the monomial level)."""
    return random_homogeneous(R, degree, rng, all_nonzero=True)


# -- complete intersections ------------------------------------------------------


def complete_intersection_hvector(degrees) -> HVector:
    """h-vector of an artinian complete intersection with the given
    generator degrees: the coefficientwise product of all-ones blocks."""
    out = HVector((1,))
    for d in degrees:
        if d < 1:
            raise ValueError(f"generator degree {d} must be positive")
        out = out * HVector((1,) * d)
    return out


def quadric_ci(r: int, field: FieldSpec | None = None, style: str = "monomial",
               seed: int = 0) -> Ideal:
    """Complete intersection of r quadrics in r variables.

    ``style="monomial"`` takes the squares of the variables;
    ``style="random"`` draws dense quadrics from the seed and accepts them
    only if the h-vector comes out binomial, reseeding up to ten times.
    """
    if r < 1:
        raise ValueError("need at least one variable")
    field = field if field is not None else FieldSpec.rationals()
    R = ring(field, r)
    xs = R.variables()
    if style == "monomial":
        return Ideal(R, [v * v for v in xs])
    if style != "random":
        raise ValueError(f"unknown style {style!r}")
    expected = complete_intersection_hvector([2] * r)
    rng = random.Random(seed)
    for _ in range(10):
        gens = [random_homogeneous(R, 2, rng) for _ in range(r)]
        cand = Ideal(R, gens)
        try:
            if hilbert_function(cand) == expected:
                return cand
        except AlgebraError:
            continue
    raise GenericityError(
        f"no complete intersection of quadrics after 10 draws (r={r}, seed={seed})")


# -- inverse systems -------------------------------------------------------------


def contract(p: Polynomial, F: Polynomial) -> Polynomial:
    """Contraction action of the ring on its graded dual: a monomial acts on
    a dual monomial by exponent subtraction with coefficient one (and kills
    it when some exponent would go negative).  Unlike differentiation this
    pairing stays perfect in every characteristic."""
    if p.ring != F.ring:
        raise RingMismatchError("contraction needs both forms in one ring")
    codec = p.ring.codec
    field = p.ring.field
    acc = {}
    for kp, cp in p.terms:
        for kf, cf in F.terms:
            if codec.divides(kp, kf):
                k = codec.div(kf, kp)
                c = field.mul(cp, cf)
                prev = acc.get(k)
                acc[k] = field.add(prev, c) if prev is not None else c
    return p.ring.from_terms(acc.items())


def apolar_ideal(F: Polynomial) -> Ideal:
    """Annihilator of a homogeneous dual form under contraction.

    Built degreewise from catalecticant kernels in degrees 1..deg(F) and
    completed by the surviving monomials one degree higher; the quotient is
    Gorenstein with socle degree deg(F) and h-vector given by the
    catalecticant ranks.
    """
    R = F.ring
    if F.is_zero() or not F.is_homogeneous():
        raise ValueError("need a nonzero homogeneous dual form")
    e = F.degree()
    if e < 1:
        raise ValueError("the dual form must have positive degree")
    field = R.field
    codec = R.codec
    gens: list[Polynomial] = []
    gb = None
    for d in range(1, e + 1):
        mons = R.monomials_of_degree(d)
        rows = []
        for m in mons:
            row = {}
            for kf, cf in F.terms:
                if codec.divides(m, kf):
                    row[codec.div(kf, m)] = cf
            rows.append(row)
        batch = []
        for vec in left_kernel(rows, field):
            p = R.from_terms(zip(mons, vec))
            if not p.is_zero():
                batch.append(p)
        if batch and gens:
            gb = Ideal(R, gens).groebner()
            batch = [p for p in batch if not gb.reduces_to_zero(p)]
        gens.extend(batch)
    one = field.one
    if gens:
        gb = Ideal(R, gens).groebner()
        extra = [Polynomial(R, ((k, one),)) for k in standard_monomials(gb, e + 1)]
    else:
        extra = [Polynomial(R, ((k, one),)) for k in R.monomials_of_degree(e + 1)]
    if not extra:
        return Ideal(R, gens)
    return Ideal(R, tuple(gens) + tuple(extra))


# -- tensor products and the (r, i) family ---------------------------------------


def tensor_algebras(I: Ideal, J: Ideal) -> Ideal:
    """Present the tensor product of the two quotients in the polynomial
    ring on the disjoint union of their variables.  The h-vector of the
    result is the coefficientwise product of the factors' h-vectors."""
    RI, RJ = I.ring, J.ring
    if RI.field != RJ.field:
        raise RingMismatchError("tensor factors must share one coefficient field")
    R = ring(RI.field, RI.nvars + RJ.nvars)
    left = tuple(range(RI.nvars))
    right = tuple(range(RI.nvars, RI.nvars + RJ.nvars))
    gens = [p.extend(R, left) for p in I.gens]
    gens += [q.extend(R, right) for q in J.gens]
    return Ideal(R, gens)


def _check_cell(r: int, i: int) -> None:
    if r < 2:
        raise ValueError("the family needs at least two variables")
    if not 0 <= i <= r - 2:
        raise ValueError(f"cell index i={i} out of range for r={r}")


def expected_group_hvector(r: int, i: int) -> HVector:
    """Predicted h-vector for the (r, i) cell: (1, i+2, 1) times r-i-2
    copies of (1, 1)."""
    _check_cell(r, i)
    out = HVector((1, i + 2, 1))
    for _ in range(r - i - 2):
        out = out * HVector((1, 1))
    return out


def group_table_algebra(r: int, i: int, field: FieldSpec | None = None) -> Ideal:
    """Quadric-presented Gorenstein algebra realizing the (r, i) cell, with
    h2 = C(r,2) - C(i+2,2) + 1.

    For i = 0 this is the complete intersection of squares; otherwise the
    annihilator of a sum of i+2 squares (a full-rank quadric in every
    characteristic under contraction) juxtaposed with r-i-2 one-variable
    square quotients.
    """
    _check_cell(r, i)
    field = field if field is not None else FieldSpec.rationals()
    if i == 0:
        return quadric_ci(r, field, style="monomial")
    m = i + 2
    Rm = ring(field, m)
    xs = Rm.variables()
    F = Rm.zero
    for v in xs:
        F = F + v * v
    block = apolar_ideal(F)
    R = ring(field, r)
    ys = R.variables()
    gens = [p.extend(R, tuple(range(m))) for p in block.gens]
    gens += [ys[j] * ys[j] for j in range(m, r)]
    return Ideal(R, gens)


# -- linkage ---------------------------------------------------------------------


def expected_link_hvector(h_ci: HVector, h_inside: HVector) -> HVector:
    """Predicted h-vector of the colon of an ideal out of an artinian
    complete-intersection cover: h(i) = h_c(i) - h_I(s - i), where s is the
    socle degree of the cover.  A negative entry means the inputs were not
    nested and raises LinkageError."""
    s = h_ci.socle_degree
    vals = []
    for idx in range(s + 1):
        v = h_ci[idx] - h_inside[s - idx]
        if v < 0:
            raise LinkageError(
                f"linkage arithmetic gives h({idx}) = {v} < 0; "
                "the algebra being linked does not fit inside the cover")
        vals.append(v)
    return HVector(tuple(vals))


@dataclass(frozen=True)
class LinkStep:
    """One linkage step: the generators of the complete intersection to
    colon by, plus a free-text direction note for provenance files."""

    ci_gens: tuple
    direction: str = ""


def link(I: Ideal, step: LinkStep) -> Ideal:
    """Colon the ideal out of a complete intersection contained in it.

    Verifies that the given forms lie in the ideal and cut out a complete
    intersection, predicts the linked h-vector, and computes the colon as an
    intersection of single-form colons, stopping as soon as the predicted
    Hilbert function is reached (a partial intersection always contains the
    true colon, so matching dimensions force equality).  Raises LinkageError
    on any mismatch.  Linking an ideal to itself returns the unit ideal.
    """
    R = I.ring
    gens = tuple(step.ci_gens)
    if not gens:
        raise LinkageError("a linkage step needs at least one form")
    for g in gens:
        if g.ring != R:
            raise RingMismatchError("linkage forms must live in the ideal's ring")
        if not I.contains(g):
            raise LinkageError("the complete intersection is not inside the ideal")
    ci = Ideal(R, gens)
    try:
        h_ci = hilbert_function(ci)
    except AlgebraError as exc:
        raise LinkageError(f"the chosen forms are not a regular sequence: {exc}")
    if h_ci != complete_intersection_hvector([g.degree() for g in gens]):
        raise LinkageError("the chosen forms are not a regular sequence")
    h_inside = hilbert_function(I)
    expected = expected_link_hvector(h_ci, h_inside)
    if expected.total == 0:
        return Ideal(R, [R.one])
    trunc = expected.socle_degree + 1
    result = None
    # sparsest low-degree generators first: they constrain the colon the
    # most per unit of elimination work
    todo = sorted(I.gens, key=lambda p: (p.degree(), len(p.terms),
                                         p.leading_key()))
    for f in todo:
        if ci.contains(f):
            continue
        q = colon_form(ci, f, truncate_at=trunc)
        result = q if result is None else intersect(result, q, truncate_at=trunc)
        if hilbert_function(result) == expected:
            gb = result.groebner()
            out = Ideal(R, gb.elements)
            out.attach_groebner(gb)
            return out
    got = hilbert_function(result) if result is not None else None
    raise LinkageError(
        f"linked h-vector {got} does not match the predicted {expected}")


def link_by_squares(I: Ideal) -> Ideal:
    """Colon the ideal out of the complete intersection of variable squares,
    computed through the cover's inverse system instead of an elimination.

    The cover c = (x1^2, ..., xn^2) annihilates the dual monomial
    F = x1...xn, and p * I being inside c is the same as p killing every
    contraction g . F of a generating set of I.  Each g . F is supported on
    squarefree dual monomials, so the whole colon reduces to kernels of
    small squarefree pairing matrices, one per degree.  The result is
    verified against the predicted linked h-vector before being returned.
    """
    R = I.ring
    n = R.nvars
    field = R.field
    xs = R.variables()
    squares = [v * v for v in xs]
    for s in squares:
        if not I.contains(s):
            raise LinkageError("the ideal does not contain the variable squares")
    h_inside = hilbert_function(I)
    h_cover = complete_intersection_hvector([2] * n)
    expected = expected_link_hvector(h_cover, h_inside)
    if expected.total == 0:
        return Ideal(R, [R.one])
    codec = R.codec
    F = R.monomial([1] * n)
    contractions = []
    for g in I.gens:
        w = contract(g, F)
        if not w.is_zero():
            contractions.append(w)
    gens = list(squares)
    top = expected.socle_degree + 1
    for d in range(1, top + 1):
        mons = [codec.key(e) for e in _squarefree_exps(n, d)]
        mons.sort(reverse=True)
        rows = []
        for m in mons:
            row = {}
            for gi, w in enumerate(contractions):
                for ku, cu in w.terms:
                    if codec.divides(m, ku):
                        row[(gi, codec.div(ku, m))] = cu
            rows.append(row)
        for vec in left_kernel(rows, field):
            p = R.from_terms(zip(mons, vec))
            if not p.is_zero():
                gens.append(p)
    out = Ideal(R, gens)
    got = hilbert_function(out)
    if got != expected:
        raise LinkageError(
            f"linked h-vector {got} does not match the predicted {expected}")
    return out


def _squarefree_exps(n: int, d: int):
    for combo in itertools.combinations(range(n), d):
        e = [0] * n
        for j in combo:
            e[j] = 1
        yield tuple(e)


def regular_sequence_in(I: Ideal, degrees, rng: random.Random,
                        attempts: int = 10) -> tuple:
    """Random forms of the prescribed degrees inside the ideal that form a
    regular sequence, certified by the complete-intersection h-vector.
    Raises GenericityError once the sample budget runs out."""
    R = I.ring
    field = R.field
    gb = I.groebner()
    expected = complete_intersection_hvector(degrees)
    one = field.one
    bases = {}
    for d in set(degrees):
        mons = nonstandard_monomials(gb, d)
        if not mons:
            raise GenericityError(f"the ideal has no elements of degree {d}")
        polys = []
        for m in mons:
            mono = Polynomial(R, ((m, one),))
            polys.append(mono - gb.normal_form(mono))
        bases[d] = polys
    degrees = tuple(degrees)
    for attempt in range(attempts):
        # start with very sparse combinations and widen on each retry; any
        # verified regular sequence gives the same linkage arithmetic, and
        # sparse covers keep every downstream elimination cheap
        width = 2 + attempt
        picks = []
        for d in degrees:
            p = _random_combination(bases[d], field, rng, width)
            if p is None:
                break
            picks.append(p)
        if len(picks) != len(degrees):
            continue
        cand = Ideal(R, picks)
        try:
            if hilbert_function(cand) == expected:
                return tuple(picks)
        except AlgebraError:
            continue
    raise GenericityError(
        f"no regular sequence of degrees {degrees} in {attempts} attempts")


def _random_combination(polys, field, rng, width):
    take = min(len(polys), max(width, 1))
    for _ in range(5):
        acc = None
        for b in rng.sample(polys, take):
            c = field.random_nonzero(rng)
            t = b.scale(c)
            acc = t if acc is None else acc + t
        if acc is not None and not acc.is_zero():
            return acc
    return None


def embed_with_linear_gens(I: Ideal, nvars: int) -> Ideal:
    """View the same quotient in a larger polynomial ring by adding the new
    variables as linear generators; the h-vector does not change."""
    R = I.ring
    if nvars < R.nvars:
        raise ValueError("cannot embed into fewer variables")
    if nvars == R.nvars:
        return I
    T = ring(R.field, nvars, R.order)
    ts = T.variables()
    gens = [p.extend(T, tuple(range(R.nvars))) for p in I.gens]
    gens += [ts[j] for j in range(R.nvars, nvars)]
    return Ideal(T, gens)


def double_link(r: int, field: FieldSpec | None = None) -> tuple:
    """Two deterministic linkage steps from a monomial seed in r variables,
    landing on the symmetric h-vector with entries C(r-1, j) + C(r-3, j-1).

    The seed is the squares of the first r-3 variables plus the last three
    variables; the first cover swaps one of those variables for the missing
    squares, and the second cover is the full complete intersection of
    squares, which lies in the first colon because every square multiplies
    the seed into the first cover.  Returns (intermediate, final).
    """
    if r < 5:
        raise ValueError("the double link needs at least five variables")
    field = field if field is not None else FieldSpec.rationals()
    R = ring(field, r)
    xs = R.variables()
    seed_gens = [xs[j] * xs[j] for j in range(r - 3)] + list(xs[r - 3:])
    I0 = Ideal(R, seed_gens)
    first = tuple([xs[r - 3]] + [xs[j] * xs[j] for j in range(r - 3)]
                  + [xs[r - 2] * xs[r - 2], xs[r - 1] * xs[r - 1]])
    J1 = link(I0, LinkStep(first, direction="one linear form and r-1 squares"))
    second = tuple(v * v for v in xs)
    J2 = link(J1, LinkStep(second, direction="all squares"))
    return J1, J2


# -- pairs with matching border data ----------------------------------------------


def _sum_of_squares_apolar(m: int, field: FieldSpec) -> Ideal:
    Rm = ring(field, m)
    F = Rm.zero
    for v in Rm.variables():
        F = F + v * v
    return apolar_ideal(F)


def _offdiagonal_quadric_apolar(m: int, field: FieldSpec) -> Ideal:
    """Annihilator of the squarefree full quadric: same (1, m, 1) quotient
    as the sum of squares when char does not divide m - 1, but containing
    every variable square, which square-cover linkage needs."""
    Rm = ring(field, m)
    xs = Rm.variables()
    F = Rm.zero
    for a in range(m):
        for b in range(a + 1, m):
            F = F + xs[a] * xs[b]
    return apolar_ideal(F)


def _residual_almost_ci(G: Ideal, cover: list, new_count: int) -> tuple:
    """Embed a Gorenstein stage with fresh leading variables and link it by
    the quadric complete intersection (new squares) + cover.

    The residual of a Gorenstein ideal out of any complete-intersection
    cover is the cover plus a single extra generator; at every stage of the
    towers built here that generator is a quadric, found by linear algebra
    in the cover quotient.  Returns (residual, its cover, extra quadric).
    """
    R_old = G.ring
    field = R_old.field
    n = R_old.nvars + new_count
    R = ring(field, n)
    vmap = tuple(j + new_count for j in range(R_old.nvars))
    xs = R.variables()
    new_lin = [xs[i] for i in range(new_count)]
    big_cover = [v * v for v in new_lin] + [g.extend(R, vmap) for g in cover]
    inside = new_lin + [g.extend(R, vmap) for g in G.gens]
    cgb = Ideal(R, big_cover).groebner()
    expected = expected_link_hvector(
        complete_intersection_hvector([2] * n), hilbert_function(G))
    std2 = standard_monomials(cgb, 2)
    rows = []
    for m in std2:
        mono = Polynomial(R, ((m, field.one),))
        row = {}
        for gi, g in enumerate(inside):
            rem = cgb.normal_form(mono * g)
            for k, c in rem.terms:
                row[(gi, k)] = c
        rows.append(row)
    sols = left_kernel(rows, field)
    if len(sols) != 1:
        raise LinkageError(
            f"expected one residual quadric over the cover, found {len(sols)}")
    extra = R.from_terms(zip(std2, sols[0]))
    residual = Ideal(R, big_cover + [extra])
    got = hilbert_function(residual)
    if got != expected:
        raise LinkageError(
            f"residual h-vector {got} does not match the predicted {expected}")
    return residual, big_cover, extra


def _residual_gorenstein(J: Ideal, cover: list, extra) -> tuple:
    """Embed an almost complete intersection (cover + one quadric) with a
    fresh leading variable and link it by the cover whose new square absorbs
    the extra quadric.

    That cover turns the embedded ideal into (cover) + (new variable), so
    the residual is Gorenstein; its generators beyond the cover are kernels
    of multiplication by the new variable in the cover quotient.  Returns
    (residual, its cover).
    """
    R_old = J.ring
    field = R_old.field
    n = R_old.nvars + 1
    R = ring(field, n)
    vmap = tuple(j + 1 for j in range(R_old.nvars))
    x0 = R.variables()[0]
    big_cover = ([x0 * x0 + extra.extend(R, vmap)]
                 + [g.extend(R, vmap) for g in cover])
    cgb = Ideal(R, big_cover).groebner()
    expected = expected_link_hvector(
        complete_intersection_hvector([2] * n), hilbert_function(J))
    gens = list(big_cover)
    for d in range(2, min(expected.socle_degree + 1, n) + 1):
        std_d = standard_monomials(cgb, d)
        rows = []
        for m in std_d:
            mono = Polynomial(R, ((m, field.one),))
            rows.append(dict(cgb.normal_form(x0 * mono).terms))
        for vec in left_kernel(rows, field):
            p = R.from_terms(zip(std_d, vec))
            if not p.is_zero():
                gens.append(p)
    residual = Ideal(R, gens)
    got = hilbert_function(residual)
    if got != expected:
        raise LinkageError(
            f"linked h-vector {got} does not match the predicted {expected}")
    return residual, big_cover


def linkage_grow(G: Ideal, rounds: int = 1, first_new_vars: int = 1) -> tuple:
    """Grow a Gorenstein quotient by alternating liaison inside covers of
    perturbed squares.

    Each round embeds the current stage with fresh leading variables and
    links it to an almost complete intersection (the cover plus one extra
    quadric), then embeds once more and links back, absorbing the extra
    quadric into the newest square so the residual cover stays inside the
    ideal; the result is Gorenstein with socle degree two higher.  The seed's
    ideal must contain the square of every variable.  Returns all the stages
    in order: (aci_1, gorenstein_1, aci_2, gorenstein_2, ...).
    """
    if rounds < 1:
        raise ValueError("need at least one growth round")
    cover = [v * v for v in G.ring.variables()]
    for sq in cover:
        if not G.contains(sq):
            raise LinkageError(
                "the growth seed must contain every variable square")
    stages = []
    new_count = first_new_vars
    for _ in range(rounds):
        J, cover, extra = _residual_almost_ci(G, cover, new_count)
        stages.append(J)
        G, cover = _residual_gorenstein(J, cover, extra)
        stages.append(G)
        new_count = 1
    return tuple(stages)


def squarefree_full_form(R: RingCtx, d: int) -> Polynomial:
    """The sum of every squarefree degree-d monomial; its annihilator is a
    Gorenstein quotient of socle degree d containing all variable squares."""
    if not 0 < d <= R.nvars:
        raise ValueError("degree must be between 1 and the variable count")
    one = R.field.one
    return R.from_terms((R.codec.key(e), one) for e in _squarefree_exps(R.nvars, d))


def penultimate_socle_algebras(r: int, field: FieldSpec | None = None) -> tuple:
    """Gorenstein quotients in r variables with socle degree r - 1, one for
    each achievable drop of the middle value: h2 = C(r,2) - beta + 1 for
    beta = 1, 2, 3.

    Each starts from the annihilator of the full squarefree form of degree
    r - 3 in r - beta variables (socle degree r - 3) and runs one liaison
    growth round, embedding with beta - 1 extra variables on the way to the
    almost-complete-intersection stage.  Returned in order beta = 1, 2, 3.
    """
    if r < 5:
        raise ValueError("the sweep needs r >= 5")
    field = field if field is not None else FieldSpec.prime(32003)
    if field.p == 2:
        raise ValueError("square-cover liaison needs odd or zero characteristic")
    out = []
    for beta in (1, 2, 3):
        seed = apolar_ideal(squarefree_full_form(ring(field, r - beta), r - 3))
        out.append(linkage_grow(seed, rounds=1, first_new_vars=beta - 1)[-1])
    return tuple(out)


def _alpha1_towers(r: int, field: FieldSpec) -> tuple:
    """Two alternating linkage towers ending in r variables: one seeded on a
    complete intersection of squares, one on an apolar algebra of the same
    socle degree with one more variable."""
    if r % 2:
        seed_a, jump_a = quadric_ci(2, field), 2
        seed_b = _offdiagonal_quadric_apolar(3, field)
    else:
        seed_a, jump_a = quadric_ci(3, field), 2
        seed_b = tensor_algebras(_offdiagonal_quadric_apolar(3, field),
                                 quadric_ci(1, field))
    pair = []
    for G, jump in ((seed_a, jump_a), (seed_b, 1)):
        rounds = (r - G.ring.nvars - jump + 1) // 2
        pair.append(linkage_grow(G, rounds=rounds, first_new_vars=jump)[-1])
    return tuple(pair)


def nonunique_hf_pair(r: int, target: str = "alpha1",
                      field: FieldSpec | None = None, seed: int = 0) -> tuple:
    """Two Gorenstein algebras in r variables whose Hilbert functions agree
    through degree 2 and split in the middle.

    ``target="alpha1"`` (h2 one below the generic quadric count) alternates
    almost-complete-intersection and Gorenstein linkage steps from seeds of
    matching parity, choosing every cover among minimal generators so the
    residuals stay Gorenstein; fully deterministic (the seed argument is
    unused), needs r >= 7 and odd or zero characteristic (default
    GF(32003)).

    ``target="alpha0"`` (h2 equal to the generic quadric count) colons the
    complete intersection of squares by a general linear form versus one
    supported on only five variables; needs r >= 7 and characteristic zero
    or p > r (default rationals), since the general colon relies on
    maximal-rank multiplication maps.
    """
    if target == "alpha1":
        if r < 7:
            raise ValueError("the tower construction needs r >= 7")
        field = field if field is not None else FieldSpec.prime(32003)
        if field.p == 2:
            raise ValueError("the tower construction needs odd or zero "
                             "characteristic")
        pair = _alpha1_towers(r, field)
        hA = hilbert_function(pair[0])
        hB = hilbert_function(pair[1])
        if (hA[0], hA[1], hA[2]) != (hB[0], hB[1], hB[2]) or hA == hB:
            raise GenericityError(f"tower pair came out wrong: {hA} vs {hB}")
        return pair
    if target == "alpha0":
        if r < 7:
            raise ValueError("the colon pair needs r >= 7")
        field = field if field is not None else FieldSpec.rationals()
        if field.p is not None and field.p <= r:
            raise ValueError("needs characteristic zero or p > r")
        R = ring(field, r)
        xs = R.variables()
        squares = [v * v for v in xs]
        special = xs[0] + xs[1] + xs[2] + xs[3] + xs[4]
        I_special = link_by_squares(Ideal(R, squares + [special]))
        rng = random.Random(seed)
        target_h3 = math.comb(r, 3)
        for _ in range(5):
            L = random_linear_form(R, rng, all_nonzero=True)
            I_general = link_by_squares(Ideal(R, squares + [L]))
            if hilbert_function(I_general)[3] == target_h3:
                return I_general, I_special
        raise GenericityError(
            f"no sufficiently general linear form in 5 draws (seed={seed})")
    raise ValueError(f"unknown target {target!r}")


# -- generic Gorenstein reduction --------------------------------------------------


def gorenstein_cut(I: Ideal, seed: int = 0) -> Ideal:
    """Add h2 - 1 random quadrics to a quadric-presented algebra, aiming at
    the minimal Gorenstein h-vector (1, r, 1); verifies the result and
    retries up to five seeds."""
    R = I.ring
    h = hilbert_function(I)
    h2 = h[2]
    target = HVector((1, R.nvars, 1))
    if h2 <= 1 and h == target:
        return I
    rng = random.Random(seed)
    for _ in range(5):
        extra = [random_homogeneous(R, 2, rng) for _ in range(max(h2 - 1, 0))]
        J = Ideal(R, tuple(I.gens) + tuple(extra))
        try:
            cls = classify(J)
        except AlgebraError:
            continue
        if cls.hvector == target and cls.gorenstein:
            return J
    raise GenericityError(
        f"no cut down to {target} in 5 attempts (seed={seed})")
