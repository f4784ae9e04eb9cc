"""Shared helpers: deterministic polynomial sampling and independent
oracles (dense linear algebra, sympy Groebner bases) used to cross-check
the package's own computations."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from gorquad.core import FieldSpec
from gorquad.poly import Polynomial, RingCtx, ring

Q = FieldSpec.rationals()
GF2 = FieldSpec.prime(2)
GF3 = FieldSpec.prime(3)
GF7 = FieldSpec.prime(7)
GFBIG = FieldSpec.prime(32003)


def random_poly(R: RingCtx, degree: int, rng: random.Random,
                density: float = 0.7) -> Polynomial:
    """Dense-ish random homogeneous polynomial with seeded coefficients."""
    terms = []
    for m in R.monomials_of_degree(degree):
        if rng.random() < density:
            c = R.field.random(rng)
            if c != R.field.zero:
                terms.append((m, c))
    return R.from_terms(terms)


def poly_as_dict(p: Polynomial) -> dict:
    """Exponent-tuple -> coefficient view, independent of key packing."""
    codec = p.ring.codec
    return {codec.exps(k): c for k, c in p.terms}


# -- dense linear algebra oracle (positional lists, no sparse dicts) -------------


def dense_rref_rank(rows, field: FieldSpec) -> int:
    """Row reduction on dense coefficient lists; returns the rank."""
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] != field.zero),
                     None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = field.inv(rows[rank][col])
        rows[rank] = [field.mul(inv, v) for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != field.zero:
                c = rows[i][col]
                rows[i] = [field.sub(a, field.mul(c, b))
                           for a, b in zip(rows[i], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


# -- sympy bridge -----------------------------------------------------------------


def sympy_symbols(R: RingCtx):
    import sympy

    return sympy.symbols(f"x1:{R.nvars + 1}")


def to_sympy(p: Polynomial, syms):
    import sympy

    codec = p.ring.codec
    expr = sympy.Integer(0)
    for k, c in p.terms:
        term = sympy.Rational(c.numerator, c.denominator) if isinstance(
            c, Fraction) else sympy.Integer(c)
        for j, e in enumerate(codec.exps(k)):
            if e:
                term *= syms[j] ** e
        expr += term
    return expr


def sympy_reduced_gb(gens, R: RingCtx):
    """Reduced degrevlex Groebner basis computed by sympy, normalized to a
    set of monic exponent->coefficient dicts for order-free comparison."""
    import sympy

    syms = sympy_symbols(R)
    kwargs = {"order": "grevlex"}
    if R.field.p is not None:
        kwargs["modulus"] = R.field.p
    gb = sympy.groebner([to_sympy(g, syms) for g in gens], *syms, **kwargs)
    out = []
    for poly in gb.polys:
        entry = {}
        for exps, coeff in poly.terms():
            if R.field.p is None:
                entry[tuple(exps)] = Fraction(int(coeff.numerator),
                                              int(coeff.denominator))
            else:
                entry[tuple(exps)] = int(coeff) % R.field.p
        out.append(_monic_by_codec(entry, R))
    return sorted(out, key=sorted)


def from_sympy(expr, R: RingCtx) -> Polynomial:
    """Inverse of :func:`to_sympy` (expression must live in R's variables)."""
    import sympy

    syms = sympy_symbols(R)
    poly = sympy.Poly(expr, *syms)
    pairs = []
    for exps, coeff in poly.terms():
        if R.field.p is None:
            c = Fraction(int(coeff.numerator), int(coeff.denominator))
        else:
            c = int(coeff) % R.field.p
        pairs.append((R.codec.key(tuple(exps)), R.field.normalize(c)))
    return R.from_terms(pairs)


def _monic_by_codec(entry: dict, R: RingCtx) -> dict:
    """Scale a exponent->coeff dict so the ring's own leading term is 1
    (sympy normalizes by lex regardless of the basis order)."""
    lead = max(entry, key=R.codec.key)
    inv = R.field.inv(R.field.normalize(entry[lead]))
    return {e: R.field.mul(inv, R.field.normalize(c)) for e, c in entry.items()}


def gorquad_gb_normalized(I) -> list:
    """The package's reduced basis in the same normal form as
    :func:`sympy_reduced_gb`."""
    gb = I.groebner()
    return sorted((poly_as_dict(g) for g in gb.elements), key=sorted)
