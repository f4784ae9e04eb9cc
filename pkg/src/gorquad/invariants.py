"""Numerical invariants of artinian graded quotients.

Everything is computed from a reduced Groebner basis: Hilbert functions by
counting standard monomials, socles by intersecting kernels of the
multiplication maps by the variables, and minimal generator counts by the
rank of (degree d-1 part) * (linear forms) inside the degree-d part.

Functions accept either an Ideal or a GroebnerBasis; per-basis results are
cached on the basis object.
"""

from __future__ import annotations

import math
import random
import re
from dataclasses import dataclass

from .core import AlgebraError
from .groebner import GroebnerBasis, Ideal
from .linalg import (
    Echelon,
    EchelonGF2,
    left_kernel,
    left_kernel_gf2,
    rank_of,
    rank_of_gf2,
)
from .poly import Polynomial

_HVEC_RE = re.compile(r"\(\s*(-?\d+\s*(,\s*-?\d+\s*)*)?\)")


@dataclass(frozen=True)
class HVector:
    """The Hilbert function of an artinian graded algebra, as a tuple."""

    values: tuple

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        while vals and vals[-1] == 0:
            vals = vals[:-1]
        object.__setattr__(self, "values", vals)

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.values):
            return self.values[i]
        return 0

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    @property
    def socle_degree(self) -> int:
        return len(self.values) - 1

    @property
    def embedding_dimension(self) -> int:
        return self[1]

    @property
    def total(self) -> int:
        return sum(self.values)

    def is_symmetric(self) -> bool:
        return self.values == self.values[::-1]

    def __mul__(self, other: "HVector") -> "HVector":
        """Coefficientwise polynomial product: the Hilbert function of a
        tensor product of graded algebras."""
        if not self.values or not other.values:
            return HVector(())
        out = [0] * (len(self.values) + len(other.values) - 1)
        for i, a in enumerate(self.values):
            for j, b in enumerate(other.values):
                out[i + j] += a * b
        return HVector(tuple(out))

    def is_osequence(self) -> bool:
        """Macaulay's growth condition for Hilbert functions of standard
        graded algebras."""
        if not self.values:
            return True
        if self.values[0] != 1:
            return False
        for d in range(1, len(self.values) - 1):
            if self.values[d + 1] > _macaulay_bound(self.values[d], d):
                return False
        return all(v >= 0 for v in self.values)

    def __str__(self):
        return "(" + ",".join(str(v) for v in self.values) + ")"

    @staticmethod
    def parse(text: str) -> "HVector":
        m = _HVEC_RE.fullmatch(text.strip())
        if m is None:
            raise ValueError(f"not an h-vector literal: {text!r}")
        inner = m.group(1)
        if not inner:
            return HVector(())
        return HVector(tuple(int(p) for p in inner.split(",")))


def _macaulay_rep(c: int, d: int):
    """Greedy binomial (Macaulay) representation of c in degree d."""
    rep = []
    while c > 0 and d >= 1:
        k = d
        while math.comb(k + 1, d) <= c:
            k += 1
        rep.append((k, d))
        c -= math.comb(k, d)
        d -= 1
    return rep


def _macaulay_bound(c: int, d: int) -> int:
    return sum(math.comb(k + 1, j + 1) for k, j in _macaulay_rep(c, d))


# -- basis plumbing --------------------------------------------------------------


def as_basis(x) -> GroebnerBasis:
    if isinstance(x, GroebnerBasis):
        return x
    if isinstance(x, Ideal):
        return x.groebner()
    raise TypeError(f"expected Ideal or GroebnerBasis, got {type(x).__name__}")


def _cache(gb: GroebnerBasis, key, build):
    val = gb._caches.get(key)
    if val is None:
        val = gb._caches[key] = build()
    return val


def _lead_exps(gb: GroebnerBasis):
    exps = gb.ring.codec.exps
    return _cache(gb, "lead_exps", lambda: tuple(exps(k) for k in gb.lead_keys))


def is_artinian(x) -> bool:
    """True iff the quotient is finite-dimensional: every variable has a pure
    power among the leading terms."""
    gb = as_basis(x)

    def build():
        covered = set()
        for e in _lead_exps(gb):
            support = [j for j, v in enumerate(e) if v]
            if len(support) == 1:
                covered.add(support[0])
            elif not support:
                return True  # unit ideal
        return len(covered) == gb.ring.nvars

    return _cache(gb, "artinian", build)


def standard_monomials(x, d: int) -> tuple:
    """Degree-d monomial keys outside the leading-term ideal, descending."""
    gb = as_basis(x)

    def build():
        if gb.truncated_at is not None and d > gb.truncated_at:
            raise AlgebraError(
                f"degree {d} is beyond the basis truncation {gb.truncated_at}")
        divides = gb.ring.codec.divides
        degree = gb.ring.codec.degree
        leads = [k for k in gb.lead_keys if degree(k) <= d]
        return tuple(m for m in gb.ring.monomials_of_degree(d)
                     if not any(divides(lk, m) for lk in leads))

    return _cache(gb, ("std", d), build)


def nonstandard_monomials(x, d: int) -> tuple:
    gb = as_basis(x)

    def build():
        std = set(standard_monomials(gb, d))
        return tuple(m for m in gb.ring.monomials_of_degree(d) if m not in std)

    return _cache(gb, ("nonstd", d), build)


def hilbert_value(x, d: int) -> int:
    if d < 0:
        return 0
    return len(standard_monomials(x, d))


def hilbert_function(x) -> HVector:
    """The full h-vector of an artinian quotient."""
    gb = as_basis(x)

    def build():
        if not is_artinian(gb):
            raise AlgebraError("quotient is not artinian; h-vector is infinite")
        vals = []
        d = 0
        while True:
            if gb.truncated_at is not None and d > gb.truncated_at:
                raise AlgebraError(
                    "h-vector does not terminate below the basis truncation")
            c = hilbert_value(gb, d)
            if c == 0:
                break
            vals.append(c)
            d += 1
        return HVector(tuple(vals))

    return _cache(gb, "hf", build)


def socle_degree(x) -> int:
    return hilbert_function(x).socle_degree


# -- multiplication maps ----------------------------------------------------------


def _nf_terms(gb: GroebnerBasis, key):
    """Terms of the normal form of a single monomial, as (key, coeff) tuple."""
    kernel, reducers = gb._machinery()
    rep = kernel.nf(kernel.from_terms(((key, gb.ring.field.one),)), reducers)
    return kernel.to_terms(rep)


def _variable_rows(gb: GroebnerBasis, j: int, d: int):
    """Rows of multiplication by variable j from degree d to d+1, aligned to
    standard_monomials(gb, d); dict rows generally, bitmasks over GF(2)."""

    def build():
        codec = gb.ring.codec
        vk = codec.var_key(j)
        std = standard_monomials(gb, d)
        if gb.ring.field.p == 2:
            index = {m: i for i, m in enumerate(standard_monomials(gb, d + 1))}
            rows = []
            for m in std:
                mask = 0
                for k, _ in _nf_terms(gb, codec.mul(vk, m)):
                    mask |= 1 << index[k]
                rows.append(mask)
            return rows
        return [dict(_nf_terms(gb, codec.mul(vk, m))) for m in std]

    return _cache(gb, ("varmul", j, d), build)


def multiplication_rows(gb_or_ideal, p: Polynomial, d: int):
    """Rows of the map [A]_d -> [A]_{d + deg p} given by multiplication by p,
    aligned to standard_monomials(..., d).  Returns (rows, std_d, std_target);
    dict rows generally, bitmask rows over GF(2)."""
    gb = as_basis(gb_or_ideal)
    std = standard_monomials(gb, d)
    target = standard_monomials(gb, d + p.degree())
    rows = []
    if gb.ring.field.p == 2:
        index = {m: i for i, m in enumerate(target)}
        for m in std:
            mono = Polynomial(gb.ring, ((m, gb.ring.field.one),))
            mask = 0
            for k, _ in gb.normal_form(p * mono).terms:
                mask |= 1 << index[k]
            rows.append(mask)
    else:
        for m in std:
            mono = Polynomial(gb.ring, ((m, gb.ring.field.one),))
            rows.append(dict(gb.normal_form(p * mono).terms))
    return rows, std, target


# -- socle --------------------------------------------------------------------


def socle_type(x) -> tuple:
    """Dimension of the socle in each degree 0..socle degree."""
    gb = as_basis(x)

    def build():
        hf = hilbert_function(gb)
        gf2 = gb.ring.field.p == 2
        out = []
        for d in range(hf.socle_degree + 1):
            out.append(_socle_dim(gb, d, gf2))
        return tuple(out)

    return _cache(gb, "socle", build)


def _socle_dim(gb: GroebnerBasis, d: int, gf2: bool) -> int:
    std = standard_monomials(gb, d)
    n = len(std)
    if n == 0:
        return 0
    nvars = gb.ring.nvars
    if gf2:
        vectors = [1 << i for i in range(n)]
        for j in range(nvars):
            rows = _variable_rows(gb, j, d)
            images = []
            for v in vectors:
                acc = 0
                w = v
                while w:
                    b = w & -w
                    acc ^= rows[b.bit_length() - 1]
                    w ^= b
                images.append(acc)
            ncols = len(standard_monomials(gb, d + 1))
            combos = left_kernel_gf2(images, ncols)
            new_vectors = []
            for combo in combos:
                acc = 0
                w = combo
                while w:
                    b = w & -w
                    acc ^= vectors[b.bit_length() - 1]
                    w ^= b
                new_vectors.append(acc)
            vectors = new_vectors
            if not vectors:
                return 0
        return len(vectors)

    field = gb.ring.field
    # vectors as dicts over standard-monomial keys
    vectors = [{m: field.one} for m in std]
    index = {m: i for i, m in enumerate(std)}
    for j in range(nvars):
        rows = _variable_rows(gb, j, d)
        images = []
        for v in vectors:
            acc = {}
            for m, c in v.items():
                row = rows[index[m]]
                for k, ck in row.items():
                    w = field.add(acc.get(k, field.zero), field.mul(c, ck))
                    if w == field.zero:
                        acc.pop(k, None)
                    else:
                        acc[k] = w
            images.append(acc)
        combos = left_kernel(images, field)
        new_vectors = []
        for combo in combos:
            acc = {}
            for coeff, v in zip(combo, vectors):
                if coeff == field.zero:
                    continue
                for m, c in v.items():
                    w = field.add(acc.get(m, field.zero), field.mul(coeff, c))
                    if w == field.zero:
                        acc.pop(m, None)
                    else:
                        acc[m] = w
            new_vectors.append(acc)
        vectors = new_vectors
        if not vectors:
            return 0
    return len(vectors)


def is_gorenstein(x) -> bool:
    """True iff the artinian quotient has a one-dimensional socle."""
    st = socle_type(x)
    return sum(st) == 1 and st[-1] == 1 if st else False


# -- minimal generators ---------------------------------------------------------


def minimal_generator_counts(x) -> dict:
    """Number of minimal generators of the ideal in each degree, as a dict
    {degree: count} with only nonzero entries.

    Only degrees occurring in the reduced basis can carry minimal generators,
    so the linear algebra runs just there: in degree d the count is
    dim [I]_d - rank of { x_j * b : b basis of [I]_{d-1} }, and [I]_{d-1} has
    the triangular basis { m - NF(m) : m nonstandard of degree d-1 }.
    """
    gb = as_basis(x)

    def build():
        degree = gb.ring.codec.degree
        candidates = sorted({degree(k) for k in gb.lead_keys})
        out = {}
        for d in candidates:
            nu = _generator_count_at(gb, d)
            if nu:
                out[d] = nu
        return out

    return _cache(gb, "nu", build)


def _generator_count_at(gb: GroebnerBasis, d: int) -> int:
    codec = gb.ring.codec
    nonstd_d = nonstandard_monomials(gb, d)
    if not nonstd_d:
        return 0
    if d == 0:
        return len(nonstd_d)  # unit ideal
    nonstd_prev = nonstandard_monomials(gb, d - 1)
    nvars = gb.ring.nvars
    gf2 = gb.ring.field.p == 2

    if gf2:
        index = {m: i for i, m in enumerate(nonstd_d)}
        rows = []
        for m in nonstd_prev:
            nf_prev = _nf_terms(gb, m)
            for j in range(nvars):
                vk = codec.var_key(j)
                mask = 0
                t = codec.mul(vk, m)
                i = index.get(t)
                if i is not None:
                    mask ^= 1 << i
                for k, _ in nf_prev:
                    i = index.get(codec.mul(vk, k))
                    if i is not None:
                        mask ^= 1 << i
                if mask:
                    rows.append(mask)
        return len(nonstd_d) - rank_of_gf2(rows)

    field = gb.ring.field
    nonstd_set = set(nonstd_d)
    rows = []
    for m in nonstd_prev:
        nf_prev = _nf_terms(gb, m)
        for j in range(nvars):
            vk = codec.var_key(j)
            acc = {}
            t = codec.mul(vk, m)
            if t in nonstd_set:
                acc[t] = field.one
            for k, c in nf_prev:
                t = codec.mul(vk, k)
                if t in nonstd_set:
                    w = field.sub(acc.get(t, field.zero), c)
                    if w == field.zero:
                        acc.pop(t, None)
                    else:
                        acc[t] = w
            if acc:
                rows.append(acc)
    return len(nonstd_d) - rank_of(rows, field)


def presented_by_quadrics(x) -> bool:
    """True iff the ideal's minimal generators all sit in degree 2."""
    nu = minimal_generator_counts(x)
    return set(nu) == {2} if nu else False


def minimal_generators(x) -> tuple:
    """An explicit minimal generating set, degreewise: in each candidate
    degree, the elements m - NF(m) whose images enlarge the span of
    (linear forms) * (previous degree)."""
    gb = as_basis(x)

    def build():
        codec = gb.ring.codec
        field = gb.ring.field
        gf2 = field.p == 2
        degree = codec.degree
        one = field.one
        out = []
        for d in sorted({degree(k) for k in gb.lead_keys}):
            nonstd_d = nonstandard_monomials(gb, d)
            if not nonstd_d:
                continue
            if d == 0:
                out.append(gb.ring.one)
                continue
            nonstd_prev = nonstandard_monomials(gb, d - 1)
            nvars = gb.ring.nvars
            if gf2:
                index = {m: i for i, m in enumerate(nonstd_d)}
                ech = EchelonGF2()
                for m in nonstd_prev:
                    nf_prev = _nf_terms(gb, m)
                    for j in range(nvars):
                        vk = codec.var_key(j)
                        mask = 0
                        i = index.get(codec.mul(vk, m))
                        if i is not None:
                            mask ^= 1 << i
                        for k, _ in nf_prev:
                            i = index.get(codec.mul(vk, k))
                            if i is not None:
                                mask ^= 1 << i
                        ech.add(mask)
                for i, m in enumerate(nonstd_d):
                    # NF(m) is standard, so m - NF(m) touches nonstd_d in m only.
                    if ech.add(1 << i):
                        out.append(Polynomial(gb.ring, ((m, one),))
                                   - Polynomial(gb.ring, _nf_terms(gb, m)))
            else:
                nonstd_set = set(nonstd_d)
                ech = Echelon(field)
                for m in nonstd_prev:
                    nf_prev = _nf_terms(gb, m)
                    for j in range(nvars):
                        vk = codec.var_key(j)
                        acc = {}
                        t = codec.mul(vk, m)
                        if t in nonstd_set:
                            acc[t] = one
                        for k, c in nf_prev:
                            t = codec.mul(vk, k)
                            if t in nonstd_set:
                                w = field.sub(acc.get(t, field.zero), c)
                                if w == field.zero:
                                    acc.pop(t, None)
                                else:
                                    acc[t] = w
                        if acc:
                            ech.add(acc)
                for m in nonstd_d:
                    if ech.add({m: one}):
                        out.append(Polynomial(gb.ring, ((m, one),))
                                   - Polynomial(gb.ring, _nf_terms(gb, m)))
        return tuple(out)

    return _cache(gb, "mingens", build)


# -- classification --------------------------------------------------------------


def ideal_degree_basis(x, d: int) -> tuple:
    """A basis of the degree-d part of the ideal: one element m - NF(m) per
    non-standard monomial m of degree d."""
    gb = as_basis(x)
    return tuple(Polynomial(gb.ring, ((m, gb.ring.field.one),))
                 - Polynomial(gb.ring, _nf_terms(gb, m))
                 for m in nonstandard_monomials(gb, d))


def contains_quadric_regular_sequence(x, seed: int = 0,
                                      attempts: int = 5) -> bool:
    """Randomized test that the degree-2 part contains a regular sequence of
    nvars quadrics: seeded dense combinations of a degree-2 basis are
    accepted when the quotient by the drawn quadrics alone has the
    complete-intersection h-vector.  Failure on every attempt is evidence
    against, not a proof."""
    gb = as_basis(x)
    R = gb.ring
    n = R.nvars
    basis = ideal_degree_basis(gb, 2)
    if len(basis) < n:
        return False
    expected = HVector(tuple(math.comb(n, i) for i in range(n + 1)))
    rng = random.Random(seed)
    for _ in range(attempts):
        combos = []
        for _ in range(n):
            q = R.zero
            for b in basis:
                c = R.field.random(rng)
                if c != R.field.zero:
                    q = q + Polynomial(R, tuple((k, R.field.mul(c, v))
                                                for k, v in b.terms))
            combos.append(q)
        try:
            if hilbert_function(Ideal(R, combos)) == expected:
                return True
        except AlgebraError:
            continue
    return False


@dataclass(frozen=True)
class QuadricClassification:
    """Summary of one artinian quotient, as reported by the census and CLI.

    ``alpha`` is the quadric deficiency of the degree-2 part relative to a
    complete intersection's: binomial(h1, 2) - h2."""

    hvector: HVector
    socle_tuple: tuple | None
    generator_counts: dict
    gorenstein: bool | None
    presented_by_quadrics: bool
    had_linear_forms: bool = False
    contains_quadric_rs: bool | None = None

    @property
    def socle_degree(self) -> int:
        return self.hvector.socle_degree

    @property
    def embedding_dimension(self) -> int:
        return self.hvector.embedding_dimension

    @property
    def alpha(self) -> int:
        return math.comb(self.hvector[1], 2) - self.hvector[2]

    def __str__(self):
        bits = [str(self.hvector)]
        if self.gorenstein is not None:
            bits.append("gorenstein" if self.gorenstein else "not-gorenstein")
        bits.append("presented_by_quadrics" if self.presented_by_quadrics
                    else "not-presented-by-quadrics")
        bits.append(f"h2={self.hvector[2]}")
        return " ".join(bits)


def classify(x, with_socle: bool = True, with_quadric_rs: bool = False,
             seed: int = 0) -> QuadricClassification:
    """Classify an artinian quotient.  ``with_socle=False`` skips the socle
    computation (the most expensive step) and leaves ``socle_tuple`` and
    ``gorenstein`` as None; bulk sweeps that already know the socle shape
    use this.  ``with_quadric_rs=True`` additionally runs the randomized
    regular-sequence-of-quadrics test."""
    gb = as_basis(x)
    hv = hilbert_function(gb)
    nu = minimal_generator_counts(gb)
    st = socle_type(gb) if with_socle else None
    rs = (contains_quadric_regular_sequence(gb, seed=seed)
          if with_quadric_rs else None)
    return QuadricClassification(
        hvector=hv,
        socle_tuple=st,
        generator_counts=nu,
        gorenstein=(sum(st) == 1 and bool(st) and st[-1] == 1)
        if st is not None else None,
        presented_by_quadrics=(set(nu) == {2} if nu else False),
        had_linear_forms=1 in nu,
        contains_quadric_rs=rs,
    )
