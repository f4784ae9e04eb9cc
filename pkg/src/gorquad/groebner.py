"""Buchberger engine and the public Ideal / GroebnerBasis API.

The engine works on packed monomial keys (see orders.py) with two coefficient
kernels: dict {key: coeff} rows for QQ/GF(p), and plain key sets for GF(2),
where adding polynomials is a symmetric difference.  Pair selection is the
normal strategy (minimal lcm degree, then smallest lcm) with Gebauer-Moeller
pruning; the result is always the unique reduced Groebner basis, elements
monic and sorted descending by leading monomial.

Two guard rails:

  * degree_cap: raise CappedComputationError instead of processing any
    S-pair whose lcm degree exceeds the cap (the pair queue pops degrees in
    ascending order, so the first offending pop proves the cap is exceeded).
  * truncate_tail_at: silently skip pairs whose lcm exceeds the given degree
    in the codec's tail grading (total degree for plain orders, the
    non-eliminated block for elimination orders).  This is exact for inputs
    homogeneous in that grading; callers are expected to verify the result
    (e.g. via Hilbert-function checks) and may then certify it complete.
"""

from __future__ import annotations

import heapq
from bisect import insort

from .core import AlgebraError, CappedComputationError, RingMismatchError
from .orders import MAX_PACKED_DEGREE
from .poly import Polynomial, RingCtx

DEFAULT_DEGREE_CAP = 40


# -- coefficient kernels -------------------------------------------------------


class _GenericKernel:
    """Polynomials as {key: coeff} dicts over QQ or GF(p), p odd."""

    __slots__ = ("field", "codec")

    def __init__(self, field, codec):
        self.field = field
        self.codec = codec

    def from_terms(self, terms):
        return dict(terms)

    def to_terms(self, rep):
        return tuple(sorted(rep.items(), reverse=True))

    def is_zero(self, rep):
        return not rep

    def lm(self, rep):
        return max(rep)

    def split_monic(self, rep):
        """rep -> (lm, monic tail rep); consumes rep."""
        lm = max(rep)
        field = self.field
        inv = field.inv(rep.pop(lm))
        if inv == field.one:
            return lm, rep
        mul = field.mul
        return lm, {k: mul(inv, c) for k, c in rep.items()}

    def nf(self, rep, reducers):
        codec = self.codec
        div, mul, degree, divides = codec.div, codec.mul, codec.degree, codec.divides
        field = self.field
        fsub, fmul, zero = field.sub, field.mul, field.zero
        work = dict(rep)
        out = {}
        while work:
            k = max(work)
            c = work.pop(k)
            kd = degree(k)
            tail = None
            for ld, lkey, ltail in reducers:
                if ld > kd:
                    break
                if divides(lkey, k):
                    q = div(k, lkey)
                    tail = ltail
                    break
            if tail is None:
                out[k] = c
                continue
            for kt, ct in tail.items():
                t = mul(q, kt)
                w = fsub(work.get(t, zero), fmul(c, ct))
                if w == zero:
                    work.pop(t, None)
                else:
                    work[t] = w
        return out

    def spoly(self, fa, fb, lcm_key):
        codec = self.codec
        div, mul = codec.div, codec.mul
        field = self.field
        fsub, zero = field.sub, field.zero
        qa = div(lcm_key, fa[0])
        qb = div(lcm_key, fb[0])
        acc = {mul(qa, k): c for k, c in fa[1].items()}
        for k, c in fb[1].items():
            t = mul(qb, k)
            w = fsub(acc.get(t, zero), c)
            if w == zero:
                acc.pop(t, None)
            else:
                acc[t] = w
        return acc


class _GF2Kernel:
    """Polynomials as key sets over GF(2); addition is symmetric difference."""

    __slots__ = ("codec",)

    def __init__(self, codec):
        self.codec = codec

    def from_terms(self, terms):
        return {k for k, _ in terms}

    def to_terms(self, rep):
        return tuple((k, 1) for k in sorted(rep, reverse=True))

    def is_zero(self, rep):
        return not rep

    def lm(self, rep):
        return max(rep)

    def split_monic(self, rep):
        lm = max(rep)
        rep.discard(lm)
        return lm, rep

    def nf(self, rep, reducers):
        codec = self.codec
        div, mul, degree, divides = codec.div, codec.mul, codec.degree, codec.divides
        work = set(rep)
        out = set()
        while work:
            k = max(work)
            work.discard(k)
            kd = degree(k)
            tail = None
            for ld, lkey, ltail in reducers:
                if ld > kd:
                    break
                if divides(lkey, k):
                    q = div(k, lkey)
                    tail = ltail
                    break
            if tail is None:
                out.add(k)
                continue
            work.symmetric_difference_update([mul(q, kt) for kt in tail])
        return out

    def spoly(self, fa, fb, lcm_key):
        codec = self.codec
        div, mul = codec.div, codec.mul
        qa = div(lcm_key, fa[0])
        qb = div(lcm_key, fb[0])
        acc = {mul(qa, k) for k in fa[1]}
        acc.symmetric_difference_update([mul(qb, k) for k in fb[1]])
        return acc


def _kernel_for(ring: RingCtx):
    if ring.field.p == 2:
        return _GF2Kernel(ring.codec)
    return _GenericKernel(ring.field, ring.codec)


# -- the engine ----------------------------------------------------------------


def _gf2_tail_tuple(tail):
    return tuple(tail) if isinstance(tail, set) else tail


def _compute_basis(ring: RingCtx, polys, degree_cap: int, truncate_tail_at):
    codec = ring.codec
    kernel = _kernel_for(ring)
    degree, divides, lcm = codec.degree, codec.divides, codec.lcm
    tail_degree = codec.tail_degree
    gf2 = isinstance(kernel, _GF2Kernel)

    G = []          # (lm, tail_rep)
    lm_degs = []    # degree of each lm, parallel to G
    reducers = []   # (lm_degree, lm, tail_rep), ascending, shared objects
    heap = []       # (lcm_degree, lcm_key, i, j)
    active = {}     # (i, j) -> lcm_key

    def install(lm, tail):
        """Add a monic element, wire up reducers, and run the pair update."""
        if gf2:
            tail = _gf2_tail_tuple(tail)
        h = len(G)
        lm_deg = degree(lm)
        G.append((lm, tail))
        lm_degs.append(lm_deg)
        insort(reducers, (lm_deg, lm, tail), key=lambda e: (e[0], e[1]))

        # Gebauer-Moeller pruning of the candidate pairs (i, h).
        lcms = [lcm(G[i][0], lm) for i in range(h)]
        kept = []
        for i in range(h):
            li = lcms[i]
            drop = False
            for j in range(h):
                if j == i:
                    continue
                lj = lcms[j]
                if lj == li:
                    if j < i:
                        drop = True
                        break
                elif divides(lj, li):
                    drop = True
                    break
            if not drop:
                kept.append(i)
        for i in kept:
            li = lcms[i]
            li_deg = degree(li)
            # Buchberger's coprime criterion, applied classwise: if any pair
            # sharing this lcm has coprime leading monomials, the whole class
            # reduces to zero.
            coprime = any(
                lcms[j] == li and li_deg == lm_degs[j] + lm_deg
                for j in range(h))
            if coprime:
                continue
            active[(i, h)] = li
            heapq.heappush(heap, (li_deg, li, i, h))
        # Chain criterion against pairs that predate h.
        if h:
            for key_ij in [kij for kij, l in active.items()
                           if kij[1] != h
                           and divides(lm, l)
                           and lcm(G[kij[0]][0], lm) != l
                           and lcm(G[kij[1]][0], lm) != l]:
                del active[key_ij]

    # Seed with the inputs, normal-formed against what is already there.
    inputs = [p for p in polys if not p.is_zero()]
    inputs.sort(key=lambda q: q.terms[0][0])
    for p in inputs:
        if p.degree() > degree_cap:
            raise CappedComputationError(degree_cap, p.degree())
        rep = kernel.nf(kernel.from_terms(p.terms), reducers)
        if kernel.is_zero(rep):
            continue
        lm = kernel.lm(rep)
        if truncate_tail_at is not None and tail_degree(lm) > truncate_tail_at:
            continue
        install(*kernel.split_monic(rep))

    while heap:
        d, l, i, j = heapq.heappop(heap)
        if active.pop((i, j), None) is None:
            continue
        if truncate_tail_at is not None and tail_degree(l) > truncate_tail_at:
            continue
        if d > degree_cap:
            raise CappedComputationError(degree_cap, d)
        s = kernel.nf(kernel.spoly(G[i], G[j], l), reducers)
        if kernel.is_zero(s):
            continue
        lm = kernel.lm(s)
        if truncate_tail_at is not None and tail_degree(lm) > truncate_tail_at:
            continue
        install(*kernel.split_monic(s))

    return _reduce_basis(ring, kernel, G)


def _reduce_basis(ring: RingCtx, kernel, entries):
    """Minimalize and tail-reduce (lm, monic tail rep) entries that are known
    to form a Groebner basis; the result is the unique reduced basis."""
    codec = ring.codec
    degree, divides = codec.degree, codec.divides

    # Minimalize: keep exactly the elements whose lm no other kept lm divides.
    minimal = []
    for lm_deg, lm, tail in sorted(
            ((degree(lm), lm, tail) for lm, tail in entries),
            key=lambda e: (e[0], e[1])):
        if any(divides(k_lm, lm) for _, k_lm, _ in minimal):
            continue
        minimal.append((lm_deg, lm, tail))

    # Interreduce tails; full normal form against minimal lms is canonical.
    one = ring.field.one
    elements = []
    for _, lm, tail in minimal:
        tail_nf = kernel.nf(tail, minimal)
        elements.append(Polynomial(ring, ((lm, one),) + kernel.to_terms(tail_nf)))
    elements.sort(key=lambda p: p.terms[0][0], reverse=True)
    return tuple(elements)


def interreduce_known_basis(ring: RingCtx, polys, degree_cap: int = DEFAULT_DEGREE_CAP,
                            truncated_at=None) -> GroebnerBasis:
    """Build the reduced-basis object from polynomials the caller knows form
    a Groebner basis already (no S-pair processing)."""
    kernel = _kernel_for(ring)
    gf2 = isinstance(kernel, _GF2Kernel)
    entries = []
    for p in polys:
        if p.is_zero():
            continue
        lm, tail = kernel.split_monic(kernel.from_terms(p.terms))
        entries.append((lm, _gf2_tail_tuple(tail) if gf2 else tail))
    elements = _reduce_basis(ring, kernel, entries)
    return GroebnerBasis(ring, elements, degree_cap, truncated_at)


# -- public API ----------------------------------------------------------------


class GroebnerBasis:
    """A reduced Groebner basis; elements monic, descending by leading term."""

    __slots__ = ("ring", "elements", "lead_keys", "degree_cap", "truncated_at",
                 "_kernel", "_reducers", "_caches")

    def __init__(self, ring: RingCtx, elements: tuple, degree_cap: int,
                 truncated_at=None):
        self.ring = ring
        self.elements = elements
        self.lead_keys = tuple(p.terms[0][0] for p in elements)
        self.degree_cap = degree_cap
        self.truncated_at = truncated_at
        self._kernel = None
        self._reducers = None
        self._caches = {}

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def _machinery(self):
        if self._kernel is None:
            kernel = _kernel_for(self.ring)
            degree = self.ring.codec.degree
            reducers = []
            for p in self.elements:
                lm = p.terms[0][0]
                tail = kernel.from_terms(p.terms[1:])
                if isinstance(kernel, _GF2Kernel):
                    tail = tuple(tail)
                reducers.append((degree(lm), lm, tail))
            reducers.sort(key=lambda e: (e[0], e[1]))
            self._kernel = kernel
            self._reducers = reducers
        return self._kernel, self._reducers

    def _check_within_truncation(self, p: Polynomial):
        if self.truncated_at is None or p.is_zero():
            return
        tail_degree = self.ring.codec.tail_degree
        worst = max(tail_degree(k) for k, _ in p.terms)
        if worst > self.truncated_at:
            raise AlgebraError(
                f"normal form of degree {worst} requested from a basis "
                f"truncated at degree {self.truncated_at}")

    def normal_form(self, p: Polynomial) -> Polynomial:
        if p.ring != self.ring:
            raise RingMismatchError("polynomial is not in the basis ring")
        self._check_within_truncation(p)
        kernel, reducers = self._machinery()
        rep = kernel.nf(kernel.from_terms(p.terms), reducers)
        return Polynomial(self.ring, kernel.to_terms(rep))

    def contains(self, p: Polynomial) -> bool:
        return self.normal_form(p).is_zero()

    def reduces_to_zero(self, p: Polynomial) -> bool:
        return self.contains(p)

    def leading_term_ideal(self) -> tuple:
        one = self.ring.field.one
        return tuple(Polynomial(self.ring, ((k, one),)) for k in self.lead_keys)

    def generator_degrees(self) -> tuple:
        """Sorted degrees of the reduced-basis elements."""
        degree = self.ring.codec.degree
        return tuple(sorted(degree(k) for k in self.lead_keys))

    def certify_complete(self) -> bool:
        """Promote a truncated basis to a complete one if every monomial at
        the truncation degree is a leading-term multiple (which bounds the
        degrees of all reduced-basis elements below the truncation)."""
        if self.truncated_at is None:
            return True
        if self.ring.order.kind == "block":
            return False  # only meaningful when the tail grading is total degree
        t = self.truncated_at
        codec = self.ring.codec
        divides = codec.divides
        leads = self.lead_keys
        for m in self.ring.monomials_of_degree(t):
            if not any(divides(lk, m) for lk in leads):
                return False
        self.truncated_at = None
        return True

    def __str__(self):
        tag = "" if self.truncated_at is None else f" (truncated at {self.truncated_at})"
        return f"GroebnerBasis<{len(self.elements)} elements over {self.ring}{tag}>"

    __repr__ = __str__


class Ideal:
    """A homogeneous ideal given by generators, with cached Groebner bases."""

    __slots__ = ("ring", "gens", "_gb_cache")

    def __init__(self, ring_: RingCtx, gens, require_homogeneous: bool = True):
        gens = tuple(gens)
        seen = set()
        kept = []
        for g in gens:
            if not isinstance(g, Polynomial):
                raise TypeError("ideal generators must be polynomials")
            if g.ring != ring_:
                raise RingMismatchError("generator from a different ring")
            if g.is_zero():
                continue
            if require_homogeneous and not g.is_homogeneous():
                raise AlgebraError(f"inhomogeneous generator: {g}")
            if g.terms not in seen:
                seen.add(g.terms)
                kept.append(g)
        self.ring = ring_
        self.gens = tuple(kept)
        self._gb_cache = {}

    @classmethod
    def from_texts(cls, ring_: RingCtx, texts) -> "Ideal":
        return cls(ring_, [ring_.parse(t) for t in texts])

    def groebner(self, degree_cap: int | None = None,
                 truncate_tail_at: int | None = None) -> GroebnerBasis:
        cap = DEFAULT_DEGREE_CAP if degree_cap is None else degree_cap
        if not 1 <= cap <= MAX_PACKED_DEGREE:
            raise ValueError(
                f"degree cap must be in [1, {MAX_PACKED_DEGREE}], got {cap}")
        key = (cap, truncate_tail_at)
        gb = self._gb_cache.get(key)
        if gb is None:
            elements = _compute_basis(self.ring, self.gens, cap, truncate_tail_at)
            gb = GroebnerBasis(self.ring, elements, cap, truncate_tail_at)
            self._gb_cache[key] = gb
        return gb

    def attach_groebner(self, gb: GroebnerBasis):
        """Record a basis computed elsewhere (e.g. read off an elimination)
        as this ideal's default basis."""
        if gb.ring != self.ring:
            raise RingMismatchError("basis ring does not match ideal ring")
        self._gb_cache[(gb.degree_cap, gb.truncated_at)] = gb
        if gb.truncated_at is None:
            self._gb_cache[(DEFAULT_DEGREE_CAP, None)] = gb

    def normal_form(self, p: Polynomial, **kw) -> Polynomial:
        return self.groebner(**kw).normal_form(p)

    def contains(self, p: Polynomial, **kw) -> bool:
        return self.groebner(**kw).contains(p)

    def __str__(self):
        inside = ", ".join(str(g) for g in self.gens[:6])
        if len(self.gens) > 6:
            inside += f", ... ({len(self.gens)} gens)"
        return f"({inside})"

    __repr__ = __str__


def groebner(ideal: Ideal, degree_cap: int | None = None) -> GroebnerBasis:
    return ideal.groebner(degree_cap=degree_cap)


def normal_form(p: Polynomial, gb: GroebnerBasis) -> Polynomial:
    return gb.normal_form(p)


def leading_term_ideal(gb: GroebnerBasis) -> tuple:
    return gb.leading_term_ideal()
