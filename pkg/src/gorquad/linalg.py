"""Exact sparse linear algebra over the coefficient fields.

Rows are dicts {column: coeff} with totally ordered column labels (monomial
keys in practice).  Over GF(2) there are bitmask variants: a row is an int
whose bit j corresponds to column j in some caller-chosen enumeration.

left_kernel(rows) returns a basis of vectors v with sum_i v[i]*rows[i] == 0,
i.e. the kernel of the linear map whose images are the given rows.
"""

from __future__ import annotations

from .core import FieldSpec


def _axpy(dst: dict, c, src: dict, field: FieldSpec):
    """dst += c * src, dropping zeros."""
    add, mul, zero = field.add, field.mul, field.zero
    for k, v in src.items():
        w = add(dst.get(k, zero), mul(c, v))
        if w == zero:
            dst.pop(k, None)
        else:
            dst[k] = w


class Echelon:
    """Incremental row echelon over QQ or GF(p); tracks rank only."""

    __slots__ = ("field", "pivots", "rank")

    def __init__(self, field: FieldSpec):
        self.field = field
        self.pivots = {}
        self.rank = 0

    def add(self, row: dict) -> bool:
        """Insert a row; returns True iff it enlarged the span."""
        field = self.field
        work = dict(row)
        while work:
            p = max(work)
            hit = self.pivots.get(p)
            if hit is None:
                inv = field.inv(work[p])
                if inv != field.one:
                    work = {k: field.mul(inv, v) for k, v in work.items()}
                self.pivots[p] = work
                self.rank += 1
                return True
            _axpy(work, field.neg(work[p]), hit, field)
        return False

    def reduce(self, row: dict) -> dict:
        """Remainder of row modulo the current span (row unchanged)."""
        field = self.field
        work = dict(row)
        while work:
            p = max(work)
            hit = self.pivots.get(p)
            if hit is None:
                return work
            _axpy(work, field.neg(work[p]), hit, field)
        return work


def rank_of(rows, field: FieldSpec) -> int:
    ech = Echelon(field)
    for r in rows:
        ech.add(r)
    return ech.rank


def left_kernel(rows, field: FieldSpec) -> list:
    """Basis of {v : sum_i v[i]*rows[i] == 0}, as coefficient tuples."""
    rows = list(rows)
    n = len(rows)
    zero, one = field.zero, field.one
    pivots = {}
    kernel = []
    for i, r in enumerate(rows):
        main = dict(r)
        aug = {i: one}
        while main:
            p = max(main)
            hit = pivots.get(p)
            if hit is None:
                break
            c = field.neg(main[p])
            _axpy(main, c, hit[0], field)
            _axpy(aug, c, hit[1], field)
        if main:
            inv = field.inv(main[max(main)])
            if inv != one:
                main = {k: field.mul(inv, v) for k, v in main.items()}
                aug = {k: field.mul(inv, v) for k, v in aug.items()}
            pivots[max(main)] = (main, aug)
        else:
            kernel.append(tuple(aug.get(j, zero) for j in range(n)))
    return kernel


class EchelonGF2:
    """Incremental echelon for GF(2) bitmask rows."""

    __slots__ = ("pivots", "rank")

    def __init__(self):
        self.pivots = {}
        self.rank = 0

    def add(self, mask: int) -> bool:
        while mask:
            p = mask.bit_length() - 1
            hit = self.pivots.get(p)
            if hit is None:
                self.pivots[p] = mask
                self.rank += 1
                return True
            mask ^= hit
        return False

    def reduce(self, mask: int) -> int:
        while mask:
            p = mask.bit_length() - 1
            hit = self.pivots.get(p)
            if hit is None:
                return mask
            mask ^= hit
        return 0


def rank_of_gf2(masks) -> int:
    ech = EchelonGF2()
    for m in masks:
        ech.add(m)
    return ech.rank


def left_kernel_gf2(masks, ncols: int) -> list:
    """Kernel basis as bitmasks over row indices (bit i <-> masks[i])."""
    main_mask = (1 << ncols) - 1
    pivots = {}
    kernel = []
    for i, m in enumerate(masks):
        row = (m & main_mask) | (1 << (ncols + i))
        while True:
            main = row & main_mask
            if not main:
                kernel.append(row >> ncols)
                break
            p = main.bit_length() - 1
            hit = pivots.get(p)
            if hit is None:
                pivots[p] = row
                break
            row ^= hit
    return kernel
