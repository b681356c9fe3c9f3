"""Sparse exact Gaussian elimination over an abstract field.

Rows are dicts mapping column index to a nonzero coefficient.  This is
the workhorse behind the per-degree cotangent computations, where the
matrices are small but must be handled exactly.
"""

from __future__ import annotations


class Echelon:
    """Incremental row echelon form.

    Rows added to the echelon are normalized to pivot coefficient 1 and
    stored by pivot column.  `reduce` eliminates a vector against the
    current rows without modifying them.
    """

    def __init__(self, field):
        self.field = field
        self.pivots = {}  # col -> normalized row

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: dict) -> dict:
        """Return row minus its projection onto the echelon span."""
        fld = self.field
        r = dict(row)
        while r:
            c = min(r)
            piv = self.pivots.get(c)
            if piv is None:
                return r
            factor = r[c]
            for col, coeff in piv.items():
                val = fld.sub(r.get(col, fld.zero), fld.mul(factor, coeff))
                if val:
                    r[col] = val
                else:
                    r.pop(col, None)
        return r

    def add(self, row: dict) -> bool:
        """Reduce and insert a row; True if it enlarged the span."""
        r = self.reduce(row)
        if not r:
            return False
        fld = self.field
        c = min(r)
        inv = fld.inv(r[c])
        self.pivots[c] = {col: fld.mul(inv, v) for col, v in r.items()}
        return True

    def contains(self, row: dict) -> bool:
        return not self.reduce(row)


def rank(rows, field) -> int:
    ech = Echelon(field)
    for row in rows:
        if row:
            ech.add(row)
    return ech.rank


def nullspace(rows, ncols: int, field) -> list[dict]:
    """Basis of {x in k^ncols : row . x = 0 for every row}.

    Returns sparse column vectors as dicts.  The basis is the reduced
    echelon one: each vector has entry 1 at its free column.
    """
    ech = Echelon(field)
    for row in rows:
        if row:
            ech.add(row)
    # back-substitute to full RREF
    rref = {}
    for c in sorted(ech.pivots, reverse=True):
        row = ech.pivots[c]
        r = dict(row)
        for col in [col for col in row if col != c and col in rref]:
            factor = r.get(col)
            if not factor:
                continue
            for c2, v2 in rref[col].items():
                val = field.sub(r.get(c2, field.zero), field.mul(factor, v2))
                if val:
                    r[c2] = val
                else:
                    r.pop(c2, None)
        rref[c] = r
    basis = []
    pivot_cols = set(rref)
    for free in range(ncols):
        if free in pivot_cols:
            continue
        vec = {free: field.one}
        for c, row in rref.items():
            coeff = row.get(free)
            if coeff:
                vec[c] = field.neg(coeff)
        basis.append(vec)
    return basis


def solve(rows, rhs, field):
    """One solution x of rows . x = rhs, or None if inconsistent.

    rows: list of sparse row dicts; rhs: list of field elements aligned
    with rows.  Columns are whatever indices appear in the rows.
    """
    ech = Echelon(field)
    # augment: carry rhs as an extra coordinate keyed by a non-int sentinel
    AUG = "rhs"
    for row, b in zip(rows, rhs):
        r = dict(row)
        if b:
            r[AUG] = b

        # min() over mixed int/str keys fails; keep AUG out of pivot choice
        def reduce_aug(r):
            fld = field
            while True:
                cols = [c for c in r if c != AUG]
                if not cols:
                    return r
                c = min(cols)
                piv = ech.pivots.get(c)
                if piv is None:
                    return r
                factor = r[c]
                for col, coeff in piv.items():
                    val = fld.sub(r.get(col, fld.zero), fld.mul(factor, coeff))
                    if val:
                        r[col] = val
                    else:
                        r.pop(col, None)

        r = reduce_aug(r)
        cols = [c for c in r if c != AUG]
        if not cols:
            if r.get(AUG):
                return None  # inconsistent
            continue
        c = min(cols)
        inv = field.inv(r[c])
        ech.pivots[c] = {col: field.mul(inv, v) for col, v in r.items()}
    # back substitution: express pivot variables, free ones set to 0
    sol = {}
    for c in sorted(ech.pivots, reverse=True):
        row = ech.pivots[c]
        val = row.get(AUG, field.zero)
        acc = val
        for col, coeff in row.items():
            if col in (c, AUG):
                continue
            if col in sol and sol[col]:
                acc = field.sub(acc, field.mul(coeff, sol[col]))
        sol[c] = acc
    return sol
