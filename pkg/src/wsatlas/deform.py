"""Deformation computations at desk scale.

Three pipelines over a monomial curve:

  first_order_family     perturb the generators by graded normal-module
                         representatives and lift the relation matrix to
                         first order in the deformation variables
  quadratic_base_equations
                         second-order obstructions: for every pair of
                         first-order directions, reduce the defect
                         against the curve ideal and read its class in
                         the obstruction quotient, giving the quadratic
                         part of the base equations
  hauser_unfolding / hauser_flatness_equations
                         unfold the multiplication-table equations by
                         every lower-degree monomial of the Apéry span,
                         multiply with the unperturbed relations, reduce
                         against the unfolded list only, and harvest the
                         coefficient polynomials; their locus is where
                         the unfolding stays flat

Deformation variables carry positive weights (weight e for a
degree-(d-e) perturbation of a degree-d generator) and every produced
equation is homogeneous for those weights.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .cotangent import cotangent_data
from .curve import MonomialCurve
from .errors import WsatlasError
from .grading import GradedDims
from .groebner import krull_dimension
from .linalg import Echelon, nullspace
from .modules import divide, make_element, vec_component
from .polyring import Polynomial, WeightedRing, reduce_by_set


@dataclass(frozen=True)
class DeformVar:
    name: str
    weight: int


@dataclass
class BaseIdeal:
    """Equations on the deformation parameters."""

    ring: WeightedRing  # deformation variables only
    equations: tuple[Polynomial, ...]
    truncation_order: int | None  # 2 for the quadratic part, None for flat loci

    def __post_init__(self):
        zero = self.ring.zero_exps()
        for eq in self.equations:
            assert zero not in eq.terms, "base equation does not vanish at 0"
            assert eq.is_homogeneous(), "base equation is not weight homogeneous"

    @property
    def variables(self) -> tuple[DeformVar, ...]:
        return tuple(
            DeformVar(n, w) for n, w in zip(self.ring.names, self.ring.weights)
        )

    def to_json(self) -> dict:
        return {
            "variables": [
                {"name": n, "weight": w}
                for n, w in zip(self.ring.names, self.ring.weights)
            ],
            "equations": [str(e) for e in self.equations],
            "truncation_order": self.truncation_order,
        }


@dataclass
class Representative:
    degree: int  # T1 degree (negative for negative-weight deformations)
    weight: int  # deformation-variable weight, = -degree
    vector: tuple[Polynomial, ...]  # one entry per ideal generator


def t1_representatives(C: MonomialCurve, degrees: str = "negative-only"):
    """Deterministic graded basis of T1 over the minimal presentation.

    Representative vectors use the canonical Apéry monomials; kernel
    vectors are taken in echelon order and kept when they extend the
    span of the trivial (derivation) deformations.
    """
    if degrees not in ("negative-only", "all"):
        raise WsatlasError(f"unknown degree mode {degrees!r}")
    ring = C.ring
    fld = ring.field
    S = C.semigroup
    ap = C.apery_form()
    res = C.resolution()
    gen_degs = list(C.generator_degrees)
    k = len(C.ideal)
    rel = res.matrices[1] if len(res.matrices) > 1 else []
    rel_degs = res.shifts[2] if len(res.shifts) > 2 else []
    rel_rows = [dict() for _ in range(k)]
    for j, col in enumerate(rel):
        for i in range(k):
            acc = fld.zero
            for c in vec_component(col, i).values():
                acc = fld.add(acc, c)
            if acc:
                rel_rows[i][j] = acc
    jac = []
    for w in range(ring.nvars):
        colv = {}
        for i, f in enumerate(C.ideal):
            acc = fld.zero
            for exps, c in f.terms.items():
                if exps[w]:
                    acc = fld.add(acc, fld.mul(fld.of(exps[w]), c))
            if acc:
                colv[i] = acc
        jac.append(colv)

    deltas = gen_degs + list(rel_degs) + list(ring.weights)
    nu_stop = -1 if degrees == "negative-only" else S.conductor - min(deltas)
    reps = []
    for nu in range(-max(gen_degs), nu_stop + 1):
        active = [i for i, d in enumerate(gen_degs) if S.contains(d + nu)]
        if not active:
            continue
        pos_of = {i: p for p, i in enumerate(active)}
        rows = []
        for j, e in enumerate(rel_degs):
            if not S.contains(e + nu):
                continue
            row = {}
            for i in active:
                v = rel_rows[i].get(j)
                if v:
                    row[pos_of[i]] = v
            if row:
                rows.append(row)
        kernel = nullspace(rows, len(active), fld)
        if not kernel:
            continue
        triv = Echelon(fld)
        for w, wt in enumerate(ring.weights):
            if not S.contains(nu + wt):
                continue
            vec = {pos_of[i]: v for i, v in jac[w].items() if i in pos_of}
            if vec:
                triv.add(vec)
        for v in kernel:
            if not triv.add(v):
                continue
            polys = []
            for i in range(k):
                p = pos_of.get(i)
                if p is None or p not in v:
                    polys.append(ring.zero())
                else:
                    mono = ap.canonical_exps(gen_degs[i] + nu)
                    polys.append(ring.monomial(mono, v[p]))
            reps.append(Representative(nu, -nu, tuple(polys)))
    return reps


def _deformation_names(reps):
    names = []
    used = {}
    for r in reps:
        base = f"t{r.weight}"
        n = used.get(base, 0)
        used[base] = n + 1
        names.append(base if n == 0 else f"{base}_{n + 1}")
    return names


@dataclass
class DeformationFamily:
    curve: MonomialCurve
    ring: WeightedRing  # curve variables followed by deformation variables
    F: tuple[Polynomial, ...]
    R: tuple | None  # columns; each column is a tuple of Polynomial entries
    base_names: tuple[str, ...]
    base_weights: tuple[int, ...]
    kind: str  # "first-order" | "unfolding"
    relations: tuple | None = None  # unperturbed relation columns (unfolding)

    @property
    def ncurve(self) -> int:
        return self.curve.ring.nvars

    def base_ring(self) -> WeightedRing:
        return WeightedRing(self.base_names, self.base_weights, "wgrevlex")

    def specialized_to_zero(self) -> list[Polynomial]:
        """Set every deformation variable to 0, back in the curve ring."""
        n = self.ncurve
        ring0 = self.curve.ring
        out = []
        for f in self.F:
            terms = {}
            for e, c in f.terms.items():
                if any(e[n:]):
                    continue
                terms[e[:n]] = c
            out.append(Polynomial(ring0, terms))
        return out

    def substitute(self, assignments: dict) -> "DeformationFamily":
        """Replace deformation variables by constants (typically 0).

        The returned family lives in a fresh ring without the bound
        variables, so downstream variable counts stay meaningful.
        """
        ring = self.ring
        n = self.ncurve
        idx = {}
        for name, value in assignments.items():
            if name not in self.base_names:
                raise WsatlasError(f"{name} is not a deformation variable")
            idx[ring.index(name)] = ring.monomial(ring.zero_exps(), value) \
                if value else ring.zero()
        newF = [f.substitute(idx) for f in self.F]
        keep = [i for i in range(ring.nvars) if i not in idx]
        names = tuple(ring.names[i] for i in keep)
        weights = tuple(ring.weights[i] for i in keep)
        perm_positions = {old: new for new, old in enumerate(keep)}
        perm = tuple(
            perm_positions[i] for i in ring.permutation if i in perm_positions
        )
        small = WeightedRing(names, weights, ring.order, perm, ring.p)

        def shrink(p):
            return Polynomial(
                small, {tuple(e[i] for i in keep): c for e, c in p.terms.items()}
            )

        newR = None
        if self.R is not None:
            newR = tuple(
                tuple(shrink(entry) for entry in col) for col in
                (tuple(col) for col in self.R)
            )
        rel = None
        if self.relations is not None:
            rel = tuple(
                tuple(shrink(entry) for entry in col) for col in self.relations
            )
        return DeformationFamily(
            self.curve, small, tuple(shrink(f) for f in newF), newR,
            tuple(nm for nm in self.base_names if nm not in assignments),
            tuple(
                w for nm, w in zip(self.base_names, self.base_weights)
                if nm not in assignments
            ),
            self.kind, rel,
        )


def _combined_ring(C: MonomialCurve, names, weights) -> WeightedRing:
    ring0 = C.ring
    n = ring0.nvars
    all_names = ring0.names + tuple(names)
    all_weights = ring0.weights + tuple(weights)
    perm0 = ring0.permutation or tuple(range(n))
    perm = tuple(perm0) + tuple(range(n, n + len(names)))
    return WeightedRing(all_names, all_weights, "wgrevlex", perm, ring0.p)


def _lift(p: Polynomial, ring: WeightedRing, n_extra: int) -> Polynomial:
    pad = (0,) * n_extra
    return Polynomial(ring, {e + pad: c for e, c in p.terms.items()})


def first_order_family(C: MonomialCurve, degrees: str = "negative-only"):
    """F = f + sum t_a f'_a and R = r + sum t_a r'_a with F.R = 0 to
    first order in the deformation variables."""
    reps = t1_representatives(C, degrees)
    names = _deformation_names(reps)
    ring = _combined_ring(C, names, [r.weight for r in reps])
    n0 = C.ring.nvars
    nt = len(reps)
    res = C.resolution()
    rel = res.matrices[1] if len(res.matrices) > 1 else []
    k = len(C.ideal)
    gb_elements, F0 = C.tracked_basis()

    F = []
    for i, f in enumerate(C.ideal):
        acc = _lift(f, ring, nt)
        for a, rep in enumerate(reps):
            if rep.vector[i]:
                tvar = ring.variable(n0 + a)
                acc = acc + tvar * _lift(rep.vector[i], ring, nt)
        F.append(acc)

    # relation columns as polynomial tuples
    r_cols = []
    for col in rel:
        r_cols.append(
            tuple(
                Polynomial(C.ring, dict(vec_component(col, i)))
                for i in range(k)
            )
        )

    # first-order lift r'_a from f . r'_a = - f'_a . r, via the tracked basis
    fld = C.ring.field
    corrections = []  # corrections[a][j] = column vector over generators
    for rep in reps:
        cols = []
        for col in r_cols:
            p = C.ring.zero()
            for i in range(k):
                if rep.vector[i] and col[i]:
                    p = p + rep.vector[i] * col[i]
            from .modules import poly_to_vec

            nf, q = divide(poly_to_vec(p), gb_elements, F0, want_quotients=True)
            assert not nf, "first-order defect is not in the curve ideal"
            coeffs = [C.ring.zero() for _ in range(k)]
            for m, qd in enumerate(q):
                if not qd:
                    continue
                tracker = gb_elements[m].tracker or {}
                for i, tp in tracker.items():
                    prod = Polynomial(C.ring, dict(qd)) * Polynomial(C.ring, dict(tp))
                    coeffs[i] = coeffs[i] + prod
            cols.append(tuple(-c for c in coeffs))
        corrections.append(cols)

    R = []
    for j in range(len(r_cols)):
        entries = []
        for i in range(k):
            acc = _lift(r_cols[j][i], ring, nt)
            for a in range(nt):
                corr = corrections[a][j][i]
                if corr:
                    acc = acc + ring.variable(n0 + a) * _lift(corr, ring, nt)
            entries.append(acc)
        R.append(tuple(entries))

    fam = DeformationFamily(
        C, ring, tuple(F), tuple(R), tuple(names),
        tuple(r.weight for r in reps), "first-order",
    )
    fam._reps = reps
    fam._corrections = corrections
    return fam


def _rref(rows, fld):
    """Full reduced echelon; returns list of (pivot, row) sorted by pivot."""
    ech = Echelon(fld)
    for r in rows:
        ech.add(r)
    pivots = sorted(ech.pivots)
    out = {}
    for c in reversed(pivots):
        row = dict(ech.pivots[c])
        for c2 in [c2 for c2 in list(row) if c2 != c and c2 in out]:
            factor = row.get(c2)
            if not factor:
                continue
            for c3, v3 in out[c2].items():
                val = fld.sub(row.get(c3, fld.zero), fld.mul(factor, v3))
                if val:
                    row[c3] = val
                else:
                    row.pop(c3, None)
        out[c] = row
    return [(c, out[c]) for c in pivots]


def quadratic_base_equations(C: MonomialCurve) -> BaseIdeal:
    """Quadratic part of the base equations from pairwise obstructions."""
    fam = first_order_family(C, "negative-only")
    reps = fam._reps
    corrections = fam._corrections
    S = C.semigroup
    ring0 = C.ring
    fld = ring0.field
    gb = C.reduced_gb()
    res = C.resolution()
    rel = res.matrices[1] if len(res.matrices) > 1 else []
    rel_degs = res.shifts[2] if len(res.shifts) > 2 else []
    k = len(C.ideal)
    nrel = len(rel)
    rel_rows = [dict() for _ in range(k)]
    for j, col in enumerate(rel):
        for i in range(k):
            acc = fld.zero
            for c in vec_component(col, i).values():
                acc = fld.add(acc, c)
            if acc:
                rel_rows[i][j] = acc

    base_ring = fam.base_ring()
    if not reps or not rel:
        return BaseIdeal(base_ring, (), 2)

    by_degree: dict[int, list] = {}
    for a in range(len(reps)):
        for b in range(a, len(reps)):
            nu = reps[a].degree + reps[b].degree
            beta = {}
            for j in range(nrel):
                if a == b:
                    p = ring0.zero()
                    for i in range(k):
                        if reps[a].vector[i] and corrections[a][j][i]:
                            p = p + reps[a].vector[i] * corrections[a][j][i]
                else:
                    p = ring0.zero()
                    for i in range(k):
                        if reps[a].vector[i] and corrections[b][j][i]:
                            p = p + reps[a].vector[i] * corrections[b][j][i]
                        if reps[b].vector[i] and corrections[a][j][i]:
                            p = p + reps[b].vector[i] * corrections[a][j][i]
                if not p:
                    continue
                residue = gb.normal_form(p)
                if not residue:
                    continue
                assert residue.is_homogeneous()
                assert S.contains(rel_degs[j] + nu), (
                    "nonzero obstruction residue in a vanishing slice"
                )
                beta[j] = residue.coefficient_sum()
            by_degree.setdefault(nu, []).append((a, b, beta))

    equations = []
    for nu in sorted(by_degree):
        entries = by_degree[nu]
        active = {j for j, e in enumerate(rel_degs) if S.contains(e + nu)}
        W = Echelon(fld)
        for i, d in enumerate(C.generator_degrees):
            if not S.contains(d + nu):
                continue
            row = {j: v for j, v in rel_rows[i].items() if j in active}
            if row:
                W.add(row)
        reduced = []
        for a, b, beta in entries:
            r = W.reduce(beta)
            if r:
                reduced.append((a, b, r))
        if not reduced:
            continue
        basis = _rref([r for _, _, r in reduced], fld)
        coeffs = {p: {} for p, _ in basis}
        for a, b, r in reduced:
            r = dict(r)
            for pivot, row in basis:
                c = r.get(pivot)
                if not c:
                    continue
                coeffs[pivot][(a, b)] = c
                for c2, v2 in row.items():
                    val = fld.sub(r.get(c2, fld.zero), fld.mul(c, v2))
                    if val:
                        r[c2] = val
                    else:
                        r.pop(c2, None)
            assert not r, "obstruction class escaped its own span"
        for pivot, _ in basis:
            terms = {}
            for (a, b), c in coeffs[pivot].items():
                exps = [0] * base_ring.nvars
                exps[a] += 1
                exps[b] += 1
                terms[tuple(exps)] = c
            if terms:
                equations.append(Polynomial(base_ring, terms))
    return BaseIdeal(base_ring, tuple(equations), 2)


# -- Hauser pipeline -------------------------------------------------------

def hauser_unfolding(C: MonomialCurve) -> DeformationFamily:
    """Unfold every multiplication-table equation by all lower-degree
    monomials of the Apéry span, one fresh variable each."""
    ap = C.apery_form()
    S = C.semigroup
    ring0 = C.ring
    table = ap.table_equations()
    names = []
    weights = []
    slots = []  # (equation index, monomial exps)
    for i, eq in enumerate(table):
        d = eq.wdeg()
        for delta in range(d):
            if not S.contains(delta):
                continue
            names.append(f"u{i + 1}_{d - delta}")
            weights.append(d - delta)
            slots.append((i, ap.canonical_exps(delta)))
    ring = _combined_ring(C, names, weights)
    nt = len(names)
    n0 = ring0.nvars
    F = [_lift(eq, ring, nt) for eq in table]
    for a, (i, mono) in enumerate(slots):
        F[i] = F[i] + ring.variable(n0 + a) * _lift(
            ring0.monomial(mono), ring, nt
        )

    relations = _relation_columns(C, table)
    rel_lifted = tuple(
        tuple(_lift(entry, ring, nt) for entry in col) for col in relations
    )
    return DeformationFamily(
        C, ring, tuple(F), None, tuple(names), tuple(weights),
        "unfolding", rel_lifted,
    )


def _relation_columns(C: MonomialCurve, table):
    """Minimal relation matrix of the table system (columns of polys)."""
    from .groebner import free_resolution_minimal

    if [str(p) for p in table] == [str(p) for p in C.ideal]:
        res = C.resolution()
    else:
        res = free_resolution_minimal(list(table))
        assert res.betti[1] == len(table), (
            "table system is not a minimal generating set"
        )
    rel = res.matrices[1] if len(res.matrices) > 1 else []
    k = len(table)
    cols = []
    for col in rel:
        cols.append(
            tuple(
                Polynomial(C.ring, dict(vec_component(col, i)))
                for i in range(k)
            )
        )
    return tuple(cols)


def hauser_flatness_equations(U: DeformationFamily) -> BaseIdeal:
    """Reduce F.r against the unfolded list F; the Apéry-span coefficient
    polynomials of the residues cut out the flatness locus."""
    if U.kind != "unfolding":
        raise WsatlasError("flatness extraction expects an unfolding family")
    C = U.curve
    ap = C.apery_form()
    ring = U.ring
    n0 = C.ring.nvars
    Flist = list(U.F)
    base_ring = U.base_ring()
    nbase = len(U.base_names)
    equations = {}
    for col in U.relations or ():
        p = ring.zero()
        for Fi, entry in zip(Flist, col):
            if entry:
                p = p + Fi * entry
        residue, _ = reduce_by_set(p, Flist)
        for e, c in residue.terms.items():
            curve_part, base_part = e[:n0], e[n0:]
            assert ap.is_basis_monomial(
                (0,) + curve_part[1:]
            ), "residue escaped the Apéry span"
            key = (curve_part, base_part)
            coeff = equations.get(key)
            equations[key] = c if coeff is None else ring.field.add(coeff, c)
    # collect the coefficient of each curve monomial as a base polynomial
    grouped: dict[tuple, dict] = {}
    for (curve_part, base_part), c in equations.items():
        if not c:
            continue
        grouped.setdefault(curve_part, {})[base_part] = c
    eqs = []
    seen = set()
    for curve_part in sorted(grouped, key=lambda e: (ring.wdeg(e + (0,) * nbase), e)):
        poly = Polynomial(base_ring, grouped[curve_part])
        sig = tuple(sorted(poly.terms.items()))
        if sig in seen:
            continue
        seen.add(sig)
        eqs.append(poly)
    return BaseIdeal(base_ring, tuple(eqs), None)


def eliminate_and_dimension(B: BaseIdeal, lowest_degree: bool = False):
    """Substitute away variables occurring as a lone linear term with a
    unit coefficient, then report the Krull dimension of the locus."""
    ring = B.ring
    fld = ring.field
    eqs = [e for e in B.equations if e]
    eliminated: set[int] = set()
    changed = True
    while changed:
        changed = False
        for pos, eq in enumerate(eqs):
            found = None
            for v in range(ring.nvars):
                if v in eliminated:
                    continue
                terms_with_v = [e for e in eq.terms if e[v]]
                if len(terms_with_v) != 1:
                    continue
                e = terms_with_v[0]
                if e[v] != 1 or any(e[w] for w in range(ring.nvars) if w != v):
                    continue
                found = (v, e)
                break
            if found is None:
                continue
            v, e = found
            c = eq.terms[e]
            rest = Polynomial(
                ring, {ee: cc for ee, cc in eq.terms.items() if ee != e}
            )
            value = rest.scale(fld.neg(fld.inv(c)))
            eqs = [
                q.substitute({v: value})
                for q, _ in ((q, None) for i2, q in enumerate(eqs) if i2 != pos)
            ]
            eqs = [q for q in eqs if q]
            eliminated.add(v)
            changed = True
            break
    if lowest_degree:
        trimmed = []
        for q in eqs:
            degs = {ring.wdeg(e) for e in q.terms}
            low = min(degs)
            trimmed.append(
                Polynomial(
                    ring, {e: c for e, c in q.terms.items() if ring.wdeg(e) == low}
                )
            )
        eqs = trimmed
    keep = [v for v in range(ring.nvars) if v not in eliminated]
    names = tuple(ring.names[v] for v in keep)
    weights = tuple(ring.weights[v] for v in keep)
    small = WeightedRing(names, weights, "wgrevlex")
    shrunk = [
        Polynomial(small, {tuple(e[v] for v in keep): c for e, c in q.terms.items()})
        for q in eqs
    ]
    reduced = BaseIdeal(small, tuple(shrunk), B.truncation_order)
    if shrunk:
        dim = krull_dimension(shrunk)
    else:
        dim = small.nvars
    return reduced, dim
