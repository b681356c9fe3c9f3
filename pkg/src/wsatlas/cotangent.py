"""Graded cotangent cohomology of monomial curves.

The semigroup ring has graded pieces of dimension at most one, so the
degree-nu slices of the first and second cotangent modules are kernels
and cokernels of small scalar matrices whose entries are coefficient
sums of the (weighted homogeneous) presentation data.  The polynomial
input is a Groebner presentation of the curve ideal together with its
first and second Schreyer syzygies and lifts of the Koszul relations;
after that everything is exact linear algebra, one semigroup degree at
a time.

Slices stabilize once every activity test "delta + nu in N" is beyond
the conductor; the stable value must be zero (the singularity is
isolated), which is asserted rather than assumed.
"""

from __future__ import annotations

from .curve import MonomialCurve
from .errors import InfiniteDimensional
from .grading import GradedDims
from .groebner import FreeModule, syzygies as module_syzygies
from .linalg import Echelon
from .modules import (
    divide,
    make_element,
    module_gb,
    poly_to_vec,
    schreyer_syzygies,
    unit_vector,
    vdeg,
    vec_component,
)
from .polyring import Polynomial


def _poly_scalar(terms: dict, fld):
    acc = fld.zero
    for c in terms.values():
        acc = fld.add(acc, c)
    return acc


class CotangentData:
    """Scalar presentation data shared by the T1 and T2 slice loops."""

    def __init__(self, curve: MonomialCurve):
        self.curve = curve
        ring = curve.ring
        fld = ring.field
        self.field = fld
        S = curve.semigroup

        F0 = FreeModule(ring, (0,), "top")
        G = module_gb([poly_to_vec(g) for g in curve.ideal], F0,
                      interreduce=True)
        self.gen_degs = [vdeg(el.vec, F0) for el in G]
        ngens = len(G)

        # jacobian columns of the presentation, as scalar vectors
        self.var_weights = ring.weights
        self.jac = []
        for w in range(ring.nvars):
            col = {}
            for i, el in enumerate(G):
                acc = fld.zero
                for (_, exps), c in el.vec.items():
                    e = exps[w]
                    if e:
                        acc = fld.add(acc, fld.mul(fld.of(e), c))
                if acc:
                    col[i] = acc
            self.jac.append(col)

        F1, Z2 = schreyer_syzygies(G, F0)
        self.rel_degs = [vdeg(z, F1) for z in Z2]
        self.rel_cols = []
        for z in Z2:
            col = {}
            for i in range(ngens):
                v = _poly_scalar(vec_component(z, i), fld)
                if v:
                    col[i] = v
            self.rel_cols.append(col)
        self.rel_rows = [dict() for _ in range(ngens)]
        for m, col in enumerate(self.rel_cols):
            for i, v in col.items():
                self.rel_rows[i][m] = v

        self._G = G
        self._F0, self._F1, self._Z2 = F0, F1, Z2
        self._t2_data = None

    # -- second-order data is only built on demand -----------------------
    def t2_conditions(self):
        if self._t2_data is not None:
            return self._t2_data
        fld = self.field
        F1, Z2 = self._F1, self._Z2
        G = self._G
        nrel = len(Z2)
        Z2_elements = [make_element(z, F1) for z in Z2]
        F2, Z3 = schreyer_syzygies(Z2_elements, F1)
        cond_rows = []
        for z in Z3:
            row = {}
            for m in range(nrel):
                v = _poly_scalar(vec_component(z, m), fld)
                if v:
                    row[m] = v
            cond_rows.append((vdeg(z, F2), row))
        # lift each Koszul relation through the syzygy basis
        ring = self.curve.ring
        for i in range(len(G)):
            for j in range(i + 1, len(G)):
                kos = {}
                for (_, exps), c in G[j].vec.items():
                    kos[(i, exps)] = c
                for (_, exps), c in G[i].vec.items():
                    v = fld.sub(kos.get((j, exps), fld.zero), c)
                    if v:
                        kos[(j, exps)] = v
                    else:
                        kos.pop((j, exps), None)
                nf, q = divide(kos, Z2_elements, F1, want_quotients=True)
                assert not nf, "Koszul relation is not in the relation module"
                row = {}
                for m, qd in enumerate(q):
                    v = _poly_scalar(qd, fld)
                    if v:
                        row[m] = v
                cond_rows.append((self.gen_degs[i] + self.gen_degs[j], row))
        self._t2_data = cond_rows
        return cond_rows


def cotangent_data(C: MonomialCurve) -> CotangentData:
    if "cotangent" not in C._cache:
        C._cache["cotangent"] = CotangentData(C)
    return C._cache["cotangent"]


def t1_graded(C: MonomialCurve) -> GradedDims:
    """Graded dimensions of the normal module modulo trivial deformations."""
    data = cotangent_data(C)
    S = C.semigroup
    fld = data.field
    dims: dict[int, int] = {}
    deltas = list(data.gen_degs) + list(data.rel_degs) + list(data.var_weights)
    nu_stop = S.conductor - min(deltas)
    nu_start = -max(data.gen_degs)
    for nu in range(nu_start, nu_stop + 1):
        active = [i for i, d in enumerate(data.gen_degs) if S.contains(d + nu)]
        if not active:
            continue
        active_set = set(active)
        rows = []
        for m, e in enumerate(data.rel_degs):
            if not S.contains(e + nu):
                continue
            row = {i: v for i, v in data.rel_cols[m].items() if i in active_set}
            if row:
                rows.append(row)
        ech = Echelon(fld)
        for row in rows:
            ech.add(row)
        ker_dim = len(active) - ech.rank
        jac_ech = Echelon(fld)
        jac_dim = 0
        for w, wt in enumerate(data.var_weights):
            if not S.contains(nu + wt):
                continue
            vec = {i: v for i, v in data.jac[w].items() if i in active_set}
            if __debug__:
                for row in rows:
                    dot = fld.zero
                    for i, v in vec.items():
                        if i in row:
                            dot = fld.add(dot, fld.mul(row[i], v))
                    assert not dot, "trivial deformation violates a relation"
            if vec and jac_ech.add(vec):
                jac_dim += 1
        val = ker_dim - jac_dim
        assert val >= 0, "trivial deformations escape the normal module"
        if val:
            dims[nu] = val
    if dims.get(nu_stop):
        raise InfiniteDimensional("T1 does not vanish at stabilization")
    return GradedDims(dims)


def t1_plus(C: MonomialCurve) -> int:
    return t1_graded(C).positive_part()


def t1_minus(C: MonomialCurve) -> int:
    return t1_graded(C).negative_part()


def t2_graded(C: MonomialCurve) -> GradedDims:
    """Graded obstruction space: Hom(R/R0, O) modulo restricted maps."""
    data = cotangent_data(C)
    S = C.semigroup
    fld = data.field
    conditions = data.t2_conditions()
    dims: dict[int, int] = {}
    if not data.rel_degs:
        return GradedDims({})
    deltas = (
        list(data.gen_degs)
        + list(data.rel_degs)
        + [d for d, _ in conditions]
    )
    nu_stop = S.conductor - min(deltas)
    nu_start = -max(data.rel_degs)
    for nu in range(nu_start, nu_stop + 1):
        active = [m for m, e in enumerate(data.rel_degs) if S.contains(e + nu)]
        if not active:
            continue
        active_set = set(active)
        ech = Echelon(fld)
        for d, row in conditions:
            if not S.contains(d + nu):
                continue
            r = {m: v for m, v in row.items() if m in active_set}
            if r:
                ech.add(r)
        v_dim = len(active) - ech.rank
        img = Echelon(fld)
        img_dim = 0
        for i, d in enumerate(data.gen_degs):
            if not S.contains(d + nu):
                continue
            row = {m: v for m, v in data.rel_rows[i].items() if m in active_set}
            if row and img.add(row):
                img_dim += 1
        val = v_dim - img_dim
        assert val >= 0, "restricted homs escape the cocycle space"
        if val:
            dims[nu] = val
    if dims.get(nu_stop):
        raise InfiniteDimensional("T2 does not vanish at stabilization")
    return GradedDims(dims)


def t2_dimension(C: MonomialCurve) -> int:
    return t2_graded(C).total


# -- module-theoretic route (independent cross-check, small curves) -------

def normal_module(C: MonomialCurve):
    """Generators of Hom(I/I^2, O) as a graded submodule of (S/I)^k.

    Computed by module syzygies over the quotient: v . r = 0 mod I.
    Returns (generators, hom_module) where hom_module carries the shifts
    -deg(f_i) matching the deformation grading.
    """
    ring = C.ring
    fld = ring.field
    res = C.resolution()
    k = len(C.ideal)
    rel = res.matrices[1] if len(res.matrices) > 1 else []
    l = len(rel)
    hom_module = FreeModule(ring, tuple(-d for d in C.generator_degrees), "top")
    if l == 0:
        gens = [unit_vector(i, ring) for i in range(k)]
        return gens, hom_module
    rel_degs = res.shifts[2]
    ambient = FreeModule(ring, tuple(-e for e in rel_degs), "top")
    vectors = []
    for i in range(k):
        row = {}
        for j, col in enumerate(rel):
            for exps, c in vec_component(col, i).items():
                row[(j, exps)] = c
        vectors.append(row)
    for m, f in enumerate(C.ideal):
        for j in range(l):
            vectors.append({(j, e): c for e, c in f.terms.items()})
    cols = module_syzygies(vectors, ambient)
    gens = []
    seen = set()
    for col in cols:
        proj = {t: c for t, c in col.items() if t[0] < k}
        if not proj:
            continue
        sig = tuple(sorted(proj.items()))
        if sig in seen:
            continue
        seen.add(sig)
        gens.append(proj)
    return gens, hom_module


def t1_graded_via_modules(C: MonomialCurve) -> GradedDims:
    """T1 through graded_hilbert_function; slow, used for cross-checks."""
    from .groebner import graded_hilbert_function

    ring = C.ring
    k = len(C.ideal)
    gens, hom_module = normal_module(C)
    gens = list(gens)
    for m, f in enumerate(C.ideal):
        for i in range(k):
            gens.append({(i, e): c for e, c in f.terms.items()})
    denom = []
    for w in range(ring.nvars):
        col = {}
        for i, f in enumerate(C.ideal):
            fld = ring.field
            for exps, c in f.terms.items():
                if exps[w]:
                    e2 = list(exps)
                    e2[w] -= 1
                    t = (i, tuple(e2))
                    v = fld.add(col.get(t, fld.zero), fld.mul(fld.of(exps[w]), c))
                    if v:
                        col[t] = v
                    else:
                        col.pop(t, None)
        if col:
            denom.append(col)
    for m, f in enumerate(C.ideal):
        for i in range(k):
            denom.append({(i, e): c for e, c in f.terms.items()})
    return graded_hilbert_function(gens, denom, hom_module)
