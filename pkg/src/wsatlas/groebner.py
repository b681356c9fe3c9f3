"""Groebner bases, syzygies, minimal free resolutions, Krull dimension
and graded Hilbert functions.

The resolution pipeline is Schreyer-style: one Buchberger completion for
the ideal, then iterated division-only syzygy steps, then minimization
by pivoting out constant entries with graded-shift bookkeeping.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InfiniteDimensional, WsatlasError
from .grading import GradedDims
from .modules import (
    FreeModule,
    divide,
    make_element,
    module_gb,
    poly_to_vec,
    schreyer_syzygies,
    syzygies_of,
    vadd_inplace,
    vec_component,
    vec_to_poly,
    vdeg,
    vmul_poly,
    vsub,
    vzero,
)
from .polyring import Polynomial, WeightedRing, _edivides, _emul


@dataclass(frozen=True)
class GroebnerBasis:
    ring: WeightedRing
    generators: tuple[Polynomial, ...]
    reduced: bool = True

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def normal_form(self, p: Polynomial) -> Polynomial:
        from .polyring import reduce_by_set

        return reduce_by_set(p, list(self.generators))[0]

    def contains(self, p: Polynomial) -> bool:
        return not self.normal_form(p)

    def lead_exponents(self) -> list[tuple[int, ...]]:
        return [g.lead_exps() for g in self.generators]


def buchberger(ideal_gens) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ideal_gens."""
    gens = [g for g in ideal_gens if g]
    if not gens:
        raise WsatlasError("empty generating set")
    ring = gens[0].ring
    F0 = FreeModule(ring, (0,), "top")
    G = module_gb([poly_to_vec(g) for g in gens], F0, interreduce=True)
    polys = [vec_to_poly(el.vec, ring) for el in G]
    polys.sort(key=lambda p: ring.key(p.lead_exps()))
    return GroebnerBasis(ring, tuple(polys), reduced=True)


def tracked_gb(ideal_gens):
    """Groebner basis keeping the inputs as leading elements, with each
    basis member expressed as a combination of the inputs.

    Returns (elements, ring).  elements[i].tracker maps input index to a
    polynomial term dict.
    """
    gens = [g for g in ideal_gens if g]
    ring = gens[0].ring
    F0 = FreeModule(ring, (0,), "top")
    G = module_gb(
        [poly_to_vec(g) for g in gens], F0, keep_inputs=True,
        interreduce=False, track=True,
    )
    return G, F0


def syzygies(gens, module: FreeModule | None = None):
    """Generating columns of the syzygy module of polynomials or vectors.

    Polynomials are treated as rank-one vectors; plain vector input
    (dicts keyed by (component, exps)) needs the ambient module.
    Returns columns {(row index, exps): coeff} with gens . col = 0.
    """
    items = list(gens)
    if not items:
        return []
    if isinstance(items[0], Polynomial):
        ring = items[0].ring
        module = FreeModule(ring, (0,), "top")
        vecs = [poly_to_vec(g) for g in items]
    else:
        if module is None:
            raise WsatlasError("vector input requires the ambient module")
        vecs = items
    return syzygies_of(vecs, module)


@dataclass
class FreeResolution:
    ring: WeightedRing
    matrices: list  # matrices[i]: columns of F_{i+1} -> F_i, dicts {(comp, exps): coeff}
    shifts: list  # shifts[i]: degrees of the basis of F_i; shifts[0] == (0,)
    minimal: bool = True

    @property
    def betti(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.shifts)

    @property
    def length(self) -> int:
        return len(self.matrices)

    def rank_last(self) -> int:
        return self.betti[-1]

    def generator_row(self) -> list[Polynomial]:
        return [vec_to_poly(col, self.ring) for col in self.matrices[0]]

    def relation_matrix(self) -> list[dict]:
        """Columns of the second map (relations among the generators)."""
        return self.matrices[1] if len(self.matrices) > 1 else []

    def to_json(self) -> dict:
        return {
            "betti": list(self.betti),
            "shifts": [sorted(s) for s in self.shifts],
        }


def _check_complex(matrices, ring):
    fld = ring.field
    for Mi, Mj in zip(matrices, matrices[1:]):
        for col in Mj:
            acc = vzero()
            for comp in {t[0] for t in col}:
                piece = vmul_poly(Mi[comp], vec_component(col, comp), fld)
                vadd_inplace(acc, piece, fld)
            if acc:
                return False
    return True


def _minimize(matrices, shifts, ring, protected: int):
    """Pivot out constant entries; protected rows of level 1 go last."""
    fld = ring.field
    zero_exps = ring.zero_exps()

    def find_pivot(allow_protected: bool):
        for li in range(1, len(matrices)):
            M = matrices[li]
            for b, col in enumerate(M):
                for (comp, exps), c in col.items():
                    if exps != zero_exps:
                        continue
                    if li == 1 and not allow_protected and comp < protected:
                        continue
                    return li, comp, b, c
        return None

    while True:
        hit = find_pivot(False) or find_pivot(True)
        if hit is None:
            break
        li, a, b, c = hit
        M = matrices[li]
        colb = M[b]
        inv_c = fld.inv(c)
        factors = {}
        for b2, col in enumerate(M):
            if b2 == b:
                continue
            alpha = vec_component(col, a)
            if not alpha:
                continue
            factor = {e: fld.mul(inv_c, v) for e, v in alpha.items()}
            factors[b2] = factor
            M[b2] = vsub(col, vmul_poly(colb, factor, fld), fld)
        if li + 1 < len(matrices):
            for col in matrices[li + 1]:
                add = vzero()
                for b2, factor in factors.items():
                    piece = vec_component(col, b2)
                    if not piece:
                        continue
                    for e1, c1 in factor.items():
                        for e2, c2 in piece.items():
                            t = (b, _emul(e1, e2))
                            val = fld.add(add.get(t, fld.zero), fld.mul(c1, c2))
                            if val:
                                add[t] = val
                            else:
                                add.pop(t, None)
                for t, v in add.items():
                    val = fld.add(col.get(t, fld.zero), v)
                    if val:
                        col[t] = val
                    else:
                        col.pop(t, None)
                assert not vec_component(col, b), "pivot row failed to clear"
        # drop basis element a of F_li and column b of M_li; component
        # reindexing must walk upward so vacated slots are reused safely
        del M[b]
        del shifts[li][b]
        for col in M:
            for t in [t for t in col if t[0] == a]:
                del col[t]
            for t in sorted((t for t in col if t[0] > a), key=lambda t: t[0]):
                col[(t[0] - 1, t[1])] = col.pop(t)
        del matrices[li - 1][a]
        del shifts[li - 1][a]
        if li + 1 < len(matrices):
            for col in matrices[li + 1]:
                for t in [t for t in col if t[0] == b]:
                    del col[t]
                for t in sorted((t for t in col if t[0] > b), key=lambda t: t[0]):
                    col[(t[0] - 1, t[1])] = col.pop(t)
        while matrices and not matrices[-1]:
            matrices.pop()
            shifts.pop()


def schreyer_complex(ideal_gens, keep_inputs=True):
    """Non-minimal Schreyer resolution data for an ideal.

    Returns (levels, modules) where levels[0] is the list of GBElements
    of the ideal and levels[i>=1] are syzygy GBElements one step up.
    """
    gens = [g for g in ideal_gens if g]
    ring = gens[0].ring
    F0 = FreeModule(ring, (0,), "top")
    G = module_gb(
        [poly_to_vec(g) for g in gens], F0,
        keep_inputs=keep_inputs, interreduce=False,
    )
    levels = [G]
    modules = [F0]
    current, mod = G, F0
    while True:
        nxt_mod, Z = schreyer_syzygies(current, mod)
        if not Z:
            break
        elements = [make_element(z, nxt_mod) for z in Z]
        levels.append(elements)
        modules.append(nxt_mod)
        current, mod = elements, nxt_mod
        if len(levels) > ring.nvars + 1:
            raise AssertionError("resolution exceeds the syzygy theorem bound")
    return levels, modules


def free_resolution_minimal(ideal_gens) -> FreeResolution:
    """Minimal graded free resolution of S/(ideal_gens).

    The generators are kept through minimization when they are a minimal
    generating set (always the case for curve ideals built here).
    """
    gens = [g for g in ideal_gens if g]
    if not gens:
        raise WsatlasError("empty generating set")
    ring = gens[0].ring
    levels, modules = schreyer_complex(gens, keep_inputs=True)
    matrices = [[dict(el.vec) for el in lv] for lv in levels]
    # col_shifts[i] = degrees of the basis of F_{i+1} (columns of matrices[i])
    col_shifts = [
        [vdeg(el.vec, modules[li]) for el in lv] for li, lv in enumerate(levels)
    ]
    _minimize(matrices, col_shifts, ring, protected=len(gens))
    shifts = [[0]] + col_shifts
    assert _check_complex(matrices, ring), "minimized resolution is not a complex"
    return FreeResolution(ring, matrices, shifts, minimal=True)


def krull_dimension(ideal_gens) -> int:
    """Dimension of the vanishing locus via leading-term combinatorics."""
    gens_all = list(ideal_gens)
    if not gens_all:
        raise WsatlasError("empty generating set")
    ring = gens_all[0].ring
    gens = [g for g in gens_all if g]
    if not gens:
        return ring.nvars  # zero ideal
    gb = buchberger(gens)
    supports = []
    for e in gb.lead_exponents():
        supp = frozenset(i for i, x in enumerate(e) if x)
        if not supp:
            return -1  # unit ideal
        supports.append(supp)
    # drop supports containing another support
    supports = [
        s for s in set(supports)
        if not any(t < s for t in set(supports))
    ]
    n = ring.nvars
    cache: dict[frozenset, int] = {}

    def best(allowed: frozenset) -> int:
        hit = cache.get(allowed)
        if hit is not None:
            return hit
        blocking = [s for s in supports if s <= allowed]
        if not blocking:
            cache[allowed] = len(allowed)
            return len(allowed)
        s = min(blocking, key=len)
        val = max(best(allowed - {v}) for v in sorted(s))
        cache[allowed] = val
        return val

    return best(frozenset(range(n)))


def _monomial_colon(B: list, m) -> list:
    """(B : m) for monomial ideals, generators as exponent tuples."""
    out = {tuple(max(b - x, 0) for b, x in zip(bb, m)) for bb in B}
    return _monomial_minimalize(list(out))


def _monomial_minimalize(gens: list) -> list:
    out = []
    for g in sorted(set(gens), key=sum):
        if not any(_edivides(h, g) for h in out):
            out.append(g)
    return out


def _monomial_intersect(A: list, B: list) -> list:
    out = {tuple(max(a, b) for a, b in zip(ga, gb)) for ga in A for gb in B}
    return _monomial_minimalize(list(out))


def graded_hilbert_function(numerator, denominator, module: FreeModule | None = None) -> GradedDims:
    """Hilbert function of numerator/denominator inside a graded free module.

    Inputs are lists of vectors {(comp, exps): coeff} or plain
    polynomials (rank-one).  The quotient must be finite dimensional
    over the field; otherwise InfiniteDimensional is raised.
    """
    num = list(numerator)
    den = list(denominator)
    if num and isinstance(num[0], Polynomial):
        ring = num[0].ring
        module = FreeModule(ring, (0,), "top")
        num = [poly_to_vec(p) for p in num]
        den = [poly_to_vec(p) for p in den if p]
    if module is None:
        raise WsatlasError("a module is required for vector input")
    ring = module.ring
    num = [v for v in num if v]
    den = [v for v in den if v]
    Gnum = module_gb(num, module, interreduce=True) if num else []
    Gden = module_gb(den, module, interreduce=True) if den else []
    for v in den:
        nf, _ = divide(v, Gnum, module)
        if nf:
            raise WsatlasError("denominator is not contained in numerator")
    dims: dict[int, int] = {}
    for comp in range(module.rank):
        A = _monomial_minimalize(
            [el.lead[1] for el in Gnum if el.lead[0] == comp]
        )
        B = _monomial_minimalize(
            [el.lead[1] for el in Gden if el.lead[0] == comp]
        )
        if not A:
            continue
        # finiteness: every variable needs a pure power in (B : A)
        C = None
        for m in A:
            col = _monomial_colon(B, m)
            C = col if C is None else _monomial_intersect(C, col)
        box = [None] * ring.nvars
        for g in C or []:
            supp = [i for i, x in enumerate(g) if x]
            if len(supp) == 1:
                i = supp[0]
                if box[i] is None or g[i] < box[i]:
                    box[i] = g[i]
            elif not supp:
                box = [0] * ring.nvars
                break
        if any(b is None for b in box):
            raise InfiniteDimensional(
                "quotient has positive dimension in component %d" % comp
            )
        shift = module.shifts[comp]
        seen = set()
        for m in A:
            ranges = [range(b) for b in box]

            def walk(i, exps):
                if i == len(ranges):
                    mono = tuple(exps)
                    if mono in seen:
                        return
                    if any(_edivides(bb, mono) for bb in B):
                        return
                    seen.add(mono)
                    d = ring.wdeg(mono) + shift
                    dims[d] = dims.get(d, 0) + 1
                    return
                for q in ranges[i]:
                    exps[i] = m[i] + q
                    walk(i + 1, exps)
                exps[i] = m[i]

            walk(0, list(m))
    return GradedDims(dims)
