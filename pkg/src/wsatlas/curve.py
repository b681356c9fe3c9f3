"""Monomial curves: toric ideal, weighted ring, Apéry standard form.

Variables are named x for the multiplicity and y<k> for each further
minimal generator k; the weight of a variable is its generator.  Ties in
the monomial order scan x last, so the leading term of every toric
generator is its pure-y monomial.
"""

from __future__ import annotations

from .groebner import GroebnerBasis, buchberger, free_resolution_minimal, tracked_gb
from .polyring import Polynomial, WeightedRing, reduce_by_set
from .semigroup import NumericalSemigroup, apery_set, from_generators


class MonomialCurve:
    """The affine monomial curve of a numerical semigroup."""

    def __init__(self, semigroup: NumericalSemigroup, ring: WeightedRing,
                 ideal: tuple[Polynomial, ...]):
        self.semigroup = semigroup
        self.ring = ring
        self.ideal = tuple(ideal)
        self.generator_degrees = tuple(g.wdeg() for g in self.ideal)
        self._cache: dict = {}

    @property
    def embedding_dimension(self) -> int:
        return self.ring.nvars

    def reduced_gb(self) -> GroebnerBasis:
        if "gb" not in self._cache:
            self._cache["gb"] = buchberger(self.ideal)
        return self._cache["gb"]

    def tracked_basis(self):
        """Completion keeping the minimal generators first, with each
        element expressed as a combination of them."""
        if "tracked" not in self._cache:
            self._cache["tracked"] = tracked_gb(self.ideal)
        return self._cache["tracked"]

    def resolution(self):
        if "resolution" not in self._cache:
            self._cache["resolution"] = free_resolution_minimal(list(self.ideal))
        return self._cache["resolution"]

    def apery_form(self) -> "AperyForm":
        if "apery" not in self._cache:
            self._cache["apery"] = apery_standard_form(self)
        return self._cache["apery"]

    def scalar_image(self, p: Polynomial):
        """Coefficient of the semigroup-ring image of a weighted
        homogeneous polynomial (the sum of its coefficients)."""
        return p.coefficient_sum()

    def to_json(self) -> dict:
        return {
            "variables": list(self.ring.names),
            "weights": list(self.ring.weights),
            "generators": [str(g) for g in self.ideal],
        }

    def __repr__(self):
        return f"MonomialCurve<{self.semigroup}>"


def curve_ring(S: NumericalSemigroup, p: int | None = None,
               order: str = "wgrevlex") -> WeightedRing:
    names = ["x"] + [f"y{n}" for n in S.generators[1:]]
    perm = tuple(range(len(names) - 1, -1, -1))
    return WeightedRing(tuple(names), S.generators, order, perm, p)


def _minimalize_ideal(gens: list[Polynomial]) -> list[Polynomial]:
    """Greedy prune to a minimal generating set (degree-ascending)."""
    if not gens:
        return []
    ring = gens[0].ring
    ordered = sorted(gens, key=lambda g: (g.wdeg(), ring.key(g.lead_exps())))
    kept: list[Polynomial] = []
    for g in ordered:
        if kept:
            gb = buchberger(kept)
            if gb.contains(g):
                continue
        kept.append(g)
    return kept


def toric_ideal(S: NumericalSemigroup | tuple, p: int | None = None) -> MonomialCurve:
    """Toric ideal of the monomial curve by parameter elimination.

    Computes a Groebner basis of (x_i - t^{n_i}) in an order eliminating
    t, intersects with the coordinate subring and minimalizes.
    """
    if not isinstance(S, NumericalSemigroup):
        S = from_generators(S)
    if S.genus < 1:
        raise ValueError("the full semigroup has no interesting curve")
    ring = curve_ring(S, p)
    n = ring.nvars
    elim_names = ("t",) + ring.names
    elim_weights = (1,) + ring.weights
    elim_perm = tuple(range(n, -1, -1))
    elim = WeightedRing(elim_names, elim_weights, "elim1", elim_perm, p)
    gens = []
    for i, w in enumerate(S.generators):
        e_var = tuple(1 if j == i + 1 else 0 for j in range(n + 1))
        e_t = tuple(w if j == 0 else 0 for j in range(n + 1))
        gens.append(elim.monomial(e_var) - elim.monomial(e_t))
    G = buchberger(gens)
    kept = []
    for g in G:
        if all(e[0] == 0 for e in g.terms.keys()):
            terms = {e[1:]: c for e, c in g.terms.items()}
            kept.append(Polynomial(ring, terms).monic())
    minimal = _minimalize_ideal(kept)
    curve = MonomialCurve(S, ring, tuple(minimal))
    assert parametrization_check(curve), "toric generators fail to vanish"
    return curve


def parametrization_check(C: MonomialCurve) -> bool:
    """Substitute x_i -> t^{n_i} into every generator; all must vanish."""
    weights = C.ring.weights
    for g in C.ideal:
        image: dict[int, object] = {}
        fld = C.ring.field
        for e, c in g.terms.items():
            d = sum(w * k for w, k in zip(weights, e))
            v = fld.add(image.get(d, fld.zero), c)
            if v:
                image[d] = v
            else:
                image.pop(d, None)
        if image:
            return False
    return True


class AperyForm:
    """Additive realization of the curve ring over k[x].

    basis[r] is the exponent tuple (y-variables only) of the chosen
    monomial representing the Apéry element of residue class r; any
    monomial rewrites uniquely as basis element times a power of x.
    """

    def __init__(self, curve: MonomialCurve):
        S = curve.semigroup
        ring = curve.ring
        m = S.multiplicity
        ap = apery_set(S, m).representatives
        self.curve = curve
        self.modulus = m
        self.apery_values = ap
        self.basis = tuple(
            self._minimal_writing(ring, S.generators, a) for a in ap
        )
        self.basis_set = set(self.basis)

    @staticmethod
    def _minimal_writing(ring, generators, value):
        """Order-minimal y-monomial of the given weighted degree."""
        ys = generators[1:]
        n = ring.nvars
        best = None

        def rec(i, remaining, exps):
            nonlocal best
            if remaining == 0:
                cand = tuple(exps)
                key = ring.key(cand)
                if best is None or key < ring.key(best):
                    best = cand
                return
            if i == len(ys):
                return
            w = ys[i]
            k = 0
            while k * w <= remaining:
                exps[i + 1] = k
                rec(i + 1, remaining - k * w, exps)
                k += 1
            exps[i + 1] = 0

        rec(0, value, [0] * n)
        assert best is not None, f"{value} has no writing in the y generators"
        return best

    def canonical_exps(self, degree: int) -> tuple[int, ...]:
        """Exponents of the canonical monomial of a semigroup degree."""
        S = self.curve.semigroup
        assert S.contains(degree), f"{degree} is not in the semigroup"
        r = degree % self.modulus
        a = self.apery_values[r]
        k = (degree - a) // self.modulus
        exps = list(self.basis[r])
        exps[0] += k
        return tuple(exps)

    def canonical_monomial(self, degree: int) -> Polynomial:
        ring = self.curve.ring
        return ring.monomial(self.canonical_exps(degree))

    def is_basis_monomial(self, exps) -> bool:
        return tuple(exps) in self.basis_set

    def normal_form(self, p: Polynomial) -> Polynomial:
        """Rewrite a polynomial into the Apéry span (confluent)."""
        ring = self.curve.ring
        out: dict = {}
        fld = ring.field
        for e, c in p.terms.items():
            d = ring.wdeg(e)
            ce = self.canonical_exps(d)
            v = fld.add(out.get(ce, fld.zero), c)
            if v:
                out[ce] = v
            else:
                out.pop(ce, None)
        return Polynomial(ring, out)

    def table_heads(self) -> list[tuple[int, ...]]:
        """Minimal non-basis products of two basis monomials."""
        from .polyring import _edivides, _emul

        candidates = set()
        for i, bi in enumerate(self.basis):
            if sum(bi) == 0:
                continue
            for bj in self.basis[i:]:
                if sum(bj) == 0:
                    continue
                prod = _emul(bi, bj)
                if prod not in self.basis_set:
                    candidates.add(prod)
        heads = []
        ring = self.curve.ring
        for h in sorted(candidates, key=lambda e: (ring.wdeg(e), ring.key(e))):
            if not any(_edivides(k, h) for k in heads):
                heads.append(h)
        return heads

    def table_equations(self) -> list[Polynomial]:
        """Multiplication-table equations head - canonical(head).

        Every monomial outside the Apéry span is divisible by one of the
        heads, which is what makes unfolding reductions land back in the
        span.
        """
        ring = self.curve.ring
        eqs = []
        for h in self.table_heads():
            d = ring.wdeg(h)
            eqs.append(ring.monomial(h) - self.canonical_monomial(d))
        return eqs


def apery_standard_form(C: MonomialCurve) -> AperyForm:
    return AperyForm(C)


def delta_invariant(S: NumericalSemigroup) -> int:
    """Codimension of the semigroup ring in k[t] below the conductor."""
    return sum(1 for n in range(S.conductor) if not S.contains(n))
