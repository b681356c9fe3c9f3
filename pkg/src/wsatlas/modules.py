"""Free modules over a weighted ring: division, Groebner bases, syzygies.

Module terms are keyed by (component, exponent tuple).  Three orders:

  top       term over position: ring order on the monomial, smaller
            component wins ties
  pot       position over term
  schreyer  induced by a Groebner basis one level down; this is what
            makes iterated syzygy computation division-only

The Schreyer construction implemented here takes, for each basis
element, the minimal generators of the lead-term colon ideal against
later elements; the resulting syzygies are a Groebner basis of the
syzygy module in the induced order, so resolutions never need a second
Buchberger completion.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .polyring import Polynomial, WeightedRing, _ediv, _edivides, _emul


class _Rev:
    """Inverts comparisons so heapq acts as a max-heap."""

    __slots__ = ("k",)

    def __init__(self, k):
        self.k = k

    def __lt__(self, other):
        return self.k > other.k


class FreeModule:
    """Graded free module with a term order on (component, monomial)."""

    def __init__(self, ring: WeightedRing, shifts, order="top",
                 schreyer_leads=None, prev=None):
        self.ring = ring
        self.shifts = tuple(shifts)
        self.order = order
        self.schreyer_leads = schreyer_leads
        self.prev = prev
        if order == "schreyer":
            assert schreyer_leads is not None and prev is not None
            assert len(schreyer_leads) == len(self.shifts)

    @property
    def rank(self) -> int:
        return len(self.shifts)

    def key(self, term):
        comp, exps = term
        if self.order == "top":
            return (self.ring.key(exps), -comp)
        if self.order == "pot":
            return (-comp, self.ring.key(exps))
        pcomp, pexps = self.schreyer_leads[comp]
        return (self.prev.key((pcomp, _emul(exps, pexps))), -comp)

    def deg(self, term) -> int:
        comp, exps = term
        return self.ring.wdeg(exps) + self.shifts[comp]


# ---------------------------------------------------------------------------
# raw vector helpers: vectors are dicts {(comp, exps): coeff}

def vzero():
    return {}


def vadd_inplace(a: dict, b: dict, fld) -> dict:
    for t, c in b.items():
        v = fld.add(a.get(t, fld.zero), c)
        if v:
            a[t] = v
        else:
            a.pop(t, None)
    return a


def vsub(a: dict, b: dict, fld) -> dict:
    res = dict(a)
    for t, c in b.items():
        v = fld.sub(res.get(t, fld.zero), c)
        if v:
            res[t] = v
        else:
            res.pop(t, None)
    return res


def vscale(a: dict, c, fld) -> dict:
    if not c:
        return {}
    return {t: fld.mul(c, v) for t, v in a.items()}


def vmul_term(a: dict, exps, coeff, fld) -> dict:
    if not coeff:
        return {}
    return {(t[0], _emul(t[1], exps)): fld.mul(coeff, v) for t, v in a.items()}


def vmul_poly(a: dict, poly_terms: dict, fld) -> dict:
    res: dict = {}
    for e, c in poly_terms.items():
        for (comp, exps), v in a.items():
            t = (comp, _emul(exps, e))
            val = fld.add(res.get(t, fld.zero), fld.mul(c, v))
            if val:
                res[t] = val
            else:
                res.pop(t, None)
    return res


def vlead(v: dict, module: FreeModule):
    return max(v, key=module.key)


def vdeg(v: dict, module: FreeModule) -> int:
    return max(module.deg(t) for t in v)


def vis_homogeneous(v: dict, module: FreeModule) -> bool:
    return len({module.deg(t) for t in v}) <= 1


def unit_vector(comp: int, ring: WeightedRing) -> dict:
    return {(comp, ring.zero_exps()): ring.field.one}


def poly_to_vec(p: Polynomial, comp: int = 0) -> dict:
    return {(comp, e): c for e, c in p.terms.items()}


def vec_component(v: dict, comp: int) -> dict:
    """Polynomial term dict sitting in one component."""
    return {exps: c for (cc, exps), c in v.items() if cc == comp}


def vec_to_poly(v: dict, ring: WeightedRing, comp: int = 0) -> Polynomial:
    return Polynomial(ring, vec_component(v, comp))


# ---------------------------------------------------------------------------
# division

@dataclass
class GBElement:
    vec: dict
    lead: tuple
    linv: object  # inverse of lead coefficient
    tracker: dict | None = None  # gen index -> polynomial term dict


def make_element(v: dict, module: FreeModule, tracker=None) -> GBElement:
    lead = vlead(v, module)
    return GBElement(v, lead, module.ring.field.inv(v[lead]), tracker)


def divide(v: dict, elements, module: FreeModule, want_quotients=False):
    """Divide v by a list of GBElements: v = sum q_i g_i + nf.

    Returns (nf, quotients) where quotients is a list of polynomial term
    dicts aligned with elements (None unless want_quotients).
    """
    fld = module.ring.field
    key = module.key
    work = dict(v)
    heap = [(_Rev(key(t)), t) for t in work]
    heapq.heapify(heap)
    nf: dict = {}
    quotients = [dict() for _ in elements] if want_quotients else None
    by_comp: dict[int, list[tuple[int, GBElement]]] = {}
    for i, el in enumerate(elements):
        by_comp.setdefault(el.lead[0], []).append((i, el))
    while heap:
        _, t = heapq.heappop(heap)
        c = work.get(t)
        if not c:
            continue
        comp, exps = t
        for i, el in by_comp.get(comp, ()):
            lexp = el.lead[1]
            if _edivides(lexp, exps):
                q_exps = _ediv(exps, lexp)
                q_coeff = fld.mul(c, el.linv)
                if want_quotients:
                    qd = quotients[i]
                    qv = fld.add(qd.get(q_exps, fld.zero), q_coeff)
                    if qv:
                        qd[q_exps] = qv
                    else:
                        qd.pop(q_exps, None)
                for t2, c2 in el.vec.items():
                    if t2 == el.lead:
                        work.pop(t, None)
                        continue
                    tt = (t2[0], _emul(q_exps, t2[1]))
                    old = work.get(tt, fld.zero)
                    val = fld.sub(old, fld.mul(q_coeff, c2))
                    if val:
                        if not old:
                            heapq.heappush(heap, (_Rev(key(tt)), tt))
                        work[tt] = val
                    else:
                        work.pop(tt, None)
                break
        else:
            nf[t] = c
            work.pop(t, None)
    return nf, quotients


# ---------------------------------------------------------------------------
# Buchberger completion

def _lcm_exps(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def module_gb(vectors, module: FreeModule, keep_inputs=False,
              interreduce=True, track=False):
    """Buchberger completion of a list of vectors.

    Returns a list of monic GBElements.  With track=True each element
    carries its expression in terms of the input vectors.  keep_inputs
    preserves the (nonzero) inputs verbatim as the first elements and
    skips interreduction.
    """
    ring = module.ring
    fld = ring.field
    G: list[GBElement] = []

    def normalized(v, tracker):
        lead = vlead(v, module)
        lc = v[lead]
        if lc != fld.one:
            inv = fld.inv(lc)
            v = vscale(v, inv, fld)
            if tracker is not None:
                tracker = {i: {e: fld.mul(inv, c) for e, c in p.items()}
                           for i, p in tracker.items()}
        return GBElement(v, lead, fld.one, tracker)

    pair_heap: list[tuple] = []  # (sortkey, i, j, lcm_exps)
    cancelled: set[tuple[int, int]] = set()
    live_pairs: dict[tuple[int, int], tuple] = {}

    def push_pair(i, j):
        lcm = _lcm_exps(G[i].lead[1], G[j].lead[1])
        deg = ring.wdeg(lcm) + module.shifts[G[i].lead[0]]
        heapq.heappush(pair_heap, ((deg, j, i), i, j, lcm))
        live_pairs[(i, j)] = lcm

    def add_element(el: GBElement):
        t = len(G)
        G.append(el)
        lead_t = el.lead
        # Gebauer-Moeller update of the pair set
        cand = []
        for i in range(t):
            if G[i].lead[0] == lead_t[0]:
                cand.append((i, _lcm_exps(G[i].lead[1], lead_t[1])))
        # B rule: drop old pairs strictly covered by the new lead
        for (i, j), lcm in list(live_pairs.items()):
            if (
                G[i].lead[0] == lead_t[0]
                and _edivides(lead_t[1], lcm)
                and _lcm_exps(G[i].lead[1], lead_t[1]) != lcm
                and _lcm_exps(G[j].lead[1], lead_t[1]) != lcm
            ):
                cancelled.add((i, j))
                del live_pairs[(i, j)]
        # M rule: among new pairs drop those whose lcm is a proper multiple
        keep = []
        for i, lcm in cand:
            if any(
                _edivides(lcm2, lcm) and lcm2 != lcm for _, lcm2 in cand
            ):
                continue
            keep.append((i, lcm))
        # F rule: one pair per lcm value
        seen: dict = {}
        for i, lcm in keep:
            if lcm not in seen:
                seen[lcm] = i
        for lcm, i in seen.items():
            # product criterion, valid for rank-one modules only
            if module.rank == 1 and all(
                min(a, b) == 0 for a, b in zip(G[i].lead[1], lead_t[1])
            ):
                continue
            push_pair(i, t)

    for idx, v in enumerate(vectors):
        if not v:
            continue
        tracker = {idx: {ring.zero_exps(): fld.one}} if track else None
        if keep_inputs:
            add_element(normalized(dict(v), tracker))
        else:
            nf, q = divide(v, G, module, want_quotients=track)
            if not nf:
                continue
            if track:
                for m, qd in enumerate(q):
                    if not qd:
                        continue
                    for i, p in (G[m].tracker or {}).items():
                        contrib = {
                            _emul(e1, e2): fld.mul(c1, c2)
                            for e1, c1 in qd.items()
                            for e2, c2 in p.items()
                        }
                        tgt = tracker.setdefault(i, {})
                        for e, c in contrib.items():
                            val = fld.sub(tgt.get(e, fld.zero), c)
                            if val:
                                tgt[e] = val
                            else:
                                tgt.pop(e, None)
                        if not tgt:
                            tracker.pop(i, None)
            add_element(normalized(nf, tracker))

    while pair_heap:
        _, i, j, lcm = heapq.heappop(pair_heap)
        if (i, j) in cancelled:
            continue
        live_pairs.pop((i, j), None)
        gi, gj = G[i], G[j]
        mi = _ediv(lcm, gi.lead[1])
        mj = _ediv(lcm, gj.lead[1])
        s = vsub(
            vmul_term(gi.vec, mi, fld.one, fld),
            vmul_term(gj.vec, mj, fld.one, fld),
            fld,
        )
        if not s:
            continue
        nf, q = divide(s, G, module, want_quotients=track)
        if not nf:
            continue
        tracker = None
        if track:
            tracker = {}
            def acc(src_tracker, mult_exps, sign_one):
                for gi_, p in (src_tracker or {}).items():
                    tgt = tracker.setdefault(gi_, {})
                    for e, c in p.items():
                        ee = _emul(e, mult_exps)
                        val = (fld.add if sign_one else fld.sub)(
                            tgt.get(ee, fld.zero), c
                        )
                        if val:
                            tgt[ee] = val
                        else:
                            tgt.pop(ee, None)
                    if not tgt:
                        tracker.pop(gi_, None)
            acc(gi.tracker, mi, True)
            acc(gj.tracker, mj, False)
            for m, qd in enumerate(q):
                if not qd:
                    continue
                for gi_, p in (G[m].tracker or {}).items():
                    tgt = tracker.setdefault(gi_, {})
                    for e1, c1 in qd.items():
                        for e2, c2 in p.items():
                            ee = _emul(e1, e2)
                            val = fld.sub(tgt.get(ee, fld.zero), fld.mul(c1, c2))
                            if val:
                                tgt[ee] = val
                            else:
                                tgt.pop(ee, None)
                    if not tgt:
                        tracker.pop(gi_, None)
        add_element(normalized(nf, tracker))

    if interreduce and not keep_inputs:
        G = _interreduce(G, module, track)
    return G


def _interreduce(G, module: FreeModule, track=False):
    """Reduced basis: minimal leads, tails fully reduced, monic."""
    fld = module.ring.field
    order = sorted(range(len(G)), key=lambda i: module.key(G[i].lead))
    kept: list[int] = []
    for i in order:
        li = G[i].lead
        if any(
            G[j].lead[0] == li[0] and _edivides(G[j].lead[1], li[1])
            for j in kept
        ):
            continue
        kept.append(i)
    result = []
    kept_elements = [G[i] for i in kept]
    for pos, el in enumerate(kept_elements):
        others = [e for k, e in enumerate(kept_elements) if k != pos]
        nf, q = divide(el.vec, others, module, want_quotients=track)
        assert nf, "reduced basis member vanished during interreduction"
        tracker = None
        if track:
            tracker = {i: dict(p) for i, p in (el.tracker or {}).items()}
            oth = [e for k, e in enumerate(kept_elements) if k != pos]
            for m, qd in enumerate(q):
                if not qd:
                    continue
                for gi_, p in (oth[m].tracker or {}).items():
                    tgt = tracker.setdefault(gi_, {})
                    for e1, c1 in qd.items():
                        for e2, c2 in p.items():
                            ee = _emul(e1, e2)
                            val = fld.sub(tgt.get(ee, fld.zero), fld.mul(c1, c2))
                            if val:
                                tgt[ee] = val
                            else:
                                tgt.pop(ee, None)
                    if not tgt:
                        tracker.pop(gi_, None)
        lead = vlead(nf, module)
        lc = nf[lead]
        if lc != fld.one:
            inv = fld.inv(lc)
            nf = vscale(nf, inv, fld)
            if tracker is not None:
                tracker = {i: {e: fld.mul(inv, c) for e, c in p.items()}
                           for i, p in tracker.items()}
        result.append(GBElement(nf, lead, fld.one, tracker))
    return result


# ---------------------------------------------------------------------------
# Schreyer syzygies

def schreyer_syzygies(G, module: FreeModule):
    """Syzygies of a Groebner basis, a GB in the induced Schreyer order.

    For each element i the minimal generators of the colon ideal of its
    lead against later same-component leads produce one syzygy each.
    Returns (next_module, list of syzygy vectors over indices of G).
    """
    ring = module.ring
    fld = ring.field
    shifts = tuple(vdeg(el.vec, module) for el in G)
    nxt = FreeModule(
        ring,
        shifts,
        order="schreyer",
        schreyer_leads=[el.lead for el in G],
        prev=module,
    )
    out = []
    for i, gi in enumerate(G):
        later = [
            (j, _ediv(_lcm_exps(gi.lead[1], G[j].lead[1]), gi.lead[1]))
            for j in range(i + 1, len(G))
            if G[j].lead[0] == gi.lead[0]
        ]
        if not later:
            continue
        monos = sorted({m for _, m in later}, key=ring.key)
        minimal = []
        for m in monos:
            if any(_edivides(m2, m) and m2 != m for m2 in monos):
                continue
            minimal.append(m)
        for m in minimal:
            target = _emul(m, gi.lead[1])
            j = next(
                j for j, mj in later
                if _edivides(G[j].lead[1], target)
            )
            mj = _ediv(target, G[j].lead[1])
            s = vsub(
                vmul_term(gi.vec, m, fld.one, fld),
                vmul_term(G[j].vec, mj, fld.one, fld),
                fld,
            )
            nf, q = divide(s, G, module, want_quotients=True)
            assert not nf, "s-pair of a Groebner basis must reduce to zero"
            z = {(i, m): fld.one, (j, mj): fld.neg(fld.one)}
            for k, qd in enumerate(q):
                if not qd:
                    continue
                for e, c in qd.items():
                    t = (k, e)
                    val = fld.sub(z.get(t, fld.zero), c)
                    if val:
                        z[t] = val
                    else:
                        z.pop(t, None)
            assert vlead(z, nxt) == (i, m), "Schreyer lead mismatch"
            out.append(z)
    return nxt, out


def syzygies_of(vectors, module: FreeModule):
    """Generating set of the syzygy module of arbitrary vectors.

    Uses a tracked completion: with G = V.U (U from tracking) and
    V = G.Q (by division), the syzygies are the transformed Schreyer
    syzygies together with the columns of I - U.Q.
    """
    ring = module.ring
    fld = ring.field
    nz = [(i, v) for i, v in enumerate(vectors) if v]
    n = len(vectors)
    out: list[dict] = []
    if not nz:
        return out
    G = module_gb([v for _, v in nz], module, track=True)
    index_map = [i for i, _ in nz]
    # columns of I - U.Q  (inputs re-expressed through the basis)
    for pos, (orig, v) in enumerate(nz):
        nf, q = divide(v, G, module, want_quotients=True)
        assert not nf, "input does not reduce to zero against its own basis"
        col: dict = {(orig, ring.zero_exps()): fld.one}
        for m, qd in enumerate(q):
            if not qd:
                continue
            for i_loc, p in (G[m].tracker or {}).items():
                i_orig = index_map[i_loc]
                for e1, c1 in qd.items():
                    for e2, c2 in p.items():
                        t = (i_orig, _emul(e1, e2))
                        val = fld.sub(col.get(t, fld.zero), fld.mul(c1, c2))
                        if val:
                            col[t] = val
                        else:
                            col.pop(t, None)
        if col:
            out.append(col)
    # transformed Schreyer syzygies
    _, Z = schreyer_syzygies(G, module)
    for z in Z:
        col = {}
        for (m, e1), c1 in z.items():
            for i_loc, p in (G[m].tracker or {}).items():
                i_orig = index_map[i_loc]
                for e2, c2 in p.items():
                    t = (i_orig, _emul(e1, e2))
                    val = fld.add(col.get(t, fld.zero), fld.mul(c1, c2))
                    if val:
                        col[t] = val
                    else:
                        col.pop(t, None)
        if col:
            out.append(col)
    # light dedupe of identical columns
    seen = set()
    unique = []
    for col in out:
        sig = tuple(sorted(col.items()))
        if sig in seen:
            continue
        seen.add(sig)
        unique.append(col)
    return unique
