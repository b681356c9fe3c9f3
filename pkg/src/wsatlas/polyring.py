"""Exact multivariate polynomials with weighted monomial orders.

Terms are stored sparsely as {exponent tuple: coefficient}.  A ring
fixes variable names, positive integer weights, a monomial order and
the coefficient field.  Supported orders:

  wgrevlex   graded reverse lexicographic by weighted degree
  grevlex1   same tie-break but graded by total degree (unit weights)
  elim1      block order eliminating the first variable, then wgrevlex

The tie-break permutation lists variables from largest to smallest.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from functools import cached_property

from .errors import ArityMismatch, ZeroInput
from .fields import QQ, PrimeField

_ORDERS = ("wgrevlex", "grevlex1", "elim1")


@dataclass(frozen=True)
class WeightedRing:
    names: tuple[str, ...]
    weights: tuple[int, ...]
    order: str = "wgrevlex"
    permutation: tuple[int, ...] | None = None
    p: int | None = None

    def __post_init__(self):
        if len(self.names) != len(self.weights):
            raise ArityMismatch("one weight per variable required")
        if any(w < 1 for w in self.weights):
            raise ValueError("weights must be positive integers")
        if self.order not in _ORDERS:
            raise ValueError(f"unknown order {self.order}")
        if self.permutation is not None:
            if sorted(self.permutation) != list(range(len(self.names))):
                raise ValueError("permutation must be a bijection on variables")

    @property
    def nvars(self) -> int:
        return len(self.names)

    @cached_property
    def field(self):
        return QQ if self.p is None else PrimeField(self.p)

    @cached_property
    def _revperm(self) -> tuple[int, ...]:
        perm = self.permutation or tuple(range(self.nvars))
        return tuple(reversed(perm))

    def wdeg(self, exps) -> int:
        w = self.weights
        return sum(w[i] * e for i, e in enumerate(exps) if e)

    def key(self, exps):
        """Sort key: ascending under the ring's monomial order."""
        rev = self._revperm
        if self.order == "wgrevlex":
            return (self.wdeg(exps), tuple(-exps[i] for i in rev))
        if self.order == "grevlex1":
            return (sum(exps), tuple(-exps[i] for i in rev))
        # elim1: first variable dominates, then wgrevlex on the rest
        d = sum(self.weights[i] * e for i, e in enumerate(exps) if e and i > 0)
        return (exps[0], d, tuple(-exps[i] for i in rev if i > 0))

    def zero_exps(self) -> tuple[int, ...]:
        return (0,) * self.nvars

    def var_exps(self, i: int) -> tuple[int, ...]:
        return tuple(1 if j == i else 0 for j in range(self.nvars))

    def index(self, name: str) -> int:
        return self.names.index(name)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return Polynomial(self, {self.zero_exps(): self.field.one})

    def variable(self, i) -> "Polynomial":
        if isinstance(i, str):
            i = self.index(i)
        return Polynomial(self, {self.var_exps(i): self.field.one})

    def monomial(self, exps, coeff=1) -> "Polynomial":
        c = self.field.of(coeff)
        return Polynomial(self, {tuple(exps): c} if c else {})

    def with_field(self, p: int | None) -> "WeightedRing":
        return WeightedRing(self.names, self.weights, self.order, self.permutation, p)


def compare_monomials(ring: WeightedRing, a, b) -> int:
    """-1, 0 or 1 as a <, =, > b under the ring's monomial order."""
    a, b = tuple(a), tuple(b)
    if len(a) != ring.nvars or len(b) != ring.nvars:
        raise ArityMismatch("exponent vectors must match the ring arity")
    ka, kb = ring.key(a), ring.key(b)
    return (ka > kb) - (ka < kb)


def _emul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _ediv(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _edivides(a, b):
    return all(x <= y for x, y in zip(a, b))


class Polynomial:
    """Immutable sparse polynomial over a WeightedRing."""

    __slots__ = ("ring", "terms", "_lead")

    def __init__(self, ring: WeightedRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._lead = None

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring.names, tuple(sorted(self.terms.items()))))

    def lead_exps(self):
        if self._lead is None and self.terms:
            self._lead = max(self.terms, key=self.ring.key)
        return self._lead

    def lead_coeff(self):
        le = self.lead_exps()
        return self.terms[le] if le is not None else self.ring.field.zero

    def wdeg(self) -> int:
        """Weighted degree (max over terms)."""
        if not self.terms:
            return -1
        return max(self.ring.wdeg(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {self.ring.wdeg(e) for e in self.terms}
        return len(degs) <= 1

    def __add__(self, other):
        fld = self.ring.field
        res = dict(self.terms)
        for e, c in other.terms.items():
            v = fld.add(res.get(e, fld.zero), c)
            if v:
                res[e] = v
            else:
                res.pop(e, None)
        return Polynomial(self.ring, res)

    def __sub__(self, other):
        fld = self.ring.field
        res = dict(self.terms)
        for e, c in other.terms.items():
            v = fld.sub(res.get(e, fld.zero), c)
            if v:
                res[e] = v
            else:
                res.pop(e, None)
        return Polynomial(self.ring, res)

    def __neg__(self):
        neg = self.ring.field.neg
        return Polynomial(self.ring, {e: neg(c) for e, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        fld = self.ring.field
        res: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _emul(e1, e2)
                v = fld.add(res.get(e, fld.zero), fld.mul(c1, c2))
                if v:
                    res[e] = v
                else:
                    res.pop(e, None)
        return Polynomial(self.ring, res)

    __rmul__ = __mul__

    def scale(self, c):
        fld = self.ring.field
        c = fld.of(c)
        if not c:
            return Polynomial(self.ring, {})
        return Polynomial(self.ring, {e: fld.mul(c, v) for e, v in self.terms.items()})

    def mul_term(self, exps, coeff):
        fld = self.ring.field
        if not coeff:
            return Polynomial(self.ring, {})
        return Polynomial(
            self.ring,
            {_emul(e, exps): fld.mul(coeff, v) for e, v in self.terms.items()},
        )

    def monic(self):
        lc = self.lead_coeff()
        if not lc or lc == self.ring.field.one:
            return self
        inv = self.ring.field.inv(lc)
        return self.scale(inv)

    def constant_term(self):
        return self.terms.get(self.ring.zero_exps(), self.ring.field.zero)

    def degree_in(self, i: int) -> int:
        """Largest exponent of variable i."""
        return max((e[i] for e in self.terms), default=0)

    def coefficient_sum(self):
        """Image under all variables -> 1; for homogeneous p this is the
        coefficient of the semigroup-ring image."""
        fld = self.ring.field
        acc = fld.zero
        for c in self.terms.values():
            acc = fld.add(acc, c)
        return acc

    def substitute(self, mapping: dict):
        """Substitute variables (by index) with polynomials."""
        ring = self.ring
        out = ring.zero()
        powers: dict = {}
        for e, c in self.terms.items():
            piece = ring.monomial(
                tuple(0 if i in mapping else x for i, x in enumerate(e)), c
            )
            for i, exp in enumerate(e):
                if i in mapping and exp:
                    key = (i, exp)
                    if key not in powers:
                        p = ring.one()
                        for _ in range(exp):
                            p = p * mapping[i]
                        powers[key] = p
                    piece = piece * powers[key]
            out = out + piece
        return out

    def map_coeffs(self, target_ring: WeightedRing):
        """Recoerce coefficients into another ring with the same variables."""
        fld = target_ring.field
        res = {}
        for e, c in self.terms.items():
            v = fld.of(c)
            if v:
                res[e] = v
        return Polynomial(target_ring, res)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: self.ring.key(t[0]), reverse=True)

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"<{format_polynomial(self)}>"


def format_polynomial(p: Polynomial) -> str:
    """Deterministic human-readable form, descending monomial order."""
    if not p.terms:
        return "0"
    ring = p.ring
    chunks = []
    for e, c in p.sorted_terms():
        factors = []
        for i, exp in enumerate(e):
            if exp == 1:
                factors.append(ring.names[i])
            elif exp > 1:
                factors.append(f"{ring.names[i]}^{exp}")
        mono = "*".join(factors)
        coeff = str(c)
        if mono:
            if coeff == "1":
                part = mono
            elif coeff == "-1":
                part = f"-{mono}"
            else:
                part = f"{coeff}*{mono}"
        else:
            part = coeff
        chunks.append(part)
    out = chunks[0]
    for part in chunks[1:]:
        if part.startswith("-"):
            out += " - " + part[1:]
        else:
            out += " + " + part
    return out


_TOKEN = re.compile(r"\s*([A-Za-z_][A-Za-z_0-9]*|\d+/\d+|\d+|\^|\*|\+|-)")


def parse_polynomial(ring: WeightedRing, text: str) -> Polynomial:
    """Parse "3*x^2*y - 1/2*z" style input."""
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ValueError(f"cannot parse {text[pos:]!r}")
            break
        tokens.append(m.group(1))
        pos = m.end()
    fld = ring.field
    result = ring.zero()
    i = 0
    n = len(tokens)
    while i < n:
        sign = 1
        while i < n and tokens[i] in "+-":
            if tokens[i] == "-":
                sign = -sign
            i += 1
        if i >= n:
            raise ValueError("trailing sign in polynomial")
        coeff = fld.of(sign)
        exps = [0] * ring.nvars
        expect_factor = True
        while i < n and tokens[i] not in "+-":
            tok = tokens[i]
            if tok == "*":
                i += 1
                continue
            if re.fullmatch(r"\d+/\d+|\d+", tok):
                num = tok
                i += 1
                power = 1
                if i < n and tokens[i] == "^":
                    raise ValueError("cannot raise a coefficient to a power")
                if "/" in num:
                    a, b = num.split("/")
                    coeff = fld.mul(coeff, fld.div(fld.of(int(a)), fld.of(int(b))))
                else:
                    coeff = fld.mul(coeff, fld.of(int(num)))
                continue
            if tok not in ring.names:
                raise ValueError(f"unknown variable {tok!r}")
            vi = ring.index(tok)
            i += 1
            power = 1
            if i < n and tokens[i] == "^":
                i += 1
                power = int(tokens[i])
                i += 1
            exps[vi] += power
        if coeff:
            result = result + ring.monomial(tuple(exps), coeff)
    return result


def reduce_by_set(p: Polynomial, G) -> tuple[Polynomial, list[Polynomial]]:
    """Full division: p = sum(q_i G_i) + nf, no nf term divisible by a lead.

    Returns (normal_form, quotients) with quotients aligned to G.
    """
    ring = p.ring
    fld = ring.field
    divisors = [(g.lead_exps(), fld.inv(g.lead_coeff()), g) for g in G if g]
    div_index = [i for i, g in enumerate(G) if g]
    key = ring.key
    work = dict(p.terms)
    nf: dict = {}
    quotients = [dict() for _ in G]
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        for slot, (lexp, linv, g) in enumerate(divisors):
            if _edivides(lexp, m):
                q_exps = _ediv(m, lexp)
                q_coeff = fld.mul(c, linv)
                qd = quotients[div_index[slot]]
                q_prev = qd.get(q_exps, fld.zero)
                q_new = fld.add(q_prev, q_coeff)
                if q_new:
                    qd[q_exps] = q_new
                else:
                    qd.pop(q_exps, None)
                for e2, c2 in g.terms.items():
                    if e2 == lexp:
                        continue
                    e = _emul(q_exps, e2)
                    v = fld.sub(work.get(e, fld.zero), fld.mul(q_coeff, c2))
                    if v:
                        work[e] = v
                    else:
                        work.pop(e, None)
                break
        else:
            nf[m] = c
    return Polynomial(ring, nf), [Polynomial(ring, q) for q in quotients]


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """The lcm-cancellation combination of f and g."""
    if not f or not g:
        raise ZeroInput("s-polynomial of a zero polynomial")
    fld = f.ring.field
    lf, lg = f.lead_exps(), g.lead_exps()
    lcm = tuple(max(a, b) for a, b in zip(lf, lg))
    mf = f.mul_term(_ediv(lcm, lf), fld.inv(f.lead_coeff()))
    mg = g.mul_term(_ediv(lcm, lg), fld.inv(g.lead_coeff()))
    return mf - mg
