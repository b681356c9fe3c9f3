"""Numerical semigroup combinatorics: construction, invariants, enumeration.

A numerical semigroup is a cofinite subset of the nonnegative integers
closed under addition and containing 0.  Everything here is exact small
integer arithmetic; gap data is computed once by a boolean sieve and
frozen into the immutable semigroup object.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .errors import BoundExceeded, Empty, NotMember, NotNumerical

GENUS_CEILING = 25


@dataclass(frozen=True)
class AperyData:
    """Least semigroup element in each residue class mod `modulus`."""

    modulus: int
    representatives: tuple[int, ...]


@dataclass(frozen=True)
class NumericalSemigroup:
    generators: tuple[int, ...]
    gaps: tuple[int, ...]
    _members: frozenset = field(repr=False)

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    @property
    def genus(self) -> int:
        return len(self.gaps)

    @property
    def frobenius(self) -> int:
        return self.gaps[-1] if self.gaps else -1

    @property
    def conductor(self) -> int:
        return self.frobenius + 1

    def contains(self, n: int) -> bool:
        if n < 0:
            return False
        if n >= self.conductor:
            return True
        return n in self._members

    def embedding_dimension(self) -> int:
        return len(self.generators)

    def __str__(self) -> str:
        return ",".join(str(g) for g in self.generators)

    def label_key(self) -> tuple[int, ...]:
        return self.generators

    def to_json(self) -> dict:
        return {
            "generators": list(self.generators),
            "gaps": list(self.gaps),
            "genus": self.genus,
            "frobenius": self.frobenius,
            "type": type_lambda(self) if self.genus else 0,
        }


def _sieve(gens: tuple[int, ...], bound: int) -> list[bool]:
    member = [False] * (bound + 1)
    member[0] = True
    for i in range(1, bound + 1):
        for g in gens:
            if g <= i and member[i - g]:
                member[i] = True
                break
    return member


def _minimalize(gens: tuple[int, ...]) -> tuple[int, ...]:
    """Drop generators that are sums of the others."""
    gens = tuple(sorted(set(gens)))
    kept: list[int] = []
    for g in gens:
        bound = g
        reachable = [False] * (bound + 1)
        reachable[0] = True
        for i in range(1, bound + 1):
            for h in gens:
                if h == g or h > i:
                    continue
                if reachable[i - h]:
                    reachable[i] = True
                    break
        if not reachable[g]:
            kept.append(g)
    return tuple(kept)


def from_generators(raw) -> NumericalSemigroup:
    """Semigroup generated by `raw`, with minimal generators and exact gaps."""
    raw = tuple(int(x) for x in raw)
    if not raw:
        raise Empty("no generators given")
    if any(x <= 0 for x in raw):
        raise NotNumerical("generators must be positive")
    g = 0
    for x in raw:
        g = gcd(g, x)
    if g != 1:
        raise NotNumerical(f"gcd of generators is {g}, not 1")
    gens = _minimalize(raw)
    if gens == (1,):
        return NumericalSemigroup((1,), (), frozenset({0}))
    # Frobenius(n1, n2) <= n1*n2, which bounds the whole semigroup's gaps
    bound = gens[0] * gens[1]
    member = _sieve(gens, bound)
    frob = max(i for i in range(bound + 1) if not member[i])
    gaps = tuple(i for i in range(1, frob + 1) if not member[i])
    members = frozenset(i for i in range(frob + 2) if member[i])
    return NumericalSemigroup(gens, gaps, members)


def from_gaps(gaps) -> NumericalSemigroup:
    """Semigroup with the given gap set (assumed valid)."""
    gaps = tuple(sorted(gaps))
    if not gaps:
        return NumericalSemigroup((1,), (), frozenset({0}))
    frob = gaps[-1]
    gapset = set(gaps)
    members = [i for i in range(2 * frob + 2) if i not in gapset]
    memberset = set(members)
    gens = []
    for m in members:
        if m == 0:
            continue
        if not any(a in memberset and m - a in memberset for a in range(1, m)):
            gens.append(m)
        if gens and m > frob + gens[0]:
            break
    return NumericalSemigroup(tuple(gens), gaps, frozenset(m for m in members if m <= frob + 1))


def apery_set(S: NumericalSemigroup, n: int) -> AperyData:
    """Apéry set of S with respect to a nonzero element n."""
    if n <= 0 or not S.contains(n):
        raise NotMember(f"{n} is not a nonzero element of the semigroup")
    reps = [-1] * n
    count = 0
    k = 0
    while count < n:
        if S.contains(k) and reps[k % n] < 0:
            reps[k % n] = k
            count += 1
        k += 1
    return AperyData(n, tuple(reps))


def type_lambda(S: NumericalSemigroup) -> int:
    """The type: gaps l with l + n in S for every nonzero n in S.

    It suffices to test n among the generators; under -O0 the full
    definition (all nongaps up to the conductor) is asserted equal.
    """
    if S.genus < 1:
        raise ValueError("type is defined for semigroups with at least one gap")
    qualifying = [
        l for l in S.gaps if all(S.contains(l + g) for g in S.generators)
    ]
    if __debug__:
        nongaps = [n for n in range(1, 2 * S.conductor + 1) if S.contains(n)]
        literal = [
            l for l in S.gaps if all(S.contains(l + n) for n in nongaps)
        ]
        assert literal == qualifying, "generator test disagrees with definition"
    return len(qualifying)


def pseudo_frobenius(S: NumericalSemigroup) -> tuple[int, ...]:
    """Gaps l with l + n in S for all nonzero n in S (the type-counting set)."""
    return tuple(
        l for l in S.gaps if all(S.contains(l + g) for g in S.generators)
    )


def _children(S: NumericalSemigroup):
    """Semigroup tree: remove one minimal generator larger than the Frobenius."""
    for g in S.generators:
        if g > S.frobenius:
            yield from_gaps(S.gaps + (g,))


def enumerate_by_genus(g_max: int, ceiling: int = GENUS_CEILING):
    """All semigroups of genus <= g_max, keyed by genus.

    Exhaustive and duplicate free via the semigroup tree; within a genus
    the order is lexicographic on gap sequences.
    """
    if g_max > ceiling:
        raise BoundExceeded(f"genus bound {g_max} above ceiling {ceiling}")
    by_genus: dict[int, list[NumericalSemigroup]] = {g: [] for g in range(g_max + 1)}
    frontier = [from_generators([1])]
    by_genus[0] = list(frontier)
    for g in range(1, g_max + 1):
        nxt = []
        for S in frontier:
            nxt.extend(_children(S))
        nxt.sort(key=lambda s: s.gaps)
        by_genus[g] = nxt
        frontier = nxt
    return by_genus


def parse_generators(text: str) -> tuple[int, ...]:
    """Parse a comma or space separated generator list like "4,6,11,13"."""
    parts = text.replace(",", " ").split()
    if not parts:
        raise Empty("no generators in input")
    return tuple(int(p) for p in parts)
