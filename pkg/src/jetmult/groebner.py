"""Buchberger's algorithm over Q with a global monomial ordering.

Public functions take and return :class:`~jetmult.polycore.Polynomial`; the
work happens on dense exponent tuples over the sorted variable list of the
input (index 0 is the largest variable).
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .polycore import DEGREVLEX, JetVar, Monomial, MonomialOrdering, Polynomial

INFINITE = math.inf

Exp = tuple  # tuple[int, ...]
_Poly = dict  # dict[Exp, Fraction]


class _Ring:
    def __init__(self, variables: Sequence[JetVar], ordering: MonomialOrdering):
        self.variables = tuple(variables)
        self.index = {v: i for i, v in enumerate(self.variables)}
        self.n = len(self.variables)
        self.ordering = ordering
        self._keys: dict[Exp, tuple] = {}
        if ordering.kind == "degrevlex":
            self._raw_key: Callable[[Exp], tuple] = lambda e: (sum(e), tuple(-x for x in reversed(e)))
        else:
            self._raw_key = lambda e: e

    def key(self, e: Exp) -> tuple:
        k = self._keys.get(e)
        if k is None:
            k = self._keys[e] = self._raw_key(e)
        return k

    def to_internal(self, p: Polynomial) -> _Poly:
        out = {}
        for mo, c in p.as_dict().items():
            e = [0] * self.n
            for v, k in mo.items():
                e[self.index[v]] = k
            out[tuple(e)] = c
        return out

    def to_polynomial(self, f: _Poly) -> Polynomial:
        return Polynomial(
            {Monomial((self.variables[i], k) for i, k in enumerate(e) if k): c for e, c in f.items()}
        )

    def lm(self, f: _Poly) -> Exp:
        return max(f, key=self.key)


def _divides(a: Exp, b: Exp) -> bool:
    return all(map(operator.le, a, b))


def _lcm(a: Exp, b: Exp) -> Exp:
    return tuple(max(x, y) for x, y in zip(a, b))


def _sub(a: Exp, b: Exp) -> Exp:
    return tuple(x - y for x, y in zip(a, b))


def _add(a: Exp, b: Exp) -> Exp:
    return tuple(x + y for x, y in zip(a, b))


def _coprime(a: Exp, b: Exp) -> bool:
    return not any(x and y for x, y in zip(a, b))


def _monic(f: _Poly, lm: Exp) -> _Poly:
    c = f[lm]
    if c == 1:
        return f
    return {e: v / c for e, v in f.items()}


def _reduce(ring: _Ring, f: _Poly, basis: list[_Poly], leads: list[Exp]) -> _Poly:
    """Full remainder of f on division by monic ``basis``."""
    f = dict(f)
    rem: _Poly = {}
    key = ring.key
    while f:
        lm = max(f, key=key)
        c = f[lm]
        for g, lg in zip(basis, leads):
            if _divides(lg, lm):
                shift = _sub(lm, lg)
                for e, v in g.items():
                    t = _add(e, shift)
                    s = f.get(t, 0) - c * v
                    if s:
                        f[t] = s
                    else:
                        del f[t]
                break
        else:
            rem[lm] = c
            del f[lm]
    return rem


def _spoly(f: _Poly, lf: Exp, g: _Poly, lg: Exp) -> _Poly:
    lcm = _lcm(lf, lg)
    sf, sg = _sub(lcm, lf), _sub(lcm, lg)
    out: _Poly = {}
    for e, v in f.items():
        out[_add(e, sf)] = v
    for e, v in g.items():
        t = _add(e, sg)
        s = out.get(t, 0) - v
        if s:
            out[t] = s
        else:
            out.pop(t, None)
    return out


def _update(ring: _Ring, leads: list[Exp], pairs: set, h_lead: Exp) -> set:
    """Gebauer-Moeller update of the pair set when a new lead ``h_lead`` joins as index len(leads)."""
    new = len(leads)
    kept = set()
    for i, j in pairs:
        lij = _lcm(leads[i], leads[j])
        if (
            not _divides(h_lead, lij)
            or lij == _lcm(leads[i], h_lead)
            or lij == _lcm(leads[j], h_lead)
        ):
            kept.add((i, j))
    by_lcm: dict[Exp, list[int]] = {}
    for i, li in enumerate(leads):
        by_lcm.setdefault(_lcm(li, h_lead), []).append(i)
    minimal: list[Exp] = []
    for L in sorted(by_lcm, key=ring.key):
        if all(not _divides(M, L) for M in minimal):
            minimal.append(L)
    for L in minimal:
        idx = by_lcm[L]
        # Buchberger's first criterion: coprime leads reduce to zero
        if any(_coprime(leads[i], h_lead) for i in idx):
            continue
        kept.add((min(idx), new))
    return kept


@dataclass(frozen=True)
class GroebnerBasis:
    ordering: MonomialOrdering
    basis: tuple[Polynomial, ...]
    reduced: bool
    variables: tuple[JetVar, ...]

    def leading_monomials(self) -> list[Monomial]:
        return [g.leading_term(self.ordering).mono for g in self.basis]

    def is_unit_ideal(self) -> bool:
        return any(g.is_constant() and not g.is_zero() for g in self.basis)

    def __len__(self) -> int:
        return len(self.basis)


def _buchberger_internal(ring: _Ring, polys: list[_Poly]) -> list[_Poly]:
    basis: list[_Poly] = []
    leads: list[Exp] = []
    pairs: set = set()
    for f in polys:
        if not f:
            continue
        lf = ring.lm(f)
        pairs = _update(ring, leads, pairs, lf)
        basis.append(_monic(f, lf))
        leads.append(lf)
    while pairs:
        # normal strategy: smallest lcm first, ties broken by index for determinism
        i, j = min(pairs, key=lambda p: (ring.key(_lcm(leads[p[0]], leads[p[1]])), p))
        pairs.remove((i, j))
        s = _spoly(basis[i], leads[i], basis[j], leads[j])
        h = _reduce(ring, s, basis, leads)
        if h:
            lh = ring.lm(h)
            pairs = _update(ring, leads, pairs, lh)
            basis.append(_monic(h, lh))
            leads.append(lh)
    return _interreduce(ring, basis, leads)


def _interreduce(ring: _Ring, basis: list[_Poly], leads: list[Exp]) -> list[_Poly]:
    order = sorted(range(len(basis)), key=lambda i: ring.key(leads[i]))
    minimal: list[int] = []
    for i in order:
        if not any(_divides(leads[j], leads[i]) for j in minimal):
            minimal.append(i)
    out = []
    for i in minimal:
        others = [basis[j] for j in minimal if j != i]
        other_leads = [leads[j] for j in minimal if j != i]
        lead_term = {leads[i]: basis[i][leads[i]]}
        tail = {e: v for e, v in basis[i].items() if e != leads[i]}
        g = dict(lead_term)
        g.update(_reduce(ring, tail, others, other_leads))
        out.append(_monic(g, leads[i]))
    return out


def buchberger(gens: Sequence[Polynomial], ordering: MonomialOrdering = DEGREVLEX) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    The result is sorted by increasing leading monomial and depends only on
    the ideal and the ordering.
    """
    if not gens or all(g.is_zero() for g in gens):
        raise ValueError("buchberger needs at least one nonzero generator")
    variables = tuple(sorted(set().union(*(g.variables() for g in gens))))
    ring = _Ring(variables, ordering)
    basis = _buchberger_internal(ring, [ring.to_internal(g) for g in gens])
    return GroebnerBasis(ordering, tuple(ring.to_polynomial(g) for g in basis), True, variables)


def _ring_for(G: GroebnerBasis, extra: Iterable[JetVar] = ()) -> _Ring:
    return _Ring(tuple(sorted(set(G.variables) | set(extra))), G.ordering)


def normal_form(p: Polynomial, G: GroebnerBasis) -> Polynomial:
    """Remainder of ``p`` on division by ``G``; no term is divisible by a leading monomial."""
    ring = _ring_for(G, p.variables())
    basis = [ring.to_internal(g) for g in G.basis]
    leads = [ring.lm(g) for g in basis]
    return ring.to_polynomial(_reduce(ring, ring.to_internal(p), basis, leads))


def standard_monomials(G: GroebnerBasis, limit: int | None = None) -> list[Monomial]:
    """Monomials in G's variables divisible by no leading monomial (requires a finite quotient)."""
    ring = _ring_for(G)
    leads = [ring.lm(ring.to_internal(g)) for g in G.basis]
    if any(not any(e) for e in leads):
        return []
    found = []
    frontier = [tuple([0] * ring.n)]
    seen = set(frontier)
    while frontier:
        nxt = []
        for e in frontier:
            found.append(e)
            if limit is not None and len(found) > limit:
                raise ValueError("standard monomial count exceeds limit")
            for i in range(ring.n):
                t = e[:i] + (e[i] + 1,) + e[i + 1:]
                if t not in seen and not any(_divides(l, t) for l in leads):
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt
    return [Monomial((ring.variables[i], k) for i, k in enumerate(e) if k) for e in found]


def quotient_dimension(G: GroebnerBasis) -> int | float:
    """dim_Q of R/(G) over the variables of G; :data:`INFINITE` when not zero-dimensional."""
    ring = _ring_for(G)
    leads = [ring.lm(ring.to_internal(g)) for g in G.basis]
    if any(not any(e) for e in leads):
        return 0
    for i in range(ring.n):
        if not any(e[i] and sum(e) == e[i] for e in leads):
            return INFINITE
    return len(standard_monomials(G))


def s_polynomial(f: Polynomial, g: Polynomial, ordering: MonomialOrdering = DEGREVLEX) -> Polynomial:
    variables = tuple(sorted(f.variables() | g.variables()))
    ring = _Ring(variables, ordering)
    fi, gi = ring.to_internal(f), ring.to_internal(g)
    lf, lg = ring.lm(fi), ring.lm(gi)
    return ring.to_polynomial(_spoly(_monic(fi, lf), lf, _monic(gi, lg), lg))


def monomials_of_degree(variables: Sequence[JetVar], degree: int) -> list[Polynomial]:
    """All monomials of the given total degree, as polynomials."""
    out = []

    def rec(i: int, left: int, acc: list[tuple[JetVar, int]]):
        if i == len(variables) - 1:
            out.append(Polynomial.monomial(Monomial(acc + [(variables[i], left)])))
            return
        for k in range(left, -1, -1):
            rec(i + 1, left - k, acc + [(variables[i], k)])

    if variables:
        rec(0, degree, [])
    return out


def ideal_contains(G: GroebnerBasis, p: Polynomial) -> bool:
    return normal_form(p, G).is_zero()

