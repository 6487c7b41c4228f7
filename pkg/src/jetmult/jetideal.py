"""Defining ideals J_m(X) of jet schemes.

The general builder substitutes every original variable x_i (written as the
order-0 JetVar ``x{i}_0``) by its truncated series and reads off the
t-coefficients. t never becomes a ring element: a series is a list of m+1
coefficient polynomials and products are truncated convolutions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .polycore import JetVar, Monomial, Polynomial

Series = list  # list[Polynomial] of length m + 1, index = power of t


def bounded_compositions(total: int, parts: int, cap: int) -> Iterator[tuple[int, ...]]:
    """Tuples of ``parts`` integers in [0, cap] summing to ``total``, lexicographic."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(total, cap) + 1):
        rest = total - first
        if rest > cap * (parts - 1):
            continue
        for tail in bounded_compositions(rest, parts - 1, cap):
            yield (first,) + tail


@dataclass(frozen=True)
class JetIdeal:
    """Generators of J_m(X), ordered by the power of t they came from.

    ``r`` is the number of monomial factors for the hypersurface x_1...x_r and
    ``None`` for ideals built from arbitrary generators.  ``indices[i]`` is the
    ``(k, l)`` pair naming generator i as the t^l coefficient of input k.
    """

    r: int | None
    m: int
    generators: tuple[Polynomial, ...]
    indices: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self) -> None:
        if not self.indices:
            object.__setattr__(self, "indices", tuple((0, l) for l in range(len(self.generators))))

    def __len__(self) -> int:
        return len(self.generators)

    def __getitem__(self, k: int) -> Polynomial:
        return self.generators[k]

    def to_json(self) -> dict:
        return {"r": self.r, "m": self.m, "generators": [str(g) for g in self.generators]}


# -- truncated series ---------------------------------------------------------


def generic_jet(v: JetVar, m: int) -> Series:
    """x_v^(0) + x_v^(1) t + ... + x_v^(m) t^m as its coefficient list."""
    return [Polynomial.var(JetVar(v.base, j)) for j in range(m + 1)]


def series_mul(a: Series, b: Series, m: int) -> Series:
    out = [Polynomial() for _ in range(m + 1)]
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j in range(m + 1 - i):
            if b[j]:
                out[i + j] = out[i + j] + ai * b[j]
    return out


def _series_const(c, m: int) -> Series:
    return [Polynomial.const(c)] + [Polynomial() for _ in range(m)]


def jet_expand(f: Polynomial, m: int) -> Series:
    """t-coefficients f^(0..m) of f evaluated at the generic m-jet."""
    total = [Polynomial() for _ in range(m + 1)]
    powers: dict[tuple[JetVar, int], Series] = {}
    for term in f.terms():
        acc = _series_const(term.coeff, m)
        for v, e in term.mono.items():
            if v.order != 0:
                raise ValueError(f"input generators must use order-0 variables, got {v}")
            if (v, e) not in powers:
                s = _series_const(1, m)
                base = generic_jet(v, m)
                for _ in range(e):
                    s = series_mul(s, base, m)
                powers[(v, e)] = s
            acc = series_mul(acc, powers[(v, e)], m)
        total = [x + y for x, y in zip(total, acc)]
    return total


def build_jet_ideal_general(gens: Sequence[Polynomial], m: int) -> JetIdeal:
    """J_m of the scheme cut out by ``gens``: coefficients of t^0..t^m for each generator."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if not gens:
        raise ValueError("at least one generator is required")
    out: list[Polynomial] = []
    idx: list[tuple[int, int]] = []
    for k, f in enumerate(gens):
        for l, coeff in enumerate(jet_expand(f, m)):
            out.append(coeff)
            idx.append((k, l))
    return JetIdeal(None, m, tuple(out), tuple(idx))


# -- monomial hypersurface x_1 ... x_r ---------------------------------------


def _composition_sum(bases: Sequence[int], k: int, m: int) -> Polynomial:
    """Sum of x_{b_1}^(i_1) ... x_{b_s}^(i_s) over i_1 + ... + i_s = k, 0 <= i_j <= m."""
    terms = {}
    for comp in bounded_compositions(k, len(bases), m):
        terms[Monomial((JetVar(b, i), 1) for b, i in zip(bases, comp))] = 1
    return Polynomial(terms)


def monomial_jet_generators(r: int, m: int) -> JetIdeal:
    """[g_0, ..., g_m] for X = V(x_1 ... x_r), built by enumerating bounded compositions."""
    if r < 1:
        raise ValueError("r must be >= 1 (the empty product defines the empty scheme)")
    if m < 0:
        raise ValueError("m must be nonnegative")
    bases = list(range(1, r + 1))
    gens = tuple(_composition_sum(bases, k, m) for k in range(m + 1))
    return JetIdeal(r, m, gens)


def hypersurface(r: int) -> Polynomial:
    """x_1 ... x_r in original (order-0) variables."""
    return Polynomial.monomial(Monomial.of(*(JetVar(i, 0) for i in range(1, r + 1))))


def rename_bases(p: Polynomial, mapping: dict[int, int]) -> Polynomial:
    """Relabel base indices, keeping jet orders; bases missing from ``mapping`` are kept."""
    return p.substitute(
        {v: Polynomial.var(JetVar(mapping[v.base], v.order)) for v in p.variables() if v.base in mapping}
    )


@dataclass(frozen=True)
class UnitFactorIdentity:
    """g_k written against the h_q: g_k == sum_q x_n^(k-q) h_q."""

    k: int
    lhs: Polynomial
    rhs: Polynomial

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def factor_out_unit_generators(J: JetIdeal, n: int) -> tuple[JetIdeal, list[UnitFactorIdentity]]:
    """Drop factor ``n`` whose x_n^(0) is a unit on the component.

    Returns ``(h, identities)`` where ``h = (h_0, ..., h_m)`` lives in the
    variables of the remaining bases (original labels kept) and each identity
    records g_k against the triangular combination of the h_q.
    """
    r, m = J.r, J.m
    if r is None:
        raise ValueError("factor_out_unit_generators needs a monomial-hypersurface jet ideal")
    if r == 1:
        raise ValueError("cannot factor out the only factor (r = 1)")
    if not 1 <= n <= r:
        raise ValueError(f"base index n={n} outside 1..{r}")
    rest = [b for b in range(1, r + 1) if b != n]
    h = [_composition_sum(rest, q, m) for q in range(m + 1)]
    identities = []
    for k in range(m + 1):
        rhs = Polynomial()
        for q in range(k + 1):
            rhs = rhs + Polynomial.var(JetVar(n, k - q)) * h[q]
        identities.append(UnitFactorIdentity(k, J.generators[k], rhs))
    return JetIdeal(r - 1, m, tuple(h)), identities


def shift_after_vanishing(J: JetIdeal, n: int) -> JetIdeal:
    """Set x_n^(0) = 0 in g_1..g_m, then lower every x_n^(q) to x_n^(q-1).

    For the hypersurface ideal at level m the result is the level m-1 list.
    """
    r, m = J.r, J.m
    if m < 1:
        raise ValueError("shift_after_vanishing needs m >= 1")
    if r is not None and not 1 <= n <= r:
        raise ValueError(f"base index n={n} outside 1..{r}")
    kill = {JetVar(n, 0): 0}
    shift = {JetVar(n, q): Polynomial.var(JetVar(n, q - 1)) for q in range(1, m + 1)}
    out = tuple(g.substitute(kill).substitute(shift) for g in J.generators[1:])
    return JetIdeal(r, m - 1, out)
