"""Measure the multiplicity of J_m(x_1...x_r) along a component directly.

Nothing here knows the closed-form answer.  Coordinates off the component are
replaced by random nonzero rationals (a generic point of the component), the
component's own coordinates become y_1..y_{m+1}, and the length of the local
ring at the origin is read off as the stable value of

    d_N = dim_Q  Q[y] / (I + (y)^N),    N = 1, 2, ...

d_N is nondecreasing and bounded by the local length; d_N = d_{N+1} forces
(y)^N into the localized ideal by Nakayama, so the first repeat is the length.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .components import Composition, prime_of
from .groebner import INFINITE, buchberger, monomials_of_degree, quotient_dimension
from .jetideal import monomial_jet_generators
from .polycore import DEGREVLEX, ONE, JetVar, MonomialOrdering, Polynomial

DEFAULT_BOUND = 100
DEFAULT_N_MAX = 64
MAX_ROUNDS = 5
_SEED_MASK = (1 << 64) - 1
_RESEED_STEP = 0x9E3779B97F4A7C15


class OracleError(RuntimeError):
    pass


class NotMinimalError(OracleError):
    """d_N did not stabilize: the origin is not an isolated component."""


class GenericDisagreementError(OracleError):
    """Trials at independent random points kept disagreeing."""


def _rational_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


@dataclass(frozen=True)
class GenericSubstitution:
    seed: int
    values: dict

    @classmethod
    def draw(cls, seed: int, variables: Sequence[JetVar], bound: int = DEFAULT_BOUND) -> GenericSubstitution:
        """Independent uniform nonzero rationals p/q, 0 < |p| <= bound, 1 <= q <= bound."""
        rng = random.Random(seed)
        values = {}
        for v in sorted(variables):
            num = 0
            while num == 0:
                num = rng.randint(-bound, bound)
            values[v] = Fraction(num, rng.randint(1, bound))
        return cls(seed, values)

    def to_json(self) -> dict:
        return {str(v): _rational_str(c) for v, c in sorted(self.values.items())}


@dataclass(frozen=True)
class LocalLength:
    length: int
    truncation_order: int
    dimensions: tuple[int, ...]  # d_1, d_2, ..., d_{N+1}


def local_length_at_origin(
    gens: Sequence[Polynomial],
    n_max: int = DEFAULT_N_MAX,
    ordering: MonomialOrdering = DEGREVLEX,
) -> LocalLength:
    """Length of Q[y]_(y) / I at the origin, via truncation stabilization."""
    gens = [g for g in gens if g]
    variables = sorted(set().union(*(g.variables() for g in gens))) if gens else []
    if not variables:
        raise ValueError("local_length_at_origin needs generators in at least one variable")
    if any(g.coeff(ONE) for g in gens):
        raise ValueError("the origin does not lie on the input ideal")
    dims: list[int] = []
    for N in range(1, n_max + 2):
        G = buchberger(list(gens) + monomials_of_degree(variables, N), ordering)
        d = quotient_dimension(G)
        assert d != INFINITE
        dims.append(d)
        if len(dims) >= 2 and dims[-1] == dims[-2]:
            return LocalLength(dims[-2], N - 1, tuple(dims))
    raise NotMinimalError(f"d_N did not stabilize by N = {n_max}: {dims}")


@dataclass
class Trial:
    seed: int
    substitution: GenericSubstitution
    length: int
    truncation_order: int


@dataclass
class LengthResult:
    length: int
    truncation_order_used: int
    trials: list[Trial]
    bound: int = DEFAULT_BOUND
    rejected_rounds: list[list[Trial]] = field(default_factory=list)

    @property
    def lengths(self) -> list[int]:
        return [t.length for t in self.trials]

    def to_record(self) -> dict:
        """Replay record: enough to redo every accepted trial bit-exactly."""
        return {
            "seeds": [t.seed for t in self.trials],
            "B": self.bound,
            "N_used": self.truncation_order_used,
            "lengths": self.lengths,
            "substitutions": [t.substitution.to_json() for t in self.trials],
        }


def substituted_generators(
    r: int, m: int, c: Composition, substitution: GenericSubstitution
) -> list[Polynomial]:
    """g_0..g_m at the substituted point, with P-variables renamed to y_j := x{j}_0."""
    P = prime_of(c)
    gens = monomial_jet_generators(r, m).generators
    values = {v: Polynomial.const(x) for v, x in substitution.values.items()}
    rename = {v: Polynomial.var(JetVar(j, 0)) for j, v in enumerate(P.generators, start=1)}
    out = []
    for g in gens:
        h = g.substitute(values).substitute(rename)
        if h:
            out.append(h)
    return out


def off_component_variables(r: int, m: int, c: Composition) -> list[JetVar]:
    on = set(prime_of(c).generators)
    return [JetVar(i, j) for i in range(1, r + 1) for j in range(m + 1) if JetVar(i, j) not in on]


def run_trial(
    r: int, m: int, c: Composition, seed: int,
    bound: int = DEFAULT_BOUND, n_max: int = DEFAULT_N_MAX,
    ordering: MonomialOrdering = DEGREVLEX,
) -> Trial:
    sub = GenericSubstitution.draw(seed, off_component_variables(r, m, c), bound)
    ll = local_length_at_origin(substituted_generators(r, m, c, sub), n_max, ordering)
    return Trial(seed, sub, ll.length, ll.truncation_order)


def reseed(seeds: Sequence[int], round_: int) -> list[int]:
    return [(s + round_ * _RESEED_STEP) & _SEED_MASK for s in seeds]


def oracle_multiplicity(
    r: int, m: int, c: Composition, seeds: Sequence[int],
    bound: int = DEFAULT_BOUND, n_max: int = DEFAULT_N_MAX,
    ordering: MonomialOrdering = DEGREVLEX,
) -> LengthResult:
    """Multiplicity of J_m(x_1...x_r) along P(m; c), measured at random generic points.

    All trials of a round must agree.  A disagreeing round is retried with
    fresh seeds; after :data:`MAX_ROUNDS` rounds the oracle gives up.
    """
    if len(seeds) < 2:
        raise ValueError("oracle_multiplicity needs at least 2 seeds")
    if c.r != r or c.m != m:
        raise ValueError(f"composition {c} does not match r={r}, m={m}")
    rejected: list[list[Trial]] = []
    for round_ in range(MAX_ROUNDS):
        trials = [run_trial(r, m, c, s, bound, n_max, ordering) for s in reseed(seeds, round_)]
        if len({t.length for t in trials}) == 1:
            N = max(t.truncation_order for t in trials)
            return LengthResult(trials[0].length, N, trials, bound, rejected)
        rejected.append(trials)
    raise GenericDisagreementError(
        f"trials disagree after {MAX_ROUNDS} rounds for {c}: "
        + "; ".join(str([t.length for t in ts]) for ts in rejected)
    )
