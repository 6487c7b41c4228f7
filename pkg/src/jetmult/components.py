"""Minimal primes P(m; t_1, ..., t_r) of J_m(x_1...x_r) and their multiplicities."""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from typing import Sequence

from .jetideal import bounded_compositions
from .polycore import JetVar, Polynomial


@dataclass(frozen=True)
class Composition:
    """Weak composition (t_1, ..., t_r) of m + 1.

    ``bases`` are the factor labels the parts belong to; they default to
    1..r and survive :func:`drop_zero_parts` so reports can name factors.
    """

    parts: tuple[int, ...]
    m: int
    bases: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.bases:
            object.__setattr__(self, "bases", tuple(range(1, len(self.parts) + 1)))
        if self.m < 0:
            raise ValueError("m must be nonnegative")
        if not self.parts:
            raise ValueError("a composition needs at least one part")
        if len(self.bases) != len(self.parts):
            raise ValueError("bases and parts differ in length")
        if any(t < 0 or t > self.m + 1 for t in self.parts):
            raise ValueError(f"parts must lie in [0, {self.m + 1}]: {self.parts}")
        if sum(self.parts) != self.m + 1:
            raise ValueError(f"parts {self.parts} do not sum to m + 1 = {self.m + 1}")

    @classmethod
    def of(cls, *parts: int) -> Composition:
        return cls(tuple(parts), sum(parts) - 1)

    @property
    def r(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class MinimalPrime:
    composition: Composition
    generators: tuple[JetVar, ...]

    @property
    def codimension(self) -> int:
        return len(self.generators)

    def contains(self, p: Polynomial) -> bool:
        """Termwise membership: each term divisible by some generator."""
        gens = set(self.generators)
        return all(any(v in gens for v in mo.variables()) for mo in p.monomials())


def prime_of(c: Composition) -> MinimalPrime:
    gens = tuple(JetVar(b, j) for b, t in zip(c.bases, c.parts) for j in range(t))
    return MinimalPrime(c, gens)


def enumerate_minimal_primes(r: int, m: int) -> list[MinimalPrime]:
    if r < 1:
        raise ValueError("r must be >= 1")
    if m < 0:
        raise ValueError("m must be nonnegative")
    return [prime_of(Composition(parts, m)) for parts in bounded_compositions(m + 1, r, m + 1)]


def multiplicity_formula(c: Composition) -> int:
    """(m+1)! / (t_1! ... t_r!)."""
    denom = 1
    for t in c.parts:
        denom *= math.factorial(t)
    return math.factorial(c.m + 1) // denom


def drop_zero_parts(c: Composition) -> Composition:
    """Remove t_i = 0 factors; their labels vanish from ``bases``."""
    kept = [(b, t) for b, t in zip(c.bases, c.parts) if t]
    return Composition(tuple(t for _, t in kept), c.m, tuple(b for b, _ in kept))


def removed_bases(c: Composition) -> tuple[int, ...]:
    return tuple(b for b, t in zip(c.bases, c.parts) if t == 0)


@functools.lru_cache(maxsize=None)
def _recursive(parts: tuple[int, ...]) -> int:
    # parts: sorted, all positive
    if sum(parts) == 1:
        return 1
    return sum(_recursive_lowered(parts, i) for i in range(len(parts)))


def _recursive_lowered(parts: tuple[int, ...], i: int) -> int:
    lowered = parts[:i] + (parts[i] - 1,) + parts[i + 1:]
    return _recursive(tuple(sorted(t for t in lowered if t)))


def multiplicity_recursive(c: Composition) -> int:
    """Multiplicity by the inductive argument: ell(m; t) = sum_n ell(m-1; t - e_n), ell = 1 at m = 0.

    Zero parts are dropped first; the memo key is the sorted multiset of
    positive parts.
    """
    return _recursive(tuple(sorted(drop_zero_parts(c).parts)))


@dataclass
class ComponentReport:
    prime: MinimalPrime
    multiplicity_formula: int
    multiplicity_recursive: int
    multiplicity_oracle: int | None = None
    oracle_trials: list = field(default_factory=list)
    verification: dict | None = None

    @property
    def status(self) -> str:
        values = {self.multiplicity_formula, self.multiplicity_recursive}
        if self.multiplicity_oracle is not None:
            values.add(self.multiplicity_oracle)
        if len(values) > 1:
            return "inconsistent"
        return "consistent" if self.multiplicity_oracle is not None else "unverified"

    def to_json(self) -> dict:
        out = {
            "t": list(self.prime.composition.parts),
            "prime": [str(v) for v in self.prime.generators],
            "mult_formula": str(self.multiplicity_formula),
            "mult_recursive": str(self.multiplicity_recursive),
            "mult_oracle": None if self.multiplicity_oracle is None else str(self.multiplicity_oracle),
            "status": self.status,
        }
        if self.verification is not None:
            out["verification"] = self.verification
        return out


@dataclass
class Census:
    r: int
    m: int
    components: list[ComponentReport]

    @property
    def mult_sum(self) -> int:
        return sum(c.multiplicity_formula for c in self.components)

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "m": self.m,
            "components": [c.to_json() for c in self.components],
            "mult_sum": str(self.mult_sum),
        }


def census(r: int, m: int) -> Census:
    rows = [
        ComponentReport(P, multiplicity_formula(P.composition), multiplicity_recursive(P.composition))
        for P in enumerate_minimal_primes(r, m)
    ]
    return Census(r, m, rows)


def component_count(r: int, m: int) -> int:
    return math.comb(m + r, r - 1)


def ideal_in_prime(gens: Sequence[Polynomial], prime: MinimalPrime) -> bool:
    return all(prime.contains(g) for g in gens)
