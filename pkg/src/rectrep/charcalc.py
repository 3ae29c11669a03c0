"""Formal characters of finite-dimensional representations.

Irreducible characters come from the Freudenthal multiplicity recursion,
evaluated in exact rational arithmetic; the Weyl dimension formula is kept
as an independent oracle for the total mass.  Characters of product
algebras are assembled factor by factor and tensored, never computed by a
product-algebra recursion.

All character entries are keyed by fundamental-weight coordinate tuples;
the algebra on the container fixes their meaning.  Named aliases (std,
spin, spin+, spin-, sym k, wedge k, triv, dual) resolve to dominant
weights here, per simple family.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .exactlin import IntVector, solve_exact
from .liealg import (SemisimpleAlgebra, SimpleType, Weight,
                     dominant_conjugate_coords, positive_root_coords,
                     symmetrizer, weyl_orbit_coords)


@lru_cache(maxsize=None)
def _cartan_inverse(t: SimpleType) -> tuple[tuple[Fraction, ...], ...]:
    from .liealg import cartan_matrix
    c = cartan_matrix(t)
    m = t.rank
    cols = []
    for j in range(m):
        unit = tuple(int(i == j) for i in range(m))
        cols.append(solve_exact(c, unit))
    return tuple(tuple(cols[j][i] for j in range(m)) for i in range(m))


@lru_cache(maxsize=None)
def _gram(t: SimpleType) -> tuple[tuple[Fraction, ...], ...]:
    """Gram matrix of the fundamental weights, G = diag(d) . C^-1.

    Normalized so (alpha, alpha)/2 equals the symmetrizer entry; any
    positive scaling works since the recursion only uses ratios.
    """
    cinv = _cartan_inverse(t)
    d = symmetrizer(t)
    return tuple(tuple(d[i] * cinv[i][j] for j in range(t.rank))
                 for i in range(t.rank))


def _gram_vec(t: SimpleType, v: IntVector) -> tuple[Fraction, ...]:
    g = _gram(t)
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in g)


def _ip(t: SimpleType, u, gv) -> Fraction:
    return sum(a * b for a, b in zip(u, gv))


@lru_cache(maxsize=None)
def _single_algebra(t: SimpleType) -> SemisimpleAlgebra:
    return SemisimpleAlgebra((t,))


@lru_cache(maxsize=None)
def _dominant_weights(t: SimpleType, hw: IntVector) -> tuple[IntVector, ...]:
    """Dominant weights of the irreducible with highest weight hw.

    These are exactly the dominant mu with hw - mu a nonnegative integer
    combination c of simple roots; c is bounded entrywise by C^-1.hw
    because C^-1 is entrywise nonnegative.  Sorted by depth sum(c).
    """
    from .liealg import cartan_matrix
    m = t.rank
    c = cartan_matrix(t)
    cinv = _cartan_inverse(t)
    bounds = [int(sum(cinv[i][j] * hw[j] for j in range(m))) for i in range(m)]
    found = []
    stack = [(0, [0] * m)]
    while stack:
        idx, cur = stack.pop()
        if idx == m:
            mu = tuple(hw[i] - sum(c[i][j] * cur[j] for j in range(m))
                       for i in range(m))
            if all(x >= 0 for x in mu):
                found.append((sum(cur), mu))
            continue
        for val in range(bounds[idx] + 1):
            nxt = cur.copy()
            nxt[idx] = val
            stack.append((idx + 1, nxt))
    found.sort()
    return tuple(mu for _, mu in found)


@lru_cache(maxsize=None)
def _simple_character(t: SimpleType, hw: IntVector) -> tuple[tuple[IntVector, int], ...]:
    """Full weight multiset of one simple-factor irreducible (Freudenthal)."""
    if any(x < 0 for x in hw):
        raise ValueError(f"highest weight {hw} is not dominant")
    alg = _single_algebra(t)
    m = t.rank
    rho = (1,) * m
    roots = [(a, _gram_vec(t, a)) for a in positive_root_coords(t)]
    lam_rho = tuple(x + 1 for x in hw)
    top_norm = _ip(t, lam_rho, _gram_vec(t, lam_rho))
    mults: dict[IntVector, int] = {}
    for mu in _dominant_weights(t, hw):
        if mu == hw:
            mults[mu] = 1
            continue
        total = Fraction(0)
        for alpha, galpha in roots:
            k = 1
            while True:
                nu = tuple(a + k * b for a, b in zip(mu, alpha))
                known = mults.get(dominant_conjugate_coords(alg, nu))
                if known is None:
                    break
                total += known * _ip(t, nu, galpha)
                k += 1
        mu_rho = tuple(x + 1 for x in mu)
        denom = top_norm - _ip(t, mu_rho, _gram_vec(t, mu_rho))
        val = 2 * total / denom
        if val.denominator != 1 or val <= 0:
            raise AssertionError(f"non-integral multiplicity at {mu}")
        mults[mu] = int(val)
    entries = []
    for mu, mult in mults.items():
        for w in weyl_orbit_coords(alg, mu):
            entries.append((w, mult))
    entries.sort()
    return tuple(entries)


@dataclass
class FormalCharacter:
    """A weight multiset: coordinate tuple -> positive multiplicity."""

    algebra: SemisimpleAlgebra
    entries: dict[IntVector, int] = field(default_factory=dict)

    @property
    def mass(self) -> int:
        return sum(self.entries.values())

    @property
    def support(self) -> frozenset[IntVector]:
        return frozenset(self.entries)

    def weight_items(self):
        for coords, mult in sorted(self.entries.items()):
            yield Weight(self.algebra, coords), mult


@dataclass(frozen=True)
class RepSpec:
    """A finite-dimensional representation as a sum of irreducibles.

    Summands are (highest weight, multiplicity) pairs, kept sorted by
    coordinates and deduplicated, so equal representations compare equal.
    """

    algebra: SemisimpleAlgebra
    summands: tuple[tuple[Weight, int], ...]

    def __post_init__(self):
        merged: dict[IntVector, int] = {}
        for hw, mult in self.summands:
            if hw.algebra != self.algebra:
                raise ValueError("summand belongs to a different algebra")
            if not hw.is_dominant:
                raise ValueError(f"{hw.coords} is not dominant")
            if mult < 1:
                raise ValueError("multiplicities must be positive")
            merged[hw.coords] = merged.get(hw.coords, 0) + mult
        canon = tuple((Weight(self.algebra, c), m)
                      for c, m in sorted(merged.items()))
        object.__setattr__(self, "summands", canon)

    @classmethod
    def make(cls, algebra: SemisimpleAlgebra, summands) -> "RepSpec":
        """Build from (coords-or-Weight, multiplicity) pairs."""
        pairs = []
        for hw, mult in summands:
            if not isinstance(hw, Weight):
                hw = Weight(algebra, tuple(hw))
            pairs.append((hw, mult))
        return cls(algebra, tuple(pairs))

    @property
    def dimension(self) -> int:
        return sum(mult * weyl_dimension(self.algebra, hw)
                   for hw, mult in self.summands)


def _coords_of(algebra: SemisimpleAlgebra, hw) -> IntVector:
    if isinstance(hw, Weight):
        if hw.algebra != algebra:
            raise ValueError("weight belongs to a different algebra")
        return hw.coords
    coords = tuple(hw)
    if len(coords) != algebra.rank:
        raise ValueError("coordinate length does not match the algebra rank")
    return coords


def weyl_dimension(algebra: SemisimpleAlgebra, hw) -> int:
    """Dimension of the irreducible with highest weight hw (Weyl formula)."""
    coords = _coords_of(algebra, hw)
    if any(x < 0 for x in coords):
        raise ValueError(f"highest weight {coords} is not dominant")
    dim = 1
    for t, rng in zip(algebra.factors, algebra.block_ranges()):
        block = coords[rng.start:rng.stop]
        lam_rho = tuple(x + 1 for x in block)
        rho = (1,) * t.rank
        val = Fraction(1)
        for alpha in positive_root_coords(t):
            galpha = _gram_vec(t, alpha)
            val *= _ip(t, lam_rho, galpha) / _ip(t, rho, galpha)
        if val.denominator != 1:
            raise AssertionError("Weyl dimension came out non-integral")
        dim *= int(val)
    return dim


def irreducible_character(algebra: SemisimpleAlgebra, hw) -> FormalCharacter:
    coords = _coords_of(algebra, hw)
    if any(x < 0 for x in coords):
        raise ValueError(f"highest weight {coords} is not dominant")
    merged: dict[IntVector, int] = {(): 1}
    for t, rng in zip(algebra.factors, algebra.block_ranges()):
        block = coords[rng.start:rng.stop]
        part = _simple_character(t, block)
        merged = {u + v: mu * mv
                  for u, mu in merged.items() for v, mv in part}
    return FormalCharacter(algebra, merged)


def character_of(spec: RepSpec) -> FormalCharacter:
    out: dict[IntVector, int] = {}
    for hw, mult in spec.summands:
        for w, m in irreducible_character(spec.algebra, hw).entries.items():
            out[w] = out.get(w, 0) + mult * m
    return FormalCharacter(spec.algebra, out)


def external_tensor(c1: FormalCharacter, c2: FormalCharacter) -> FormalCharacter:
    algebra = SemisimpleAlgebra(c1.algebra.factors + c2.algebra.factors)
    entries = {u + v: mu * mv
               for u, mu in c1.entries.items()
               for v, mv in c2.entries.items()}
    return FormalCharacter(algebra, entries)


def dual(c: FormalCharacter) -> FormalCharacter:
    return FormalCharacter(c.algebra,
                           {tuple(-x for x in w): m
                            for w, m in c.entries.items()})


def dual_weight(hw: Weight) -> Weight:
    """Highest weight of the dual irreducible."""
    neg = tuple(-x for x in hw.coords)
    return Weight(hw.algebra, dominant_conjugate_coords(hw.algebra, neg))


def dual_spec(spec: RepSpec) -> RepSpec:
    return RepSpec(spec.algebra,
                   tuple((dual_weight(hw), m) for hw, m in spec.summands))


def restrict_to_factors(c: FormalCharacter, part) -> FormalCharacter:
    indices = tuple(part)
    k = len(c.algebra.factors)
    if not indices or len(set(indices)) != len(indices):
        raise ValueError("factor index set must be non-empty and duplicate-free")
    if any(i < 0 or i >= k for i in indices):
        raise ValueError(f"factor index out of range for {c.algebra.label}")
    ranges = c.algebra.block_ranges()
    sub = SemisimpleAlgebra(tuple(c.algebra.factors[i] for i in indices))
    entries: dict[IntVector, int] = {}
    for w, m in c.entries.items():
        proj = tuple(x for i in indices for x in w[ranges[i].start:ranges[i].stop])
        entries[proj] = entries.get(proj, 0) + m
    return FormalCharacter(sub, entries)


def is_multiplicity_free(c: FormalCharacter) -> bool:
    return all(m == 1 for m in c.entries.values())


def is_faithful(spec: RepSpec) -> bool:
    """True iff every simple factor acts nontrivially on some summand."""
    ranges = spec.algebra.block_ranges()
    for rng in ranges:
        if not any(any(hw.coords[rng.start:rng.stop]) for hw, _ in spec.summands):
            return False
    return True


class AliasError(ValueError):
    """A named representation alias is undefined for the given family."""


def resolve_alias(t: SimpleType, name: str, arg: int | None = None
                  ) -> tuple[IntVector, ...]:
    """Dominant weight blocks named by an alias, in canonical order.

    Most aliases name one irreducible; "spin" on a D factor names the two
    half-spin summands.  The family is the canonical one, so e.g. "spin"
    on an algebra entered as C2 resolves via B2.
    """
    m = t.rank
    zero = (0,) * m

    def fw(k):
        return tuple(int(i == k) for i in range(m))

    if name == "triv":
        return (zero,)
    if name == "std":
        if t.family in "ABCD":
            return (fw(0),)
        raise AliasError(f"std is not defined for {t.label}")
    if name == "spin":
        if t.family == "B":
            return (fw(m - 1),)
        if t.family == "D":
            return (fw(m - 1), fw(m - 2))
        raise AliasError(f"spin is not defined for {t.label}"
                         + (" (its half-spins are std and dual(std))"
                            if t.label == "A3" else ""))
    if name == "spin+":
        if t.family == "D":
            return (fw(m - 1),)
        raise AliasError(f"spin+ is not defined for {t.label}")
    if name == "spin-":
        if t.family == "D":
            return (fw(m - 2),)
        raise AliasError(f"spin- is not defined for {t.label}")
    if name == "sym":
        if t.family != "A":
            raise AliasError(f"sym is only defined for A factors, not {t.label}")
        if arg is None or arg < 0:
            raise AliasError("sym needs a non-negative integer")
        return (tuple(arg * int(i == 0) for i in range(m)),)
    if name == "wedge":
        if t.family != "A":
            raise AliasError(f"wedge is only defined for A factors, not {t.label}")
        if arg is None or arg < 0 or arg > m + 1:
            raise AliasError(f"wedge on {t.label} needs an integer in [0, {m + 1}]")
        if arg in (0, m + 1):
            return (zero,)
        return (fw(arg - 1),)
    raise AliasError(f"unknown representation name {name!r}")
