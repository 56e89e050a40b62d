"""
Irreducible and primary decompositions of monomial ideals, with the prime
data derived from them
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, List, Set, Tuple
from algebra.monomial import RingContext, project_to, quotient
from algebra.ideal import (
    MonomialIdeal,
    contains_ideal,
    from_generators,
    ideal_sum,
    intersect_all,
    prime_ideal,
    radical,
    render_ideal,
    without,
)
from utils.config import get_settings
from utils.errors import DomainError

IRREDUCIBLE = "irreducible"
PRIMARY = "primary"


@dataclass(frozen=True)
class PrimeSupport:
    """The monomial prime ⟨x_i : i ∈ vars⟩"""
    vars: Tuple[int, ...]

    def __post_init__(self):
        if not self.vars:
            raise DomainError("a monomial prime needs at least one variable")
        object.__setattr__(self, "vars", tuple(sorted(set(self.vars))))

    @property
    def height(self) -> int:
        return len(self.vars)

    def issubset(self, other: "PrimeSupport") -> bool:
        return set(self.vars) <= set(other.vars)

    def to_ideal(self, ring: RingContext) -> MonomialIdeal:
        return prime_ideal(ring, self.vars)

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return (self.height, self.vars)

    def __str__(self) -> str:
        return "(" + ", ".join(f"x{i}" for i in self.vars) + ")"


@dataclass(frozen=True)
class IrreducibleComponent:
    """⟨x_i^{a_i} : i ∈ keys⟩, stored as sorted (variable, exponent) pairs"""
    entries: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        if not self.entries:
            raise DomainError("an irreducible component needs at least one variable")
        for i, a in self.entries:
            if a < 1:
                raise DomainError(f"irreducible exponent for x{i} must be >= 1, got {a}")
        object.__setattr__(self, "entries", tuple(sorted(self.entries)))

    @classmethod
    def from_ideal(cls, Q: MonomialIdeal) -> "IrreducibleComponent":
        entries = []
        for g in Q.generators:
            support = g.support()
            if len(support) != 1:
                raise DomainError(f"{render_ideal(Q)} is not generated by pure powers")
            entries.append((support[0], g.exponent(support[0])))
        return cls(tuple(entries))

    def as_dict(self) -> Dict[int, int]:
        return dict(self.entries)

    def radical(self) -> PrimeSupport:
        return PrimeSupport(tuple(i for i, _ in self.entries))

    def to_ideal(self, ring: RingContext) -> MonomialIdeal:
        return from_generators(ring, [ring.var(i, a) for i, a in self.entries])


@dataclass(frozen=True)
class Decomposition:
    """
    An irredundant decomposition I = Q_1 ∩ ... ∩ Q_r

    For kind "irreducible" every component is generated by pure powers; for
    kind "primary" components with equal radical have been merged.
    """
    kind: str
    components: Tuple[MonomialIdeal, ...]

    def radicals(self) -> List[PrimeSupport]:
        return [_support_of(radical(Q)) for Q in self.components]

    def intersection(self) -> MonomialIdeal:
        return intersect_all(list(self.components))

    def __len__(self) -> int:
        return len(self.components)

    def __str__(self) -> str:
        return "[" + ", ".join(f"({render_ideal(Q)})" for Q in self.components) + "]"


def _support_of(P: MonomialIdeal) -> PrimeSupport:
    return PrimeSupport(tuple(g.support()[0] for g in P.generators))


def _component_key(Q: MonomialIdeal):
    return (len(Q.generators), [g.sort_key() for g in Q.generators])


def _require_proper(I: MonomialIdeal):
    if I.is_zero():
        raise DomainError("the zero ideal has no irreducible decomposition")
    if I.is_unit():
        raise DomainError("the unit ideal has no irreducible decomposition")


def _prune_pairwise(components: Set[MonomialIdeal]) -> List[MonomialIdeal]:
    """Drop every component that contains another one"""
    ordered = sorted(components, key=_component_key)
    kept = []
    for Q in ordered:
        if any(contains_ideal(Q, K) for K in kept):
            continue
        kept = [K for K in kept if not contains_ideal(K, Q)]
        kept.append(Q)
    return kept


# Pure splitting, no limited arithmetic, so the ideal alone keys the memo.
@lru_cache(maxsize=8192)
def _split(I: MonomialIdeal) -> FrozenSet[MonomialIdeal]:
    for u in I.generators:
        support = u.support()
        if len(support) < 2:
            continue
        v = support[0]
        u1 = I.ring.var(v, u.exponent(v))
        u2 = quotient(u, u1)
        rest = without(I, u)
        left = ideal_sum(rest, from_generators(I.ring, [u1]))
        right = ideal_sum(rest, from_generators(I.ring, [u2]))
        return frozenset(_prune_pairwise(set(_split(left)) | set(_split(right))))
    return frozenset([I])


def irreducible_decomposition(I: MonomialIdeal) -> Decomposition:
    """
    Irredundant irreducible decomposition by recursive splitting

    Args:
        I: Proper nonzero monomial ideal

    Returns:
        Decomposition of kind "irreducible", components sorted canonically

    Raises:
        DomainError: for the zero or the unit ideal
    """
    _require_proper(I)
    return _irreducible_decomposition(I, get_settings().gen_limit)


@lru_cache(maxsize=2048)
def _irreducible_decomposition(I: MonomialIdeal, limit: int) -> Decomposition:
    survivors = sorted(_split(I), key=_component_key)
    # Leave-one-out on what pairwise pruning left behind.
    i = 0
    while i < len(survivors) and len(survivors) > 1:
        others = survivors[:i] + survivors[i + 1:]
        if contains_ideal(survivors[i], intersect_all(others)):
            survivors = others
        else:
            i += 1
    return Decomposition(IRREDUCIBLE, tuple(survivors))


def irreducible_components(I: MonomialIdeal) -> List[IrreducibleComponent]:
    return [IrreducibleComponent.from_ideal(Q) for Q in irreducible_decomposition(I).components]


def associated_primes(I: MonomialIdeal) -> List[PrimeSupport]:
    """Radicals of the irreducible components, deduplicated and sorted"""
    return sorted(set(irreducible_decomposition(I).radicals()), key=PrimeSupport.sort_key)


def minimal_primes(I: MonomialIdeal) -> List[PrimeSupport]:
    ass = associated_primes(I)
    return [P for P in ass if not any(Q != P and Q.issubset(P) for Q in ass)]


def embedded_primes(I: MonomialIdeal) -> List[PrimeSupport]:
    minimal = set(minimal_primes(I))
    return [P for P in associated_primes(I) if P not in minimal]


def is_decomposition_minimal(I: MonomialIdeal) -> bool:
    """True iff the irreducible components have pairwise distinct radicals"""
    radicals = irreducible_decomposition(I).radicals()
    return len(set(radicals)) == len(radicals)


def primary_component(I: MonomialIdeal, P: PrimeSupport) -> MonomialIdeal:
    """
    Q(P): the P-primary component of I for a minimal prime P

    Computed by setting every variable outside P to 1 in each generator.

    Raises:
        DomainError: if P is not a minimal prime of I
    """
    if P not in minimal_primes(I):
        raise DomainError(f"{P} is not a minimal prime of ({render_ideal(I)})")
    return from_generators(I.ring, [project_to(g, P.vars) for g in I.generators])


def primary_decomposition(I: MonomialIdeal) -> Decomposition:
    """
    Minimal primary decomposition: irreducible components grouped by radical

    Returns:
        Decomposition of kind "primary", components sorted by radical
    """
    groups: Dict[PrimeSupport, List[MonomialIdeal]] = {}
    for Q in irreducible_decomposition(I).components:
        groups.setdefault(_support_of(radical(Q)), []).append(Q)
    components = [intersect_all(groups[P]) for P in sorted(groups, key=PrimeSupport.sort_key)]
    i = 0
    while i < len(components) and len(components) > 1:
        others = components[:i] + components[i + 1:]
        if contains_ideal(components[i], intersect_all(others)):
            components = others
        else:
            i += 1
    return Decomposition(PRIMARY, tuple(components))


def is_unmixed(I: MonomialIdeal) -> bool:
    """True iff all associated primes have the same height"""
    return len({P.height for P in associated_primes(I)}) == 1
