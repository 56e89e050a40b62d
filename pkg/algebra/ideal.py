"""
Monomial ideals in canonical form: minimal generators, sorted
"""
from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Dict, Iterable, List, Sequence, Tuple
from algebra.monomial import (
    Monomial,
    RingContext,
    lcm,
    mul,
    render,
    squarefree_part,
)
from utils.config import get_settings
from utils.errors import AmbientMismatchError, DomainError, GeneratorLimitError


def _exps_divide(a: Tuple[int, ...], b: Tuple[int, ...]) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def minimize(generators: Iterable[Monomial]) -> Tuple[Monomial, ...]:
    """
    Drop divisibility-redundant generators and sort canonically

    Candidates are scanned by ascending degree, so every proper divisor of a
    candidate has already been kept or discarded when the candidate is seen.
    """
    ordered = sorted(set(generators), key=Monomial.sort_key)
    kept: List[Monomial] = []
    kept_exps: List[Tuple[int, ...]] = []
    for g in ordered:
        ge = g.exponents
        if any(_exps_divide(k, ge) for k in kept_exps):
            continue
        kept.append(g)
        kept_exps.append(ge)
    return tuple(kept)


def _check_limit(count: int):
    limit = get_settings().gen_limit
    if count > limit:
        raise GeneratorLimitError(count, limit)


@dataclass(frozen=True)
class MonomialIdeal:
    """
    A monomial ideal given by its minimal generating set G(I)

    Instances are always canonical, so structural equality is ideal equality.
    Build them with `from_generators`, never directly.
    """
    ring: RingContext
    generators: Tuple[Monomial, ...]

    @property
    def n(self) -> int:
        return self.ring.n

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_one()

    def is_proper_nonzero(self) -> bool:
        return not self.is_zero() and not self.is_unit()

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __contains__(self, m: Monomial) -> bool:
        return contains_monomial(self, m)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return ideal_sum(self, other)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return product(self, other)

    def __and__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return intersect(self, other)

    def __pow__(self, s: int) -> "MonomialIdeal":
        return power(self, s)

    def __str__(self) -> str:
        return render_ideal(self)

    def __repr__(self) -> str:
        return f"MonomialIdeal<{render_ideal(self)}>"


def from_generators(ring: RingContext, generators: Iterable[Monomial]) -> MonomialIdeal:
    """
    Canonical ideal generated by the given monomials

    Args:
        ring: Ambient ring shared by every generator
        generators: Any monomials; duplicates and multiples are dropped

    Returns:
        MonomialIdeal in canonical form

    Raises:
        AmbientMismatchError: if a generator lives in another ring
    """
    gens = list(generators)
    for g in gens:
        if len(g.exponents) != ring.n:
            raise AmbientMismatchError(ring.n, len(g.exponents))
    return MonomialIdeal(ring, minimize(gens))


def zero_ideal(ring: RingContext) -> MonomialIdeal:
    return MonomialIdeal(ring, ())


def unit_ideal(ring: RingContext) -> MonomialIdeal:
    return MonomialIdeal(ring, (ring.one(),))


def prime_ideal(ring: RingContext, variables: Iterable[int]) -> MonomialIdeal:
    """The monomial prime generated by the given 1-based variables"""
    return from_generators(ring, [ring.var(i) for i in variables])


def _same_ring(I: MonomialIdeal, J: MonomialIdeal):
    if I.ring != J.ring:
        raise AmbientMismatchError(I.ring.n, J.ring.n)


def contains_monomial(I: MonomialIdeal, m: Monomial) -> bool:
    """True iff some minimal generator of I divides m"""
    if len(m.exponents) != I.ring.n:
        raise AmbientMismatchError(I.ring.n, len(m.exponents))
    me = m.exponents
    return any(_exps_divide(g.exponents, me) for g in I.generators)


def contains_ideal(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """True iff J is a subset of I"""
    _same_ring(I, J)
    return all(contains_monomial(I, g) for g in J.generators)


def equals(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    _same_ring(I, J)
    return I.generators == J.generators


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """I + J: union of generators, minimized"""
    _same_ring(I, J)
    return MonomialIdeal(I.ring, minimize(I.generators + J.generators))


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """I ∩ J, generated by pairwise lcms of minimal generators"""
    _same_ring(I, J)
    _check_limit(len(I.generators) * len(J.generators))
    return MonomialIdeal(I.ring, minimize(lcm(u, v) for u in I.generators for v in J.generators))


def intersect_all(ideals: Sequence[MonomialIdeal]) -> MonomialIdeal:
    """
    Intersection of a list of ideals, folded smallest-first

    Raises:
        DomainError: for an empty list (the ring is unknown)
    """
    if not ideals:
        raise DomainError("cannot intersect an empty list of ideals")
    ordered = sorted(ideals, key=lambda q: (len(q.generators), [g.sort_key() for g in q.generators]))
    return reduce(intersect, ordered[1:], ordered[0])


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """I·J, generated by pairwise products, minimized"""
    _same_ring(I, J)
    _check_limit(len(I.generators) * len(J.generators))
    return MonomialIdeal(I.ring, minimize(mul(u, v) for u in I.generators for v in J.generators))


def power(I: MonomialIdeal, s: int) -> MonomialIdeal:
    """
    The ordinary power I^s

    Args:
        I: Ideal to raise
        s: Positive exponent

    Returns:
        I^s, minimized after every multiplication step
    """
    if s < 1:
        raise DomainError(f"power exponent must be >= 1, got {s}")
    return _power(I, s, get_settings().gen_limit)


# Memo keyed on the generator limit too; lowering it must re-run the products.
@lru_cache(maxsize=512)
def _power(I: MonomialIdeal, s: int, limit: int) -> MonomialIdeal:
    if s == 1:
        return I
    return product(_power(I, s - 1, limit), I)


def radical(I: MonomialIdeal) -> MonomialIdeal:
    """√I: every generator clamped to its squarefree part"""
    return MonomialIdeal(I.ring, minimize(squarefree_part(g) for g in I.generators))


def is_squarefree(I: MonomialIdeal) -> bool:
    return radical(I) == I


def without(I: MonomialIdeal, u: Monomial) -> MonomialIdeal:
    """The ideal generated by G(I) minus one generator"""
    return MonomialIdeal(I.ring, tuple(g for g in I.generators if g != u))


def relabel(I: MonomialIdeal, mapping: Dict[int, int], ring: RingContext = None) -> MonomialIdeal:
    """
    Rename variables x_i -> x_mapping[i]

    Args:
        I: Ideal to rename
        mapping: 1-based old index -> 1-based new index, injective on the
            support of I
        ring: Target ring (defaults to I's ring)
    """
    target = ring or I.ring
    images = list(mapping.values())
    if len(set(images)) != len(images):
        raise DomainError("variable relabeling must be injective")
    gens = []
    for g in I.generators:
        exps = [0] * target.n
        for i, e in enumerate(g.exponents, start=1):
            if e:
                if i not in mapping:
                    raise DomainError(f"relabeling has no image for x{i}")
                exps[mapping[i] - 1] = e
        gens.append(Monomial(tuple(exps)))
    return from_generators(target, gens)


def render_ideal(I: MonomialIdeal) -> str:
    """Sorted, comma-separated generator list; the zero ideal renders as 0"""
    if I.is_zero():
        return "0"
    return ", ".join(render(g) for g in I.generators)
