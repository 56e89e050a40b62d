"""
Symbolic powers over the minimal primes and Simis checks in bounded degree
"""
from dataclasses import dataclass
from typing import List, Optional, Tuple
from algebra.monomial import Monomial
from algebra.ideal import MonomialIdeal, contains_monomial, intersect_all, power
from algebra.decomposition import minimal_primes, primary_component
from utils.errors import DomainError


@dataclass(frozen=True)
class SimisVerdict:
    """
    Outcome of comparing I^(s) with I^s

    holds is False exactly when a witness in I^(s) \\ I^s is present.
    """
    degree_checked: int
    holds: bool
    witness: Optional[Monomial] = None

    def __post_init__(self):
        if self.holds != (self.witness is None):
            raise DomainError("a failing Simis verdict needs a witness and a passing one must not carry one")


def _check_degree(s: int):
    if s < 1:
        raise DomainError(f"symbolic power degree must be >= 1, got {s}")


def minimal_primary_components(I: MonomialIdeal) -> List[MonomialIdeal]:
    """Q(P) for every minimal prime P of I"""
    return [primary_component(I, P) for P in minimal_primes(I)]


def symbolic_power(I: MonomialIdeal, s: int) -> MonomialIdeal:
    """
    I^(s) as the intersection of Q(P)^s over the minimal primes P

    Args:
        I: Proper nonzero monomial ideal
        s: Degree, at least 1

    Returns:
        The s-th symbolic power in canonical form
    """
    _check_degree(s)
    return intersect_all([power(Q, s) for Q in minimal_primary_components(I)])


def symbolic_contains(I: MonomialIdeal, s: int, m: Monomial) -> bool:
    """Membership of m in I^(s), checked component by component"""
    _check_degree(s)
    return all(contains_monomial(power(Q, s), m) for Q in minimal_primary_components(I))


def ordinary_contains(I: MonomialIdeal, s: int, m: Monomial) -> bool:
    _check_degree(s)
    return contains_monomial(power(I, s), m)


def is_simis_in_degree(I: MonomialIdeal, s: int) -> SimisVerdict:
    """
    Decide I^(s) = I^s

    On failure the witness is the canonically least minimal generator of
    I^(s) outside I^s.
    """
    symbolic = symbolic_power(I, s)
    ordinary = power(I, s)
    # I^s ⊆ I^(s) always, so one inclusion settles equality.
    for g in symbolic.generators:
        if not contains_monomial(ordinary, g):
            return SimisVerdict(degree_checked=s, holds=False, witness=g)
    return SimisVerdict(degree_checked=s, holds=True)


def first_simis_failure(I: MonomialIdeal, s_max: int) -> Optional[Tuple[int, Monomial]]:
    """Least s <= s_max with I^(s) != I^s and its witness, or None"""
    for s in range(1, s_max + 1):
        verdict = is_simis_in_degree(I, s)
        if not verdict.holds:
            return s, verdict.witness
    return None


def has_embedded_primes_via_saturation_free_check(I: MonomialIdeal) -> bool:
    """I has embedded primes exactly when I^(1) != I"""
    return symbolic_power(I, 1) != I
