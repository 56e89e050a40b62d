"""
Monomial arithmetic on dense exponent vectors
"""
from dataclasses import dataclass
from typing import Iterable, Tuple, Dict
from utils.errors import AmbientMismatchError, ExponentOverflowError, DomainError

# Exponents are fixed-width machine integers.
EXPONENT_MAX = 2**31 - 1


@dataclass(frozen=True)
class RingContext:
    """
    The polynomial ring K[x1, ..., xn] a computation lives in

    Only the variable count matters for monomial ideals; the field plays
    no computational role.
    """
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise DomainError(f"variable count must be nonnegative, got {self.n}")

    def one(self) -> "Monomial":
        """The unit monomial 1"""
        return Monomial((0,) * self.n)

    def var(self, i: int, exponent: int = 1) -> "Monomial":
        """
        The pure power x_i^exponent

        Args:
            i: 1-based variable index
            exponent: Nonnegative exponent
        """
        if not 1 <= i <= self.n:
            raise DomainError(f"variable index x{i} outside x1..x{self.n}")
        exps = [0] * self.n
        exps[i - 1] = exponent
        return Monomial(tuple(exps))

    def monomial(self, exponents: Iterable[int]) -> "Monomial":
        """Build a monomial, checking length and sign"""
        exps = tuple(int(e) for e in exponents)
        if len(exps) != self.n:
            raise AmbientMismatchError(self.n, len(exps))
        for e in exps:
            if e < 0:
                raise DomainError(f"negative exponent in {exps}")
            if e > EXPONENT_MAX:
                raise ExponentOverflowError(f"exponent {e} exceeds {EXPONENT_MAX}")
        return Monomial(exps)

    def from_powers(self, powers: Dict[int, int]) -> "Monomial":
        """Build a monomial from a map 1-based variable index -> exponent"""
        exps = [0] * self.n
        for i, e in powers.items():
            if not 1 <= i <= self.n:
                raise DomainError(f"variable index x{i} outside x1..x{self.n}")
            exps[i - 1] += e
        return Monomial(tuple(exps))


@dataclass(frozen=True)
class Monomial:
    """x^a for a nonnegative exponent vector a; the all-zero vector is 1"""
    exponents: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def is_one(self) -> bool:
        return not any(self.exponents)

    def exponent(self, i: int) -> int:
        """Exponent of the 1-based variable x_i"""
        return self.exponents[i - 1]

    def support(self) -> Tuple[int, ...]:
        """1-based indices of the variables that occur"""
        return tuple(i + 1 for i, e in enumerate(self.exponents) if e)

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        """Canonical total order: degree first, then lexicographic with x1 largest first"""
        return (self.degree, tuple(-e for e in self.exponents))

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"Monomial({render(self)})"


def _check_ambient(u: Monomial, v: Monomial):
    if len(u.exponents) != len(v.exponents):
        raise AmbientMismatchError(len(u.exponents), len(v.exponents))


def divides(u: Monomial, v: Monomial) -> bool:
    """True iff u's exponent vector is coordinatewise <= v's"""
    _check_ambient(u, v)
    return all(a <= b for a, b in zip(u.exponents, v.exponents))


def lcm(u: Monomial, v: Monomial) -> Monomial:
    """Coordinatewise maximum"""
    _check_ambient(u, v)
    return Monomial(tuple(a if a >= b else b for a, b in zip(u.exponents, v.exponents)))


def mul(u: Monomial, v: Monomial) -> Monomial:
    """
    Coordinatewise sum

    Raises:
        ExponentOverflowError: if any coordinate leaves the fixed width
    """
    _check_ambient(u, v)
    exps = tuple(a + b for a, b in zip(u.exponents, v.exponents))
    for e in exps:
        if e > EXPONENT_MAX:
            raise ExponentOverflowError(f"exponent overflow multiplying {render(u)} by {render(v)}")
    return Monomial(exps)


def quotient(u: Monomial, v: Monomial) -> Monomial:
    """u / v for v dividing u"""
    if not divides(v, u):
        raise DomainError(f"{render(v)} does not divide {render(u)}")
    return Monomial(tuple(a - b for a, b in zip(u.exponents, v.exponents)))


def project_to(u: Monomial, variables: Iterable[int]) -> Monomial:
    """
    Set every variable outside `variables` to 1

    Args:
        u: Monomial to project
        variables: 1-based indices to keep

    Returns:
        Monomial over the same ambient ring
    """
    keep = set(variables)
    return Monomial(tuple(e if (i + 1) in keep else 0 for i, e in enumerate(u.exponents)))


def squarefree_part(u: Monomial) -> Monomial:
    """Clamp every exponent to at most 1"""
    return Monomial(tuple(1 if e else 0 for e in u.exponents))


def render(u: Monomial) -> str:
    """Canonical text: x<i>^<e> factors joined by '*', ^1 omitted, unit as 1"""
    factors = []
    for i, e in enumerate(u.exponents, start=1):
        if e == 1:
            factors.append(f"x{i}")
        elif e > 1:
            factors.append(f"x{i}^{e}")
    return "*".join(factors) if factors else "1"
