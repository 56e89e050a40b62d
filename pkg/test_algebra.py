"""
Tests for monomials, ideal arithmetic, decompositions and symbolic powers
"""
import itertools
import numpy as np
import pytest
from algebra.decomposition import (
    PrimeSupport,
    associated_primes,
    embedded_primes,
    irreducible_components,
    irreducible_decomposition,
    is_decomposition_minimal,
    is_unmixed,
    minimal_primes,
    primary_component,
    primary_decomposition,
)
from algebra.ideal import (
    contains_ideal,
    contains_monomial,
    equals,
    from_generators,
    intersect,
    intersect_all,
    power,
    product,
    radical,
    relabel,
    render_ideal,
)
from algebra.monomial import (
    EXPONENT_MAX,
    RingContext,
    divides,
    lcm,
    mul,
    project_to,
    render,
)
from algebra.symbolic_powers import (
    first_simis_failure,
    has_embedded_primes_via_saturation_free_check,
    is_simis_in_degree,
    ordinary_contains,
    symbolic_contains,
    symbolic_power,
)
from tools.ideal_loader import IdealLoader
from utils.errors import (
    AmbientMismatchError,
    DomainError,
    ExponentOverflowError,
    GeneratorLimitError,
)

PATH_P4 = "x1*x2^2, x2*x3, x3^2*x4"
PATH_TWO_GENS = "x1*x2^4, x2^4*x3, x2*x3^4, x3^4*x4"
C5_NONPRIME = "x1*x2, x2*x3^2, x3*x4, x4^2*x5, x5*x1"
TRIANGLE_THREE_GENS = "x1*x2^4, x2^3*x3, x2^2*x3^2, x2*x3^3, x3^4*x1"


def ideal(text, n=None):
    header = f"vars: {n};\n" if n is not None else ""
    return IdealLoader.parse_text(header + text).to_ideal()


def mono(text, n):
    return IdealLoader.parse_monomial(text, RingContext(n))


def random_ideal(rng, n, gens, max_exp):
    ring = RingContext(n)
    out = []
    while len(out) < gens:
        exps = [int(e) for e in rng.integers(0, max_exp + 1, size=n)]
        if sum(exps):
            out.append(ring.monomial(exps))
    return from_generators(ring, out)


# ---------------------------------------------------------------- monomials

def test_divides_lcm_mul():
    R = RingContext(3)
    u = R.monomial([1, 2, 0])
    v = R.monomial([2, 2, 1])
    assert divides(u, v)
    assert not divides(v, u)
    assert lcm(R.monomial([1, 0, 3]), R.monomial([0, 2, 1])).exponents == (1, 2, 3)
    assert mul(u, v).exponents == (3, 4, 1)


def test_mul_overflow_is_checked():
    R = RingContext(1)
    with pytest.raises(ExponentOverflowError):
        mul(R.var(1, EXPONENT_MAX), R.var(1, 1))


def test_ambient_mismatch():
    with pytest.raises(AmbientMismatchError):
        divides(RingContext(2).one(), RingContext(3).one())


def test_project_to_keeps_ambient():
    u = mono("x1*x2^2", 3)
    p = project_to(u, {2, 3})
    assert render(p) == "x2^2"
    assert p.n == 3


def test_render_unit_and_factors():
    R = RingContext(4)
    assert render(R.one()) == "1"
    assert render(R.monomial([1, 0, 3, 1])) == "x1*x3^3*x4"


def test_canonical_order_is_graded_lex():
    I = ideal("x3^2, x2*x3, x2^2, x1")
    assert render_ideal(I) == "x1, x2^2, x2*x3, x3^2"


# ---------------------------------------------------------------- ideals

def test_from_generators_minimizes():
    I = ideal("x1*x2, x1, x1*x2, x2^3*x1")
    assert render_ideal(I) == "x1"


def test_membership_and_containment():
    I = ideal(PATH_P4)
    assert contains_monomial(I, mono("x1^3*x2^2", 4))
    assert not contains_monomial(I, mono("x1*x2*x3^0", 4))
    assert contains_ideal(I, ideal("x1*x2^2*x3", 4))
    assert equals(I, ideal("x3^2*x4, x2*x3, x1*x2^2"))


def test_intersect_and_product():
    R4 = 4
    I = ideal("x1, x3", R4)
    J = ideal("x2, x4", R4)
    assert intersect(I, J) == ideal("x1*x2, x1*x4, x2*x3, x3*x4")
    assert product(I, J) == intersect(I, J)
    assert I * J == product(I, J)
    assert (I & J) == intersect(I, J)


def test_power_additivity():
    I = ideal("x1^2*x2, x2*x3, x1*x3^2")
    assert power(I, 3) == product(power(I, 1), power(I, 2))
    with pytest.raises(DomainError):
        power(I, 0)


def test_intersect_all_empty_list():
    with pytest.raises(DomainError):
        intersect_all([])


def test_radical():
    assert radical(ideal(PATH_TWO_GENS)) == ideal("x1*x2, x2*x3, x3*x4")


def test_relabel_swaps_variables():
    I = ideal("x1^2*x2, x2*x3", 3)
    assert relabel(I, {1: 3, 2: 2, 3: 1}) == ideal("x3^2*x2, x2*x1", 3)
    with pytest.raises(DomainError):
        relabel(I, {1: 1, 2: 1, 3: 3})


def test_generator_limit(monkeypatch):
    monkeypatch.setenv("SIMISCALC_GEN_LIMIT", "5")
    I = ideal("x1^7*x2, x2^7*x3, x3^7*x1")
    with pytest.raises(GeneratorLimitError):
        product(I, I)


def test_memoized_power_honours_a_lowered_limit(monkeypatch):
    I = ideal("x1^7*x2, x2^7*x3, x3^7*x1")
    assert len(power(I, 3).generators) == 10
    monkeypatch.setenv("SIMISCALC_GEN_LIMIT", "5")
    with pytest.raises(GeneratorLimitError):
        power(I, 3)
    monkeypatch.delenv("SIMISCALC_GEN_LIMIT")
    assert len(power(I, 3).generators) == 10


def test_memoized_decomposition_honours_a_lowered_limit(monkeypatch):
    I = ideal(PATH_P4)
    assert len(irreducible_decomposition(I).components) == 4
    monkeypatch.setenv("SIMISCALC_GEN_LIMIT", "1")
    with pytest.raises(GeneratorLimitError):
        irreducible_decomposition(I)


# ---------------------------------------------------------------- decompositions

def test_path_p4_decompositions():
    I = ideal(PATH_P4)
    irreducible = irreducible_decomposition(I)
    assert set(irreducible.components) == {
        ideal("x1, x3", 4), ideal("x2, x4", 4), ideal("x2, x3^2", 4), ideal("x2^2, x3", 4),
    }
    assert not is_decomposition_minimal(I)
    primary = primary_decomposition(I)
    assert [render_ideal(Q) for Q in primary.components] == ["x1, x3", "x2^2, x2*x3, x3^2", "x2, x4"]
    assert embedded_primes(I) == []
    assert primary.intersection() == I


def test_path_two_gens_decomposition_is_minimal():
    I = ideal(PATH_TWO_GENS)
    assert set(irreducible_decomposition(I).components) == {
        ideal("x1, x3", 4), ideal("x2, x4", 4), ideal("x2^4, x3^4", 4),
    }
    assert is_decomposition_minimal(I)
    assert {c.radical() for c in irreducible_components(I)} == {
        PrimeSupport((1, 3)), PrimeSupport((2, 4)), PrimeSupport((2, 3)),
    }


def test_c5_nonprime_primary_decomposition():
    I = ideal(C5_NONPRIME)
    assert set(primary_decomposition(I).components) == {
        ideal("x1, x2, x4", 5), ideal("x2, x3, x5", 5), ideal("x2, x4, x5", 5),
        ideal("x1, x3, x5", 5), ideal("x1, x3^2, x3*x4, x4^2", 5),
    }
    assert embedded_primes(I) == []
    assert is_unmixed(I)


def test_triangle_three_gens_primary_decomposition():
    J = ideal(TRIANGLE_THREE_GENS)
    assert set(primary_decomposition(J).components) == {
        ideal("x1, x2", 3), ideal("x1, x3", 3), ideal("x2^4, x2^3*x3, x2^2*x3^2, x2*x3^3, x3^4", 3),
    }


def test_primary_component_contraction():
    I = ideal(PATH_P4)
    assert primary_component(I, PrimeSupport((2, 3))) == ideal("x2^2, x2*x3, x3^2", 4)
    with pytest.raises(DomainError):
        primary_component(I, PrimeSupport((1, 2, 3)))


def test_embedded_prime_of_a_star():
    I = ideal("x1^2*x2, x1*x3")
    assert minimal_primes(I) == [PrimeSupport((1,)), PrimeSupport((2, 3))]
    assert embedded_primes(I) == [PrimeSupport((1, 3))]
    assert has_embedded_primes_via_saturation_free_check(I)
    assert not is_unmixed(I)


def test_decomposition_of_zero_and_unit_ideal():
    R = RingContext(2)
    with pytest.raises(DomainError):
        irreducible_decomposition(from_generators(R, []))
    with pytest.raises(DomainError):
        irreducible_decomposition(from_generators(R, [R.one()]))


def test_decomposition_properties_on_random_ideals():
    rng = np.random.default_rng(11)
    for _ in range(25):
        I = random_ideal(rng, 4, int(rng.integers(2, 5)), 3)
        if not I.is_proper_nonzero():
            continue
        dec = irreducible_decomposition(I)
        assert dec.intersection() == I
        assert primary_decomposition(I).intersection() == I
        assert set(minimal_primes(I)) <= set(associated_primes(I))


# ---------------------------------------------------------------- symbolic powers

def test_path_two_gens_symbolic_square():
    I = ideal(PATH_TWO_GENS)
    f = mono("x2^4*x3^4", 4)
    assert symbolic_contains(I, 2, f)
    assert not ordinary_contains(I, 2, f)
    assert f in symbolic_power(I, 2)
    verdict = is_simis_in_degree(I, 2)
    assert not verdict.holds
    assert render(verdict.witness) == "x2^4*x3^4"
    assert is_simis_in_degree(I, 1).holds
    assert first_simis_failure(I, 3) == (2, verdict.witness)


def test_path_p4_is_simis_up_to_four():
    assert first_simis_failure(ideal(PATH_P4), 4) is None


def test_c5_nonprime_is_simis_up_to_three():
    assert first_simis_failure(ideal(C5_NONPRIME), 3) is None


def test_triangle_three_gens_is_simis_up_to_three():
    assert first_simis_failure(ideal(TRIANGLE_THREE_GENS), 3) is None


def test_triangle_edge_ideal_fails_in_degree_two():
    I = ideal("x1*x2, x2*x3, x1*x3")
    verdict = is_simis_in_degree(I, 2)
    assert not verdict.holds
    assert render(verdict.witness) == "x1*x2*x3"


def test_symbolic_power_properties_on_random_ideals():
    rng = np.random.default_rng(5)
    for _ in range(15):
        I = random_ideal(rng, 3, int(rng.integers(2, 4)), 3)
        if not I.is_proper_nonzero():
            continue
        for s in (1, 2):
            S = symbolic_power(I, s)
            assert contains_ideal(S, power(I, s))
            assert radical(S) == radical(I)
        assert contains_ideal(symbolic_power(I, 1), I)


# ---------------------------------------------------------------- properties at scale

def brute_force_minimal_primes(I):
    """Inclusion-minimal variable sets meeting the support of every generator"""
    n = I.ring.n
    covers = []
    for size in range(1, n + 1):
        for S in itertools.combinations(range(1, n + 1), size):
            if any(set(C) <= set(S) for C in covers):
                continue
            if all(set(g.support()) & set(S) for g in I.generators):
                covers.append(S)
    return covers


def monomials_up_to(ring, degree):
    for exps in itertools.product(range(degree + 1), repeat=ring.n):
        if sum(exps) <= degree:
            yield ring.monomial(exps)


def assert_symbolic_membership_matches_oracle(I, degrees, max_degree=12):
    components = [
        from_generators(I.ring, [project_to(g, S) for g in I.generators])
        for S in brute_force_minimal_primes(I)
    ]
    assert {PrimeSupport(S) for S in brute_force_minimal_primes(I)} == set(minimal_primes(I))
    for s in degrees:
        powers = [power(Q, s) for Q in components]
        S = symbolic_power(I, s)
        for m in monomials_up_to(I.ring, max_degree):
            expected = all(contains_monomial(Qs, m) for Qs in powers)
            assert symbolic_contains(I, s, m) == expected, (str(I), s, render(m))
            assert contains_monomial(S, m) == expected, (str(I), s, render(m))


def test_symbolic_membership_matches_brute_force():
    rng = np.random.default_rng(23)
    checked = 0
    while checked < 12:
        I = random_ideal(rng, 3, int(rng.integers(2, 5)), 4)
        if not I.is_proper_nonzero():
            continue
        assert_symbolic_membership_matches_oracle(I, (1, 2, 3))
        checked += 1


@pytest.mark.slow
def test_symbolic_membership_matches_brute_force_in_four_variables():
    rng = np.random.default_rng(29)
    checked = 0
    while checked < 30:
        I = random_ideal(rng, 4, int(rng.integers(2, 5)), 4)
        if not I.is_proper_nonzero():
            continue
        assert_symbolic_membership_matches_oracle(I, (1, 2, 3))
        checked += 1


@pytest.mark.slow
def test_decomposition_round_trip_on_500_ideals():
    rng = np.random.default_rng(31)
    checked = 0
    while checked < 500:
        I = random_ideal(rng, 4, int(rng.integers(2, 6)), 4)
        if not I.is_proper_nonzero():
            continue
        assert irreducible_decomposition(I).intersection() == I, str(I)
        assert primary_decomposition(I).intersection() == I, str(I)
        checked += 1


@pytest.mark.slow
def test_power_inside_symbolic_power_on_500_ideals():
    rng = np.random.default_rng(37)
    checked = 0
    while checked < 500:
        I = random_ideal(rng, 3, int(rng.integers(2, 5)), 3)
        if not I.is_proper_nonzero():
            continue
        for s in (1, 2, 3):
            S = symbolic_power(I, s)
            assert contains_ideal(S, power(I, s)), (str(I), s)
            assert radical(S) == radical(I)
        checked += 1
