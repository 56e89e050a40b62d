"""
Witness monomials certifying that a symbolic power differs from an
ordinary power

Every builder returns a WitnessReport whose membership claims have been
re-checked by direct computation; a failed re-check is reported as
unverified, never dropped.
"""
from typing import Dict, List, Optional, Tuple
import networkx as nx
from algebra.monomial import Monomial, render
from algebra.ideal import MonomialIdeal, contains_monomial
from algebra.decomposition import is_decomposition_minimal
from algebra.symbolic_powers import ordinary_contains, symbolic_contains
from structure.support2 import Support2Profile, detect_standard_weighting
from structure.graphs import cycle_order, graph_of, is_bipartite, recognize_cycle
from theorems.models import MembershipClaim, WitnessReport
from utils.errors import DomainError

IN_FIRST_SYMBOLIC = MembershipClaim(kind="symbolic", degree=1)
NOT_IN_IDEAL = MembershipClaim(kind="ideal", degree=1)


def _holds(I: MonomialIdeal, f: Monomial, claim: MembershipClaim) -> bool:
    if claim.kind == "symbolic":
        return symbolic_contains(I, claim.degree, f)
    if claim.kind == "ordinary":
        return ordinary_contains(I, claim.degree, f)
    return contains_monomial(I, f)


def verify_witness(
    I: MonomialIdeal,
    f: Monomial,
    construction: str,
    claimed_in: MembershipClaim,
    claimed_not_in: MembershipClaim,
    note: str = "",
) -> WitnessReport:
    """Re-check both membership claims for f and package the result"""
    verified = _holds(I, f, claimed_in) and not _holds(I, f, claimed_not_in)
    return WitnessReport(
        construction=construction,
        monomial=render(f),
        exponents=list(f.exponents),
        claimed_in=claimed_in,
        claimed_not_in=claimed_not_in,
        verified=verified,
        note=note,
    )


def _second_power_claims() -> Tuple[MembershipClaim, MembershipClaim]:
    return MembershipClaim(kind="symbolic", degree=2), MembershipClaim(kind="ordinary", degree=2)


def _require_minimal(p: Support2Profile):
    if not is_decomposition_minimal(p.source):
        raise DomainError("construction needs a minimal irreducible decomposition")


def _mono(p: Support2Profile, powers: Dict[int, int]) -> Monomial:
    return p.ring.from_powers({v: e for v, e in powers.items() if e})


def witness_nonuniform(p: Support2Profile, i: int, j: int, k: int) -> WitnessReport:
    """
    f = x_i^{max(w_ij, 2 w_ik)} x_j^{w_ji} x_k^{w_ki} in I^(2) \\ I^2 for a
    vertex i whose exponents on edges {i,j}, {i,k} differ

    When {j,k} is an edge and (x_j^{w_jk} x_k^{w_kj})^2 divides f, the
    construction moves to f' = x_k^{max(w_ki, 2 w_kj)} x_i^{w_ik} x_j^{w_jk}.

    Raises:
        DomainError: if {i,j} or {i,k} is not an edge, some involved edge has
            more than one generator, w_ij <= w_ik, or the decomposition is
            not minimal
    """
    if len({i, j, k}) != 3 or not (p.has_edge(i, j) and p.has_edge(i, k)):
        raise DomainError(f"x{i} must be adjacent to both x{j} and x{k}")
    triangle = p.has_edge(j, k)
    involved = [(i, j), (i, k)] + ([(j, k)] if triangle else [])
    if any(p.alpha(a, b) != 1 for a, b in involved):
        raise DomainError("nonuniform construction needs one generator per involved edge")
    if p.w(i, j) <= p.w(i, k):
        raise DomainError(f"need w_{i},{j} > w_{i},{k}, got {p.w(i, j)} and {p.w(i, k)}")
    _require_minimal(p)
    claimed_in, claimed_not_in = _second_power_claims()
    f = _mono(p, {i: max(p.w(i, j), 2 * p.w(i, k)), j: p.w(j, i), k: p.w(k, i)})
    if triangle:
        square = _mono(p, {j: 2 * p.w(j, k), k: 2 * p.w(k, j)})
        if all(a <= b for a, b in zip(square.exponents, f.exponents)):
            f = _mono(p, {k: max(p.w(k, i), 2 * p.w(k, j)), i: p.w(i, k), j: p.w(j, k)})
            return verify_witness(p.source, f, "nonuniform", claimed_in, claimed_not_in,
                                  note=f"triangle fallback centred at x{k}")
    return verify_witness(p.source, f, "nonuniform", claimed_in, claimed_not_in)


def find_nonuniform_vertex(p: Support2Profile) -> Optional[Tuple[int, int, int]]:
    """(i, j, k) with w_ij > w_ik, least i first; None if every vertex is uniform"""
    for i in p.vertices():
        nbrs = p.neighbors(i)
        for j in nbrs:
            for k in nbrs:
                if j != k and p.w(i, j) > p.w(i, k):
                    return i, j, k
    return None


def witness_multigen(p: Support2Profile, i: int, j: int) -> WitnessReport:
    """
    f = x_i^{w1_ij + w2_ij} x_j^{max(2 w1_ji, w2_ji)} in I^(2) \\ I^2 for an
    edge carrying at least two generators (i < j after normalization)

    Raises:
        DomainError: if the edge has one generator or the decomposition is
            not minimal
    """
    a, b = min(i, j), max(i, j)
    if p.alpha(a, b) < 2:
        raise DomainError(f"edge {{{a}, {b}}} carries a single generator")
    _require_minimal(p)
    f = _mono(p, {
        a: p.w(a, b, 1) + p.w(a, b, 2),
        b: max(2 * p.w(b, a, 1), p.w(b, a, 2)),
    })
    claimed_in, claimed_not_in = _second_power_claims()
    return verify_witness(p.source, f, "multigen", claimed_in, claimed_not_in)


def witness_odd_cycle(p: Support2Profile) -> WitnessReport:
    """
    f = prod over an odd cycle C (length 2k+1) of x_v^{d_v}, in
    I^(k+1) \\ I^{k+1}, for an ideal with a standard weighting d

    Raises:
        DomainError: if G(I) is bipartite or I has no standard weighting
    """
    weighting = detect_standard_weighting(p)
    if weighting is None:
        raise DomainError("odd-cycle construction needs a standard weighting")
    G = graph_of(p)
    if is_bipartite(G):
        raise DomainError("G(I) has no odd cycle")
    odd = [c for c in nx.cycle_basis(G.to_networkx()) if len(c) % 2 == 1]
    cycle = min(odd, key=lambda c: (len(c), sorted(c)))
    k = len(cycle) // 2
    f = _mono(p, {v: weighting.d[v - 1] for v in cycle})
    return verify_witness(
        p.source, f, "odd_cycle",
        MembershipClaim(kind="symbolic", degree=k + 1),
        MembershipClaim(kind="ordinary", degree=k + 1),
        note="cycle " + "-".join(f"x{v}" for v in sorted(cycle)),
    )


def witness_leaf(p: Support2Profile, i: int, j: int) -> Optional[WitnessReport]:
    """
    For an edge {i, j} whose endpoints no minimal cover contains together:
    when some generator u on an edge {i, k} has x_i^{ν_ij + 1} | u, the
    monomial x_i^{ν_ij} x_k^{ν_ki} lies in I^(1) \\ I

    Both endpoints are tried; None when the trigger never fires.
    """
    for a, b in ((i, j), (j, i)):
        threshold = p.nu(a, b) + 1
        for u in p.source.generators:
            if u.exponent(a) >= threshold:
                k = [v for v in u.support() if v != a][0]
                f = _mono(p, {a: p.nu(a, b), k: p.nu(k, a)})
                return verify_witness(p.source, f, "leaf", IN_FIRST_SYMBOLIC, NOT_IN_IDEAL,
                                      note=f"trigger {render(u)} on x{a}")
    return None


def witness_girth6(p: Support2Profile, s: int, t: int) -> WitnessReport:
    """
    f = x_s^{ν_st} x_t^{ν_ts} prod x_r^{ν_rk} over k in N(s) - {t} and
    r in N(k) - {s}, in I^(1) \\ I

    Exponents over repeated r multiply; girth >= 6 rules repeats out.
    """
    if p.alpha(s, t) < 2:
        raise DomainError(f"edge {{{s}, {t}}} carries a single generator")
    powers = {s: p.nu(s, t), t: p.nu(t, s)}
    for k in p.neighbors(s):
        if k == t:
            continue
        for r in p.neighbors(k):
            if r != s:
                powers[r] = powers.get(r, 0) + p.nu(r, k)
    return verify_witness(p.source, _mono(p, powers), "girth6", IN_FIRST_SYMBOLIC, NOT_IN_IDEAL)


def _cycle_through(p: Support2Profile, a: int, b: int) -> List[int]:
    """The cycle of G(I) listed from a, stepping first to its neighbor b"""
    order = cycle_order(graph_of(p))
    pos = order.index(a)
    order = order[pos:] + order[:pos]
    if order[1] != b:
        order = [order[0]] + order[1:][::-1]
    if order[1] != b:
        raise DomainError(f"x{a} and x{b} are not adjacent on the cycle")
    return order


def witness_cycle_weighting(p: Support2Profile, i: int) -> WitnessReport:
    """
    f = x1^{w12} x2^{w23} x5^{w54} in I^(1) \\ I on a cycle of length >= 6,
    after relabeling so that vertex i is x2 and x1 is its neighbor with the
    larger exponent

    Raises:
        DomainError: if G(I) is not a cycle of length >= 6, some edge carries
            several generators, or i has equal exponents on both edges
    """
    n = recognize_cycle(graph_of(p))
    if n is None or n < 6:
        raise DomainError("cycle-weighting construction needs a cycle of length >= 6")
    if p.max_alpha() > 1:
        raise DomainError("cycle-weighting construction needs one generator per edge")
    left, right = p.neighbors(i)
    if p.w(i, left) == p.w(i, right):
        raise DomainError(f"x{i} carries the same exponent on both of its edges")
    big, small = (left, right) if p.w(i, left) > p.w(i, right) else (right, left)
    c = _cycle_through(p, big, i)
    # c[0..4] play the roles of x1..x5.
    f = _mono(p, {c[0]: p.w(c[0], c[1]), c[1]: p.w(c[1], c[2]), c[4]: p.w(c[4], c[3])})
    return verify_witness(p.source, f, "cycle_weighting", IN_FIRST_SYMBOLIC, NOT_IN_IDEAL,
                          note=f"x1..x5 = {', '.join(f'x{v}' for v in c[:5])}")


def witness_small_cycle_multigen(p: Support2Profile) -> WitnessReport:
    """
    On C4: f = x1^{ν12} x2^{ν21}; on C5: g = x1^{ν12} x2^{ν21} x4^{ν43};
    relabeled so that {1, 2} is the first edge with several generators

    Raises:
        DomainError: if G(I) is not C4 or C5, or every edge has one generator
    """
    n = recognize_cycle(graph_of(p))
    if n not in (4, 5):
        raise DomainError("small-cycle construction needs G(I) = C4 or C5")
    multi = [e for e in p.edges if e.alpha >= 2]
    if not multi:
        raise DomainError("small-cycle construction needs an edge with several generators")
    e = multi[0]
    c = _cycle_through(p, e.i, e.j)
    powers = {c[0]: p.nu(c[0], c[1]), c[1]: p.nu(c[1], c[0])}
    if n == 5:
        powers[c[3]] = p.nu(c[3], c[2])
    return verify_witness(p.source, _mono(p, powers), f"c{n}_multigen", IN_FIRST_SYMBOLIC, NOT_IN_IDEAL)


def witness_c4_weighting(p: Support2Profile) -> WitnessReport:
    """
    On C4 with one generator per edge and a vertex v with w_{v,a} < w_{v,b}:
    f = x_v^{w_va} x_b^{w_bv} in I^(1) \\ I

    Raises:
        DomainError: if G(I) is not C4, some edge has several generators, or
            every vertex is uniform
    """
    if recognize_cycle(graph_of(p)) != 4:
        raise DomainError("construction needs G(I) = C4")
    if p.max_alpha() > 1:
        raise DomainError("construction needs one generator per edge")
    for v in p.vertices():
        a, b = p.neighbors(v)
        if p.w(v, a) == p.w(v, b):
            continue
        if p.w(v, a) > p.w(v, b):
            a, b = b, a
        f = _mono(p, {v: p.w(v, a), b: p.w(b, v)})
        return verify_witness(p.source, f, "c4_weighting", IN_FIRST_SYMBOLIC, NOT_IN_IDEAL,
                              note=f"x{v} has a smaller exponent toward x{a} than toward x{b}")
    raise DomainError("every vertex of the 4-cycle carries a uniform exponent")


def _require_triangle(p: Support2Profile, i: int, j: int, k: int):
    if recognize_cycle(graph_of(p)) != 3 or len({i, j, k}) != 3 or not (
            p.has_edge(i, j) and p.has_edge(j, k) and p.has_edge(i, k)):
        raise DomainError(f"construction needs G(I) to be the triangle on x{i}, x{j}, x{k}")


def witness_c3_double(p: Support2Profile, i: int, j: int, k: int) -> WitnessReport:
    """
    On a triangle with α_ij >= 2 and α_jk >= 2: x_i^{ν_ij} x_j^{ν_ji} when
    ν_jk <= ν_ji, otherwise x_j^{ν_jk} x_k^{ν_kj}; in I^(1) \\ I

    Raises:
        DomainError: if G(I) is not the triangle on i, j, k or an edge {i,j},
            {j,k} carries a single generator
    """
    _require_triangle(p, i, j, k)
    if p.alpha(i, j) < 2 or p.alpha(j, k) < 2:
        raise DomainError(f"need several generators on {{{i}, {j}}} and {{{j}, {k}}}")
    if p.nu(j, k) <= p.nu(j, i):
        f = _mono(p, {i: p.nu(i, j), j: p.nu(j, i)})
    else:
        f = _mono(p, {j: p.nu(j, k), k: p.nu(k, j)})
    return verify_witness(p.source, f, "c3_double_edge", IN_FIRST_SYMBOLIC, NOT_IN_IDEAL)


def witness_c3_single(p: Support2Profile, i: int, j: int, k: int) -> WitnessReport:
    """
    On a triangle with α_ij >= 2 and single generators on {i,k}, {j,k}, when
    w_ik < μ_ij: g = x_i^{max(w_ik, ν_ij)} x_j^{ν_ji}; otherwise the mirror
    image with i and j swapped. g lies in I^(1) \\ I.

    Raises:
        DomainError: if G(I) is not the triangle on i, j, k, the generator
            counts differ from (several, one, one), or w_ik >= μ_ij and
            w_jk >= μ_ji both hold
    """
    _require_triangle(p, i, j, k)
    if p.alpha(i, j) < 2 or p.alpha(i, k) != 1 or p.alpha(j, k) != 1:
        raise DomainError(f"need several generators on {{{i}, {j}}} and one on the other edges")
    if p.w(i, k) >= p.mu(i, j) and p.w(j, k) >= p.mu(j, i):
        raise DomainError("both exponent conditions hold, so the maximal ideal is not associated")
    if p.w(i, k) >= p.mu(i, j):
        i, j = j, i
    g = _mono(p, {i: max(p.w(i, k), p.nu(i, j)), j: p.nu(j, i)})
    return verify_witness(p.source, g, "c3_single_edge", IN_FIRST_SYMBOLIC, NOT_IN_IDEAL)
