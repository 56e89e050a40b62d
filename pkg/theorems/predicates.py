"""
Executable classification statements for support-2 monomial ideals

Each predicate checks its hypotheses, evaluates its conclusion syntactically
on the profile, attaches verified witnesses where the statement yields one,
and, when s_max is given, compares the prediction with direct computation.
"""
from itertools import permutations
from typing import Callable, List, Optional
from algebra.decomposition import (
    PrimeSupport,
    associated_primes,
    embedded_primes,
    is_decomposition_minimal,
    is_unmixed,
)
from algebra.monomial import render
from algebra.symbolic_powers import first_simis_failure, is_simis_in_degree
from structure.graphs import (
    cover_separates_edge,
    distance,
    girth,
    graph_of,
    is_bipartite,
    is_triangle_free,
    leaves,
    recognize_cycle,
    recognize_whisker,
)
from structure.support2 import (
    Support2Profile,
    detect_standard_weighting,
    polarization_identity_holds,
    relabeled_profile,
    whisker_condition,
)
from theorems.models import CrossCheck, MembershipClaim, Verdict, WitnessReport
from theorems.witnesses import (
    find_nonuniform_vertex,
    witness_c3_double,
    witness_c3_single,
    witness_c4_weighting,
    witness_cycle_weighting,
    witness_girth6,
    witness_leaf,
    witness_multigen,
    witness_nonuniform,
    witness_odd_cycle,
    witness_small_cycle_multigen,
    verify_witness,
)
from utils.console import info

SIMIS = "simis"
NO_EMBEDDED = "no_embedded_primes"
SECOND_POWER = "second_power_equal"
UNMIXED = "unmixed"
COHEN_MACAULAY = "cohen_macaulay"
MAXIMAL_ASSOCIATED = "maximal_ideal_associated"


def _exact(claim: str, predicted: bool, observed: bool, detail: str = "") -> CrossCheck:
    return CrossCheck(
        claim=claim,
        predicted=predicted,
        observed=observed,
        status="agrees" if predicted == observed else "disagrees",
        detail=detail,
    )


def cross_check_simis(p: Support2Profile, predicted: bool, s_max: int,
                      certificates: List[WitnessReport]) -> CrossCheck:
    """
    Compare a Simis prediction with I^(s) = I^s for s <= s_max

    A "not Simis" prediction without a failure up to s_max is still confirmed
    by a verified certificate; otherwise it is inconclusive.
    """
    failure = first_simis_failure(p.source, s_max)
    base = dict(claim=SIMIS, predicted=predicted, bounded=True, s_max=s_max)
    if failure is not None:
        degree, witness = failure
        return CrossCheck(**base, observed=False, failure_degree=degree, witness=render(witness),
                          status="disagrees" if predicted else "agrees")
    if predicted:
        return CrossCheck(**base, observed=True, status="agrees",
                          detail=f"no failure for s <= {s_max}")
    certified = [c for c in certificates if c.verified]
    if certified:
        return CrossCheck(**base, observed=False, status="agrees",
                          detail=f"certified by {certified[0].construction} witness "
                                 f"{certified[0].monomial} in {certified[0].claimed_in.describe()}")
    return CrossCheck(**base, status="inconclusive", detail=f"no failure for s <= {s_max} and no certificate")


def _check_embedded(p: Support2Profile, predicted_none: bool) -> CrossCheck:
    observed = embedded_primes(p.source)
    return _exact(NO_EMBEDDED, predicted_none, not observed,
                  detail=", ".join(str(P) for P in observed))


def _inapplicable(name: str, hypotheses: dict, note: str) -> Verdict:
    return Verdict(predicate=name, applicable=False, hypotheses=hypotheses, notes=[note])


def thm_support2_simis(p: Support2Profile, s_max: Optional[int] = None) -> Verdict:
    """
    With a minimal irreducible decomposition and no embedded primes, I is
    Simis iff G(I) is bipartite and I has a standard linear weighting
    """
    name = "thm_support2_simis"
    hypotheses = {
        "minimal_decomposition": is_decomposition_minimal(p.source),
        NO_EMBEDDED: not embedded_primes(p.source),
    }
    if not all(hypotheses.values()):
        return _inapplicable(name, hypotheses, "hypotheses not met")
    G = graph_of(p)
    weighting = detect_standard_weighting(p)
    bipartite = is_bipartite(G)
    predicted = bipartite and weighting is not None
    verdict = Verdict(
        predicate=name,
        applicable=True,
        hypotheses=hypotheses,
        predictions={SIMIS: predicted},
        findings={
            "bipartite": bipartite,
            "weighting": list(weighting.d) if weighting else None,
            "max_alpha": p.max_alpha(),
        },
    )
    if weighting is not None and weighting.defaulted:
        verdict.notes.append("d_i = 1 chosen for isolated variables " + ", ".join(f"x{v}" for v in weighting.defaulted))
    if not predicted:
        multi = [e for e in p.edges if e.alpha >= 2]
        if multi:
            verdict.certificates.append(witness_multigen(p, multi[0].i, multi[0].j))
        elif weighting is None:
            i, j, k = find_nonuniform_vertex(p)
            verdict.certificates.append(witness_nonuniform(p, i, j, k))
        else:
            verdict.certificates.append(witness_odd_cycle(p))
    if s_max:
        verdict.cross_checks.append(cross_check_simis(p, predicted, s_max, verdict.certificates))
    return verdict


def _cycle_embedded_certificate(p: Support2Profile, n: int) -> WitnessReport:
    if p.max_alpha() >= 2:
        if n in (4, 5):
            return witness_small_cycle_multigen(p)
        e = [e for e in p.edges if e.alpha >= 2][0]
        return witness_girth6(p, e.i, e.j)
    if n == 4:
        return witness_c4_weighting(p)
    for v in p.vertices():
        a, b = p.neighbors(v)
        if p.w(v, a) != p.w(v, b):
            return witness_cycle_weighting(p, v)
    raise AssertionError("a cycle without a weighting has a nonuniform vertex")


def thm_cycle_classification(p: Support2Profile, s_max: Optional[int] = None) -> Verdict:
    """
    On G(I) = C_n with n = 4 or n >= 6: no embedded primes iff I has a
    standard weighting; Simis iff additionally n is even
    """
    name = "thm_cycle_classification"
    n = recognize_cycle(graph_of(p))
    hypotheses = {"cycle": n is not None, "length_4_or_at_least_6": n is not None and n not in (3, 5)}
    if n is None:
        return _inapplicable(name, hypotheses, "G(I) is not a cycle")
    if n in (3, 5):
        verdict = _inapplicable(name, hypotheses, f"the classification does not cover C{n}; use direct computation")
        verdict.findings["cycle_length"] = n
        return verdict
    weighting = detect_standard_weighting(p)
    has_weighting = weighting is not None
    verdict = Verdict(
        predicate=name,
        applicable=True,
        hypotheses=hypotheses,
        predictions={NO_EMBEDDED: has_weighting, SIMIS: has_weighting and n % 2 == 0},
        findings={"cycle_length": n, "weighting": list(weighting.d) if weighting else None,
                  "max_alpha": p.max_alpha()},
    )
    if not has_weighting:
        verdict.certificates.append(_cycle_embedded_certificate(p, n))
    elif n % 2 == 1:
        verdict.certificates.append(witness_odd_cycle(p))
    if s_max:
        verdict.cross_checks.append(_check_embedded(p, has_weighting))
        verdict.cross_checks.append(cross_check_simis(p, verdict.predictions[SIMIS], s_max, verdict.certificates))
    return verdict


def thm_whisker_cm(p: Support2Profile, s_max: Optional[int] = None) -> Verdict:
    """
    On a whiskered G(I): Cohen-Macaulay, unmixed and free of embedded primes
    are all equivalent to one generator on every whisker edge with
    w_{i,m+i} >= μ_{i,j} for every core neighbor j

    Cohen-Macaulayness is reported through this equivalence, never computed.
    """
    name = "thm_whisker_cm"
    whisker = recognize_whisker(graph_of(p))
    if whisker is None:
        return _inapplicable(name, {"whiskered": False}, "G(I) is not a whiskered graph")
    condition = whisker_condition(p, whisker)
    verdict = Verdict(
        predicate=name,
        applicable=True,
        hypotheses={"whiskered": True},
        predictions={NO_EMBEDDED: condition, UNMIXED: condition, COHEN_MACAULAY: condition},
        findings={
            "whisker_condition": condition,
            "cores": list(whisker.cores),
            "whiskers": list(whisker.whiskers),
        },
        notes=["cohen_macaulay certified by theorem equivalence, not computed"],
    )
    if whisker.ambiguous:
        verdict.notes.append("K2 components resolved with the lower vertex as core: "
                             + ", ".join(f"{{x{a}, x{b}}}" for a, b in whisker.ambiguous))
    if condition:
        verdict.findings["polarization_identity"] = polarization_identity_holds(p, whisker)
    else:
        for core, leaf in zip(whisker.cores, whisker.whiskers):
            report = witness_leaf(p, core, leaf)
            if report is not None:
                verdict.certificates.append(report)
                break
    if s_max:
        verdict.cross_checks.append(_check_embedded(p, condition))
        verdict.cross_checks.append(_exact(UNMIXED, condition, is_unmixed(p.source)))
    return verdict


def _second_power_witness(p: Support2Profile, whisker, i: int, j: int) -> Optional[WitnessReport]:
    """Try the two failure shapes on edge {i, j} of H in both orientations"""
    q = relabeled_profile(p, whisker)
    m = whisker.m
    inverse = {new: old for old, new in whisker.mapping().items()}
    for a, b in ((i, j), (j, i)):
        Wa, Wb = q.w(a, m + a), q.w(b, m + b)
        wab, wba = q.w(a, b), q.w(b, a)
        if not wab <= Wa < 2 * wab:
            continue
        if wba < Wb <= 2 * wba:
            case, xb = "a", 2 * wba
        elif Wb >= 2 * wba:
            case, xb = "b", Wb
        else:
            continue
        powers = {inverse[a]: Wa, inverse[b]: xb, inverse[m + b]: q.w(m + b, b)}
        f = p.ring.from_powers(powers)
        return verify_witness(
            p.source, f, f"whisker_second_power_{case}",
            MembershipClaim(kind="symbolic", degree=2),
            MembershipClaim(kind="ordinary", degree=2),
            note=f"edge {{x{inverse[a]}, x{inverse[b]}}}",
        )
    return None


def thm_whisker_second_power(p: Support2Profile, s_max: Optional[int] = None) -> Verdict:
    """
    On a triangle-free whiskered G(I) with single generators per edge and no
    embedded primes: I^(2) = I^2 iff every core edge {i, j} has either
    w_{i,m+i} = w_ij and w_{j,m+j} = w_ji, or w_{i,m+i} >= 2 w_ij and
    w_{j,m+j} >= 2 w_ji
    """
    name = "thm_whisker_second_power"
    G = graph_of(p)
    whisker = recognize_whisker(G)
    if whisker is None:
        return _inapplicable(name, {"whiskered": False}, "G(I) is not a whiskered graph")
    hypotheses = {
        "whiskered": True,
        "triangle_free": is_triangle_free(G),
        "single_generators": p.max_alpha() <= 1,
    }
    if all(hypotheses.values()):
        hypotheses[NO_EMBEDDED] = not embedded_primes(p.source)
    if not all(hypotheses.values()):
        return _inapplicable(name, hypotheses, "hypotheses not met")
    q = relabeled_profile(p, whisker)
    m = whisker.m
    inverse = {new: old for old, new in whisker.mapping().items()}
    failing = []
    for e in q.edges:
        i, j = e.i, e.j
        if j > m:
            continue
        Wi, Wj = q.w(i, m + i), q.w(j, m + j)
        equal = Wi == q.w(i, j) and Wj == q.w(j, i)
        double = Wi >= 2 * q.w(i, j) and Wj >= 2 * q.w(j, i)
        if not (equal or double):
            failing.append((i, j))
    predicted = not failing
    verdict = Verdict(
        predicate=name,
        applicable=True,
        hypotheses=hypotheses,
        predictions={SECOND_POWER: predicted},
        findings={"failing_edges": [v for i, j in failing for v in (inverse[i], inverse[j])]},
    )
    for i, j in failing:
        report = _second_power_witness(p, whisker, i, j)
        if report is None:
            verdict.notes.append(f"no witness shape matched edge {{x{inverse[i]}, x{inverse[j]}}}")
        else:
            verdict.certificates.append(report)
    if s_max:
        verdict.cross_checks.append(_exact(SECOND_POWER, predicted, is_simis_in_degree(p.source, 2).holds))
    return verdict


def prop_leaf_embedded(p: Support2Profile, i: int, j: int, s_max: Optional[int] = None) -> Verdict:
    """
    If every minimal vertex cover holds exactly one of x_i, x_j and some
    generator is divisible by x_i^{ν_ij + 1} or x_j^{ν_ji + 1}, then I has
    embedded primes
    """
    name = "prop_leaf_embedded"
    if not p.has_edge(i, j):
        return _inapplicable(name, {"edge": False}, f"{{x{i}, x{j}}} is not an edge of G(I)")
    hypotheses = {"edge": True, "covers_separate_edge": cover_separates_edge(graph_of(p), i, j)}
    if not hypotheses["covers_separate_edge"]:
        return _inapplicable(name, hypotheses, "some minimal vertex cover holds both endpoints")
    verdict = Verdict(predicate=name, applicable=True, hypotheses=hypotheses,
                      findings={"edge": [min(i, j), max(i, j)]})
    report = witness_leaf(p, i, j)
    if report is None:
        verdict.notes.append("trigger not met; the statement predicts nothing")
        return verdict
    verdict.predictions[NO_EMBEDDED] = False
    verdict.certificates.append(report)
    if s_max:
        verdict.cross_checks.append(_check_embedded(p, False))
    return verdict


def _girth6_side(p: Support2Profile, i: int, j: int) -> Optional[int]:
    G = graph_of(p)
    ell = leaves(G)
    for s in (i, j):
        if all((d := distance(G, s, l)) is None or d >= 2 for l in ell):
            return s
    return None


def prop_girth6(p: Support2Profile, i: int, j: int, s_max: Optional[int] = None) -> Verdict:
    """
    With girth >= 6, several generators on {i, j}, and one endpoint at
    distance >= 2 from every leaf, I has embedded primes
    """
    name = "prop_girth6"
    if not p.has_edge(i, j):
        return _inapplicable(name, {"edge": False}, f"{{x{i}, x{j}}} is not an edge of G(I)")
    g = girth(graph_of(p))
    side = _girth6_side(p, i, j)
    hypotheses = {
        "edge": True,
        "girth_at_least_6": g is None or g >= 6,
        "several_generators": p.alpha(i, j) >= 2,
        "endpoint_away_from_leaves": side is not None,
    }
    if not all(hypotheses.values()):
        return _inapplicable(name, hypotheses, "hypotheses not met")
    t = j if side == i else i
    verdict = Verdict(
        predicate=name,
        applicable=True,
        hypotheses=hypotheses,
        predictions={NO_EMBEDDED: False},
        findings={"edge": [min(i, j), max(i, j)], "side": side, "girth": g},
        certificates=[witness_girth6(p, side, t)],
        notes=["exponents of x_r reached through several neighbors multiply"],
    )
    if s_max:
        verdict.cross_checks.append(_check_embedded(p, False))
    return verdict


def prop_c3_maximal(p: Support2Profile, s_max: Optional[int] = None) -> Verdict:
    """
    On G(I) = C3: two edges with several generators force 𝔪 into Ass(I);
    with several generators on {i, j} only, 𝔪 is not associated iff
    w_ik >= μ_ij and w_jk >= μ_ji
    """
    name = "prop_c3_maximal"
    if recognize_cycle(graph_of(p)) != 3:
        return _inapplicable(name, {"triangle": False}, "G(I) is not a triangle")
    tri = p.vertices()
    verdict = Verdict(predicate=name, applicable=True, hypotheses={"triangle": True})
    for i, j, k in permutations(tri):
        if p.alpha(i, j) >= 2 and p.alpha(j, k) >= 2:
            verdict.findings.update({"part": "a", "labeling": [i, j, k]})
            verdict.predictions[MAXIMAL_ASSOCIATED] = True
            verdict.certificates.append(witness_c3_double(p, i, j, k))
            break
    else:
        for i, j, k in permutations(tri):
            if p.alpha(i, j) >= 2 and p.alpha(i, k) == 1 and p.alpha(j, k) == 1:
                absent = p.w(i, k) >= p.mu(i, j) and p.w(j, k) >= p.mu(j, i)
                verdict.findings.update({"part": "b", "labeling": [i, j, k]})
                verdict.predictions[MAXIMAL_ASSOCIATED] = not absent
                if not absent:
                    verdict.certificates.append(witness_c3_single(p, i, j, k))
                break
        else:
            verdict.notes.append("no edge carries several generators; the statement predicts nothing")
    if s_max and MAXIMAL_ASSOCIATED in verdict.predictions:
        observed = PrimeSupport(tuple(tri)) in associated_primes(p.source)
        verdict.cross_checks.append(_exact(MAXIMAL_ASSOCIATED, verdict.predictions[MAXIMAL_ASSOCIATED], observed))
    return verdict


GLOBAL_PREDICATES: List[Callable[..., Verdict]] = [
    thm_support2_simis,
    thm_cycle_classification,
    thm_whisker_cm,
    thm_whisker_second_power,
    prop_c3_maximal,
]


def evaluate_all(p: Support2Profile, s_max: Optional[int] = None) -> List[Verdict]:
    """Every predicate on the profile, plus the edge-level propositions per edge"""
    verdicts = []
    for predicate in GLOBAL_PREDICATES:
        info(f"evaluating {predicate.__name__}")
        verdicts.append(predicate(p, s_max))
    for e in p.edges:
        verdicts.append(prop_leaf_embedded(p, e.i, e.j, s_max))
        if e.alpha >= 2:
            verdicts.append(prop_girth6(p, e.i, e.j, s_max))
    return verdicts
