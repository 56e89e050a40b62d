"""
Seeded fuzz campaigns cross-checking theorem predicates against direct
computation
"""
import json
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Dict, List, Literal, Optional, Tuple
import numpy as np
from pydantic import BaseModel, Field, model_validator
from algebra.decomposition import is_decomposition_minimal
from algebra.ideal import MonomialIdeal, from_generators
from algebra.monomial import RingContext
from structure.support2 import Support2Profile, analyze
from theorems.models import Verdict
from theorems.predicates import (
    prop_c3_maximal,
    prop_girth6,
    prop_leaf_embedded,
    thm_cycle_classification,
    thm_support2_simis,
    thm_whisker_cm,
    thm_whisker_second_power,
)
from theorems.witnesses import witness_multigen
from utils.console import info, warn

Family = Literal["random-support2", "cycle", "whisker", "c3", "multigen"]
Edge = Tuple[int, int]


class FuzzConfig(BaseModel):
    """Everything a campaign is reproducible from"""
    family: Family
    trials: int = Field(default=100, ge=1)
    seed: int = Field(default=0, ge=0)
    max_exponent: int = Field(default=3, ge=1)
    max_alpha: int = Field(default=1, ge=1)
    n: int = Field(default=6, ge=1)
    m: int = Field(default=3, ge=1)
    s_max: int = Field(default=3, ge=1)
    edge_probability: float = Field(default=0.5, ge=0.0, le=1.0)
    weighted_fraction: float = Field(default=0.25, ge=0.0, le=1.0)
    triangle_free: bool = False
    enforce_condition4: bool = False

    @model_validator(mode="after")
    def _multigen_needs_room(self) -> "FuzzConfig":
        if self.family == "multigen" and self.max_exponent < 2:
            raise ValueError("the multigen family needs max_exponent >= 2")
        return self


class TrialResult(BaseModel):
    """One generated instance with every verdict evaluated on it"""
    trial: int
    seed: List[int]
    n: int
    generators: List[List[int]]
    ideal: str
    verdicts: List[Verdict] = Field(default_factory=list)
    error: Optional[str] = None

    @property
    def discrepancies(self) -> int:
        count = sum(len(v.discrepancies) + len(v.unverified) for v in self.verdicts)
        count += sum(1 for v in self.verdicts if v.findings.get("polarization_identity") is False)
        return count + (1 if self.error else 0)

    @property
    def inconclusive(self) -> int:
        return sum(1 for v in self.verdicts for c in v.cross_checks if c.status == "inconclusive")


class PredicateTally(BaseModel):
    evaluated: int = 0
    applicable: int = 0
    agrees: int = 0
    disagrees: int = 0
    inconclusive: int = 0
    certificates: int = 0
    unverified: int = 0


class CampaignReport(BaseModel):
    """Merged campaign outcome, ordered by trial index"""
    config: FuzzConfig
    trials: int
    discrepancies: int
    inconclusive: int
    tallies: Dict[str, PredicateTally] = Field(default_factory=dict)
    failures: List[TrialResult] = Field(default_factory=list)
    dumped: List[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.discrepancies == 0


def _edge_pairs(rng: np.random.Generator, E: int, A: int) -> List[Tuple[int, int]]:
    """α exponent pairs on one edge, first coordinate strictly decreasing"""
    alpha = int(rng.integers(1, min(A, E) + 1))
    firsts = sorted((int(v) for v in rng.choice(np.arange(1, E + 1), size=alpha, replace=False)), reverse=True)
    seconds = sorted(int(v) for v in rng.choice(np.arange(1, E + 1), size=alpha, replace=False))
    return list(zip(firsts, seconds))


def _erdos_renyi(rng: np.random.Generator, vertices: int, p: float, triangle_free: bool = False) -> List[Edge]:
    edges: List[Edge] = []
    adjacent: Dict[int, set] = {v: set() for v in range(1, vertices + 1)}
    for a in range(1, vertices + 1):
        for b in range(a + 1, vertices + 1):
            if rng.random() >= p:
                continue
            if triangle_free and adjacent[a] & adjacent[b]:
                continue
            edges.append((a, b))
            adjacent[a].add(b)
            adjacent[b].add(a)
    return edges


def _graph(config: FuzzConfig, rng: np.random.Generator) -> Tuple[int, List[Edge]]:
    if config.family == "cycle":
        n = config.n
        return n, [(v, v % n + 1) for v in range(1, n + 1)]
    if config.family == "c3":
        return 3, [(1, 2), (2, 3), (1, 3)]
    if config.family == "whisker":
        m = config.m
        core = _erdos_renyi(rng, m, config.edge_probability, config.triangle_free)
        return 2 * m, core + [(k, m + k) for k in range(1, m + 1)]
    edges: List[Edge] = []
    while not edges:
        edges = _erdos_renyi(rng, config.n, config.edge_probability)
    return config.n, edges


def _multigen_instance(ring: RingContext, edges: List[Edge], rng: np.random.Generator, E: int) -> MonomialIdeal:
    i, j = edges[int(rng.integers(len(edges)))]
    d = {v: int(rng.integers(1, E + 1)) for v in range(1, ring.n + 1)}
    d[i] = int(rng.integers(2, E + 1))
    d[j] = int(rng.integers(2, E + 1))
    generators = [ring.from_powers({a: d[a], b: d[b]}) for a, b in edges if (a, b) != (i, j)]
    generators.append(ring.from_powers({i: d[i], j: int(rng.integers(1, d[j]))}))
    generators.append(ring.from_powers({i: int(rng.integers(1, d[i])), j: d[j]}))
    return from_generators(ring, generators)


def generate_instance(config: FuzzConfig, trial: int) -> MonomialIdeal:
    """
    The instance of one trial, drawn from numpy's generator seeded with
    (seed, trial)

    Exponents are uniform in [1, E] and every edge carries between 1 and A
    generators with strictly monotone exponent pairs. A weighted_fraction of
    instances is drawn as J_w for a random standard weighting instead.

    The multigen family draws J_w for a random graph and weighting, then
    replaces one edge {i,j} by x_i^d_i*x_j^b, x_i^a*x_j^d_j with a < d_i and
    b < d_j. Such an ideal always has a minimal irreducible decomposition.
    """
    rng = np.random.default_rng([config.seed, trial])
    n, edges = _graph(config, rng)
    ring = RingContext(n)
    E = config.max_exponent
    if config.family == "multigen":
        return _multigen_instance(ring, edges, rng, E)
    generators = []
    if rng.random() < config.weighted_fraction:
        d = {v: int(rng.integers(1, E + 1)) for v in range(1, n + 1)}
        for a, b in edges:
            generators.append(ring.from_powers({a: d[a], b: d[b]}))
        return from_generators(ring, generators)
    whisker_edges = set()
    if config.family == "whisker" and config.enforce_condition4:
        whisker_edges = {(k, config.m + k) for k in range(1, config.m + 1)}
    mu: Dict[int, int] = {}
    for a, b in edges:
        if (a, b) in whisker_edges:
            continue
        for x, y in _edge_pairs(rng, E, config.max_alpha):
            generators.append(ring.from_powers({a: x, b: y}))
            mu[a] = max(mu.get(a, 1), x)
            mu[b] = max(mu.get(b, 1), y)
    for k, leaf in sorted(whisker_edges):
        # mu <= E, so [mu, E] is never empty
        w = int(rng.integers(mu.get(k, 1), E + 1))
        generators.append(ring.from_powers({k: w, leaf: int(rng.integers(1, E + 1))}))
    return from_generators(ring, generators)


def _multigen_check(p: Support2Profile) -> Verdict:
    """witness_multigen on every edge with several generators"""
    multi = [e for e in p.edges if e.alpha >= 2]
    minimal = is_decomposition_minimal(p.source)
    verdict = Verdict(
        predicate="witness_multigen",
        applicable=bool(multi) and minimal,
        hypotheses={"minimal_decomposition": minimal, "several_generators": bool(multi)},
    )
    if verdict.applicable:
        verdict.certificates = [witness_multigen(p, e.i, e.j) for e in multi]
    return verdict


def evaluate_instance(config: FuzzConfig, p: Support2Profile) -> List[Verdict]:
    """The predicates each family exercises, all cross-checked up to s_max"""
    s = config.s_max
    if config.family == "cycle":
        return [thm_cycle_classification(p, s)]
    if config.family == "whisker":
        return [thm_whisker_cm(p, s), thm_whisker_second_power(p, s)]
    if config.family == "c3":
        return [prop_c3_maximal(p, s)]
    if config.family == "multigen":
        return [_multigen_check(p), thm_support2_simis(p, s)]
    verdicts = [thm_support2_simis(p, s), _multigen_check(p)]
    for e in p.edges:
        verdicts.append(prop_leaf_embedded(p, e.i, e.j, s))
        if e.alpha >= 2:
            verdicts.append(prop_girth6(p, e.i, e.j, s))
    return verdicts


def run_trial(config: FuzzConfig, trial: int) -> TrialResult:
    """Generate and evaluate one trial; errors are recorded, never raised"""
    I = generate_instance(config, trial)
    result = TrialResult(
        trial=trial,
        seed=[config.seed, trial],
        n=I.n,
        generators=[list(g.exponents) for g in I.generators],
        ideal=str(I),
    )
    try:
        result.verdicts = evaluate_instance(config, analyze(I))
    except Exception as e:
        result.error = f"{type(e).__name__}: {e}"
    return result


def _dump(result: TrialResult, config: FuzzConfig, dump_dir: str) -> str:
    """Write a reproducible case file for a discrepant trial"""
    directory = Path(dump_dir)
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / f"{config.family}-seed{config.seed}-trial{result.trial}.json"
    payload = {"config": config.model_dump(), "trial": json.loads(result.model_dump_json())}
    path.write_text(json.dumps(payload, indent=2), encoding="utf-8")
    return str(path)


def _tally(report: CampaignReport, result: TrialResult):
    for v in result.verdicts:
        t = report.tallies.setdefault(v.predicate, PredicateTally())
        t.evaluated += 1
        t.applicable += int(v.applicable)
        t.certificates += len(v.certificates)
        t.unverified += len(v.unverified)
        for c in v.cross_checks:
            setattr(t, c.status, getattr(t, c.status) + 1)


def run_campaign(config: FuzzConfig, workers: int = 1, dump_dir: Optional[str] = None) -> CampaignReport:
    """
    Run every trial, in parallel when workers > 1, and merge by trial index

    Args:
        config: Campaign parameters
        workers: Worker processes
        dump_dir: Where discrepant trials are written; None disables dumps

    Returns:
        CampaignReport, identical for identical config whatever the worker count
    """
    indices = list(range(config.trials))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run_trial, [config] * len(indices), indices))
    else:
        results = []
        for trial in indices:
            info(f"trial {trial + 1}/{config.trials}")
            results.append(run_trial(config, trial))
    results.sort(key=lambda r: r.trial)
    report = CampaignReport(config=config, trials=len(results), discrepancies=0, inconclusive=0)
    for result in results:
        _tally(report, result)
        report.inconclusive += result.inconclusive
        if result.discrepancies:
            report.discrepancies += result.discrepancies
            report.failures.append(result)
            if dump_dir:
                report.dumped.append(_dump(result, config, dump_dir))
                warn(f"discrepancy in trial {result.trial}, dumped to {report.dumped[-1]}")
    return report
