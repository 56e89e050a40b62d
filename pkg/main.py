"""
Main Application - simiscalc, symbolic powers and the Simis property of
monomial ideals
"""
import argparse
import json
import sys
import time
from contextlib import contextmanager
from pathlib import Path
from typing import Dict, Tuple
from algebra.decomposition import (
    associated_primes,
    embedded_primes,
    irreducible_decomposition,
    is_decomposition_minimal,
    is_unmixed,
    minimal_primes,
    primary_decomposition,
)
from algebra.ideal import MonomialIdeal, power, render_ideal
from algebra.monomial import render
from algebra.symbolic_powers import (
    is_simis_in_degree,
    ordinary_contains,
    symbolic_contains,
    symbolic_power,
)
from structure.graphs import (
    girth,
    graph_of,
    is_bipartite,
    is_triangle_free,
    leaves,
    recognize_whisker,
    shape,
)
from structure.support2 import analyze, detect_standard_weighting, polarize
from theorems.models import MembershipClaim
from theorems.predicates import evaluate_all
from theorems.witnesses import verify_witness
from tools.fuzzing import FuzzConfig, run_campaign
from tools.ideal_loader import IdealLoader
from tools.reports import Report, digest, render_pretty, verdicts_to_result
from utils.config import get_settings
from utils.console import error, info, set_verbose
from utils.errors import DomainError, SimisCalcError

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_FAILURE_FOUND = 2
EXIT_NOT_MEMBER = 3


def _require_degree(max_degree: int) -> None:
    if max_degree < 1:
        raise DomainError(f"--max-degree must be >= 1, got {max_degree}")


class SimisArgumentParser(argparse.ArgumentParser):
    """Usage errors exit with EXIT_ERROR, not argparse's 2 (EXIT_FAILURE_FOUND)"""

    def error(self, message):
        self.print_usage(sys.stderr)
        error(f"{self.prog}: {message}")
        sys.exit(EXIT_ERROR)


class SimisApplication:
    """Command implementations; each returns a report and an exit code"""

    def __init__(self, timings: bool = False):
        self.settings = get_settings()
        self.record_timings = timings
        self.timings: Dict[str, float] = {}

    @contextmanager
    def timed(self, name: str):
        start = time.perf_counter()
        yield
        if self.record_timings:
            self.timings[name] = round(time.perf_counter() - start, 6)

    def load(self, file_path: str) -> Tuple[MonomialIdeal, str]:
        """Parse an ideal file; returns the canonical ideal and the input digest"""
        path = Path(file_path)
        text = path.read_text(encoding="utf-8")
        with self.timed("parse"):
            doc = IdealLoader.parse_document(text, path.name)
            I = doc.to_ideal()
        info(f"loaded {path.name}: {len(I)} generators in {I.n} variables")
        return I, digest(text)

    def report(self, command: str, input_digest: str, result: dict, certificates=None) -> Report:
        return Report(
            command=command,
            input_digest=input_digest,
            result=result,
            certificates=certificates or [],
            timings=dict(self.timings),
        )

    def decompose(self, file_path: str) -> Tuple[Report, int]:
        I, key = self.load(file_path)
        with self.timed("decompose"):
            irreducible = irreducible_decomposition(I)
            primary = primary_decomposition(I)
            result = {
                "ideal": render_ideal(I),
                "irreducible": [render_ideal(Q) for Q in irreducible.components],
                "primary": [render_ideal(Q) for Q in primary.components],
                "associated_primes": [str(P) for P in associated_primes(I)],
                "minimal_primes": [str(P) for P in minimal_primes(I)],
                "embedded_primes": [str(P) for P in embedded_primes(I)],
                "minimal_decomposition": is_decomposition_minimal(I),
                "unmixed": is_unmixed(I),
            }
        return self.report("decompose", key, result), EXIT_OK

    def power(self, file_path: str, s: int, symbolic: bool) -> Tuple[Report, int]:
        I, key = self.load(file_path)
        with self.timed("power"):
            P = symbolic_power(I, s) if symbolic else power(I, s)
        result = {
            "ideal": render_ideal(I),
            "degree": s,
            "symbolic": symbolic,
            "generators": [render(g) for g in P.generators],
        }
        return self.report("symbolic" if symbolic else "power", key, result), EXIT_OK

    def member(self, file_path: str, monomial: str, s: int, symbolic: bool) -> Tuple[Report, int]:
        I, key = self.load(file_path)
        f = IdealLoader.parse_monomial(monomial, I.ring)
        claim = MembershipClaim(kind="symbolic" if symbolic else "ordinary", degree=s)
        with self.timed("member"):
            inside = symbolic_contains(I, s, f) if symbolic else ordinary_contains(I, s, f)
        result = {"monomial": render(f), "target": claim.describe(), "member": inside}
        return self.report("member", key, result), EXIT_OK if inside else EXIT_NOT_MEMBER

    def simis(self, file_path: str, max_degree: int) -> Tuple[Report, int]:
        _require_degree(max_degree)
        I, key = self.load(file_path)
        degrees = []
        certificates = []
        with self.timed("simis"):
            for s in range(1, max_degree + 1):
                info(f"checking I^({s}) = I^{s}")
                verdict = is_simis_in_degree(I, s)
                entry = {"degree": s, "holds": verdict.holds, "witness": None}
                if not verdict.holds:
                    entry["witness"] = render(verdict.witness)
                    certificates.append(verify_witness(
                        I, verdict.witness, "direct",
                        MembershipClaim(kind="symbolic", degree=s),
                        MembershipClaim(kind="ordinary", degree=s),
                    ))
                degrees.append(entry)
                if not verdict.holds:
                    break
        holds = all(d["holds"] for d in degrees)
        result = {"ideal": render_ideal(I), "max_degree": max_degree, "simis_up_to_max": holds, "degrees": degrees}
        return self.report("simis", key, result, certificates), EXIT_OK if holds else EXIT_FAILURE_FOUND

    def classify(self, file_path: str, max_degree: int, check: bool) -> Tuple[Report, int]:
        if check:
            _require_degree(max_degree)
        I, key = self.load(file_path)
        with self.timed("classify"):
            p = analyze(I)
            G = graph_of(p)
            weighting = detect_standard_weighting(p)
            whisker = recognize_whisker(G)
            profile = [
                {
                    "edge": f"x{e.i}-x{e.j}",
                    "pairs": " ".join(f"({a},{b})" for a, b in e.pairs),
                    "alpha": e.alpha,
                    "mu": f"{e.mu(e.i)},{e.mu(e.j)}",
                    "nu": f"{e.nu(e.i)},{e.nu(e.j)}",
                }
                for e in p.edges
            ]
            graph = {
                "shape": shape(G),
                "bipartite": is_bipartite(G),
                "girth": girth(G),
                "triangle_free": is_triangle_free(G),
                "leaves": leaves(G),
                "whiskered": whisker is not None,
            }
            verdicts = evaluate_all(p, max_degree if check else None)
        result = {
            "ideal": render_ideal(I),
            "profile": profile,
            "graph": graph,
            "weighting": list(weighting.d) if weighting else None,
            "weighting_defaulted": list(weighting.defaulted) if weighting else [],
            "minimal_decomposition": is_decomposition_minimal(I),
            "embedded_primes": [str(P) for P in embedded_primes(I)],
            "verdicts": verdicts_to_result(verdicts),
        }
        certificates = [c for v in verdicts for c in v.certificates]
        failed = any(v.discrepancies or v.unverified for v in verdicts)
        return self.report("classify", key, result, certificates), EXIT_FAILURE_FOUND if failed else EXIT_OK

    def polarize(self, file_path: str) -> Tuple[Report, int]:
        I, key = self.load(file_path)
        with self.timed("polarize"):
            J, pmap = polarize(I)
        result = {
            "ideal": render_ideal(I),
            "polarized": render_ideal(J),
            "variables": [f"x{flat} = x{i},{j}" for i, j, flat in pmap.entries()],
        }
        return self.report("polarize", key, result), EXIT_OK

    def fuzz(self, config: FuzzConfig, workers: int, dump_dir: str) -> Tuple[Report, int]:
        with self.timed("fuzz"):
            campaign = run_campaign(config, workers=workers, dump_dir=dump_dir)
        result = json.loads(campaign.model_dump_json())
        key = digest(config.model_dump_json())
        return self.report("fuzz", key, result), EXIT_OK if campaign.passed else EXIT_FAILURE_FOUND


def build_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--pretty', action='store_true', help='Human-readable output instead of JSON')
    common.add_argument('--verbose', action='store_true', help='Progress messages on stderr')
    common.add_argument('--timings', action='store_true', help='Record wall-clock timings in the report')

    parser = SimisArgumentParser(
        prog='simiscalc',
        description='Symbolic powers, Simis checks and support-2 classification for monomial ideals',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  python main.py decompose ideals/path_p4.ideal --pretty
  python main.py simis ideals/path_two_gens.ideal --max-degree 2
  python main.py member ideals/path_two_gens.ideal "x2^4*x3^4" -s 2 --symbolic
  python main.py classify ideals/triangle_two_gens.ideal
  python main.py fuzz --family cycle --trials 200 --seed 7 --n 6 --max-exponent 3 --max-alpha 1
        """
    )
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('decompose', parents=[common], help='Irreducible and primary decompositions')
    p.add_argument('file')

    for name in ('power', 'symbolic'):
        p = sub.add_parser(name, parents=[common], help=f'Generators of the {name} power')
        p.add_argument('file')
        p.add_argument('-s', '--degree', type=int, required=True)
        if name == 'power':
            p.add_argument('--symbolic', action='store_true', help='Symbolic instead of ordinary power')

    p = sub.add_parser('member', parents=[common], help='Membership of a monomial in I^s or I^(s)')
    p.add_argument('file')
    p.add_argument('monomial')
    p.add_argument('-s', '--degree', type=int, default=1)
    p.add_argument('--symbolic', action='store_true')

    p = sub.add_parser('simis', parents=[common], help='Check I^(s) = I^s for s up to a bound')
    p.add_argument('file')
    p.add_argument('--max-degree', type=int, default=settings.max_degree)

    p = sub.add_parser('classify', parents=[common], help='Support-2 profile and theorem verdicts')
    p.add_argument('file')
    p.add_argument('--max-degree', type=int, default=settings.max_degree,
                   help='Cross-check predictions by direct computation up to this degree')
    p.add_argument('--no-check', action='store_true', help='Skip cross-checks')

    p = sub.add_parser('polarize', parents=[common], help='Polarization and its variable map')
    p.add_argument('file')

    p = sub.add_parser('fuzz', parents=[common], help='Seeded cross-validation campaign')
    p.add_argument('--family', choices=['random-support2', 'cycle', 'whisker', 'c3', 'multigen'], required=True)
    p.add_argument('--trials', type=int, default=100)
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--n', type=int, default=6)
    p.add_argument('--m', type=int, default=3)
    p.add_argument('--max-exponent', type=int, default=3)
    p.add_argument('--max-alpha', type=int, default=1)
    p.add_argument('--s-max', type=int, default=3)
    p.add_argument('--edge-probability', type=float, default=0.5)
    p.add_argument('--weighted-fraction', type=float, default=0.25)
    p.add_argument('--triangle-free', action='store_true')
    p.add_argument('--enforce-condition4', action='store_true')
    p.add_argument('--workers', type=int, default=settings.fuzz_workers)
    p.add_argument('--dump-dir', default=settings.dump_dir)
    return parser


def run(argv=None) -> Tuple[str, int]:
    """Parse arguments, run one command; returns the rendered output and exit code"""
    args = build_parser().parse_args(argv)
    if args.verbose:
        set_verbose(True)
    app = SimisApplication(timings=args.timings)
    cmd = args.command
    if cmd == 'decompose':
        report, code = app.decompose(args.file)
    elif cmd == 'power':
        report, code = app.power(args.file, args.degree, args.symbolic)
    elif cmd == 'symbolic':
        report, code = app.power(args.file, args.degree, True)
    elif cmd == 'member':
        report, code = app.member(args.file, args.monomial, args.degree, args.symbolic)
    elif cmd == 'simis':
        report, code = app.simis(args.file, args.max_degree)
    elif cmd == 'classify':
        report, code = app.classify(args.file, args.max_degree, not args.no_check)
    elif cmd == 'polarize':
        report, code = app.polarize(args.file)
    else:
        config = FuzzConfig(
            family=args.family,
            trials=args.trials,
            seed=args.seed,
            n=args.n,
            m=args.m,
            max_exponent=args.max_exponent,
            max_alpha=args.max_alpha,
            s_max=args.s_max,
            edge_probability=args.edge_probability,
            weighted_fraction=args.weighted_fraction,
            triangle_free=args.triangle_free,
            enforce_condition4=args.enforce_condition4,
        )
        report, code = app.fuzz(config, args.workers, args.dump_dir)
    return (render_pretty(report) if args.pretty else report.to_json()), code


def main(argv=None):
    """Main entry point"""
    try:
        output, code = run(argv)
    except SimisCalcError as e:
        error(str(e))
        sys.exit(EXIT_ERROR)
    except Exception as e:
        error(f"{type(e).__name__}: {e}")
        sys.exit(EXIT_ERROR)
    print(output)
    sys.exit(code)


if __name__ == "__main__":
    main()
