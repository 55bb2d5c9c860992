"""
CLI entry point

Runs saturable NLS simulations, conservation checks, stability reports,
scheme comparisons and benchmarks
"""
import sys
import argparse
from pathlib import Path
from typing import Dict, Optional

from satnls import __version__
from satnls.analysis import (
    benchmark,
    check_conservation,
    compare_schemes,
    describe_config,
    print_benchmark,
    print_comparison,
    print_conservation,
    print_stability,
)
from satnls.config import SCHEMES, canonical_scheme
from satnls.diagnostics import conservation_report
from satnls.errors import ConfigurationError, SatNLSError
from satnls.geom.grid import make_grid
from satnls.io.config_loader import build_config, parse_config, resolve_config_path
from satnls.io.run_writer import RunWriter
from satnls.logger import SimulationLogger
from satnls.model.state import RunConfig
from satnls.solvers.runner import run_simulation
from satnls.stability import is_stable, stability_for_grid

EXIT_CONFIG_ERROR = 1
EXIT_DIVERGED = 2
EXIT_UNSTABLE = 3

# CLI flag dest -> configuration key
OVERRIDE_KEYS: Dict[str, str] = {
    'scheme': 'scheme',
    's': 'S',
    'tau': 'tau',
    'T': 'T',
    'L': 'L',
    'N': 'N',
    'solitons': 'solitons',
    'snapshot_stride': 'snapshot_stride',
    'splitting': 'splitting',
    'norm_integrand': 'norm_integrand',
}


def _add_override_flags(parser: argparse.ArgumentParser, with_scheme: bool = True):
    if with_scheme:
        parser.add_argument('--scheme', type=str, help='splitstep | fd')
    parser.add_argument('--s', dest='s', type=str, help='Saturation S')
    parser.add_argument('--tau', type=str, help='Time step')
    parser.add_argument('--T', dest='T', type=str, help='Final time')
    parser.add_argument('--L', dest='L', type=str, help='Domain length')
    parser.add_argument('--N', dest='N', type=str, help='Mesh count (power of two)')
    parser.add_argument('--solitons', type=str, help='"offset:velocity;offset:velocity"')
    parser.add_argument('--snapshot-stride', dest='snapshot_stride', type=str, help='Emit every k-th step')
    parser.add_argument('--splitting', type=str, help='lie | strang (split-step only)')
    parser.add_argument('--norm-integrand', dest='norm_integrand', type=str,
                        help='abs2 (|psi|^2, default) | abs (|psi|)')


def _overrides(args: argparse.Namespace) -> Dict[str, str]:
    overrides = {}
    for dest, key in OVERRIDE_KEYS.items():
        value = getattr(args, dest, None)
        if value is not None:
            overrides[key] = value
    return overrides


def _load_config(args: argparse.Namespace) -> RunConfig:
    output_dir = Path(args.out) if getattr(args, 'out', None) else None
    overrides = _overrides(args)
    if args.config:
        return parse_config(resolve_config_path(args.config), overrides=overrides, output_dir=output_dir)
    # everything from flags
    return build_config(overrides, output_dir=output_dir)


def _print_warnings(logger: SimulationLogger):
    warnings = logger.get_warnings()
    if warnings:
        print(f"\nWarnings ({len(warnings)}):")
        for warning in warnings:
            print(f"  - {warning.message}")


def cmd_simulate(args: argparse.Namespace) -> int:
    """Run one configuration and write its output directory"""
    config = _load_config(args)
    logger = SimulationLogger()
    print(f"Config: {describe_config(config)}")

    preflight = None
    if config.scheme == 'fd':
        preflight = stability_for_grid(config.tau, config.grid)
        verdict = 'stable' if preflight.stable else 'UNSTABLE'
        print(f"Stability preflight: tau={config.tau:g}, h^2/2={preflight.threshold:.7g} -> {verdict}")
        if not preflight.stable:
            logger.warn_unstable_step(config.tau, config.grid.spacing, preflight.threshold)

    writer = RunWriter(config, logger=logger)
    result = run_simulation(config, sink=writer, logger=logger)
    outputs = writer.finalize(result, preflight)

    report = conservation_report(result.records)
    print(f"Steps: {result.steps_taken}/{config.step_count}, t={result.final.time:.6g}")
    print(f"Norm: initial {report.initial_norm:.9g}, final {report.final_norm:.9g}, "
          f"max drift {report.max_drift:.3e} (step {report.max_drift_step})")
    print(f"Saved {outputs.evolution.parent} ({len(writer.rows)} evolution rows)")
    _print_warnings(logger)

    if result.diverged:
        print(f"Diverged at step {result.divergence.step_index}: {result.divergence.reason}")
        return EXIT_DIVERGED
    return 0


def cmd_conserve(args: argparse.Namespace) -> int:
    """Single-soliton norm check"""
    scheme = canonical_scheme(args.scheme)
    if scheme is None:
        raise ConfigurationError('scheme', f"expected one of {SCHEMES}, got {args.scheme!r}")
    logger = SimulationLogger()
    check = check_conservation(scheme, steps=args.steps, overrides=_overrides(args), logger=logger)
    print_conservation(check)
    return 0 if check.passed else EXIT_DIVERGED


def cmd_stability(args: argparse.Namespace) -> int:
    """Von Neumann verdict for (tau, L, N)"""
    grid = make_grid(args.L, args.N)
    if args.tau <= 0:
        raise ConfigurationError('tau', f"must be positive, got {args.tau}")
    samples = args.sweep if args.sweep else None
    if samples is not None and samples < 2:
        raise ConfigurationError('sweep', f"needs at least 2 samples, got {samples}")
    report = is_stable(args.tau, grid.spacing, samples=samples)
    print_stability(report, sweep=bool(args.sweep))
    return 0 if report.stable else EXIT_UNSTABLE


def cmd_compare(args: argparse.Namespace) -> int:
    """Run both schemes from one initial state"""
    config = _load_config(args)
    logger = SimulationLogger()
    comparison = compare_schemes(config, logger=logger)
    print_comparison(comparison)
    _print_warnings(logger)
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    """Wall-clock timings"""
    config: Optional[RunConfig] = None
    if args.config or _overrides(args):
        config = _load_config(args)
    logger = SimulationLogger()
    entries = benchmark(config, repeat=args.repeat, logger=logger)
    print_benchmark(entries)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='satnls',
        description='Saturable nonlinear Schrödinger equation: split-step Fourier and leapfrog finite-difference runs',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  satnls simulate --config fig2 --out runs/fig2
  satnls simulate --config fig1 --tau 0.004 --out runs/unstable
  satnls conserve splitstep
  satnls conserve fd --tau 0.01 --solitons 8:20
  satnls stability 0.001 30 512 --sweep 360
  satnls compare --config fig1
  satnls bench --repeat 5

Exit codes: 0 success, 1 configuration error, 2 divergence / conservation failure,
3 unstable stability verdict
        """
    )
    parser.add_argument('--version', action='version', version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest='command')

    simulate = subparsers.add_parser('simulate', help='Run a configuration and write its outputs')
    simulate.add_argument('--config', type=str, help='Config file or preset name (fig1..fig10, ...)')
    simulate.add_argument('--out', type=str, help='Output directory (default: ./output)')
    _add_override_flags(simulate)
    simulate.set_defaults(handler=cmd_simulate)

    conserve = subparsers.add_parser('conserve', help='Single-soliton norm conservation check')
    conserve.add_argument('scheme', type=str, help='splitstep | fd')
    conserve.add_argument('--steps', type=int, default=8, help='Steps after the initial state (default: 8)')
    _add_override_flags(conserve, with_scheme=False)
    conserve.set_defaults(handler=cmd_conserve)

    stability = subparsers.add_parser('stability', help='Von Neumann stability of the leapfrog scheme')
    stability.add_argument('tau', type=float, help='Time step')
    stability.add_argument('L', type=float, help='Domain length')
    stability.add_argument('N', type=int, help='Mesh count')
    stability.add_argument('--sweep', type=int, default=None, metavar='SAMPLES',
                           help='Print max |alpha| for SAMPLES angles beta')
    stability.set_defaults(handler=cmd_stability)

    compare = subparsers.add_parser('compare', help='Split-step vs finite difference from one initial state')
    compare.add_argument('--config', type=str, help='Config file or preset name')
    _add_override_flags(compare)
    compare.set_defaults(handler=cmd_compare)

    bench = subparsers.add_parser('bench', help='Time both schemes')
    bench.add_argument('--config', type=str, help='Config file or preset name (default: fig1 + fig2)')
    bench.add_argument('--repeat', type=int, default=3, help='Repeats per configuration (default: 3)')
    _add_override_flags(bench)
    bench.set_defaults(handler=cmd_bench)

    return parser


def main():
    """Main function"""
    parser = build_parser()
    args = parser.parse_args()

    if not getattr(args, 'handler', None):
        parser.print_help()
        sys.exit(EXIT_CONFIG_ERROR)

    try:
        code = args.handler(args)
    except (SatNLSError, ValueError, OSError) as e:
        print(f"Error: {e}")
        sys.exit(EXIT_CONFIG_ERROR)

    # success path does not call sys.exit()
    if code:
        sys.exit(code)


if __name__ == "__main__":
    main()
