"""
prodint - Main Entry Point

Runs reproducible numerical experiments on product integrals and
logarithmic derivatives over finite-dimensional Lie groups, and writes
machine-readable reports (checks.csv, summary.json, convergence.csv).

Usage:
    python main.py                                  # List experiment kinds
    python main.py list-experiments                 # Same
    python main.py run configs/identities.json      # Run one experiment
    python main.py run cfg.json --out out --seed 3  # Override output dir and seed

Exit codes:
    0  every check passed
    1  a check failed or a numerical error occurred
    2  the config is invalid (schema, JSON syntax, unknown kind)
"""

import argparse
import sys
import traceback
from datetime import datetime

from src.config import configure_logging, get_settings, load_experiment_config
from src.exceptions import ConfigError, ProdIntError
from src.loaders.report_writer import ReportWriter
from src.pipeline import EXPERIMENTS, ExperimentPipeline


def list_experiments() -> int:
    """Print every experiment kind with its module and anchor."""
    print("\n📚 Available experiments:\n")
    for kind, experiment in EXPERIMENTS.items():
        print(f"  • {kind:17} {experiment.description}")
        print(f"    {'':17} module: {experiment.module} | anchor: {experiment.anchor}")
    print("\nRun one with: prodint run <config.json> [--out DIR] [--seed N]")
    return 0


def run_experiment(path: str, out: str = None, seed: int = None) -> int:
    """Load a config, run it and map the outcome to an exit code."""
    try:
        config = load_experiment_config(path)
    except ConfigError as e:
        print(f"\n✗ Invalid config: {e}")
        for line in e.diagnostics:
            print(f"   → {line}")
        return 2

    if seed is not None:
        config = config.with_seed(seed)
    if out is not None:
        config = config.with_output(out)

    print("\n" + "="*70)
    print("∮  prodint experiment runner")
    print("="*70)
    print(f"📅 Run Date: {datetime.now().strftime('%Y-%m-%d %H:%M:%S')}")
    print(f"📄 Config: {path}")
    print(f"📁 Output: {config.output.directory}")
    print("="*70)

    pipeline = ExperimentPipeline(ReportWriter(config.output.directory))
    try:
        stats = pipeline.run(config)
    except KeyboardInterrupt:
        print("\n\n⚠️  Run interrupted by user")
        return 1
    except ProdIntError as e:
        print(f"\n✗ Numerical failure in {config.kind}: {e}")
        return 1
    except OSError as e:
        print(f"\n❌ Could not write reports: {e}")
        traceback.print_exc()
        return 1

    if stats['checks_failed']:
        print(f"✗ {stats['checks_failed']} of {stats['checks_run']} checks failed, "
              f"first: {stats['failed_checks'][0]}")
        return 1
    print(f"✓ {stats['checks_run']} checks passed")
    return 0


def main():
    """Main application entry point."""
    parser = argparse.ArgumentParser(
        prog="prodint",
        description="Numerical experiments on product integrals over Lie groups"
    )
    commands = parser.add_subparsers(dest='command')

    run_parser = commands.add_parser('run', help='Run the experiment described by a JSON config')
    run_parser.add_argument('config', help='Path to the experiment config (JSON)')
    run_parser.add_argument('--out', help='Output directory (overrides the config)')
    run_parser.add_argument('--seed', type=int, help='Random seed (overrides the config)')

    commands.add_parser('list-experiments', help='List experiment kinds and exit')

    args = parser.parse_args()
    configure_logging(get_settings().log_level)

    if args.command == 'run':
        if args.seed is not None and args.seed < 0:
            print("\n✗ Invalid seed: must be >= 0")
            return 2
        return run_experiment(args.config, args.out, args.seed)
    return list_experiments()


if __name__ == "__main__":
    sys.exit(main())
