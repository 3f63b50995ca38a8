"""
Experiment pipeline: expand a config into check tasks, run them, write reports.
"""
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from datetime import datetime
from typing import List, Optional

import numpy as np

from ..config.experiment_config import ExperimentConfig
from ..config.settings import get_settings
from ..exceptions import ProdIntError
from ..loaders.interface import IReportWriter
from ..models.results import CheckResult
from .experiments import CheckOutcome, CheckTask, Experiment, get_experiment

logger = logging.getLogger(__name__)


class ExperimentPipeline:
    """
    Runs one experiment:
    - tasks execute on a thread pool capped by PRODINT_THREADS
    - a task that raises a ProdIntError becomes a single failed row
    - rows are sorted by check name before they reach the writer
    """

    def __init__(self, writer: IReportWriter, threads: Optional[int] = None):
        self.writer = writer
        self.threads = threads or get_settings().threads
        self.results: List[CheckResult] = []
        self.convergence: List[dict] = []
        self.stats = self._empty_stats()

    @staticmethod
    def _empty_stats() -> dict:
        return {
            'kind': None,
            'start_time': None,
            'end_time': None,
            'duration_seconds': 0,
            'tasks': 0,
            'tasks_errored': 0,
            'checks_run': 0,
            'checks_passed': 0,
            'checks_failed': 0,
            'failed_checks': [],
        }

    def _run_task(self, task: CheckTask) -> CheckOutcome:
        try:
            return task.run()
        except ProdIntError as exc:
            logger.error("%s failed: %s", task.name, exc)
            message = f"{type(exc).__name__}: {exc}"
            return CheckOutcome([CheckResult(task.name, task.group, float(np.inf), 0.0, False, task.anchor, message)],
                                error=message)

    def run(self, config: ExperimentConfig) -> dict:
        """
        Run every task of the configured experiment and save the reports.

        Returns:
            dict: Run statistics; ``failed_checks`` names every failing row
        """
        experiment = get_experiment(config.kind)
        self.stats = self._empty_stats()
        self.stats['kind'] = experiment.kind

        print("\n" + "=" * 70)
        print(f"🚀 Running experiment: {experiment.kind}")
        print(f"   {experiment.description}")
        print(f"   Groups: {', '.join(g.to_group().name for g in config.groups)} | seed {config.seed}")
        print("=" * 70)

        self.stats['start_time'] = datetime.now()
        start_time = time.time()

        tasks = experiment.build(config)
        self.stats['tasks'] = len(tasks)
        logger.info("%s: %d tasks on %d threads", experiment.kind, len(tasks), self.threads)
        with ThreadPoolExecutor(max_workers=self.threads) as pool:
            outcomes = list(pool.map(self._run_task, tasks))

        self.results = sorted((row for outcome in outcomes for row in outcome.results), key=lambda r: r.name)
        self.convergence = [row for outcome in outcomes for row in outcome.convergence]
        self.stats['tasks_errored'] = sum(1 for outcome in outcomes if outcome.error is not None)
        self.stats['checks_run'] = len(self.results)
        self.stats['checks_passed'] = sum(1 for r in self.results if r.passed)
        self.stats['checks_failed'] = self.stats['checks_run'] - self.stats['checks_passed']
        self.stats['failed_checks'] = [r.name for r in self.results if not r.passed]

        self._save(config, experiment)

        self.stats['end_time'] = datetime.now()
        self.stats['duration_seconds'] = round(time.time() - start_time, 2)
        self._print_summary()
        return self.stats

    def _save(self, config: ExperimentConfig, experiment: Experiment) -> None:
        self.writer.initialize()
        self.writer.save(self.results)
        if config.output.convergence:
            self.writer.save_convergence(self.convergence)
        self.writer.save_summary({
            'kind': experiment.kind,
            'module': experiment.module,
            'anchor': experiment.anchor,
            'config': config.model_dump(mode="json"),
            'settings': get_settings().model_dump(mode="json"),
            'totals': {key: self.stats[key] for key in ('tasks', 'checks_run', 'checks_passed', 'checks_failed')},
            'failed_checks': list(self.stats['failed_checks']),
        })

    def _print_summary(self):
        """Print pipeline execution summary."""
        print("\n" + "=" * 70)
        verdict = "✅ All checks passed" if not self.stats['checks_failed'] else "❌ Some checks failed"
        print(verdict)
        print("=" * 70)
        print(f"⏱  Duration: {self.stats['duration_seconds']} seconds")
        print(f"🧮 Checks run: {self.stats['checks_run']}")
        print(f"✓ Passed: {self.stats['checks_passed']}")
        print(f"✗ Failed: {self.stats['checks_failed']}")
        for name in self.stats['failed_checks']:
            print(f"   ✗ {name}")
        print("=" * 70 + "\n")

    def get_results(self) -> List[CheckResult]:
        return list(self.results)

    def get_stats(self) -> dict:
        return self.stats.copy()
