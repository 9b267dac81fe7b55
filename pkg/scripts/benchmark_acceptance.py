"""
* Nom de l'application : TraceSampler SGI-TS
 * Description : Times the reference scenarios on the PU-TDS histogram
"""

import sys
import os
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

import argparse
import time

from config import Config
from services.dataset_service import DatasetService
from services.metrics_service import MetricsService
from services.sampler_service import SamplerService
from services.simulation_service import SimulationService


def timed(label, func, limit):
    start = time.time()
    detail = func()
    duration = time.time() - start
    status = "OK" if duration < limit else "SLOW"
    print(f"[{status}] {label}: {duration:.3f}s (limit {limit}s) {detail}")
    return duration < limit


def run_benchmark(trials, workers):
    print("Synthesizing PU-TDS...")
    histogram = DatasetService.read_histogram_spec(Config.HISTOGRAM_PATH)
    dataset = DatasetService.synthesize(histogram, seed=0)

    def identity():
        report = MetricsService.histogram_report(DatasetService.histogram(dataset))
        return f"L={len(report.per_class)}, ratio={report.imbalance_ratio:g}"

    def systematic():
        return [SamplerService.systematic_sample(dataset, i).size for i in Config.STUDY_INTERVALS]

    def stratified():
        return [SamplerService.stratified_sample(dataset, i).size for i in Config.STUDY_INTERVALS]

    def under_over():
        return [SamplerService.under_over_sample(dataset, k, seed=0).size for k in Config.STUDY_K_VALUES]

    def random_loss():
        counts = SimulationService.missing_distribution(dataset, 500, seed=0, trials=trials, workers=workers)
        mean, stderr, low, high = SimulationService.summarize(counts)
        expected = MetricsService.miss_probability_analytic(histogram, 500).expected_missing
        return f"expected={expected:.4f}, observed={mean:.4f}±{stderr:.4f}, 95%=[{low}, {high}]"

    results = [
        timed("Identity report", identity, 1),
        timed("Systematic sizes", systematic, 1),
        timed("Stratified sizes", stratified, 1),
        timed("Under-over sizes", under_over, 1),
        timed(f"Random loss n=500 ({trials} trials)", random_loss, 30),
    ]
    print(f"{sum(results)}/{len(results)} scenarios within their limit")
    return all(results)


if __name__ == '__main__':
    parser = argparse.ArgumentParser(description="Benchmark the reference scenarios")
    parser.add_argument('--trials', type=int, default=Config.DEFAULT_TRIALS)
    parser.add_argument('--workers', type=int, default=1)
    args = parser.parse_args()
    sys.exit(0 if run_benchmark(args.trials, args.workers) else 1)
