"""
* Nom de l'application : TraceSampler SGI-TS
 * Description : Seeded Monte Carlo runs behind the information-loss series
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from models import SeriesPoint
from services.dataset_service import DatasetService
from services.metrics_service import MetricsService
from utils.errors import InvalidParameter, CountExceedsPopulation
from utils.rng import trial_rng, shuffle_rng

logger = logging.getLogger(__name__)


class SimulationService:

    @staticmethod
    def label_codes(dataset):
        histogram = DatasetService.histogram(dataset)
        index = {label: i for i, label in enumerate(histogram.labels)}
        return np.fromiter((index[label] for label in dataset.labels), dtype=np.int64,
                           count=dataset.population), histogram.class_count

    @staticmethod
    def _chunks(trials, workers):
        size = max(1, math.ceil(trials / workers))
        return [range(start, min(start + size, trials)) for start in range(0, trials, size)]

    @staticmethod
    def _run(task, trials, workers):
        """Runs task(trial_index) -> int; the result order never depends on scheduling."""
        if workers <= 1:
            return np.array([task(t) for t in range(trials)], dtype=np.int64)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda chunk: [task(t) for t in chunk],
                                  SimulationService._chunks(trials, workers)))
        return np.array([value for part in parts for value in part], dtype=np.int64)

    @staticmethod
    def missing_distribution(dataset, n, with_replacement=False, seed=0, trials=10000, workers=1):
        """Missing-class count of each seeded random-sampling trial."""
        if trials < 1:
            raise InvalidParameter(f"Le nombre d'essais doit être >= 1, reçu {trials}")
        if n < 0:
            raise InvalidParameter(f"n doit être >= 0, reçu {n}")
        codes, class_count = SimulationService.label_codes(dataset)
        population = dataset.population
        if not with_replacement and n > population:
            raise CountExceedsPopulation(f"n={n} dépasse la population P={population}")

        def trial(t):
            rng = trial_rng(seed, n, t)
            if with_replacement:
                drawn = rng.integers(0, population, size=n)
            else:
                drawn = rng.choice(population, size=n, replace=False)
            present = np.count_nonzero(np.bincount(codes[drawn], minlength=class_count))
            return class_count - int(present)

        return SimulationService._run(trial, trials, workers)

    @staticmethod
    def summarize(counts):
        """(mean, standard error, 2.5% quantile, 97.5% quantile) of integer counts."""
        trials = counts.size
        mean = int(counts.sum()) / trials
        stderr = float(np.std(counts, ddof=1)) / math.sqrt(trials) if trials > 1 else 0.0
        low = int(np.quantile(counts, 0.025, method='inverted_cdf'))
        high = int(np.quantile(counts, 0.975, method='inverted_cdf'))
        return mean, stderr, low, high

    @staticmethod
    def observed_missing_series(dataset, n_values, with_replacement=False, seed=0, trials=10000, workers=1):
        """Monte Carlo mean of missing classes per n, beside the analytic expectation."""
        histogram = DatasetService.histogram(dataset)
        points = []
        for n in n_values:
            counts = SimulationService.missing_distribution(dataset, n, with_replacement, seed, trials, workers)
            mean, _, low, high = SimulationService.summarize(counts)
            expected = MetricsService.miss_probability_analytic(histogram, n, with_replacement).expected_missing
            logger.info("n=%d: observed mean %.4f, expected %.4f over %d trials", n, mean, expected, trials)
            points.append(SeriesPoint(x=n, observed=mean, expected=expected, low=low, high=high))
        return points

    @staticmethod
    def systematic_missing_series(dataset, intervals, shuffles=0, seed=0, workers=1):
        """
        observed: missing classes of systematic sampling on the dataset as ordered.
        expected: mean over `shuffles` seeded re-orderings (blank when 0).
        """
        codes, class_count = SimulationService.label_codes(dataset)
        points = []
        for interval in intervals:
            if interval < 1:
                raise InvalidParameter(f"I doit être >= 1, reçu {interval}")
            present = np.count_nonzero(np.bincount(codes[::interval], minlength=class_count))
            observed = class_count - int(present)
            expected = low = high = None
            if shuffles > 0:
                def shuffle(t, interval=interval):
                    order = shuffle_rng(seed, interval, t).permutation(codes.size)
                    kept = codes[order][::interval]
                    return class_count - int(np.count_nonzero(np.bincount(kept, minlength=class_count)))

                counts = SimulationService._run(shuffle, shuffles, workers)
                expected, _, low, high = SimulationService.summarize(counts)
            points.append(SeriesPoint(x=interval, observed=observed, expected=expected, low=low, high=high))
        return points
