"""
* Nom de l'application : TraceSampler SGI-TS
 * Description : Logic and implementation for metrics_service.py
"""

import logging

import algorithms
from models import ClassShare, ImbalanceReport, MissRow, MissProbabilityTable
from utils.errors import UnknownLabelInSample, CountExceedsPopulation, InvalidParameter

logger = logging.getLogger(__name__)


class MetricsService:
    # The sampling equations, exposed with the service's error contract
    selection_probability = staticmethod(algorithms.selection_probability)
    sample_size_percent = staticmethod(algorithms.sample_size_percent)
    sampling_interval = staticmethod(algorithms.sampling_interval)
    stratified_totals = staticmethod(algorithms.stratified_totals)
    imbalance_ratio = staticmethod(algorithms.imbalance_ratio)

    @staticmethod
    def _report(histogram, sampled_counts, total_sampled, decimals, spec=None, synthetic_count=0):
        population = histogram.total
        per_class = []
        missing = []
        for label, source_count in histogram.entries:
            count = sampled_counts.get(label, 0)
            percent = 100.0 * count / total_sampled if total_sampled else 0.0
            per_class.append(ClassShare(
                label=label,
                source_count=source_count,
                sampled_count=count,
                sampled_percent=percent,
                # P(s_i) = n_i / P, n_i counted in the sample
                selection_probability=count / population
            ))
            if count == 0:
                missing.append(label)

        return ImbalanceReport(
            source=histogram,
            per_class=tuple(per_class),
            total_sampled=total_sampled,
            size_percent=algorithms.sample_size_percent(total_sampled, population),
            missing_classes=tuple(missing),
            imbalance_ratio=algorithms.imbalance_ratio(sampled_counts.values()),
            spec=spec,
            synthetic_count=synthetic_count,
            decimals=decimals
        )

    @staticmethod
    def class_report(source_histogram, sample, display_decimals=3):
        """Per-class counts, shares and probabilities of a sample against its source."""
        counts = sample.label_counts()
        known = set(source_histogram.labels)
        unknown = [label for label in counts if label not in known]
        if unknown:
            raise UnknownLabelInSample(f"Labels absents de l'histogramme source: {unknown}")
        report = MetricsService._report(source_histogram, counts, sample.size, display_decimals,
                                        spec=sample.spec, synthetic_count=sample.synthetic_count)
        logger.debug("Report for %s: n(s)=%d, missing=%d", sample.spec.describe(),
                     report.total_sampled, report.missing_count)
        return report

    @staticmethod
    def histogram_report(histogram, display_decimals=3):
        """The identity report: the whole dataset seen as its own sample."""
        return MetricsService._report(histogram, histogram.as_dict(), histogram.total, display_decimals)

    @staticmethod
    def miss_probability_analytic(source_histogram, n, with_replacement=False):
        """
        Probability that each class is absent from a uniform random sample of
        size n: C(P-c, n) / C(P, n) without replacement, (1 - c/P)^n with.
        """
        population = source_histogram.total
        if n < 0:
            raise InvalidParameter(f"n doit être >= 0, reçu {n}")
        if not with_replacement and n > population:
            raise CountExceedsPopulation(f"n={n} dépasse la population P={population}")
        counts = [count for _, count in source_histogram.entries]
        probabilities = algorithms.miss_probability(counts, population, n, with_replacement)
        rows = tuple(
            MissRow(label=label, source_count=count, miss_probability=float(p))
            for (label, count), p in zip(source_histogram.entries, probabilities.tolist())
        )
        return MissProbabilityTable(rows=rows, n=n, population=population, with_replacement=with_replacement)

    @staticmethod
    def expected_missing_series(source_histogram, n_values, with_replacement=False):
        return [
            (n, MetricsService.miss_probability_analytic(source_histogram, n, with_replacement).expected_missing)
            for n in n_values
        ]
