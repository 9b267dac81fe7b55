"""
* Nom de l'application : TraceSampler SGI-TS
 * Description : Logic and implementation for sampler_service.py
"""

import logging

from algorithms import sampling_interval
from models import SampleSpec, SampledRecord, SampleResult
from services.dataset_service import DatasetService
from utils.errors import EmptyDataset, InvalidParameter, RunMatrixError
from utils.rng import make_rng, class_rng

logger = logging.getLogger(__name__)


class SamplerService:
    """
    The sampling families. Every method is a pure function of
    (dataset, parameters, seed) and returns a SampleResult whose entries
    point back to source positions.
    """
    TRUE_WORDS = ('1', 'true', 'yes', 'oui')
    FALSE_WORDS = ('0', 'false', 'no', 'non')

    @staticmethod
    def _check(dataset):
        if dataset.population == 0:
            raise EmptyDataset("Impossible d'échantillonner un jeu vide")

    @staticmethod
    def _result(dataset, spec, positions, synthetic=None, class_count=None):
        labels = dataset.labels
        if synthetic is None:
            entries = tuple(SampledRecord(source_position=p, label=labels[p - 1]) for p in positions)
        else:
            entries = tuple(
                SampledRecord(source_position=p, label=labels[p - 1], synthetic=flag)
                for p, flag in zip(positions, synthetic)
            )
        if class_count is None:
            class_count = len(set(labels))
        logger.debug("%s on P=%d, L=%d -> %d entries (seed=%s)",
                     spec.describe(), dataset.population, class_count, len(entries), spec.seed)
        return SampleResult(spec=spec, entries=entries, source_population=dataset.population,
                            source_class_count=class_count)

    @staticmethod
    def random_sample(dataset, n, with_replacement=False, seed=0):
        """
        Without replacement: min(n, P) distinct positions, ascending.
        With replacement: n independent uniform draws, in draw order.
        """
        spec = SampleSpec(family='random', n=n, with_replacement=with_replacement, seed=seed)
        SamplerService._check(dataset)
        population = dataset.population
        rng = make_rng(seed)

        if with_replacement:
            drawn = rng.integers(0, population, size=n)
            positions = (drawn + 1).tolist()
        else:
            size = min(n, population)
            drawn = rng.choice(population, size=size, replace=False)
            drawn.sort()
            positions = (drawn + 1).tolist()
        return SamplerService._result(dataset, spec, positions)

    @staticmethod
    def systematic_sample(dataset, interval, start=1):
        """Positions start, start+I, start+2I, ... <= P. Seed is ignored."""
        spec = SampleSpec(family='systematic', interval=interval, start=start)
        SamplerService._check(dataset)
        positions = range(start, dataset.population + 1, interval)
        return SamplerService._result(dataset, spec, positions)

    @staticmethod
    def systematic_by_count(dataset, n):
        """I = floor(P / n), then the first n systematic positions."""
        spec = SampleSpec(family='bycount', n=n)
        SamplerService._check(dataset)
        interval = sampling_interval(dataset.population, n)
        positions = range(1, dataset.population + 1, interval)[:n]
        return SamplerService._result(dataset, spec, positions)

    @staticmethod
    def stratified_sample(dataset, interval):
        """
        Two-phase sampling: partition by label, then take positions
        1, 1+I, ... of every stratum. Each stratum gives ceil(n_i / I) >= 1.
        """
        spec = SampleSpec(family='stratified', interval=interval)
        SamplerService._check(dataset)
        strata = DatasetService.strata(dataset)
        positions = []
        for _, members in strata:
            positions.extend(members[::interval])
        return SamplerService._result(dataset, spec, positions, class_count=len(strata))

    @staticmethod
    def _quota_per_class(dataset, spec, k, seed, shrink, grow):
        strata = DatasetService.strata(dataset)
        positions = []
        synthetic = []
        for index, (_, members) in enumerate(strata):
            size = len(members)
            rng = class_rng(seed, index)
            if size > k and shrink:
                chosen = rng.choice(size, size=k, replace=False)
                chosen.sort()
                picked = [members[i] for i in chosen.tolist()]
                positions.extend(picked)
                synthetic.extend([False] * k)
                continue

            positions.extend(members)
            synthetic.extend([False] * size)
            if size < k and grow:
                duplicates = rng.integers(0, size, size=k - size)
                positions.extend(members[i] for i in duplicates.tolist())
                synthetic.extend([True] * (k - size))
        return SamplerService._result(dataset, spec, positions, synthetic, class_count=len(strata))

    @staticmethod
    def under_over_sample(dataset, k, seed=0):
        """
        Exactly k records per class: majority classes drawn without
        replacement, minority classes keep all originals and are topped up
        with duplicates drawn with replacement (flagged synthetic).
        """
        spec = SampleSpec(family='underover', k=k, seed=seed)
        SamplerService._check(dataset)
        return SamplerService._quota_per_class(dataset, spec, k, seed, shrink=True, grow=True)

    @staticmethod
    def under_sample(dataset, k, seed=0):
        spec = SampleSpec(family='under', k=k, seed=seed)
        SamplerService._check(dataset)
        return SamplerService._quota_per_class(dataset, spec, k, seed, shrink=True, grow=False)

    @staticmethod
    def over_sample(dataset, k, seed=0):
        spec = SampleSpec(family='over', k=k, seed=seed)
        SamplerService._check(dataset)
        return SamplerService._quota_per_class(dataset, spec, k, seed, shrink=False, grow=True)

    @staticmethod
    def run(dataset, spec):
        if spec.family == 'random':
            return SamplerService.random_sample(dataset, spec.n, spec.with_replacement, spec.seed)
        if spec.family == 'systematic':
            return SamplerService.systematic_sample(dataset, spec.interval, spec.start)
        if spec.family == 'bycount':
            return SamplerService.systematic_by_count(dataset, spec.n)
        if spec.family == 'stratified':
            return SamplerService.stratified_sample(dataset, spec.interval)
        if spec.family == 'underover':
            return SamplerService.under_over_sample(dataset, spec.k, spec.seed)
        if spec.family == 'under':
            return SamplerService.under_sample(dataset, spec.k, spec.seed)
        if spec.family == 'over':
            return SamplerService.over_sample(dataset, spec.k, spec.seed)
        raise InvalidParameter(f"Famille d'échantillonnage inconnue: '{spec.family}'")

    @staticmethod
    def spec_from_mapping(mapping, default_seed=0):
        """Builds a SampleSpec from one run-matrix entry."""
        known = {'family', 'n', 'interval', 'i', 'k', 'start', 'seed', 'with_replacement'}
        unknown = set(mapping) - known
        if unknown:
            raise RunMatrixError(f"Clés inconnues: {sorted(unknown)}")
        if 'family' not in mapping:
            raise RunMatrixError("Chaque exécution doit préciser 'family'")

        def _int(key):
            value = mapping.get(key)
            if value is None:
                return None
            if isinstance(value, bool):
                raise RunMatrixError(f"'{key}' doit être un entier")
            try:
                return int(value)
            except (TypeError, ValueError):
                raise RunMatrixError(f"'{key}' doit être un entier, reçu {value!r}")

        flag = mapping.get('with_replacement')
        if flag is None:
            flag = False
        if isinstance(flag, str):
            text = flag.strip().lower()
            if text not in SamplerService.TRUE_WORDS + SamplerService.FALSE_WORDS:
                raise RunMatrixError(f"'with_replacement' doit valoir true ou false, reçu {flag!r}")
            flag = text in SamplerService.TRUE_WORDS
        elif not isinstance(flag, bool) and flag not in (0, 1):
            raise RunMatrixError(f"'with_replacement' doit valoir true ou false, reçu {flag!r}")

        interval = _int('interval')
        if interval is None:
            interval = _int('i')
        return SampleSpec(
            family=str(mapping['family']).strip().lower(),
            n=_int('n'),
            with_replacement=bool(flag),
            interval=interval,
            start=1 if mapping.get('start') is None else _int('start'),
            k=_int('k'),
            seed=default_seed if mapping.get('seed') is None else _int('seed')
        )
