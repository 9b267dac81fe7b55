"""
* Nom de l'application : TraceSampler SGI-TS
 * Description : Domain types. Every instance is immutable after construction.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from utils.errors import InvalidParameter

FAMILIES = ('random', 'systematic', 'bycount', 'stratified', 'underover', 'under', 'over')
SEEDED_FAMILIES = ('random', 'underover', 'under', 'over')


@dataclass(frozen=True)
class PacketRecord:
    position: int
    label: str
    attributes: tuple = ()

    def to_dict(self):
        return {
            'position': self.position,
            'label': self.label,
            'attributes': dict(self.attributes)
        }


@dataclass(frozen=True)
class TraceDataset:
    """Ordered records, positions 1..P. This is the population P."""
    records: tuple
    label_column: str = 'Protocol'
    # full column order of the source file, label column included
    columns: tuple = ()

    @property
    def population(self):
        return len(self.records)

    @cached_property
    def labels(self):
        return tuple(r.label for r in self.records)

    def __len__(self):
        return len(self.records)

    def __iter__(self):
        return iter(self.records)


@dataclass(frozen=True)
class ClassHistogram:
    """(label, n_i) pairs in first-appearance order, every n_i >= 1."""
    entries: tuple

    @property
    def class_count(self):
        return len(self.entries)

    @property
    def total(self):
        return sum(count for _, count in self.entries)

    @property
    def labels(self):
        return tuple(label for label, _ in self.entries)

    def as_dict(self):
        return dict(self.entries)

    def to_dict(self):
        return {
            'population': self.total,
            'classes': [{'label': label, 'count': count} for label, count in self.entries]
        }


@dataclass(frozen=True)
class SampleSpec:
    family: str
    n: Optional[int] = None
    with_replacement: bool = False
    interval: Optional[int] = None
    start: int = 1
    k: Optional[int] = None
    seed: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidParameter(f"Famille d'échantillonnage inconnue: '{self.family}'")
        if self.family in ('random', 'bycount'):
            if self.n is None or self.n < 1:
                raise InvalidParameter(f"n doit être >= 1 pour '{self.family}', reçu {self.n}")
        if self.family in ('systematic', 'stratified'):
            if self.interval is None or self.interval < 1:
                raise InvalidParameter(f"I doit être >= 1 pour '{self.family}', reçu {self.interval}")
        if self.family == 'systematic' and not 1 <= self.start <= self.interval:
            raise InvalidParameter(f"Le point de départ doit être dans [1, {self.interval}], reçu {self.start}")
        if self.family in ('underover', 'under', 'over'):
            if self.k is None or self.k < 1:
                raise InvalidParameter(f"k doit être >= 1 pour '{self.family}', reçu {self.k}")

    @property
    def parameter_name(self):
        if self.family in ('random', 'bycount'):
            return 'n'
        if self.family in ('systematic', 'stratified'):
            return 'I'
        return 'k'

    @property
    def parameter(self):
        return {'n': self.n, 'I': self.interval, 'k': self.k}[self.parameter_name]

    @property
    def is_seeded(self):
        return self.family in SEEDED_FAMILIES

    def describe(self):
        text = f"{self.family} {self.parameter_name}={self.parameter}"
        if self.family == 'random' and self.with_replacement:
            text += ' (with replacement)'
        if self.family == 'systematic' and self.start != 1:
            text += f" start={self.start}"
        return text

    def to_dict(self):
        data = {'family': self.family, self.parameter_name: self.parameter}
        if self.family == 'random':
            data['with_replacement'] = self.with_replacement
        if self.family == 'systematic':
            data['start'] = self.start
        data['seed'] = self.seed if self.is_seeded else None
        return data


@dataclass(frozen=True)
class SampledRecord:
    source_position: int
    label: str
    synthetic: bool = False


@dataclass(frozen=True)
class SampleResult:
    spec: SampleSpec
    entries: tuple
    source_population: int
    source_class_count: int

    @property
    def size(self):
        return len(self.entries)

    def label_counts(self):
        counts = {}
        for entry in self.entries:
            counts[entry.label] = counts.get(entry.label, 0) + 1
        return counts

    @property
    def synthetic_count(self):
        return sum(1 for e in self.entries if e.synthetic)


@dataclass(frozen=True)
class ClassShare:
    label: str
    source_count: int
    sampled_count: int
    sampled_percent: float
    selection_probability: float

    def to_dict(self):
        return {
            'label': self.label,
            'source_count': self.source_count,
            'sampled_count': self.sampled_count,
            'sampled_percent': self.sampled_percent,
            'selection_probability': self.selection_probability
        }


@dataclass(frozen=True)
class ImbalanceReport:
    source: ClassHistogram
    per_class: tuple
    total_sampled: int
    size_percent: float
    missing_classes: tuple
    imbalance_ratio: Optional[float]
    spec: Optional[SampleSpec] = None
    synthetic_count: int = 0
    decimals: int = 3

    @property
    def missing_count(self):
        return len(self.missing_classes)

    @property
    def seed(self):
        if self.spec is not None and self.spec.is_seeded:
            return self.spec.seed
        return None


@dataclass(frozen=True)
class MissRow:
    label: str
    source_count: int
    miss_probability: float


@dataclass(frozen=True)
class MissProbabilityTable:
    rows: tuple
    n: int
    population: int
    with_replacement: bool = False

    @property
    def expected_missing(self):
        return float(sum(row.miss_probability for row in self.rows))


@dataclass(frozen=True)
class ComparisonColumn:
    spec: SampleSpec
    size: int
    shares: tuple
    missing_count: int

    @property
    def heading(self):
        if self.spec.parameter_name == 'n':
            return f"{self.spec.family} n={self.size}"
        return f"{self.spec.family} {self.spec.parameter_name}={self.spec.parameter}, n={self.size}"


@dataclass(frozen=True)
class ComparisonMatrix:
    """Rows are source classes in histogram order, one column per sampler run."""
    row_labels: tuple
    columns: tuple
    source: Optional[ClassHistogram] = None


@dataclass(frozen=True)
class SeriesPoint:
    x: int
    observed: Optional[float] = None
    expected: Optional[float] = None
    low: Optional[int] = None
    high: Optional[int] = None


@dataclass(frozen=True)
class DatasetSplit:
    train: TraceDataset
    test: TraceDataset
    test_fraction: float
    seed: int


@dataclass(frozen=True)
class RunConfig:
    """Resolved options of one CLI invocation."""
    input_path: Optional[str] = None
    histogram_path: Optional[str] = None
    out: Optional[str] = None
    seed: int = 0
    output_format: str = 'markdown'
    decimals: int = 3
    language: str = 'en'
    label_column: str = 'Protocol'
    excel_bom: bool = False
    workers: int = 1
    trials: int = 10000
