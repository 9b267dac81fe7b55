"""
* Nom de l'application : TraceSampler SGI-TS
 * Description : Exception hierarchy shared by services and commands
"""


class SamplingError(ValueError):
    """Base error. `code` is stable and used in logs and CLI output."""
    code = 'SAMPLING_ERROR'

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"{message} (ligne {line})"
        super().__init__(message)


# Dataset

class DatasetError(SamplingError):
    code = 'DATASET_ERROR'


class MissingLabelColumn(DatasetError):
    code = 'MISSING_LABEL_COLUMN'


class EmptyLabel(DatasetError):
    code = 'EMPTY_LABEL'


class MalformedRow(DatasetError):
    code = 'MALFORMED_ROW'


class EmptyDataset(DatasetError):
    code = 'EMPTY_DATASET'


class ZeroTotal(DatasetError):
    code = 'ZERO_TOTAL'


class HistogramSpecError(DatasetError):
    code = 'HISTOGRAM_SPEC_ERROR'


# Samplers

class SamplerError(SamplingError):
    code = 'SAMPLER_ERROR'


class InvalidParameter(SamplerError):
    code = 'INVALID_PARAMETER'


class TargetExceedsPopulation(SamplerError):
    code = 'TARGET_EXCEEDS_POPULATION'


# Metrics

class MetricsError(SamplingError):
    code = 'METRICS_ERROR'


class ZeroPopulation(MetricsError):
    code = 'ZERO_POPULATION'


class CountExceedsPopulation(MetricsError):
    code = 'COUNT_EXCEEDS_POPULATION'


class UnknownLabelInSample(MetricsError):
    code = 'UNKNOWN_LABEL_IN_SAMPLE'


# Report

class ReportError(SamplingError):
    code = 'REPORT_ERROR'


class EmptySeries(ReportError):
    code = 'EMPTY_SERIES'


class NonMonotonicAxis(ReportError):
    code = 'NON_MONOTONIC_AXIS'


class EmptyComparison(ReportError):
    code = 'EMPTY_COMPARISON'


# Usage / configuration (exit code 2)

class ConfigError(SamplingError):
    code = 'CONFIG_ERROR'


class RunMatrixError(SamplingError):
    code = 'RUN_MATRIX_ERROR'


USAGE_ERRORS = (ConfigError, RunMatrixError, InvalidParameter, HistogramSpecError, ZeroTotal)
