"""
* Nom de l'application : TraceSampler SGI-TS
 * Description : Logic and implementation for __init__.py
"""

from .dataset_service import DatasetService
from .sampler_service import SamplerService
from .metrics_service import MetricsService
from .simulation_service import SimulationService
from .export_service import ExportService

__all__ = ['DatasetService', 'SamplerService', 'MetricsService', 'SimulationService', 'ExportService']
