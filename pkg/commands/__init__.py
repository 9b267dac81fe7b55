"""
* Nom de l'application : TraceSampler SGI-TS
 * Description : Shared plumbing of the sub-commands
"""

import os
import sys

from models import RunConfig
from services.dataset_service import DatasetService
from services.export_service import ExportService
from utils.errors import ConfigError


def add_source_arguments(parser, required=True):
    """--input or --histogram, never both."""
    group = parser.add_mutually_exclusive_group(required=required)
    group.add_argument('--input', help="Labeled packet records (.csv, .ndjson)")
    group.add_argument('--histogram', help="Histogram spec ('label,count' lines) to synthesize from")
    parser.add_argument('--label-column', default=None, help="Label column of the input (default: Protocol)")
    parser.add_argument('--input-format', choices=DatasetService.FORMATS, default=None)
    parser.add_argument('--arrangement', choices=DatasetService.ARRANGEMENTS, default='shuffled',
                        help="Record order when synthesizing from --histogram")


def add_output_arguments(parser, formats=True):
    parser.add_argument('--out', default=None, help="Output path, '-' or absent for standard output")
    if formats:
        parser.add_argument('--format', dest='output_format', choices=ExportService.TEXT_FORMATS + ExportService.BINARY_FORMATS,
                            default=None)
        parser.add_argument('--decimals', type=int, default=None)
        parser.add_argument('--excel-bom', action='store_true', help="Prefix CSV output with a UTF-8 BOM")


def build_run_config(args, cfg):
    decimals = getattr(args, 'decimals', None)
    if decimals is None:
        decimals = cfg.DISPLAY_DECIMALS
    if decimals < 0:
        raise ConfigError(f"--decimals doit être >= 0, reçu {decimals}")
    seed = getattr(args, 'seed', None)
    run = RunConfig(
        input_path=getattr(args, 'input', None),
        histogram_path=getattr(args, 'histogram', None),
        out=getattr(args, 'out', None),
        seed=cfg.SEED if seed is None else seed,
        output_format=getattr(args, 'output_format', None) or cfg.OUTPUT_FORMAT,
        decimals=decimals,
        language=cfg.LANGUAGE,
        label_column=getattr(args, 'label_column', None) or cfg.LABEL_COLUMN,
        excel_bom=getattr(args, 'excel_bom', False),
        workers=getattr(args, 'workers', None) or cfg.WORKERS,
        trials=cfg.MONTE_CARLO_TRIALS if getattr(args, 'trials', None) is None else args.trials
    )
    _check_output(run)
    return run


def _same_file(a, b):
    try:
        return os.path.exists(a) and os.path.exists(b) and os.path.samefile(a, b)
    except OSError:
        return False


def _check_output(run):
    if run.out in (None, '-') and run.output_format in ExportService.BINARY_FORMATS:
        raise ConfigError(f"Le format '{run.output_format}' exige --out")
    guard_output(run.out, run)


def guard_output(path, run):
    """No command writes over its own input."""
    if path in (None, '-'):
        return
    for source in (run.input_path, run.histogram_path):
        if source and _same_file(source, path):
            raise ConfigError(f"La sortie ne peut pas écraser l'entrée '{source}'")


def load_source(args, run):
    """The dataset named by --input, or synthesized from --histogram."""
    if run.input_path:
        return DatasetService.read_dataset(run.input_path, fmt=getattr(args, 'input_format', None),
                                           label_column=run.label_column)
    histogram = DatasetService.read_histogram_spec(run.histogram_path)
    return DatasetService.synthesize(histogram, seed=run.seed, arrangement=args.arrangement)


def write_output(content, out):
    """Text or bytes to a file, or to stdout when out is None or '-'."""
    if out in (None, '-'):
        if isinstance(content, bytes):
            sys.stdout.buffer.write(content)
        else:
            sys.stdout.write(content)
        return
    if isinstance(content, bytes):
        with open(out, 'wb') as f:
            f.write(content)
    else:
        with open(out, 'w', encoding='utf-8', newline='') as f:
            f.write(content)


def render(obj, run):
    if run.output_format in ExportService.BINARY_FORMATS:
        return ExportService.render_binary(obj, run.output_format, decimals=run.decimals, lang=run.language)
    return ExportService.render_table(obj, run.output_format, decimals=run.decimals, lang=run.language,
                                      seed=run.seed, bom=run.excel_bom)


def parse_int_list(text):
    try:
        return [int(part) for part in text.split(',') if part.strip()]
    except ValueError:
        raise ConfigError(f"Liste d'entiers attendue, reçu '{text}'")
