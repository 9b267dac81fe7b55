"""
* Nom de l'application : TraceSampler SGI-TS
 * Description : sample command, one sampling run with its report
"""

import sys

from commands import add_source_arguments, build_run_config, guard_output, load_source, render, write_output
from commands.errors import handle_errors
from models import FAMILIES, SampleSpec
from services.dataset_service import DatasetService
from services.export_service import ExportService
from services.metrics_service import MetricsService
from services.sampler_service import SamplerService
from utils.errors import ConfigError
from utils.i18n import get_text


def register(subparsers):
    parser = subparsers.add_parser('sample', help="Run one sampler and report its class shares")
    add_source_arguments(parser)
    parser.add_argument('--family', required=True, choices=FAMILIES)
    parser.add_argument('--n', type=int, default=None)
    parser.add_argument('--interval', type=int, default=None)
    parser.add_argument('--start', type=int, default=1, help="Systematic starting position (1..I)")
    parser.add_argument('--k', type=int, default=None)
    parser.add_argument('--with-replacement', action='store_true')
    parser.add_argument('--seed', type=int, default=None)
    parser.add_argument('--out', default=None, help="Sample CSV (source_position,label,synthetic)")
    parser.add_argument('--report', default=None, help="Report path (default: standard output)")
    parser.add_argument('--format', dest='output_format',
                        choices=ExportService.TEXT_FORMATS + ExportService.BINARY_FORMATS, default=None)
    parser.add_argument('--decimals', type=int, default=None)
    parser.add_argument('--excel-bom', action='store_true')
    parser.set_defaults(func=cmd_sample)


@handle_errors
def cmd_sample(args, cfg):
    sample_out = args.out
    args.out = args.report
    run = build_run_config(args, cfg)
    # parameters are validated before the input is read
    spec = SampleSpec(family=args.family, n=args.n, with_replacement=args.with_replacement,
                      interval=args.interval, start=args.start, k=args.k, seed=run.seed)
    guard_output(sample_out, run)
    if sample_out == '-' and run.out in (None, '-'):
        raise ConfigError("--out - exige --report vers un fichier: l'échantillon et le rapport ne peuvent pas partager la sortie standard")

    dataset = load_source(args, run)
    sample = SamplerService.run(dataset, spec)
    report = MetricsService.class_report(DatasetService.histogram(dataset), sample, run.decimals)

    if sample_out:
        write_output(ExportService.render_sample_csv(sample, bom=run.excel_bom), sample_out)
        if sample_out != '-':
            print(get_text('cli.sample_done', run.language, size=sample.size, out=sample_out), file=sys.stderr)
    write_output(render(report, run), run.out)
