"""
* Nom de l'application : TraceSampler SGI-TS
 * Description : analyze command, class histogram and P(s) of a dataset
"""

from commands import add_source_arguments, add_output_arguments, build_run_config, load_source, render, write_output
from commands.errors import handle_errors
from services.dataset_service import DatasetService
from services.metrics_service import MetricsService


def register(subparsers):
    parser = subparsers.add_parser('analyze', help="Class histogram, shares and P(s) of a dataset")
    add_source_arguments(parser)
    parser.add_argument('--seed', type=int, default=None)
    add_output_arguments(parser)
    parser.set_defaults(func=cmd_analyze)


@handle_errors
def cmd_analyze(args, cfg):
    run = build_run_config(args, cfg)
    dataset = load_source(args, run)
    report = MetricsService.histogram_report(DatasetService.histogram(dataset), run.decimals)
    write_output(render(report, run), run.out)
