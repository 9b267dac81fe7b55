"""
* Nom de l'application : TraceSampler SGI-TS
 * Description : oracle and systematic-loss commands, missing-class series
"""

from config import Config
from commands import add_source_arguments, build_run_config, load_source, parse_int_list, write_output
from commands.errors import handle_errors
from models import SeriesPoint
from services.dataset_service import DatasetService
from services.export_service import ExportService
from services.metrics_service import MetricsService
from services.simulation_service import SimulationService


def _default_list(values):
    return ','.join(str(v) for v in values)


def register(subparsers):
    parser = subparsers.add_parser('oracle', help="Expected vs observed missing classes under random sampling")
    add_source_arguments(parser)
    parser.add_argument('--n', default=_default_list(Config.STUDY_N_VALUES), help="Comma separated sample sizes")
    parser.add_argument('--with-replacement', action='store_true')
    parser.add_argument('--trials', type=int, default=None, help="Monte Carlo trials per n, 0 for analytic only")
    parser.add_argument('--seed', type=int, default=None)
    parser.add_argument('--workers', type=int, default=None)
    parser.add_argument('--bands', action='store_true', help="Add 2.5%% / 97.5%% quantile columns")
    parser.add_argument('--out', default=None)
    parser.set_defaults(func=cmd_oracle)

    parser = subparsers.add_parser('systematic-loss', help="Missing classes of systematic sampling per interval")
    add_source_arguments(parser)
    parser.add_argument('--interval', default=_default_list(Config.STUDY_INTERVALS), help="Comma separated intervals")
    parser.add_argument('--shuffles', type=int, default=0, help="Seeded re-orderings for the expected column")
    parser.add_argument('--seed', type=int, default=None)
    parser.add_argument('--workers', type=int, default=None)
    parser.add_argument('--bands', action='store_true')
    parser.add_argument('--out', default=None)
    parser.set_defaults(func=cmd_systematic_loss)


@handle_errors
def cmd_oracle(args, cfg):
    run = build_run_config(args, cfg)
    n_values = parse_int_list(args.n)
    dataset = load_source(args, run)

    if run.trials > 0:
        series = SimulationService.observed_missing_series(
            dataset, n_values, args.with_replacement, seed=run.seed, trials=run.trials, workers=run.workers)
    else:
        histogram = DatasetService.histogram(dataset)
        series = [SeriesPoint(x=n, expected=expected) for n, expected in
                  MetricsService.expected_missing_series(histogram, n_values, args.with_replacement)]
    write_output(ExportService.missing_series_export(series, bands=args.bands), run.out)


@handle_errors
def cmd_systematic_loss(args, cfg):
    run = build_run_config(args, cfg)
    intervals = parse_int_list(args.interval)
    dataset = load_source(args, run)
    series = SimulationService.systematic_missing_series(
        dataset, intervals, shuffles=args.shuffles, seed=run.seed, workers=run.workers)
    write_output(ExportService.missing_series_export(series, bands=args.bands), run.out)
