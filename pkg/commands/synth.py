"""
* Nom de l'application : TraceSampler SGI-TS
 * Description : synth command, regenerates a dataset from a class histogram
"""

import sys

from commands import add_output_arguments, build_run_config, write_output
from commands.errors import handle_errors
from services.dataset_service import DatasetService
from utils.i18n import get_text


def register(subparsers):
    parser = subparsers.add_parser('synth', help="Synthesize a labeled dataset from a histogram spec")
    parser.add_argument('--histogram', default=None, help="Histogram spec (default: shipped PU-TDS)")
    parser.add_argument('--seed', type=int, default=None)
    parser.add_argument('--arrangement', choices=DatasetService.ARRANGEMENTS, default='shuffled')
    add_output_arguments(parser, formats=False)
    parser.set_defaults(func=cmd_synth)


@handle_errors
def cmd_synth(args, cfg):
    args.histogram = args.histogram or cfg.HISTOGRAM_PATH
    run = build_run_config(args, cfg)
    histogram = DatasetService.read_histogram_spec(run.histogram_path)
    dataset = DatasetService.synthesize(histogram, seed=run.seed, arrangement=args.arrangement)
    write_output(DatasetService.dataset_to_csv(dataset), run.out)

    message = get_text('cli.synth_done', run.language, population=dataset.population,
                       classes=histogram.class_count, out=run.out or '-')
    # keep stdout clean when it carries the dataset
    print(message, file=sys.stderr if run.out in (None, '-') else sys.stdout)
