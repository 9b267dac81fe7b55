"""
* Nom de l'application : TraceSampler SGI-TS
 * Description : split command, per-class train/test holdout
"""

from commands import add_source_arguments, build_run_config, guard_output, load_source, write_output
from commands.errors import handle_errors
from services.dataset_service import DatasetService
from utils.i18n import get_text


def register(subparsers):
    parser = subparsers.add_parser('split', help="Per-class train/test split of a dataset")
    add_source_arguments(parser)
    parser.add_argument('--test-fraction', type=float, default=0.3)
    parser.add_argument('--seed', type=int, default=None)
    parser.add_argument('--train-out', required=True)
    parser.add_argument('--test-out', required=True)
    parser.set_defaults(func=cmd_split)


@handle_errors
def cmd_split(args, cfg):
    run = build_run_config(args, cfg)
    guard_output(args.train_out, run)
    guard_output(args.test_out, run)
    dataset = load_source(args, run)
    split = DatasetService.train_test_split(dataset, args.test_fraction, seed=run.seed)
    write_output(DatasetService.dataset_to_csv(split.train), args.train_out)
    write_output(DatasetService.dataset_to_csv(split.test), args.test_out)
    print(get_text('cli.split_done', run.language, train=split.train.population, test=split.test.population))
