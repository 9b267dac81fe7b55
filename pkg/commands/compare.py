"""
* Nom de l'application : TraceSampler SGI-TS
 * Description : compare command, several sampler runs side by side
"""

import json
import logging
import shlex
from concurrent.futures import ThreadPoolExecutor

from commands import add_source_arguments, add_output_arguments, build_run_config, load_source, render, write_output
from commands.errors import handle_errors
from services.dataset_service import DatasetService
from services.export_service import ExportService
from services.sampler_service import SamplerService
from utils.errors import RunMatrixError, SamplingError

logger = logging.getLogger(__name__)


def register(subparsers):
    parser = subparsers.add_parser('compare', help="Run a matrix of samplers and compare class shares")
    add_source_arguments(parser)
    parser.add_argument('--matrix', required=True,
                        help="Run matrix: JSON list of runs, or one 'family key=value ...' run per line")
    parser.add_argument('--seed', type=int, default=None)
    parser.add_argument('--workers', type=int, default=None)
    add_output_arguments(parser)
    parser.set_defaults(func=cmd_compare)


def parse_run_matrix(text, default_seed=0):
    """
    Two accepted layouts:
      [{"family": "stratified", "interval": 5}, ...]
    or
      stratified interval=5
      random n=500 with_replacement=true   # comment
    Every entry is validated before anything runs.
    """
    stripped = text.strip()
    if stripped.startswith('['):
        try:
            entries = json.loads(stripped)
        except json.JSONDecodeError as e:
            raise RunMatrixError(f"Matrice JSON invalide: {e.msg}", line=e.lineno)
        if not isinstance(entries, list) or not all(isinstance(e, dict) for e in entries):
            raise RunMatrixError("La matrice JSON doit être une liste d'objets")
        numbered = list(enumerate(entries, start=1))
    else:
        numbered = []
        for line_number, raw in enumerate(text.splitlines(), start=1):
            line = raw.split('#', 1)[0].strip()
            if not line:
                continue
            try:
                tokens = shlex.split(line)
            except ValueError as e:
                raise RunMatrixError(f"Ligne illisible: {e}", line=line_number)
            entry = {'family': tokens[0]}
            for token in tokens[1:]:
                if '=' not in token:
                    raise RunMatrixError(f"Paramètre attendu 'clé=valeur', reçu '{token}'", line=line_number)
                key, value = token.split('=', 1)
                entry[key.strip().lower()] = value.strip()
            numbered.append((line_number, entry))

    specs = []
    for line_number, entry in numbered:
        try:
            specs.append(SamplerService.spec_from_mapping(entry, default_seed))
        except SamplingError as e:
            raise RunMatrixError(str(e), line=line_number)
    if not specs:
        raise RunMatrixError("La matrice ne contient aucune exécution")
    return specs


@handle_errors
def cmd_compare(args, cfg):
    run = build_run_config(args, cfg)
    specs = parse_run_matrix(DatasetService.read_text(args.matrix, RunMatrixError), run.seed)

    dataset = load_source(args, run)
    histogram = DatasetService.histogram(dataset)
    logger.info("Comparing %d runs on P=%d", len(specs), dataset.population)
    if run.workers > 1:
        with ThreadPoolExecutor(max_workers=run.workers) as pool:
            samples = list(pool.map(lambda spec: SamplerService.run(dataset, spec), specs))
    else:
        samples = [SamplerService.run(dataset, spec) for spec in specs]

    matrix = ExportService.build_comparison(histogram, samples)
    write_output(render(matrix, run), run.out)
