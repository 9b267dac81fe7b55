"""
* Nom de l'application : TraceSampler SGI-TS
 * Description : Regenerates the golden files of tests/fixtures/golden
"""

import sys
import os
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

import argparse

from cli import main

GOLDEN_DIR = os.path.abspath(os.path.join(os.path.dirname(__file__), '..', 'tests', 'fixtures', 'golden'))

# deterministic outputs, independent of the random generator
FIXED = {
    'pu_tds_analyze.md': ['analyze', '--arrangement', 'grouped'],
    'pu_tds_analyze.csv': ['analyze', '--arrangement', 'grouped', '--format', 'csv'],
    'pu_tds_stratified_i5.md': ['sample', '--arrangement', 'grouped', '--family', 'stratified', '--interval', '5'],
}

# seed 0 outputs of the randomized commands
SEEDED = {
    'seed0_random_n500.md': ['sample', '--family', 'random', '--n', '500'],
    'seed0_random_n500_wr.md': ['sample', '--family', 'random', '--n', '500', '--with-replacement'],
    'seed0_underover_k100.md': ['sample', '--family', 'underover', '--k', '100'],
    'seed0_systematic_i5.md': ['sample', '--family', 'systematic', '--interval', '5'],
}


def generate(name, args, histogram):
    out = os.path.join(GOLDEN_DIR, name)
    code = main(['--config', 'testing'] + args[:1] + ['--histogram', histogram, '--seed', '0']
                + args[1:] + ['--report' if args[0] == 'sample' else '--out', out])
    if code != 0:
        raise SystemExit(f"{name}: exit code {code}")
    print(f"  {name}")


def generate_matrix(histogram):
    matrix = os.path.join(GOLDEN_DIR, 'stratified_runs.txt')
    with open(matrix, 'w', encoding='utf-8') as f:
        f.write(''.join(f"stratified interval={i}\n" for i in range(5, 11)))
    out = os.path.join(GOLDEN_DIR, 'pu_tds_stratified_compare.csv')
    code = main(['compare', '--histogram', histogram, '--arrangement', 'grouped', '--matrix', matrix,
                 '--format', 'csv', '--out', out])
    os.remove(matrix)
    if code != 0:
        raise SystemExit(f"comparison: exit code {code}")
    print("  pu_tds_stratified_compare.csv")


if __name__ == '__main__':
    parser = argparse.ArgumentParser(description="Regenerate golden files")
    parser.add_argument('--seeded-only', action='store_true', help="Only the seed 0 randomized outputs")
    parser.add_argument('--histogram', default=None)
    args = parser.parse_args()

    from config import Config
    histogram = args.histogram or Config.HISTOGRAM_PATH
    os.makedirs(GOLDEN_DIR, exist_ok=True)

    print(f"Writing golden files to {GOLDEN_DIR}")
    if not args.seeded_only:
        for name, command in FIXED.items():
            generate(name, command, histogram)
        generate_matrix(histogram)
    for name, command in SEEDED.items():
        generate(name, command, histogram)
