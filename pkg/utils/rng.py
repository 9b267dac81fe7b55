"""
* Nom de l'application : TraceSampler SGI-TS
 * Description : Seeded random streams
"""

"""
Every random draw in the toolkit goes through numpy's PCG64 bit generator,
seeded with a SeedSequence. Sub-streams (one per class, one per Monte Carlo
trial) are keyed by their index so adding a class or a trial never changes
the draws of the others.
"""

import numpy as np

SEED_MASK = (1 << 64) - 1


# spawn-key namespaces: 0 per-class quotas, 1 Monte Carlo trials, 2 re-orderings
CLASS_STREAMS = 0
TRIAL_STREAMS = 1
SHUFFLE_STREAMS = 2


def normalize_seed(seed):
    return int(seed) & SEED_MASK


def make_rng(seed, *keys):
    sequence = np.random.SeedSequence(entropy=normalize_seed(seed), spawn_key=tuple(int(k) for k in keys))
    return np.random.Generator(np.random.PCG64(sequence))


def class_rng(seed, stratum_index):
    return make_rng(seed, CLASS_STREAMS, stratum_index)


def trial_rng(seed, n, trial_index):
    """Random-sampling trial `trial_index` of size n."""
    return make_rng(seed, TRIAL_STREAMS, n, trial_index)


def shuffle_rng(seed, interval, shuffle_index):
    return make_rng(seed, SHUFFLE_STREAMS, interval, shuffle_index)
