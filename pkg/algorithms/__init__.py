"""
* Nom de l'application : TraceSampler SGI-TS
 * Description : Logic and implementation for __init__.py
"""

"""
Algorithms module for TraceSampler SGI-TS
Pure computations behind the sampling equations: probabilities, sizes, intervals
"""

import numpy as np
from scipy.special import gammaln

from utils.errors import ZeroPopulation, CountExceedsPopulation, TargetExceedsPopulation, InvalidParameter


def ceil_div(a, b):
    return -(-a // b)


def selection_probability(n, population):
    """P(s) = n / P, full precision."""
    if population < 1:
        raise ZeroPopulation("La population doit contenir au moins un enregistrement")
    if n < 0 or n > population:
        raise CountExceedsPopulation(f"n={n} hors de [0, {population}]")
    return n / population


def sample_size_percent(n, population):
    """Size of the sampled dataset in percent of the population."""
    if population < 1:
        raise ZeroPopulation("La population doit contenir au moins un enregistrement")
    return 100.0 * n / population


def sampling_interval(population, n):
    """I = floor(P / n), never below 1."""
    if n < 1:
        raise InvalidParameter(f"Le nombre de paquets demandés doit être >= 1, reçu {n}")
    if n > population:
        raise TargetExceedsPopulation(f"n={n} dépasse la population P={population}")
    return population // n


def stratified_totals(per_stratum_counts, population):
    """Returns (n(s), per-stratum P(s_i), size percent)."""
    if population < 1:
        raise ZeroPopulation("La population doit contenir au moins un enregistrement")
    counts = [int(c) for c in per_stratum_counts]
    if any(c < 0 for c in counts):
        raise InvalidParameter("Les effectifs par strate doivent être positifs ou nuls")
    total = sum(counts)
    probabilities = tuple(c / population for c in counts)
    return total, probabilities, 100.0 * total / population


def imbalance_ratio(counts):
    """Largest over smallest nonzero count; None when nothing was sampled."""
    nonzero = [c for c in counts if c > 0]
    if not nonzero:
        return None
    return max(nonzero) / min(nonzero)


def log_binomial(a, b):
    """log C(a, b) through log-gamma differences."""
    return gammaln(a + 1) - gammaln(b + 1) - gammaln(a - b + 1)


def miss_probability(class_counts, population, n, with_replacement=False):
    """
    Probability that a class with count c gets no representative in a
    uniform sample of size n. Vectorized over class_counts.
    """
    counts = np.asarray(class_counts, dtype=np.int64)
    if population < 1:
        raise ZeroPopulation("La population doit contenir au moins un enregistrement")
    if n < 0:
        raise CountExceedsPopulation(f"n={n} doit être positif")

    if with_replacement:
        result = np.power(1.0 - counts / population, n)
        return np.clip(result, 0.0, 1.0)

    if n > population:
        raise CountExceedsPopulation(f"n={n} dépasse la population P={population}")

    # C(P-c, n) / C(P, n), zero when c > P - n
    result = np.zeros(counts.shape, dtype=np.float64)
    reachable = counts <= population - n
    c = counts[reachable].astype(np.float64)
    log_ratio = (gammaln(population - c + 1) - gammaln(population - c - n + 1)
                 - gammaln(population + 1) + gammaln(population - n + 1))
    result[reachable] = np.exp(log_ratio)
    return np.clip(result, 0.0, 1.0)

