"""Threshold formulas and size bounds, all in terms of the vertex count ``n``.

Logarithms are base 2 and clamped below at 1, so every formula is defined
(and monotone) for ``n <= 2``.
"""

import math


def lg(n):
    return max(1.0, math.log2(n)) if n > 1 else 1.0


def default_elim_threshold(n):
    """Step-1 cutoff ``n^(3/5) / lg(n)^(3/5)``."""
    return n ** 0.6 / lg(n) ** 0.6


def default_heavy_threshold(n):
    """Heavy-vertex cutoff ``n^(2/5) lg(n)^(3/5)``."""
    return n ** 0.4 * lg(n) ** 0.6


def default_f_threshold(n):
    """Path-degree budget ``F = n^(3/5) lg(n)^(2/5)``."""
    return n ** 0.6 * lg(n) ** 0.4


def s1_bound(n):
    return 2 * n ** 0.6 * lg(n) ** 0.4


def s2_bound(n):
    return 12 * n ** 0.4 * lg(n) ** 0.6


def edge_budget_scale(n):
    """``n^(7/5) lg(n)^(3/5)``, the growth rate of the spanner size."""
    return n ** 1.4 * lg(n) ** 0.6


def dense_shortcut_applies(n, m):
    """``m <= n^(7/5)``, decided exactly as ``m^5 <= n^7``."""
    return int(m) ** 5 <= int(n) ** 7


def shortcut_edge_limit(n):
    """Largest integer ``m`` with ``m^5 <= n^7``."""
    n7 = int(n) ** 7
    m = int(round(n ** 1.4))
    while m ** 5 > n7:
        m -= 1
    while (m + 1) ** 5 <= n7:
        m += 1
    return m
