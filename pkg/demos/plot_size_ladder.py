"""
Spanner size on a dense ladder
==============================

Edge counts against the ``n^(7/5) log^(3/5) n`` scale for graphs with
``m = n^1.8``.  The ratio should drift down as ``n`` grows.
"""

import sys

from addspan.bench import run_ladder, write_csv

rows = list(run_ladder([128, 256, 512], mode=4, exponent=1.8, seed=0))
for r in rows:
    print(f"n={r['n']:5d} m={r['m']:7d} |H|={r['spanner_edges']:6d} "
          f"ratio={r['ratio_to_budget']:.4f} time={r['t_total']:.2f}s")

# The same rows as CSV, including per-phase timings.
write_csv(sys.stdout, rows)
