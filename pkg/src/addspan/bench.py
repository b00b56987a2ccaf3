"""Size ladder benchmark: spanner size and per-phase wall time per graph size."""

from __future__ import annotations

import csv
import math
import time

from . import bounds
from .graph import generate_gnm
from .reduction import build_4_spanner
from .spanner5 import SpannerParams, build_5_spanner

PHASES = ("double", "step0", "step1", "step2", "step3", "step4", "step5", "step6", "step7", "project")

CSV_COLUMNS = (
    "n",
    "m",
    "mode",
    "spanner_edges",
    "ratio_to_m",
    "ratio_to_budget",
    "s1_size",
    "s2_size",
    "elimination_rounds",
    "shortcut_used",
    "t_generate",
    *(f"t_{p}" for p in PHASES),
    "t_total",
)


def dense_edge_count(n, exponent=1.8):
    """``min(n(n-1)/2, floor(n^exponent))``."""
    return min(n * (n - 1) // 2, math.floor(n ** exponent + 1e-9))


def run_ladder(sizes, mode=4, exponent=1.8, seed=0, params=None, workers=1):
    """Build one spanner per size on ``G(n, dense_edge_count(n))``.

    Yields one dict per size with the keys of :data:`CSV_COLUMNS`.
    """
    build = build_4_spanner if mode == 4 else build_5_spanner
    params = params or SpannerParams()
    for n in sizes:
        m = dense_edge_count(n, exponent)
        t0 = time.perf_counter()
        g = generate_gnm(n, m, seed)
        t1 = time.perf_counter()
        res = build(g, params, workers=workers)
        t2 = time.perf_counter()
        row = {
            "n": n,
            "m": g.m,
            "mode": mode,
            "spanner_edges": res.edge_count,
            "ratio_to_m": res.edge_count / g.m if g.m else 1.0,
            "ratio_to_budget": res.edge_count / bounds.edge_budget_scale(n),
            "s1_size": res.s1_size,
            "s2_size": res.s2_size,
            "elimination_rounds": res.elimination_rounds,
            "shortcut_used": int(res.shortcut_used),
            "t_generate": t1 - t0,
            "t_total": t2 - t1,
        }
        for p in PHASES:
            row[f"t_{p}"] = res.timings.get(p, 0.0)
        yield row


def write_csv(fh, rows):
    writer = csv.DictWriter(fh, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    n = 0
    for row in rows:
        writer.writerow({k: (f"{v:.6g}" if isinstance(v, float) else v) for k, v in row.items()})
        fh.flush()
        n += 1
    return n
