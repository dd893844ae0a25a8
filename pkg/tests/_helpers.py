"""Shared test utilities."""

import math


def rel_diff(a, b):
    """Relative difference normalized to guard against tiny denominators."""
    return abs(a - b) / max(1.0, abs(a), abs(b))


def table_rel_spread(table_a, table_b, orders=None):
    """Worst relative difference between matching valid entries of two tables."""
    worst = 0.0
    orders = orders if orders is not None else range(
        min(table_a.max_order, table_b.max_order) + 1
    )
    for k in orders:
        if k > table_a.max_order or k > table_b.max_order:
            continue
        for n, value, ok in table_a.column(k):
            if ok and table_b.has_entry(k, n) and table_b.is_valid(k, n):
                worst = max(worst, rel_diff(value, table_b.entry(k, n)))
    return worst


def lsq_slope(points):
    """Least-squares slope of (x, y) pairs."""
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    mx = sum(xs) / len(xs)
    my = sum(ys) / len(ys)
    return sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / sum(
        (x - mx) ** 2 for x in xs
    )


def error_slope(table, order, limit, n_lo, n_hi, shift=0.0, step=1):
    """Log-log slope of |T_order^(n) - limit| against n + shift."""
    points = []
    for n in range(n_lo, n_hi + 1, step):
        if table.is_valid(order, n):
            err = abs(table.entry(order, n) - limit)
            if err != 0:
                points.append((math.log(n + shift), math.log(float(err))))
    return lsq_slope(points)
