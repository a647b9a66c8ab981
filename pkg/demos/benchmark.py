"""Walk versus exhaustive grid on the three benchmark level sets.

Both estimators get the same step size; the table shows how many
classifier queries each spends and what boundary accuracy it buys,
scored against a fine contour of the underlying field.

Run:  python3 demos/benchmark.py
"""

import time

from edgewalk import (
    CANONICAL_SPECS,
    EdgeConfig,
    asd_to_reference,
    make_test_classifier,
    reference_from_scalar,
    run_edge,
    run_grid,
)

EPSILON = 0.1


def main():
    print(
        f"{'classifier':<16} {'walk q':>7} {'grid q':>7} {'saving':>7} "
        f"{'walk asd':>9} {'grid asd':>9} {'walk s':>7} {'grid s':>7}"
    )
    for name in ("rosenbrock", "goldstein_price", "beale"):
        t0 = time.perf_counter()
        est = run_edge(make_test_classifier(name), EdgeConfig(epsilon=EPSILON))
        walk_s = time.perf_counter() - t0

        t0 = time.perf_counter()
        grid = run_grid(make_test_classifier(name), EPSILON)
        grid_s = time.perf_counter() - t0

        spec = CANONICAL_SPECS[name]
        ref = reference_from_scalar(
            spec.fn, spec.threshold, spec.domain, EPSILON / 10.0
        )
        walk_asd = asd_to_reference(est.inner, est.outer, ref).total
        grid_asd = asd_to_reference(grid.inner, grid.outer, ref).total

        saving = grid.total_queries / est.total_queries
        print(
            f"{name:<16} {est.total_queries:>7} {grid.total_queries:>7} "
            f"{saving:>6.1f}x {walk_asd:>9.4f} {grid_asd:>9.4f} "
            f"{walk_s:>7.3f} {grid_s:>7.3f}"
        )


if __name__ == "__main__":
    main()
