"""Map the feasible injection region of the packaged five-bus network.

Each classifier query solves a dispatch feasibility program: can the
three remaining generators balance the system for this pair of renewable
injections without overloading a line?  The walk traces the boundary of
the feasible set in a few hundred queries and renders it to SVG.

Run:  python3 demos/grid_study.py
"""

from pathlib import Path

from edgewalk import (
    EdgeConfig,
    Point2,
    default_network,
    dispatch,
    make_dcopf_classifier,
    run_edge,
)
from edgewalk.svgplot import render_boundary_svg

SEED_IN = Point2(0.4, 4.74)
SEED_OUT = Point2(10.0, 7.0)


def main():
    net = default_network()
    print(
        f"network: {len(net.buses)} buses, {len(net.generators)} dispatchable "
        f"generators, {len(net.lines)} lines, "
        f"{sum(net.loads.values()):g} load"
    )

    for inj in [(0.4, 4.74), (3.0, 1.0), (10.0, 7.0)]:
        d = dispatch(net, inj)
        if not d.feasible:
            print(f"injections {inj}: infeasible")
            continue
        parts = ", ".join(f"bus {g.bus}: {p:.2f}" for g, p in d.generation)
        print(f"injections {inj}: feasible, cost {d.cost:.2f}  ({parts})")

    classifier = make_dcopf_classifier(net)
    est = run_edge(
        classifier,
        EdgeConfig(epsilon=0.1, seed_interior=SEED_IN, seed_exterior=SEED_OUT),
    )
    print(
        f"boundary walk: {est.termination.value} after {est.total_queries} "
        f"queries ({len(est.inner)} feasible, {len(est.outer)} infeasible points)"
    )

    svg = render_boundary_svg(
        classifier.domain,
        est.inner,
        est.outer,
        title="five-bus feasible injection region, eps=0.1",
    )
    out = Path("feasible_region.svg")
    out.write_text(svg)
    print(f"rendered -> {out}")


if __name__ == "__main__":
    main()
