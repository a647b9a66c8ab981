"""Two ways to score an estimate when accuracy matters.

With the scalar field in hand, a marching-squares contour is the
reference.  When only the black box exists, a second walk at a tenth of
the step size stands in for it; the scorer refuses references that are
too coarse to trust.

Run:  python3 demos/scoring.py
"""

from edgewalk import (
    CANONICAL_SPECS,
    EdgeConfig,
    ReferenceResolutionError,
    asd_to_reference,
    coverage_within,
    make_test_classifier,
    reference_from_estimate,
    reference_from_scalar,
    run_edge,
)

EPSILON = 0.1


def main():
    spec = CANONICAL_SPECS["beale"]
    est = run_edge(make_test_classifier("beale"), EdgeConfig(epsilon=EPSILON))
    print(f"walk at eps={EPSILON}: {est.total_queries} queries")

    # route 1: contour the known field
    ref = reference_from_scalar(spec.fn, spec.threshold, spec.domain, EPSILON / 10.0)
    score = asd_to_reference(est.inner, est.outer, ref, epsilon=EPSILON)
    print(
        f"scalar reference:    asd {score.total:.4f} "
        f"(interior {score.inner:.4f}, exterior {score.outer:.4f})"
    )

    # route 2: a ten-times-finer walk of the same black box
    fine = run_edge(make_test_classifier("beale"), EdgeConfig(epsilon=EPSILON / 10.0))
    blackbox_ref = reference_from_estimate(fine)
    score = asd_to_reference(est.inner, est.outer, blackbox_ref, epsilon=EPSILON)
    print(
        f"black-box reference: asd {score.total:.4f} "
        f"({fine.total_queries} extra queries, slack {blackbox_ref.slack:g})"
    )

    # a same-resolution walk is refused as a reference
    peer = reference_from_estimate(est)
    try:
        asd_to_reference(est.inner, est.outer, peer, epsilon=EPSILON)
    except ReferenceResolutionError as exc:
        print(f"coarse reference:    refused ({exc})")

    # every probe should hug the outline of the clipped region
    outline = reference_from_scalar(
        spec.fn, spec.threshold, spec.domain, EPSILON / 10.0, include_domain_edges=True
    )
    cov = coverage_within(est.inner + est.outer, outline, EPSILON + EPSILON / 10.0)
    print(
        f"outline coverage:    {cov.fraction_within:.0%} within eps+cell "
        f"(worst distance {cov.max_distance:.4f})"
    )


if __name__ == "__main__":
    main()
