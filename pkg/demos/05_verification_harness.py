"""Driving the verification harness from Python.

The harness enumerates every isomorphism class within a grid's bounds and
re-checks each registered structural claim instance by instance.  Reports
carry verdicts, counterexamples, and skip records; two claims are expected
to fail, exhibiting the explicit extension counterexamples.
"""

from fgmod.rings import RingSpec
from fgmod.verify import (
    GridSpec,
    check_claim,
    format_reports_text,
    registered_claims,
    run_suite,
)

print(f"{len(registered_claims())} registered claims, e.g.:", ", ".join(registered_claims()[:5]))
print()

grid = GridSpec(RingSpec.integers(), 8, 1, (0, 2, 3), label="demo-Z")
print("One claim in detail")
print("-------------------")
r = check_claim("extension-closure-R", grid)
print(f"{r.claim_id}: verdict={r.verdict} (expected {r.expected}), "
      f"{r.instances_checked} instances")
for ce in r.counterexamples[:3]:
    print("  counterexample:", ce)
print()

print("A small suite")
print("-------------")
suite = run_suite(
    [grid, GridSpec(RingSpec.mod(6), 8, 0, (0, 1, 2, 3), label="demo-Z/6")],
    ["equiv-reduced-wrt", "gamma-dual", "gm-adjunction", "extension-closure-C"],
)
print(format_reports_text(suite))
