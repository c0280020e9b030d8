"""
Running the property suites by hand
===================================

Each suite draws random instances from a seeded generator and compares two
independent computations. A short run with few instances per suite.
"""

from arfs2.selftest import SUITES, run_suite

for name in SUITES:
    r = run_suite(name, seed=1, count=5)
    print(f"{name:26s} {r['instances'] - r['failures']}/{r['instances']}")
