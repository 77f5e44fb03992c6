"""
Running the full verification battery from Python
=================================================

The CLI command ``mtz verify all`` wraps exactly this: every default
identity grid, each report carrying both side values, the residual,
and the tolerance verdict.  Reports arrive sorted by identity and
parameters, so two runs differ only in timing fields.
"""

from mpmath import mp

from mtzeta import verify_all

reports = verify_all()

width = max(len(r.identity_id) for r in reports)
passed = 0
for r in reports:
    verdict = "pass" if r.passed else "FAIL"
    passed += r.passed
    print(
        "%-*s  %-4s  residual %-12s  tol %s"
        % (width, r.identity_id, verdict, mp.nstr(r.residual, 3), mp.nstr(r.tolerance, 3))
    )
print()
print("%d of %d reports passed" % (passed, len(reports)))
