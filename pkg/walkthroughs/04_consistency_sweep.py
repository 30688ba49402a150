"""
Checking the criteria against brute force
=========================================

The diagram criteria for fundamental and weakly nondegenerate orbits are
cheap.  The oracles compute the same properties the slow way, from root
closures and subset enumeration.  The sweep runs both over every catalog
form and direct sum up to a rank bound.
"""

import time

from crsatake import sweep_consistency

for bound in (1, 2, 3):
    t0 = time.perf_counter()
    rep = sweep_consistency(bound)
    print(f"rank <= {bound}: {rep.forms_checked} forms, {rep.instances_checked} crossed diagrams, "
          f"{rep.fibrations_checked} fibrations, {len(rep.mismatches)} mismatches, "
          f"{time.perf_counter() - t0:.1f}s")
