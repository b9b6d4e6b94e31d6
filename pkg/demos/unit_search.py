"""
Squarefree d dividing the second unit coordinate
================================================

Writes eps = u + v*omega and looks for d | v.  The search keeps only u and v
modulo d, so the unit itself is never formed.  A result log allows resuming.
"""

import os
import tempfile

from unusual_orders.surveys import search_d_divides_v

log = os.path.join(tempfile.mkdtemp(), "search.jsonl")
hits, cube_only, failures = search_d_divides_v(60_000, jobs=2, log_path=log)

print("   d  beta  t  N(eps)  h")
for h in hits:
    print("%6d  %3d  %2d  %5d  %2d" % (h.d, h.beta, h.t, h.unit_norm, h.class_number))
print("3 | d and d | v_3 only:", cube_only)
print("budget failures:", failures)

# a second call on the same log resumes after the last checkpoint and adds nothing new
again, _, _ = search_d_divides_v(60_000, log_path=log, resume=True)
print("resumed run agrees:", [h.d for h in again] == [h.d for h in hits])
