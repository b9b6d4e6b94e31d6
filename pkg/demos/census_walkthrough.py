"""
Counting unusual orders by discriminant
=======================================

N_n counts the orders O_f with an unusual set of distances and
f^2 * d_K <= 10^n.  The sweep runs over d in contiguous chunks.
"""

import time
from collections import Counter

from unusual_orders.surveys import census

for n in (3, 4, 5):
    t0 = time.perf_counter()
    recs = census(10**n, jobs=2)
    print("N_%d = %d  (%.1f s)" % (n, len(recs), time.perf_counter() - t0))

# the eight smallest discriminants
for r in census(10**3):
    print("  disc %4d  d = %3d  f = %2d  type/form %s/%s" % (r.disc, r.d, r.f, r.type, r.form))

# how the census to 10^5 splits by type
types = Counter(r.type for r in census(10**5))
print("by type:", dict(sorted(types.items())))
