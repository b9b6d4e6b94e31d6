"""
Unusual conductors in a few real quadratic fields
=================================================

Walks through the field data, the fundamental unit and the conductors f for
which the order Z + f*omega*Z has an unusual set of distances.
"""

from unusual_orders import conductor_report, field_data, fundamental_unit, is_unusual
from unusual_orders.unusual import kronecker_condition

# Q(sqrt(15)): d_K = 60, ramified primes 2, 3, 5
fd = field_data(15)
eps = fundamental_unit(fd)
print("d_K =", fd.d_K, " ramified:", fd.ramified)
print("eps = %d + %d*omega, norm %d" % (eps.u, eps.v, eps.norm))

# With N(eps) = 1 every unusual conductor divides lcm(2, d), so this list is complete
rep = conductor_report(fd)
print("D_15 =", sorted(rep.bounded_set), " type/form:", (rep.type, rep.form))

# The decision for one conductor can be made by any route; they agree
for route in ("thm44", "thm29", "cor28"):
    print(route, is_unusual(fd, 30, route))

# The symbol test behind the default route, per ramified prime
for p in fd.ramified:
    print("p = %d: symbol test %s" % (p, kronecker_condition(fd, p)))

# Q(sqrt(10)) has N(eps) = -1, so D_10 is infinite; only D'_10 is finite
rep = conductor_report(field_data(10), bound=2000)
print("D'_10 =", sorted(rep.reduced_set))
print("D_10 up to 2000 =", sorted(rep.bounded_set))
