"""s(k, 9) and s(k, 18) mod p from four components, checked against direct sums.

Run with:  python demos/02_components_and_sums.py
"""

from harmsum.quotients import component_values
from harmsum.sums import SumSpec, component_row, s_components, s_direct, verify_relations

p = 1009

## the four components at one prime
v = component_values(p)
print(f"p = {p}: q2 = {v.q2}, q3 = {v.q3}, X = {v.x}, Z = {v.z}")

## each block sum is a fixed combination of them
for N in (9, 18):
    for k in range(N):
        spec = SumSpec(k, N)
        fast, slow = s_components(spec, p, v), s_direct(spec, p)
        row = component_row(spec)
        coeffs = ", ".join(str(c) for c in row)
        print(f"{str(spec):>9}  [{coeffs:<22}]  components {fast:>4}  direct {slow:>4}")
        assert fast == slow

## the classical relations among the blocks
report = verify_relations(p)
print(f"{len(report.results)} relations checked, failures: {report.failures}")

## Wieferich prime: q2 vanishes, the other components do not
w = component_values(1093)
print(f"p = 1093: q2 = {w.q2}, q3 = {w.q3}, X = {w.x}, Z = {w.z}")
