# Aharonov-Bohm flux through the ring.
#
# The flux ratio delta enters the angular equation through the order of
# the Mathieu functions: integer delta just relabels m, fractional delta
# moves onto the fractional-order characteristic family where the ce/se
# distinction disappears.

import math

from qring import Branch, QuantumState, ab_correction, get_material, qr_energy

gaas = get_material("GaAs")

# flux corrections at D = 0: exact closed form
#   sqrt(lambda^2 + (m+delta)^2) - sqrt(lambda^2 + m^2)
print("AB corrections (units of hbar*omega0), D = 0:")
print(f"{'delta':>6} {'m=0':>12} {'m=1':>12} {'m=2':>12}")
for delta in (0.1, 0.25, 0.5, 0.75, 1.0):
    vals = [ab_correction(QuantumState(0, m, Branch.CE), gaas, delta)
            for m in (0, 1, 2)]
    print(f"{delta:>6.2f} {vals[0]:>12.7f} {vals[1]:>12.7f} {vals[2]:>12.7f}")
print()

exact = math.sqrt(5.0) - 2.0
got = ab_correction(QuantumState(0, 0, Branch.CE), gaas, 1.0)
print(f"delta = 1, m = 0: {got:.15f}")
print(f"sqrt(5) - 2     : {exact:.15f}")
print()

# both parity labels see the same flux correction at D = 0
for m in (1, 2):
    ce = ab_correction(QuantumState(0, m, Branch.CE), gaas, 0.4)
    se = ab_correction(QuantumState(0, m, Branch.SE), gaas, 0.4)
    print(f"m = {m}: ce {ce:.12f}   se {se:.12f}   diff {abs(ce - se):.1e}")
print()

# with the dipole on, fractional flux routes through the merged
# fractional-order family -- watch the branch note change
for delta in (0.0, 0.5, 1.0):
    row = qr_energy(QuantumState(0, 1, Branch.CE, delta), gaas, 5.0)
    print(f"delta = {delta}: E/hw0 = {row.e_hw0:.10f}   [{row.branch_note}]")
