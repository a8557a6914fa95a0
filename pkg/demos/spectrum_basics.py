# Energy spectrum of a GaAs quantum ring, with and without the dipolar
# impurity. Everything runs in Hartree atomic units internally; the rows
# carry the energies in units of the confinement quantum and in eV.

from qring import Branch, QuantumState, get_material, qr_energy

gaas = get_material("GaAs")
print(f"material: {gaas.name}, m* = {gaas.m_star}, eps_r = {gaas.eps_r}, "
      f"lambda = {gaas.lam}, hbar*omega0 = {gaas.hbar_omega0} eV")
print()

# Clean ring first: D = 0, no flux. The spectrum is
#   E = hbar*omega0 * (2 n_r + 1 + sqrt(lambda^2 + m^2))
# so the m = 1 ground level sits at 1 + sqrt(5) = 3.2360680 exactly.
print("D = 0 (clean ring)")
print(f"{'nr':>3} {'m':>3} {'parity':>7} {'E/hw0':>14} {'E (eV)':>14}")
for m in range(3):
    for nr in range(2):
        row = qr_energy(QuantumState(nr, m, Branch.CE), gaas, 0.0)
        print(f"{nr:>3} {m:>3} {'ce':>7} {row.e_hw0:>14.10f} {row.e_ev:>14.10f}")
print()

# Turn the dipole on. The angular problem becomes a Mathieu equation and
# the levels move by the characteristic-value shifts. se labels split
# away from ce labels (they were degenerate at D = 0).
D = 10.0
print(f"D = {D} a.u.")
print(f"{'nr':>3} {'m':>3} {'parity':>7} {'E/hw0':>14} {'corr':>13}")
for parity in (Branch.CE, Branch.SE):
    for m in range(3):
        if parity is Branch.SE and m == 0:
            continue  # no se solution with m = 0
        row = qr_energy(QuantumState(0, m, parity, 0.0), gaas, D)
        print(f"{0:>3} {m:>3} {parity.value:>7} {row.e_hw0:>14.10f} "
              f"{row.correction:>+13.3e}")
print()

# The Mathieu parameter p that drives all of this stays small for
# physical D, which is why the corrections are mild.
row = qr_energy(QuantumState(0, 0, Branch.CE), gaas, D)
print(f"Mathieu parameter p at D = {D}: {row.q_mathieu:.6f}")
print(f"characteristic value a_0(p):    {row.char_value:.6f}")
print(f"radial exponent alpha:          {row.alpha:.6f}")
