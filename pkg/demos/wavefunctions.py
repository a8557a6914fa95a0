# Radial densities and normalization checks.

import numpy as np

from qring import (
    Branch,
    QuantumState,
    from_material,
    get_material,
    make_wave,
    normalize_numeric,
    psi,
    radial_profile,
)

gaas = get_material("GaAs")
params = from_material(gaas, 10.0, 0.0)

# ground and first excited radial states of the m = 1 ce level
for nr in (0, 1, 2):
    spec = make_wave(QuantumState(nr, 1, Branch.CE), params)
    n_quad = normalize_numeric(spec)
    grid = np.linspace(0.0, 8.0 * spec.a, 4000)
    table = radial_profile(spec, grid)
    dens = np.array([d for _, d in table.rows])
    r_peak = grid[np.argmax(dens)]
    print(f"nr = {nr}:")
    print(f"  oscillator length a     = {spec.a:.4f} bohr")
    print(f"  closed-form N           = {spec.N:.12f}")
    print(f"  quadrature N            = {n_quad:.12f}")
    print(f"  radial nodes            = {table.nodes}")
    peak = f"  outermost density peak  = {r_peak:.2f} bohr"
    if nr == 0:
        # nodeless state: the peak sits exactly at a * sqrt(2 alpha)
        peak += f" (a*sqrt(2 alpha) = {spec.a * np.sqrt(2 * spec.alpha):.2f})"
    print(peak)
print()

# the full wavefunction is complex once flux is applied; its density is
# single valued around the ring
params_flux = from_material(gaas, 10.0, 0.3)
spec = make_wave(QuantumState(0, 1, Branch.CE, 0.3), params_flux)
r0 = 1.3 * spec.a
for th in (0.0, np.pi / 2, np.pi):
    v = psi(spec, r0, th)
    print(f"psi(r0, {th:4.2f}) = {v.real:+.6e} {v.imag:+.6e}j   "
          f"|psi|^2 = {abs(v) ** 2:.6e}")

wrap = abs(psi(spec, r0, 0.1)) ** 2 - abs(psi(spec, r0, 0.1 + 2 * np.pi)) ** 2
print(f"density mismatch after one loop: {wrap:.2e}")
