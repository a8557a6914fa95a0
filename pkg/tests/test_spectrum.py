import math

import pytest

from qring import (
    Branch,
    ParameterError,
    QuantumState,
    SupercriticalError,
    SweepConfig,
    SystemParams,
    ab_correction,
    angular_eigenvalue,
    correction,
    energy,
    from_material,
    get_material,
    qr_energy,
    radial_exponent,
    sweep,
    transition,
)

GAAS = get_material("GaAs")


def test_state_validation():
    with pytest.raises(ParameterError):
        QuantumState(-1, 0, Branch.CE)
    with pytest.raises(ParameterError):
        QuantumState(0, -2, Branch.CE)
    with pytest.raises(ParameterError):
        QuantumState(0, 0, Branch.SE)  # se starts at m = 1


def test_radial_ladder_spacing():
    """E(n_r + 1) - E(n_r) = 2 sqrt(2A/mu), independent of everything else."""
    params = from_material(GAAS, 7.0, 0.25)
    step = 2.0 * math.sqrt(2.0 * params.A / params.mu)
    rows = [energy(QuantumState(n, 1, Branch.CE, 0.25), params) for n in range(5)]
    for lo, hi in zip(rows, rows[1:]):
        assert hi.E - lo.E == pytest.approx(step, rel=1e-13)


def test_reference_point_ground_m1():
    row = qr_energy(QuantumState(0, 1, Branch.CE), GAAS, 0.0)
    assert row.e_hw0 == pytest.approx(1.0 + math.sqrt(5.0), abs=1e-12)
    assert row.e_ev == pytest.approx(row.e_hw0 * GAAS.hbar_omega0, rel=1e-12)
    assert row.correction == 0.0
    assert row.branch_note.startswith("integer")


def test_fractional_branch_note():
    row = qr_energy(QuantumState(0, 1, Branch.CE, 0.3), GAAS, 2.0)
    assert row.branch_note == "fractional(merged)"
    assert row.q_mathieu == pytest.approx(4 * GAAS.m_star * 2.0 / GAAS.eps_r)


def test_delta_mismatch_rejected():
    params = from_material(GAAS, 0.0, 0.0)
    with pytest.raises(ParameterError):
        energy(QuantumState(0, 1, Branch.CE, 0.5), params)


def test_integer_flux_shifts_order():
    # delta = 1 relabels m -> m + 1 for the angular problem
    shifted = qr_energy(QuantumState(0, 1, Branch.CE, 1.0), GAAS, 3.0)
    direct = qr_energy(QuantumState(0, 2, Branch.CE, 0.0), GAAS, 3.0)
    assert shifted.char_value == pytest.approx(direct.char_value, abs=1e-12)


def test_supercritical_rejected():
    # strong attractive dipole drives 1 - 4 eta below zero
    params = SystemParams(A=0.5, B=0.0, C=0.0, D_theta=40.0, mu=1.0, delta=0.0)
    with pytest.raises(SupercriticalError):
        energy(QuantumState(0, 0, Branch.CE), params)


def test_correction_sign_and_small_d_scaling():
    c1 = correction(QuantumState(0, 0, Branch.CE), GAAS, 0.1)
    c2 = correction(QuantumState(0, 0, Branch.CE), GAAS, 0.2)
    assert c1 < 0 and c2 < 0
    exponent = math.log(c2 / c1) / math.log(2.0)
    assert 1.95 <= exponent <= 2.05  # quadratic in D while p is small


def test_correction_magnitude_falls_with_m():
    vals = [abs(correction(QuantumState(0, m, Branch.CE), GAAS, 10.0))
            for m in range(4)]
    assert vals[0] > vals[1] > vals[2] > vals[3]


def test_transition_validation():
    hi = QuantumState(0, 2, Branch.CE)
    with pytest.raises(ParameterError):
        transition(hi, QuantumState(1, 1, Branch.CE), GAAS, 1.0)  # n_r differs
    with pytest.raises(ParameterError):
        transition(hi, QuantumState(0, 1, Branch.SE), GAAS, 1.0)  # parity differs
    with pytest.raises(ParameterError):
        transition(hi, QuantumState(0, 2, Branch.CE), GAAS, 1.0)  # same m
    with pytest.raises(ParameterError):
        transition(hi, QuantumState(0, 1, Branch.CE, 0.5), GAAS, 1.0)  # delta differs


def test_transition_shift_is_nr_independent():
    shifts = []
    for n_r in (0, 1, 2):
        _, _, s = transition(QuantumState(n_r, 1, Branch.CE),
                             QuantumState(n_r, 0, Branch.CE), GAAS, 10.0)
        shifts.append(s)
    assert max(shifts) - min(shifts) < 1e-14


def test_ab_correction_zero_reference():
    assert ab_correction(QuantumState(0, 1, Branch.CE), GAAS, 0.0) == 0.0


def test_ab_correction_with_dipole_background():
    # D != 0 changes both endpoints; the correction must still be finite and
    # close to the D = 0 value for small D
    base = ab_correction(QuantumState(0, 1, Branch.CE), GAAS, 0.5, D=0.0)
    pert = ab_correction(QuantumState(0, 1, Branch.CE), GAAS, 0.5, D=0.5)
    assert abs(pert - base) < 1e-4
    assert pert != base


def test_sweep_ordering_and_rows():
    states = (QuantumState(1, 1, Branch.CE), QuantumState(0, 0, Branch.CE),
              QuantumState(0, 1, Branch.SE), QuantumState(0, 1, Branch.CE))
    cfg = SweepConfig((GAAS, get_material("CdSe")), states, (0.0, 5.0))
    rows = sweep(cfg)
    assert len(rows) == 16
    keys = [(r.material, r.state.parity.value, r.state.m, r.state.n_r, r.D)
            for r in rows]
    assert keys == sorted(keys)
    assert all(r.error is None for r in rows)


def test_sweep_records_row_errors(monkeypatch):
    # huge dipole drives the m = 0 row supercritical; others must survive
    states = (QuantumState(0, 0, Branch.CE), QuantumState(0, 3, Branch.CE))
    rows = sweep(SweepConfig((GAAS,), states, (0.0, 900.0)))
    failed = [r for r in rows if r.error]
    ok = [r for r in rows if not r.error]
    assert len(rows) == 4
    assert len(failed) == 1
    assert failed[0].state.m == 0 and failed[0].D == 900.0
    assert math.isnan(failed[0].E)
    assert all(math.isfinite(r.E) for r in ok)


def test_sweep_thread_determinism(monkeypatch):
    states = tuple(QuantumState(n, m, Branch.CE) for n in range(2) for m in range(3))
    cfg = SweepConfig((GAAS,), states, (0.0, 2.0, 4.0))
    serial = sweep(cfg)
    monkeypatch.setenv("QRING_THREADS", "4")
    threaded = sweep(cfg)
    assert [r.E for r in serial] == [r.E for r in threaded]
    assert [r.state for r in serial] == [r.state for r in threaded]


def test_sweep_rejects_bad_grid():
    with pytest.raises(ParameterError):
        SweepConfig((GAAS,), (QuantumState(0, 0, Branch.CE),), (-1.0,))


def test_angular_eigenvalue_zero_dipole_free_rotor():
    # at p = 0 the angular energies are delta^2 - (m + delta)^2
    for delta in (0.0, 0.25):
        params = from_material(GAAS, 0.0, delta)
        for m in (0, 1, 2):
            e, c, q, _ = angular_eigenvalue(QuantumState(0, m, Branch.CE, delta),
                                            params)
            assert q == 0.0
            assert e == pytest.approx(delta**2 - (m + delta) ** 2, abs=1e-12)


def test_radial_exponent_harmonic_case():
    params = SystemParams(A=0.5, B=0.0, C=0.0, D_theta=0.0, mu=1.0, delta=0.0)
    e_theta, _, _, _ = angular_eigenvalue(QuantumState(0, 1, Branch.CE), params)
    eta, alpha = radial_exponent(e_theta, params)
    # 1 - 4 eta = c + 8 mu B = 4 m^2 here
    assert alpha == pytest.approx((1 + 2.0) / 4.0, abs=1e-14)
