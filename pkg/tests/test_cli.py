import io
import math
from contextlib import redirect_stderr, redirect_stdout

import pytest

from qring.cli import _floats_from_range, run


def _run(argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = run(argv)
    return code, out.getvalue(), err.getvalue()


def test_materials_schema():
    code, out, err = _run(["materials"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "name,m_star,eps_r,lambda,hbar_omega0_eV"
    assert lines[1].startswith("GaAs,0.067,12.65,2,1")
    assert len(lines) == 4
    assert out.endswith("\n") and "\r" not in out


def test_energies_schema_and_value():
    code, out, _ = _run(["energies", "--material", "GaAs", "--m", "1",
                         "--parity", "ce"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "material,D,delta,nr,m,parity,p,char_value,alpha,lambda_eff,E_hw0,E_eV"
    row = lines[1].split(",")
    assert row[:6] == ["GaAs", "0", "0", "0", "1", "ce"]
    assert float(row[10]) == pytest.approx(1.0 + math.sqrt(5.0), abs=1e-10)


def test_corrections_schema():
    code, out, _ = _run(["corrections", "--material", "GaAs", "--m", "0",
                         "--parity", "ce", "--D-range", "10"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "material,D,p,m,parity,delta,char_value,lambda_eff,correction"
    assert float(lines[1].split(",")[-1]) == pytest.approx(-1.3962872298e-3, rel=1e-9)


def test_transitions_schema():
    code, out, _ = _run(["transitions", "--material", "GaAs", "--m-hi", "1",
                         "--m-lo", "0", "--parity", "ce", "--D-range", "0:10:10"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "material,D,nr,m_hi,m_lo,parity,dE_withD,dE_noD,rel_shift_pct"
    last = lines[-1].split(",")
    assert float(last[-1]) == pytest.approx(1.0316268251, rel=1e-8)


def test_ab_sweep_schema_and_defaults():
    code, out, _ = _run(["ab-sweep", "--material", "GaAs", "--m", "0",
                         "--parity", "ce", "--delta-range", "0:1:0.5"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "material,D,m,parity,delta,lambda_eff,ab_correction"
    assert len(lines) == 4  # 0, 0.5, 1
    assert float(lines[-1].split(",")[-1]) == pytest.approx(math.sqrt(5) - 2,
                                                            abs=1e-10)


def test_wavefunction_schema():
    code, out, _ = _run(["wavefunction", "--material", "GaAs", "--nr", "2",
                         "--m", "1", "--parity", "ce", "--points", "40"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "r,R2,nodes"
    assert len(lines) == 41
    assert all(line.split(",")[2] == "2" for line in lines[1:])


def test_byte_identical_reruns():
    argv = ["corrections", "--material", "GaAs,CdSe", "--m", "0,1,2",
            "--parity", "ce,se", "--D-range", "0:10:2.5"]
    _, first, _ = _run(argv)
    _, second, _ = _run(argv)
    assert first == second
    assert len(first.splitlines()) == 1 + 2 * 5 * 5  # hdr + mats x states x D


def test_pretty_table():
    code, out, _ = _run(["materials", "--pretty"])
    assert code == 0
    assert "," not in out.splitlines()[0]
    assert out.splitlines()[0].split() == ["name", "m_star", "eps_r", "lambda",
                                           "hbar_omega0_eV"]


def test_usage_errors_exit_1():
    for argv in (["energies", "--m", "x"],
                 ["energies", "--parity", "left"],
                 ["corrections", "--D-range", "5:1:1"],
                 ["corrections", "--D-range", "1:2:3:4"],
                 ["nonsense"],
                 []):
        code, _, err = _run(argv)
        assert code == 1, argv
        assert err


def test_domain_errors_exit_3():
    code, _, err = _run(["energies", "--material", "Unobtainium"])
    assert code == 3
    assert "unknown material" in err
    code, _, err = _run(["energies", "--material", "GaAs", "--m", "0",
                         "--parity", "se"])
    assert code == 1  # no valid states is a usage problem
    code, _, err = _run(["energies", "--material", "GaAs", "--D", "-3"])
    assert code == 3


def test_config_file_merging(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("material=GaAs\nD=5.0\ndelta=0.25\nnr=0\nm=1\nparity=ce\n")
    code, out, _ = _run(["energies", "--config", str(cfg)])
    assert code == 0
    assert out.splitlines()[1].split(",")[1] == "5"
    # explicit flag beats the file
    code, out, _ = _run(["energies", "--config", str(cfg), "--D", "0"])
    assert code == 0
    assert out.splitlines()[1].split(",")[1] == "0"


def test_config_unknown_key(tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("florb=1\n")
    code, _, err = _run(["energies", "--config", str(cfg)])
    assert code == 1
    assert "florb" in err


def test_config_missing_file():
    code, _, err = _run(["energies", "--config", "/no/such/file.cfg"])
    assert code == 1


def test_float_range_parsing():
    assert _floats_from_range("5") == [5.0]
    got = _floats_from_range("0:1:0.25")
    assert got == pytest.approx([0.0, 0.25, 0.5, 0.75, 1.0])
    # inclusive endpoint despite binary-float step accumulation
    assert _floats_from_range("0:10:0.1")[-1] == pytest.approx(10.0)
    assert len(_floats_from_range("0:10:0.1")) == 101


def test_verify_subcommand_csv():
    code, out, _ = _run(["verify", "--suite", "series"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "check,cases,worst,tol,status"
    fields = lines[1].split(",")
    assert fields[0] == "series" and fields[-1] == "ok"


def test_help_exits_zero():
    code, out, err = _run(["--help"])
    assert code == 0
