import numpy as np
import pytest

from dcgodunov.characteristics import epsilon_sweep
from dcgodunov.cli import main
from dcgodunov.experiments import ExperimentConfig, compare_schemes
from dcgodunov.figures import FIGURES, figure_table
from dcgodunov.grid import FieldState, Grid1D
from dcgodunov.report import format_table, read_table, write_report, write_table
from dcgodunov.riemann import RiemannData


def test_field_csv_layout(tmp_path):
    state = FieldState(Grid1D(0, 3, 3), np.array([1.0, 2.0, 3.0]), 0.5)
    path = tmp_path / "f.csv"
    write_report(state, path)
    lines = path.read_text().splitlines()
    assert lines == ["# time=0.5", "x,phi", "0.5,1", "1.5,2", "2.5,3"]


def test_round_trip_is_exact(tmp_path):
    x = np.random.default_rng(3).normal(size=50)
    path = tmp_path / "t.csv"
    write_table(path, {"x": x, "y": x**2}, {"note": "hi", "n": 3, "missing": None})
    meta, cols = read_table(path)
    assert meta == {"note": "hi", "n": "3", "missing": ""}
    np.testing.assert_array_equal(cols["x"], x)
    np.testing.assert_array_equal(cols["y"], x**2)


def test_table_rejects_ragged_columns():
    with pytest.raises(ValueError):
        format_table({"a": [1, 2], "b": [1]})


def test_comparison_and_sweep_headers(tmp_path):
    rep = compare_schemes(ExperimentConfig(grid=Grid1D(-1, 1, 60), t_final=0.05))
    write_report(rep, tmp_path / "c.csv")
    text = (tmp_path / "c.csv").read_text()
    assert "x,phi_proposed,phi_averaged\n" in text and "# plateau_proposed=" in text
    rows = epsilon_sweep(0.4, 0.15, RiemannData(-2, 3, 1, 0), [0.1, 0.01])
    write_report(rows, tmp_path / "s.csv")
    meta, cols = read_table(tmp_path / "s.csv")
    assert list(cols) == ["epsilon", "phi_probe", "abs_err_vs_lambda"]
    assert meta["asymptotic_epsilon"] == "0.01"
    with pytest.raises(TypeError):
        write_report(object(), tmp_path / "x.csv")


def test_figure_output_is_deterministic():
    for fig in ("2", "10"):
        a = format_table(*figure_table(fig))
        b = format_table(*figure_table(fig))
        assert a == b
    assert figure_table("fig02")[1]["figure"] == "2"


def test_every_figure_id_has_a_preset():
    assert sorted(FIGURES, key=int) == ["1", "2", "3", "4", "5", "10", "11", "12", "13",
                                        "14", "15", "16", "17"]


def test_cli_riemann(capsys):
    assert main(["riemann"]) == 0
    out = capsys.readouterr().out
    assert "lambda: 0.6" in out
    assert main(["riemann", "--a-left", "2", "--a-right", "-3"]) == 0
    assert "blocked" in capsys.readouterr().out


def test_cli_simulate_and_compare(tmp_path, capsys):
    out = tmp_path / "s.csv"
    assert main(["simulate", "--nx", "80", "--t-final", "0.05", "--out", str(out)]) == 0
    meta, cols = read_table(out)
    assert len(cols["phi"]) == 80 and meta["scheme"] == "proposed"
    assert main(["simulate", "--nx", "40", "--steps", "5", "--scheme", "viscous"]) == 0
    assert capsys.readouterr().out.splitlines()[-1].count(",") == 1
    out = tmp_path / "c.csv"
    assert main(["compare", "--nx", "80", "--ic", "sin", "--t-final", "0.05", "--out", str(out)]) == 0
    assert "max_abs_diff" in capsys.readouterr().err


def test_cli_oracle(tmp_path, capsys):
    assert main(["oracle", "--probe", "0.0", "--epsilon", "0.0002"]) == 0
    assert float(capsys.readouterr().out) == pytest.approx(0.6, abs=0.01)
    out = tmp_path / "o.csv"
    assert main(["oracle", "--epsilons", "0.4,0.1,0.01", "--probe", "0.4", "--out", str(out)]) == 0
    assert len(read_table(out)[1]["epsilon"]) == 3
    assert main(["oracle", "--nx", "11", "--out", str(out)]) == 0
    assert len(read_table(out)[1]["x"]) == 11


def test_cli_figure(tmp_path):
    out = tmp_path / "f.csv"
    assert main(["figure", "12", "--out", str(out)]) == 0
    assert read_table(out)[0]["figure"] == "12"


def test_cli_exit_codes(tmp_path, capsys):
    assert main(["simulate", "--cfl", "1.5", "--nx", "40", "--t-final", "0.01"]) == 3
    assert main(["riemann", "--a-left", "0", "--a-right", "0"]) in (0, 2)
    assert main(["oracle", "--epsilons", "0.1,0.2"]) == 2
    missing = tmp_path / "nope" / "x.csv"
    assert main(["simulate", "--nx", "40", "--t-final", "0.01", "--out", str(missing)]) == 4
    with pytest.raises(SystemExit) as exc:
        main(["simulate", "--t-final", "1", "--steps", "3"])
    assert exc.value.code == 2
