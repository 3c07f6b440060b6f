import math

import pytest

from nhmorse import cli, morse
from nhmorse.cli import GridSpec
from nhmorse.morse import MorseParameters, ParameterMap
from nhmorse.susy import Sector

FIG_ROWS = 61 * 41


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGrid:
    def test_shape_and_header(self, capsys):
        code, out, _ = run(capsys, "grid")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "x,K,y,re,im"
        assert len(lines) == FIG_ROWS + 1

    def test_deterministic(self, capsys):
        _, first, _ = run(capsys, "grid")
        _, second, _ = run(capsys, "grid")
        assert first == second

    def test_k_zero_rows_real(self, capsys):
        code, out, _ = run(capsys, "grid", "--component", "bosonic")
        assert code == 0
        for line in out.splitlines()[1:]:
            x, K, y, re, im = line.split(",")
            if float(K) == 0.0:
                assert abs(float(im)) <= 1e-12

    def test_ordering(self, capsys):
        _, out, _ = run(capsys, "grid", "--nx", "3", "--nK", "2")
        rows = [line.split(",") for line in out.splitlines()[1:]]
        ks = [float(r[1]) for r in rows]
        xs = [float(r[0]) for r in rows]
        assert ks == sorted(ks)
        assert xs == [0.0, 1.5, 3.0, 0.0, 1.5, 3.0]

    def test_corner_value_round_trips(self, capsys):
        _, out, _ = run(capsys, "grid")
        first_row = out.splitlines()[1].split(",")
        assert float(first_row[0]) == 0.0 and float(first_row[1]) == 0.0
        expected = morse.wavefunction_laguerre_form(
            MorseParameters(), Sector.BOSONIC, ParameterMap.PRINTED, 0.0
        )
        assert float(first_row[3]) == expected.real
        assert float(first_row[4]) == expected.imag

    def test_param_maps_differ(self, capsys):
        _, printed, _ = run(capsys, "grid", "--nx", "5", "--nK", "3", "--param-map", "printed")
        _, derived, _ = run(capsys, "grid", "--nx", "5", "--nK", "3", "--param-map", "derived")
        assert printed != derived

    def test_out_file(self, capsys, tmp_path):
        path = tmp_path / "grid.csv"
        code, out, _ = run(capsys, "grid", "--nx", "3", "--nK", "2", "--out", str(path))
        assert code == 0 and out == ""
        text = path.read_text()
        assert text.startswith("x,K,y,re,im\n")
        assert text.count("\n") == 7

    def test_solution_kinds(self, capsys):
        code_w, out_w, _ = run(capsys, "grid", "--nx", "3", "--nK", "2",
                               "--solution", "w", "--beta", "1,0", "--K-min", "0.5")
        code_mix, out_mix, _ = run(capsys, "grid", "--nx", "3", "--nK", "2",
                                   "--solution", "mix", "--beta", "0.5,0.5", "--K-min", "0.5")
        assert code_w == 0 and code_mix == 0
        assert out_w != out_mix

    def test_flag_error_exits_2(self, capsys):
        code, _, _ = run(capsys, "grid", "--component", "spinless")
        assert code == 2

    def test_evaluation_error_exits_1(self, capsys):
        # printed map at K'=1, K=0 gives integer 2*mu+1; the W solution
        # then fails with a message naming the point
        code, _, err = run(capsys, "grid", "--solution", "w", "--beta", "1,0",
                           "--Kprime", "1", "--nx", "2", "--nK", "2")
        assert code == 1
        assert "K=0" in err and "x=0" in err


class TestParams:
    def test_fig_values(self, capsys):
        code, out, _ = run(capsys, "params", "--K", "0")
        assert code == 0
        assert "mu_printed" in out and "4 " in out
        assert "4.4721359549995796" in out
        assert "C1_bar" in out and "5" in out

    def test_default_k_is_zero(self, capsys):
        _, explicit, _ = run(capsys, "params", "--K", "0")
        _, default, _ = run(capsys, "params")
        assert explicit == default

    def test_y_range(self, capsys):
        _, out, _ = run(capsys, "params")
        line = next(ln for ln in out.splitlines() if ln.startswith("y(x_min)"))
        assert line.split()[-1] == "8"


class TestBoundStates:
    def test_paper_convention_rows(self, capsys):
        code, out, _ = run(capsys, "bound-states", "--convention", "paper")
        assert code == 0
        lines = out.splitlines()
        assert lines[1].startswith("0  1  2")
        assert lines[2].startswith("1  0.5  1")
        assert len(lines) == 3

    def test_shifted_convention_rows(self, capsys):
        code, out, _ = run(capsys, "bound-states", "--convention", "shifted")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 2
        assert lines[1].startswith("0  0.5  1")

    def test_no_bound_states(self, capsys):
        code, out, _ = run(capsys, "bound-states", "--A", "1", "--a", "2",
                           "--convention", "shifted")
        assert code == 0
        assert "no bound states" in out

    def test_shifted_matched_residual_small(self, capsys):
        _, out, _ = run(capsys, "bound-states", "--convention", "shifted")
        row = out.splitlines()[1].split()
        assert float(row[4]) <= 1e-8  # matched eigenvalue solves the ODE
        assert float(row[3]) > 1e-3   # published real K' does not


class TestVerify:
    def test_single_check(self, capsys):
        code, out, _ = run(capsys, "verify", "--only", "rk4-order")
        assert code == 0
        assert out.startswith("PASS rk4-order")

    def test_unknown_check(self, capsys):
        code, _, err = run(capsys, "verify", "--only", "nope")
        assert code == 2
        assert "unknown check" in err

    def test_tol_override_can_fail(self, capsys):
        code, out, _ = run(capsys, "verify", "--only", "kummer-oracle", "--tol", "1e-16")
        assert code == 1
        assert out.startswith("FAIL")


class TestMisc:
    def test_no_command_exits_2(self, capsys):
        code, _, _ = run(capsys)
        assert code == 2

    def test_parse_complex(self):
        assert cli._parse_complex("1.5") == 1.5 + 0.0j
        assert cli._parse_complex("1,-2") == 1.0 - 2.0j
        with pytest.raises(Exception):
            cli._parse_complex("1,2,3")

    def test_render_grid_spec_defaults(self):
        text = cli.render_grid(GridSpec(nx=2, nK=2))
        assert text.splitlines()[0] == "x,K,y,re,im"
        assert text.endswith("\n")
