"""
CLI tests: commands run in-process through `run`, exit codes checked.
"""

import csv
import io
import json
from fractions import Fraction

import pytest

from lipset.bundled import bundled_chain, bundled_names, bundled_schedule, bundled_set
from lipset.cantor import OPEN_RATIO
from lipset.cli import create_parser, run
from lipset.cli.config import rule_from_args

TWO_BLOCKS = {
    "parts": [
        {"lo": "0", "hi": "1"},
        {"lo": "2", "hi": "3"},
    ]
}
UNIT = {"parts": [{"lo": "0", "hi": "1"}]}


@pytest.fixture
def two_blocks_file(tmp_path):
    path = tmp_path / "two_blocks.json"
    path.write_text(json.dumps(TWO_BLOCKS), encoding="utf-8")
    return str(path)


@pytest.fixture
def unit_file(tmp_path):
    path = tmp_path / "unit.json"
    path.write_text(json.dumps(UNIT), encoding="utf-8")
    return str(path)


def run_json(capsys, argv):
    code = run(argv)
    return code, json.loads(capsys.readouterr().out)


class TestParser:
    """
    Test argument parsing.
    """

    def test_no_command(self, capsys):
        """No command prints help and exits 2."""
        assert run([]) == 2
        assert "usage: lipset" in capsys.readouterr().out

    def test_bad_rational(self):
        """Rationals are validated by argparse."""
        with pytest.raises(SystemExit) as exc:
            create_parser().parse_args(["set", "distance", "x.json", "--point", "abc"])
        assert exc.value.code == 2

    def test_decimals_flag(self):
        """--decimals switches decimal columns on; --digits sets their precision."""
        args = create_parser().parse_args(["--decimals", "set", "measure", "a.json"])
        assert args.decimals is True and args.digits is None
        args = create_parser().parse_args(["--decimals", "--digits", "6", "set", "measure", "a.json"])
        assert args.digits == 6

    def test_decimal_columns(self, capsys):
        """CSV output gains a _dec twin."""
        argv = ["--format", "csv", "--decimals", "--digits", "3", "build", "bundled:unit", "--eval", "1/3"]
        assert run(argv) == 0
        assert capsys.readouterr().out == "x,f,f_dec\n1/3,1/3,0.333\n"


class TestSetCommands:
    """
    Test `lipset set`.
    """

    def test_measure_bundled(self, capsys):
        """The bundled level-1 set has measure 9/11."""
        assert run(["set", "measure", "bundled:level1"]) == 0
        assert capsys.readouterr().out == "9/11\n"

    def test_union(self, capsys, two_blocks_file, tmp_path):
        """[0,1] ∪ [2,3] ∪ [1,2] = [0,3]."""
        middle = tmp_path / "middle.json"
        middle.write_text(json.dumps({"parts": [{"lo": "1", "hi": "2"}]}), encoding="utf-8")
        code, data = run_json(capsys, ["set", "union", two_blocks_file, str(middle)])
        assert code == 0
        assert data == {"parts": [{"lo": "0", "hi": "3", "lo_closed": True, "hi_closed": True}]}

    def test_complement_in_window(self, capsys):
        """Window complement of the level-1 set."""
        code, data = run_json(capsys, ["set", "complement", "bundled:level1", "--window", "0", "1"])
        assert code == 0
        assert [(p["lo"], p["hi"]) for p in data["parts"]] == [
            ("0", "0"),
            ("3/11", "4/11"),
            ("7/11", "8/11"),
            ("1", "1"),
        ]

    def test_distance_csv(self, capsys):
        """Distances as CSV."""
        code = run(["--format", "csv", "set", "distance", "bundled:level1", "--point", "1/2", "2"])
        assert code == 0
        assert capsys.readouterr().out == "x,distance\n1/2,0\n2,1\n"

    def test_contiguous(self, capsys, two_blocks_file):
        """Three contiguous intervals around two blocks."""
        code, data = run_json(capsys, ["set", "contiguous", two_blocks_file])
        assert code == 0
        assert [(p["lo"], p["hi"]) for p in data["contiguous"]] == [
            ("-inf", "0"),
            ("1", "2"),
            ("3", "+inf"),
        ]

    def test_missing_file(self, capsys, tmp_path):
        """Unreadable input is an input error."""
        assert run(["set", "measure", str(tmp_path / "missing.json")]) == 2
        assert capsys.readouterr().err.startswith("Error:")

    def test_out_file(self, tmp_path):
        """-o writes the result to a file."""
        out = tmp_path / "out" / "measure.txt"
        assert run(["-o", str(out), "set", "measure", "bundled:level1"]) == 0
        assert out.read_text(encoding="utf-8") == "9/11\n"


class TestBuildAndScan:
    """
    Test `lipset build`, `lipset profile` and `lipset lipscan`.
    """

    def test_build_eval(self, capsys):
        """f(1/2) = 1/2 and f(2) = 1 for the unit chain, as CSV by default."""
        assert run(["build", "bundled:unit", "--eval", "1/2", "2"]) == 0
        assert capsys.readouterr().out == "x,f\n1/2,1/2\n2,1\n"

    def test_build_eval_json(self, capsys):
        """--format json gives one object per point."""
        argv = ["--format", "json", "build", "bundled:unit", "--eval", "1/2", "2"]
        code, data = run_json(capsys, argv)
        assert code == 0
        assert data == [{"x": "1/2", "f": "1/2"}, {"x": "2", "f": "1"}]

    def test_build_grid_csv(self, capsys):
        """Grid evaluation as CSV."""
        assert run(["--format", "csv", "build", "bundled:unit", "--grid", "0", "1", "2"]) == 0
        assert capsys.readouterr().out == "x,f\n0,0\n1/2,1/2\n1,1\n"

    def test_build_lists_stages(self, capsys):
        """Without points the stages are listed."""
        code, data = run_json(capsys, ["--format", "json", "build", "bundled:two_step"])
        assert code == 0
        assert [row["parts"] for row in data] == [2, 1]

    def test_profile_csv(self, capsys, two_blocks_file):
        """A density profile between the blocks."""
        code = run(["--format", "csv", "profile", two_blocks_file, "--point", "3/2", "--radii", "1"])
        assert code == 0
        assert capsys.readouterr().out == "x,r,left,right,max\n3/2,1,1/2,1/2,1/2\n"

    def test_profile_scan_fails(self, capsys, two_blocks_file):
        """A failing SOSD scan exits 1."""
        argv = [
            "--format", "json", "profile", two_blocks_file,
            "--point", "1", "--scan", "--rmin", "1/2", "--rmax", "2",
        ]
        code, data = run_json(capsys, argv)
        assert code == 1
        assert data[0]["verdict"] == "FAIL"
        assert data[0]["min_max_density"] == "1/2"

    def test_profile_scan_passes(self, capsys, unit_file):
        """x = 1 in [0,1] passes."""
        argv = ["profile", unit_file, "--point", "1", "--scan", "--rmin", "1/64", "--rmax", "1"]
        assert run(argv) == 0

    def test_profile_needs_mode(self, capsys, unit_file):
        """Neither --radii nor --scan is an input error."""
        assert run(["profile", unit_file, "--point", "1"]) == 2
        assert "--radii" in capsys.readouterr().err

    def test_lipscan(self, capsys):
        """lip f(1/3) ≥ 1 on every scanned radius."""
        argv = [
            "--format", "json", "lipscan", "bundled:unit", "--point", "1/3", "3",
            "--rmin", "1/64", "--rmax", "1/16", "--refinement", "8",
        ]
        code, data = run_json(capsys, argv)
        assert code == 0
        assert [est["x"] for est in data] == ["1/3", "3"]
        assert data[0]["lip_lower"] == "1"
        assert data[1]["Lip_lower"] == "0"


class TestCantorCommands:
    """
    Test `lipset cantor`.
    """

    def test_level(self, capsys):
        """Level 1 of (0,11) has measure 9."""
        code, data = run_json(capsys, ["cantor", "level", "--b", "11", "--k", "1"])
        assert code == 0
        assert data["measure"] == "9"
        assert len(data["set"]["parts"]) == 3

    def test_stage_small(self, capsys):
        """Two generations of the small schedule."""
        code, data = run_json(capsys, ["cantor", "stage", "--schedule", "bundled:small", "--depth", "2"])
        assert code == 0
        assert data["projected_parts"] == 81
        assert data["f_components"] == 64
        assert data["ledger"]["removed"] == "13041/14641"

    def test_stage_ledger_only(self, capsys):
        """--ledger-only skips geometry."""
        code, data = run_json(capsys, ["cantor", "stage", "--ledger-only"])
        assert code == 0
        assert data["materialized"] is False
        assert "f_components" not in data

    def test_windows(self, capsys):
        """The critical window check passes."""
        argv = [
            "--format", "json", "cantor", "windows",
            "--schedule", "bundled:small", "--depth", "2", "--mode", "critical",
        ]
        code, data = run_json(capsys, argv)
        assert code == 0
        assert data["passed"] is True
        assert data["max_density"] == "1/2"

    def test_budget_exceeded(self, capsys, tmp_path):
        """A schedule over budget is an input error."""
        path = tmp_path / "schedule.json"
        path.write_text(json.dumps({"levels": [1], "budget": "1/2"}), encoding="utf-8")
        assert run(["cantor", "stage", "--schedule", str(path)]) == 2
        assert "overshoot" in capsys.readouterr().err

    def test_full_with_scan(self, capsys):
        """Seeded union points of three tiles pass the scan at 1/2."""
        argv = [
            "--seed", "7", "cantor", "full", "--copies", "3",
            "--points", "5", "--rmin", "1/1024", "--rmax", "1/16",
        ]
        code, data = run_json(capsys, argv)
        assert code == 0
        assert len(data["scans"]) == 5
        assert all(scan["verdict"] == "PASS" for scan in data["scans"])

    def test_full_scan_needs_radii(self, capsys):
        """--points without radii is an input error."""
        assert run(["cantor", "full", "--points", "3"]) == 2


class TestVerifyCommand:
    """
    Test `lipset verify`.
    """

    def test_intervals_suite(self, capsys):
        """A passing suite exits 0 with a fingerprinted report."""
        code, data = run_json(capsys, ["verify", "--suite", "intervals", "--samples", "10"])
        assert code == 0
        assert data["passed"] is True
        assert len(data["fingerprint"]) == 64

    def test_factor_two_fails(self, capsys):
        """An oversized step factor fails and names the condition."""
        code = run(["verify", "--suite", "builder", "--samples", "5", "--factor", "2"])
        captured = capsys.readouterr()
        assert code == 1
        assert "FAILED [fail] builder/breakpoint_conditions condition=(II)" in captured.err


def csv_rows(text):
    return list(csv.DictReader(io.StringIO(text)))


class TestDefaultFormats:
    """
    Test the per-command output shape when --format is not given.
    """

    def test_measure_is_bare(self, capsys):
        """set measure prints the rational alone."""
        assert run(["set", "measure", "bundled:two_blocks"]) == 0
        assert capsys.readouterr().out == "2\n"

    def test_measure_json(self, capsys):
        """--format json wraps the measure in an object."""
        code, data = run_json(capsys, ["--format", "json", "set", "measure", "bundled:level1"])
        assert code == 0
        assert data == {"measure": "9/11"}

    def test_distance_is_bare(self, capsys):
        """set distance prints one value per point."""
        assert run(["set", "distance", "bundled:level1", "--point", "1/2", "2"]) == 0
        assert capsys.readouterr().out == "0\n1\n"

    def test_build_is_csv(self, capsys):
        assert run(["build", "bundled:unit", "--eval", "1/4"]) == 0
        assert capsys.readouterr().out.splitlines()[0] == "x,f"

    def test_profile_is_csv(self, capsys):
        assert run(["profile", "bundled:two_blocks", "--point", "3/2", "--radii", "1"]) == 0
        assert capsys.readouterr().out.splitlines()[0] == "x,r,left,right,max"

    def test_lipscan_is_csv(self, capsys):
        """Radius rows, a blank line, then the summary block."""
        argv = ["lipscan", "bundled:unit", "--point", "3", "--rmin", "1/4", "--rmax", "1/2"]
        assert run(argv) == 0
        head, tail = capsys.readouterr().out.split("\n\n")
        assert head.splitlines()[0] == "x,r,mf_lower,mf_upper"
        assert tail.splitlines()[0] == "x,lip_lower,lip_upper,Lip_lower,Lip_upper"

    def test_union_is_json(self, capsys):
        code, data = run_json(capsys, ["set", "union", "bundled:two_blocks", "bundled:level1"])
        assert code == 0
        assert data["parts"][0]["lo"] == "0"

    def test_explicit_format_wins(self, capsys):
        """An explicit --format overrides the command default."""
        argv = ["--format", "json", "set", "distance", "bundled:level1", "--point", "2"]
        code, data = run_json(capsys, argv)
        assert code == 0
        assert data == [{"x": "2", "distance": "1"}]


EXAMPLES = [
    (["set", "measure", "bundled:level1"], "9/11\n"),
    (["set", "measure", "bundled:two_blocks", "--window", "1/2", "5/2"], "1\n"),
    (["set", "distance", "bundled:two_blocks", "--point", "3/2", "4"], "1/2\n1\n"),
    (["build", "bundled:unit", "--eval", "1/2", "2", "3"], "x,f\n1/2,1/2\n2,1\n3,1\n"),
    (
        ["build", "bundled:two_step", "--eval", "5/2", "191/128", "1"],
        "x,f\n5/2,3/2\n191/128,129/128\n1,1\n",
    ),
    (
        ["build", "bundled:half_lines", "--eval", "1/2", "-7.125", "7.1875"],
        "x,f\n1/2,1/2\n-57/8,1/8\n115/16,17/16\n",
    ),
    (["build", "bundled:disjoint_steps", "--nest", "--eval", "19/8"], "x,f\n19/8,9/8\n"),
    (
        ["profile", "bundled:two_blocks", "--point", "3/2", "--radii", "1"],
        "x,r,left,right,max\n3/2,1,1/2,1/2,1/2\n",
    ),
    (
        [
            "lipscan", "bundled:unit", "--point", "3",
            "--rmin", "1/4", "--rmax", "1/2", "--refinement", "64",
        ],
        "x,r,mf_lower,mf_upper\n3,1/2,0,1/128\n3,1/4,0,1/128\n"
        "\nx,lip_lower,lip_upper,Lip_lower,Lip_upper\n3,0,1/128,0,1/128\n",
    ),
    (
        [
            "lipscan", "bundled:unit", "--point", "1/2",
            "--rmin", "1/8", "--rmax", "1/4", "--refinement", "64",
        ],
        "x,r,mf_lower,mf_upper\n1/2,1/4,1,129/128\n1/2,1/8,1,129/128\n"
        "\nx,lip_lower,lip_upper,Lip_lower,Lip_upper\n1/2,1,129/128,1,129/128\n",
    ),
]


class TestBundledExamples:
    """
    Test every shipped example end to end through `run`.
    """

    @pytest.mark.parametrize(
        "argv,expected", EXAMPLES, ids=[" ".join(argv) for argv, _ in EXAMPLES]
    )
    def test_example_output(self, capsys, argv, expected):
        assert run(argv) == 0
        assert capsys.readouterr().out == expected

    @pytest.mark.parametrize("ref", bundled_names())
    def test_every_bundled_file_loads(self, ref):
        kind, name = ref.split(":")
        if kind == "chain":
            assert bundled_chain(name, nest=True).depth >= 1
        elif kind == "schedule":
            assert bundled_schedule(name).levels
        else:
            assert bundled_set(name)

    def test_two_blocks_scan_passes(self, capsys):
        """Right of x = 1 the block [0,1] keeps the max density at 1."""
        argv = [
            "--format", "json", "profile", "bundled:two_blocks", "--point", "1",
            "--scan", "--rmin", "1/64", "--rmax", "1", "--threshold", "99/100",
        ]
        code, data = run_json(capsys, argv)
        assert code == 0
        assert data[0]["verdict"] == "PASS"
        assert data[0]["min_max_density"] == "1"

    def test_gappy_scan_fails(self, capsys):
        """Shrinking blocks near 0 push both one-sided densities under 1/2."""
        argv = [
            "--format", "json", "profile", "bundled:gappy", "--point", "0",
            "--scan", "--rmin", "1/256", "--rmax", "1/4",
        ]
        code, data = run_json(capsys, argv)
        assert code == 1
        assert data[0]["verdict"] == "FAIL"

    def test_single_generation_windows(self, capsys):
        """One generation at level 1: the middle gap is checked at its midpoint."""
        argv = ["cantor", "windows", "--schedule", "bundled:single", "--depth", "1"]
        assert run(argv) == 0
        rows = csv_rows(capsys.readouterr().out)
        assert any(row["x"] == "7/22" for row in rows)
        assert all(Fraction(row["density"]) <= Fraction(1, 2) for row in rows)

    def test_single_generation_report(self, capsys):
        argv = ["--format", "json", "cantor", "windows", "--schedule", "bundled:single"]
        code, data = run_json(capsys, argv)
        assert code == 0
        assert data["max_density"] == "1/2"

    def test_level_two(self, capsys):
        code, data = run_json(capsys, ["cantor", "level", "--k", "2"])
        assert code == 0
        assert len(data["set"]["parts"]) == 9
        assert data["measure"] == "81/121"

    def test_default_stage_ledger(self, capsys):
        """The default first generation removes (9/11)^12 of the window."""
        code, data = run_json(capsys, ["cantor", "stage", "--ledger-only"])
        assert code == 0
        assert data["ledger"]["generations"][0]["removed"] == str(OPEN_RATIO**12)

    def test_full_measure_two_copies(self, capsys):
        """ε = 1/4 over two tiles leaves (9/11)^9 uncovered."""
        code, data = run_json(capsys, ["cantor", "full", "--epsilon", "1/4", "--copies", "2"])
        assert code == 0
        assert len(data["tiles"]) == 2
        assert data["uncovered"] == str(OPEN_RATIO**9)
        assert Fraction(data["uncovered"]) <= Fraction(1, 4)


class TestBundledNest:
    """
    Test that --nest and --diagnose reach bundled chains.
    """

    def test_disjoint_needs_nest(self, capsys):
        assert run(["build", "bundled:disjoint_steps", "--eval", "19/8"]) == 2
        assert "stage 1 is not contained in stage 2" in capsys.readouterr().err

    def test_nest_unions_stages(self, capsys):
        argv = ["--format", "json", "build", "bundled:disjoint_steps", "--nest"]
        code, data = run_json(capsys, argv)
        assert code == 0
        assert [row["parts"] for row in data] == [1, 2]


class TestWindowsMaterialize:
    """
    Test that `cantor windows` honours the materialize limit.
    """

    def test_large_stage_needs_flag(self, capsys):
        """3^12 parts is over the limit, so the check asks for --materialize."""
        assert run(["cantor", "windows"]) == 2
        assert "--materialize" in capsys.readouterr().err

    def test_flags_are_exclusive(self):
        with pytest.raises(SystemExit):
            create_parser().parse_args(["cantor", "stage", "--materialize", "--ledger-only"])

    def test_windows_has_no_ledger_only(self):
        with pytest.raises(SystemExit):
            create_parser().parse_args(["cantor", "windows", "--ledger-only"])


class TestStepRule:
    """
    Test --factor and --exact-steps.
    """

    def test_default_rule_is_dyadic(self):
        rule = rule_from_args(create_parser().parse_args(["build", "bundled:unit"]))
        assert rule.dyadic is True
        assert rule.factor == Fraction(1, 4)

    def test_exact_steps(self):
        argv = ["lipscan", "bundled:unit", "--point", "1", "--exact-steps"]
        args = create_parser().parse_args(argv)
        assert rule_from_args(args).dyadic is False

    def test_factor(self):
        args = create_parser().parse_args(["verify", "--factor", "1/8", "--exact-steps"])
        rule = rule_from_args(args)
        assert rule.factor == Fraction(1, 8) and rule.dyadic is False
