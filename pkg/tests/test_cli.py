import json

import pytest

from mesolabe.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


class TestSolveChords:
    def test_text_layout_matches_the_print(self, capsys):
        code, out = run(capsys, "solve-chords", "--diameter", "2", "--digits", "10")
        assert code == 0
        assert "63534 43923" in out
        assert "93114 24637" in out
        assert "1 36465 56077" in out
        assert "2 00000 00000" in out
        assert "verified: ok" in out

    def test_json_carries_same_digits(self, capsys):
        code, out = run(capsys, "solve-chords", "--diameter", "2", "--digits", "10", "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["chords"]["AB"]["grouped"] == "63534 43923"
        assert payload["chords"]["AB"]["value"] == "0.6353443923"
        assert payload["verified"] is True

    def test_bad_diameter_is_usage_error(self, capsys):
        assert main(["solve-chords", "--diameter", "-2"]) == 2


class TestVerifyTable:
    def test_misprints_annotated(self, capsys):
        code, out = run(capsys, "verify-table")
        assert code == 0
        assert out.count("MISPRINT") == 3
        assert "printed as 1 17068 87846 00000 00000" in out
        assert "table verification: ok" in out

    def test_json_carries_both_channels(self, capsys):
        code, out = run(capsys, "verify-table", "--json")
        payload = json.loads(out)
        by_label = {row["label"]: row for row in payload["products"]}
        assert by_label["BD^2"]["as_printed"] == "1 86288 49276 27056 29929"
        assert by_label["BD^2"]["as_computed"] == "1 86228 49276 27056 29929"
        assert by_label["BD^2"]["misprint"] is True
        assert by_label["ADBC"]["misprint"] is False


class TestPyramid:
    def test_right_case(self, capsys):
        code, out = run(capsys, "pyramid", "--edges", "3", "4", "12", "--digits", "10")
        assert code == 0
        assert "squared diagonal: 169" in out
        assert "diagonal: 13.0000000000" in out

    def test_oblique_case(self, capsys):
        code, out = run(
            capsys, "pyramid", "--edges", "1", "1", "1",
            "--cosines", "1/2", "1/2", "1/2", "--digits", "10",
        )
        assert code == 0
        assert "squared diagonal (exact): 6" in out

    def test_infeasible_cosines_usage_error(self, capsys):
        code = main(["pyramid", "--edges", "1", "1", "1", "--cosines", "1", "1", "-1"])
        assert code == 2


class TestMeans:
    def test_json_m1(self, capsys):
        code, out = run(capsys, "means", "--a", "1", "--b", "2", "--digits", "10", "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["m1"] == "1.2599210499"
        assert payload["m2"] == "1.5874010520"

    def test_both_methods_agree(self, capsys):
        code, out = run(capsys, "means", "--a", "1", "--b", "2", "--method", "both")
        assert code == 0
        assert "solver parameters agree: ok" in out

    def test_text_and_json_share_numbers(self, capsys):
        _, text = run(capsys, "means", "--a", "2", "--b", "5", "--digits", "12")
        _, blob = run(capsys, "means", "--a", "2", "--b", "5", "--digits", "12", "--json")
        payload = json.loads(blob)
        assert f"m1 = {payload['m1']}" in text
        assert f"m2 = {payload['m2']}" in text
        assert f"t = {payload['theta']}" in text

    def test_inverted_inputs_usage_error(self, capsys):
        assert main(["means", "--a", "3", "--b", "2"]) == 2


class TestDuplicateCube:
    def test_reports_doubled_edge(self, capsys):
        code, out = run(capsys, "duplicate-cube", "--edge", "1", "--digits", "10")
        assert code == 0
        assert "1.2599210499" in out


class TestFourProportionals:
    def test_planar(self, capsys):
        code, out = run(capsys, "four-proportionals", "--ac", "2", "--t", "1/2",
                        "--digits", "10")
        assert code == 0
        assert "AD = 1.2000000000" in out
        assert "verified: ok" in out

    def test_sphere_matches_planar_values(self, capsys):
        _, planar = run(capsys, "four-proportionals", "--ac", "2", "--t", "1/3",
                        "--digits", "10", "--json")
        _, spherical = run(capsys, "four-proportionals", "--ac", "2", "--t", "1/3",
                           "--digits", "10", "--sphere", "--json")
        assert json.loads(planar)["quad"] == json.loads(spherical)["quad"]

    def test_degenerate_position_usage_error(self, capsys):
        assert main(["four-proportionals", "--ac", "2", "--t", "1"]) == 2


class TestCheckProps:
    def test_small_run_reports_all_hold(self, capsys):
        code, out = run(capsys, "check-props", "--seed", "42", "--instances", "30")
        assert code == 0
        assert "all propositions hold" in out
        assert "seed 42" in out

    def test_seed_changes_nothing_about_the_verdict(self, capsys):
        code, out = run(capsys, "check-props", "--seed", "9", "--instances", "20", "--json")
        payload = json.loads(out)
        assert payload["all_hold"] is True
        assert payload["seed"] == 9


class TestFigureCommand:
    def test_writes_svg(self, capsys, tmp_path):
        target = tmp_path / "fig1.svg"
        code, out = run(capsys, "figure", "--id", "1", "--out", str(target))
        assert code == 0
        assert target.read_text().startswith("<svg")
        assert "written to" in out

    def test_stdout_mode(self, capsys):
        code, out = run(capsys, "figure", "--id", "4", "--out", "-")
        assert code == 0
        assert out.startswith("<svg")


class TestDeterminismAndConfig:
    @pytest.mark.parametrize(
        "argv",
        [
            ["solve-chords", "--diameter", "2", "--digits", "10"],
            ["solve-chords", "--diameter", "2", "--digits", "10", "--json"],
            ["check-props", "--seed", "5", "--instances", "25"],
            ["figure", "--id", "6", "--out", "-"],
            ["verify-table", "--json"],
        ],
    )
    def test_byte_identical_reruns(self, capsys, argv):
        _, first = run(capsys, *argv)
        _, second = run(capsys, *argv)
        assert first == second

    def test_env_var_sets_default_digits(self, capsys, monkeypatch):
        monkeypatch.setenv("MESOLABE_DIGITS", "10")
        _, out = run(capsys, "means", "--a", "1", "--b", "2", "--json")
        assert json.loads(out)["m1"] == "1.2599210499"

    def test_flag_beats_env_var(self, capsys, monkeypatch):
        monkeypatch.setenv("MESOLABE_DIGITS", "5")
        _, out = run(capsys, "means", "--a", "1", "--b", "2", "--digits", "10", "--json")
        assert json.loads(out)["m1"] == "1.2599210499"

    def test_unknown_subcommand_is_usage_error(self, capsys):
        assert main(["florp"]) == 2

    def test_unknown_flag_is_usage_error(self, capsys):
        assert main(["means", "--a", "1", "--b", "2", "--frobnicate"]) == 2
