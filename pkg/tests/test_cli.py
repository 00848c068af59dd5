"""End-to-end tests of the command line interface."""

import json

import pytest

from cuspred.cli import datum_from_obj, datum_to_obj, group_from_obj, group_to_obj, main
from cuspred.fixtures import gallery, gallery_entry


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    assert err == ""
    return code, json.loads(out)


def datum_text(name: str) -> str:
    return json.dumps(datum_to_obj(gallery_entry(name).datum))


class TestSerialization:
    def test_datum_round_trip(self):
        for entry in gallery():
            obj = datum_to_obj(entry.datum)
            assert datum_from_obj(json.loads(json.dumps(obj))) == entry.datum

    def test_group_round_trip(self):
        for entry in gallery():
            group = entry.datum.group
            assert group_from_obj(group_to_obj(group)) == group

    def test_schema_shape(self):
        obj = datum_to_obj(gallery_entry("sp6").datum)
        assert set(obj) == {"group", "parahoric", "supports"}
        assert set(obj["group"]) == {"family", "epsilon", "witt_index", "aniso", "field"}
        assert obj["parahoric"] == {"n1": 2, "n2": 1}
        # x - 1 over F3, constant term first
        assert obj["supports"][0] == [{"poly": [2, 1], "m": 1}]


class TestValidate:
    def test_valid_datum(self, capsys):
        code, rep = run_json(capsys, "validate", datum_text("sp6"))
        assert code == 0
        assert rep["valid"] is True
        assert all(f["clauses"]["a"] == "pass" for f in rep["factors"])

    def test_budget_violation_names_clause_c(self, capsys):
        obj = datum_to_obj(gallery_entry("sp6").datum)
        obj["supports"][0][0]["m"] = 2
        code, rep = run_json(capsys, "validate", json.dumps(obj))
        assert code == 1
        assert rep["valid"] is False
        bad = rep["factors"][0]["clauses"]["c"]
        assert "exponent total" in bad

    def test_non_maximal_parahoric_rejected(self, capsys):
        obj = datum_to_obj(gallery_entry("so8").datum)
        obj["parahoric"] = {"n1": 1, "n2": 3}
        obj["supports"] = [[], []]
        code, rep = run_json(capsys, "validate", json.dumps(obj))
        assert code == 1
        assert rep["parahoric_maximal"] is False


class TestDescribe:
    def test_sp6_report(self, capsys):
        code, rep = run_json(capsys, "describe", datum_text("sp6"))
        assert code == 0
        assert rep["identity"] == {"lhs": 7, "rhs": 7, "ok": True}
        assert rep["ired"] == [["x-1", "2"], ["x-1", "1"], ["x+1", "1"], ["x+1", "1"]]
        assert rep["representations"]["total"] == 2
        assert rep["shapes"]["count"] == 1

    def test_markdown_keeps_fractions(self, capsys):
        code, out, _ = run(capsys, "describe", datum_text("u14"))
        assert code == 0
        assert "5/2" in out
        assert "2.5" not in out

    def test_markdown_states_identity(self, capsys):
        code, out, _ = run(capsys, "describe", datum_text("sp6"))
        assert code == 0
        assert "identity: 7 = 7" in out

    def test_json_output_is_byte_deterministic(self, capsys):
        _, first, _ = run(capsys, "describe", datum_text("so20"), "--format", "json")
        _, second, _ = run(capsys, "describe", datum_text("so20"), "--format", "json")
        assert first == second


class TestPacket:
    def test_so8_census_and_doubling_note(self, capsys):
        code, rep = run_json(capsys, "packet", datum_text("so8"))
        assert code == 0
        assert rep["census"] == {"data": 2, "total": 2}
        assert rep["packet"]["multiple"] == "1/2"
        assert rep["orthogonal"] == {"per_datum": 2, "total": 4, "multiple": "1"}
        assert any("full orthogonal doubling" in note for note in rep["notes"])

    def test_sp6_swap_sets(self, capsys):
        code, rep = run_json(capsys, "packet", datum_text("sp6"))
        assert code == 0
        assert rep["census"] == {"data": 4, "total": 8}
        assert [c["swaps"] for c in rep["companions"]] == [
            [], ["x-1"], ["x+1"], ["x-1", "x+1"]]
        assert rep["stratification"]["free"] == ["x-1", "x+1"]


class TestCrossform:
    def test_u14_finds_quasi_split_form(self, capsys):
        code, rep = run_json(capsys, "crossform", datum_text("u14"))
        assert code == 0
        totals = {f["group"]: f["census_total"] for f in rep["forms"]}
        assert totals == {"U(14)[w7,a00,e+]/F3": 1}

    def test_so20_split_form_total(self, capsys):
        code, rep = run_json(capsys, "crossform", datum_text("so20"))
        assert code == 0
        totals = {f["group"]: f["census_total"] for f in rep["forms"]}
        assert totals["SO(20)[w10,a00]/F3"] == 16


class TestEnumerate:
    GROUP = json.dumps(group_to_obj(gallery_entry("sp4").datum.group))

    def test_census_size(self, capsys):
        code, rep = run_json(capsys, "enumerate", self.GROUP, "--count")
        assert code == 0
        assert rep["count"] == 12
        assert "data" not in rep

    def test_degree_bound(self, capsys):
        code, rep = run_json(capsys, "enumerate", self.GROUP, "--degree", "2")
        assert code == 0
        assert rep["count"] == 8
        assert len(rep["data"]) == 8
        assert all(datum_from_obj(obj).group == gallery_entry("sp4").datum.group
                   for obj in rep["data"])


class TestSelfcheck:
    def test_small_sweep_passes(self, capsys):
        code, rep = run_json(capsys, "selfcheck", "--q", "3", "--dualdim", "5")
        assert code == 0
        assert rep["ok"] is True
        assert rep["failures"] == []
        assert rep["groups"] > 0 and rep["signatures"] > 0

    def test_single_check_selection(self, capsys):
        code, rep = run_json(capsys, "selfcheck", "--q", "3", "--dualdim", "4",
                             "--checks", "identity")
        assert code == 0
        assert rep["checks"] == ["identity"]

    def test_unknown_check_is_usage_error(self, capsys):
        code, out, err = run(capsys, "selfcheck", "--checks", "bogus")
        assert code == 2
        assert "bogus" in err


class TestExamples:
    def test_all_entries_match(self, capsys):
        code, rep = run_json(capsys, "examples")
        assert code == 0
        assert rep["all_match"] is True
        assert [e["name"] for e in rep["entries"]] == [
            "sp6", "sp4", "so8", "so20", "u14", "so5"]
        assert all(e["diffs"] == {} for e in rep["entries"])

    def test_single_entry_with_note(self, capsys):
        code, rep = run_json(capsys, "examples", "--name", "so5")
        assert code == 0
        entry = rep["entries"][0]
        assert entry["match"] is True
        assert "inconsistent" in entry["note"]


class TestErrorPaths:
    def test_malformed_json(self, capsys):
        code, out, err = run(capsys, "describe", '{"group": ')
        assert code == 2
        assert err.startswith("error:")

    def test_missing_keys(self, capsys):
        code, out, err = run(capsys, "describe", '{"group": {"family": "Sp"}}')
        assert code == 2

    def test_non_self_dual_polynomial(self, capsys):
        obj = datum_to_obj(gallery_entry("sp6").datum)
        obj["supports"][0][0]["poly"] = [1, 1, 1]  # x^2 + x + 1 is not self-dual
        code, out, err = run(capsys, "validate", json.dumps(obj))
        assert code == 2

    def test_missing_file(self, capsys):
        code, out, err = run(capsys, "describe", "/no/such/file.json")
        assert code == 2

    def test_unknown_gallery_name(self, capsys):
        code, out, err = run(capsys, "examples", "--name", "nope")
        assert code == 2

    def test_invalid_datum_on_describe(self, capsys):
        obj = datum_to_obj(gallery_entry("sp6").datum)
        obj["supports"][0][0]["m"] = 2
        code, out, err = run(capsys, "describe", json.dumps(obj))
        assert code == 1
        assert err.startswith("invalid input:")
