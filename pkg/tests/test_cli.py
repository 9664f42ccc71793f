import json

from symdual.cli import EXIT_CAP, EXIT_OK, EXIT_SCHEMA, main

TRIANGLE = json.dumps({
    "c": 3,
    "generators": [{"counts": [
        {"support": [1, 2], "count": 1},
        {"support": [1, 3], "count": 1},
        {"support": [2, 3], "count": 1},
    ]}],
})

TWO_ORBIT = json.dumps({
    "c": 3,
    "generators": [
        {"matrix": [[1, 1, 1], [1, 1, 0], [0, 0, 1]]},
        {"matrix": [[1, 0, 0], [1, 1, 1], [0, 1, 1]]},
    ],
})

EDGE = json.dumps({"c": 2, "generators": [{"counts": {"[1, 2]": 1}}]})

CONE = json.dumps({
    "k": 3,
    "lower": [
        {"support": [1], "bound": 1},
        {"support": [2], "bound": 1},
        {"support": [3], "bound": 1},
        {"support": [1, 2], "bound": 3},
    ],
})


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["schema"] == "symdual/1"
    return doc


class TestDualGens:
    def test_two_orbit_n4(self, capsys):
        doc = run_json(capsys, "dual-gens", "--json", TWO_ORBIT, "--n", "4")
        assert doc["count"] == 14
        assert len(doc["orbits"]) == 14

    def test_deterministic_output(self, capsys):
        _, first = run(capsys, "dual-gens", "--json", TRIANGLE, "--n", "5")
        _, second = run(capsys, "dual-gens", "--json", TRIANGLE, "--n", "5")
        assert first == second


class TestCountAndFit:
    def test_count_then_fit_closed_form(self, capsys):
        doc = run_json(capsys, "count", "--json", TRIANGLE, "--n", "4..9")
        assert [s["count"] for s in doc["samples"]] == [15, 25, 36, 48, 61, 75]
        fit = run_json(capsys, "fit", "--json", TRIANGLE, "--n", "4..9")
        assert fit["fit"]["coeffs"] == ["-15", "11/2", "1/2"]
        assert fit["fit"]["stable_from"] == 4

    def test_edge_count(self, capsys):
        doc = run_json(capsys, "count", "--json", EDGE, "--n", "2..6")
        assert [s["count"] for s in doc["samples"]] == [3, 4, 5, 6, 7]


class TestMinDegree:
    def test_single_width(self, capsys):
        doc = run_json(capsys, "min-degree", "--json", EDGE, "--n", "5")
        assert doc["degree"] == 5 and doc["count"] == 6

    def test_series(self, capsys):
        doc = run_json(capsys, "min-degree", "--json", EDGE, "--n", "2..7")
        assert doc["slope"] == 1 and doc["intercept"] == 0


class TestFacesAndFacets:
    def test_faces(self, capsys):
        doc = run_json(capsys, "faces", "--json", EDGE, "--j", "1", "--n", "3..5")
        assert [s["count"] for s in doc["samples"]] == [3, 3, 3]

    def test_facets(self, capsys):
        doc = run_json(capsys, "facets", "--json", EDGE, "--n", "4")
        assert doc["histogram"] == {"3": 5}


class TestCone:
    def test_worked_example(self, capsys):
        doc = run_json(capsys, "cone", "--json", CONE, "--n", "0..6")
        assert not doc["empty"]
        counts = {s["n"]: s["count"] for s in doc["slices"]}
        assert counts[5] == 5 and counts[3] == 0


class TestMatch:
    def test_feasible(self, capsys):
        doc = run_json(
            capsys,
            "match",
            "--json",
            json.dumps({"c": 2, "f": [[1], [2]], "g": [[1], [2]]}),
        )
        assert doc["feasible"] and doc["permutation"] == [2, 1]

    def test_infeasible_has_certificate(self, capsys):
        doc = run_json(
            capsys,
            "match",
            "--json",
            json.dumps({"c": 1, "f": [[1]], "g": [[1]]}),
        )
        assert not doc["feasible"]
        assert doc["violating_ideal"] == [[1]]


class TestVerify:
    def test_two_orbit(self, capsys):
        doc = run_json(capsys, "verify", "--json", TWO_ORBIT, "--n", "3..4")
        assert doc["ok"]
        assert doc["checks"]["min_gens_oracle_equal"] == 2

    def test_disagreement_exits_4(self, capsys, monkeypatch):
        from symdual import cli as cli_module

        monkeypatch.setattr(
            cli_module.oracle, "brute_min_gens_dual", lambda system, n: frozenset()
        )
        code, _ = run(capsys, "verify", "--json", TWO_ORBIT, "--n", "3")
        assert code == 4


class TestErrors:
    def test_bad_json_is_schema_error(self, capsys):
        code, _ = run(capsys, "count", "--json", "{not json", "--n", "3")
        assert code == EXIT_SCHEMA

    def test_missing_n(self, capsys):
        code, _ = run(capsys, "count", "--json", EDGE)
        assert code == EXIT_SCHEMA

    def test_cap_exceeded(self, capsys):
        big = json.dumps({
            "c": 5,
            "generators": [{"counts": [{"support": [1], "count": 1}]}],
        })
        code, _ = run(capsys, "dual-gens", "--json", big, "--n", "3")
        assert code == EXIT_CAP

    def test_width_too_small(self, capsys):
        code, _ = run(capsys, "dual-gens", "--json", TWO_ORBIT, "--n", "2")
        assert code == EXIT_SCHEMA


class TestTableFormat:
    def test_count_table(self, capsys):
        code, out = run(
            capsys, "count", "--json", EDGE, "--n", "2..4", "--format", "table"
        )
        assert code == EXIT_OK
        assert "n" in out and "count" in out and "5" in out
