import io
import json

from antimagic.cli import (
    EXIT_INPUT,
    EXIT_OK,
    EXIT_REFUSED,
    EXIT_VERIFY_FAIL,
    main,
)


def run(capsys, monkeypatch, argv, stdin=""):
    monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestConstruct:
    def test_p3_tsv(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["construct", "-"], stdin="2\n")
        assert code == EXIT_OK
        lines = out.splitlines()
        assert "arc\t1\t0\t1" in lines
        assert "arc\t2\t0\t2" in lines
        assert "sum\t1\t-1" in lines
        assert "sum\t0\t3" in lines
        assert "sum\t2\t-2" in lines

    def test_dot_output(self, capsys, monkeypatch):
        code, out, _ = run(
            capsys, monkeypatch, ["construct", "-", "--format", "dot"], stdin="1 0 1 0 1\n"
        )
        assert code == EXIT_OK
        assert out.startswith("digraph")
        assert out.count("->") == 7

    def test_empty_input(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["construct", "-"], stdin="")
        assert code == EXIT_OK
        assert out == ""

    def test_comments_skipped(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["construct", "-"], stdin="# hi\n\n2\n")
        assert code == EXIT_OK
        assert out

    def test_parse_error_has_line_number(self, capsys, monkeypatch):
        code, _, err = run(capsys, monkeypatch, ["construct", "-"], stdin="2\n0 1 0\n")
        assert code == EXIT_INPUT
        assert "line 2" in err

    def test_file_input(self, capsys, monkeypatch, tmp_path):
        f = tmp_path / "input.txt"
        f.write_text("1 1 1\n")
        code, out, _ = run(capsys, monkeypatch, ["construct", str(f), "--format", "json"])
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc["n"] == 6
        assert len(doc["arcs"]) == 5
        assert doc["k1"] == 2 and doc["k2"] == 3


class TestVerify:
    def construct_json(self, capsys, monkeypatch, line):
        _, out, _ = run(
            capsys, monkeypatch, ["construct", "-", "--format", "json"], stdin=line
        )
        return json.loads(out)

    def test_round_trip(self, capsys, monkeypatch):
        doc = self.construct_json(capsys, monkeypatch, "1 0 1 0 1\n")
        code, out, _ = run(capsys, monkeypatch, ["verify", "-"], stdin=json.dumps(doc))
        assert code == EXIT_OK
        assert json.loads(out)["antimagic"] is True

    def test_swap_collision_detected(self, capsys, monkeypatch):
        doc = self.construct_json(capsys, monkeypatch, "1 1 1\n")
        # force two equal sums: both path-end leaves see labels 2 and 4;
        # swapping them makes both oriented sums equal in magnitude only,
        # so instead find a swap that actually collides by scanning
        arcs = doc["arcs"]
        found = None
        for i in range(len(arcs)):
            for j in range(i + 1, len(arcs)):
                trial = [dict(a) for a in arcs]
                trial[i]["label"], trial[j]["label"] = trial[j]["label"], trial[i]["label"]
                sums = {}
                for a in trial:
                    sums[a["to"]] = sums.get(a["to"], 0) + a["label"]
                    sums[a["from"]] = sums.get(a["from"], 0) - a["label"]
                for v in range(doc["n"]):
                    sums.setdefault(v, 0)
                if len(set(sums.values())) < doc["n"]:
                    found = trial
                    break
            if found:
                break
        assert found is not None
        mutated = {"n": doc["n"], "arcs": found}
        code, out, _ = run(capsys, monkeypatch, ["verify", "-"], stdin=json.dumps(mutated))
        assert code == EXIT_VERIFY_FAIL
        assert "duplicate_sum" in json.loads(out)["violations"]

    def test_non_bijection_rejected(self, capsys, monkeypatch):
        doc = {
            "n": 3,
            "arcs": [
                {"from": 0, "to": 1, "label": 1},
                {"from": 1, "to": 2, "label": 1},
            ],
        }
        code, _, err = run(capsys, monkeypatch, ["verify", "-"], stdin=json.dumps(doc))
        assert code == EXIT_INPUT
        assert "labels_not_bijection" in err

    def test_schema_violation(self, capsys, monkeypatch):
        code, _, _ = run(capsys, monkeypatch, ["verify", "-"], stdin="{\"arcs\": 3}")
        assert code == EXIT_INPUT

    def test_class_checks_from_json(self, capsys, monkeypatch):
        doc = self.construct_json(capsys, monkeypatch, "1 0 0 0 2\n")
        code, _, _ = run(capsys, monkeypatch, ["verify", "-"], stdin=json.dumps(doc))
        assert code == EXIT_OK


class TestOracle:
    def test_p3(self, capsys, monkeypatch):
        code, out, _ = run(
            capsys, monkeypatch, ["oracle", "-", "--count-all"], stdin="2\n"
        )
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc["orientations_with_solution"] == 2
        assert doc["pairs_enumerated"] == 8

    def test_cap_refusal(self, capsys, monkeypatch):
        code, _, err = run(
            capsys, monkeypatch, ["oracle", "-", "--cap", "4"], stdin="1 0 0 0 1\n"
        )
        assert code == EXIT_REFUSED
        assert "cap" in err

    def test_env_cap(self, capsys, monkeypatch):
        monkeypatch.setenv("ANTIMAGIC_ORACLE_CAP", "3")
        code, _, _ = run(capsys, monkeypatch, ["oracle", "-"], stdin="1 0 0 1\n")
        assert code == EXIT_REFUSED


class TestGen:
    def test_enumerate(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["gen", "--max-n", "4"])
        assert code == EXIT_OK
        assert out.splitlines() == ["2", "3", "1 1"]

    def test_random_deterministic(self, capsys, monkeypatch):
        args = ["gen", "--random", "--count", "5", "--seed", "9"]
        _, first, _ = run(capsys, monkeypatch, args)
        _, second, _ = run(capsys, monkeypatch, args)
        assert first == second
        assert len(first.splitlines()) == 5

    def test_gen_feeds_construct(self, capsys, monkeypatch):
        _, lines, _ = run(capsys, monkeypatch, ["gen", "--max-n", "8"])
        code, _, _ = run(capsys, monkeypatch, ["construct", "-"], stdin=lines)
        assert code == EXIT_OK


class TestStress:
    def test_small_run(self, capsys, monkeypatch):
        code, out, _ = run(
            capsys,
            monkeypatch,
            ["stress", "--count", "25", "--max-m", "60", "--seed", "7"],
        )
        assert code == EXIT_OK
        summary = json.loads(out.splitlines()[-1])
        assert summary["instances"] == 25
        assert summary["violations"] == 0

    def test_zero_count(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["stress", "--count", "0"])
        assert code == EXIT_OK
        assert json.loads(out.splitlines()[-1])["instances"] == 0

    def test_repeatable(self, capsys, monkeypatch):
        args = ["stress", "--count", "10", "--max-m", "40", "--seed", "3"]
        _, first, _ = run(capsys, monkeypatch, args)
        _, second, _ = run(capsys, monkeypatch, args)
        assert first == second

    def test_parallel_matches_serial(self, capsys, monkeypatch):
        base = ["stress", "--count", "12", "--max-m", "30", "--seed", "5"]
        _, serial, _ = run(capsys, monkeypatch, base)
        _, parallel, _ = run(capsys, monkeypatch, base + ["--jobs", "4"])
        assert serial == parallel
