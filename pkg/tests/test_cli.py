from __future__ import annotations

import json

import pytest

from amas.cli import main
from amas.jsonio import quiver_to_json
from amas.quiver import IceQuiver


@pytest.fixture
def a2_file(tmp_path):
    path = tmp_path / "a2.json"
    path.write_text(json.dumps({"n": 2, "m": 2, "b": [[0, 1], [-1, 0]]}))
    return str(path)


@pytest.fixture
def a3_file(tmp_path):
    q = IceQuiver.from_arrows(3, [(1, 2), (2, 3)])
    path = tmp_path / "a3.json"
    path.write_text(json.dumps(quiver_to_json(q)))
    return str(path)


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


class TestMutate:
    def test_single_step_rendering(self, capsys, a2_file):
        code, out = run(capsys, ["mutate", "-q", a2_file, "-s", "1"])
        assert code == 0
        assert out.strip() == "( (1 + x2)/x1 , x2 )"

    def test_pentagon_period(self, capsys, a2_file):
        code, out = run(capsys, ["mutate", "-q", a2_file, "-s", "1,2,1,2,1", "--json"])
        assert code == 0
        payload = json.loads(out)
        assert payload["vars"] == ["x2", "x1"]
        assert payload["v"] == 1

    def test_json_round_trips_schema(self, capsys, a3_file):
        code, out = run(capsys, ["mutate", "-q", a3_file, "-s", "1,2", "--json"])
        payload = json.loads(out)
        from amas.jsonio import quiver_from_json

        quiver_from_json(payload["quiver"])

    def test_usage_error_on_missing_file(self, capsys):
        assert main(["mutate", "-q", "/does/not/exist.json", "-s", "1"]) == 2

    def test_usage_error_on_bad_sequence(self, a2_file):
        assert main(["mutate", "-q", a2_file, "-s", "7"]) == 2


class TestGraphCommands:
    def test_explore(self, capsys, a2_file):
        code, out = run(capsys, ["explore", "-q", a2_file])
        assert code == 0
        assert "seeds 5" in out and "edges 5" in out and "variables 5" in out

    def test_class(self, capsys, a2_file):
        code, out = run(capsys, ["class", "-q", a2_file])
        assert code == 0
        assert out.strip() == "1 (complete)"

    def test_finite_type(self, capsys, a3_file):
        code, out = run(capsys, ["finite-type", "-q", a3_file])
        assert code == 0
        assert out.strip() == "finite A3"


class TestYsystem:
    def test_a2_a1(self, capsys):
        code, out = run(capsys, ["ysystem", "--delta", "A2", "--delta-prime", "A1"])
        assert code == 0
        assert out.strip() == "period 10 divides 10: yes"

    def test_json(self, capsys):
        code, out = run(
            capsys, ["ysystem", "--delta", "A1", "--delta-prime", "A1", "--json"]
        )
        payload = json.loads(out)
        assert payload["period"] == 4 and payload["bound"] == 8 and payload["divides"]

    def test_full_init(self, capsys):
        code, out = run(
            capsys,
            ["ysystem", "--delta", "A2", "--delta-prime", "A1", "--full-init"],
        )
        assert code == 0 and "divides 10: yes" in out


class TestCC:
    def test_a2(self, capsys):
        code, out = run(capsys, ["cc", "--type", "A2", "--orientation", "1>2"])
        assert code == 0
        assert "bijection: ok" in out
        assert "(1 + x2)/x1" in out

    def test_orientation_mismatch(self, capsys):
        assert main(["cc", "--type", "A3", "--orientation", "1>2"]) == 2


class TestGrassmannian:
    def test_n2(self, capsys):
        code, out = run(
            capsys, ["grassmannian", "--n", "2", "--check", "--sample-seed", "7"]
        )
        assert code == 0 and "ok" in out


class TestTp:
    def test_agreement_exit_code(self, capsys, tmp_path):
        path = tmp_path / "m.json"
        path.write_text(
            json.dumps({"entries": {"1,2": "3/2", "1,3": "1", "2,3": "2"}})
        )
        code, out = run(
            capsys, ["tp", "--n", "2", "--matrix", str(path), "--mutations", "1"]
        )
        assert code == 0
        assert "agree" in out


class TestDerive:
    def test_triangle_potential(self, capsys):
        code, out = run(
            capsys,
            [
                "derive",
                "--arrows",
                "a:1>2,b:2>3,c:3>1",
                "--potential",
                "c.b.a",
                "--wrt",
                "a",
            ],
        )
        assert code == 0 and out.strip() == "c.b"

    def test_quiver_consistency_check(self, capsys, a2_file):
        assert (
            main(
                [
                    "derive",
                    "--quiver",
                    a2_file,
                    "--arrows",
                    "a:2>1",
                    "--potential",
                    "a",
                    "--wrt",
                    "a",
                ]
            )
            == 2
        )


class TestRank2:
    def test_value(self, capsys):
        code, out = run(capsys, ["rank2", "-b", "1", "-c", "1", "-m", "5"])
        assert code == 0 and out.strip() == "(1 + x1)/x2"


class TestUsage:
    def test_unknown_command(self):
        assert main(["frobnicate"]) == 2

    def test_no_command(self):
        assert main([]) == 2
