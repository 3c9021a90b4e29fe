import json
import subprocess
import sys

import pytest

from quasitrees.cli import main

COUNTEREXAMPLE = "-1,-2,3,1,2,4,3,4"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


def test_count_all_methods(capsys):
    code, obj = run_json(capsys, "count", "--family", "Fp", "--n", "5", "--methods", "all")
    assert code == 0
    assert obj["results"] == {"brute": 7, "det": 7, "delcon": 7, "closed": 7}
    assert obj["agree"] is True


def test_count_single_loop(capsys):
    code, obj = run_json(capsys, "count", "--rotation", "1,1")
    assert code == 0 and obj["results"]["brute"] == 1


def test_count_refuses_det_on_counterexample(capsys):
    code, obj = run_json(capsys, "count", "--rotation", COUNTEREXAMPLE, "--methods", "brute,det")
    assert code == 3
    assert obj["results"]["brute"] == 8
    assert obj["results"]["det"] is None
    assert "det" in obj["refusals"]


def test_count_rotation_with_equals(capsys):
    code, _, _ = run(capsys, "count", f"--rotation={COUNTEREXAMPLE}")
    assert code == 0


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "count", "--rotation", "1,2")
    assert code == 2 and "error" in err


def test_missing_input(capsys):
    code, _, _ = run(capsys, "count")
    assert code == 2


def test_bad_method(capsys):
    code, _, _ = run(capsys, "count", "--rotation", "1,1", "--methods", "magic")
    assert code == 2


def test_resource_guard(capsys):
    code, _, _ = run(capsys, "count", "--family", "F", "--n", "30")
    assert code == 4


def test_closed_needs_family(capsys):
    code, _, _ = run(capsys, "count", "--rotation", "1,1", "--methods", "closed")
    assert code == 2


def test_graph_file(tmp_path, capsys):
    path = tmp_path / "g.txt"
    path.write_text("v: 0 3\nv: 1 2\n1: 0 1 +1\n2: 2 3 +1\n")
    code, obj = run_json(capsys, "count", "--graph", str(path))
    # two vertices joined by a double edge: the two single edges
    assert code == 0 and obj["results"]["brute"] == 2


def test_verify_table2(capsys):
    code, obj = run_json(capsys, "verify-table2", "--max-n", "8")
    assert code == 0 and obj["agree"]
    assert len(obj["rows"]) == sum(max(0, 8 - m + 1) for m in (0, 3, 2, 1, 2, 3, 3))


def test_verify_table2_empty_range(capsys):
    code, obj = run_json(capsys, "verify-table2", "--max-n", "-1")
    assert code == 0 and obj["rows"] == []


def test_verify_table2_injected_fault(capsys):
    code, obj = run_json(capsys, "verify-table2", "--max-n", "6", "--inject-fault", "W1:4")
    assert code == 1 and not obj["agree"]
    bad = [r for r in obj["rows"] if not r["ok"]]
    assert [(r["family"], r["n"]) for r in bad] == [("W1", 4)]


def test_charpoly(capsys):
    code, out, _ = run(capsys, "charpoly", "--family", "Fp", "--n", "3")
    assert code == 0 and out.splitlines()[0] == "t^3 + 2*t"


def test_charpoly_flags_l1(capsys):
    code, obj = run_json(capsys, "charpoly", "--family", "Fpn", "--n", "3")
    assert code == 0 and obj["agree"] and "l_1" in obj["note"]


def test_matrix(capsys):
    code, obj = run_json(capsys, "matrix", "--family", "F", "--n", "1")
    assert code == 0 and obj["matrix"] == [[0]] and obj["det_identity_plus"] == 1


def test_dm_list(capsys):
    code, obj = run_json(capsys, "dm", "--rotation", COUNTEREXAMPLE, "--op", "list")
    assert code == 0
    expected = [[], [1], [2], [1, 3], [2, 3], [3, 4], [2, 3, 4], [1, 3, 4]]
    assert sorted(obj["feasible"]) == sorted(expected)


def test_dm_fourterm(capsys):
    code, obj = run_json(capsys, "dm", "--family", "F", "--n", "6", "--op", "fourterm", "--a", "1", "--b", "2")
    assert code == 0 and obj["holds"] and obj["sizes"] == [13, 16, 8, 11]


def test_dm_needs_pair(capsys):
    code, _, _ = run(capsys, "dm", "--family", "F", "--n", "3", "--op", "slide")
    assert code == 2


def test_matchings(capsys):
    code, obj = run_json(capsys, "matchings", "--graph", "caterpillar", "--n", "9")
    assert code == 0 and obj["perfect_matchings"] == obj["predicted"] == 47


def test_random_check(capsys):
    code, obj = run_json(capsys, "random-check", "--count", "30", "--twisted", "1", "--seed", "5")
    assert code == 0 and obj["mismatches"] == []


@pytest.mark.parametrize("fmt", ["text", "csv", "json"])
def test_formats_render(capsys, fmt):
    code, out, _ = run(capsys, "count", "--family", "F", "--n", "4", "--format", fmt)
    assert code == 0 and out.strip()


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "quasitrees", "count", "--rotation", "-1,1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "brute: 2" in proc.stdout
