"""Command line interface: outputs, exit codes, file round trips."""

import json

import pytest

from flipforge.cli import MATERIALIZE_LIMIT_ENV, main
from flipforge.ecgraph import EdgeColouredGraph

C4_JSON = json.dumps({
    "vertices": 4, "colours": 2,
    "edges": [[0, 1, 1], [1, 2, 2], [2, 3, 1], [0, 3, 2]],
})


def run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_construct_br_verify_output(capsys):
    rc, out, err = run(capsys, "construct-br", "--b", "4", "--r", "5", "--verify")
    assert rc == 0
    assert err == ""
    assert out == "order 40\ndeg=(4,5)\ne=(7,5)\nPASS\n"


def test_construct_br_plain(capsys):
    rc, out, _ = run(capsys, "construct-br", "--b", "6", "--r", "7")
    assert rc == 0
    assert out == "order 56\n"


def test_construct_br_bad_range(capsys):
    rc, out, err = run(capsys, "construct-br", "--b", "3", "--r", "4")
    assert rc == 2
    assert "error:" in err
    assert "b >= 4" in err


def test_construct_br_files(tmp_path, capsys):
    out_path = tmp_path / "g.json"
    plan_path = tmp_path / "plan.json"
    dot_path = tmp_path / "g.dot"
    rc, _, _ = run(
        capsys, "construct-br", "--b", "4", "--r", "5",
        "--out", str(out_path), "--plan-out", str(plan_path), "--dot", str(dot_path))
    assert rc == 0
    graph = EdgeColouredGraph.from_json(out_path.read_text())
    assert graph.vertex_count == 40
    plan = json.loads(plan_path.read_text())
    assert plan["blue_set"] == [[9], [18], [22], [31]]
    assert dot_path.read_text().startswith("graph G {")
    # byte determinism across runs
    first = out_path.read_bytes()
    run(capsys, "construct-br", "--b", "4", "--r", "5", "--out", str(out_path))
    assert out_path.read_bytes() == first


def test_construct_br_out_stdout(capsys):
    rc, out, _ = run(capsys, "construct-br", "--b", "4", "--r", "5", "--out", "-")
    assert rc == 0
    graph = EdgeColouredGraph.from_json(out[: out.rindex("}") + 1])
    assert graph.vertex_count == 40


def test_verify_round_trip(tmp_path, capsys):
    path = tmp_path / "g.json"
    run(capsys, "construct-br", "--b", "4", "--r", "5", "--out", str(path))
    rc, out, _ = run(capsys, "verify", "--in", str(path), "--sequence", "4,5")
    assert rc == 0
    report = json.loads(out)
    assert report["verdict"] == "pass"
    assert report["e_chain"] == [7, 5]


def test_verify_failing_graph(tmp_path, capsys):
    path = tmp_path / "c4.json"
    path.write_text(C4_JSON)
    rc, out, _ = run(capsys, "verify", "--in", str(path))
    assert rc == 1
    report = json.loads(out)
    assert report["verdict"] == "fail"
    assert ["", "degrees-not-increasing"][1] in [v[1] for v in report["violations"]]


def test_verify_malformed_input(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"vertices": 4')
    rc, _, err = run(capsys, "verify", "--in", str(path))
    assert rc == 2
    assert "error:" in err
    rc, _, err = run(capsys, "verify", "--in", str(tmp_path / "missing.json"))
    assert rc == 2


def test_product_command(tmp_path, capsys):
    left = tmp_path / "k2_blue.json"
    right = tmp_path / "k2_red.json"
    left.write_text(json.dumps({"vertices": 2, "colours": 2, "edges": [[0, 1, 1]]}))
    right.write_text(json.dumps({"vertices": 2, "colours": 2, "edges": [[0, 1, 2]]}))
    out_path = tmp_path / "prod.json"
    rc, out, _ = run(
        capsys, "product", "--kind", "strong",
        "--left", str(left), "--right", str(right), "--out", str(out_path))
    assert rc == 0
    assert out == ""  # graph goes to the file, nothing else is printed
    graph = EdgeColouredGraph.from_json(out_path.read_text())
    assert graph.vertex_profile(0).e_closed == (4, 2)
    # without --out the JSON lands on stdout
    rc, out, _ = run(
        capsys, "product", "--kind", "cartesian",
        "--left", str(left), "--right", str(right))
    assert rc == 0
    cart = EdgeColouredGraph.from_json(out)
    assert len(cart.edges) == 4


def test_cayley_command(tmp_path, capsys):
    out_path = tmp_path / "cay.json"
    rc, out, _ = run(
        capsys, "cayley", "--group", "z:7",
        "--class", "1=1;6", "--class", "2=2;5", "--out", str(out_path))
    assert rc == 0
    graph = EdgeColouredGraph.from_json(out_path.read_text())
    assert graph.vertex_count == 7
    assert graph.is_colour_regular((2, 2))


def test_cayley_multi_factor_group(capsys):
    # residues inside an element join with commas, elements with semicolons
    rc, out, _ = run(
        capsys, "cayley", "--group", "z:2,6", "--class", "1=1,0;0,3", "--colours", "2")
    assert rc == 0
    graph = EdgeColouredGraph.from_json(out)
    assert graph.vertex_count == 12
    assert graph.is_colour_regular((2, 0))


def test_cayley_invalid_class(capsys):
    rc, _, err = run(capsys, "cayley", "--group", "z:7", "--class", "1=1")
    assert rc == 2  # {1} is not inverse-closed in Z_7
    rc, _, err = run(capsys, "cayley", "--group", "z:7", "--class", "bogus")
    assert rc == 2


def test_pack_command(tmp_path, capsys):
    first = tmp_path / "blue.json"
    second = tmp_path / "red.json"
    first.write_text(json.dumps({
        "group": "z:40", "colour_count": 2,
        "classes": {"1": [[9], [18], [22], [31]]}}))
    second.write_text(json.dumps({
        "group": "z:40", "colour_count": 2,
        "classes": {"2": [[6], [7], [20], [33], [34]]}}))
    out_path = tmp_path / "packed.json"
    rc, out, _ = run(
        capsys, "pack", "--first", str(first), "--second", str(second),
        "--out", str(out_path))
    assert rc == 0
    packed = EdgeColouredGraph.from_json(out_path.read_text())
    assert packed.vertex_profile(0).e_closed == (7, 5)

    # same classes on both sides: the merge must refuse
    rc, _, err = run(capsys, "pack", "--first", str(first), "--second", str(first))
    assert rc == 2


def test_merge_command(tmp_path, capsys):
    path = tmp_path / "g.json"
    run(capsys, "construct-br", "--b", "4", "--r", "5", "--out", str(path))
    out_path = tmp_path / "merged.json"
    rc, out, _ = run(
        capsys, "merge", "--in", str(path), "--partition", "1,2", "--out", str(out_path))
    assert rc == 0
    merged = EdgeColouredGraph.from_json(out_path.read_text())
    assert merged.colour_count == 1
    assert merged.vertex_profile(0).deg == (9,)
    assert merged.vertex_profile(0).e_closed == (12,)
    rc, _, err = run(capsys, "merge", "--in", str(path), "--partition", "1|1,2")
    assert rc == 2


def test_bounds_command(capsys):
    rc, out, _ = run(capsys, "bounds", "--b", "11,25")
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "b,r,old_bound,new_bound"
    assert lines[1] == "11,12,160,80"
    assert lines[2] == "11,13,168,160"
    assert len(lines) == 39
    rc, _, err = run(capsys, "bounds", "--b", "11", "--format", "yaml")
    assert rc == 2
    rc, _, err = run(capsys, "bounds", "--b", "x")
    assert rc == 2


def test_gaps_plan_valid(tmp_path, capsys):
    out_path = tmp_path / "plan.json"
    rc, out, _ = run(
        capsys, "gaps-plan", "--q", "2", "--k", "9",
        "--prefix-e", "140,135", "--prefix-deg", "42,135", "--out", str(out_path))
    assert rc == 0
    assert "plan valid" in out
    assert "materialization feasible: estimated order 129920 <= limit 200000" in out
    plan = json.loads(out_path.read_text())
    assert plan["t"] == 113
    assert plan["gap_slack"] == 19
    assert plan["part_ratio"] == [813, 791]


def test_gaps_plan_from_br_reports_failure(capsys):
    """The flagship prefix violates the gap condition; the plan is still emitted."""
    rc, out, _ = run(capsys, "gaps-plan", "--q", "2", "--k", "9", "--from-br", "42,135")
    assert rc == 1
    assert "materialization skipped: estimated order 109007360 > limit 200000" in out
    assert "plan invalid: gap condition fails with slack -171" in out
    assert "plan invalid: predicted e chain breaks between colours 2 and 3" in out
    plan = json.loads(out[: out.rindex("}") + 1])
    assert plan["prefix_e"] == [265, 155]
    assert plan["prefix_order"] == 616
    assert plan["t"] == plan["t_min"] == 155


def test_gaps_plan_t_below_minimum(capsys):
    rc, out, _ = run(
        capsys, "gaps-plan", "--q", "2", "--k", "9",
        "--prefix-e", "140,135", "--prefix-deg", "42,135", "--t", "50")
    assert rc == 1
    assert "plan invalid: t=50 below minimum 113" in out


def test_gaps_plan_needs_prefix(capsys):
    rc, _, err = run(capsys, "gaps-plan", "--q", "2", "--k", "9")
    assert rc == 2
    assert "prefix" in err


def test_gaps_plan_materialize_limit_flag_and_env(capsys, monkeypatch):
    args = ("gaps-plan", "--q", "2", "--k", "9",
            "--prefix-e", "140,135", "--prefix-deg", "42,135")
    rc, out, _ = run(capsys, *args, "--materialize-limit", "1000")
    assert rc == 0
    assert "materialization skipped: estimated order 129920 > limit 1000" in out

    monkeypatch.setenv(MATERIALIZE_LIMIT_ENV, "2000")
    rc, out, _ = run(capsys, *args)
    assert "limit 2000" in out
    # explicit flag wins over the environment
    rc, out, _ = run(capsys, *args, "--materialize-limit", "300000")
    assert "materialization feasible" in out


def test_search_sumfree_command(capsys):
    rc, out, _ = run(capsys, "search-sumfree", "--group", "z:8")
    assert rc == 0
    data = json.loads(out)
    assert data["size"] == 4
    assert data["optimal"] is True
    assert data["subset"] == [[1], [3], [5], [7]]
    rc, out, _ = run(capsys, "search-sumfree", "--group", "z:30", "--mode", "greedy")
    assert rc == 0
    assert json.loads(out)["optimal"] is False
    rc, _, err = run(capsys, "search-sumfree", "--group", "z:30")
    assert rc == 2  # exhaustive mode order cap


def test_verification_failure_exit_code(tmp_path, capsys, monkeypatch):
    """Internal audit failures surface as exit 1, not a traceback."""
    import flipforge.cli as cli_mod
    from flipforge.pipelines import VerificationError

    def boom(plan):
        raise VerificationError("synthetic audit failure")

    monkeypatch.setattr(cli_mod, "build_br", boom)
    rc, _, err = run(capsys, "construct-br", "--b", "4", "--r", "5")
    assert rc == 1
    assert "verification failure: synthetic audit failure" in err
