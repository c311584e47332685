"""End-to-end CLI behaviour: grammar, exit codes, determinism, schemas."""

import json

from giideals.cli import main
from giideals.cli import run as cli_run


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_run_alias_is_the_entry_point():
    assert cli_run is main


def fx(fixture_dir, name):
    return str(fixture_dir / name)


def test_family_check_t_mode_witness(capsys, fixture_dir):
    code, out, _ = run(
        capsys,
        "family", "check",
        fx(fixture_dir, "absorb2.json"),
        fx(fixture_dir, "absorb2_nested_family.json"),
        "--mode", "t",
    )
    assert code == 1
    doc = json.loads(out)
    assert doc["verdict"] is False
    assert doc["witness"]["F"] == "1"
    assert doc["witness"]["i"] == 2


def test_family_check_nt_and_o_modes(capsys, fixture_dir):
    for mode in ("nt", "o"):
        code, out, _ = run(
            capsys,
            "family", "check",
            fx(fixture_dir, "absorb2.json"),
            fx(fixture_dir, "absorb2_nested_family.json"),
            "--mode", mode,
        )
        assert code == 1
        assert json.loads(out)["verdict"] is False


def test_family_check_rel_requires_bound(capsys, fixture_dir):
    code, _, err = run(
        capsys,
        "family", "check",
        fx(fixture_dir, "absorb2.json"),
        fx(fixture_dir, "absorb2_nested_family.json"),
        "--mode", "rel",
    )
    assert code == 2
    assert "requires" in err


def test_family_check_rel_mode_passes(capsys, fixture_dir):
    code, out, _ = run(
        capsys,
        "family", "check",
        fx(fixture_dir, "absorb2.json"),
        fx(fixture_dir, "absorb2_nested_family.json"),
        "--mode", "rel",
        "--k", fx(fixture_dir, "absorb2_nested_family.json"),
    )
    # nested family fails the fixed-point equations regardless of the bound
    assert code == 1
    assert json.loads(out)["violated_condition"] == "t_equation"


def test_compute_if_absorb2_exact_output(capsys, fixture_dir):
    code, out, _ = run(capsys, "compute", "if", fx(fixture_dir, "absorb2.json"))
    assert code == 0
    assert out.strip() == (
        '{"rank":2,"sets":{"":[],"1":["p","q"],"1,2":["p","q"],"2":["q"]}}'
    )


def test_compute_jf_shift2(capsys, fixture_dir):
    code, out, _ = run(capsys, "compute", "jf", fx(fixture_dir, "shift2.json"))
    assert code == 0
    doc = json.loads(out)
    assert doc["sets"]["1"] == ["v1"]
    assert doc["sets"][""] == []


def test_enumerate_count_only(capsys, fixture_dir):
    code, out, _ = run(
        capsys, "enumerate", fx(fixture_dir, "loops2.json"), "--count-only"
    )
    assert code == 0
    assert out.strip() == "6"


def test_enumerate_full_document(capsys, fixture_dir):
    code, out, _ = run(capsys, "enumerate", fx(fixture_dir, "loop1.json"))
    assert code == 0
    doc = json.loads(out)
    assert doc["mode"] == "T"
    assert doc["count"] == 3
    assert doc["families"][0] == {"": [], "1": []}


def test_enumerate_relative(capsys, fixture_dir, tmp_path):
    bound = tmp_path / "bound.json"
    bound.write_text(
        json.dumps({"rank": 1, "sets": {"": [], "1": ["v"]}})
    )
    code, out, _ = run(
        capsys,
        "enumerate", fx(fixture_dir, "loop1.json"),
        "--relative", str(bound), "--count-only",
    )
    assert code == 0
    assert out.strip() == "2"


def test_enumerate_budget_exceeded(capsys, fixture_dir):
    code, out, _ = run(
        capsys, "enumerate", fx(fixture_dir, "funnel2.json"), "--budget", "2"
    )
    assert code == 3
    doc = json.loads(out)
    assert doc["error"] == "budget-exceeded"
    assert doc["stats"]["budget"] == 2


def test_validate_and_fingerprint(capsys, fixture_dir):
    code, out, _ = run(capsys, "validate", fx(fixture_dir, "funnel2.json"))
    assert code == 0
    doc = json.loads(out)
    assert doc["valid"] is True and doc["rank"] == 2 and doc["vertices"] == 2


def test_validate_missing_file(capsys):
    code, out, err = run(capsys, "validate", "no-such-file.json")
    assert code == 2
    assert out == ""
    assert "error" in err


def test_validate_bad_document(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"kind": "kgraph", "rank": 1, "vertices": ["v"]}))
    code, _, err = run(capsys, "validate", str(bad))
    assert code == 2
    assert "missing" in err


def test_validate_rank3_note(capsys, tmp_path):
    doc = {
        "kind": "kgraph",
        "rank": 3,
        "vertices": ["v"],
        "adjacency": [[[1]], [[1]], [[1]]],
    }
    path = tmp_path / "r3.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "validate", str(path))
    assert code == 0
    assert json.loads(out)["note"] == "skeleton-level model"


def test_unknown_flag_exits_2_with_usage(capsys, fixture_dir):
    code, _, err = run(
        capsys, "enumerate", fx(fixture_dir, "loop1.json"), "--frobnicate"
    )
    assert code == 2
    assert "usage" in err.lower()


def test_unknown_subcommand_exits_2(capsys):
    code, _, err = run(capsys, "bogus")
    assert code == 2
    assert "usage" in err.lower()


def test_lattice_writes_files(capsys, fixture_dir, tmp_path):
    dot = tmp_path / "lat.dot"
    js = tmp_path / "lat.json"
    code, out, _ = run(
        capsys,
        "lattice", fx(fixture_dir, "loop1.json"),
        "--dot", str(dot), "--json", str(js),
    )
    assert code == 0
    summary = json.loads(out)
    assert summary["nodes"] == 3 and summary["cover_edges"] == 2
    assert dot.read_text().startswith("digraph")
    lat_doc = json.loads(js.read_text())
    assert lat_doc["bottom"] == summary["bottom"]


def test_crosscheck_single_model(capsys, fixture_dir):
    code, out, err = run(capsys, "crosscheck", fx(fixture_dir, "absorb2.json"))
    assert code == 0
    assert out == ""
    assert "0 discrepancy report(s)" in err


def test_crosscheck_corpus(capsys, fixture_dir):
    code, out, err = run(
        capsys, "crosscheck", "--corpus", fx(fixture_dir, "corpus_small.json")
    )
    assert code == 0
    assert out == ""
    assert "45 model(s)" in err


def test_crosscheck_needs_exactly_one_source(capsys, fixture_dir):
    code, _, err = run(capsys, "crosscheck")
    assert code == 2
    code, _, err = run(
        capsys,
        "crosscheck", fx(fixture_dir, "absorb2.json"),
        "--corpus", fx(fixture_dir, "corpus_small.json"),
    )
    assert code == 2


def test_random_deterministic_stdout(capsys):
    args = ["random", "--kind", "dynsys", "--rank", "2", "--vertices", "4",
            "--seed", "7"]
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["kind"] == "dynsys" and len(doc["points"]) == 4


def test_random_rejection_budget_zero(capsys):
    code, out, _ = run(
        capsys,
        "random", "--kind", "kgraph", "--rank", "2", "--vertices", "2",
        "--seed", "1", "--strategy", "rejection", "--retries", "0",
    )
    assert code == 3
    assert json.loads(out)["error"] == "budget-exceeded"


def test_identical_invocations_byte_identical(capsys, fixture_dir):
    args = ["enumerate", fx(fixture_dir, "funnel2.json")]
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2


def test_jobs_do_not_change_output(capsys, fixture_dir):
    base = ["enumerate", fx(fixture_dir, "funnel2.json")]
    _, out1, _ = run(capsys, *base)
    _, out2, _ = run(capsys, *base, "--jobs", "2")
    assert out1 == out2


def test_jobs_relative_enumeration_identical(capsys, fixture_dir, tmp_path):
    bound = tmp_path / "bound.json"
    bound.write_text(
        json.dumps(
            {"rank": 2, "sets": {"": [], "1": ["v"], "2": ["v"], "1,2": ["v"]}}
        )
    )
    base = [
        "enumerate", fx(fixture_dir, "loops2.json"), "--relative", str(bound)
    ]
    _, out1, _ = run(capsys, *base)
    _, out2, _ = run(capsys, *base, "--jobs", "3")
    assert out1 == out2
    assert json.loads(out1)["count"] == 2


def test_jobs_crosscheck_deterministic(capsys, fixture_dir):
    args = ["crosscheck", "--corpus", fx(fixture_dir, "corpus_small.json")]
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args, "--jobs", "2")
    assert out1 == out2


def test_witness_replays_through_library(capsys, fixture_dir):
    # a failing check's witness, fed back through the library, must
    # reproduce the violation
    from giideals import label_to_mask, load_model_path
    from giideals.modelio import family_from_path

    model = load_model_path(fx(fixture_dir, "absorb2.json"))
    fam = family_from_path(model, fx(fixture_dir, "absorb2_nested_family.json"))
    _, out, _ = run(
        capsys,
        "family", "check",
        fx(fixture_dir, "absorb2.json"),
        fx(fixture_dir, "absorb2_nested_family.json"),
        "--mode", "t",
    )
    witness = json.loads(out)["witness"]
    f = label_to_mask(witness["F"], model.rank)
    i = witness["i"]
    lhs = fam[f]
    rhs = model.phi(i, fam[f]) & fam[f | (1 << (i - 1))]
    assert lhs != rhs
    assert set(model.names_of_set(lhs ^ rhs)) == set(witness["difference"])


def test_family_file_validation(capsys, fixture_dir, tmp_path):
    bad = tmp_path / "fam.json"
    bad.write_text(json.dumps({"rank": 2, "sets": {"": []}}))
    code, _, err = run(
        capsys,
        "family", "check", fx(fixture_dir, "absorb2.json"), str(bad),
        "--mode", "t",
    )
    assert code == 2
    assert "keys mismatch" in err
