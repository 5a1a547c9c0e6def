"""File formats, reports and the command-line front end."""

import io
import json
from importlib import resources

import numpy as np
import pytest
from jsonschema import Draft202012Validator

from nearfusion.cli import main, run_command
from nearfusion.fusion import catalog_get, catalog_names, verify_axioms
from nearfusion.io import (
    AxiomError,
    ParseError,
    datum_to_json,
    load_ring,
    parse_datum_file,
    parse_element,
    parse_premetric_file,
    parse_ring_file,
    ring_to_json,
    save_ring,
)
from nearfusion.report import Report
from nearfusion.scalars import largest_root_quadratic

from helpers import mutate_entry

PHI = largest_root_quadratic(1, 1)


def schema(name):
    text = resources.files("nearfusion").joinpath("schemas", f"{name}.schema.json").read_text()
    return Draft202012Validator(json.loads(text))


def run(*argv):
    buf = io.StringIO()
    code, report = run_command(list(argv), buf)
    return code, report, buf.getvalue()


def write(tmp_path, name, data):
    p = tmp_path / name
    p.write_text(json.dumps(data) if not isinstance(data, str) else data)
    return str(p)


# ring files


@pytest.mark.parametrize("name", catalog_names())
def test_catalog_roundtrip(tmp_path, name):
    ring = catalog_get(name)
    path = tmp_path / f"{name}.json"
    save_ring(ring, path)
    first = path.read_bytes()
    again = parse_ring_file(path)
    assert np.array_equal(again.N, ring.N)
    assert list(again.dual) == list(ring.dual) and list(again.labels) == list(ring.labels)
    save_ring(again, path)
    assert path.read_bytes() == first
    assert not list(schema("ring").iter_errors(ring_to_json(ring)))


def test_parse_errors(tmp_path):
    fib = ring_to_json(catalog_get("fib"))
    bad = dict(fib)
    del bad["N"]
    with pytest.raises(ParseError) as e:
        parse_ring_file(write(tmp_path, "a.json", bad))
    assert e.value.field == "N"

    with pytest.raises(ParseError) as e:
        parse_ring_file(write(tmp_path, "b.json", '{"name": "x",\n "rank": 2,'))
    assert e.value.line == 2

    bad = dict(fib, labels=["1", "1"])
    with pytest.raises(ParseError):
        parse_ring_file(write(tmp_path, "c.json", bad))

    bad = dict(fib, dual=[0, 5])
    with pytest.raises(ParseError):
        parse_ring_file(write(tmp_path, "d.json", bad))

    with pytest.raises(ParseError):
        parse_ring_file(tmp_path / "missing.json")


def test_dual_not_matching_tensor_is_axiom_error(tmp_path):
    # rank 2 with dual [0, 0]: N[1][1][0] = 1 forces dual(1) = 1
    fib = dict(ring_to_json(catalog_get("fib")), dual=[0, 0])
    with pytest.raises(ParseError):
        parse_ring_file(write(tmp_path, "e.json", fib))


def test_axiom_error_carries_report(tmp_path):
    data = ring_to_json(catalog_get("fib"))
    data["N"][1][1][0] = 2
    with pytest.raises(AxiomError) as e:
        parse_ring_file(write(tmp_path, "f.json", data))
    assert not e.value.report.ok
    assert parse_ring_file(tmp_path / "f.json", validate=False).N[1, 1, 0] == 2


def test_load_ring_by_name_or_path(tmp_path):
    assert load_ring("fib").rank == 2
    save_ring(catalog_get("ising"), tmp_path / "i.json")
    assert load_ring(str(tmp_path / "i.json")).rank == 3
    with pytest.raises(ParseError):
        load_ring("no-such-ring")


def test_datum_and_premetric_files(tmp_path):
    path = write(tmp_path, "fd.json", {"ring": "fib", "dims": [1, {"a": "1/2", "b": "1/2", "D": 5}],
                                       "twists": ["0", "2/5"]})
    d = parse_datum_file(path)
    assert d.dims[1] == PHI
    assert not list(schema("datum").iter_errors(datum_to_json(d)))
    with pytest.raises(ParseError):
        parse_datum_file(write(tmp_path, "bad.json", {"ring": "fib", "dims": [1, PHI.to_json()]}))

    pm = parse_premetric_file(write(tmp_path, "pm.json", {"group": [4], "q": {"(0)": "0", "(1)": "1/8",
                                                                            "(2)": "1/2", "(3)": "1/8"}}))
    assert pm((2,)) == pm.q[(2,)]
    assert not list(schema("premetric").iter_errors(pm.to_json()))
    with pytest.raises(ParseError):
        parse_premetric_file(write(tmp_path, "pm2.json", {"group": [4]}))


def test_parse_element():
    assert parse_element("(1,0)") == (1, 0)
    assert parse_element("3") == (3,)
    with pytest.raises(ParseError):
        parse_element("(a,b)")


# reports


def test_report_roundtrip():
    r = Report("x", "cmd").add("text", "hello").add("table", [{"a": 1, "b": None}, {"a": 2, "c": True}])
    r.add("kv", {"k": [1, 2]})
    again = Report.from_json(r.to_json())
    assert again == r
    text = r.to_text()
    assert "hello" in text and "yes" in text
    assert not any(line != line.rstrip() for line in text.splitlines())


# command line


def test_cli_exit_codes(tmp_path):
    assert run("verify", "fib")[0] == 0
    assert run("verify", "nope")[0] == 2
    assert run("iso", "fib", "ZC2")[0] == 1
    assert run("classify", "gnq8")[0] == 0
    assert run("classify", "ising")[0] == 2
    assert run("catalog")[0] == 0
    assert run("catalog", "show", "fib")[0] == 0
    assert main(["no-such-command"]) == 2


def test_cli_classify_irrational():
    code, report, out = run("classify-irrational", "--kmax", "8", "--hmax", "8", "--gmax", "16",
                            "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert "fib" in out and "gnq8" in out
    assert not list(schema("report").iter_errors(data))


def test_cli_analyze_fib():
    code, report, out = run("analyze", "fib")
    assert code == 0
    assert "1/2" in out and "nilpoten" in out.lower()


def test_cli_iso_rmn_ising(tmp_path):
    assert run("construct", "rmn", "--m", "1", "--n", "1", "--out", str(tmp_path / "rmn11.json"))[0] == 0
    save_ring(catalog_get("ising"), tmp_path / "ising.json")
    code, report, out = run("iso", str(tmp_path / "rmn11.json"), str(tmp_path / "ising.json"))
    assert code == 0
    assert report.sections[0].content == "isomorphic"
    assert len(report.sections[1].content) == 3


def test_cli_construct_and_enumerate(tmp_path):
    assert run("construct", "near-group", "--group", "2,2", "--ell", "4")[0] == 0
    assert run("construct", "product", "fib", "ZC2", "--out", str(tmp_path / "p.json"))[0] == 0
    assert parse_ring_file(tmp_path / "p.json").rank == 4
    code, _, out = run("enumerate", "--group", "2", "--subgroup", "(1)", "--k", "0", "--h", "2",
                       "--out-dir", str(tmp_path / "enum"))
    assert code == 0
    assert len(list((tmp_path / "enum").glob("*.json"))) == 1


def test_cli_premodular_and_deq(tmp_path):
    fib_datum = write(tmp_path, "fd.json", {"ring": "fib", "dims": [1, PHI.to_json()], "twists": ["0", "2/5"]})
    assert run("premodular-check", "fib", fib_datum)[0] == 0
    bad = write(tmp_path, "s3.json", {"ring": "rep_s3", "dims": [1, 1, 2], "twists": ["0", "1/2", "0"]})
    assert run("premodular-check", "rep_s3", bad)[0] == 1
    pm = write(tmp_path, "pm.json", {"group": [4], "q": {"(0)": "0", "(1)": "1/4", "(2)": "0", "(3)": "1/4"}})
    assert run("deq", pm, "--subgroup", "(2)")[0] == 0
    pm8 = write(tmp_path, "pm8.json", {"group": [4], "q": {"(0)": "0", "(1)": "1/8", "(2)": "1/2",
                                                           "(3)": "1/8"}})
    assert run("deq", pm8, "--subgroup", "(2)")[0] == 1


@pytest.mark.parametrize("argv", [
    ["verify", "fib"], ["analyze", "gnq8"], ["catalog", "list"], ["iso", "fib", "fib"],
    ["conjecture-report", "--gmax", "4", "--nmax", "2"], ["classify", "ising"],
])
def test_json_reports_validate(argv):
    code, report, out = run(*argv, "--format", "json")
    data = json.loads(out)
    assert not list(schema("report").iter_errors(data))
    assert Report.from_dict(data).to_dict() == data


def test_verify_agrees_with_axioms_on_mutants(tmp_path):
    rng = np.random.default_rng(11)
    names = catalog_names()
    for i in range(100):
        ring = catalog_get(names[i % len(names)])
        mutant, _ = mutate_entry(ring, rng)
        expected = verify_axioms(mutant).ok
        data = ring_to_json(mutant)
        path = tmp_path / f"m{i}.json"
        path.write_text(json.dumps(data))
        code = run("verify", str(path))[0]
        assert code == (0 if expected else 1), (i, expected, code)
