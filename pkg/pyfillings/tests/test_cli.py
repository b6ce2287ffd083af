import io
import json
import os

import pyfillings as pf
from pyfillings import cli


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_hj():
    code, out, _ = run("hj", "19", "7", "--json")
    assert code == cli.EXIT_OK
    payload = json.loads(out)
    assert payload["terms"] == [3, 4, 2]
    assert payload["dual_terms"] == [2, 3, 2, 3]

    code, out, _ = run("hj", "19", "7")
    assert out.splitlines()[0] == "19/7 = [3, 4, 2]"


def test_enumerate_json():
    code, out, _ = run("enumerate", "T:7", "--json")
    assert code == cli.EXIT_OK
    assert json.loads(out) == [
        {"singularity": "T:7", "dd": 5, "string": [-4], "attachments": [[3, 1]], "case": None, "base": "P2"}
    ]
    # stable across runs
    assert run("enumerate", "T:7", "--json")[1] == out


def test_enumerate_text():
    code, out, _ = run("enumerate", "T:3")
    assert code == cli.EXIT_OK
    assert out == "(T:3;4,-2;1x1) P2\n"


def test_transform_and_resolve():
    code, out, _ = run("transform", "T:7", "--json")
    assert code == cli.EXIT_OK
    payload = json.loads(out)
    assert payload["dd"] == 5
    assert payload["string"] == [-4]
    assert payload["shape"] == "type32"

    code, out, _ = run("resolve", "A:7,3", "--dot")
    assert code == cli.EXIT_OK
    assert out.startswith("graph G {")

    code, out, _ = run("compactify", "T:7", "--normalized", "--json")
    assert code == cli.EXIT_OK
    assert "N1" in [v["name"] for v in json.loads(out)["vertices"]]


def test_verify(tmp_path):
    d = pf.FillingDescriptor("T:7", 5, [-4], attachments=[(3, 1)])
    path = os.path.join(str(tmp_path), "d.json")
    with open(path, "w") as f:
        json.dump(d.to_json(), f)

    code, out, _ = run("verify", path, "--json")
    assert code == cli.EXIT_OK
    assert len(json.loads(out)["witness"]) == 4

    bad = pf.FillingDescriptor("T:7", 5, [-4], attachments=[(2, 1)])
    with open(path, "w") as f:
        json.dump(bad.to_json(), f)
    code, _, err = run("verify", path)
    assert code == cli.EXIT_DOMAIN
    assert "no-witness" in err


def test_export_dot(tmp_path):
    path = os.path.join(str(tmp_path), "g.json")
    with open(path, "w") as f:
        json.dump(pf.compactifying_divisor("A:4,1").to_dict(), f)
    code, out, _ = run("export-dot", path)
    assert code == cli.EXIT_OK
    assert out == pf.export_dot(pf.compactifying_divisor("A:4,1"))


def test_manifest():
    code, _, err = run("--manifest", "hj", "5", "2")
    assert code == cli.EXIT_OK
    manifest = json.loads(err.strip().splitlines()[-1])
    assert manifest["command"] == "hj"
    assert manifest["digest"] == pf.digest({"n": 5, "q": 2, "terms": [3, 2], "dual_terms": [2, 3]})


def test_exit_codes():
    assert run()[0] == cli.EXIT_USAGE
    assert run("frobnicate")[0] == cli.EXIT_USAGE
    assert run("hj", "7")[0] == cli.EXIT_USAGE
    assert run("enumerate", "T:7", "--base", "P3")[0] == cli.EXIT_USAGE
    assert run("resolve", "T:2")[0] == cli.EXIT_DOMAIN
    assert run("hj", "6", "4")[0] == cli.EXIT_DOMAIN
    assert run("verify", "/nonexistent/d.json")[0] == cli.EXIT_DOMAIN


def test_caps_exhausted():
    code, _, err = run("enumerate", "T:19", "--caps", "1")
    assert code == cli.EXIT_CAPS
    assert "caps exhausted" in err


if __name__ == "__main__":
    test_hj()
    test_enumerate_json()
    test_exit_codes()
