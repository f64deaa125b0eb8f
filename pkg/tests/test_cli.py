import json

import numpy as np
import pytest

from asymnorm.cli import main
from asymnorm.cone import dump_cone, load_cone, HalfspaceCone
from asymnorm.oracle import fixture_suite, get_fixture


@pytest.fixture
def cones(tmp_path):
    assert main(["fixtures", "--export", str(tmp_path), "-o", str(tmp_path / "list.json")]) == 0
    dump_cone(HalfspaceCone([[1.0, 0.0]]), tmp_path / "halfplane.json")
    return tmp_path


def run(capsys, argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cone_check(capsys, cones):
    code, out, _ = run(capsys, ["cone-check", "--cone", cones / "orthant2.H.json"])
    report = json.loads(out)
    assert code == 0 and report["proper"] is True and report["schema"] == 1
    assert report["irredundant_facets"] == [0, 1]
    code, out, _ = run(capsys, ["cone-check", "--cone", cones / "halfplane.json"])
    assert code == 1 and json.loads(out)["proper"] is False
    code, out, _ = run(capsys, ["cone-check", "--cone", cones / "wedge.V.json"])
    assert code == 0 and json.loads(out)["irredundant_facets"] is None


def test_truncated_file(capsys, cones):
    bad = cones / "bad.json"
    bad.write_text((cones / "orthant2.H.json").read_text()[:-10])
    code, out, err = run(capsys, ["cone-check", "--cone", bad])
    assert code == 2 and "malformed" in err


def test_missing_file_and_bad_point(capsys, cones):
    assert run(capsys, ["cone-check", "--cone", cones / "nope.json"])[0] == 2
    code, _, err = run(capsys, ["gauge", "--cone", cones / "orthant2.H.json", "--apex", "1,1",
                                "--point", "1,2,3"])
    assert code == 2 and "dimension" in err


def test_gauge(capsys, cones):
    code, out, _ = run(capsys, ["gauge", "--cone", cones / "orthant2.H.json", "--apex", "1,1",
                                "--point=-3,2", "--point", "0,0", "--oracle"])
    rows = json.loads(out)["points"]
    assert code == 0
    assert rows[0]["q"] == 2.0 and rows[0]["p_s"] == 3.0 and rows[0]["kernel"] is False
    assert rows[0]["delta"] <= 1e-9
    assert rows[1]["q"] == 0.0 and rows[1]["p_s"] == 0.0 and rows[1]["kernel"] is True


def test_gauge_boundary_apex(capsys, cones):
    code, out, _ = run(capsys, ["gauge", "--cone", cones / "orthant2.H.json", "--apex=-1,0",
                                "--point", "1,1"])
    assert code == 1 and json.loads(out)["error"] == "apex not interior"
    code, out, _ = run(capsys, ["gauge", "--cone", cones / "orthant2.H.json", "--apex=1,0",
                                "--point", "1,1"])
    assert code == 1 and "margin" in json.loads(out)["detail"]


def test_gauge_points_file_and_csv(capsys, cones):
    pts = cones / "pts.csv"
    pts.write_text("# points\n-3,2\n0,0\n")
    code, out, _ = run(capsys, ["gauge", "--cone", cones / "orthant2.H.json", "--apex", "1,1",
                                "--points", pts, "--format", "csv"])
    lines = out.splitlines()
    assert code == 0 and lines[0].startswith("# schema=1")
    assert lines[1] == "-3.0,2.0,2.0,3.0,false"


def test_retract(capsys, cones):
    code, out, _ = run(capsys, ["retract", "--cone", cones / "orthant2.H.json", "--apex", "1,1",
                                "--point=-3,2", "--point=-1,-2", "--point", "1,1"])
    a, b, c = json.loads(out)["points"]
    assert code == 0
    assert a["Q"] == [-5.0, 0.0] and a["R"] == [2.0, 2.0] and a["active_facet"] == 2
    assert b["Q"] == [-1.0, -2.0] and b["R"] == [0.0, 0.0] and b["active_facet"] is None
    assert c["Q"] == [0.0, 0.0] and c["R"] == [1.0, 1.0]


def test_audit_and_determinism(capsys, cones, tmp_path):
    args = ["audit", "--cone", cones / "wedge.H.json", "--apex", "0,1", "--samples", "500"]
    code, out1, _ = run(capsys, args)
    code2, out2, _ = run(capsys, args)
    assert code == code2 == 0 and out1 == out2
    report = json.loads(out1)
    assert report["pass"] is True and report["seed"] == 42
    assert [r["title"] for r in report["reports"]][1] == "retraction audit"
    code, out3, _ = run(capsys, args + ["--seed", "7"])
    assert out3 != out1 and json.loads(out3)["seed"] == 7


def test_audit_non_proper_cone(capsys, cones):
    code, out, _ = run(capsys, ["audit", "--cone", cones / "halfplane.json", "--apex=-1,0"])
    assert code == 1 and json.loads(out)["error"] == "cone not proper"


def test_proper_check(capsys, cones):
    code, out, _ = run(capsys, ["proper-check", "--functional", "euclidean", "--apex", "1,0",
                                "--samples", "300"])
    report = json.loads(out)
    assert code == 1 and report["pass"] is False
    conds = report["reports"][1]["checks"]
    assert not any(conds[k]["pass"] for k in ("condition_i", "condition_ii", "condition_iii_fwd"))
    code, out, _ = run(capsys, ["proper-check", "--cone", cones / "circular16.H.json",
                                "--apex", "0,0,1", "--samples", "300"])
    assert code == 0
    code, out, _ = run(capsys, ["proper-check", "--functional", "euclidean", "--apex", "1,1"])
    assert code == 1 and json.loads(out)["error"] == "apex precondition"


def test_sphere_dump(capsys, cones, tmp_path):
    out_file = tmp_path / "s.csv"
    args = ["sphere-dump", "--cone", cones / "wedge.H.json", "--apex", "0,1", "--count", "100",
            "--output", out_file]
    assert run(capsys, args)[0] == 0
    text = out_file.read_text()
    lines = text.splitlines()
    assert lines[0] == "# dim=2 seed=42" and len(lines) == 101
    g = get_fixture("wedge").gauge()
    pts = np.loadtxt(out_file, delimiter=",", comments="#")
    assert np.abs(g.values(pts) - 1.0).max() <= 1e-9
    run(capsys, args)
    assert out_file.read_bytes() == text.encode()
    code, out, _ = run(capsys, ["sphere-dump", "--cone", cones / "wedge.H.json", "--apex", "0,1",
                                "--count", "1"])
    assert len(out.splitlines()) == 2


def test_csv_rejected_for_reports(capsys, cones):
    code, _, err = run(capsys, ["audit", "--cone", cones / "wedge.H.json", "--apex", "0,1",
                                "--samples", "10", "--format", "csv"])
    assert code == 2


def test_fixture_export_round_trip(cones):
    index = json.loads((cones / "fixtures.json").read_text())
    assert [f["name"] for f in index["fixtures"]] == [f.name for f in fixture_suite()]
    for f in fixture_suite():
        for rep, cone in (("H", f.cone_h), ("V", f.cone_v)):
            again = load_cone(cones / ("%s.%s.json" % (f.name, rep)))
            assert np.abs(again.rows - cone.rows).max() <= 1e-12


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["gauge", "--samples", "0"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
    code, _, err = run(capsys, ["gauge", "--apex", "1,1", "--point", "1,1"])
    assert code == 2 and "--cone" in err
