import json

import pytest

from cohsys.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def usage_error(capsys, *argv):
    with pytest.raises(SystemExit) as exc:
        main(list(argv))
    capsys.readouterr()
    return exc.value.code


def test_pairing(capsys):
    assert run(capsys, "pairing", "1,3,2", "1,3,2") == (0, "1\n")
    assert run(capsys, "pairing", "-1,-2,-1", "0,1,1", "--genus", "2")[0] == 0


def test_bn(capsys):
    assert run(capsys, "bn", "3", "--refined") == (0, "2\n")
    assert run(capsys, "bn", "3") == (0, "5/2\n")
    assert run(capsys, "bn", "9/4", "--refined") == (0, "17/12\n")
    assert usage_error(capsys, "bn", "3", "--refined", "--genus", "5") == 2


def test_charge_and_qform(capsys):
    code, out = run(capsys, "charge", "1,3,2", "--output", "json")
    data = json.loads(out)
    assert code == 0 and data["re"] == "0" and data["im"] == "0" and data["slope"] == "kernel"
    assert run(capsys, "qform", "1,3,2") == (0, "-1/10\n")
    assert run(capsys, "qform", "1,3,1", "--params", "3", "2", "1", "1/10") == (0, "9/10\n")


def test_scan_json(capsys):
    code, out = run(capsys, "scan", "-1,-2,-1")
    data = json.loads(out)
    assert code == 0
    assert "unverified" in data["status"]
    walls = {(w["w"], tuple(w["destabilizer"])) for w in data["walls"]}
    assert ("2", (0, 1, 1)) in walls
    assert all(w["w"] == "2" for w in data["walls"])


def test_scan_wider_range_finds_w1(capsys):
    _, out = run(capsys, "scan", "-1,-2,-1", "--w-range", "1,10")
    data = json.loads(out)
    assert any(w["w"] == "1" and w["destabilizer"] == [0, 1, 0] for w in data["walls"])


def test_scan_is_deterministic(capsys, tmp_path):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for p in paths:
        assert run(capsys, "scan", "-1,-2,-1", "--out", str(p))[0] == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_scan_rejects_bad_class(capsys):
    # Im = 0 at b = 3
    assert usage_error(capsys, "scan", "1,3,0") == 2
    assert usage_error(capsys, "scan", "-1,-2,-1", "--w-range", "5,2") == 2


def test_plot(capsys):
    code, out = run(capsys, "plot", "--overlay")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "x,bound,overlay"
    assert "3,2,19/10" in lines
    _, out = run(capsys, "plot", "--range", "0,0")
    assert out.splitlines() == ["x,bound,overlay", "0,1,"]
    assert usage_error(capsys, "plot", "--step", "0") == 2


def test_plot_json_float(capsys):
    _, out = run(capsys, "plot", "--range", "2,3", "--step", "1/2", "--output", "json", "--float")
    rows = json.loads(out)
    assert [r["x"] for r in rows][:3] == ["2", "5/2", "3"]


def test_verify(capsys):
    code, out = run(capsys, "verify", "--r-max", "100")
    assert code == 0
    assert out.strip().endswith("10/10 checks passed")
    assert usage_error(capsys, "verify", "--genus", "3") == 2
