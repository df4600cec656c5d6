import json

import pytest

from chorbifold import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as e:
        cli.main(["no-such-command"])
    assert e.value.code == 2
    code, _, err = run(capsys, "low-index", "missing-file", "--index", "2")
    assert code == 2 and "no such file" in err
    code, _, _ = run(capsys, "critical-points", "--bisector", "B9")
    assert code == 2
    code, _, _ = run(capsys, "reproduce-paper", "--only", "nonsense")
    assert code == 2


def test_abelianize_and_tietze(tmp_path, capsys):
    f = tmp_path / "g.txt"
    f.write_text("gens: a b c\nrel: c a^-1 b^-1\nrel: a^2\nrel: b^2\n")
    code, out, _ = run(capsys, "abelianize", str(f))
    assert code == 0 and out.strip() == "(Z/2)^2"
    code, out, _ = run(capsys, "tietze", str(f), "--eliminate", "c")
    assert code == 0 and out.startswith("gens: a b\n")


def test_coset_enum_and_rs(capsys):
    code, out, _ = run(capsys, "coset-enum", "Q", "--subgroup", ",".join(
        ["b^-1", "a b^-1 a^-1", "a^-1 b^-1 a", "a^2 b^-1 a^-2", "a^-2 b^-1 a^2", "a^3 b^-1 a^-3"]))
    assert code == 0 and out.strip() == "index 6"
    code, out, _ = run(capsys, "rs", "Q", "--subgroup", "b^-1,a b^-1 a^-1,a^-1 b^-1 a,a^2 b^-1 a^-2,"
                       "a^-2 b^-1 a^2,a^3 b^-1 a^-3", "--simplify")
    assert code == 0 and "(Z/3)^6" in out


def test_coset_enum_overflow(capsys):
    code, _, err = run(capsys, "coset-enum", "Q", "--max-cosets", "10")
    assert code == 1 and "overflow" in err


def test_low_index(tmp_path, capsys):
    j = tmp_path / "li.json"
    code, out, _ = run(capsys, "low-index", "Q", "--index", "6", "--json", str(j))
    assert code == 0 and out.startswith("11 conjugacy classes")
    assert json.loads(j.read_text())["classes"] == 11


def test_wirtinger(capsys):
    code, out, _ = run(capsys, "wirtinger", "chain")
    assert code == 0
    assert "# 6 components, abelianization Z^6" in out
    assert "# row 13: not reproduced" in out


def test_verify_group_reports_failures(tmp_path, capsys):
    j = tmp_path / "g.json"
    code, out, _ = run(capsys, "verify-group", "--json", str(j))
    assert code == 1
    assert "ok   γ0³ = Id" in out and "FAIL τ0 γ0 τ0 = γ5" in out
    rows = json.loads(j.read_text())["checks"]
    assert any(r["check"] == "τ0 γ0 τ0 = γ5⁻¹" and r["holds"] for r in rows)


def test_intersect(tmp_path, capsys):
    csv = tmp_path / "t.csv"
    code, out, _ = run(capsys, "intersect", "--set", "B0,B1,B2", "--extra", "C", "--csv", str(csv))
    assert code == 0
    assert csv.read_text().splitlines()[0] == ",B0,B1,B2,C"
    code, out, _ = run(capsys, "intersect", "--pair", "C", "B0")
    assert code == 0 and "nu² - |mu|² = (1134)" in out
    code, out, _ = run(capsys, "intersect", "--pair", "B0", "B0b")
    assert "cospinal" in out


def test_octagon_figures(tmp_path, capsys):
    svg, csv = tmp_path / "o.svg", tmp_path / "o.csv"
    code, out, _ = run(capsys, "octagon", "--svg", str(svg), "--csv", str(csv), "--samples", "8")
    assert code == 0 and svg.read_text().startswith("<svg")
    assert "B0b/B11: (-0.162508, -0.933004, 0.321084)" in out
    code, _, _ = run(capsys, "octagon", "--samples", "1")
    assert code == 2


def test_precision_flag(capsys):
    code, out, _ = run(capsys, "critical-points", "--bisector", "B0b", "--precision", "9")
    assert code == 0 and "(-0.173624700, 0.942176764, 0.286631138)" in out


def test_reproduce_subset_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    code, out, err = run(capsys, "reproduce-paper", "--only", "intersections", "--json", str(a))
    assert "[1/6] row-B0" in err
    run(capsys, "reproduce-paper", "--only", "intersections", "--json", str(b))
    da, db = json.loads(a.read_text()), json.loads(b.read_text())
    da.pop("timestamp"), db.pop("timestamp")
    assert da == db
    claims = {c["claim"]: c["verdict"] for c in da["claims"]}
    assert len(claims) == len(cli.CLAIMS)
    assert claims["row-B0"] == "Verified" and claims["row-C"] == "Failed"
    assert claims["octagon"] == "Skipped"
    assert code == 1  # the C row does not reproduce


def test_claim_ids_unique():
    ids = [c[0] for c in cli.CLAIMS]
    assert len(ids) == len(set(ids))


def test_reproduce_captures_exceptions(monkeypatch):
    def boom(ctx):
        raise RuntimeError("broken")
    claims = [("x", "g", "somewhere", boom)]
    monkeypatch.setattr(cli, "CLAIMS", claims)
    monkeypatch.setattr(cli, "CLAIM_GROUPS", ["g"])
    reports, code = cli.reproduce_paper(report=None)
    assert code == 1 and reports[0].verdict == "Failed" and "broken" in reports[0].details[0]
