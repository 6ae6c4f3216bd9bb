"""CLI surface: info, verify, render, export, determinism, cache."""

import json
import subprocess
import sys

from ncph.cli import main


def run_cli(args, cwd):
    return subprocess.run([sys.executable, "-m", "ncph.cli", *args],
                          cwd=cwd, capture_output=True, text=True)


def test_info_a2(tmp_path, capsys):
    assert main(["info", "A", "2", "--out", str(tmp_path), "--no-cache"]) == 0
    out = capsys.readouterr().out
    assert "rank n:      2" in out
    assert "order h:     3" in out
    assert "|T| = nh/2:  3" in out
    assert "rho_3" in out


def test_info_a1(tmp_path, capsys):
    assert main(["info", "A", "1", "--out", str(tmp_path), "--no-cache"]) == 0
    out = capsys.readouterr().out
    assert "order h:     2" in out
    assert "|T| = nh/2:  1" in out


def test_verify_single_suite(tmp_path, capsys):
    code = main(["verify", "A", "2", "--suite", "fibers",
                 "--out", str(tmp_path), "--no-cache"])
    assert code == 0
    assert "[PASS] A2 fibers" in capsys.readouterr().out


def test_verify_all_rank_one(tmp_path, capsys):
    code = main(["verify", "A", "1", "--all", "--out", str(tmp_path),
                 "--no-cache"])
    assert code == 0
    report = json.loads((tmp_path / "A1-verify.json").read_text())
    assert report["passed"] is True
    assert len(report["checks"]) == 10


def test_verify_all_b3_reports_expected_counts(tmp_path):
    code = main(["verify", "B", "3", "--all", "--out", str(tmp_path),
                 "--no-cache"])
    assert code == 0
    report = json.loads((tmp_path / "B3-verify.json").read_text())
    embed = next(c for c in report["checks"] if c["suite"] == "embed")
    assert embed["details"]["boundedChambers"] == 15
    assert embed["details"]["facets"] == 10


def test_export_ncp_a2(tmp_path):
    assert main(["export", "ncp", "A", "2", "--out", str(tmp_path),
                 "--no-cache"]) == 0
    data = json.loads((tmp_path / "A2-ncp.json").read_text())
    assert len(data["elements"]) == 5
    lengths = sorted(e["length"] for e in data["elements"])
    assert lengths == [0, 1, 1, 1, 2]
    assert sorted(data["hasse"]) == [[0, 1], [0, 2], [0, 3],
                                     [1, 4], [2, 4], [3, 4]]
    assert data["field"]["name"] == "Q(sqrt3)"


def test_export_xc_a1(tmp_path):
    assert main(["export", "xc", "A", "1", "--out", str(tmp_path),
                 "--no-cache"]) == 0
    data = json.loads((tmp_path / "A1-xc.json").read_text())
    assert len(data["vertices"]) == 1
    assert data["edges"] == []
    assert data["facets"] == [[1]]


def test_export_embed_b3(tmp_path):
    assert main(["export", "embed", "B", "3", "--out", str(tmp_path),
                 "--no-cache"]) == 0
    data = json.loads((tmp_path / "B3-embed.json").read_text())
    assert len(data["incidence"]) == 15
    assert all(len(row) == 10 for row in data["incidence"])
    assert data["rank"] == 10 and data["injective"] is True
    assert [2, 4, 8] in data["facets"]
    weight2 = [data["facets"][c] for c in range(10)
               if data["columnWeights"][c] == 2]
    assert weight2 == [[2, 4, 8]]


def test_export_lattice_a2(tmp_path):
    assert main(["export", "lattice", "A", "2", "--out", str(tmp_path),
                 "--no-cache"]) == 0
    data = json.loads((tmp_path / "A2-lattice.json").read_text())
    assert [f["codim"] for f in data["flats"]] == [0, 1, 1, 1, 2]


def test_export_determinism(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    for out in (a, b):
        main(["export", "embed", "B", "3", "--out", str(out), "--no-cache"])
        main(["render", "B", "3", "--out", str(out), "--no-cache"])
    assert (a / "B3-embed.json").read_bytes() == (b / "B3-embed.json").read_bytes()
    assert ((a / "B3-projection.svg").read_bytes()
            == (b / "B3-projection.svg").read_bytes())


def test_render_b3_markers(tmp_path):
    assert main(["render", "B", "3", "--out", str(tmp_path),
                 "--no-cache"]) == 0
    svg = (tmp_path / "B3-projection.svg").read_text()
    assert svg.count('class="facet"') == 10
    assert svg.count('class="region"') == 15
    assert svg.count('class="vertex-label"') == 9
    assert 'viewBox="0 0 1000 1000"' in svg


def test_render_a3_and_h3_run(tmp_path):
    assert main(["render", "A", "3", "--out", str(tmp_path),
                 "--no-cache"]) == 0
    svg = (tmp_path / "A3-projection.svg").read_text()
    assert svg.count('class="facet"') == 5
    assert svg.count('class="region"') == 6
    # H3 renders without error; its counts are recorded, not asserted here
    assert main(["render", "H", "3", "--out", str(tmp_path),
                 "--no-cache"]) == 0
    svg = (tmp_path / "H3-projection.svg").read_text()
    assert svg.count('class="facet"') == 21
    assert svg.count('class="vertex-label"') == 15


def test_render_wrong_rank_fails(tmp_path):
    assert main(["render", "A", "2", "--out", str(tmp_path),
                 "--no-cache"]) == 2


def test_matrix_file_input(tmp_path):
    mfile = tmp_path / "m.json"
    mfile.write_text("[[1,3],[3,1]]")
    assert main(["info", "--matrix", str(mfile), "--out", str(tmp_path),
                 "--no-cache"]) == 0


def test_not_finite_type_exit_code(tmp_path):
    mfile = tmp_path / "affine.json"
    mfile.write_text("[[1,3,3],[3,1,3],[3,3,1]]")
    assert main(["verify", "--matrix", str(mfile), "--all",
                 "--out", str(tmp_path), "--no-cache"]) == 2


def test_budget_exit_code(tmp_path):
    # budget overruns are reported distinctly from invariant failures
    assert main(["verify", "B", "3", "--all", "--group-cap", "10",
                 "--out", str(tmp_path), "--no-cache"]) == 3
    report = json.loads((tmp_path / "B3-verify.json").read_text())
    assert report["budgetExceeded"] is True


def test_cache_roundtrip_matches_fresh(tmp_path):
    cached_dir = tmp_path / "cached"
    main(["export", "ncp", "B", "2", "--out", str(cached_dir)])   # writes cache
    assert (cached_dir / "cache").is_dir()
    main(["export", "ncp", "B", "2", "--out", str(cached_dir)])   # reads cache
    fresh_dir = tmp_path / "fresh"
    main(["export", "ncp", "B", "2", "--out", str(fresh_dir), "--no-cache"])
    assert ((cached_dir / "B2-ncp.json").read_bytes()
            == (fresh_dir / "B2-ncp.json").read_bytes())


def test_info_b3_summary(tmp_path, capsys):
    assert main(["info", "B", "3", "--out", str(tmp_path), "--no-cache"]) == 0
    out = capsys.readouterr().out
    assert "rank n:      3" in out
    assert "order h:     6" in out
    assert "|W|:         48" in out
    assert "|T| = nh/2:  9" in out


def test_verify_all_h3(tmp_path):
    code = main(["verify", "H", "3", "--all", "--out", str(tmp_path),
                 "--no-cache"])
    assert code == 0
    report = json.loads((tmp_path / "H3-verify.json").read_text())
    assert report["passed"] is True
    embed = next(c for c in report["checks"] if c["suite"] == "embed")
    assert embed["details"]["facets"] == 21
    assert embed["details"]["boundedChambers"] == 45


def test_verify_all_passes_with_swapped_classes(tmp_path):
    # the other bipartition choice gives a conjugate rotation; every
    # invariant is convention-independent
    code = main(["verify", "A", "3", "--all", "--swap-classes",
                 "--out", str(tmp_path), "--no-cache"])
    assert code == 0


def test_swap_classes_changes_bipartition(tmp_path, capsys):
    main(["info", "A", "3", "--out", str(tmp_path), "--no-cache"])
    default = capsys.readouterr().out
    main(["info", "A", "3", "--swap-classes", "--out", str(tmp_path),
          "--no-cache"])
    swapped = capsys.readouterr().out
    assert "node order (1, 3, 2)" in default
    assert "node order (2, 1, 3)" in swapped


def test_cli_as_subprocess(tmp_path):
    result = run_cli(["info", "A", "2", "--out", str(tmp_path), "--no-cache"],
                     cwd=tmp_path)
    assert result.returncode == 0
    assert "|W|:         6" in result.stdout
