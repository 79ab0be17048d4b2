"""Report directory contents and rerun determinism."""

from __future__ import annotations

import hashlib
import json

from permgraph import write_report


def digest(path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def test_report_contents_and_determinism(tmp_path):
    kwargs = dict(n_max=16, census_max=6, materialize_max=16, x_max=12, gallery_n=14)
    first = write_report(tmp_path / "a", **kwargs)
    second = write_report(tmp_path / "b", **kwargs)
    assert [p.name for p in first] == [p.name for p in second]
    assert [p.name for p in first] == sorted(p.name for p in first)
    for p1, p2 in zip(first, second):
        assert digest(p1) == digest(p2), p1.name

    by_name = {p.name: p for p in first}
    counts = by_name["counts.tsv"].read_text()
    assert counts.startswith("n\ta(n)\n4\t1\n")
    assert by_name["compositions.tsv"].read_text().startswith("x\tt(x)\n0\t1\n")
    verdict = json.loads(by_name["crosscheck.json"].read_text())
    assert verdict["ok"] is True
    assert by_name["crosscheck.txt"].read_text().rstrip().endswith("all routes agree")
    for name in ("counts.png", "compositions.png", "boxcars.png"):
        assert by_name[name].read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_rewriting_the_same_directory_is_stable(tmp_path):
    out = tmp_path / "rep"
    first = write_report(out, n_max=12, census_max=4, materialize_max=12, figures=False)
    before = {p.name: digest(p) for p in first}
    second = write_report(out, n_max=12, census_max=4, materialize_max=12, figures=False)
    after = {p.name: digest(p) for p in second}
    assert before == after
