"""Acceptance suite: eight end-to-end criteria, one PASS/FAIL line each.

Run ``pytest tests/test_acceptance.py -v`` (lines appear in the terminal
summary) or ``python -m tests.test_acceptance`` for the bare report.
"""
from __future__ import annotations

import json
import time

import pytest

from kkschur import poset, tables
from kkschur.cores import LevelContext
from kkschur.theorems import THEOREMS, Bounds, instances, scan, verify
from kkschur.theorems.harness import instance_key

from .conftest import ACCEPTANCE, GOLDEN
from .test_poset import read_figure


def _record(n: int, name: str, ok: bool, detail: str):
    line = f"ACCEPTANCE {n} {'PASS' if ok else 'FAIL'} {name} {detail}"
    ACCEPTANCE[n] = line
    print(line)
    assert ok, line


def _diff_lines(got: str, want: str) -> list[str]:
    """Row labels (the first two tab fields) of lines that differ."""
    g, w = got.splitlines(), want.splitlines()
    out = [" x ".join(a.split("\t")[:2]) for a, b in zip(g, w) if a != b]
    if len(g) != len(w):
        out.append(f"line count {len(g)} vs {len(w)}")
    return out


def _verdicts(vs) -> tuple[int, list[str]]:
    checked = sum(v.checked for v in vs)
    bad = [f"{v.statement}@k={v.k}:{len(v.counterexamples)}" for v in vs if not v.passed]
    return checked, bad


def test_criterion_1_rectangle_quotient_table():
    start = time.perf_counter()
    got = tables.table1_text(LevelContext.for_level(3))
    elapsed = time.perf_counter() - start
    want = (GOLDEN / "table1_k3.txt").read_text()
    diff = _diff_lines(got, want)
    ok = got == want and elapsed < 5
    _record(1, "table1_k3", ok, f"35 cells, {len(diff)} differ {diff}, {elapsed:.2f}s")


def test_criterion_2_minindex_table():
    start = time.perf_counter()
    got = tables.table2_text(LevelContext.for_level(3), 6)
    elapsed = time.perf_counter() - start
    want = (GOLDEN / "table2_k3.txt").read_text()
    diff = []
    for a, b in zip(got.splitlines()[1:], want.splitlines()[1:]):
        ca, cb = a.split("\t"), b.split("\t")
        diff += [f"{ca[0]} t={(i - 2) // 2 + 1}" for i in range(2, len(ca), 2) if ca[i:i + 2] != cb[i:i + 2]]
    ok = got == want and elapsed < 10
    _record(2, "table2_k3", ok, f"23 rows x 3 levels, {len(diff)} differ {diff}, {elapsed:.2f}s")


def test_criterion_3_theorem_suite():
    start = time.perf_counter()
    vs = []
    for k in (1, 2, 3, 4):
        ctx = LevelContext.for_level(k)
        vs += [verify(ctx, sid) for sid in THEOREMS]
        vs.append(verify(ctx, "RECT_PIERI", Bounds(max_total=3)))
        vs.append(verify(ctx, "SPLIT_RECTANGLES", Bounds(max_total=2 * k, max_mult=2, override=True)))
    elapsed = time.perf_counter() - start
    checked, bad = _verdicts(vs)
    ok = not bad and elapsed < 600
    _record(3, "theorem_suite", ok, f"{len(vs)} runs, {checked} instances, counterexamples {bad}, {elapsed:.1f}s")


def test_criterion_4_weak_strip_characterizations():
    vs = []
    for k in (2, 3):
        ctx = LevelContext.for_level(k)
        b = Bounds(max_size=8)
        vs += [verify(ctx, "WEAK_STRIP_EQUIV", b), verify(ctx, "ASV_COUNT", b)]
    checked, bad = _verdicts(vs)
    _record(4, "weak_strip_equivalence", not bad, f"{checked} instances, counterexamples {bad}")


def test_criterion_5_a_coefficients():
    vs = [verify(LevelContext.for_level(k), "A_COEFF") for k in (1, 2, 3, 4)]
    checked, bad = _verdicts(vs)
    _record(5, "a_coeff_closed_vs_recursive", not bad, f"{checked} shapes, counterexamples {bad}")


def test_criterion_6_binomial_identities():
    ctx = LevelContext.for_level(1)
    vs = [verify(ctx, "BINOM_INVERSE"), verify(ctx, "BINOM_IDENTITY")]
    checked, bad = _verdicts(vs)
    ok = not bad and vs[0].checked == 200
    _record(6, "binomial_identities", ok, f"{vs[0].checked} beta sequences, counterexamples {bad}")


def test_criterion_7_hasse_diagram():
    ctx = LevelContext.for_level(3)
    nodes, solid, dashed = read_figure()
    weak = set(poset.weak_edges(ctx, 6))
    strong = set(poset.strong_edges(ctx, 6))
    checks = {
        "nodes": set(poset.nodes(ctx, 6)) == set(nodes) and len(nodes) == 23,
        "weak_oracle": weak == poset.weak_edges_by_action(ctx, 6),
        "strong_oracle": strong == poset.strong_edges_by_reduction(ctx, 6),
        "solid": weak == solid,
        "dashed": strong - weak == dashed,
    }
    failed = [name for name, good in checks.items() if not good]
    _record(7, "hasse_diagram_k3", not failed,
            f"{len(nodes)} nodes, {len(weak)} weak, {len(strong - weak)} strong-only, failed {failed}")


def test_criterion_8_conjecture_scan(tmp_path):
    ids = ["CONJ_POSITIVITY", "CONJ_INTERVAL"]
    bad, problems, total = [], [], 0
    for k in (1, 2, 3):
        ctx = LevelContext.for_level(k)
        report = tmp_path / f"scan_k{k}.jsonl"
        partial = scan(ctx, ids, None, str(report), limit=3)
        if sum(v.checked for v in partial) != min(3, sum(len(instances(ctx, s)) for s in ids)):
            problems.append(f"k={k} limit not honoured")
        full = scan(ctx, ids, None, str(report))
        again = scan(ctx, ids, None, str(report))
        recs = [json.loads(line) for line in report.read_text().splitlines()]
        keys = [instance_key(r["statement"], r["k"], r["instance"]) for r in recs if r["type"] == "instance"]
        if len(keys) != len(set(keys)):
            problems.append(f"k={k} duplicate instances")
        expected = sum(len(instances(ctx, s)) for s in ids)
        if len(keys) != expected or [v.checked for v in full] != [v.checked for v in again]:
            problems.append(f"k={k} resume mismatch")
        if not all(r["complete"] for r in recs[-2:]):
            problems.append(f"k={k} incomplete")
        total += expected
        bad += [f"{v.statement}@k={k}" for v in full if not v.passed]
    _record(8, "conjecture_scan", not bad and not problems,
            f"{total} instances, counterexamples {bad}, report issues {problems}")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
