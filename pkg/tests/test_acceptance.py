"""The ten acceptance criteria, one test each.

Each test prints a single PASS/FAIL line, collected into the terminal summary.
"""

import io
import json
import subprocess
import sys
import time

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES
from crsatake.cli import run
from crsatake.dsl import parse_spec
from crsatake.oracles import sweep_instances
from crsatake.parabolic import CrossedDiagram
from crsatake.render import to_json
from crsatake.rootcore import support
from crsatake.satake import build_conjugation, catalog_forms


def _report(n, ok, detail):
    line = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert ok, line


def _cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    t0 = time.perf_counter()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue(), time.perf_counter() - t0


def _mismatches(report, names):
    return [m for m in report.mismatches if any(m[2] == n or m[2].startswith(n + "_") or m[2].startswith(n + "[") for n in names)]


def test_c01_su13_fiber_over_psi1():
    code, out, _, dt = _cli("fiber", "su(1,3) cross {1,2}", "--psi", "{1}", "--format", "json")
    rep = json.loads(out)
    eff = rep["effective_fiber"]
    ok = (code == 0 and eff["rank"] == 1 and eff["black"] == eff["cross"] == [2]
          and eff.get("labels", [2]) == [2] and dt < 1.0)
    _report(1, ok, f"effective fiber {eff['black']} black, cross {eff['cross']}, {dt:.3f}s")


def test_c02_su13_fiber_over_psi2():
    code, out, _, dt = _cli("fiber", "su(1,3) cross {1,2}", "--psi", "{2}", "--format", "json")
    rep = json.loads(out)
    ok = code == 0 and rep["effective_fiber"]["rank"] == 0 and rep["is_cr_fibration"] is False and dt < 1.0
    _report(2, ok, f"trivial fiber, is_cr_fibration={rep['is_cr_fibration']}, {dt:.3f}s")


def test_c03_su22_fundamental_reduction():
    t0 = time.perf_counter()
    code1, out1, _, _ = _cli("classify", "su(2,2) cross {2,3}")
    code2, out2, _, _ = _cli("reduce", "su(2,2) cross {2,3}", "--mode", "fundamental", "--format", "json")
    dt = time.perf_counter() - t0
    red = json.loads(out2)
    fiber = red["fiber"]
    ok = (code1 == code2 == 0 and "fundamental=false" in out1.splitlines()
          and red["psi"] == [2] and red["base_cr_dim"] == 0
          and fiber["labels"] == [1, 3] and fiber["arrows"] == [[1, 3]]
          and fiber["black"] == [] and fiber["cross"] == [3] and dt < 1.0)
    _report(3, ok, f"psi={red['psi']}, n(base)={red['base_cr_dim']}, fiber nodes {fiber.get('labels')} cross {fiber['cross']}, {dt:.3f}s")


def test_c04_fundamental_oracle(sweep4):
    bad = _mismatches(sweep4, ["fundamental"])
    ok = not bad and sweep4.instances_checked >= 2000
    _report(4, ok, f"{sweep4.instances_checked} instances, {len(bad)} disagreements")


def test_c04_sweep_time():
    t0 = time.perf_counter()
    from crsatake.oracles import sweep_consistency
    rep = sweep_consistency(4)
    dt = time.perf_counter() - t0
    assert not rep.mismatches and dt < 120, dt


def test_c05_weak_oracle(sweep4):
    bad = _mismatches(sweep4, ["weakly_nondeg", "weak_largest_unique", "largest_intermediate"])
    _report(5, not bad, f"{sweep4.instances_checked} instances, {len(bad)} disagreements, no ambiguous largest")


def test_c06_dimension_identity(sweep4):
    bad = _mismatches(sweep4, ["dimension_identity", "conjugate_balance", "dimensions"])
    _report(6, not bad, f"{sweep4.instances_checked} instances, {len(bad)} violations")


def test_c07_reduction_postconditions(sweep4):
    bad = _mismatches(sweep4, [
        "fundamental_base_totally_real", "fundamental_fiber_is_fundamental",
        "closure_equals_reduction_base", "weak_base_weakly_nondeg", "weak_fiber_totally_complex",
    ])
    _report(7, not bad, f"{sweep4.instances_checked} instances, {len(bad)} violations")


def test_c08_implications_and_conjunction(sweep4):
    bad = _mismatches(sweep4, ["strict_implies_weak", "weak_implies_ideal", "conjunction"])
    _report(8, not bad and not sweep4.mismatches, f"{sweep4.instances_checked} instances, {len(bad)} violations, {len(sweep4.mismatches)} mismatches overall")


def _recheck_conjugation(d):
    c = build_conjugation(d)
    rs = d.rootsys
    S = c.sigma
    assert np.array_equal(S @ S, np.eye(rs.rank, dtype=S.dtype))
    assert {rs.apply(S, b) for b in rs.all_roots} == set(rs.all_roots)
    for b in rs.all_roots:
        img = rs.apply(S, b)
        assert (img == tuple(-x for x in b)) == (support(rs, b) <= d.black)
        if b in rs.positive and not support(rs, b) <= d.black:
            assert img in rs.positive
    for a in d.white:
        diff = np.array(rs.apply(S, rs.simple(a))) - np.array(rs.simple(c.epsilon[a]))
        for i, x in enumerate(diff):
            assert x >= 0 and (x == 0 or rs.labels[i] in d.black)


def test_c09_satake_validation():
    forms = catalog_forms(8)
    for d in forms:
        _recheck_conjugation(d)
    _report(9, True, f"{len(forms)} catalog forms up to rank 8 validated")


def test_c10_cli_contract():
    instances = [CrossedDiagram(d, frozenset(d.labels[i] for i in range(d.rootsys.rank) if m >> i & 1))
                 for d in sweep_instances(3) for m in range(1 << d.rootsys.rank)]
    roundtrip = all(parse_spec(to_json(cd)) == cd and to_json(parse_spec(to_json(cd))) == to_json(cd) for cd in instances)

    cmd = [sys.executable, "-m", "crsatake", "table", "--family", "su", "--rank-max", "4"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    deterministic = a == b and len(a) > 0

    codes = {
        "ok": _cli("classify", "su(1,3) cross {1}")[0],
        "parse": _cli("classify", "su(1,3 cross {1}")[0],
        "unknown form": _cli("classify", "xx(3) cross {1}")[0],
        "out of range": _cli("classify", "su(1,3) cross {9}")[0],
        "usage": _cli("table", "--family", "su")[0],
        "not fundamental": _cli("reduce", "su(2,2) cross {2,3}", "--mode", "weak")[0],
        "invalid arrows": _cli("classify", "custom A 3 arrows {(1,2)}")[0],
        "not satake": _cli("classify", "custom A 2 black {1}")[0],
        "malformed": _cli("classify", '{"type":"X","rank":2,"cartan":[[2,-3],[-3,2]]}')[0],
    }
    want = {"ok": 0, "parse": 1, "unknown form": 1, "out of range": 1, "usage": 1,
            "not fundamental": 1, "invalid arrows": 2, "not satake": 2, "malformed": 2}
    ok = roundtrip and deterministic and codes == want
    _report(10, ok, f"round trip on {len(instances)} instances={roundtrip}, table deterministic={deterministic}, exit codes {codes}")
