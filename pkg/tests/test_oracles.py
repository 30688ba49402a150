import json

import pytest

from crsatake.dsl import parse_spec
from crsatake.oracles import (
    AmbiguousLargest,
    SweepReport,
    oracle_fundamental,
    oracle_weak_largest,
    sweep_consistency,
    sweep_instances,
)
from crsatake.parabolic import is_fundamental, is_weakly_nondegenerate


@pytest.mark.parametrize("spec,fund,weak", [
    ("su(1,3) cross {1,2}", True, True),
    ("su(2,2) cross {2,3}", False, False),
    ("su(1,3) cross {2}", True, True),
    ("sl_r(3) cross {1}", False, True),
    ("compact(A2) cross {1,2}", True, False),
    ("ex(EIV) cross {1}", False, True),
])
def test_oracles_on_examples(spec, fund, weak):
    cd = parse_spec(spec)
    assert oracle_fundamental(cd) == is_fundamental(cd) == fund
    assert oracle_weak_largest(cd)[0] == is_weakly_nondegenerate(cd) == weak


def test_oracle_weak_gives_largest_parabolic():
    ok, psi = oracle_weak_largest(parse_spec("compact(A1) cross {1}"))
    assert not ok and psi == frozenset()


def test_ambiguous_largest_carries_witness():
    exc = AmbiguousLargest({1}, {2})
    assert exc.witness == (frozenset({1}), frozenset({2}))


def test_sweep_instances_bounds():
    assert sweep_instances(0) == []
    with pytest.raises(ValueError):
        sweep_instances(9)
    names = [d.name for d in sweep_instances(2)]
    assert names == sorted(names)
    assert "su(1,1) + su(1,1)" in names and "complex(A1)" in names


def test_sweep_rank1_counts():
    rep = sweep_consistency(1)
    assert (rep.forms_checked, rep.instances_checked, rep.fibrations_checked) == (4, 8, 12)
    assert not rep.mismatches


def test_sweep_rank3_clean():
    rep = sweep_consistency(3)
    assert rep.instances_checked == 540 and not rep.mismatches


def test_report_json():
    rep = SweepReport(3, [("su(1,1)", frozenset({1}), "weakly_nondeg", True, False)], 1, 4)
    data = json.loads(rep.to_json())
    assert data["mismatches"] == [{"form": "su(1,1)", "cross": [1], "property": "weakly_nondeg", "expected": True, "got": False}]
