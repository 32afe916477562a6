import pytest

from algebra import UsageError, is_polynomial
from holomorphy import (atlas, chart, chart_expression, chart_ids, chart_round_trip,
                        check_polynomiality, negative_control, verify_charts)
from systems import build_system


def test_chart_ids():
    assert chart_ids("D6") == ("r0", "r1", "r2", "r3", "r4", "r5", "r6")
    assert chart_ids("B5") == ("r0", "r1", "r2", "r3", "r4", "r5")
    assert chart_ids("D52") == ("r0", "r1", "r2", "r3", "r4")
    with pytest.raises(UsageError):
        atlas("D51")
    with pytest.raises(UsageError):
        chart("D6", "r7")


def test_composite_and_corrected_charts():
    assert chart("D6", "r4").parent == "r3"
    assert chart("D6", "r6").target == "H+q"
    assert chart("B5", "r3").parent == "r4"
    assert chart("D52", "r4").target == "H+1/p"


@pytest.mark.parametrize("sys_id", ["D6", "B5", "D52"])
def test_charts_invert(sys_id):
    assert all(chart_round_trip(sys_id, chart_id) for chart_id in chart_ids(sys_id))


@pytest.mark.parametrize("sys_id", ["D6", "B5", "D52"])
def test_polynomiality_in_every_chart(sys_id):
    records = verify_charts(sys_id)
    assert len(records) == len(chart_ids(sys_id))
    assert all(r.passed for r in records), [r.witness for r in records if not r.passed]


def test_r6_needs_the_correction_term():
    record = negative_control()
    assert record.passed
    bare = chart_expression("D6", "r6", target="H")
    assert not is_polynomial(bare, build_system("D6").phase_vars)


def test_hamiltonian_is_not_polynomial_in_a_foreign_chart():
    # the D52 correction target applied on the D6 chart r6 is meaningless
    expression = chart_expression("D6", "r0", target="H+1/p")
    assert not is_polynomial(expression, build_system("D6").phase_vars)


def test_record_labels():
    assert check_polynomiality("D6", "r4").name == "D6 r4(r3(H)) polynomial"
    assert check_polynomiality("D6", "r6").name == "D6 r6(H+q) polynomial"


def test_atlas_is_read_only():
    charts = atlas("D6")
    with pytest.raises(TypeError):
        charts["r0"] = charts["r1"]
    assert chart("D6", "r0").id == "r0"
