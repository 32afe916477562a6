import pytest

from algebra import RatFn, UsageError, VerificationFailure, gens, substitute
from confluence import (DEGENERATIONS, TRANSFORMS, constraint_image, degenerate, degeneration,
                        equivalence_B5_to_D51, limits, printed_hamiltonian, symplectic_tr,
                        transformed_hamiltonian, verify_a1_symmetry, verify_confluence,
                        verify_tk_relations, verify_uv_correspondence)
from confluence.degeneration import to_upper

x, a0, eps = gens("x a0 eps")
X, A0 = gens("X A0")


def test_to_upper_renames_variables_and_parameters():
    assert to_upper(x * a0, ("a0",)) == X * A0


def test_unknown_ids():
    with pytest.raises(UsageError):
        degeneration("D6_to_A1")
    with pytest.raises(UsageError):
        verify_confluence("d6-d51")
    with pytest.raises(UsageError):
        symplectic_tr("tr3")


@pytest.mark.parametrize("id", ["D6_to_B5", "D6_to_D52"])
def test_constraint_images(id):
    assert constraint_image(DEGENERATIONS[id])


@pytest.mark.parametrize("id", ["D6_to_B5", "D6_to_D52"])
def test_no_negative_eps_powers(id):
    orders = {name: order for name, (order, _) in limits(degeneration(id)).items()}
    assert set(orders) == {"X", "Y", "Z", "W", "Q", "P"}
    assert all(order >= 0 for order in orders.values())


@pytest.mark.parametrize("id", ["D6_to_B5", "D6_to_D52"])
def test_degenerations_reach_the_target_system(id):
    records = degenerate(id, strict=True)
    assert len(records) == 13
    assert all(r.passed for r in records)


def test_broken_degeneration_fails(monkeypatch):
    d = DEGENERATIONS["D6_to_B5"]
    broken = type(d)(d.id, d.source, d.target, dict(d.params, a1=-2 / eps), d.variables)
    monkeypatch.setitem(DEGENERATIONS, "D6_to_B5", broken)
    records = degenerate("D6_to_B5")
    assert not all(r.passed for r in records)
    with pytest.raises(VerificationFailure):
        degenerate("D6_to_B5", strict=True)


@pytest.mark.parametrize("id", ["tr1", "tr2", "tr5"])
def test_symplectic_transformations(id):
    records = symplectic_tr(id)
    assert [r.status for r in records] == ["pass", "pass", "recorded"]


def test_tr_hamiltonians_agree_up_to_functions_of_t():
    for tr in TRANSFORMS.values():
        difference = transformed_hamiltonian(tr) - printed_hamiltonian(tr)
        assert difference.free_of(["Q", "P"])


def test_tr5_needs_the_shifted_parameter():
    tr = TRANSFORMS["tr5"]
    al = gens("al")[0]
    plain = substitute(printed_hamiltonian(tr), {"al": al - 2})
    assert not (transformed_hamiltonian(tr) - plain).free_of(["Q", "P"])


def test_tk_relations():
    assert all(r.passed for r in verify_tk_relations())


def test_uv_correspondence():
    records = verify_uv_correspondence()
    assert records and all(r.passed for r in records)


def test_a1_symmetry():
    assert all(r.passed for r in verify_a1_symmetry())


def test_b5_to_d51_equivalence():
    records = equivalence_B5_to_D51()
    assert records and all(r.passed for r in records)


@pytest.mark.parametrize("which", ["d6-b5", "d6-d52", "b5-d51", "tr", "uv", "a1"])
def test_confluence_suites(which):
    assert all(r.passed for r in verify_confluence(which))
