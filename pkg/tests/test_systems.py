import pytest
import sympy

from algebra import DomainError, UsageError, differentiate, gens
from systems import (ERRATA, MAIN_SYSTEMS, build_system, decomposition, erratum, h3,
                     hamiltonian_decomposition_check, hamiltonian_from_vector_field,
                     phase_degree, printed_system, scalar_piii_coefficients,
                     scalar_piii_reduction_check, transcription_check, vector_field)

q, p, t, al = gens("q p t al")


@pytest.mark.parametrize("sys_id,n_params", [("D6", 7), ("B5", 6), ("D52", 5), ("D51", 6)])
def test_main_systems_shape(sys_id, n_params):
    system = build_system(sys_id)
    assert system.phase_vars == ("x", "y", "z", "w", "q", "p")
    assert len(system.params) == n_params
    assert system.constraint.eliminated in system.params


def test_build_system_is_cached():
    assert build_system("D6") is build_system("D6")


def test_unknown_system():
    with pytest.raises(UsageError):
        build_system("E8")


def test_subsystems_have_one_pair():
    system = build_system("H3")
    assert system.pairs == (("q", "p"),)
    assert system.constraint is None


def test_hamilton_equations():
    field = vector_field(build_system("H4"))
    assert field.names == ("q", "p")
    assert field.component("q") == (2 * q**2 * p + al * q) / (2 * t)
    assert field.component("p") == -(2 * q * p**2 + al * p) / (2 * t)


@pytest.mark.parametrize("sys_id", ["D6", "B5", "D52"])
def test_transcription_matches_displayed_systems(sys_id):
    checks = transcription_check(build_system(sys_id))
    assert set(checks) == {"x", "y", "z", "w", "q", "p"}
    assert all(checks.values())


def test_no_displayed_system_for_d51():
    with pytest.raises(UsageError):
        printed_system("D51")


def test_d6_sign_erratum_is_recorded():
    assert ("D6", "x") in ERRATA
    assert "a0+a1" in erratum("D6", "x")
    assert erratum("B5", "x") == ""


@pytest.mark.parametrize("sys_id", ["D6", "B5", "D52"])
def test_hamiltonian_decompositions(sys_id):
    assert hamiltonian_decomposition_check(sys_id)


def test_decomposition_is_not_trivially_equal():
    system = build_system("D6")
    assert not system.equal(decomposition("D6"), system.hamiltonian + 1)


@pytest.mark.parametrize("sys_id", MAIN_SYSTEMS)
def test_degree_four_in_phase_variables(sys_id):
    assert phase_degree(build_system(sys_id)) == 4


def test_scalar_piii_reduction():
    assert scalar_piii_reduction_check()
    coefficients = scalar_piii_coefficients()
    b1 = sympy.Symbol("b1")
    assert coefficients["a"] == -8
    assert sympy.expand(coefficients["b"] - 4 * (1 - b1)) == 0
    assert coefficients["c"] == 0
    assert coefficients["d"] == -4


def test_hamiltonian_from_vector_field_recovers_h3():
    h = h3(q, p, t, al)
    recovered = hamiltonian_from_vector_field(differentiate(h, "p"), -differentiate(h, "q"))
    assert (recovered - h).free_of(["q", "p"])


def test_non_hamiltonian_field_is_rejected():
    with pytest.raises(DomainError):
        hamiltonian_from_vector_field(q, p)


def test_system_equality_uses_the_constraint():
    a0, a1, a2, a3, a4, a5, a6 = gens("a0 a1 a2 a3 a4 a5 a6")
    d6 = build_system("D6")
    assert d6.equal(a6, 1 - a0 - a1 - 2 * (a2 + a3 + a4) - a5)
    assert not d6.equal(a6, a5)
    assert not build_system("A1_D7").equal(al, al + 1)
