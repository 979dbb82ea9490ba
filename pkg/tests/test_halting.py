import math

import numpy as np
import pytest

from blochdyn import (
    HaltingMachineState,
    InputSelector,
    Picture,
    divergence,
    run_consistent_scenario,
    run_contradiction_sweep,
    step_machine,
)

UP = np.array([0.0, 0.0, 1.0])


class TestMachineState:
    def test_initial_configuration(self):
        m = HaltingMachineState.initial()
        for name in ("system", "system_basis", "halt", "halt_basis"):
            np.testing.assert_array_equal(getattr(m, name), UP)
        assert not m.halted
        assert m.is_initial()

    def test_non_unit_vector_rejected(self):
        with pytest.raises(ValueError):
            HaltingMachineState(UP, UP, UP, 2 * UP)


class TestStepMachine:
    def test_state_input_schrodinger(self):
        a = 1.3
        m = step_machine(HaltingMachineState.initial(), a,
                         Picture.SCHRODINGER, InputSelector.STATE_INPUT)
        np.testing.assert_allclose(m.system, [math.sin(a), 0, math.cos(a)],
                                   atol=1e-14)
        np.testing.assert_allclose(m.halt, [0, 0, -1], atol=1e-15)
        np.testing.assert_array_equal(m.system_basis, UP)
        np.testing.assert_array_equal(m.halt_basis, UP)
        assert m.halted

    def test_state_input_heisenberg(self):
        a = 1.3
        m = step_machine(HaltingMachineState.initial(), a,
                         Picture.HEISENBERG, InputSelector.STATE_INPUT)
        np.testing.assert_allclose(m.system_basis, [-math.sin(a), 0, math.cos(a)],
                                   atol=1e-14)
        np.testing.assert_allclose(m.halt_basis, [0, 0, -1], atol=1e-15)
        np.testing.assert_array_equal(m.system, UP)
        np.testing.assert_array_equal(m.halt, UP)
        assert m.halted

    def test_basis_input_schrodinger(self):
        a = 1.3
        m = step_machine(HaltingMachineState.initial(), a,
                         Picture.SCHRODINGER, InputSelector.BASIS_INPUT)
        np.testing.assert_allclose(m.system_basis, [math.sin(a), 0, math.cos(a)],
                                   atol=1e-14)
        np.testing.assert_allclose(m.halt, [0, 0, -1], atol=1e-15)
        assert m.halted

    def test_basis_input_heisenberg(self):
        a = 1.3
        m = step_machine(HaltingMachineState.initial(), a,
                         Picture.HEISENBERG, InputSelector.BASIS_INPUT)
        np.testing.assert_allclose(m.system_basis, [-math.sin(a), 0, math.cos(a)],
                                   atol=1e-14)
        np.testing.assert_allclose(m.halt_basis, [0, 0, -1], atol=1e-15)
        assert m.halted

    def test_requires_initial_configuration(self):
        m = step_machine(HaltingMachineState.initial(), 0.5,
                         Picture.SCHRODINGER, InputSelector.STATE_INPUT)
        with pytest.raises(ValueError):
            step_machine(m, 0.5, Picture.SCHRODINGER, InputSelector.STATE_INPUT)

    def test_non_finite_alpha_rejected(self):
        with pytest.raises(ValueError):
            step_machine(HaltingMachineState.initial(), float("nan"),
                         Picture.SCHRODINGER, InputSelector.STATE_INPUT)

    def test_subsystems_do_not_mix(self):
        # The y-rotation never touches the halt vectors and sigma_x never
        # touches the system vectors.
        for picture in Picture:
            for selector in InputSelector:
                m = step_machine(HaltingMachineState.initial(), 0.77,
                                 picture, selector)
                for name in ("halt", "halt_basis"):
                    vec = getattr(m, name)
                    assert vec[2] in (1.0, -1.0)
                    assert vec[0] == 0.0 and vec[1] == 0.0
                for name in ("system", "system_basis"):
                    assert abs(np.linalg.norm(getattr(m, name)) - 1) < 1e-12


class TestDivergence:
    def test_identical_vectors(self):
        assert divergence(UP, UP) == 0.0

    @pytest.mark.parametrize("a", np.linspace(0.0, math.pi / 2, 10))
    def test_twice_alpha(self, a):
        # arccos((sin a,0,cos a).(-sin a,0,cos a)) = arccos(cos 2a) = 2a
        # for a in [0, pi/2].
        v1 = np.array([math.sin(a), 0, math.cos(a)])
        v2 = np.array([-math.sin(a), 0, math.cos(a)])
        assert abs(divergence(v1, v2) - 2 * a) < 1e-10

    def test_agreement_at_pi(self):
        a = math.pi
        v1 = np.array([math.sin(a), 0, math.cos(a)])
        v2 = np.array([-math.sin(a), 0, math.cos(a)])
        assert divergence(v1, v2) < 1e-9

    def test_clamping_handles_rounding(self):
        v = np.array([1 / math.sqrt(3)] * 3)
        assert divergence(v, v) == 0.0
        assert abs(divergence(v, -v) - math.pi) < 1e-15


class TestContradictionSweep:
    def test_alpha_zero(self):
        (rec,) = run_contradiction_sweep([0.0])
        assert rec.divergence_angle == 0.0
        assert rec.halted_schrodinger and rec.halted_heisenberg

    def test_alpha_half_pi(self):
        (rec,) = run_contradiction_sweep([math.pi / 2])
        np.testing.assert_allclose(rec.schrodinger_output, [1, 0, 0], atol=1e-15)
        np.testing.assert_allclose(rec.heisenberg_output, [-1, 0, 0], atol=1e-15)
        assert abs(rec.divergence_angle - math.pi) < 1e-12
        assert rec.halted_schrodinger and rec.halted_heisenberg

    def test_alpha_pi(self):
        (rec,) = run_contradiction_sweep([math.pi])
        assert rec.divergence_angle < 1e-9
        assert rec.halted_schrodinger and rec.halted_heisenberg

    def test_divergence_law_on_grid(self):
        alphas = np.linspace(0, 2 * math.pi, 360, endpoint=False)
        for rec in run_contradiction_sweep(alphas):
            expected = math.acos(max(-1.0, min(1.0, math.cos(2 * rec.alpha))))
            assert abs(rec.divergence_angle - expected) < 1e-10
            assert rec.halted_schrodinger and rec.halted_heisenberg

    def test_zero_divergence_only_at_multiples_of_pi(self):
        alphas = np.linspace(0, 2 * math.pi, 360, endpoint=False)
        for rec in run_contradiction_sweep(alphas):
            near_kpi = min(rec.alpha % math.pi, math.pi - rec.alpha % math.pi) < 1e-6
            assert (rec.divergence_angle < 1e-9) == near_kpi


class TestConsistentScenario:
    def test_alpha_zero(self):
        report = run_consistent_scenario(0.0)
        assert report.schrodinger_expectation == 1.0
        assert report.heisenberg_expectation == 1.0
        assert report.both_halted

    def test_alpha_pi(self):
        report = run_consistent_scenario(math.pi)
        assert abs(report.schrodinger_expectation + 1.0) < 1e-12
        assert abs(report.heisenberg_expectation + 1.0) < 1e-12
        assert report.both_halted

    @pytest.mark.parametrize("a", np.linspace(0.0, 2 * math.pi, 25))
    def test_cosine_law(self, a):
        report = run_consistent_scenario(a)
        assert abs(report.schrodinger_expectation - math.cos(a)) < 1e-12
        assert abs(report.schrodinger_expectation
                   - report.heisenberg_expectation) < 1e-12
        assert report.both_halted
