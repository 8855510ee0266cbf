import unittest

import numpy as np

from pkmekit.constructors.family_registry import FAMILY_BUILDERS, construct_family
from pkmekit.constructors.pkme_states import general_2mk, general_2mk1, pkme_4k, pkme_4k1, pkme_5, pkme_6qubit, \
    pkme_7, uniform_superposition
from pkmekit.constructors.reference_states import ame5_fixture, ghz, product_state
from pkmekit.structures.structure_spec import StructureSpec, four_partite_spec, general_2m_spec
from pkmekit.tensor_core.density_matrix import partial_trace
from pkmekit.tensor_core.indexing import basis_index
from pkmekit.tensor_core.unitary import RngState
from pkmekit.utilities.exceptions import CapacityError, DomainError
from pkmekit.verification.verifier import verify_ame, verify_pkme, verify_pme


def nonzero_kets(state):
    return {tuple(int(x) for x in np.unravel_index(i, (state.d,) * state.n))
            for i in np.flatnonzero(np.abs(state.amplitudes) > 1e-14)}


class TestPKMEStates(unittest.TestCase):
    def assertPassesPKME(self, state, spec, num_checks=None):
        report = verify_pkme(state, spec, 1e-10)
        self.assertTrue(report.verdict, f'{spec}: worst {report.worst}')
        self.assertLessEqual(report.max_deviation, 1e-12)
        if num_checks is not None:
            self.assertEqual(report.num_checks, num_checks)

    def test_pkme_4k_k1_position_order(self):
        state = pkme_4k(1, 2)
        self.assertEqual(nonzero_kets(state), {(0, 0, 0, 0), (0, 0, 1, 1), (1, 1, 0, 0), (1, 1, 1, 1)})
        np.testing.assert_allclose(np.abs(state.amplitudes[state.amplitudes != 0]), .5)

    def test_pkme_4k_k2(self):
        state = pkme_4k(2, 2)
        kets = nonzero_kets(state)
        self.assertEqual(len(kets), 16)
        for i, j, l, m in [(0, 1, 1, 0), (1, 1, 0, 1)]:
            self.assertIn((i, j, i, j, l, m, l, m), kets)
        self.assertAlmostEqual(state.amplitude((1, 0, 1, 0, 0, 1, 0, 1)), .25, places=15)

    def test_pkme_4k_passes(self):
        for k in (1, 2):
            for d in (2, 3):
                self.assertPassesPKME(pkme_4k(k, d), four_partite_spec(4 * k, k), num_checks=2 * k)
        self.assertPassesPKME(pkme_4k(3, 2), four_partite_spec(12, 3), num_checks=6)

    def test_pkme_4k_capacity(self):
        with self.assertRaises(CapacityError):
            pkme_4k(7, 2)
        with self.assertRaises(DomainError):
            pkme_4k(0, 2)

    def test_pkme_6qubit(self):
        state = pkme_6qubit()
        self.assertAlmostEqual(state.amplitude([0] * 6), 1 / (2 * np.sqrt(2)), places=15)
        self.assertEqual(state.amplitude([0, 1, 0, 0, 0, 0]), 0)
        self.assertPassesPKME(state, StructureSpec(6, (1, 2), (1, 2)), num_checks=12)

    def test_pkme_5(self):
        for d in (2, 3):
            self.assertPassesPKME(pkme_5(d), four_partite_spec(5, 1), num_checks=5)
        self.assertAlmostEqual(pkme_5(3).amplitude((1, 1, 2, 2, 0)), 1 / 3, places=15)
        rho = partial_trace(pkme_5(2), [1, 2])
        np.testing.assert_allclose(rho.entries, np.diag([.5, 0, 0, .5]), atol=1e-15)

    def test_pkme_4k1(self):
        np.testing.assert_array_equal(pkme_4k1(1).amplitudes, pkme_5(2).amplitudes)
        self.assertAlmostEqual(pkme_4k1(1).amplitude((1, 1, 1, 1, 0)), .5, places=15)
        self.assertPassesPKME(pkme_4k1(2), four_partite_spec(9, 2), num_checks=9)

    def test_pkme_7(self):
        state = pkme_7()
        self.assertAlmostEqual(state.amplitude((1, 0, 1, 0, 1, 1, 0)), 1 / (2 * np.sqrt(2)), places=15)
        self.assertPassesPKME(state, StructureSpec(7, (2, 1), (2, 2)), num_checks=7)
        report = verify_ame(state)
        self.assertFalse(report.verdict)
        self.assertEqual(report.num_checks, 35)

    def test_general_2mk_matches_4k(self):
        for k in (1, 2):
            np.testing.assert_allclose(general_2mk(2, k).amplitudes, pkme_4k(k, 2).amplitudes, atol=1e-15)

    def test_general_2mk1_matches_odd_states(self):
        np.testing.assert_allclose(general_2mk1(2, 1).amplitudes, pkme_5(2).amplitudes, atol=1e-15)
        np.testing.assert_allclose(general_2mk1(2, 2).amplitudes, pkme_4k1(2).amplitudes, atol=1e-15)

    def test_general_families_pass(self):
        for m in (2, 3):
            for k in (1, 2):
                self.assertPassesPKME(general_2mk(m, k), general_2m_spec(m, k))
                self.assertPassesPKME(general_2mk1(m, k), general_2m_spec(m, k, odd=True))
        self.assertPassesPKME(general_2mk(3, 1), StructureSpec(6, (1, 1, 1), (1, 1, 1)), num_checks=2)

    def test_general_odd_mk_normalization(self):
        # 2^(mk/2) is irrational here, the state is normalized explicitly
        state = general_2mk1(3, 1)
        self.assertAlmostEqual(state.norm(), 1, delta=1e-12)
        self.assertAlmostEqual(abs(state.amplitude((1, 1, 0, 0, 1, 1, 0))), 1 / np.sqrt(8), places=15)

    def test_uniform_superposition_checks_ket_length(self):
        with self.assertRaises(DomainError):
            uniform_superposition(3, 2, [(0, 0)])


class TestReferenceStates(unittest.TestCase):
    def test_ghz(self):
        np.testing.assert_allclose(partial_trace(ghz(2, 2), [1]).entries, np.eye(2) / 2, atol=1e-15)
        self.assertTrue(verify_ame(ghz(3, 2)).verdict)
        report = verify_pkme(ghz(4, 2), four_partite_spec(4, 1))
        self.assertFalse(report.verdict)
        self.assertEqual(report.worst.positions, (1, 3))
        self.assertAlmostEqual(report.worst.deviation, .5, delta=1e-12)
        with self.assertRaises(DomainError):
            ghz(1, 2)

    def test_ame5_fixture(self):
        state = ame5_fixture()
        report = verify_ame(state)
        self.assertEqual(report.num_checks, 10)
        self.assertTrue(report.verdict)
        self.assertLessEqual(report.max_deviation, 1e-12)
        self.assertTrue(verify_pme(state).verdict)
        self.assertTrue(verify_pkme(state, four_partite_spec(5, 1)).verdict)

    def test_product_state(self):
        state = product_state([0, 1, 1], 2)
        self.assertEqual(state.amplitudes[basis_index([0, 1, 1], 2)], 1)
        self.assertEqual(nonzero_kets(state), {(0, 1, 1)})


class TestFamilyRegistry(unittest.TestCase):
    def test_every_family_builds_a_normalized_state(self):
        kwargs = {'pkme4k': {'k': 1}, 'pkme4k1': {'k': 1}, 'general2mk': {'m': 2, 'k': 1},
                  'general2mk1': {'m': 2, 'k': 1}, 'family4': {'case': 'zero', 'rng': RngState(0)},
                  'ghz': {'n': 3}, 'product': {'n': 3}, 'random': {'n': 3, 'd': 3, 'rng': RngState(1)}}
        for name in FAMILY_BUILDERS.keys():
            state = construct_family(name, **kwargs.get(name, {}))
            self.assertAlmostEqual(state.norm(), 1, delta=1e-12, msg=name)

    def test_defaults_and_missing_arguments(self):
        self.assertEqual(construct_family('pkme5').d, 2)
        self.assertEqual(construct_family('pkme5', d=3).d, 3)
        with self.assertRaisesRegex(DomainError, '--k'):
            construct_family('pkme4k')
        with self.assertRaisesRegex(DomainError, '--seed'):
            construct_family('family4', case='prime')
        with self.assertRaises(DomainError):
            construct_family('does_not_exist')

    def test_seeded_families_are_reproducible(self):
        a = construct_family('family4', case='prime', rng=RngState(3))
        b = construct_family('family4', case='prime', rng=RngState(3))
        np.testing.assert_array_equal(a.amplitudes, b.amplitudes)


if __name__ == '__main__':
    unittest.main()
