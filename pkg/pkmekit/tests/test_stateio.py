import json
import unittest
import warnings
from tempfile import TemporaryDirectory

import numpy as np
from batchgenerators.utilities.file_and_folder_operations import join, load_json, save_json

from pkmekit.constructors.pkme_states import pkme_4k, pkme_5
from pkmekit.constructors.reference_states import ghz
from pkmekit.gates.pipeline import apply_pipeline, paper_pipeline
from pkmekit.stateio.pipeline_files import read_pipeline, write_pipeline
from pkmekit.stateio.report_export import classification_to_dict, format_classification, format_report, \
    report_to_dict, write_report
from pkmekit.stateio.state_files import read_state, write_state
from pkmekit.structures.structure_spec import four_partite_spec
from pkmekit.tensor_core.pure_state import random_state
from pkmekit.tensor_core.unitary import RngState, haar_random_unitary
from pkmekit.utilities.exceptions import StateFileNormError, StateFileParseError, StateFileShapeError
from pkmekit.utilities.json_export import recursive_fix_for_json_export
from pkmekit.verification.verifier import classify, verify_pkme


class TestStateFiles(unittest.TestCase):
    def test_round_trip_is_bit_exact(self):
        with TemporaryDirectory() as tmp:
            for i, state in enumerate((ghz(2, 2), random_state(5, 3, RngState(1)), pkme_5(3))):
                path = join(tmp, f'state_{i}.json')
                write_state(state, path)
                loaded = read_state(path)
                self.assertEqual((loaded.n, loaded.d), (state.n, state.d))
                np.testing.assert_array_equal(loaded.amplitudes, state.amplitudes)

    def test_ghz_file_content(self):
        with TemporaryDirectory() as tmp:
            path = join(tmp, 'ghz.json')
            write_state(ghz(2, 2), path)
            content = load_json(path)
            self.assertEqual(content['version'], 1)
            self.assertAlmostEqual(content['amplitudes'][0][0], 1 / np.sqrt(2), places=15)
            self.assertEqual(content['amplitudes'][0][1], 0.0)
            self.assertEqual(content['amplitudes'][1], [0.0, 0.0])

    def test_shape_mismatch(self):
        with TemporaryDirectory() as tmp:
            path = join(tmp, 's.json')
            save_json({'version': 1, 'n': 2, 'd': 2, 'amplitudes': [[1, 0], [0, 0], [0, 0]]}, path)
            with self.assertRaisesRegex(StateFileShapeError, '4 amplitudes'):
                read_state(path)

    def test_norm_violation(self):
        with TemporaryDirectory() as tmp:
            path = join(tmp, 's.json')
            save_json({'version': 1, 'n': 1, 'd': 2, 'amplitudes': [[0.5, 0], [0, 0]]}, path)
            with self.assertRaisesRegex(StateFileNormError, 'norm 0.5'):
                read_state(path)

    def test_parse_errors(self):
        with TemporaryDirectory() as tmp:
            path = join(tmp, 's.json')
            with open(path, 'w') as f:
                f.write('{"version": 1, "n": ')
            with self.assertRaises(StateFileParseError):
                read_state(path)
            for content in ({'version': 2, 'n': 1, 'd': 2, 'amplitudes': [[1, 0], [0, 0]]},
                            {'version': 1, 'n': 1, 'amplitudes': [[1, 0], [0, 0]]},
                            {'version': 1, 'n': 1, 'd': 2, 'amplitudes': [[1, 0], [0]]},
                            {'version': 1, 'n': 1, 'd': 2, 'amplitudes': [[1, 0], ['a', 0]]},
                            [1, 2]):
                with open(path, 'w') as f:
                    json.dump(content, f)
                with self.assertRaises(StateFileParseError, msg=str(content)):
                    read_state(path)
            with self.assertRaises(StateFileParseError):
                read_state(join(tmp, 'missing.json'))

    def test_slightly_off_norm_is_renormalized(self):
        with TemporaryDirectory() as tmp:
            path = join(tmp, 's.json')
            save_json({'version': 1, 'n': 1, 'd': 2, 'amplitudes': [[1 + 1e-10, 0], [0, 0]]}, path)
            with warnings.catch_warnings(record=True) as caught:
                warnings.simplefilter('always')
                state = read_state(path)
            self.assertEqual(len(caught), 1)
            self.assertAlmostEqual(state.norm(), 1, delta=1e-15)


class TestPipelineFiles(unittest.TestCase):
    def test_round_trip(self):
        rng = RngState(3)
        families = [[haar_random_unitary(2, rng) for _ in range(2)] for _ in range(3)]
        pipeline = paper_pipeline('eight_qudit_fig4', *families)
        with TemporaryDirectory() as tmp:
            path = join(tmp, 'p.json')
            write_pipeline(pipeline, path)
            loaded = read_pipeline(path)
        self.assertEqual(loaded.site_pairs(), pipeline.site_pairs())
        for a, b in zip(loaded, pipeline):
            for ua, ub in zip(a.branches, b.branches):
                np.testing.assert_array_equal(ua.entries, ub.entries)
        np.testing.assert_array_equal(apply_pipeline(pkme_4k(2, 2), loaded).amplitudes,
                                      apply_pipeline(pkme_4k(2, 2), pipeline).amplitudes)

    def write_raw(self, tmp, branches, control=1, target=2):
        path = join(tmp, 'p.json')
        raw = [[[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(b, dtype=complex)]
               for b in branches]
        save_json({'version': 1, 'operations': [{'control': control, 'target': target, 'branches': raw}]}, path)
        return path

    def test_non_unitary_branch(self):
        with TemporaryDirectory() as tmp:
            path = self.write_raw(tmp, [np.eye(2), [[1, 1], [0, 1]]])
            with self.assertRaises(StateFileNormError):
                read_pipeline(path)

    def test_nearly_unitary_branch_is_snapped(self):
        with TemporaryDirectory() as tmp:
            path = self.write_raw(tmp, [np.eye(2), np.eye(2) * (1 + 1e-10)])
            with warnings.catch_warnings(record=True):
                warnings.simplefilter('always')
                pipeline = read_pipeline(path)
            np.testing.assert_allclose(pipeline.operations[0].branches[1].entries, np.eye(2), atol=1e-15)

    def test_bad_shapes_and_positions(self):
        with TemporaryDirectory() as tmp:
            with self.assertRaises(StateFileShapeError):
                read_pipeline(self.write_raw(tmp, [np.eye(3), np.eye(3)]))
            with self.assertRaises(StateFileShapeError):
                read_pipeline(self.write_raw(tmp, [np.eye(2)]))
            with self.assertRaises(StateFileParseError):
                read_pipeline(self.write_raw(tmp, [np.eye(2)] * 2, control=0))
            with self.assertRaises(StateFileParseError):
                read_pipeline(self.write_raw(tmp, [np.eye(2)] * 2, control=2, target=2))


class TestReportExport(unittest.TestCase):
    def test_report_dict(self):
        report = verify_pkme(ghz(4, 2), four_partite_spec(4, 1))
        out = report_to_dict(report)
        self.assertEqual(out['mode'], 'pkme')
        self.assertFalse(out['verdict'])
        self.assertEqual(out['num_checks'], 2)
        self.assertEqual(out['worst']['positions'], [1, 3])
        self.assertAlmostEqual(out['max_deviation'], .5, delta=1e-12)
        json.dumps(out)
        with TemporaryDirectory() as tmp:
            write_report(report, join(tmp, 'r.json'))
            self.assertEqual(load_json(join(tmp, 'r.json'))['checks'], out['checks'])

    def test_text_report(self):
        text = format_report(verify_pkme(ghz(4, 2), four_partite_spec(4, 1)))
        self.assertIn('verdict: FAIL', text)
        self.assertIn('0.5', text)
        self.assertIn('A: {1},{3} B: {2},{4}', text)

    def test_classification(self):
        result = classify(pkme_5(2))
        self.assertEqual(classification_to_dict(result)['PKME'], {'k=1': True})
        self.assertEqual(format_classification(result).splitlines(), ['AME: false', 'PME: false', 'PKME(k=1): true'])

    def test_numpy_types_are_fixed(self):
        d = {np.int64(3): np.float64(.5), 'flags': [np.bool_(True), (np.int32(1), 2)], 'z': np.complex128(1j),
             'arr': np.arange(3), 'nested': {'x': np.float32(2)}}
        recursive_fix_for_json_export(d)
        self.assertEqual(d, {3: .5, 'flags': [True, [1, 2]], 'z': [0., 1.], 'arr': [0, 1, 2], 'nested': {'x': 2.}})
        self.assertIs(type(d[3]), float)
        json.dumps(d)


if __name__ == '__main__':
    unittest.main()
