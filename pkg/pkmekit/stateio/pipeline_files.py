import warnings

import numpy as np
from batchgenerators.utilities.file_and_folder_operations import save_json
from scipy.linalg import polar

from pkmekit.configuration import file_unitarity_tolerance, pipeline_file_version, unitarity_tolerance
from pkmekit.gates.controlled_op import ControlledOp
from pkmekit.gates.pipeline import Pipeline
from pkmekit.stateio._common import load_versioned_json, read_int
from pkmekit.tensor_core.unitary import unitarity_error
from pkmekit.utilities.exceptions import DomainError, StateFileNormError, StateFileParseError, StateFileShapeError
from pkmekit.utilities.json_export import complex_to_pair, pair_to_complex


def write_pipeline(pipeline: Pipeline, path: str):
    operations = []
    for op in pipeline:
        operations.append({
            'control': op.control,
            'target': op.target,
            'branches': [[[complex_to_pair(z) for z in row] for row in b.entries] for b in op.branches],
        })
    save_json({'version': pipeline_file_version, 'operations': operations}, path, sort_keys=False)


def _read_branch(raw, d: int, where: str, tolerance: float) -> np.ndarray:
    if not isinstance(raw, list) or len(raw) != d or any(not isinstance(row, list) or len(row) != d for row in raw):
        raise StateFileShapeError(f'{where}: with {d} branches every branch must be a {d}x{d} matrix')
    try:
        matrix = np.array([[pair_to_complex(z) for z in row] for row in raw], dtype=np.complex128)
    except ValueError as e:
        raise StateFileParseError(f'{where}: {e}') from e
    err = unitarity_error(matrix)
    if not err <= tolerance:
        raise StateFileNormError(f'{where} is not unitary: ||U^dagger U - I||_F = {err:.3e} exceeds {tolerance}')
    if err > unitarity_tolerance:
        warnings.warn(f'{where} deviates from unitarity by {err:.3e}; replacing it with its polar factor.')
        matrix, _ = polar(matrix)
    return matrix


def read_pipeline(path: str, unitarity_tol: float = file_unitarity_tolerance) -> Pipeline:
    content = load_versioned_json(path, pipeline_file_version, 'Pipeline')
    raw_ops = content.get('operations')
    if not isinstance(raw_ops, list):
        raise StateFileParseError(f'Field "operations" in {path} must be a list')
    ops = []
    for i, raw in enumerate(raw_ops):
        where = f'{path}, operation {i}'
        if not isinstance(raw, dict):
            raise StateFileParseError(f'{where} must be an object with control, target and branches')
        control = read_int(raw, 'control', where, 1)
        target = read_int(raw, 'target', where, 1)
        branches = raw.get('branches')
        if not isinstance(branches, list) or len(branches) < 2:
            raise StateFileShapeError(f'{where}: "branches" must list one matrix per control digit (at least 2)')
        d = len(branches)
        matrices = [_read_branch(b, d, f'{where}, branch {j}', unitarity_tol) for j, b in enumerate(branches)]
        try:
            ops.append(ControlledOp(control, target, matrices))
        except DomainError as e:
            raise StateFileParseError(f'{where}: {e}') from e
    return Pipeline(ops)
