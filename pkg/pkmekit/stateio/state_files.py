import warnings

import numpy as np
from batchgenerators.utilities.file_and_folder_operations import save_json

from pkmekit.configuration import algebraic_tolerance, file_norm_tolerance, state_file_version
from pkmekit.stateio._common import load_versioned_json, read_int
from pkmekit.tensor_core.indexing import check_capacity
from pkmekit.tensor_core.pure_state import PureState
from pkmekit.utilities.exceptions import StateFileNormError, StateFileParseError, StateFileShapeError
from pkmekit.utilities.json_export import complex_to_pair, pair_to_complex


def write_state(state: PureState, path: str):
    # json writes floats with repr, the shortest decimal that reads back to the same double
    content = {
        'version': state_file_version,
        'n': state.n,
        'd': state.d,
        'amplitudes': [complex_to_pair(z) for z in state.amplitudes],
    }
    save_json(content, path, sort_keys=False)


def read_state(path: str, norm_tolerance: float = file_norm_tolerance) -> PureState:
    content = load_versioned_json(path, state_file_version, 'State')
    n = read_int(content, 'n', path, 1)
    d = read_int(content, 'd', path, 2)
    check_capacity(n, d)
    raw = content.get('amplitudes')
    if not isinstance(raw, list):
        raise StateFileParseError(f'Field "amplitudes" in {path} must be a list of [real, imaginary] pairs')
    try:
        amplitudes = np.array([pair_to_complex(p) for p in raw], dtype=np.complex128)
    except ValueError as e:
        raise StateFileParseError(f'Bad amplitude in {path}: {e}') from e
    if amplitudes.size != d ** n:
        raise StateFileShapeError(f'Shape mismatch in {path}: n={n}, d={d} needs d^n = {d ** n} amplitudes, the file '
                                  f'has {amplitudes.size}')
    norm = float(np.linalg.norm(amplitudes))
    if not abs(norm - 1) <= norm_tolerance:
        raise StateFileNormError(f'Norm violation in {path}: the amplitude vector has norm {norm!r}, allowed '
                                 f'deviation from 1 is {norm_tolerance}')
    if abs(norm - 1) > algebraic_tolerance:
        warnings.warn(f'State in {path} has norm {norm!r}; renormalizing.')
        amplitudes = amplitudes / norm
    return PureState(n, d, amplitudes)
