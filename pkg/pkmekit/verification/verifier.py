import multiprocessing
from itertools import combinations
from time import sleep
from typing import Dict, List, Sequence, Tuple, Union

from scipy.special import comb
from tqdm import tqdm

from pkmekit.configuration import default_ame_subset_budget, default_num_processes, default_tolerance
from pkmekit.structures.planar_structure import enumerate_structures
from pkmekit.structures.structure_spec import StructureSpec, four_partite_spec, valid_four_partite_ks
from pkmekit.tensor_core.density_matrix import deviation_from_maximally_mixed, partial_trace
from pkmekit.tensor_core.pure_state import PureState
from pkmekit.utilities.exceptions import BudgetExceededError, DomainError
from pkmekit.verification.report import CheckResult, VerificationReport


def _format_set(positions: Sequence[int]) -> str:
    return '{' + ','.join(str(p) for p in sorted(positions)) + '}'


def _check_tolerance(tol: float):
    if not tol > 0:
        raise DomainError(f'Tolerance must be positive, got {tol!r}')


def region_deviation(state: PureState, positions: Sequence[int]) -> float:
    # always trace in sorted order: the same subset reached from different modes gives the same number
    return deviation_from_maximally_mixed(partial_trace(state, sorted(positions)))


def _run_checks(state: PureState, regions: List[Tuple[str, Tuple[int, ...]]], tol: float, num_processes: int,
                show_progress_bar: bool, desc: str) -> Tuple[CheckResult, ...]:
    if num_processes > 1 and len(regions) > 1:
        r = []
        with multiprocessing.get_context("spawn").Pool(num_processes) as pool:
            for _, positions in regions:
                r.append(pool.starmap_async(region_deviation, ((state, positions),)))
            remaining = list(range(len(regions)))
            # dead workers get respawned but never pick up their task again, so watch the original ones
            workers = [j for j in pool._pool]
            with tqdm(desc=desc, total=len(regions), disable=not show_progress_bar) as pbar:
                while len(remaining) > 0:
                    if not all([j.is_alive() for j in workers]):
                        raise RuntimeError('A background worker died while computing reduced states. This is '
                                           'usually the OS killing it for lack of RAM: try fewer processes')
                    done = [i for i in remaining if r[i].ready()]
                    pbar.update(len(done))
                    remaining = [i for i in remaining if i not in done]
                    if len(remaining) > 0:
                        sleep(0.1)
            # results are collected in submission order, so the report order does not depend on scheduling
            deviations = [i.get()[0] for i in r]
    else:
        deviations = [region_deviation(state, positions) for _, positions in
                      tqdm(regions, desc=desc, disable=not show_progress_bar)]
    return tuple(CheckResult(label, tuple(positions), float(dev), bool(dev <= tol))
                 for (label, positions), dev in zip(regions, deviations))


def verify_pkme(state: PureState, spec: StructureSpec, tol: float = default_tolerance,
                exhaustive_subsets: bool = False, num_processes: int = default_num_processes,
                show_progress_bar: bool = False) -> VerificationReport:
    """
    One check per planar structure: region A as a whole must be maximally mixed. This covers every subset of
    region A because tracing I/d^k down gives I/d^j again. exhaustive_subsets=True checks the proper subsets as well.
    """
    _check_tolerance(tol)
    if state.n != spec.n:
        raise DomainError(f'Spec is for n={spec.n} particles but the state has n={state.n}')
    regions = []
    for structure in enumerate_structures(spec):
        region_a = structure.region_a
        regions.append((str(structure), region_a))
        if exhaustive_subsets:
            for size in range(1, len(region_a)):
                for subset in combinations(region_a, size):
                    regions.append((f'{structure} | subset {_format_set(subset)}', subset))
    checks = _run_checks(state, regions, tol, num_processes, show_progress_bar, 'PKME structures')
    parameters = {'n': spec.n, 'a_sizes': list(spec.a_sizes), 'b_sizes': list(spec.b_sizes),
                  'exhaustive_subsets': exhaustive_subsets}
    return VerificationReport('pkme', parameters, checks, tol, {'d': state.d})


def _cyclic_window(start: int, width: int, n: int) -> Tuple[int, ...]:
    return tuple((start - 1 + i) % n + 1 for i in range(width))


def verify_pme(state: PureState, tol: float = default_tolerance, num_processes: int = default_num_processes,
               show_progress_bar: bool = False) -> VerificationReport:
    _check_tolerance(tol)
    if state.n < 2:
        raise DomainError(f'PME needs at least 2 particles, got n={state.n}')
    width = state.n // 2
    regions = [(_format_set(w), w) for w in (_cyclic_window(s, width, state.n) for s in range(1, state.n + 1))]
    checks = _run_checks(state, regions, tol, num_processes, show_progress_bar, 'PME windows')
    return VerificationReport('pme', {'n': state.n, 'window': width}, checks, tol, {'d': state.d})


def verify_ame(state: PureState, tol: float = default_tolerance, subset_budget: int = default_ame_subset_budget,
               num_processes: int = default_num_processes, show_progress_bar: bool = False) -> VerificationReport:
    _check_tolerance(tol)
    if state.n < 2:
        raise DomainError(f'AME needs at least 2 particles, got n={state.n}')
    width = state.n // 2
    num_subsets = int(comb(state.n, width, exact=True))
    if num_subsets > subset_budget:
        raise BudgetExceededError(f'AME check of n={state.n} needs C({state.n}, {width}) = {num_subsets} subsets, '
                                  f'which exceeds the budget of {subset_budget}. Raise the budget to run it; no '
                                  f'partial verdict is returned.')
    regions = [(_format_set(s), s) for s in combinations(range(1, state.n + 1), width)]
    checks = _run_checks(state, regions, tol, num_processes, show_progress_bar, 'AME subsets')
    return VerificationReport('ame', {'n': state.n, 'subset_size': width}, checks, tol, {'d': state.d})


def classify(state: PureState, tol: float = default_tolerance, general_spec: Union[StructureSpec, None] = None,
             subset_budget: int = default_ame_subset_budget, num_processes: int = default_num_processes,
             show_progress_bar: bool = False) -> Dict[str, object]:
    """
    AME / PME / per-k PKME verdicts. AME is None when it is over budget, AME and PME are None for n < 2. If AME
    passes, every other verdict must pass too; anything else means the numerics are broken and raises.
    """
    _check_tolerance(tol)
    result = {'AME': None, 'PME': None, 'PKME': {}, 'PKME_general': None, 'implication_audit': True}
    if state.n >= 2:
        try:
            result['AME'] = verify_ame(state, tol, subset_budget, num_processes, show_progress_bar).verdict
        except BudgetExceededError:
            pass
        result['PME'] = verify_pme(state, tol, num_processes, show_progress_bar).verdict
    for k in valid_four_partite_ks(state.n):
        result['PKME'][k] = verify_pkme(state, four_partite_spec(state.n, k), tol, num_processes=num_processes,
                                        show_progress_bar=show_progress_bar).verdict
    if general_spec is not None:
        result['PKME_general'] = verify_pkme(state, general_spec, tol, num_processes=num_processes,
                                             show_progress_bar=show_progress_bar).verdict

    if result['AME']:
        implied = [result['PME']] + list(result['PKME'].values())
        if result['PKME_general'] is not None:
            implied.append(result['PKME_general'])
        if not all(implied):
            raise RuntimeError(f'Implication audit failed: the state passed AME but not every implied check '
                               f'({result}). Every PME window and PKME region is one of the AME subsets, so this '
                               f'points to a numerical problem rather than a property of the state.')
    return result
