from typing import Callable, Dict, Union

from pkmekit.constructors.four_qubit_family import four_qubit_family, random_family_params
from pkmekit.constructors.pkme_states import general_2mk, general_2mk1, pkme_4k, pkme_4k1, pkme_5, pkme_6qubit, \
    pkme_7
from pkmekit.constructors.reference_states import ame5_fixture, ghz, product_state
from pkmekit.tensor_core.pure_state import PureState, random_state
from pkmekit.tensor_core.unitary import RngState
from pkmekit.utilities.exceptions import DomainError


def _require(value, flag: str, family: str):
    if value is None:
        raise DomainError(f'Family {family} needs {flag}')
    return value


def _default_d(d: Union[int, None]) -> int:
    return 2 if d is None else d


def _pkme4k(k=None, d=None, **kwargs) -> PureState:
    return pkme_4k(_require(k, '--k', 'pkme4k'), _default_d(d))


def _pkme5(d=None, **kwargs) -> PureState:
    return pkme_5(_default_d(d))


def _pkme4k1(k=None, **kwargs) -> PureState:
    return pkme_4k1(_require(k, '--k', 'pkme4k1'))


def _general2mk(m=None, k=None, **kwargs) -> PureState:
    return general_2mk(_require(m, '--m', 'general2mk'), _require(k, '--k', 'general2mk'))


def _general2mk1(m=None, k=None, **kwargs) -> PureState:
    return general_2mk1(_require(m, '--m', 'general2mk1'), _require(k, '--k', 'general2mk1'))


def _family4(case=None, rng=None, **kwargs) -> PureState:
    params = random_family_params(_require(case, '--case', 'family4'), _require(rng, '--seed', 'family4'))
    return four_qubit_family(params)


def _ghz(n=None, d=None, **kwargs) -> PureState:
    return ghz(_require(n, '--n', 'ghz'), _default_d(d))


def _product(n=None, d=None, **kwargs) -> PureState:
    return product_state([0] * _require(n, '--n', 'product'), _default_d(d))


def _random(n=None, d=None, rng=None, **kwargs) -> PureState:
    return random_state(_require(n, '--n', 'random'), _default_d(d), _require(rng, '--seed', 'random'))


FAMILY_BUILDERS: Dict[str, Callable[..., PureState]] = {
    'pkme4k': _pkme4k,
    'pkme6': lambda **kwargs: pkme_6qubit(),
    'pkme5': _pkme5,
    'pkme4k1': _pkme4k1,
    'pkme7': lambda **kwargs: pkme_7(),
    'general2mk': _general2mk,
    'general2mk1': _general2mk1,
    'family4': _family4,
    'ghz': _ghz,
    'ame5': lambda **kwargs: ame5_fixture(),
    'product': _product,
    'random': _random,
}


def construct_family(name: str, k: int = None, d: int = None, m: int = None, n: int = None, case: str = None,
                     rng: RngState = None) -> PureState:
    """
    Builds a named state. Families that need unitaries (family4) or amplitudes (random) draw them from rng; all
    others ignore it. Unused arguments are ignored.
    """
    if name not in FAMILY_BUILDERS:
        raise DomainError(f'Unknown family {name!r}. Available families: {sorted(FAMILY_BUILDERS.keys())}')
    return FAMILY_BUILDERS[name](k=k, d=d, m=m, n=n, case=case, rng=rng)
