from collections.abc import Iterable

import numpy as np


def recursive_fix_for_json_export(my_dict: dict):
    keys = list(my_dict.keys())  # cannot iterate over keys() if we change keys....
    for k in keys:
        if isinstance(k, np.integer):
            tmp = my_dict[k]
            del my_dict[k]
            my_dict[int(k)] = tmp
            del tmp
            k = int(k)

        if isinstance(my_dict[k], dict):
            recursive_fix_for_json_export(my_dict[k])
        elif isinstance(my_dict[k], np.ndarray):
            my_dict[k] = fix_types_iterable(my_dict[k].tolist(), output_type=list)
        elif isinstance(my_dict[k], np.bool_):
            my_dict[k] = bool(my_dict[k])
        elif isinstance(my_dict[k], np.integer):
            my_dict[k] = int(my_dict[k])
        elif isinstance(my_dict[k], np.floating):
            my_dict[k] = float(my_dict[k])
        elif isinstance(my_dict[k], (complex, np.complexfloating)):
            my_dict[k] = complex_to_pair(my_dict[k])
        elif isinstance(my_dict[k], (list, tuple)):
            # tuples become lists, json has no tuples anyway
            my_dict[k] = fix_types_iterable(my_dict[k], output_type=list)
        else:
            pass  # str, int, float, bool, None


def fix_types_iterable(iterable, output_type):
    out = []
    for i in iterable:
        if isinstance(i, np.bool_):
            out.append(bool(i))
        elif isinstance(i, np.integer):
            out.append(int(i))
        elif isinstance(i, np.floating):
            out.append(float(i))
        elif isinstance(i, (complex, np.complexfloating)):
            out.append(complex_to_pair(i))
        elif isinstance(i, dict):
            recursive_fix_for_json_export(i)
            out.append(i)
        elif isinstance(i, str):
            out.append(i)
        elif isinstance(i, np.ndarray):
            out.append(fix_types_iterable(i.tolist(), list))
        elif isinstance(i, Iterable):
            out.append(fix_types_iterable(i, list))
        else:
            out.append(i)
    return output_type(out)


def complex_to_pair(z) -> list:
    # float() of a float64 is exact, and json writes floats with repr, so this survives a round trip bit for bit
    z = complex(z)
    return [float(z.real), float(z.imag)]


def pair_to_complex(pair) -> complex:
    if not isinstance(pair, (list, tuple)) or len(pair) != 2:
        raise ValueError(f'Expected a [real, imaginary] pair, got {pair!r}')
    re, im = pair
    if isinstance(re, bool) or isinstance(im, bool) or not isinstance(re, (int, float)) or \
            not isinstance(im, (int, float)):
        raise ValueError(f'Expected two numbers in [real, imaginary] pair, got {pair!r}')
    return complex(float(re), float(im))
