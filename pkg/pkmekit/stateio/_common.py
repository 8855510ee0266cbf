import json

from batchgenerators.utilities.file_and_folder_operations import isfile, load_json

from pkmekit.utilities.exceptions import StateFileParseError


def load_versioned_json(path: str, expected_version: int, kind: str) -> dict:
    if not isfile(path):
        raise StateFileParseError(f'{kind} file {path} does not exist')
    try:
        content = load_json(path)
    except (json.JSONDecodeError, UnicodeDecodeError) as e:
        raise StateFileParseError(f'Could not parse {kind} file {path}: {e}') from e
    if not isinstance(content, dict):
        raise StateFileParseError(f'{kind} file {path} must contain a JSON object at the top level')
    if content.get('version') != expected_version:
        raise StateFileParseError(f'{kind} file {path} has format version {content.get("version")!r}, this version '
                                  f'of pkmekit reads version {expected_version}')
    return content


def read_int(content: dict, key: str, path: str, minimum: int) -> int:
    value = content.get(key)
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise StateFileParseError(f'Field {key!r} in {path} must be an integer >= {minimum}, got {value!r}')
    return value
