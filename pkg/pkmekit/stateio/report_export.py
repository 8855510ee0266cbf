from typing import Dict

import pandas as pd
from batchgenerators.utilities.file_and_folder_operations import save_json

from pkmekit.configuration import report_file_version
from pkmekit.utilities.json_export import recursive_fix_for_json_export
from pkmekit.verification.report import CheckResult, VerificationReport


def _check_to_dict(check: CheckResult) -> dict:
    return {'subset': check.subset, 'positions': list(check.positions), 'deviation': check.deviation,
            'passed': check.passed}


def report_to_dict(report: VerificationReport) -> dict:
    worst = report.worst
    out = {
        'version': report_file_version,
        'mode': report.mode,
        'parameters': dict(report.parameters),
        'tolerance': report.tolerance,
        'verdict': report.verdict,
        'num_checks': report.num_checks,
        'max_deviation': report.max_deviation,
        'worst': None if worst is None else _check_to_dict(worst),
        'checks': [_check_to_dict(c) for c in report.checks],
        'metadata': dict(report.metadata),
    }
    recursive_fix_for_json_export(out)
    return out


def format_report(report: VerificationReport) -> str:
    lines = [f'mode: {report.mode}',
             'parameters: ' + ', '.join(f'{k}={v}' for k, v in report.parameters.items()),
             f'tolerance: {report.tolerance:g}',
             f'checks: {report.num_checks}']
    if report.num_checks > 0:
        table = pd.DataFrame({'subset': [c.subset for c in report.checks],
                              'deviation': [c.deviation for c in report.checks],
                              'pass': ['yes' if c.passed else 'NO' for c in report.checks]})
        lines.append(table.to_string(index=False, float_format=lambda x: f'{x:.6g}'))
        lines.append(f'worst: {report.worst.subset} deviation {report.worst.deviation:.6g}')
    lines.append(f'verdict: {"PASS" if report.verdict else "FAIL"}')
    return '\n'.join(lines)


def write_report(report: VerificationReport, path: str):
    save_json(report_to_dict(report), path, sort_keys=False)


def classification_to_dict(result: Dict[str, object]) -> dict:
    out = {'AME': result['AME'], 'PME': result['PME'],
           'PKME': {f'k={k}': v for k, v in result['PKME'].items()},
           'PKME_general': result['PKME_general'], 'implication_audit': result['implication_audit']}
    recursive_fix_for_json_export(out)
    return out


def format_classification(result: Dict[str, object]) -> str:
    def fmt(v):
        return 'n/a' if v is None else str(bool(v)).lower()
    lines = [f'AME: {fmt(result["AME"])}', f'PME: {fmt(result["PME"])}']
    lines += [f'PKME(k={k}): {fmt(v)}' for k, v in result['PKME'].items()]
    if result['PKME_general'] is not None:
        lines.append(f'PKME(general): {fmt(result["PKME_general"])}')
    return '\n'.join(lines)
