"""
Tests for the command line: one JSON document in, one JSON document out
"""

import io
import json

import pytest
import yaml

from src.cli import EXIT_ERROR, EXIT_FLAGGED, EXIT_OK, build_parser, run
from tests.conftest import DATA, ROOT

CONFIG = str(ROOT / 'config' / 'config.yaml')


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(['--config', CONFIG, *map(str, argv)], stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def invoke_json(*argv):
    code, out, err = invoke(*argv)
    return code, (json.loads(out) if out else None), (json.loads(err) if err.strip() else None)


def write_json(path, payload):
    path.write_text(json.dumps(payload))
    return path


# ----------------------------------------------------------------------------
# classify
# ----------------------------------------------------------------------------

@pytest.mark.parametrize('name,weight,kind,order,blocks', [
    ('mum.json', 3, 'III', 1, [4]),
    ('conifold.json', 3, 'I', 1, [2, 1, 1]),
    ('quintic_infinity.json', 3, 'IV', 5, [[5, 1]]),
    ('cubic_pair_infinity.json', 3, 'IV', 3, [[3, 2]]),
])
def test_classify(name, weight, kind, order, blocks):
    code, payload, _ = invoke_json('classify', '--weight', weight, '--matrix', DATA / 'matrices' / name)
    assert code == EXIT_OK
    assert payload['kind'] == kind
    assert payload['semisimple_order'] == order
    assert payload['blocks'] == blocks


def test_classify_rejection_is_a_verdict():
    code, payload, error = invoke_json('classify', '--weight', 3, '--matrix', DATA / 'matrices' / 'mixed.json')
    assert code == EXIT_OK
    assert error is None
    assert payload['kind'] is None
    assert payload['rejection']['error'] == 'MixedCase'


def test_classify_size_mismatch_is_an_error():
    code, payload, error = invoke_json('classify', '--weight', 2, '--matrix', DATA / 'matrices' / 'negative_mum.json')
    assert code == EXIT_ERROR
    assert payload is None
    assert error['error'] == 'PreconditionFailed'


def test_classify_not_quasi_unipotent():
    code, payload, _ = invoke_json('classify', '--weight', 1, '--matrix',
                                   DATA / 'matrices' / 'not_quasi_unipotent.json')
    assert code == EXIT_OK
    assert payload['rejection']['error'] == 'NotQuasiUnipotent'


def test_classify_respects_the_bound():
    code, payload, _ = invoke_json('classify', '--weight', 3, '--bound', 4,
                                   '--matrix', DATA / 'matrices' / 'quintic_infinity.json')
    assert code == EXIT_OK
    assert payload['rejection']['error'] == 'NotQuasiUnipotent'


@pytest.mark.parametrize('bound', [0, -5])
def test_classify_nonpositive_bound_is_an_error(bound):
    code, payload, error = invoke_json('classify', '--weight', 3, '--bound', bound,
                                       '--matrix', DATA / 'matrices' / 'quintic_infinity.json')
    assert code == EXIT_ERROR
    assert payload is None
    assert error['error'] == 'PreconditionFailed'


def test_classify_respects_max_rank(tmp_path):
    config = tmp_path / 'config.yaml'
    config.write_text(yaml.safe_dump({'algebra': {'max_rank': 3}, 'table': {}, 'system': {}, 'paths': {}}))
    out, err = io.StringIO(), io.StringIO()
    code = run(['--config', str(config), 'classify', '--weight', '3',
                '--matrix', str(DATA / 'matrices' / 'mum.json')], stdout=out, stderr=err)
    assert code == EXIT_ERROR
    assert 'max_rank' in json.loads(err.getvalue())['detail']


def test_malformed_matrix(tmp_path):
    path = write_json(tmp_path / 'bad.json', {'n': 2, 'entries': [['1', 'x'], ['0', '1']]})
    code, payload, error = invoke_json('classify', '--weight', 1, '--matrix', path)
    assert code == EXIT_ERROR
    assert payload is None
    assert error['error'] == 'MalformedInput'


def test_missing_file(tmp_path):
    code, _, error = invoke_json('classify', '--weight', 3, '--matrix', tmp_path / 'absent.json')
    assert code == EXIT_ERROR
    assert error['error'] == 'MalformedInput'


# ----------------------------------------------------------------------------
# filtration and ledger
# ----------------------------------------------------------------------------

def test_filtration_of_unipotent_input():
    code, payload, _ = invoke_json('filtration', '--matrix', DATA / 'matrices' / 'mum.json')
    assert code == EXIT_OK
    assert payload['m'] == 3
    assert payload['nilpotency_index'] == 4
    assert payload['jordan_blocks'] == [4]
    assert payload['graded_dimensions']['3'] == 1


def test_filtration_of_nilpotent_input(tmp_path):
    path = write_json(tmp_path / 'n.json', {'n': 3, 'entries': [['0', '1', '0'], ['0', '0', '0'], ['0', '0', '0']]})
    code, payload, _ = invoke_json('filtration', '--matrix', path)
    assert code == EXIT_OK
    assert payload['m'] == 1
    assert payload['jordan_blocks'] == [2, 1]
    assert payload['graded_dimensions'] == {'-1': 1, '0': 1, '1': 1}


def test_filtration_rejects_other_matrices():
    code, _, error = invoke_json('filtration', '--matrix', DATA / 'matrices' / 'quintic_infinity.json')
    assert code == EXIT_ERROR
    assert error['error'] == 'PreconditionFailed'


def test_ledger_by_type():
    code, payload, _ = invoke_json('ledger', '--weight', 3, '--type', 'III')
    assert code == EXIT_OK
    assert payload['lines'] == ['3,0', '2,1', '1,2', '0,3']
    assert payload['twist0'] == [-1, -1, 0, 0]
    assert payload['twist1'] == [0, 0, 0, 1]


def test_ledger_by_matrix():
    code, payload, _ = invoke_json('ledger', '--weight', 3, '--matrix', DATA / 'matrices' / 'quintic_infinity.json')
    assert code == EXIT_OK
    assert payload['kind'] == 'IV'
    assert payload['twist1'] == [1, 1, 1, 1]


@pytest.mark.parametrize('argv', [
    ('ledger', '--weight', 3),
    ('ledger', '--weight', 1, '--type', 'III'),
    ('ledger', '--weight', 3, '--type', 'V'),
])
def test_ledger_errors(argv):
    code, _, error = invoke_json(*argv)
    assert code == EXIT_ERROR
    assert error['error'] == 'MalformedInput'


# ----------------------------------------------------------------------------
# Hodge numbers
# ----------------------------------------------------------------------------

def test_hodge_closed_form():
    code, payload, _ = invoke_json('hodge', '--weight', 3, '--input', DATA / 'hodge' / 'quintic_e2.json')
    assert code == EXIT_OK
    assert payload['components'] == {'4,0': 0, '3,1': 0, '2,2': 1, '1,3': 0, '0,4': 0}
    assert payload['total'] == 1


def test_hodge_decomposed():
    code, payload, _ = invoke_json('hodge', '--weight', 3, '--decomposed',
                                   '--input', DATA / 'hodge' / 'decomposed.json')
    assert code == EXIT_OK
    assert payload['total'] == 0


def test_hodge_decomposed_rejects_unipotent_types():
    code, _, error = invoke_json('hodge', '--weight', 3, '--decomposed',
                                 '--input', DATA / 'hodge' / 'quintic_e2.json')
    assert code == EXIT_ERROR
    assert error['error'] == 'InconsistentInput'


def test_hodge_weight1(tmp_path):
    path = write_json(tmp_path / 'w1.json', {'g': 1, 'a': '0', 'counts': {'II': 1}, 'theta_nonzero': [True]})
    code, payload, _ = invoke_json('hodge', '--weight', 1, '--input', path)
    assert code == EXIT_OK
    assert payload['components'] == {'2,0': 1, '1,1': 0, '0,2': 1}


def test_hodge_inconsistent_counts(tmp_path):
    path = write_json(tmp_path / 'w2.json', {'g': 0, 'a': '1', 'counts': {'I': 2, 'II': 1}})
    code, _, error = invoke_json('hodge', '--weight', 2, '--input', path)
    assert code == EXIT_ERROR
    assert error['error'] == 'InconsistentInput'


def test_hodge_family():
    code, payload, _ = invoke_json('hodge-family', '--family', DATA / 'families' / 'quintic.json')
    assert code == EXIT_OK
    assert payload['resolved']['counts'] == {'I': 1, 'II': 0, 'III': 1, 'IV': 1}
    assert payload['hodge']['total'] == 0
    assert payload['agree'] is True


def test_base_change_round_trips_into_hodge_family(tmp_path):
    code, out, _ = invoke('base-change', '--family', DATA / 'families' / 'quintic.json',
                          '--e', 2, '--a', 0, '--b', 0)
    assert code == EXIT_OK
    payload = json.loads(out)
    assert [p['label'] for p in payload['points']] == ['0', '1#1', '1#2', 'inf']
    assert payload['resolved']['counts'] == {'I': 2, 'II': 0, 'III': 1, 'IV': 1}

    path = tmp_path / 'quintic_e2.json'
    path.write_text(out)
    code, report, _ = invoke_json('hodge-family', '--family', path)
    assert code == EXIT_OK
    assert report['hodge']['components']['2,2'] == 1
    assert report['agree'] is True


def test_base_change_without_degrees_needs_them_downstream(tmp_path):
    code, out, _ = invoke('base-change', '--family', DATA / 'families' / 'quintic.json', '--e', 5)
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload['a'] is None and payload['b'] is None
    assert payload['resolved']['counts'] == {'I': 5, 'II': 0, 'III': 1, 'IV': 0}

    path = tmp_path / 'quintic_e5.json'
    path.write_text(out)
    code, _, error = invoke_json('hodge-family', '--family', path)
    assert code == EXIT_ERROR
    assert error['error'] == 'PreconditionFailed'


def test_base_change_of_tagged_family():
    code, _, error = invoke_json('base-change', '--family', DATA / 'families' / 'decomposed.json', '--e', 2)
    assert code == EXIT_ERROR
    assert error['error'] == 'PreconditionFailed'


# ----------------------------------------------------------------------------
# Bounds
# ----------------------------------------------------------------------------

def test_arakelov_from_file():
    code, payload, _ = invoke_json('arakelov', '--input', DATA / 'hodge' / 'arakelov_weight3.json')
    assert code == EXIT_OK
    assert payload == {'bound': '3/2', 'degree': 1, 'holds': True}


def test_arakelov_from_flags():
    code, payload, _ = invoke_json('arakelov', '--k', 3, '--numD', 3, '--ranks', '1,1,1,1', '--kernels', '1,0,0,0')
    assert code == EXIT_OK
    assert payload == {'bound': '3/2'}
    code, payload, _ = invoke_json('arakelov', '--k', 3, '--numD', 3, '--ranks', '1,1,1,1', '--degree', 2)
    assert payload['holds'] is False


def test_arakelov_errors():
    assert invoke_json('arakelov', '--k', 2, '--ranks', '1,1,1')[0] == EXIT_ERROR
    code, _, error = invoke_json('arakelov', '--k', 3, '--ranks', '1,x')
    assert code == EXIT_ERROR
    assert error['error'] == 'MalformedInput'


def test_parabolic_degree():
    code, payload, _ = invoke_json('parabolic-degree', '--input', DATA / 'hodge' / 'parabolic_quintic.json')
    assert code == EXIT_OK
    assert payload == {'parabolic_degree': '2'}


# ----------------------------------------------------------------------------
# table-check
# ----------------------------------------------------------------------------

def test_table_check_flags_the_shipped_table():
    code, payload, _ = invoke_json('table-check', '--file', DATA / 'cy_table.json')
    assert code == EXIT_FLAGGED
    assert payload['summary']['rows'] == 55
    assert payload['summary']['flagged_rows'] == ['model 1 e=10']


def test_table_check_text_output():
    code, out, _ = invoke('--format', 'text', 'table-check', '--file', DATA / 'cy_table.json', '--kmax', 2)
    assert code == EXIT_FLAGGED
    assert '51 passed, 1 flagged' in out
    assert 'FLAG model 1 e=10' in out


def test_table_check_clean_table(tmp_path):
    document = json.loads((DATA / 'cy_table.json').read_text())
    document['models'] = [document['models'][1]]
    path = write_json(tmp_path / 'clean.json', document)
    code, payload, _ = invoke_json('table-check', '--file', path, '--workers', 2)
    assert code == EXIT_OK
    assert payload['summary'] == {'rows': 4, 'passed': 4, 'flagged': 0, 'flagged_rows': []}


@pytest.mark.parametrize('flag', ['--kmax', '--workers'])
def test_table_check_zero_options_are_errors(flag):
    code, payload, error = invoke_json('table-check', '--file', DATA / 'cy_table.json', flag, 0)
    assert code == EXIT_ERROR
    assert payload is None
    assert error['error'] in ('MalformedInput', 'PreconditionFailed')


def test_table_check_malformed_table(tmp_path):
    path = write_json(tmp_path / 'bad.json', {'models': [{'id': 1, 'model': 'x', 't_infty': 'I', 'rows': [
        {'e': 1, 'h1': 0, 'h40': 0, 'h31': [0, 1], 'h22': [0, 1, 2], 'a': 0, 'b': 0}]}]})
    code, _, error = invoke_json('table-check', '--file', path)
    assert code == EXIT_ERROR
    assert error['error'] == 'MalformedInput'
    assert 'column h31' in error['detail']


# ----------------------------------------------------------------------------
# Parser, formats and configuration
# ----------------------------------------------------------------------------

def test_text_format_renders_yaml():
    code, out, _ = invoke('--format', 'text', 'ledger', '--weight', 1, '--type', 'II')
    assert code == EXIT_OK
    assert yaml.safe_load(out)['twist1'] == [1, 1]


def test_usage_errors_exit_with_error_code():
    assert run(['classify', '--weight', '3'], stdout=io.StringIO(), stderr=io.StringIO()) == EXIT_ERROR
    assert run(['nonsense'], stdout=io.StringIO(), stderr=io.StringIO()) == EXIT_ERROR


def test_parser_lists_every_subcommand():
    help_text = build_parser().format_help()
    for command in ('classify', 'filtration', 'ledger', 'hodge', 'hodge-family', 'base-change',
                    'table-check', 'arakelov', 'parabolic-degree'):
        assert command in help_text
    assert 'Exit codes' in help_text


def test_missing_configuration_falls_back_to_defaults(tmp_path):
    out, err = io.StringIO(), io.StringIO()
    code = run(['--config', str(tmp_path / 'none.yaml'), 'ledger', '--weight', '2', '--type', 'I'],
               stdout=out, stderr=err)
    assert code == EXIT_OK
    assert json.loads(out.getvalue())['twist1'] == [0, 0, 1]


def test_invalid_configuration_is_reported(tmp_path):
    path = tmp_path / 'config.yaml'
    path.write_text(yaml.safe_dump({'algebra': {'quasi_unipotency_bound': 0}, 'table': {}, 'system': {}, 'paths': {}}))
    out, err = io.StringIO(), io.StringIO()
    code = run(['--config', str(path), 'ledger', '--weight', '3', '--type', 'IV'], stdout=out, stderr=err)
    assert code == EXIT_ERROR
    assert json.loads(err.getvalue())['error'] == 'MalformedInput'
    assert out.getvalue() == ''
