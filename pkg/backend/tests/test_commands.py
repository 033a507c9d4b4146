import json

import pytest
from django.core.management.base import CommandError

from api.checks import CHECKS, CheckReport


def _codes(run_command, *args):
    with pytest.raises(CommandError) as error:
        run_command(*args)
    return error.value.returncode


def test_tensor(run_command):
    report = json.loads(run_command(
        'tensor', '--datum=A1', '--weight=1', '--weight=1'
    ))
    assert report['terms'] == [
        {'weight': [0], 'mult': 1},
        {'weight': [2], 'mult': 1},
    ]
    assert report['datum']['label'] == 'A1'


def test_tensor_with_the_trivial_representation(run_command):
    report = json.loads(run_command(
        'tensor', '--datum=A2', '--weight=2,1', '--weight=0,0'
    ))
    assert report['terms'] == [{'weight': [2, 1], 'mult': 1}]


def test_tensor_of_three_factors(run_command):
    report = json.loads(run_command(
        'tensor', '--datum=A1', '--weight=1', '--weight=1', '--weight=1'
    ))
    assert report['terms'] == [
        {'weight': [1], 'mult': 2},
        {'weight': [3], 'mult': 1},
    ]


def test_branch(run_command):
    report = json.loads(run_command(
        'branch', '--model=a1-torus', '--weight=2'
    ))
    assert report['terms'] == [
        {'weight': [-2], 'mult': 1},
        {'weight': [0], 'mult': 1},
        {'weight': [2], 'mult': 1},
    ]


def test_quantise_su2(run_command):
    report = json.loads(run_command(
        'quantise', '--model=su2-c2', '--radius=8'
    ))
    assert report['radius'] == 8
    assert report['series']['terms'] == [
        {'weight': [k], 'mult': 1} for k in range(5)
    ]
    assert report['model']['datum']['label'] == 'A1'


def test_quantise_coadjoint_orbit(run_command):
    report = json.loads(run_command('quantise', '--model=coadjoint-a2'))
    assert report['radius'] == 8
    assert report['series']['terms'] == [{'weight': [1, 0], 'mult': 1}]


def test_quantise_induced_model(run_command):
    report = json.loads(run_command(
        'quantise', '--model=su2-c2-d2', '--radius=2'
    ))
    assert report['model']['d'] == 2
    assert len(report['series']['terms']) == 3


@pytest.mark.parametrize('formal', [False, True])
def test_induce(run_command, formal):
    args = ['induce', '--model=t1-11-induced', '--radius=9/2']
    if formal:
        args.append('--formal')
    report = json.loads(run_command(*args))
    assert report['radius'] == '9/2'
    assert report['model']['d'] == 0
    assert report['series']['terms'] == [
        {'weight': [k], 'mult': k + 1} for k in range(3)
    ]


def test_shift(run_command):
    report = json.loads(run_command('shift', '--model=t1-11', '--radius=4'))
    assert report['series']['terms'] == [
        {'weight': [k], 'mult': k + 1} for k in range(3)
    ]


def test_output_is_deterministic(run_command, tmp_path):
    first = run_command('quantise', '--model=t2-identity', '--radius=5')
    second = run_command('quantise', '--model=t2-identity', '--radius=5')
    assert first == second
    out = tmp_path / 'report.json'
    assert run_command(
        'quantise', '--model=t2-identity', '--radius=5', f'--out={out}'
    ) == ''
    assert out.read_text(encoding='utf-8') == first


@pytest.mark.parametrize('check, model, radius', [
    ('restr-cpt', 't2-identity', '10'),
    ('mult', 'product-su2-t1', '8'),
    ('mult', 'product-t1-t1', '8'),
    ('mult', 'product-su2-su2', '8'),
    ('module', 'module-su2', '8'),
    ('qr-induced', 'su2-c2-d2', '10'),
    ('qr-induced', 't1-11-induced', '10'),
    ('qr-induced', 't2-identity-induced', '10'),
    ('qr-induced', 'coadjoint-induced', '10'),
    ('shift', 'su2-c2', '8'),
    ('shift', 't1-11', '8'),
    ('dres-sign', 'discrete-series-a1', '10'),
    ('dres-induced', 't2-identity-induced', '10'),
    ('oracle', 't1-11', '10'),
    ('oracle', 't2-identity', '10'),
    ('oracle', 'su2-c2', '8'),
])
def test_verification_suites_pass(run_command, check, model, radius):
    report = json.loads(run_command(
        'verify', f'--check={check}', f'--model={model}', f'--radius={radius}'
    ))
    assert report['check'] == check
    assert report['pass'] is True
    assert report['counterexample'] is None
    assert report['radius'] == int(radius)
    assert report['witnessedWindow']


def test_missing_witness_exits_with_3(run_command):
    assert _codes(run_command, 'verify', '--check=restr-cpt',
                  '--model=sym-c2-torus', '--radius=4') == 3


def test_uncertified_model_exits_with_3(run_command):
    assert _codes(run_command, 'quantise', '--model=uncertified') == 3


def test_unknown_check_exits_with_4(run_command):
    assert _codes(run_command, 'verify', '--check=nope',
                  '--model=su2-c2') == 4


@pytest.mark.parametrize('args', [
    ('quantise', '--model=no-such-model'),
    ('quantise', '--model=su2-c2', '--radius=65'),
    ('quantise', '--model=su2-c2', '--radius=-1'),
    ('quantise', '--model=su2-c2', '--radius=wide'),
    ('quantise',),
    ('tensor', '--datum=G2', '--weight=1,0', '--weight=0,1'),
    ('tensor', '--datum=A1', '--weight=-1', '--weight=1'),
    ('tensor', '--datum=A1', '--weight=1,0', '--weight=1'),
    ('branch', '--model=su2-c2', '--weight=1'),
    ('shift', '--model=coadjoint-a2'),
])
def test_parse_errors_exit_with_2(run_command, args):
    assert _codes(run_command, *args) == 2


def test_malformed_json_exits_with_2(run_command, tmp_path):
    path = tmp_path / 'broken.json'
    path.write_text('{"kind": "linear",', encoding='utf-8')
    assert _codes(run_command, 'quantise', f'--model={path}') == 2


def test_failed_check_exits_with_1(run_command, monkeypatch):
    monkeypatch.setitem(
        CHECKS, 'always-differs',
        lambda document, radius: CheckReport(
            'always-differs', radius, False, [(0,), (1,)], (1,)
        ),
    )
    with pytest.raises(CommandError) as error:
        run_command('verify', '--check=always-differs', '--model=su2-c2')
    assert error.value.returncode == 1
    assert '[1]' in str(error.value)
