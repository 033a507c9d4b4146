import json
from io import StringIO

import pytest
from django.conf import settings
from django.core.management import call_command

from api.serializers import load_document
from hamiltonian.spaces import LinearModel
from lie.rootdata import build_root_datum


@pytest.fixture
def a1():
    return build_root_datum('A1')


@pytest.fixture
def a2():
    return build_root_datum('A2')


@pytest.fixture
def t1():
    return build_root_datum('T1')


@pytest.fixture
def t2():
    return build_root_datum('T2')


@pytest.fixture
def su2_model(a1):
    return LinearModel(a1, ((1,), (-1,)), degree_functional=(1,),
                       proper=True, name='SU(2) on C^2')


@pytest.fixture
def t1_model(t1):
    return LinearModel(t1, ((1,), (1,)), half_space=(1,), name='T1 on C^2')


@pytest.fixture
def t2_model(t2):
    return LinearModel(t2, ((1, 0), (0, 1)), half_space=(1, 1),
                       name='T2 on C^2')


@pytest.fixture
def builtin():
    def load(stem):
        path = settings.QUANTISATION['MODELS_DIR'] / f'{stem}.json'
        with open(path, encoding='utf-8') as file:
            return json.load(file)
    return load


@pytest.fixture
def builtin_model(builtin):
    def load(stem):
        return load_document(builtin(stem))
    return load


@pytest.fixture
def run_command():
    def run(name, *args):
        out = StringIO()
        call_command(name, *args, stdout=out)
        return out.getvalue()
    return run
