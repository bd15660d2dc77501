import pytest

from tracegor import load_ring_spec
from tracegor.errors import DimensionMismatch, EmptyGenerators, SpecError


def test_nonlevel_spec():
    spec = load_ring_spec('{"dim":2,"generators":[[1,0],[1,1],[2,3],[3,5]],"grading":[1,0],'
                          '"label":"P"}')
    S = spec.build()
    assert S.minimal_generators == ((1, 0), (1, 1), (2, 3), (3, 5)) and S.label == "P"


def test_numerical_shorthand():
    spec = load_ring_spec('{"numerical":[3,4,5]}')
    S = spec.build()
    assert S.dim == 1 and S.generators == ((3,), (4,), (5,))
    assert spec.to_dict() == {"numerical": [3, 4, 5], "label": "<3,4,5>"}


def test_errors():
    with pytest.raises(EmptyGenerators):
        load_ring_spec('{"dim":2,"generators":[]}')
    with pytest.raises(SpecError) as e:
        load_ring_spec('{"dim":2,\n "generators": [[1,0],]}')
    assert e.value.line == 2
    with pytest.raises(SpecError):
        load_ring_spec('{"dim":2,"generators":[[1,0]],"grading":[1,0],"colour":"red"}')
    with pytest.raises(DimensionMismatch):
        load_ring_spec('{"dim":3,"generators":[[1,0]],"grading":[1,0]}')
    with pytest.raises(SpecError):
        load_ring_spec('{"dim":2,"generators":[[1,0.5]],"grading":[1,0]}')
