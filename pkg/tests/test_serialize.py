import json
import random

import pytest

from fbinv.errors import ParseError
from fbinv.linalg import RatMatrix
from fbinv.pencil import from_state_space
from fbinv.realization import left_coprime_mfd
from fbinv.reference import reference_system
from fbinv.sampling import random_ar_system, random_state_space
from fbinv.serialize import (
    ar_to_json,
    dumps,
    hompoly_to_json,
    mfd_to_json,
    parse_hompoly,
    parse_rational,
    parse_system,
    pencil_to_json,
    rational_to_str,
    state_space_to_json,
    transform_to_json,
)


def test_rational_round_trip():
    for text in ("3/4", "-2", "0", "7/3"):
        assert rational_to_str(parse_rational(text)) == text
    assert parse_rational(5) == 5
    with pytest.raises(ParseError):
        parse_rational("1/0")
    with pytest.raises(ParseError):
        parse_rational(1.5)


def test_hompoly_round_trip_and_degree_check():
    h = parse_hompoly({"degree": 2, "terms": [["1", 2, 0], ["-1/2", 0, 2]]})
    assert hompoly_to_json(h) == {"degree": 2, "terms": [["1", 2, 0], ["-1/2", 0, 2]]}
    with pytest.raises(ParseError):
        parse_hompoly({"degree": 2, "terms": [["1", 1, 0]]})


def test_ar_round_trip():
    rng = random.Random(3)
    for _ in range(10):
        ar = random_ar_system(rng, rng.randint(1, 2), rng.randint(1, 2), rng.randint(0, 3))
        again = parse_system(json.loads(dumps(ar_to_json(ar))))
        assert again == ar


def test_state_space_and_mfd_round_trip():
    rng = random.Random(4)
    for _ in range(10):
        ss = random_state_space(rng, rng.randint(1, 3), rng.randint(1, 2), rng.randint(1, 2))
        assert parse_system(json.loads(dumps(state_space_to_json(ss)))) == ss
        if ss.is_observable():
            mfd = left_coprime_mfd(ss)
            assert parse_system(json.loads(dumps(mfd_to_json(mfd)))) == mfd


def test_pencil_round_trip():
    rng = random.Random(5)
    for _ in range(10):
        ss = random_state_space(rng, rng.randint(1, 3), rng.randint(1, 2), rng.randint(1, 2))
        ps = from_state_space(ss)
        assert parse_system(json.loads(dumps(pencil_to_json(ps)))) == ps


def test_transform_matrix_and_block_forms():
    T = RatMatrix.from_rows([[1, 2], [0, 1]])
    assert parse_system(json.loads(dumps(transform_to_json(T)))) == T
    block = {
        "kind": "transform",
        "T1": [["1"]],
        "F": [["2"]],
        "G": [["0"]],
        "T2": [["1"]],
    }
    assert parse_system(block) == T


def test_dump_is_deterministic():
    ar = reference_system()
    assert dumps(ar_to_json(ar)) == dumps(ar_to_json(reference_system()))


def test_parse_rejects_unknown_kind():
    with pytest.raises(ParseError):
        parse_system({"kind": "mystery"})
    with pytest.raises(ParseError):
        parse_system([1, 2, 3])


def test_grassmann_pluecker_size_cap():
    from fbinv.grassmann import GrassmannPoint
    from fbinv.serialize import grassmann_to_json

    rows = [[1 if i == j else 0 for j in range(40)] for i in range(15)]
    out = grassmann_to_json(GrassmannPoint.from_rows(rows, 40))
    assert "pluecker" not in out and "pluecker_omitted" in out
    small = grassmann_to_json(GrassmannPoint.from_rows([[1, 0], [0, 1]], 2))
    assert small["pluecker"] == ["1"]
