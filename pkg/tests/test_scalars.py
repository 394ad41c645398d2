from __future__ import annotations

import pytest

from sseala.scalars import ONE, ZERO, Q, parse_q, qstr


def test_exact_arithmetic():
    assert Q(1, 3) + Q(1, 6) == Q(1, 2)
    assert Q(2, 4) == Q(1, 2)
    assert Q(7) * Q(1, 7) == ONE
    assert Q(0) == ZERO


def test_qstr_reduced_forms():
    assert qstr(Q(4, 2)) == "2"
    assert qstr(Q(-3, 6)) == "-1/2"
    assert qstr(Q(0, 5)) == "0"
    assert qstr(Q(5, -10)) == "-1/2"


def test_parse_q_roundtrip():
    for text in ["0", "7", "-3", "1/2", "-22/7", "100/3"]:
        assert qstr(parse_q(text)) == text
    assert parse_q(" 3 / 4 ") == Q(3, 4)


def test_parse_q_rejects_junk():
    for bad in ["", "abc", "1/0", "1/2/3", "1.5", "--2"]:
        with pytest.raises(ValueError):
            parse_q(bad)


def test_no_float_contamination():
    x = Q(1, 3) * 3
    assert x == ONE
    assert isinstance(x == ONE, bool)
