import os

import pytest

import lzdp


def test_reference_example():
    data = b"aababcdbabca"
    assert lzdp.blocks(data, alphabet="abcd") == [
        (0, 0, ord("a")),
        (1, 1, ord("b")),
        (2, 2, ord("c")),
        (0, 0, ord("d")),
        (3, 4, ord("a")),
    ]
    assert lzdp.payload_bits(data, alphabet="abcd") == 50
    assert lzdp.decompress(lzdp.compress(data, alphabet="abcd")) == data


def test_round_trips():
    data = os.urandom(3000) + b"abc" * 500
    for window in (None, 17):
        for sr in (False, True):
            blob = lzdp.compress(data, window=window, self_referencing=sr)
            assert lzdp.decompress(blob) == data
    assert lzdp.decompress(lzdp.compress(b"")) == b""


def test_dp_compress_is_seeded_and_decodes():
    data = b"hello hello hello world" * 20
    a = lzdp.dp_compress(data, epsilon=1.0, delta=1e-6, seed=5)
    b = lzdp.dp_compress(data, epsilon=1.0, delta=1e-6, seed=5)
    assert a == b
    assert lzdp.decompress(a) == data
    with pytest.raises(lzdp.Error):
        lzdp.dp_compress(data, epsilon=0.0, seed=1)


def test_bounds():
    assert lzdp.gs_upper_bound(1000, 1000, 256) == 3143
    assert lzdp.gs_upper_bound(1000, 1000, 256, self_referencing=True) == 3199
    rows = lzdp.bounds(1000, 1000, 256)["rows"]
    assert len(rows) == 4
    assert rows[0]["gs_bits"] == 3143


def test_analyze():
    doc = lzdp.analyze(b"abab", b"abbb", alphabet="ab")
    assert doc["counts"]["t1"] == 3
    assert doc["pass"]
    with pytest.raises(lzdp.Error):
        lzdp.analyze(b"ab", b"ab", alphabet="ab")


def test_sensitivity():
    assert lzdp.local_sensitivity(b"abab", alphabet="ab") >= 0
    g = lzdp.global_sensitivity(8, 2)
    assert g["block_gap"] == 1
    with pytest.raises(lzdp.BudgetExceededError):
        lzdp.global_sensitivity(14, 4, budget=1000)


def test_quinstr():
    doc = lzdp.verify_lower_bound(4)
    assert doc["measured"]["t2"] == 5
    assert doc["pass"]
    assert lzdp.quinstr(4, "paper")["actual_len"] == 126
