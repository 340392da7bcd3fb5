import random

import pytest

import rkmatch


def test_hash_values():
    assert rkmatch.hash_full(b"") == 0
    assert rkmatch.hash_full(b"ab") == 292
    assert rkmatch.hash_full(b"ac") == rkmatch.hash_full(b"ba") == 293
    assert rkmatch.hash_window(b"abab", 1, 2) == 293
    assert rkmatch.roll(292, ord("a"), ord("a"), 2) == 293
    with pytest.raises(IndexError):
        rkmatch.hash_window(b"abab", 3, 2)
    with pytest.raises(ValueError):
        rkmatch.hash_window(b"abab", 0, 0)


def test_engines_agree():
    rng = random.Random(1)
    for _ in range(50):
        text = bytes(rng.choice(b"ACGT") for _ in range(rng.randint(1, 2000)))
        m = rng.randint(1, min(10, len(text)))
        start = rng.randint(0, len(text) - m)
        pattern = text[start : start + m]
        naive = rkmatch.search_naive(text, pattern)
        cfg = rkmatch.plan_launch(len(text), m, 64)
        assert rkmatch.search_sequential(text, pattern) == naive
        assert rkmatch.search_parallel(text, pattern, cfg, 4) == naive
        expected = [i for i in range(len(text) - m + 1) if text[i : i + m] == pattern]
        assert list(naive.offsets) == expected


def test_collision_is_rejected():
    stats = rkmatch.SearchStats()
    result = rkmatch.search_sequential(b"acXba", b"ac", stats)
    assert list(result.offsets) == [0]
    assert stats.verify_failures == 1
    with pytest.raises(ValueError):
        rkmatch.search_sequential(b"abc", b"")


def test_multi_pattern():
    out = rkmatch.search_multi(b"aaa", rkmatch.PatternSet([b"a", b"aa"]))
    assert [(i, list(r.offsets)) for i, r in out] == [(0, [0, 1, 2]), (1, [0, 1])]


def test_launch_algebra():
    cfg = rkmatch.LaunchConfig((4, 4, 1), 256)
    assert rkmatch.offset_of(rkmatch.ThreadCoord((1, 2, 0), 3), cfg) == 2307
    planned = rkmatch.plan_launch(10_000_000, 7, 32)
    assert planned.grid == (65535, 5, 1)
    assert planned.total_threads >= 9_999_994
    with pytest.raises(ValueError):
        rkmatch.plan_launch(10, 2, 2048)


def test_datagen():
    a = rkmatch.generate(rkmatch.DnaSpec(42, 10_000))
    assert a == rkmatch.generate(rkmatch.DnaSpec(42, 10_000))
    assert set(a) <= set(b"ACGT")
    assert rkmatch.plant(b"AAAA", b"CG", [1]) == b"ACGA"
    with pytest.raises(ValueError):
        rkmatch.plant(b"AAAA", b"CG", [0, 1])


def test_speedup_and_sweep():
    assert rkmatch.speedup(6937, 4718.750) == pytest.approx(1.470093, abs=1e-6)
    report = rkmatch.sweep("block_dim", [32, 1024], length=32 * 1024, workers=2)
    assert report["axis"] == "block_dim"
    assert [r["axis_value"] for r in report["rows"]] == [32, 1024]
    for row in report["rows"]:
        assert row["speedup"] == row["t_seq_ms"] / row["t_par_ms"]


def test_cli(tmp_path):
    text = tmp_path / "t.bin"
    code, out, _ = rkmatch.cli_run(["gen", "--seed", "1", "--size", "4KB", "--out", str(text)])
    assert code == 0
    assert text.stat().st_size == 4096
    text.write_bytes(b"abab")
    code, out, _ = rkmatch.cli_run(["search", str(text), "--pattern", "ab", "--engine", "par"])
    assert (code, out) == (0, "MATCH 0 0\nMATCH 0 2\nMATCHES 2\n")
    code, _, err = rkmatch.cli_run(["search", str(text), "--pattern", ""])
    assert code == 2 and err


def test_imported_from_expected_location():
    import os

    expected = os.environ.get("RKMATCH_EXPECT_DIR")
    if expected is None:
        pytest.skip("only checked when run from ctest")
    assert os.path.dirname(os.path.realpath(rkmatch._rkmatch.__file__)) == os.path.realpath(expected)
