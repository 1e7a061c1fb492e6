import os

from dunkl import cache, jack
from dunkl.calculus.context import DunklContext, MultiplicitySpec
from dunkl.calculus.intertwining import v0_matrix
from dunkl.roots import build_root_system


def _ctx():
    rs = build_root_system("B", 2)
    return DunklContext(rs, MultiplicitySpec.symbolic(rs))


def test_disabled_without_directory():
    assert cache.cache_dir() is None
    cache.store("v0", ("k",), 1)
    assert cache.load("v0", ("k",)) is None


def test_round_trip_and_key_check(tmp_path, monkeypatch):
    monkeypatch.setenv(cache.ENV, str(tmp_path))
    cache.store("ns", ("a", 1), {"x": [1, 2]})
    assert cache.load("ns", ("a", 1)) == {"x": [1, 2]}
    assert cache.load("ns", ("a", 2)) is None


def test_corrupt_and_stale_files_are_ignored(tmp_path, monkeypatch):
    monkeypatch.setenv(cache.ENV, str(tmp_path))
    cache.store("ns", "key", 5)
    (path,) = [os.path.join(d, f) for d, _, fs in os.walk(tmp_path) for f in fs]
    with open(path, "wb") as fh:
        fh.write(b"garbage")
    assert cache.load("ns", "key") is None
    with open(path, "wb") as fh:
        fh.write(cache.MAGIC + (cache.FORMAT_VERSION + 1).to_bytes(2, "big") + b"rest")
    assert cache.load("ns", "key") is None


def test_cached_results_equal_fresh_results(tmp_path, monkeypatch):
    fresh = v0_matrix(_ctx(), 4)
    jack.clear_memo()
    z_fresh = jack.zeta(jack.type_a_context(3), (1, 0, 2)).poly
    monkeypatch.setenv(cache.ENV, str(tmp_path))
    first = v0_matrix(_ctx(), 4)
    second = v0_matrix(_ctx(), 4)  # new context, so this one is served from disk
    assert fresh == first == second
    jack.clear_memo()
    jack.zeta(jack.type_a_context(3), (1, 0, 2))
    jack.clear_memo()
    assert jack.zeta(jack.type_a_context(3), (1, 0, 2)).poly == z_fresh
    assert any(files for _, _, files in os.walk(tmp_path / f"v{cache.FORMAT_VERSION}" / "zeta"))
