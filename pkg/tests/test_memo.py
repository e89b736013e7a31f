from concurrent.futures import ThreadPoolExecutor

from ppdim.extensions.memo import MemoTable


def test_get_and_insert():
    table = MemoTable("test")
    assert table.get("a") is None
    table.put_if_absent("a", 1)
    assert table.get("a") == 1
    assert len(table) == 1
    stats = table.get_stats()
    assert stats["hits"] == 1 and stats["misses"] == 1 and stats["size"] == 1
    assert stats["hit_rate"] == 0.5


def test_put_if_absent_keeps_first():
    table = MemoTable("test")
    assert table.put_if_absent("k", 1) == 1
    assert table.put_if_absent("k", 2) == 1


def test_lru_eviction():
    table = MemoTable("test", max_size=2)
    table.put_if_absent(1, "one")
    table.put_if_absent(2, "two")
    table.get(1)
    table.put_if_absent(3, "three")
    assert table.get(1) == "one" and table.get(3) == "three"
    assert table.get(2) is None
    assert table.get_stats()["evictions"] == 1


def test_update_merges():
    table = MemoTable("bounds")
    table.update("x", lambda old: (old or 0) + 1)
    table.update("x", lambda old: (old or 0) + 1)
    assert table.get("x") == 2


def test_get_or_compute_once_per_key():
    table = MemoTable("test")
    calls = []

    def factory():
        calls.append(1)
        return "value"

    assert table.get_or_compute("k", factory) == "value"
    assert table.get_or_compute("k", factory) == "value"
    assert len(calls) == 1


def test_concurrent_updates():
    table = MemoTable("counter")
    with ThreadPoolExecutor(max_workers=8) as executor:
        list(executor.map(lambda _: table.update("n", lambda old: (old or 0) + 1), range(200)))
    assert table.get("n") == 200
    table.clear()
    assert len(table) == 0
