import json

from admchar.cache import ResultCache, key_digest, payload_checksum


def test_roundtrip(tmp_path):
    cache = ResultCache(tmp_path)
    key = "some|canonical|key"
    payload = {"K": [1, 0], "M": 3, "table": []}
    assert cache.load(key) is None
    path = cache.store(key, payload)
    assert path.name == f"{key_digest(key)}.json"
    assert cache.load(key) == payload


def test_corruption_reads_as_miss(tmp_path):
    cache = ResultCache(tmp_path)
    key = "k"
    path = cache.store(key, {"x": 1})
    record = json.loads(path.read_text())
    record["payload"]["x"] = 2  # payload no longer matches the checksum
    path.write_text(json.dumps(record))
    assert cache.load(key) is None

    path.write_text("not json at all")
    assert cache.load(key) is None


def test_key_collision_reads_as_miss(tmp_path):
    cache = ResultCache(tmp_path)
    cache.store("key-a", {"x": 1})
    target = cache.path_for("key-b")
    target.write_text(cache.path_for("key-a").read_text())
    assert cache.load("key-b") is None


def test_checksum_is_content_addressed():
    assert payload_checksum({"a": 1}) == payload_checksum({"a": 1})
    assert payload_checksum({"a": 1}) != payload_checksum({"a": 2})
