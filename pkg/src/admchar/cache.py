"""Content-addressed disk cache for deterministic JSON payloads.

One file per result, named by the SHA-256 of the canonical key string.  Each
file stores the key, a checksum of the canonical payload bytes, and the
payload; any corruption or key collision reads as a miss.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path

from .qseries import canonical_json


def key_digest(key: str) -> str:
    return hashlib.sha256(key.encode("utf-8")).hexdigest()


def payload_checksum(payload) -> str:
    return hashlib.sha256(canonical_json(payload).encode("utf-8")).hexdigest()


class ResultCache:
    def __init__(self, directory):
        self.directory = Path(directory)

    def path_for(self, key: str) -> Path:
        return self.directory / f"{key_digest(key)}.json"

    def load(self, key: str):
        """Payload stored under `key`, or None on miss, corruption, or mismatch."""
        path = self.path_for(key)
        try:
            record = json.loads(path.read_text())
        except (OSError, ValueError):
            return None
        if record.get("key") != key:
            return None
        payload = record.get("payload")
        if record.get("checksum") != payload_checksum(payload):
            return None
        return payload

    def store(self, key: str, payload) -> Path:
        self.directory.mkdir(parents=True, exist_ok=True)
        record = {
            "key": key,
            "checksum": payload_checksum(payload),
            "payload": payload,
        }
        path = self.path_for(key)
        path.write_text(canonical_json(record))
        return path
