"""Disk cache for expensive series expansions.

Entries are the human-inspectable qseries text dump plus a checksum
trailer, with a JSON sidecar holding the key fields.  Lookups may be
satisfied by any stored entry for the same form whose truncation is at
least the requested one (the prefix of a longer expansion is the shorter
one).  Writers go through a temp file and an atomic rename; corrupt files
are treated as misses.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path

from .qseries import QSeries, dumps, loads

__all__ = ["CacheKey", "Cache", "default_cache", "CACHE_ENV_VAR"]

CACHE_ENV_VAR = "QCONG_CACHE_DIR"

log = logging.getLogger("qcong.store")

_CHECKSUM_PREFIX = "checksum sha256:"


@dataclass(frozen=True)
class CacheKey:
    """Identity of one cached expansion."""

    form: str
    ring: str  # "int" | "rat" | "mod" | "quad"
    modulus: int | None
    T: int

    def canonical(self) -> str:
        mod = "" if self.modulus is None else str(self.modulus)
        return f"form={self.form}|ring={self.ring}|modulus={mod}|T={self.T}"

    def file_stem(self) -> str:
        return hashlib.sha256(self.canonical().encode()).hexdigest()[:24]


def _split_ring_tag(tag: str) -> tuple[str, int | None]:
    if tag.startswith("mod:"):
        return "mod", int(tag[4:])
    return tag, None


class Cache:
    def __init__(self, root: str | Path):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)

    def get(self, key: CacheKey) -> QSeries | None:
        """Best stored series for the key, truncated down to key.T; None on miss."""
        best: tuple[int, Path] | None = None
        for meta_path in self.root.glob("*.meta"):
            try:
                meta = json.loads(meta_path.read_text())
            except (OSError, json.JSONDecodeError):
                continue
            if (
                meta.get("form") != key.form
                or meta.get("ring") != key.ring
                or meta.get("modulus") != key.modulus
                or meta.get("T", -1) < key.T
            ):
                continue
            if best is None or meta["T"] < best[0]:
                best = (meta["T"], meta_path)
        if best is None:
            return None
        data_path = best[1].with_suffix(".qs")
        try:
            text = data_path.read_text()
        except OSError:
            log.warning("cache entry %s unreadable; treating as miss", data_path)
            return None
        body, _, trailer = text.rpartition("\n" + _CHECKSUM_PREFIX)
        if not trailer:
            log.warning("cache entry %s has no checksum; treating as miss", data_path)
            return None
        body += "\n"
        if hashlib.sha256(body.encode()).hexdigest() != trailer.strip():
            log.warning("cache entry %s fails checksum; treating as miss", data_path)
            return None
        series = loads(body)
        return series.truncate(key.T)

    def put(self, key: CacheKey, series: QSeries) -> Path:
        """Atomically store a series; its ring and truncation must match the key."""
        ring, modulus = _split_ring_tag(series.ring.tag)
        if (ring, modulus) != (key.ring, key.modulus):
            raise ValueError(
                f"series ring {series.ring.tag} does not match key "
                f"({key.ring}, modulus={key.modulus})"
            )
        if series.T != key.T:
            raise ValueError(f"series has T={series.T}, key says T={key.T}")
        body = dumps(series)
        digest = hashlib.sha256(body.encode()).hexdigest()
        payload = body + _CHECKSUM_PREFIX + digest + "\n"
        stem = key.file_stem()
        data_path = self.root / f"{stem}.qs"
        meta_path = self.root / f"{stem}.meta"
        self._atomic_write(data_path, payload)
        meta = {
            "form": key.form,
            "ring": key.ring,
            "modulus": key.modulus,
            "T": key.T,
            "offset24": series.offset24,
            "sha256": digest,
            "file": data_path.name,
        }
        self._atomic_write(meta_path, json.dumps(meta, indent=1) + "\n")
        return data_path

    def _atomic_write(self, path: Path, text: str) -> None:
        fd, tmp = tempfile.mkstemp(dir=self.root, prefix=".tmp-")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(text)
            os.replace(tmp, path)
        except BaseException:
            try:
                os.unlink(tmp)
            except OSError:
                pass
            raise

    def clear(self) -> int:
        """Remove every cache entry; returns the number of files removed."""
        n = 0
        for path in list(self.root.glob("*.qs")) + list(self.root.glob("*.meta")):
            path.unlink(missing_ok=True)
            n += 1
        return n


def default_cache() -> Cache:
    """Cache rooted at $QCONG_CACHE_DIR, else the user cache home."""
    root = os.environ.get(CACHE_ENV_VAR)
    if root is None:
        base = os.environ.get("XDG_CACHE_HOME", os.path.expanduser("~/.cache"))
        root = os.path.join(base, "qcong")
    return Cache(root)
