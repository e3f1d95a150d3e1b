"""Durable storage: append-only journal, periodic snapshots, writer lock.

The journal is a JSON-lines file; every committed mutation is one fsynced
line ``{"seq", "kind", "op", "payload", "ts"}`` with a gapless sequence.
Snapshots capture the full engine state plus the last sequence they cover,
so recovery is snapshot + replay of the journal tail.  A POSIX flock on the
``lock`` file enforces a single writer per store directory; the kernel
releases it even when the process is killed outright.
"""

from __future__ import annotations

import fcntl
import json
import os
from pathlib import Path

from .errors import StorePermissionError

JOURNAL_NAME = "journal.jsonl"
SNAPSHOT_NAME = "snapshot.json"
LOCK_NAME = "lock"
CONTENT_DIR = "content"


class StoreDir:
    def __init__(self, root: str | Path):
        self.root = Path(root)
        try:
            self.root.mkdir(parents=True, exist_ok=True)
            self._lock_fd = os.open(self.root / LOCK_NAME, os.O_CREAT | os.O_RDWR, 0o644)
        except PermissionError as exc:
            raise StorePermissionError(f"store directory not writable: {self.root}") from exc
        try:
            fcntl.flock(self._lock_fd, fcntl.LOCK_EX | fcntl.LOCK_NB)
        except OSError:
            os.close(self._lock_fd)
            raise StorePermissionError(
                f"store {self.root} is already held by another writer"
            ) from None
        try:
            self._journal = open(self.root / JOURNAL_NAME, "a", encoding="utf-8")
        except PermissionError as exc:
            os.close(self._lock_fd)
            raise StorePermissionError(f"journal not writable in {self.root}") from exc

    @property
    def journal_path(self) -> Path:
        return self.root / JOURNAL_NAME

    @property
    def snapshot_path(self) -> Path:
        return self.root / SNAPSHOT_NAME

    @property
    def content_dir(self) -> Path:
        return self.root / CONTENT_DIR

    def append(self, entry: dict) -> None:
        """Write one journal entry and fsync before returning."""
        line = json.dumps(entry, ensure_ascii=False, separators=(",", ":"))
        self._journal.write(line + "\n")
        self._journal.flush()
        os.fsync(self._journal.fileno())

    def read_entries(self, after_seq: int = 0) -> list[dict]:
        """Journal entries with seq > after_seq, tolerating a torn final line.

        A partial trailing line can only belong to a write that was never
        acknowledged, so it is truncated away.
        """
        path = self.journal_path
        if not path.exists():
            return []
        entries: list[dict] = []
        good_end = 0
        with open(path, "rb") as f:
            data = f.read()
        offset = 0
        for raw_line in data.split(b"\n"):
            end = offset + len(raw_line)
            if end >= len(data):
                # no newline terminator: this tail was never acknowledged
                break
            if raw_line:
                try:
                    entry = json.loads(raw_line.decode("utf-8"))
                except (json.JSONDecodeError, UnicodeDecodeError):
                    break
                if entry["seq"] > after_seq:
                    entries.append(entry)
            offset = end + 1
            good_end = offset
        if good_end < len(data):
            with open(path, "r+b") as f:
                f.truncate(good_end)
            self._journal.close()
            self._journal = open(path, "a", encoding="utf-8")
        return entries

    def write_snapshot(self, seq: int, state: dict) -> None:
        tmp = self.snapshot_path.with_suffix(".tmp")
        with open(tmp, "w", encoding="utf-8") as f:
            json.dump({"last_seq": seq, "state": state}, f, ensure_ascii=False)
            f.flush()
            os.fsync(f.fileno())
        os.replace(tmp, self.snapshot_path)

    def read_snapshot(self) -> tuple[int, dict] | None:
        if not self.snapshot_path.exists():
            return None
        with open(self.snapshot_path, encoding="utf-8") as f:
            payload = json.load(f)
        return payload["last_seq"], payload["state"]

    def close(self) -> None:
        self._journal.close()
        fcntl.flock(self._lock_fd, fcntl.LOCK_UN)
        os.close(self._lock_fd)
