"""Member accounts and credential verification.

Credentials are stored as salted PBKDF2 verifiers; the plaintext secret
never reaches the journal.
"""

from __future__ import annotations

import hashlib
import hmac
import os
from dataclasses import dataclass

from .errors import DuplicateHandle, EmptyText, UnknownMember

_ITERATIONS = 60_000


def hash_credential(secret: str) -> str:
    salt = os.urandom(16)
    digest = hashlib.pbkdf2_hmac("sha256", secret.encode("utf-8"), salt, _ITERATIONS)
    return f"pbkdf2-sha256${_ITERATIONS}${salt.hex()}${digest.hex()}"


def verify_credential(secret: str, verifier: str) -> bool:
    try:
        scheme, iterations, salt_hex, digest_hex = verifier.split("$")
        if scheme != "pbkdf2-sha256":
            return False
        digest = hashlib.pbkdf2_hmac(
            "sha256", secret.encode("utf-8"), bytes.fromhex(salt_hex), int(iterations)
        )
        return hmac.compare_digest(digest.hex(), digest_hex)
    except (ValueError, AttributeError):
        return False


@dataclass
class Member:
    member_id: str
    handle: str
    credential: str
    created_at: float

    def to_dict(self) -> dict:
        return {
            "member_id": self.member_id,
            "handle": self.handle,
            "credential": self.credential,
            "created_at": self.created_at,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Member":
        return cls(d["member_id"], d["handle"], d["credential"], d["created_at"])


class MemberStore:
    def __init__(self):
        self.members: dict[str, Member] = {}
        self._by_handle: dict[str, str] = {}
        self._member_seq = 0

    def register(self, handle: str, credential: str, timestamp: float) -> Member:
        if not handle.strip():
            raise EmptyText("handle must be non-empty")
        if handle in self._by_handle:
            raise DuplicateHandle(f"handle already taken: {handle}")
        self._member_seq += 1
        member = Member(
            member_id=f"m-{self._member_seq:06d}",
            handle=handle,
            credential=credential,
            created_at=timestamp,
        )
        self.members[member.member_id] = member
        self._by_handle[handle] = member.member_id
        return member

    def require(self, member_id: str) -> Member:
        member = self.members.get(member_id)
        if member is None:
            raise UnknownMember(f"no such member: {member_id}")
        return member

    def by_handle(self, handle: str) -> Member | None:
        member_id = self._by_handle.get(handle)
        return self.members.get(member_id) if member_id is not None else None

    def handle_of(self, member_id: str) -> str:
        """Display handle for an author id; system authors pass through."""
        member = self.members.get(member_id)
        return member.handle if member is not None else member_id

    def state_dict(self) -> dict:
        return {
            "members": [m.to_dict() for m in self.members.values()],
            "member_seq": self._member_seq,
        }

    def load_state(self, d: dict) -> None:
        self.members = {}
        self._by_handle = {}
        for m_dict in d["members"]:
            member = Member.from_dict(m_dict)
            self.members[member.member_id] = member
            self._by_handle[member.handle] = member.member_id
        self._member_seq = d["member_seq"]
