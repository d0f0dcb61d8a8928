"""Canonical byte encoding of the protocol messages, plus transcript
accounting.

Frame layout is ``kind (1 byte) || body length (2 bytes, big-endian) ||
body``; bodies are fixed-width except application frames. Decoding is
total: any input is either a parsed message or ``Malformed``.

Two bit counts are kept per message. *Payload bits* follow the protocol's
costing convention, which charges only the cryptographic content carried
per message (an ephemeral public key: 256; the fresh nonce: 128; the
wrapped session key plus confirmation hash: 128 + 256) and charges nothing
for AEAD tags, framing, or direction bytes. *Wire bits* count every byte
actually transmitted. Publishing both keeps the headline numbers honest.

A complete phase-2 transcript therefore accounts 512 + 128 + 384 = 1024
payload bits across the two post-ephemeral messages.
"""

from __future__ import annotations

import enum
import struct
from dataclasses import dataclass, field

from .certs import CERT_LEN, Certificate, decode_cert, encode_cert
from .errors import IncompletePhase, Malformed

FRAME_HEADER_LEN = 3
SEALED_KEY_LEN = 32 + 16   # 32-byte public key ciphertext + tag
SEALED_NONCE_LEN = 16 + 16
CONFIRM_LEN = 32

DIR_CLIENT_TO_SERVER = 0
DIR_SERVER_TO_CLIENT = 1


class MsgKind(enum.IntEnum):
    AUTH_CLIENT = 0x01   # certificate + timestamp + signature, client first
    AUTH_SERVER = 0x02   # same shape, server's reply
    EPH = 0x03           # sealed ephemeral public key (either direction)
    NONCE = 0x04         # sealed fresh nonce, client to server
    KEY = 0x05           # sealed session key + confirmation hash
    APP = 0x06           # application record


@dataclass(frozen=True)
class AuthMessage:
    kind: MsgKind
    cert: Certificate
    timestamp_ms: int
    signature: bytes

    def signed_part(self) -> bytes:
        return encode_cert(self.cert) + struct.pack(">Q", self.timestamp_ms)


@dataclass(frozen=True)
class EphemeralChallenge:
    direction: int        # 0 client->server, 1 server->client
    sealed: bytes         # 48 bytes


@dataclass(frozen=True)
class NonceChallenge:
    sealed: bytes         # 32 bytes


@dataclass(frozen=True)
class KeyDelivery:
    sealed: bytes         # 32 bytes
    confirm: bytes        # 32-byte confirmation hash


@dataclass(frozen=True)
class AppFrame:
    seq: int
    sealed: bytes         # ciphertext + tag


Message = AuthMessage | EphemeralChallenge | NonceChallenge | KeyDelivery | AppFrame


def _body(msg: Message) -> tuple[MsgKind, bytes]:
    if isinstance(msg, AuthMessage):
        return msg.kind, msg.signed_part() + msg.signature
    if isinstance(msg, EphemeralChallenge):
        return MsgKind.EPH, bytes([msg.direction]) + msg.sealed
    if isinstance(msg, NonceChallenge):
        return MsgKind.NONCE, msg.sealed
    if isinstance(msg, KeyDelivery):
        return MsgKind.KEY, msg.sealed + msg.confirm
    if isinstance(msg, AppFrame):
        return MsgKind.APP, struct.pack(">Q", msg.seq) + msg.sealed
    raise TypeError(f"not a wire message: {type(msg)!r}")


def encode(msg: Message) -> bytes:
    kind, body = _body(msg)
    if len(body) > 0xFFFF:
        raise Malformed("frame body too large")
    return struct.pack(">BH", kind, len(body)) + body


def decode(frame: bytes) -> Message:
    if len(frame) < FRAME_HEADER_LEN:
        raise Malformed("frame shorter than header")
    kind_byte, length = struct.unpack(">BH", frame[:FRAME_HEADER_LEN])
    body = frame[FRAME_HEADER_LEN:]
    if len(body) != length:
        raise Malformed(f"frame length field {length} != body length {len(body)}")
    try:
        kind = MsgKind(kind_byte)
    except ValueError:
        raise Malformed(f"unknown message kind {kind_byte:#x}") from None
    return _decode_body(kind, body)


def _decode_body(kind: MsgKind, body: bytes) -> Message:
    if kind in (MsgKind.AUTH_CLIENT, MsgKind.AUTH_SERVER):
        if len(body) != CERT_LEN + 8 + 64:
            raise Malformed("auth message has wrong size")
        cert = decode_cert(body[:CERT_LEN])
        (timestamp,) = struct.unpack(">Q", body[CERT_LEN:CERT_LEN + 8])
        return AuthMessage(kind=kind, cert=cert, timestamp_ms=timestamp,
                           signature=body[CERT_LEN + 8:])
    if kind is MsgKind.EPH:
        if len(body) != 1 + SEALED_KEY_LEN:
            raise Malformed("ephemeral challenge has wrong size")
        if body[0] not in (DIR_CLIENT_TO_SERVER, DIR_SERVER_TO_CLIENT):
            raise Malformed(f"bad direction byte {body[0]}")
        return EphemeralChallenge(direction=body[0], sealed=body[1:])
    if kind is MsgKind.NONCE:
        if len(body) != SEALED_NONCE_LEN:
            raise Malformed("nonce challenge has wrong size")
        return NonceChallenge(sealed=body)
    if kind is MsgKind.KEY:
        if len(body) != SEALED_NONCE_LEN + CONFIRM_LEN:
            raise Malformed("key delivery has wrong size")
        return KeyDelivery(sealed=body[:SEALED_NONCE_LEN], confirm=body[SEALED_NONCE_LEN:])
    if kind is MsgKind.APP:
        if len(body) < 8 + 16:
            raise Malformed("app frame shorter than seq + tag")
        (seq,) = struct.unpack(">Q", body[:8])
        return AppFrame(seq=seq, sealed=body[8:])
    raise Malformed(f"undecodable kind {kind}")  # pragma: no cover


# --- transcript accounting ---

_PHASE1_KINDS = (MsgKind.AUTH_CLIENT, MsgKind.AUTH_SERVER)
_PHASE2_KINDS = (MsgKind.EPH, MsgKind.NONCE, MsgKind.KEY)
_POST_EPH_KINDS = (MsgKind.NONCE, MsgKind.KEY)


def payload_bits_of(msg: Message) -> int:
    """Accounted content bits of one message under the costing convention."""
    if isinstance(msg, AuthMessage):
        return (CERT_LEN + 8 + 64) * 8      # certificate, timestamp, signature
    if isinstance(msg, EphemeralChallenge):
        return 256                          # the ephemeral public key
    if isinstance(msg, NonceChallenge):
        return 128                          # the fresh nonce
    if isinstance(msg, KeyDelivery):
        return 128 + 256                    # wrapped key + confirmation hash
    if isinstance(msg, AppFrame):
        return (len(msg.sealed) - 16) * 8   # application plaintext
    raise TypeError(f"not a wire message: {type(msg)!r}")


@dataclass(frozen=True)
class TranscriptEntry:
    kind: MsgKind
    payload_bits: int
    wire_bits: int


@dataclass
class Transcript:
    """Ordered record of the messages one session exchanged."""

    entries: list[TranscriptEntry] = field(default_factory=list)

    def add(self, msg: Message, frame_len: int) -> None:
        kind, _ = _body(msg)
        self.entries.append(TranscriptEntry(kind=kind,
                                            payload_bits=payload_bits_of(msg),
                                            wire_bits=frame_len * 8))

    def kinds(self) -> list[MsgKind]:
        return [e.kind for e in self.entries]


def payload_bits(transcript: Transcript, phase: int) -> int:
    """Accounted bits of one phase of a transcript.

    Raises IncompletePhase when the transcript carries no messages of the
    requested phase at all.
    """
    if phase not in (1, 2):
        raise ValueError("phase must be 1 or 2")
    kinds = _PHASE1_KINDS if phase == 1 else _PHASE2_KINDS
    selected = [e for e in transcript.entries if e.kind in kinds]
    if not selected:
        raise IncompletePhase(f"transcript has no phase-{phase} messages")
    return sum(e.payload_bits for e in selected)


def wire_bits(transcript: Transcript) -> int:
    """Every transmitted bit, framing and tags included."""
    return sum(e.wire_bits for e in transcript.entries)


def wire_bits_of_phase(transcript: Transcript, phase: int) -> int:
    kinds = _PHASE1_KINDS if phase == 1 else _PHASE2_KINDS
    return sum(e.wire_bits for e in transcript.entries if e.kind in kinds)


def post_ephemeral_exchanges(transcript: Transcript) -> int:
    """Messages exchanged after the ephemeral challenges: the costing
    convention's headline message count for a session."""
    return sum(1 for e in transcript.entries if e.kind in _POST_EPH_KINDS)
