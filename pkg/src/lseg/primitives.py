"""Uniform interface over the five primitives the protocol composes:
Ed25519 signatures, X25519 key agreement, HKDF-SHA256, ASCON-128a AEAD,
and SHA-256.

Ed25519 and X25519 are backed by the ``cryptography`` package (OpenSSL);
HKDF is the direct RFC 5869 construction over ``hmac``/``hashlib``; ASCON
is local (see :mod:`lseg.ascon`). Every adapter is gated on its published
test vectors before anything else is trusted: ``lseg conformance`` and the
test suite both run RFC 8032, RFC 7748, RFC 5869, and the ASCON-128a
known-answer files from ``vectors/``.

Call counters: each adapter bumps a per-thread counter so harness code can
assert *which* operations a given input triggered (the denial-of-service
checks rely on rejected traffic never reaching signature or DH code).
"""

from __future__ import annotations

import hashlib
import hmac
import threading
from dataclasses import dataclass, field

from cryptography.exceptions import InvalidSignature
from cryptography.hazmat.primitives import serialization
from cryptography.hazmat.primitives.asymmetric import ed25519, x25519

from . import ascon
from .curve import IdentityKeyPair
from .errors import AuthFailure, LengthExceeded, LowOrderPoint, TooShort

SIG_LEN = 64
AEAD_KEY_LEN = ascon.KEY_LEN
AEAD_NONCE_LEN = ascon.NONCE_LEN
AEAD_TAG_LEN = ascon.TAG_LEN


class _Counters(threading.local):
    """Per-thread primitive invocation counts."""

    def __init__(self):
        self.sign = 0
        self.verify = 0
        self.dh = 0
        self.aead_seal = 0
        self.aead_open = 0
        self.hash = 0

    def reset(self) -> None:
        self.__init__()

    def snapshot(self) -> dict[str, int]:
        return {
            "sign": self.sign,
            "verify": self.verify,
            "dh": self.dh,
            "aead_seal": self.aead_seal,
            "aead_open": self.aead_open,
            "hash": self.hash,
        }


counters = _Counters()


@dataclass
class NonceLog:
    """Optional test-mode record of every (key, nonce) pair sealed.

    Disabled by default; tests enable it to prove that no nonce is ever
    used twice under one key within a session's lifetime.
    """

    enabled: bool = False
    seen: set = field(default_factory=set)
    duplicates: list = field(default_factory=list)
    _lock: threading.Lock = field(default_factory=threading.Lock)

    def record(self, key: bytes, nonce: bytes) -> None:
        if not self.enabled:
            return
        with self._lock:
            pair = (key, nonce)
            if pair in self.seen:
                self.duplicates.append(pair)
            self.seen.add(pair)

    def clear(self) -> None:
        with self._lock:
            self.seen.clear()
            self.duplicates.clear()


nonce_log = NonceLog()


def sign(identity: IdentityKeyPair, message: bytes) -> bytes:
    """Deterministic Ed25519 signature (64 bytes) under the identity seed."""
    counters.sign += 1
    key = ed25519.Ed25519PrivateKey.from_private_bytes(identity.seed)
    return key.sign(message)


def verify(public: bytes, message: bytes, signature: bytes) -> bool:
    """Ed25519 verification; malformed keys or signatures count as False."""
    counters.verify += 1
    try:
        ed25519.Ed25519PublicKey.from_public_bytes(public).verify(signature, message)
        return True
    except (InvalidSignature, ValueError):
        return False


def dh(scalar: bytes, peer_public: bytes) -> bytes:
    """X25519 shared secret. Rejects the all-zero output that low-order
    peer points force, per RFC 7748's security considerations."""
    counters.dh += 1
    try:
        priv = x25519.X25519PrivateKey.from_private_bytes(scalar)
        pub = x25519.X25519PublicKey.from_public_bytes(peer_public)
        out = priv.exchange(pub)
    except ValueError as exc:
        raise LowOrderPoint(str(exc)) from None
    if out == bytes(32):
        raise LowOrderPoint("all-zero shared secret")
    return out


def x25519_keypair(seed32: bytes) -> tuple[bytes, bytes]:
    """Clamp a 32-byte string into an X25519 scalar and return it with
    its public key. Used for ephemeral key generation."""
    from .curve import clamp_scalar, x25519_public

    scalar = clamp_scalar(seed32)
    return scalar, x25519_public(scalar)


def hkdf(ikm: bytes, salt: bytes, info: bytes, out_len: int) -> bytes:
    """RFC 5869 HKDF with HMAC-SHA256 (extract then expand)."""
    if out_len > 255 * 32:
        raise LengthExceeded(f"HKDF output of {out_len} bytes exceeds 255*32")
    if not salt:
        salt = b"\x00" * 32
    prk = hmac.new(salt, ikm, hashlib.sha256).digest()
    okm = b""
    block = b""
    i = 1
    while len(okm) < out_len:
        block = hmac.new(prk, block + info + bytes([i]), hashlib.sha256).digest()
        okm += block
        i += 1
    return okm[:out_len]


def aead_seal(key: bytes, nonce: bytes, ad: bytes, plaintext: bytes) -> bytes:
    """ASCON-128a seal: returns ciphertext || 16-byte tag. The nonce must
    be fresh under this key; freshness is the caller's contract."""
    counters.aead_seal += 1
    nonce_log.record(key, nonce)
    return ascon.encrypt(key, nonce, ad, plaintext)


def aead_open(key: bytes, nonce: bytes, ad: bytes, sealed: bytes) -> bytes:
    """ASCON-128a open; raises AuthFailure on any tag mismatch."""
    counters.aead_open += 1
    if len(sealed) < AEAD_TAG_LEN:
        raise TooShort(f"sealed input is {len(sealed)} bytes, tag alone is 16")
    plaintext = ascon.decrypt(key, nonce, ad, sealed)
    if plaintext is None:
        raise AuthFailure("AEAD tag mismatch")
    return plaintext


def hash256(data: bytes) -> bytes:
    counters.hash += 1
    return hashlib.sha256(data).digest()


def ed_public_bytes(seed: bytes) -> bytes:
    """Ed25519 public key for a raw seed, without building a full identity."""
    priv = ed25519.Ed25519PrivateKey.from_private_bytes(seed)
    return priv.public_key().public_bytes(
        serialization.Encoding.Raw, serialization.PublicFormat.Raw
    )
