"""Field arithmetic over GF(2^255 - 19) and the Curve25519/edwards25519
birational mapping.

Curve25519 (Montgomery form, u-coordinate) and edwards25519 share the same
field, and points move between the two shapes through

    y = (u - 1) / (u + 1)        (Montgomery u  ->  Edwards y)
    u = (1 + y) / (1 - y)        (Edwards y     ->  Montgomery u)

which is what allows a single 32-byte Ed25519 key pair to serve both as a
signing identity and as an X25519 key-agreement identity: the X25519 scalar
is the clamped SHA-512 prefix of the Ed25519 seed (exactly how Ed25519
itself derives its secret scalar), and the X25519 public key of that scalar
equals the birational image of the Ed25519 public key.

Field elements are plain Python integers in [0, p); encodings are the usual
32-byte little-endian form. Non-canonical encodings (value >= p) decode by
reduction rather than rejection, matching X25519 practice. The Edwards sign
bit is dropped by the mapping, which is harmless here because Montgomery
u-coordinate Diffie-Hellman is sign-independent.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

from cryptography.hazmat.primitives import serialization
from cryptography.hazmat.primitives.asymmetric import ed25519, x25519

from .errors import ExceptionalPoint, ZeroInverse

P = 2**255 - 19

#: u-coordinate of the X25519 base point.
BASE_U = 9


def fe_decode(data: bytes) -> int:
    """Decode 32 little-endian bytes to a field element, reducing mod p."""
    if len(data) != 32:
        raise ValueError("field element encoding must be 32 bytes")
    return int.from_bytes(data, "little") % P


def fe_encode(x: int) -> bytes:
    """Canonical 32-byte little-endian encoding of a field element."""
    return (x % P).to_bytes(32, "little")


def fe_invert(x: int) -> int:
    """Multiplicative inverse mod p via x^(p-2); branch-free on the value."""
    x %= P
    if x == 0:
        raise ZeroInverse("0 has no inverse")
    return pow(x, P - 2, P)


def decode_mont_u(data: bytes) -> int:
    """Decode a Montgomery u-coordinate: high bit of byte 31 is ignored."""
    if len(data) != 32:
        raise ValueError("u-coordinate encoding must be 32 bytes")
    masked = bytearray(data)
    masked[31] &= 0x7F
    return int.from_bytes(masked, "little") % P


def decode_edwards_y(data: bytes) -> int:
    """Decode an Edwards y-coordinate, dropping the x-sign bit."""
    return decode_mont_u(data)  # same masking convention


def mont_to_edwards(u: int) -> int:
    """Map a Montgomery u-coordinate to the Edwards y-coordinate.

    Raises ExceptionalPoint for u = p - 1, the pole of the map.
    """
    u %= P
    if u == P - 1:
        raise ExceptionalPoint("u = p - 1 has no Edwards image")
    return (u - 1) * fe_invert(u + 1) % P


def edwards_to_mont(y: int) -> int:
    """Map an Edwards y-coordinate back to the Montgomery u-coordinate.

    Raises ExceptionalPoint for y = 1, the pole of the inverse map.
    """
    y %= P
    if y == 1:
        raise ExceptionalPoint("y = 1 has no Montgomery image")
    return (1 + y) * fe_invert(1 - y) % P


def clamp_scalar(data: bytes) -> bytes:
    """Clamp 32 bytes into an X25519 scalar (RFC 7748 bit masking)."""
    if len(data) != 32:
        raise ValueError("scalar must be 32 bytes")
    s = bytearray(data)
    s[0] &= 248
    s[31] &= 127
    s[31] |= 64
    return bytes(s)


def x25519_public(scalar: bytes) -> bytes:
    """X25519 public key (scalar times the base point u = 9)."""
    priv = x25519.X25519PrivateKey.from_private_bytes(scalar)
    return priv.public_key().public_bytes(
        serialization.Encoding.Raw, serialization.PublicFormat.Raw
    )


def x_public_from_ed(ed_public: bytes) -> bytes:
    """Montgomery public key obtained by mapping an Ed25519 public key."""
    return fe_encode(edwards_to_mont(decode_edwards_y(ed_public)))


@dataclass(frozen=True)
class IdentityKeyPair:
    """One 32-byte seed in both of its working forms.

    ``ed_public`` signs and verifies; ``x_scalar``/``x_public`` run X25519.
    The two public keys are images of each other under the birational map,
    so a certificate needs to carry only the Ed25519 form.
    """

    seed: bytes
    ed_public: bytes
    x_scalar: bytes
    x_public: bytes


def derive_identity(seed: bytes) -> IdentityKeyPair:
    """Derive the unified key pair from a 32-byte seed.

    The X25519 public key is computed twice, once by scalar multiplication
    and once by mapping the Ed25519 public key; the two must agree or the
    derivation is broken.
    """
    if len(seed) != 32:
        raise ValueError("seed must be 32 bytes")
    ed_priv = ed25519.Ed25519PrivateKey.from_private_bytes(seed)
    ed_public = ed_priv.public_key().public_bytes(
        serialization.Encoding.Raw, serialization.PublicFormat.Raw
    )
    x_scalar = clamp_scalar(hashlib.sha512(seed).digest()[:32])
    x_public = x25519_public(x_scalar)
    mapped = x_public_from_ed(ed_public)
    if mapped != x_public:
        raise RuntimeError("key unification broken: scalar and mapped paths differ")
    return IdentityKeyPair(seed=seed, ed_public=ed_public,
                           x_scalar=x_scalar, x_public=x_public)
