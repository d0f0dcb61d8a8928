"""Compact fixed-layout certificates and a single-level issuing authority.

The credential binds an 8-byte party identifier to a 32-byte Ed25519
public key inside a validity window, signed by one deployment-wide CA.
The layout is fixed-width and field-ordered so encoding is canonical:

    offset  size  field
    0       1     version (currently 1)
    1       8     subject_id
    9       32    subject_public (Ed25519)
    41      8     not_before   (unsigned ms since epoch, big-endian)
    49      8     not_after
    57      8     issuer_id
    65      64    issuer_sig   (Ed25519 over bytes 0..64)

129 bytes total. There are no chains, extensions, or revocation: one
anchor per deployment, one certificate per peer. Files use extension
``.lsegc`` (certificate) and ``.lsegk`` (32-byte secret seed).
"""

from __future__ import annotations

import enum
import struct
from dataclasses import dataclass

from . import primitives
from .curve import IdentityKeyPair
from .errors import InvalidWindow, Malformed

CERT_VERSION = 1
CERT_LEN = 129
_TBS_LEN = 65  # to-be-signed prefix
ID_LEN = 8

CERT_FILE_EXT = ".lsegc"
KEY_FILE_EXT = ".lsegk"


@dataclass(frozen=True)
class Certificate:
    subject_id: bytes
    subject_public: bytes
    not_before: int
    not_after: int
    issuer_id: bytes
    issuer_sig: bytes
    version: int = CERT_VERSION


@dataclass(frozen=True)
class TrustAnchor:
    """The deployment's certificate authority: its id and public key."""

    ca_id: bytes
    ca_public: bytes


class CertStatus(enum.Enum):
    OK = "ok"
    BAD_ISSUER = "BadIssuer"
    BAD_SIGNATURE = "BadSignature"
    EXPIRED = "Expired"
    NOT_YET_VALID = "NotYetValid"


def _tbs(cert: Certificate) -> bytes:
    return struct.pack(
        ">B8s32sQQ8s",
        cert.version,
        cert.subject_id,
        cert.subject_public,
        cert.not_before,
        cert.not_after,
        cert.issuer_id,
    )


def encode_cert(cert: Certificate) -> bytes:
    return _tbs(cert) + cert.issuer_sig


def decode_cert(data: bytes) -> Certificate:
    if len(data) != CERT_LEN:
        raise Malformed(f"certificate must be {CERT_LEN} bytes, got {len(data)}")
    version, subject_id, subject_public, not_before, not_after, issuer_id = (
        struct.unpack(">B8s32sQQ8s", data[:_TBS_LEN])
    )
    if version != CERT_VERSION:
        raise Malformed(f"unknown certificate version {version}")
    return Certificate(
        subject_id=subject_id,
        subject_public=subject_public,
        not_before=not_before,
        not_after=not_after,
        issuer_id=issuer_id,
        issuer_sig=data[_TBS_LEN:],
    )


def issue(
    ca: IdentityKeyPair,
    ca_id: bytes,
    subject_id: bytes,
    subject_public: bytes,
    not_before: int,
    not_after: int,
) -> Certificate:
    """Issue a certificate under the CA's signing key.

    The window is half-open to inspection but closed in verification:
    ``not_before <= now <= not_after`` accepts.
    """
    if len(subject_id) != ID_LEN or len(ca_id) != ID_LEN:
        raise ValueError("identifiers must be 8 bytes")
    if len(subject_public) != 32:
        raise ValueError("subject public key must be 32 bytes")
    if not_before >= not_after:
        raise InvalidWindow(f"empty validity window [{not_before}, {not_after}]")
    unsigned = Certificate(
        subject_id=subject_id,
        subject_public=subject_public,
        not_before=not_before,
        not_after=not_after,
        issuer_id=ca_id,
        issuer_sig=b"\x00" * 64,
    )
    sig = primitives.sign(ca, _tbs(unsigned))
    return Certificate(
        subject_id=subject_id,
        subject_public=subject_public,
        not_before=not_before,
        not_after=not_after,
        issuer_id=ca_id,
        issuer_sig=sig,
    )


def check_window(cert: Certificate, now: int) -> CertStatus:
    """Validity-window portion of verification; cheap, no crypto."""
    if now < cert.not_before:
        return CertStatus.NOT_YET_VALID
    if now > cert.not_after:
        return CertStatus.EXPIRED
    return CertStatus.OK


def check_signature(cert: Certificate, anchor: TrustAnchor) -> CertStatus:
    """Issuer-signature portion of verification; one Ed25519 verify."""
    if not primitives.verify(anchor.ca_public, _tbs(cert), cert.issuer_sig):
        return CertStatus.BAD_SIGNATURE
    return CertStatus.OK


def verify_cert(cert: Certificate, anchor: TrustAnchor, now: int) -> CertStatus:
    """Full verification: issuer id, validity window, issuer signature."""
    if cert.issuer_id != anchor.ca_id:
        return CertStatus.BAD_ISSUER
    status = check_window(cert, now)
    if status is not CertStatus.OK:
        return status
    return check_signature(cert, anchor)


def anchor_from_cert(cert: Certificate) -> TrustAnchor:
    """Treat a self-issued CA certificate as the deployment trust anchor."""
    return TrustAnchor(ca_id=cert.subject_id, ca_public=cert.subject_public)


def self_issue(ca: IdentityKeyPair, ca_id: bytes, not_before: int, not_after: int) -> Certificate:
    return issue(ca, ca_id, ca_id, ca.ed_public, not_before, not_after)
