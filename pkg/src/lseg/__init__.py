"""Two-phase authenticated key exchange for constrained nodes.

One 32-byte Ed25519 identity serves both signing and X25519 key agreement
through the Curve25519/edwards25519 birational mapping. Phase 1
authenticates peers with compact certificates and derives a long-lived
initial key; phase 2 runs per session, exchanging AEAD-protected ephemeral
keys and confirming a fresh symmetric key that then protects application
records under ASCON-128a.
"""

__version__ = "0.1.0"

from .curve import IdentityKeyPair, derive_identity
from .certs import Certificate, TrustAnchor, issue, verify_cert
from .handshake import (
    HandshakeConfig,
    HandshakeResult,
    Role,
    SessionKeys,
    TrustStore,
    run_handshake,
    serve_handshake,
)
from .session import RecordCipher
from .errors import LsegError

__all__ = [
    "IdentityKeyPair",
    "derive_identity",
    "Certificate",
    "TrustAnchor",
    "issue",
    "verify_cert",
    "HandshakeConfig",
    "HandshakeResult",
    "Role",
    "SessionKeys",
    "TrustStore",
    "run_handshake",
    "serve_handshake",
    "RecordCipher",
    "LsegError",
    "__version__",
]
