"""Standards-conformance gate: run every primitive against its published
test vectors.

Vector files live in the packaged ``vectors/`` directory in their familiar
published layouts (RFC hex listings, the LWC known-answer format for
ASCON). ``run_all`` executes all suites and reports per-suite pass/fail;
the test suite and the ``lseg conformance`` subcommand share this code so
the gate that CI enforces is exactly the gate operators can re-run.
"""

from __future__ import annotations

import hashlib
import hmac
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from . import ascon, primitives
from .curve import IdentityKeyPair


def _vector_text(name: str, vectors_dir: str | None = None) -> str:
    if vectors_dir is not None:
        return (Path(vectors_dir) / name).read_text()
    return (resources.files("lseg") / "vectors" / name).read_text()


def _parse_blocks(text: str) -> list[dict[str, str]]:
    """Split a vector file into blocks of ``FIELD: hex`` lines.

    Block boundaries are blank lines; lines without a colon (headers like
    ``TEST 1``) start a new block and are kept under the ``_title`` key.
    """
    blocks: list[dict[str, str]] = []
    current: dict[str, str] = {}
    for raw in text.splitlines():
        line = raw.strip()
        if line.startswith("#"):
            continue
        if not line:
            if current:
                blocks.append(current)
                current = {}
            continue
        if ":" in line:
            field, _, value = line.partition(":")
            current[field.strip().upper()] = value.strip()
        else:
            if current:
                blocks.append(current)
            current = {"_TITLE": line}
    if current:
        blocks.append(current)
    return blocks


def _parse_kat(text: str) -> list[dict[str, bytes]]:
    rows: list[dict[str, bytes]] = []
    row: dict[str, bytes] = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            if row:
                rows.append(row)
                row = {}
            continue
        field, _, value = line.partition("=")
        field = field.strip()
        value = value.strip()
        if field == "Count":
            row["count"] = int(value)  # type: ignore[assignment]
        else:
            row[field.lower()] = bytes.fromhex(value)
    if row:
        rows.append(row)
    return rows


@dataclass
class SuiteResult:
    name: str
    total: int
    failed: int

    @property
    def passed(self) -> bool:
        return self.failed == 0 and self.total > 0


def run_ed25519(vectors_dir: str | None = None) -> SuiteResult:
    blocks = _parse_blocks(_vector_text("ed25519_rfc8032.txt", vectors_dir))
    total = failed = 0
    for b in blocks:
        if "SECRET KEY" not in b:
            continue
        total += 1
        seed = bytes.fromhex(b["SECRET KEY"])
        public = bytes.fromhex(b["PUBLIC KEY"])
        message = bytes.fromhex(b.get("MESSAGE", ""))
        expected = bytes.fromhex(b["SIGNATURE"])
        identity = IdentityKeyPair(seed=seed, ed_public=primitives.ed_public_bytes(seed),
                                   x_scalar=b"", x_public=b"")
        ok = (identity.ed_public == public
              and primitives.sign(identity, message) == expected
              and primitives.verify(public, message, expected)
              and not primitives.verify(public, message + b"x", expected))
        failed += 0 if ok else 1
    return SuiteResult("ed25519-rfc8032", total, failed)


def run_x25519(vectors_dir: str | None = None) -> SuiteResult:
    blocks = _parse_blocks(_vector_text("x25519_rfc7748.txt", vectors_dir))
    total = failed = 0
    for b in blocks:
        if "SCALAR" in b:
            total += 1
            out = primitives.dh(bytes.fromhex(b["SCALAR"]),
                                bytes.fromhex(b["U-COORDINATE"]))
            failed += 0 if out == bytes.fromhex(b["OUTPUT"]) else 1
        elif "ALICE PRIVATE" in b:
            total += 1
            from .curve import x25519_public
            a = bytes.fromhex(b["ALICE PRIVATE"])
            bb = bytes.fromhex(b["BOB PRIVATE"])
            ok = (x25519_public(a) == bytes.fromhex(b["ALICE PUBLIC"])
                  and x25519_public(bb) == bytes.fromhex(b["BOB PUBLIC"])
                  and primitives.dh(a, bytes.fromhex(b["BOB PUBLIC"])) == bytes.fromhex(b["SHARED"])
                  and primitives.dh(bb, bytes.fromhex(b["ALICE PUBLIC"])) == bytes.fromhex(b["SHARED"]))
            failed += 0 if ok else 1
    return SuiteResult("x25519-rfc7748", total, failed)


def run_hkdf(vectors_dir: str | None = None) -> SuiteResult:
    blocks = _parse_blocks(_vector_text("hkdf_rfc5869.txt", vectors_dir))
    total = failed = 0
    for b in blocks:
        if "IKM" not in b:
            continue
        total += 1
        ikm = bytes.fromhex(b["IKM"])
        salt = bytes.fromhex(b.get("SALT", ""))
        info = bytes.fromhex(b.get("INFO", ""))
        okm = primitives.hkdf(ikm, salt, info, int(b["L"]))
        prk = hmac.new(salt or b"\x00" * 32, ikm, hashlib.sha256).digest()
        ok = okm == bytes.fromhex(b["OKM"]) and prk == bytes.fromhex(b["PRK"])
        failed += 0 if ok else 1
    return SuiteResult("hkdf-rfc5869", total, failed)


def run_sha256(vectors_dir: str | None = None) -> SuiteResult:
    blocks = _parse_blocks(_vector_text("sha256_known.txt", vectors_dir))
    total = failed = 0
    for b in blocks:
        if "DIGEST" not in b:
            continue
        total += 1
        digest = primitives.hash256(bytes.fromhex(b.get("MESSAGE", "")))
        failed += 0 if digest == bytes.fromhex(b["DIGEST"]) else 1
    return SuiteResult("sha256", total, failed)


def run_ascon(vectors_dir: str | None = None) -> SuiteResult:
    rows = _parse_kat(_vector_text("ascon128a_aead_kat.txt", vectors_dir))
    total = failed = 0
    for row in rows:
        total += 1
        key, nonce = row["key"], row["nonce"]
        pt, ad, ct = row["pt"], row["ad"], row["ct"]
        sealed = ascon.encrypt(key, nonce, ad, pt)
        opened = ascon.decrypt(key, nonce, ad, ct)
        corrupt = bytearray(ct)
        corrupt[0] ^= 0x01
        ok = (sealed == ct and opened == pt
              and ascon.decrypt(key, nonce, ad, bytes(corrupt)) is None)
        failed += 0 if ok else 1
    return SuiteResult("ascon128a-kat", total, failed)


def run_all(vectors_dir: str | None = None) -> list[SuiteResult]:
    return [
        run_ed25519(vectors_dir),
        run_x25519(vectors_dir),
        run_hkdf(vectors_dir),
        run_sha256(vectors_dir),
        run_ascon(vectors_dir),
    ]
