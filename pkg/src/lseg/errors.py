"""Exception types used across the protocol stack.

Every error carries a stable short ``code`` string. The CLI prints the code
and maps it to an exit status, and the attack harness matches expected
outcomes against it, so codes are part of the public interface and must not
be renamed casually.
"""


class LsegError(Exception):
    """Base class for all protocol-level errors."""

    code = "Error"

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        base = super().__str__()
        return f"{self.code}: {base}" if base else self.code


# field / curve arithmetic

class ExceptionalPoint(LsegError):
    """Input hit the pole of the birational map (u = p-1 or y = 1)."""

    code = "ExceptionalPoint"


class ZeroInverse(LsegError):
    code = "ZeroInverse"


# primitives

class LowOrderPoint(LsegError):
    """X25519 produced an all-zero shared secret."""

    code = "LowOrderPoint"


class LengthExceeded(LsegError):
    code = "LengthExceeded"


class AuthFailure(LsegError):
    """AEAD tag verification failed."""

    code = "AuthFailure"


class TooShort(LsegError):
    code = "TooShort"


# certificates

class InvalidWindow(LsegError):
    code = "InvalidWindow"


class Malformed(LsegError):
    code = "Malformed"


# handshake

class BadCert(LsegError):
    code = "BadCert"


class StaleTimestamp(LsegError):
    code = "StaleTimestamp"


class FutureTimestamp(LsegError):
    code = "FutureTimestamp"


class BadSignature(LsegError):
    code = "BadSignature"


class Replayed(LsegError):
    code = "Replayed"


class WrongDirection(LsegError):
    code = "WrongDirection"


class ConfirmMismatch(LsegError):
    """Key-confirmation hash did not match."""

    code = "ConfirmMismatch"


class StateError(LsegError):
    """Access to key material that has already been erased."""

    code = "StateError"


class UnexpectedMessage(LsegError):
    """A well-formed message arrived out of protocol order."""

    code = "UnexpectedMessage"


# wire accounting

class IncompletePhase(LsegError):
    code = "IncompletePhase"


# record layer

class OutOfOrder(LsegError):
    code = "OutOfOrder"


class CounterExhausted(LsegError):
    code = "CounterExhausted"


# transport

class ChannelClosed(LsegError):
    code = "ChannelClosed"


class Timeout(LsegError):
    code = "Timeout"


# attack harness

class ScriptError(LsegError):
    code = "ScriptError"
