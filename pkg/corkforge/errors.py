"""Exception hierarchy shared by every cork-forge subsystem"""

from typing import List, Optional


class CorkForgeError(Exception):
    """Base exception for cork-forge errors"""
    pass


class HandlebodyError(CorkForgeError):
    """Raised when a handlebody is malformed or an operation's precondition on it fails"""
    pass


class SmithNormalFormError(CorkForgeError):
    """Raised when a normal form decomposition fails its own verification"""
    pass


class LegendrianError(CorkForgeError):
    """Raised for missing Legendrian data, bad zig-zag parameters or invalid Stein choices"""
    pass


class ModificationError(CorkForgeError):
    """Raised when a W-move, replay or boundary sum cannot be applied"""
    pass


class PlanError(CorkForgeError):
    """Raised when basis data cannot be extracted or a sequence plan is unusable"""
    pass


class SerializationError(CorkForgeError):
    """Raised when JSON input does not match the expected schema"""
    pass


class CertificateRefused(CorkForgeError):
    """
    Raised when a certificate cannot be issued

    Attributes:
        reasons: Human-readable list of every failed check
    """

    def __init__(self, message: str, reasons: Optional[List[str]] = None):
        self.reasons = list(reasons or [])
        if self.reasons:
            message = f"{message}: " + "; ".join(self.reasons)
        super().__init__(message)
