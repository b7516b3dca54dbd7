"""Identity certificates and the boundary that produces them.

A certificate is a deterministic record of one exact check: the two sides
that were compared, the outcome and, on failure, where the sides first
differ. Verifiers are wrapped with :func:`verifier`, which binds their
arguments into a parameter record and converts precondition violations
into ``error`` certificates instead of letting them escape.
"""

from __future__ import annotations

import functools
import inspect
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

from eulercert.arith.codec import encode_value
from eulercert.arith.polynomial import RationalPolynomial
from eulercert.arith.series import TruncatedSeries
from eulercert.dirichlet.characters import DirichletCharacter
from eulercert.exceptions import NonCancellingPoleError, PreconditionError

logger = logging.getLogger(__name__)

STATUS_PASS = "pass"
STATUS_FAIL = "fail"
STATUS_ERROR = "error"


@dataclass(frozen=True)
class IdentityCertificate:
    """Outcome of one exact identity check.

    ``status`` is ``pass`` iff ``lhs`` equals ``rhs`` exactly, ``fail``
    otherwise, and ``error`` when a precondition rejected the parameters
    (``lhs``/``rhs`` are then ``None`` and ``reason`` says why).
    """

    theorem: str
    params: dict
    lhs: Any
    rhs: Any
    status: str
    first_mismatch: Any = None
    reason: str | None = None
    extra: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == STATUS_PASS

    def sort_key(self) -> tuple:
        return (self.theorem, _params_sort_key(self.params))


# ---------------------------------------------------------------------------
# Comparison
# ---------------------------------------------------------------------------

def _unwrap(value):
    if isinstance(value, RationalPolynomial):
        return list(value.coeffs)
    if isinstance(value, TruncatedSeries):
        return list(value.coeffs)
    return value


def first_mismatch_index(lhs, rhs):
    """Locate the first difference between two compared values.

    Sequences (coefficient vectors, polynomials, series) are compared
    index by index with missing entries read as zero; dicts key by key.
    Returns ``None`` when the values agree, an index or key for a
    top-level difference, and a ``"key[index]"`` path for nested ones.
    Two differing scalars mismatch at index 0.
    """
    path = _mismatch_path(_unwrap(lhs), _unwrap(rhs))
    if path is None:
        return None
    if not path:
        return 0
    if len(path) == 1:
        return path[0]
    head, rest = path[0], path[1:]
    return str(head) + "".join(f"[{p}]" for p in rest)


def _mismatch_path(lhs, rhs) -> list | None:
    if isinstance(lhs, dict) and isinstance(rhs, dict):
        for key in list(lhs) + [k for k in rhs if k not in lhs]:
            if key not in lhs or key not in rhs:
                return [key]
            inner = _mismatch_path(_unwrap(lhs[key]), _unwrap(rhs[key]))
            if inner is not None:
                return [key] + inner
        return None
    if isinstance(lhs, (list, tuple)) and isinstance(rhs, (list, tuple)):
        for i in range(max(len(lhs), len(rhs))):
            a = lhs[i] if i < len(lhs) else Fraction(0)
            b = rhs[i] if i < len(rhs) else Fraction(0)
            inner = _mismatch_path(_unwrap(a), _unwrap(b))
            if inner is not None:
                return [i] + inner
        return None
    if lhs == rhs:
        return None
    return []


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------

def character_params(chi: DirichletCharacter) -> dict:
    return {"modulus": chi.modulus, "char_index": chi.index, "conductor": chi.conductor}


def make_certificate(
    theorem: str,
    params: dict,
    lhs,
    rhs,
    extra: dict | None = None,
) -> IdentityCertificate:
    """Compare *lhs* and *rhs* exactly and record the outcome."""
    mismatch = first_mismatch_index(lhs, rhs)
    if mismatch is None:
        status = STATUS_PASS
    else:
        status = STATUS_FAIL
        logger.warning("%s failed at %s for %s", theorem, mismatch, params)
    return IdentityCertificate(
        theorem=theorem,
        params=params,
        lhs=lhs,
        rhs=rhs,
        status=status,
        first_mismatch=mismatch,
        extra=extra or {},
    )


def error_certificate(theorem: str, params: dict, exc: Exception) -> IdentityCertificate:
    return IdentityCertificate(
        theorem=theorem,
        params=params,
        lhs=None,
        rhs=None,
        status=STATUS_ERROR,
        reason=f"{type(exc).__name__}: {exc}",
    )


def _bind_params(func: Callable, args: tuple, kwargs: dict) -> dict:
    bound = inspect.signature(func).bind(*args, **kwargs)
    bound.apply_defaults()
    params: dict = {}
    for name, value in bound.arguments.items():
        if name == "params":
            continue
        if isinstance(value, DirichletCharacter):
            params.update(character_params(value))
        else:
            params[name] = value
    return params


def verifier(theorem: str) -> Callable:
    """Decorate a verifier ``f(*params) -> IdentityCertificate``.

    The wrapped function receives the bound parameter record as the
    keyword argument ``params``; precondition violations become ``error``
    certificates.
    """

    def decorate(func: Callable) -> Callable:
        @functools.wraps(func)
        def wrapper(*args, **kwargs) -> IdentityCertificate:
            params = _bind_params(func, args, kwargs)
            try:
                return func(*args, **kwargs, params=params)
            except (PreconditionError, NonCancellingPoleError) as exc:
                logger.info("%s rejected %s: %s", theorem, params, exc)
                return error_certificate(theorem, params, exc)

        wrapper.theorem = theorem
        return wrapper

    return decorate


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def _params_sort_key(params: dict) -> tuple:
    return tuple((k, _sortable(v)) for k, v in sorted(params.items()))


def _sortable(value):
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return (0, Fraction(value), "")
    return (1, Fraction(0), str(value))


def certificate_to_dict(cert: IdentityCertificate) -> dict:
    """JSON-ready form; every exact value is encoded as a string or object."""
    return {
        "theorem": cert.theorem,
        "params": encode_value(cert.params),
        "status": cert.status,
        "lhs": encode_value(cert.lhs),
        "rhs": encode_value(cert.rhs),
        "first_mismatch": encode_value(cert.first_mismatch),
        "reason": cert.reason,
        "extra": encode_value(cert.extra),
    }
