"""Verification suites: default parameter grids and the grid runner.

A suite expands its grid into *cells* (a verifier key plus plain keyword
arguments) in canonical order. Characters travel through cells as
``(modulus, char_index)`` so cells pickle cleanly for the process pool
and are re-resolved on the worker side.
"""

from __future__ import annotations

import copy
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from eulercert.arith.integers import is_prime
from eulercert.arith.rational import parse_rational
from eulercert.dirichlet.characters import (
    DirichletCharacter,
    enumerate_characters,
    get_character,
    is_primitive,
    is_principal,
)
from eulercert.exceptions import PreconditionError
from eulercert.fermionic.checks import (
    verify_convergence,
    verify_shift_equation,
    verify_twisted_partial_sum,
)
from eulercert.identities.certificate import IdentityCertificate
from eulercert.identities.characters import verify_eq17, verify_theorem4
from eulercert.identities.classical import (
    verify_eq5,
    verify_euler_poly_bernoulli,
    verify_oracles,
    verify_theorem1,
    verify_theorem1_independence,
    verify_theorem2,
    verify_theorem3,
)
from eulercert.identities.symmetry import verify_k_symmetry, verify_theorem5

logger = logging.getLogger(__name__)

# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------

VERIFIERS: dict[str, Callable[..., IdentityCertificate]] = {
    "oracles": verify_oracles,
    "eq5": verify_eq5,
    "theorem1": verify_theorem1,
    "theorem1_independence": verify_theorem1_independence,
    "theorem2": verify_theorem2,
    "theorem3": verify_theorem3,
    "euler_poly": verify_euler_poly_bernoulli,
    "theorem4": verify_theorem4,
    "eq17": verify_eq17,
    "symmetry": verify_k_symmetry,
    "theorem5": verify_theorem5,
    "convergence": verify_convergence,
    "shift": verify_shift_equation,
    "twisted_fermionic": verify_twisted_partial_sum,
}

DEFAULT_GRIDS: dict[str, dict] = {
    "oracles": {"max_degree": 40},
    "eq5": {"moduli": [2, 4, 6, 8, 10], "order": 32},
    "theorem1": {"moduli": [2, 4, 6, 8, 10], "max_degree": 20},
    "theorem2": {"moduli": [2, 4, 6, 8, 10], "max_degree": 20},
    "theorem3": {"moduli": [2, 4, 6, 8], "max_degree": 15},
    "euler_poly": {"moduli": [2, 4, 6, 8], "max_degree": 15},
    "theorem4": {"moduli": [4, 8, 12], "max_degree": 10, "primitive_only": False},
    "eq17": {"moduli": [4, 8], "multiples": [1, 2, 3], "max_degree": 8, "primitive_only": False},
    "symmetry": {
        "moduli": [4, 8],
        "weights": [1, 2, 3],
        "omega": 10,
        "points": ["0", "1/2"],
        "primitive_only": False,
        "include_principal": False,
    },
    "theorem5": {
        "moduli": [4, 8],
        "weights": [1, 2, 3],
        "max_degree": 8,
        "points": ["0", "1/2"],
        "primitive_only": False,
        "include_principal": False,
    },
    "convergence": {"primes": [3, 5, 7], "max_degree": 8, "max_level": 5},
    "shift": {"max_shift": 10, "max_degree": 8},
    "twisted_fermionic": {
        "moduli": [4, 8],
        "primes": [3, 5, 7],
        "max_degree": 4,
        "max_level": 2,
        "primitive_only": False,
    },
}

SUITE_NAMES: tuple[str, ...] = tuple(DEFAULT_GRIDS)

# Suites whose every modulus must be even.
EVEN_MODULUS_SUITES = frozenset(
    name for name, grid in DEFAULT_GRIDS.items() if "moduli" in grid
)

PRINCIPAL_POLE_REASON = "principal character: K has a pole at t = 0"


@dataclass(frozen=True)
class SuiteResult:
    """Certificates of one suite in canonical order, plus what the grid left out."""

    name: str
    grid: dict
    certificates: list[IdentityCertificate]
    excluded: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.certificates) and all(c.passed for c in self.certificates)

    def counts(self) -> dict[str, int]:
        totals = {"pass": 0, "fail": 0, "error": 0}
        for cert in self.certificates:
            totals[cert.status] += 1
        totals["total"] = len(self.certificates)
        return totals


# ---------------------------------------------------------------------------
# Grid handling
# ---------------------------------------------------------------------------

def resolve_grid(name: str, overrides: dict | None = None) -> dict:
    """The default grid of *name* updated with *overrides* (``None`` values ignored)."""
    if name not in DEFAULT_GRIDS:
        raise PreconditionError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    grid = copy.deepcopy(DEFAULT_GRIDS[name])
    for key, value in (overrides or {}).items():
        if value is not None and key in grid:
            grid[key] = value
    return grid


def validate_grid(name: str, grid: dict) -> None:
    """Reject grids that would violate a verifier precondition in every cell.

    Raises:
        PreconditionError: odd or non-positive moduli for suites that need
            even ones, primes that are not odd primes, or malformed points.
    """
    if name in EVEN_MODULUS_SUITES:
        for d in grid["moduli"]:
            if d < 2 or d % 2:
                raise PreconditionError(f"suite {name} needs even moduli, got {d}")
    for p in grid.get("primes", ()):
        if p == 2 or not is_prime(p):
            raise PreconditionError(f"suite {name} needs odd primes, got {p}")
    for w in grid.get("weights", ()):
        if w < 1:
            raise PreconditionError(f"weights must be positive, got {w}")
    for text in grid.get("points", ()):
        parse_rational(str(text))
    for key in ("max_degree", "max_level", "max_shift", "order", "omega"):
        if key in grid and grid[key] < 0:
            raise PreconditionError(f"{key} must be >= 0, got {grid[key]}")


def select_characters(
    moduli: list[int], primitive_only: bool, include_principal: bool = True
) -> tuple[list[DirichletCharacter], list[dict]]:
    """Characters of *moduli* in enumeration order, and the ones left out."""
    chosen: list[DirichletCharacter] = []
    excluded: list[dict] = []
    for d in sorted(moduli):
        for chi in enumerate_characters(d):
            reason = None
            if primitive_only and not is_primitive(chi):
                reason = f"not primitive (conductor {chi.conductor})"
            elif not include_principal and is_principal(chi):
                reason = PRINCIPAL_POLE_REASON
            if reason is None:
                chosen.append(chi)
            else:
                excluded.append({"modulus": d, "char_index": chi.index, "reason": reason})
    return chosen, excluded


def _char_ref(chi: DirichletCharacter) -> dict:
    return {"modulus": chi.modulus, "char_index": chi.index}


def expand_grid(name: str, grid: dict) -> tuple[list[tuple[str, dict]], list[dict]]:
    """Cells ``(verifier_key, kwargs)`` of suite *name* in canonical order."""
    cells: list[tuple[str, dict]] = []
    excluded: list[dict] = []
    moduli = sorted(grid.get("moduli", ()))

    if name == "oracles":
        cells = [("oracles", {"n": n}) for n in range(grid["max_degree"] + 1)]
    elif name == "eq5":
        cells = [("eq5", {"d": d, "order": grid["order"]}) for d in moduli]
    elif name in ("theorem1", "theorem2", "theorem3", "euler_poly"):
        cells = [
            (name, {"d": d, "n": n}) for d in moduli for n in range(grid["max_degree"] + 1)
        ]
        if name == "theorem1" and len(moduli) >= 2:
            cells += [
                ("theorem1_independence", {"n": n, "moduli": tuple(moduli)})
                for n in range(grid["max_degree"] + 1)
            ]
    elif name == "theorem4":
        chars, excluded = select_characters(moduli, grid["primitive_only"])
        cells = [
            ("theorem4", {"chi": _char_ref(chi), "n": n})
            for chi in chars
            for n in range(grid["max_degree"] + 1)
        ]
    elif name == "eq17":
        chars, excluded = select_characters(moduli, grid["primitive_only"])
        cells = [
            ("eq17", {"chi": _char_ref(chi), "n": m, "k": k})
            for chi in chars
            for m in sorted(grid["multiples"])
            for k in range(grid["max_degree"] + 1)
        ]
    elif name in ("symmetry", "theorem5"):
        chars, excluded = select_characters(
            moduli, grid["primitive_only"], grid["include_principal"]
        )
        weights = sorted(grid["weights"])
        points = sorted(parse_rational(str(x)) for x in grid["points"])
        for chi in chars:
            for w1 in weights:
                for w2 in weights:
                    for x in points:
                        if name == "symmetry":
                            cells.append(
                                ("symmetry", {"chi": _char_ref(chi), "w1": w1, "w2": w2,
                                              "x": x, "omega": grid["omega"]})
                            )
                        else:
                            cells.extend(
                                ("theorem5", {"chi": _char_ref(chi), "w1": w1, "w2": w2,
                                              "degree": n, "x": x})
                                for n in range(grid["max_degree"] + 1)
                            )
    elif name == "convergence":
        cells = [
            ("convergence", {"p": p, "n": n, "max_level": grid["max_level"]})
            for p in sorted(grid["primes"])
            for n in range(grid["max_degree"] + 1)
        ]
    elif name == "shift":
        cells = [
            ("shift", {"n_shift": s, "k": k})
            for s in range(1, grid["max_shift"] + 1)
            for k in range(grid["max_degree"] + 1)
        ]
    elif name == "twisted_fermionic":
        chars, excluded = select_characters(moduli, grid["primitive_only"])
        cells = [
            ("twisted_fermionic", {"chi": _char_ref(chi), "p": p, "n": n, "level": level})
            for chi in chars
            for p in sorted(grid["primes"])
            if math.gcd(p, chi.modulus) == 1
            for n in range(grid["max_degree"] + 1)
            for level in range(1, grid["max_level"] + 1)
        ]
    else:
        raise PreconditionError(f"unknown suite {name!r}")

    for item in excluded:
        logger.warning(
            "suite %s: excluding character %d mod %d (%s)",
            name, item["char_index"], item["modulus"], item["reason"],
        )
    return cells, excluded


# ---------------------------------------------------------------------------
# Execution
# ---------------------------------------------------------------------------

def _run_cell(cell: tuple[str, dict]) -> IdentityCertificate:
    key, kwargs = cell
    kwargs = dict(kwargs)
    if "chi" in kwargs:
        ref = kwargs.pop("chi")
        kwargs["chi"] = get_character(ref["modulus"], ref["char_index"])
    return VERIFIERS[key](**kwargs)


def run_suite(name: str, grid: dict | None = None, jobs: int = 1) -> SuiteResult:
    """Run every cell of suite *name*.

    Args:
        name: One of :data:`SUITE_NAMES`.
        grid: Overrides merged into the default grid.
        jobs: Worker processes; ``1`` runs in-process. Results keep the
            canonical cell order either way.

    Raises:
        PreconditionError: if the suite is unknown or the grid is invalid.
    """
    resolved = resolve_grid(name, grid)
    validate_grid(name, resolved)
    cells, excluded = expand_grid(name, resolved)
    logger.info("suite %s: %d cells, jobs=%d", name, len(cells), jobs)

    if jobs > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            certificates = list(pool.map(_run_cell, cells, chunksize=8))
    else:
        certificates = [_run_cell(cell) for cell in cells]

    result = SuiteResult(name, resolved, certificates, excluded)
    counts = result.counts()
    logger.info(
        "suite %s finished: %d pass, %d fail, %d error",
        name, counts["pass"], counts["fail"], counts["error"],
    )
    return result


def run_suites(names: list[str], overrides: dict | None = None, jobs: int = 1) -> list[SuiteResult]:
    """Run several suites; ``"all"`` expands to every suite in registry order."""
    if "all" in names:
        names = list(SUITE_NAMES)
    return [run_suite(name, overrides, jobs) for name in names]
