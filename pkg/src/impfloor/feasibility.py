"""Sufficient conditions under which the merge placement and the bipartition
baseline are guaranteed to respect every module's aspect-ratio interval."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .model import Instance, InvalidInstance

MIN_GUARANTEED_LAMBDA = 3.0


@dataclass(frozen=True)
class FeasibilityReport:
    uniform_lambda: Optional[float]
    lambda_ok: bool
    circuit_ratio: float
    circuit_ratio_ok: bool
    worst_ratio: float
    condition3_ok: bool

    @property
    def guaranteed(self) -> bool:
        return self.lambda_ok and self.circuit_ratio_ok and self.condition3_ok


def _sorted_areas(instance: Instance) -> list[float]:
    if len(instance.modules) < 2:
        raise InvalidInstance("feasibility conditions need at least two modules")
    return sorted((m.area for m in instance.modules), reverse=True)


def suffix_ratio_worst(areas: Sequence[float]) -> float:
    """max over i of areas[i] / sum(areas[i+1:]) for a non-increasing sequence."""
    worst = 0.0
    suffix = 0.0
    for i in range(len(areas) - 1, 0, -1):
        suffix += areas[i]
        worst = max(worst, areas[i - 1] / suffix)
    return worst


def neighbour_ratio_worst(areas: Sequence[float]) -> float:
    """max over i of areas[i] / areas[i+1] for a non-increasing sequence."""
    return max(a / b for a, b in zip(areas, areas[1:]))


def _report(instance: Instance, worst: float) -> FeasibilityReport:
    lambdas = {m.bounding_factor for m in instance.modules}
    uniform = next(iter(lambdas)) if len(lambdas) == 1 else None
    # non-uniform factors: judge against the tightest one, but never call it guaranteed
    lam = uniform if uniform is not None else min(lambdas)
    gamma = instance.circuit.aspect_ratio
    return FeasibilityReport(
        uniform_lambda=uniform,
        lambda_ok=uniform is not None and uniform >= MIN_GUARANTEED_LAMBDA,
        circuit_ratio=gamma,
        circuit_ratio_ok=1.0 / lam <= gamma <= lam,
        worst_ratio=worst,
        condition3_ok=worst <= lam - 1.0,
    )


def check_theorem1(instance: Instance) -> FeasibilityReport:
    return _report(instance, suffix_ratio_worst(_sorted_areas(instance)))


def check_zds_condition(instance: Instance) -> FeasibilityReport:
    return _report(instance, neighbour_ratio_worst(_sorted_areas(instance)))


def dominance_gap(instance: Instance) -> tuple[float, float]:
    """(suffix-sum worst ratio, neighbour worst ratio); the first never exceeds the second."""
    areas = _sorted_areas(instance)
    imp_worst = suffix_ratio_worst(areas)
    zds_worst = neighbour_ratio_worst(areas)
    if imp_worst > zds_worst:
        raise AssertionError(f"dominance violated: {imp_worst!r} > {zds_worst!r}")
    return imp_worst, zds_worst
