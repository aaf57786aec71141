"""Verdict reports and deterministic sample sets.

Every check in this package works on a finite, reproducible sample set
and returns a :class:`PropertyReport`.  A ``fails`` verdict always
carries a concrete witness point; a passing verdict is only ever
"holds on the samples", never a proof.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field


HOLDS = "holds-on-samples"
FAILS = "fails"


@dataclass(frozen=True)
class SampleSpec:
    """Deterministic sampling plan: uniform grid plus seeded random points."""

    grid_n: int = 101
    random_count: int = 1000
    seed: int = 42
    tolerance: float = 1e-9

    # triple checks (EP, associativity) use a coarser grid so the
    # triple count stays at desk scale
    triple_grid_n: int = 21
    triple_random_count: int = 2000

    def __post_init__(self):
        if self.grid_n < 2:
            raise ValueError("grid_n must be >= 2")
        if self.tolerance <= 0:
            raise ValueError("tolerance must be positive")

    def grid(self) -> list[float]:
        n = self.grid_n
        return [i / (n - 1) for i in range(n)]

    def points_1d(self) -> list[float]:
        rng = random.Random(self.seed)
        return self.grid() + [rng.random() for _ in range(self.random_count)]

    def pairs(self) -> list[tuple[float, float]]:
        g = self.grid()
        out = [(x, y) for x in g for y in g]
        rng = random.Random(self.seed)
        out += [(rng.random(), rng.random()) for _ in range(self.random_count)]
        return out

    def triples(self) -> list[tuple[float, float, float]]:
        n = self.triple_grid_n
        g = [i / (n - 1) for i in range(n)]
        out = [(x, y, z) for x in g for y in g for z in g]
        rng = random.Random(self.seed)
        out += [
            (rng.random(), rng.random(), rng.random())
            for _ in range(self.triple_random_count)
        ]
        return out

    def as_dict(self) -> dict:
        return {
            "grid_n": self.grid_n,
            "random_count": self.random_count,
            "seed": self.seed,
            "tolerance": self.tolerance,
        }


@dataclass
class PropertyReport:
    """Outcome of one property check on one sample set."""

    property: str
    verdict: str
    tolerance: float
    sample_spec: dict = field(default_factory=dict)
    witness: dict | None = None
    max_discrepancy: float = 0.0
    details: dict | None = None

    @property
    def holds(self) -> bool:
        return self.verdict == HOLDS

    def as_dict(self) -> dict:
        out = {
            "property": self.property,
            "verdict": self.verdict,
            "witness": self.witness,
            "sample_spec": self.sample_spec,
            "tolerance": self.tolerance,
            "max_discrepancy": self.max_discrepancy,
        }
        if self.details is not None:
            out["details"] = self.details
        return out

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.as_dict(), indent=indent, sort_keys=False)


def passing(prop: str, spec: SampleSpec, max_disc: float = 0.0) -> PropertyReport:
    return PropertyReport(
        property=prop,
        verdict=HOLDS,
        tolerance=spec.tolerance,
        sample_spec=spec.as_dict(),
        max_discrepancy=max_disc,
    )


def failing(
    prop: str, spec: SampleSpec, witness: dict, max_disc: float
) -> PropertyReport:
    return PropertyReport(
        property=prop,
        verdict=FAILS,
        tolerance=spec.tolerance,
        sample_spec=spec.as_dict(),
        witness=witness,
        max_discrepancy=max_disc,
    )
