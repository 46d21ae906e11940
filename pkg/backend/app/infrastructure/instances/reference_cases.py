"""Embedded reference instances driven by `reproduce`."""

from dataclasses import dataclass
from typing import Dict, Tuple

from app.core.exceptions import InputError
from app.domain.ideals import MonomialIdeal
from app.infrastructure.instances.parser import parse_instance


@dataclass(frozen=True)
class ReferenceCase:
    key: str
    title: str
    n: int
    generators: Tuple[str, ...]

    @property
    def text(self) -> str:
        return f"vars: {self.n}\n" + "\n".join(self.generators) + "\n"

    def ideal(self) -> MonomialIdeal:
        return parse_instance(self.text, f"case:{self.key}").ideal


EX6 = ReferenceCase(
    key="ex6",
    title="matroidal ideal on 6 variables whose square has depth zero",
    n=6,
    generators=(
        "x1*x3", "x1*x4", "x1*x5", "x1*x6",
        "x2*x3", "x2*x4", "x2*x5", "x2*x6",
        "x3*x5", "x3*x6", "x4*x5", "x4*x6",
    ),
)

KM4 = ReferenceCase(
    key="km4",
    title="polymatroidal ideal on 4 variables with dstab 1 and astab 2",
    n=4,
    generators=(
        "x1*x2*x3", "x2^2*x3", "x2*x3^2",
        "x1*x2*x4", "x2^2*x4", "x2*x4^2",
        "x1*x3*x4", "x3^2*x4", "x3*x4^2",
        "x2*x3*x4",
    ),
)

EX8 = ReferenceCase(
    key="ex8",
    title="matroidal ideal on 8 variables with astab 3 and dstab 2",
    n=8,
    generators=(
        "x1*x2*x3*x4", "x1*x2*x3*x5", "x1*x2*x3*x6", "x1*x2*x3*x8",
        "x1*x2*x4*x7", "x1*x2*x5*x7", "x1*x2*x6*x7", "x1*x2*x7*x8",
        "x1*x3*x4*x7", "x1*x3*x4*x8", "x1*x3*x5*x7", "x1*x3*x5*x8",
        "x1*x3*x6*x7", "x1*x3*x6*x8", "x1*x3*x7*x8", "x1*x4*x7*x8",
        "x1*x5*x7*x8", "x1*x6*x7*x8", "x2*x3*x4*x5", "x2*x3*x4*x6",
        "x2*x3*x4*x7", "x2*x3*x5*x6", "x2*x3*x5*x7", "x2*x3*x5*x8",
        "x2*x3*x6*x7", "x2*x3*x6*x8", "x2*x3*x7*x8", "x2*x4*x5*x7",
        "x2*x4*x6*x7", "x2*x5*x6*x7", "x2*x5*x7*x8", "x2*x6*x7*x8",
        "x3*x4*x5*x7", "x3*x4*x5*x8", "x3*x4*x6*x7", "x3*x4*x6*x8",
        "x3*x4*x7*x8", "x3*x5*x6*x7", "x3*x5*x6*x8", "x3*x5*x7*x8",
        "x3*x6*x7*x8", "x4*x5*x7*x8", "x4*x6*x7*x8", "x5*x6*x7*x8",
    ),
)

REFERENCE_CASES: Dict[str, ReferenceCase] = {c.key: c for c in (EX6, KM4, EX8)}


def reference_case(key: str) -> ReferenceCase:
    try:
        return REFERENCE_CASES[key]
    except KeyError:
        raise InputError(f"unknown case '{key}' (choose from {', '.join(sorted(REFERENCE_CASES))})")
