"""
Monomials and monomial primes.

Variables are indexed 0..n-1 internally and displayed as x1..xn.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

from app.core.exceptions import DimensionMismatchError, InputError

DEFAULT_EXPONENT_LIMIT = 2**31 - 1


@dataclass(frozen=True)
class Monomial:
    """x^a for a nonnegative exponent vector a."""

    exps: Tuple[int, ...]

    def __post_init__(self):
        exps = tuple(self.exps)
        for e in exps:
            if not isinstance(e, int) or isinstance(e, bool):
                raise InputError(f"exponents must be integers, got {e!r}")
            if e < 0:
                raise InputError(f"exponents must be nonnegative, got {e}")
            if e > DEFAULT_EXPONENT_LIMIT:
                raise InputError(f"exponent {e} overflows the machine-width limit")
        object.__setattr__(self, "exps", exps)

    @classmethod
    def _make(cls, exps: Tuple[int, ...]) -> "Monomial":
        # Skips validation; callers guarantee a tuple of nonnegative ints.
        m = object.__new__(cls)
        object.__setattr__(m, "exps", exps)
        return m

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return cls._make((0,) * n)

    @classmethod
    def variable(cls, i: int, n: int) -> "Monomial":
        if not 0 <= i < n:
            raise InputError(f"variable index {i + 1} outside 1..{n}")
        return cls._make(tuple(1 if j == i else 0 for j in range(n)))

    @classmethod
    def from_support(cls, support: Iterable[int], n: int) -> "Monomial":
        """Square-free product of the given variables."""
        s = set(support)
        return cls._make(tuple(1 if j in s else 0 for j in range(n)))

    # ── basic data ─────────────────────────────────────────────────────

    @property
    def n(self) -> int:
        return len(self.exps)

    @property
    def degree(self) -> int:
        return sum(self.exps)

    def deg(self, i: int) -> int:
        return self.exps[i]

    @property
    def support(self) -> frozenset:
        return frozenset(i for i, e in enumerate(self.exps) if e)

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exps)

    @property
    def is_one(self) -> bool:
        return not any(self.exps)

    @property
    def sort_key(self) -> Tuple:
        # graded lexicographic, x1 > x2 > ... ; smaller degree first
        return (sum(self.exps), tuple(-e for e in self.exps))

    # ── arithmetic ─────────────────────────────────────────────────────

    def _check(self, other: "Monomial") -> None:
        if len(other.exps) != len(self.exps):
            raise DimensionMismatchError(len(self.exps), len(other.exps))

    def divides(self, other: "Monomial") -> bool:
        self._check(other)
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def __mul__(self, other: "Monomial") -> "Monomial":
        self._check(other)
        exps = tuple(a + b for a, b in zip(self.exps, other.exps))
        if exps and max(exps) > DEFAULT_EXPONENT_LIMIT:
            raise InputError("exponent overflow in monomial product")
        return Monomial._make(exps)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        """Exact quotient; other must divide self."""
        self._check(other)
        exps = tuple(a - b for a, b in zip(self.exps, other.exps))
        if any(e < 0 for e in exps):
            raise InputError(f"{other} does not divide {self}")
        return Monomial._make(exps)

    def lcm(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial._make(tuple(max(a, b) for a, b in zip(self.exps, other.exps)))

    def gcd(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial._make(tuple(min(a, b) for a, b in zip(self.exps, other.exps)))

    def colon(self, other: "Monomial") -> "Monomial":
        """self / gcd(self, other)."""
        self._check(other)
        return Monomial._make(tuple(a - b if a > b else 0 for a, b in zip(self.exps, other.exps)))

    def __pow__(self, k: int) -> "Monomial":
        if k < 0:
            raise InputError("negative monomial power")
        if self.exps and max(self.exps) * k > DEFAULT_EXPONENT_LIMIT:
            raise InputError("exponent overflow in monomial power")
        return Monomial._make(tuple(e * k for e in self.exps))

    def restrict_to(self, variables: Sequence[int]) -> "Monomial":
        """Keep only the listed coordinates, in the given order."""
        return Monomial._make(tuple(self.exps[i] for i in variables))

    def embed(self, variables: Sequence[int], n: int) -> "Monomial":
        """Inverse of restrict_to: place coordinates at the listed positions of an n-vector."""
        out = [0] * n
        for e, i in zip(self.exps, variables):
            out[i] = e
        return Monomial._make(tuple(out))

    # ── display ────────────────────────────────────────────────────────

    def to_string(self, names: Optional[Sequence[str]] = None) -> str:
        parts = []
        for i, e in enumerate(self.exps):
            if not e:
                continue
            name = names[i] if names else f"x{i + 1}"
            parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"Monomial({self.to_string()})"


@dataclass(frozen=True)
class PrimeSupport:
    """The monomial prime (x_i : i in vars), vars 0-based."""

    vars: frozenset

    def __post_init__(self):
        v = frozenset(self.vars)
        if any((not isinstance(i, int)) or i < 0 for i in v):
            raise InputError("prime support must contain nonnegative variable indices")
        object.__setattr__(self, "vars", v)

    @classmethod
    def maximal(cls, n: int) -> "PrimeSupport":
        return cls(frozenset(range(n)))

    @classmethod
    def from_labels(cls, labels: Iterable[int]) -> "PrimeSupport":
        """Build from 1-based variable labels."""
        labels = list(labels)
        if any(i < 1 for i in labels):
            raise InputError("variable labels are 1-based")
        return cls(frozenset(i - 1 for i in labels))

    def check(self, n: int) -> None:
        if any(i >= n for i in self.vars):
            raise InputError(f"prime {self} uses variables outside x1..x{n}")

    @property
    def size(self) -> int:
        return len(self.vars)

    @property
    def sorted_vars(self) -> Tuple[int, ...]:
        return tuple(sorted(self.vars))

    @property
    def labels(self) -> list:
        """1-based sorted variable list, the report form."""
        return [i + 1 for i in sorted(self.vars)]

    @property
    def sort_key(self) -> Tuple:
        return (len(self.vars), tuple(sorted(self.vars)))

    def is_maximal(self, n: int) -> bool:
        return self.vars == frozenset(range(n))

    def __str__(self) -> str:
        return "(" + ",".join(f"x{i + 1}" for i in sorted(self.vars)) + ")"

    def __repr__(self) -> str:
        return f"PrimeSupport{self}"


def check_length(exps: Sequence[int], n: int) -> None:
    if len(exps) != n:
        raise DimensionMismatchError(n, len(exps))


def sort_monomials(monomials: Iterable[Monomial]) -> Tuple[Monomial, ...]:
    return tuple(sorted(monomials, key=lambda m: m.sort_key))


def sort_primes(primes: Iterable[PrimeSupport]) -> Tuple[PrimeSupport, ...]:
    return tuple(sorted(primes, key=lambda p: p.sort_key))
