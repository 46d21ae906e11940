from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, Field, model_validator

Family = Literal["explicit", "uniform", "veronese", "graphic", "transversal"]
RANDOM_FAMILIES = ("graphic", "transversal", "veronese")


class MatroidSpec(BaseModel):
    """Constructor parameters for one ideal; `seed` alone asks for a random draw."""

    family: Family
    n: Optional[int] = Field(default=None, ge=0, le=64)
    d: Optional[int] = Field(default=None, ge=1)
    caps: Optional[List[int]] = None
    vertices: Optional[int] = Field(default=None, ge=1)
    edges: Optional[List[Tuple[int, int]]] = None
    edge_count: Optional[int] = Field(default=None, ge=1)
    sets: Optional[List[List[int]]] = None  # 1-based variable labels
    blocks: Optional[List[int]] = None  # block sizes of a random disjoint transversal
    generators: Optional[List[List[int]]] = None  # exponent rows, explicit family
    seed: Optional[int] = None

    @property
    def is_random(self) -> bool:
        if self.seed is None:
            return False
        if self.family == "graphic":
            return self.edges is None
        if self.family == "transversal":
            return self.sets is None
        if self.family == "veronese":
            return self.caps is None
        return False

    @model_validator(mode="after")
    def _check_parameters(self):
        fam = self.family
        if self.caps is not None:
            if any(c < 1 for c in self.caps):
                raise ValueError("veronese caps must be >= 1")
            if self.n is not None and self.n != len(self.caps):
                raise ValueError(f"{len(self.caps)} caps given for n={self.n}")
        if self.edges is not None:
            seen = set()
            for a, b in self.edges:
                key = frozenset((a, b))
                if key in seen:
                    raise ValueError(f"duplicate edge {a}-{b}")
                seen.add(key)
        if self.sets is not None and any(not s for s in self.sets):
            raise ValueError("transversal sets must be nonempty")

        if self.is_random:
            if fam == "veronese" and self.n is not None and self.d is not None and self.d > self.n:
                raise ValueError("random veronese draw needs d <= n")
            return self
        if fam == "explicit" and (self.n is None or self.generators is None):
            raise ValueError("explicit family needs n and generators")
        if fam == "uniform" and (self.n is None or self.d is None):
            raise ValueError("uniform family needs n and d")
        if fam == "veronese" and (self.d is None or self.caps is None):
            raise ValueError("veronese family needs d and caps (or a seed)")
        if fam == "graphic" and (self.vertices is None or self.edges is None):
            raise ValueError("graphic family needs vertices and edges (or a seed)")
        if fam == "transversal" and self.sets is None:
            raise ValueError("transversal family needs sets (or a seed)")
        return self
