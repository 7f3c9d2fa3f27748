#!/usr/bin/env python3
"""Morphisms between tensor words in fusion-tree coordinates."""

from dataclasses import dataclass
from typing import Any, Dict, Tuple

import numpy as np

from models.errors import ShapeMismatchError

Word = Tuple[int, ...]
# (x labels, multiplicity indices) of a left-parenthesized splitting tree
Tree = Tuple[Tuple[int, ...], Tuple[int, ...]]


@dataclass(eq=False)
class Morphism:
    """A morphism ``source → target`` stored as one matrix per fusion root.

    ``blocks[c]`` has shape ``(trees(target, c), trees(source, c))``; every root of the
    category is present, possibly as a zero-size block.
    """
    source: Word
    target: Word
    blocks: Dict[int, np.ndarray]

    def __post_init__(self):
        self.source = tuple(self.source)
        self.target = tuple(self.target)

    def _check_parallel(self, other: "Morphism") -> None:
        if self.source != other.source or self.target != other.target:
            raise ShapeMismatchError(
                f"morphisms {self.source}->{self.target} and {other.source}->{other.target} are not parallel"
            )

    def __matmul__(self, other: "Morphism") -> "Morphism":
        """Composition ``self ∘ other``."""
        if other.target != self.source:
            raise ShapeMismatchError(f"cannot compose {other.target} into {self.source}")
        return Morphism(other.source, self.target,
                        {c: self.blocks[c] @ other.blocks[c] for c in self.blocks})

    def __add__(self, other: "Morphism") -> "Morphism":
        self._check_parallel(other)
        return Morphism(self.source, self.target,
                        {c: self.blocks[c] + other.blocks[c] for c in self.blocks})

    def __sub__(self, other: "Morphism") -> "Morphism":
        self._check_parallel(other)
        return Morphism(self.source, self.target,
                        {c: self.blocks[c] - other.blocks[c] for c in self.blocks})

    def __mul__(self, scalar: complex) -> "Morphism":
        return Morphism(self.source, self.target, {c: b * scalar for c, b in self.blocks.items()})

    __rmul__ = __mul__

    def adjoint(self) -> "Morphism":
        return Morphism(self.target, self.source, {c: b.conj().T for c, b in self.blocks.items()})

    @property
    def dag(self) -> "Morphism":
        return self.adjoint()

    def norm(self) -> float:
        return float(np.sqrt(sum(np.sum(np.abs(b) ** 2) for b in self.blocks.values())))

    def max_abs(self) -> float:
        return max((float(np.max(np.abs(b))) for b in self.blocks.values() if b.size), default=0.0)

    def distance(self, other: "Morphism") -> float:
        return (self - other).max_abs()

    def block(self, root: int) -> np.ndarray:
        return self.blocks[root]

    def scalar(self) -> complex:
        """Value of an endomorphism of the unit object."""
        if self.source or self.target:
            raise ShapeMismatchError("not an endomorphism of the unit object")
        return complex(self.blocks[0][0, 0])

    def get_summary_dict(self) -> Dict[str, Any]:
        return {
            "source": list(self.source),
            "target": list(self.target),
            "blocks": {str(c): b.tolist() for c, b in self.blocks.items() if b.size},
        }
