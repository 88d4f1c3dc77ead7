from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..utils.error_handler import DimensionError, DomainError


@dataclass(frozen=True, eq=False)
class GroupElement:
    """A group element in the defining realization of a model.

    ``group`` names the complex group the matrix lives in (``"SL(2,C)"``,
    ``"SO(4,C)"``, ...); ``level`` is the index of the symmetric-space level
    when the element belongs to a propagated family.
    """
    matrix: np.ndarray
    group: str
    level: Optional[int] = None

    def __post_init__(self):
        matrix = np.asarray(self.matrix, dtype=complex)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise DimensionError("group elements are square matrices",
                                 {"shape": list(matrix.shape)})
        object.__setattr__(self, "matrix", matrix)

    @classmethod
    def identity(cls, size: int, group: str, level: Optional[int] = None) -> "GroupElement":
        return cls(np.eye(size), group, level)

    @property
    def size(self) -> int:
        return self.matrix.shape[0]

    def _same_group(self, other: "GroupElement"):
        if other.group != self.group:
            raise DomainError("elements of different groups",
                              {"left": self.group, "right": other.group})

    def __matmul__(self, other: "GroupElement") -> "GroupElement":
        self._same_group(other)
        return GroupElement(self.matrix @ other.matrix, self.group, self.level)

    def inverse(self) -> "GroupElement":
        return GroupElement(np.linalg.inv(self.matrix), self.group, self.level)

    def distance(self, other: "GroupElement") -> float:
        self._same_group(other)
        return float(np.linalg.norm(self.matrix - other.matrix))

    def is_real(self, tol: float = 1e-12) -> bool:
        return bool(np.max(np.abs(self.matrix.imag), initial=0.0) <= tol)
