"""Cartan matrices read off the reflections' parameter actions."""

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, List, Optional, Tuple

from algebra import DomainError, RatFn, differentiate
from systems import build_system

from .generators import generator, reflections

# c_ij * c_ji -> braid order m_ij; 4 means no relation (infinite order)
BRAID_ORDERS = {0: 2, 1: 3, 2: 4, 3: 6}

# Bonds of the printed Dynkin diagrams, as (i, j, c_ij * c_ji).
DIAGRAMS: Dict[str, FrozenSet[Tuple[int, int, int]]] = {
    "D6": frozenset({(0, 2, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1), (4, 5, 1), (4, 6, 1)}),
    "B5": frozenset({(0, 1, 2), (1, 2, 1), (2, 3, 1), (3, 4, 1), (3, 5, 1)}),
    "D52": frozenset({(0, 1, 2), (1, 2, 1), (2, 3, 1), (3, 4, 2)}),
    "D51": frozenset({(0, 2, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1), (3, 5, 1)}),
    "A1_D7": frozenset({(0, 1, 4)}),
}


@dataclass(frozen=True)
class CartanData:
    system_id: str
    matrix: Tuple[Tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.matrix)

    def product(self, i: int, j: int) -> int:
        return self.matrix[i][j] * self.matrix[j][i]

    def braid_order(self, i: int, j: int) -> Optional[int]:
        """m_ij, or None when the pair generates an infinite dihedral group."""
        if i == j:
            return 1
        return BRAID_ORDERS.get(self.product(i, j))

    @property
    def braid_orders(self) -> Dict[Tuple[int, int], Optional[int]]:
        n = self.rank
        return {(i, j): self.braid_order(i, j) for i in range(n) for j in range(i + 1, n)}

    def bonds(self) -> FrozenSet[Tuple[int, int, int]]:
        n = self.rank
        return frozenset((i, j, self.product(i, j))
                         for i in range(n) for j in range(i + 1, n) if self.product(i, j))

    def is_consistent(self) -> bool:
        """Diagonal 2, off-diagonal entries non-positive and zero in symmetric pairs."""
        n = self.rank
        for i in range(n):
            if self.matrix[i][i] != 2:
                return False
            for j in range(n):
                if i == j:
                    continue
                cij, cji = self.matrix[i][j], self.matrix[j][i]
                if cij > 0 or (cij == 0) != (cji == 0):
                    return False
        return True

    def matches_diagram(self) -> bool:
        return self.bonds() == DIAGRAMS.get(self.system_id, frozenset())


def _entry(image: RatFn, param_j: str, param_i: str) -> int:
    """-(coefficient of a_i in s_i(a_j) - a_j)."""
    coefficient = differentiate(image - RatFn.var(param_j), param_i)
    if coefficient.variables():
        raise DomainError(f"parameter action is not affine: {image}")
    value = coefficient.as_expr()
    return -int(value)


@lru_cache(maxsize=None)
def cartan_data(sys_id: str) -> CartanData:
    system = build_system(sys_id)
    nodes = reflections(sys_id)
    params = system.params
    rows: List[Tuple[int, ...]] = []
    for i, name in enumerate(nodes):
        images = generator(sys_id, name).param_images
        rows.append(tuple(_entry(images[j], params[j], params[i]) for j in range(len(nodes))))
    return CartanData(sys_id, tuple(rows))
