"""
Modelo do sistema de dois contornos: parâmetros, estados, geometria dos nós
e predicados de ocupação.

Cada contorno tem ``n`` células numeradas 0..n-1. O cluster i ocupa as células
{α_i, α_i-1, ..., α_i-l_i+1} (módulo n), onde α_i é a célula da partícula da
frente. O nó k fica entre as células 0 e 1 do contorno k e entre as células
d e d+1 do outro contorno.
"""
import logging
from enum import IntEnum
from typing import FrozenSet, List, NamedTuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..errors import DOutOfRange, LengthOutOfRange, NOutOfRange, UnacceptableState

logger = logging.getLogger(__name__)


class NodeId(IntEnum):
    """Nós comuns aos dois contornos."""

    NODE1 = 1
    NODE2 = 2


def validate_bounds(n: int, l1: int, l2: int, d: int) -> None:
    """
    Valida os limites de (n, l1, l2, d), na ordem n, l1, l2, d.

    Raises:
        NOutOfRange: n < 2
        LengthOutOfRange: l1 ou l2 fora de [1, n-1]
        DOutOfRange: d fora de [1, floor(n/2)]
    """
    if n < 2:
        raise NOutOfRange(f"n deve ser >= 2 (recebido n={n})")
    for nome, comprimento in (("l1", l1), ("l2", l2)):
        if not 1 <= comprimento <= n - 1:
            raise LengthOutOfRange(
                f"{nome} deve estar em [1, {n - 1}] (recebido {nome}={comprimento})"
            )
    if not 1 <= d <= n // 2:
        raise DOutOfRange(f"d deve estar em [1, {n // 2}] (recebido d={d})")


class SystemParams(BaseModel):
    """Quádrupla (n, l1, l2, d) que define a geometria e os clusters."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., description="Número de células por contorno")
    l1: int = Field(..., description="Comprimento do cluster 1 em células")
    l2: int = Field(..., description="Comprimento do cluster 2 em células")
    d: int = Field(..., description="Célula do nó alheio em cada contorno")

    @model_validator(mode="after")
    def _checar_limites(self) -> "SystemParams":
        validate_bounds(self.n, self.l1, self.l2, self.d)
        return self

    def length_of(self, cluster: int) -> int:
        return self.l1 if cluster == 1 else self.l2

    def swapped(self) -> "SystemParams":
        """Troca os rótulos dos clusters (l1 <-> l2)."""
        return SystemParams(n=self.n, l1=self.l2, l2=self.l1, d=self.d)

    def __str__(self) -> str:
        return f"(n={self.n}, l1={self.l1}, l2={self.l2}, d={self.d})"


class SystemState(NamedTuple):
    """Par de células das frentes (α1, α2)."""

    alpha1: int
    alpha2: int

    def front_of(self, cluster: int) -> int:
        return self.alpha1 if cluster == 1 else self.alpha2

    def swapped(self) -> "SystemState":
        return SystemState(self.alpha2, self.alpha1)

    def __str__(self) -> str:
        return f"({self.alpha1},{self.alpha2})"


def make_params(n: int, l1: int, l2: int, d: int) -> SystemParams:
    """
    Constrói parâmetros validados.

    Os erros de domínio são levantados antes da construção do modelo, para
    que o chamador receba NOutOfRange/LengthOutOfRange/DOutOfRange e não o
    ValidationError do pydantic.
    """
    try:
        validate_bounds(n, l1, l2, d)
    except (NOutOfRange, LengthOutOfRange, DOutOfRange) as exc:
        logger.warning("Parâmetros rejeitados: %s", exc)
        raise
    return SystemParams(n=n, l1=l1, l2=l2, d=d)


# ---------------------------------------------------------------------------
# Ocupação de células e nós
# ---------------------------------------------------------------------------

def occupied_cells(params: SystemParams, front: int, length: int) -> FrozenSet[int]:
    """Células {front, front-1, ..., front-length+1} módulo n."""
    n = params.n
    return frozenset((front - k) % n for k in range(length))


def cluster_cells(params: SystemParams, state: SystemState, cluster: int) -> FrozenSet[int]:
    return occupied_cells(params, state.front_of(cluster), params.length_of(cluster))


def occupies_pair(front: int, length: int, cell: int, n: int) -> bool:
    """
    Verdadeiro se as células ``cell`` e ``cell+1`` pertencem ao cluster.

    Equivale a (front - cell - 1) mod n em [0, length-2]; com length = 1 nunca
    ocorre.
    """
    return (front - cell - 1) % n <= length - 2


def node_cell(params: SystemParams, cluster: int, node: NodeId) -> int:
    """Primeira das duas células adjacentes ao nó, no contorno do cluster."""
    return 0 if int(node) == cluster else params.d


def occupies_node(params: SystemParams, state: SystemState, cluster: int, node: NodeId) -> bool:
    return occupies_pair(
        state.front_of(cluster),
        params.length_of(cluster),
        node_cell(params, cluster, node),
        params.n,
    )


def in_range(params: SystemParams, state: SystemState) -> bool:
    return 0 <= state.alpha1 < params.n and 0 <= state.alpha2 < params.n


def is_acceptable(params: SystemParams, state: SystemState) -> bool:
    """Nenhum nó ocupado pelos dois clusters ao mesmo tempo."""
    return not any(
        occupies_node(params, state, 1, node) and occupies_node(params, state, 2, node)
        for node in NodeId
    )


def check_state(params: SystemParams, state: SystemState) -> None:
    """
    Raises:
        UnacceptableState: índice fora de [0, n) ou nó compartilhado
    """
    if not in_range(params, state):
        raise UnacceptableState(f"estado {state} fora de [0, {params.n}) para {params}")
    if not is_acceptable(params, state):
        raise UnacceptableState(f"estado {state} inadmissível para {params}: nó ocupado pelos dois clusters")


def enumerate_acceptable_states(params: SystemParams) -> List[SystemState]:
    """Todos os estados admissíveis em ordem lexicográfica."""
    n, d = params.n, params.d
    # ocupação dos nós (nó 1, nó 2) por posição da frente, calculada uma vez por cluster
    c1 = [(occupies_pair(a, params.l1, 0, n), occupies_pair(a, params.l1, d, n)) for a in range(n)]
    c2 = [(occupies_pair(b, params.l2, d, n), occupies_pair(b, params.l2, 0, n)) for b in range(n)]
    return [
        SystemState(a, b)
        for a in range(n)
        for b in range(n)
        if not ((c1[a][0] and c2[b][0]) or (c1[a][1] and c2[b][1]))
    ]
