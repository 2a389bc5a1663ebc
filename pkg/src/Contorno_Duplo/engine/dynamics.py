"""
Função de transição síncrona: movimento, bloqueio nos nós e competição.

As duas decisões de bloqueio leem o estado no instante t; os avanços são
aplicados juntos.
"""
import logging
from enum import Enum
from typing import List, NamedTuple, Optional, Tuple

from ..errors import ContornoError, UnacceptableState
from .core_model import SystemParams, SystemState, occupies_pair

logger = logging.getLogger(__name__)


class BlockReason(str, Enum):
    """Motivo pelo qual um cluster não avança."""

    OCCUPIED_OWN_NODE = "OccupiedOwnNode"
    OCCUPIED_FAR_NODE = "OccupiedFarNode"
    LOST_COMPETITION = "LostCompetition"


class StepResult(NamedTuple):
    next: SystemState
    moved1: bool
    moved2: bool
    block_reason1: Optional[BlockReason]
    block_reason2: Optional[BlockReason]


def block_reasons(
    params: SystemParams, state: SystemState
) -> Tuple[Optional[BlockReason], Optional[BlockReason]]:
    """
    Motivos de bloqueio dos dois clusters no estado dado.

    Para o cluster i (o outro é j):
      - OccupiedOwnNode: α_i = 0 e j ocupa o nó i;
      - OccupiedFarNode: α_i = d e j ocupa o nó j;
      - LostCompetition: α_i = 0 e α_j = d (j segue para o arco de n-d células).

    Raises:
        UnacceptableState: estado fora do intervalo ou nó compartilhado
    """
    n, l1, l2, d = params.n, params.l1, params.l2, params.d
    a1, a2 = state
    if not (0 <= a1 < n and 0 <= a2 < n):
        raise UnacceptableState(f"estado {state} fora de [0, {n}) para {params}")

    # nó 1: células (0,1) no contorno 1 e (d,d+1) no contorno 2; nó 2 ao contrário
    c1_no1 = occupies_pair(a1, l1, 0, n)
    c1_no2 = occupies_pair(a1, l1, d, n)
    c2_no2 = occupies_pair(a2, l2, 0, n)
    c2_no1 = occupies_pair(a2, l2, d, n)
    if (c1_no1 and c2_no1) or (c1_no2 and c2_no2):
        raise UnacceptableState(f"estado {state} inadmissível para {params}: nó ocupado pelos dois clusters")

    motivo1 = _reason(a1, a2, d, outro_no_proprio=c2_no1, outro_no_alheio=c2_no2)
    motivo2 = _reason(a2, a1, d, outro_no_proprio=c1_no2, outro_no_alheio=c1_no1)

    if (motivo1 is BlockReason.LOST_COMPETITION and motivo2 is not None) or (
        motivo2 is BlockReason.LOST_COMPETITION and motivo1 is not None
    ):
        raise ContornoError(f"bloqueio mútuo na competição em {state} para {params}")
    return motivo1, motivo2


def _reason(
    proprio: int, outro: int, d: int, *, outro_no_proprio: bool, outro_no_alheio: bool
) -> Optional[BlockReason]:
    # outro_no_proprio: o outro cluster ocupa o nó de índice igual ao deste cluster
    if proprio == 0:
        if outro_no_proprio:
            return BlockReason.OCCUPIED_OWN_NODE
        if outro == d:
            return BlockReason.LOST_COMPETITION
    elif proprio == d and outro_no_alheio:
        return BlockReason.OCCUPIED_FAR_NODE
    return None


def is_blocked(params: SystemParams, state: SystemState, cluster: int) -> Optional[BlockReason]:
    motivos = block_reasons(params, state)
    return motivos[0] if cluster == 1 else motivos[1]


def step(params: SystemParams, state: SystemState) -> StepResult:
    motivo1, motivo2 = block_reasons(params, state)
    n = params.n
    a1, a2 = state
    proximo = SystemState(
        a1 if motivo1 is not None else (a1 + 1) % n,
        a2 if motivo2 is not None else (a2 + 1) % n,
    )
    return StepResult(proximo, motivo1 is None, motivo2 is None, motivo1, motivo2)


def trajectory(params: SystemParams, initial: SystemState, horizon: int) -> List[SystemState]:
    """[s0, s1, ..., s_horizon] com s0 = initial."""
    if horizon < 0:
        raise ValueError(f"horizonte deve ser >= 0 (recebido {horizon})")
    estado = SystemState(*initial)
    if horizon == 0:
        # a validação do estado fica a cargo de step nos demais casos
        block_reasons(params, estado)
    estados = [estado]
    for _ in range(horizon):
        estado = step(params, estado).next
        estados.append(estado)
    logger.debug("Trajetória de %d passos a partir de %s", horizon, initial)
    return estados
