"""
Detecção de ciclos limite e velocidades médias exatas.

A velocidade média do cluster i é v_i = A_i / T, onde T é o período do ciclo
e A_i o número de passos do ciclo em que o cluster avançou.
"""
import logging
from enum import Enum
from fractions import Fraction
from typing import Dict, List, NamedTuple, Tuple

from pydantic import BaseModel, ConfigDict

from ..errors import UnacceptableState
from .core_model import SystemParams, SystemState, check_state, enumerate_acceptable_states
from .dynamics import StepResult, step

logger = logging.getLogger(__name__)

VelocityPair = Tuple[Fraction, Fraction]


class Outcome(str, Enum):
    FREE_MOTION = "FreeMotion"
    COLLAPSE = "Collapse"
    INTERMEDIATE = "Intermediate"


def outcome_of(velocities: VelocityPair) -> Outcome:
    if velocities == (1, 1):
        return Outcome.FREE_MOTION
    if velocities == (0, 0):
        return Outcome.COLLAPSE
    return Outcome.INTERMEDIATE


def velocities_of(moves: Tuple[int, int], period: int) -> VelocityPair:
    return Fraction(moves[0], period), Fraction(moves[1], period)


class OrbitSummary(BaseModel):
    """Resumo da órbita de um estado inicial."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    initial: SystemState
    transient_length: int
    period: int
    moves: Tuple[int, int]
    velocities: Tuple[Fraction, Fraction]
    outcome: Outcome
    cycle_states: Tuple[SystemState, ...]


def analyze_orbit(params: SystemParams, initial: SystemState) -> OrbitSummary:
    """
    Simula até um estado se repetir.

    A tabela de primeira visita dá o transiente (instante da primeira visita do
    estado recorrente) e o período. Termina em no máximo n² + 1 passos.

    Raises:
        UnacceptableState: estado inicial inadmissível
    """
    estado = SystemState(*initial)
    check_state(params, estado)

    primeira_visita: Dict[SystemState, int] = {}
    visitados: List[SystemState] = []
    passos: List[StepResult] = []
    while estado not in primeira_visita:
        primeira_visita[estado] = len(visitados)
        visitados.append(estado)
        resultado = step(params, estado)
        passos.append(resultado)
        estado = resultado.next

    inicio = primeira_visita[estado]
    periodo = len(visitados) - inicio
    janela = passos[inicio:]
    movimentos = (sum(r.moved1 for r in janela), sum(r.moved2 for r in janela))
    velocidades = velocities_of(movimentos, periodo)
    resumo = OrbitSummary(
        initial=SystemState(*initial),
        transient_length=inicio,
        period=periodo,
        moves=movimentos,
        velocities=velocidades,
        outcome=outcome_of(velocidades),
        cycle_states=tuple(visitados[inicio:]),
    )
    logger.debug(
        "Órbita de %s: transiente=%d período=%d v=(%s, %s)",
        initial, inicio, periodo, velocidades[0], velocidades[1],
    )
    return resumo


# ---------------------------------------------------------------------------
# Decomposição em bacias
# ---------------------------------------------------------------------------

class LimitCycle(NamedTuple):
    """Ciclo limite em rotação canônica (a partir do menor estado)."""

    states: Tuple[SystemState, ...]
    moves: Tuple[int, int]

    @property
    def period(self) -> int:
        return len(self.states)

    @property
    def velocities(self) -> VelocityPair:
        return velocities_of(self.moves, self.period)

    @property
    def outcome(self) -> Outcome:
        return outcome_of(self.velocities)


class BasinDecomposition(NamedTuple):
    """Todos os ciclos limite de um ponto de parâmetros e a bacia de cada estado."""

    params: SystemParams
    cycles: List[LimitCycle]
    cycle_of: Dict[SystemState, int]
    successors: Dict[SystemState, StepResult]


def decompose_basins(params: SystemParams) -> BasinDecomposition:
    """
    Percorre todos os estados admissíveis uma única vez.

    A tabela de sucessores é construída uma vez; cada caminho é seguido até um
    estado já resolvido ou até fechar um ciclo novo, e todo o caminho herda o
    índice desse ciclo.
    """
    estados = enumerate_acceptable_states(params)
    sucessores = {estado: step(params, estado) for estado in estados}

    ciclos: List[LimitCycle] = []
    ciclo_de: Dict[SystemState, int] = {}
    for origem in estados:
        if origem in ciclo_de:
            continue
        caminho: List[SystemState] = []
        posicao: Dict[SystemState, int] = {}
        atual = origem
        while atual not in ciclo_de and atual not in posicao:
            posicao[atual] = len(caminho)
            caminho.append(atual)
            atual = sucessores[atual].next
            if atual not in sucessores:
                raise UnacceptableState(f"{caminho[-1]} leva ao estado inadmissível {atual} em {params}")

        if atual in posicao:
            fechamento = caminho[posicao[atual]:]
            indice = len(ciclos)
            ciclos.append(_canonical_cycle(fechamento, sucessores))
            caminho = caminho[: posicao[atual]]
            for estado in fechamento:
                ciclo_de[estado] = indice
        else:
            indice = ciclo_de[atual]
        for estado in caminho:
            ciclo_de[estado] = indice

    logger.debug("%s: %d estados, %d ciclos limite", params, len(estados), len(ciclos))
    return BasinDecomposition(params, ciclos, ciclo_de, sucessores)


def _canonical_cycle(estados: List[SystemState], sucessores: Dict[SystemState, StepResult]) -> LimitCycle:
    k = estados.index(min(estados))
    rotacao = tuple(estados[k:] + estados[:k])
    movimentos = (
        sum(sucessores[s].moved1 for s in rotacao),
        sum(sucessores[s].moved2 for s in rotacao),
    )
    return LimitCycle(rotacao, movimentos)


# ---------------------------------------------------------------------------
# Invariantes de ciclo
# ---------------------------------------------------------------------------

def both_or_neither_move(cycle: LimitCycle) -> bool:
    """Num ciclo limite, ou os dois clusters se movem ou nenhum se move."""
    a1, a2 = cycle.moves
    return (a1 > 0 and a2 > 0) or (a1 == 0 and a2 == 0)


def lemma3_anchor_states(params: SystemParams) -> Tuple[SystemState, ...]:
    n, l1, l2, d = params.n, params.l1, params.l2, params.d
    return (
        SystemState((l1 + d) % n, 0),
        SystemState(0, (l2 + d) % n),
        SystemState(l1 % n, d),
        SystemState(d, l2 % n),
    )


def contains_anchor_state(params: SystemParams, cycle: LimitCycle) -> bool:
    """Ciclos intermediários passam por um dos estados-âncora; os demais passam trivialmente."""
    if cycle.outcome is not Outcome.INTERMEDIATE:
        return True
    conjunto = set(cycle.states)
    return any(ancora in conjunto for ancora in lemma3_anchor_states(params))


def cycle_invariants(params: SystemParams, cycle: LimitCycle) -> Tuple[bool, bool]:
    resultado = (both_or_neither_move(cycle), contains_anchor_state(params, cycle))
    if not all(resultado):
        logger.error("Invariante de ciclo violado em %s: ciclo %s", params, cycle.states[:4])
    return resultado
