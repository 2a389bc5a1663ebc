"""
Espectro de velocidades de um ponto de parâmetros e classificação em cenários.

O espectro agrupa todos os estados admissíveis pelo par exato de velocidades
do ciclo limite que atingem. A classificação compara o conjunto de pares com os
dez padrões de cenário, usando as fórmulas fechadas de ReferenceVelocities.
"""
import logging
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from .core_model import SystemParams, SystemState
from .orbit_analysis import LimitCycle, VelocityPair, decompose_basins

logger = logging.getLogger(__name__)

FREE: VelocityPair = (Fraction(1), Fraction(1))
STOPPED: VelocityPair = (Fraction(0), Fraction(0))


class ScenarioLabel(str, Enum):
    S1_FREE_MOTION_ALWAYS = "S1_FreeMotionAlways"
    S2_FREE_OR_V1 = "S2_FreeOrV1"
    S3_V1_OR_V5 = "S3_V1orV5"
    S4_V1_ONLY = "S4_V1only"
    S5_V5_ONLY = "S5_V5only"
    S6_HALF_SPEED_CLUSTER1 = "S6_HalfSpeedCluster1"
    S7_HALF1_FULL2 = "S7_Half1Full2"
    S8_FREE_OR_COLLAPSE = "S8_FreeOrCollapse"
    S9_COLLAPSE_OR_V1 = "S9_CollapseOrV1"
    S10_COLLAPSE_ALWAYS = "S10_CollapseAlways"
    UNKNOWN = "Unknown"


class ReferenceVelocities(NamedTuple):
    """Velocidades de forma fechada de um ponto de parâmetros."""

    v1: Fraction        # n/(l1+l2+2d)
    v5: Fraction        # n/(l1+l2+n-2d)
    v5_alt: Fraction    # n/(n-d+l1+l2)
    slow_pair: VelocityPair  # (n/(2(l1+l2)), n/(l1+l2))
    half_pair: VelocityPair  # (1/2, 1)

    @classmethod
    def of(cls, params: SystemParams) -> "ReferenceVelocities":
        n, l1, l2, d = params.n, params.l1, params.l2, params.d
        soma = l1 + l2
        return cls(
            v1=Fraction(n, soma + 2 * d),
            v5=Fraction(n, soma + n - 2 * d),
            v5_alt=Fraction(n, n - d + soma),
            slow_pair=(Fraction(n, 2 * soma), Fraction(n, soma)),
            half_pair=(Fraction(1, 2), Fraction(1)),
        )


def shared(v: Fraction) -> VelocityPair:
    return (v, v)


def mirror(pairs: Iterable[VelocityPair]) -> FrozenSet[VelocityPair]:
    return frozenset((b, a) for a, b in pairs)


# ---------------------------------------------------------------------------
# Espectro
# ---------------------------------------------------------------------------

class SpectrumEntry(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    velocities: Tuple[Fraction, Fraction]
    representative_initial: SystemState
    basin_size: int
    periods: Tuple[int, ...]


class VelocitySpectrum(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    params: SystemParams
    entries: Tuple[SpectrumEntry, ...]
    cycles: Tuple[LimitCycle, ...] = ()

    @property
    def velocity_set(self) -> FrozenSet[VelocityPair]:
        return frozenset(e.velocities for e in self.entries)

    @property
    def total_states(self) -> int:
        return sum(e.basin_size for e in self.entries)

    def entry_for(self, velocities: VelocityPair) -> Optional[SpectrumEntry]:
        return next((e for e in self.entries if e.velocities == tuple(velocities)), None)


def velocity_spectrum(params: SystemParams) -> VelocitySpectrum:
    return _velocity_spectrum(params)


@lru_cache(maxsize=512)
def _velocity_spectrum(params: SystemParams) -> VelocitySpectrum:
    bacias = decompose_basins(params)
    grupos: Dict[VelocityPair, Dict] = {}
    # cycle_of foi preenchido em ordem de descoberta; a ordem lexicográfica vem dos sucessores
    for estado in bacias.successors:
        ciclo = bacias.cycles[bacias.cycle_of[estado]]
        grupo = grupos.setdefault(ciclo.velocities, {"rep": estado, "tamanho": 0, "periodos": set()})
        grupo["tamanho"] += 1
        grupo["periodos"].add(ciclo.period)

    entradas = tuple(
        SpectrumEntry(
            velocities=par,
            representative_initial=grupo["rep"],
            basin_size=grupo["tamanho"],
            periods=tuple(sorted(grupo["periodos"])),
        )
        for par, grupo in sorted(grupos.items())
    )
    return VelocitySpectrum(params=params, entries=entradas, cycles=tuple(bacias.cycles))


# ---------------------------------------------------------------------------
# Classificação
# ---------------------------------------------------------------------------

class ScenarioClassification(NamedTuple):
    label: ScenarioLabel
    s5_denominator: Optional[str] = None


def scenario_patterns(params: SystemParams) -> List[Tuple[ScenarioLabel, FrozenSet[VelocityPair], Optional[str]]]:
    """Padrões na ordem de prioridade; o primeiro que coincidir define o rótulo."""
    ref = ReferenceVelocities.of(params)
    v1, v5, v5_alt = shared(ref.v1), shared(ref.v5), shared(ref.v5_alt)
    return [
        (ScenarioLabel.S1_FREE_MOTION_ALWAYS, frozenset({FREE}), None),
        (ScenarioLabel.S2_FREE_OR_V1, frozenset({FREE, v1}), None),
        (ScenarioLabel.S3_V1_OR_V5, frozenset({v1, v5}), "n-2d"),
        (ScenarioLabel.S3_V1_OR_V5, frozenset({v1, v5_alt}), "n-d"),
        (ScenarioLabel.S4_V1_ONLY, frozenset({v1}), None),
        (ScenarioLabel.S5_V5_ONLY, frozenset({v5}), "n-2d"),
        (ScenarioLabel.S5_V5_ONLY, frozenset({v5_alt}), "n-d"),
        (ScenarioLabel.S6_HALF_SPEED_CLUSTER1, frozenset({ref.slow_pair}), None),
        (ScenarioLabel.S7_HALF1_FULL2, frozenset({ref.half_pair}), None),
        (ScenarioLabel.S8_FREE_OR_COLLAPSE, frozenset({FREE, STOPPED}), None),
        (ScenarioLabel.S9_COLLAPSE_OR_V1, frozenset({STOPPED, v1}), None),
        (ScenarioLabel.S10_COLLAPSE_ALWAYS, frozenset({STOPPED}), None),
    ]


def normalized_velocity_set(spectrum: VelocitySpectrum) -> FrozenSet[VelocityPair]:
    """Conjunto de pares na orientação l1 <= l2."""
    if spectrum.params.l1 > spectrum.params.l2:
        return mirror(spectrum.velocity_set)
    return spectrum.velocity_set


def classify_spectrum(spectrum: VelocitySpectrum) -> ScenarioClassification:
    params = spectrum.params
    if params.l1 > params.l2:
        params = params.swapped()
    observado = normalized_velocity_set(spectrum)
    for rotulo, padrao, denominador in scenario_patterns(params):
        if observado == padrao:
            return ScenarioClassification(rotulo, denominador)
    logger.info("Espectro sem cenário conhecido em %s: %s", spectrum.params, sorted(observado))
    return ScenarioClassification(ScenarioLabel.UNKNOWN)


def classify_scenario(params: SystemParams) -> ScenarioLabel:
    return classify_spectrum(velocity_spectrum(params)).label
