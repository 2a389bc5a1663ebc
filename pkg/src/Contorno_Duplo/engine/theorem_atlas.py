"""
Atlas de lemas e teoremas: regiões de hipótese, previsões e verificação
contra o espectro empírico.

As hipóteses são avaliadas na orientação l1 <= l2. Resultados cujo enunciado
é contraditório ou diverge do cabeçalho da seção são marcados como
internamente inconsistentes; cada leitura alternativa é registrada como
variante e conferida com os dados, mas o veredito desses resultados é sempre
Inconclusive.
"""
import logging
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, FrozenSet, List, NamedTuple, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from ..errors import UnacceptableState
from .core_model import SystemParams, SystemState, make_params
from .dynamics import step
from .orbit_analysis import Outcome, both_or_neither_move, contains_anchor_state, decompose_basins
from .spectrum_classifier import (
    FREE,
    STOPPED,
    ReferenceVelocities,
    ScenarioLabel,
    VelocityPair,
    VelocitySpectrum,
    classify_spectrum,
    normalized_velocity_set,
    shared,
    velocity_spectrum,
)

logger = logging.getLogger(__name__)


class ResultId(str, Enum):
    L1 = "L1"
    L2 = "L2"
    L3 = "L3"
    L4 = "L4"
    T1 = "T1"
    T2 = "T2"
    T3 = "T3"
    T4 = "T4"
    T5 = "T5"
    T6 = "T6"
    T7 = "T7"
    T8 = "T8"
    T9 = "T9"
    T10 = "T10"
    T11 = "T11"
    T12 = "T12"
    T13 = "T13"
    T14 = "T14"
    T15 = "T15"
    T16 = "T16"
    T17 = "T17"
    T18 = "T18"
    T19 = "T19"
    T20 = "T20"
    T21 = "T21"
    T22 = "T22"
    T23 = "T23"
    T24 = "T24"
    T25 = "T25"


class CycleCheck(str, Enum):
    BOTH_OR_NEITHER = "both_or_neither"
    ANCHOR_STATES = "anchor_states"


class ExpectedPattern(BaseModel):
    """
    Padrão esperado para o espectro.

    ``velocities`` exige igualdade exata do conjunto de pares; ``required`` e
    ``forbidden`` exigem presença/ausência de pares; ``cycle_check`` e
    ``fixed_point`` exigem propriedades dos ciclos.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    description: str
    velocities: Optional[FrozenSet[Tuple[Fraction, Fraction]]] = None
    required: FrozenSet[Tuple[Fraction, Fraction]] = frozenset()
    forbidden: FrozenSet[Tuple[Fraction, Fraction]] = frozenset()
    cycle_check: Optional[CycleCheck] = None
    fixed_point: Optional[SystemState] = None


class VariantReading(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    hypotheses_hold: bool
    predicted: Optional[ExpectedPattern] = None


class TheoremPrediction(BaseModel):
    model_config = ConfigDict(frozen=True)

    id: ResultId
    hypotheses_hold: bool
    internally_consistent: bool
    predicted: Optional[ExpectedPattern] = None
    variants: Tuple[VariantReading, ...] = ()
    notes: str = ""


# ---------------------------------------------------------------------------
# Tabela de resultados
# ---------------------------------------------------------------------------

Predicate = Callable[[SystemParams], bool]
PatternFactory = Callable[[SystemParams, ReferenceVelocities], ExpectedPattern]


class _Reading(NamedTuple):
    name: str
    holds: Predicate
    pattern: PatternFactory


class _Result(NamedTuple):
    id: ResultId
    holds: Predicate
    pattern: PatternFactory
    consistent: bool = True
    notes: str = ""
    variants: Tuple[_Reading, ...] = ()


def _exact(description: str, *pairs: Callable[[ReferenceVelocities], VelocityPair]) -> PatternFactory:
    def fabrica(params: SystemParams, ref: ReferenceVelocities) -> ExpectedPattern:
        return ExpectedPattern(description=description, velocities=frozenset(p(ref) for p in pairs))
    return fabrica


def _free(ref: ReferenceVelocities) -> VelocityPair:
    return FREE


def _stopped(ref: ReferenceVelocities) -> VelocityPair:
    return STOPPED


def _v1(ref: ReferenceVelocities) -> VelocityPair:
    return shared(ref.v1)


def _v5(ref: ReferenceVelocities) -> VelocityPair:
    return shared(ref.v5)


def _v5_alt(ref: ReferenceVelocities) -> VelocityPair:
    return shared(ref.v5_alt)


def _slow(ref: ReferenceVelocities) -> VelocityPair:
    return ref.slow_pair


def _half(ref: ReferenceVelocities) -> VelocityPair:
    return ref.half_pair


LIVRE = _exact("movimento livre a partir de qualquer estado", _free)
LIVRE_OU_V1 = _exact("movimento livre ou v = n/(l1+l2+2d)", _free, _v1)
LIVRE_OU_V5_ALT = _exact("movimento livre ou v = n/(n-d+l1+l2)", _free, _v5_alt)
V1_OU_V5 = _exact("v = n/(l1+l2+2d) ou v = n/(l1+l2+n-2d)", _v1, _v5)
SO_V1 = _exact("ciclo único com v = n/(l1+l2+2d)", _v1)
SO_V5 = _exact("ciclo único com v = n/(l1+l2+n-2d)", _v5)
LENTO = _exact("v1 = n/(2(l1+l2)), v2 = n/(l1+l2)", _slow)
MEIO = _exact("v1 = 1/2, v2 = 1", _half)
LIVRE_OU_COLAPSO = _exact("movimento livre ou colapso", _free, _stopped)
COLAPSO_OU_V1 = _exact("colapso ou v = n/(l1+l2+2d)", _stopped, _v1)
COLAPSO = _exact("colapso a partir de qualquer estado", _stopped)


def _m(p: SystemParams) -> int:
    return p.n - 2 * p.d


def _lemma1(params: SystemParams, ref: ReferenceVelocities) -> ExpectedPattern:
    return ExpectedPattern(description="sem movimento livre quando l1+l2 > n", forbidden=frozenset({FREE}))


def _lemma2(params: SystemParams, ref: ReferenceVelocities) -> ExpectedPattern:
    return ExpectedPattern(
        description="em todo ciclo, A1 > 0 e A2 > 0, ou A1 = A2 = 0",
        cycle_check=CycleCheck.BOTH_OR_NEITHER,
    )


def _lemma3(params: SystemParams, ref: ReferenceVelocities) -> ExpectedPattern:
    return ExpectedPattern(
        description="todo ciclo intermediário passa por (l1+d,0), (0,l2+d), (l1,d) ou (d,l2)",
        cycle_check=CycleCheck.ANCHOR_STATES,
    )


def _lemma4(params: SystemParams, ref: ReferenceVelocities) -> ExpectedPattern:
    if params.l1 > params.d and params.l2 > params.d:
        return ExpectedPattern(
            description="existe ponto fixo e (d,d) é ponto fixo",
            required=frozenset({STOPPED}),
            fixed_point=SystemState(params.d, params.d),
        )
    return ExpectedPattern(description="não existe ponto fixo", forbidden=frozenset({STOPPED}))


_RESULTADOS: Tuple[_Result, ...] = (
    _Result(ResultId.L1, lambda p: p.l1 + p.l2 > p.n, _lemma1),
    _Result(ResultId.L2, lambda p: True, _lemma2),
    _Result(ResultId.L3, lambda p: True, _lemma3),
    _Result(ResultId.L4, lambda p: True, _lemma4),
    _Result(ResultId.T1, lambda p: p.l2 <= p.d and p.l1 + p.l2 <= _m(p), LIVRE),
    _Result(ResultId.T2, lambda p: p.l2 <= p.d and p.l2 <= _m(p) and p.l1 + p.l2 > _m(p), LIVRE_OU_V1),
    _Result(ResultId.T3, lambda p: p.l2 <= p.d and p.l1 <= _m(p) and p.l2 > _m(p), LIVRE),
    _Result(ResultId.T4, lambda p: p.l2 <= p.d and p.l1 > _m(p), LIVRE),
    _Result(
        ResultId.T5,
        lambda p: p.l1 <= p.d and p.l2 > p.d and p.l1 + p.l2 <= 2 * p.d,
        LIVRE,
        consistent=False,
        notes="mesma região de T6 com conclusão diferente",
        variants=(
            _Reading("enunciado", lambda p: p.l1 <= p.d and p.l2 > p.d and p.l1 + p.l2 <= 2 * p.d, LIVRE),
        ),
    ),
    _Result(
        ResultId.T6,
        lambda p: p.l1 <= p.d and p.d < p.l2 < 2 * p.d and p.l1 + p.l2 <= 2 * p.d,
        LIVRE_OU_V5_ALT,
        consistent=False,
        notes="mesma região de T5 com conclusão diferente",
        variants=(
            _Reading(
                "enunciado",
                lambda p: p.l1 <= p.d and p.d < p.l2 < 2 * p.d and p.l1 + p.l2 <= 2 * p.d,
                LIVRE_OU_V5_ALT,
            ),
            _Reading(
                "somente movimento livre",
                lambda p: p.l1 <= p.d and p.d < p.l2 < 2 * p.d and p.l1 + p.l2 <= 2 * p.d,
                LIVRE,
            ),
        ),
    ),
    _Result(
        ResultId.T7,
        lambda p: p.l1 <= p.d and p.l2 >= 2 * p.d and p.l1 + p.l2 <= 2 * p.d,
        LIVRE,
        consistent=False,
        notes="l2 >= 2d e l1+l2 <= 2d exigem l1 <= 0: hipóteses vazias",
        variants=(
            _Reading("soma até n-2d", lambda p: p.l1 <= p.d and p.l2 >= 2 * p.d and p.l1 + p.l2 <= _m(p), LIVRE),
        ),
    ),
    _Result(
        ResultId.T8,
        lambda p: p.l1 <= p.d and p.d < p.l2 < 2 * p.d and p.l2 <= _m(p) and p.l1 + p.l2 > _m(p),
        V1_OU_V5,
        notes="com n/4 < d < n/3 há pontos da região com movimento livre no lugar de v = n/(l1+l2+n-2d)",
    ),
    _Result(
        ResultId.T9,
        lambda p: p.l1 <= p.d and 2 * p.d <= p.l2 <= 2 * p.n - p.d and p.l1 + p.l2 > _m(p),
        SO_V1,
        consistent=False,
        notes="enunciado usa 2d <= l2 <= 2n-d; cabeçalho usa 2d < l2 <= n-2d",
        variants=(
            _Reading(
                "enunciado",
                lambda p: p.l1 <= p.d and 2 * p.d <= p.l2 <= 2 * p.n - p.d and p.l1 + p.l2 > _m(p),
                SO_V1,
            ),
            _Reading(
                "cabeçalho",
                lambda p: p.l1 <= p.d and 2 * p.d < p.l2 <= _m(p) and p.l1 + p.l2 > _m(p),
                SO_V1,
            ),
        ),
    ),
    _Result(
        ResultId.T10,
        lambda p: p.l1 <= p.d and p.l1 <= _m(p) and _m(p) < p.l2 <= p.n - p.d and p.l1 + p.l2 <= 2 * p.d,
        LIVRE,
    ),
    _Result(
        ResultId.T11,
        lambda p: (
            p.l1 <= p.d and p.l1 <= _m(p) and p.d < p.l2 < 2 * p.d
            and _m(p) < p.l2 <= p.n - p.d and p.l1 + p.l2 > 2 * p.d
        ),
        SO_V5,
        consistent=False,
        notes="conclusão fala em ciclo único; cabeçalho fala em dois valores possíveis",
        variants=(
            _Reading(
                "ciclo único",
                lambda p: (
                    p.l1 <= p.d and p.l1 <= _m(p) and p.d < p.l2 < 2 * p.d
                    and _m(p) < p.l2 <= p.n - p.d and p.l1 + p.l2 > 2 * p.d
                ),
                SO_V5,
            ),
            _Reading(
                "dois valores",
                lambda p: (
                    p.l1 <= p.d and p.l1 <= _m(p) and p.d < p.l2 < 2 * p.d
                    and _m(p) < p.l2 <= p.n - p.d and p.l1 + p.l2 > 2 * p.d
                ),
                V1_OU_V5,
            ),
        ),
    ),
    _Result(
        ResultId.T12,
        lambda p: (
            p.l1 <= p.d and p.l1 <= _m(p) and p.l2 > p.n - p.d
            and p.d < p.l2 < 2 * p.d and p.l1 + p.l2 <= 2 * p.d
        ),
        LIVRE,
    ),
    _Result(
        ResultId.T13,
        lambda p: (
            p.l1 <= p.d and p.l1 <= _m(p) and p.l2 > p.n - p.d
            and p.d < p.l2 < 2 * p.d and p.l1 + p.l2 > 2 * p.d
        ),
        LIVRE,
        notes="cabeçalho acrescenta l1+l2 <= n",
    ),
    _Result(
        ResultId.T14,
        lambda p: p.l1 <= p.d and p.l1 <= _m(p) and p.l2 > p.n - p.d and p.l1 + p.l2 > p.n,
        LENTO,
        notes="o texto fala em duas voltas do cluster 1; valem as fórmulas",
    ),
    _Result(
        ResultId.T15,
        lambda p: p.l1 <= p.d and _m(p) < p.l1 < p.n - p.d and p.l2 > p.n - p.d and p.l1 + p.l2 > p.n,
        SO_V5,
        notes="cabeçalho usa l1 <= n-d",
    ),
    _Result(
        ResultId.T16,
        lambda p: (
            p.l1 <= p.d and p.l1 <= _m(p) and p.l2 > p.n - p.d
            and p.l2 >= 2 * p.d and p.l1 + p.l2 <= p.n
        ),
        MEIO,
        consistent=False,
        notes="enunciado usa l2 > n-d; cabeçalho usa n-2d < l2 <= n-d",
        variants=(
            _Reading(
                "enunciado",
                lambda p: (
                    p.l1 <= p.d and p.l1 <= _m(p) and p.l2 > p.n - p.d
                    and p.l2 >= 2 * p.d and p.l1 + p.l2 <= p.n
                ),
                MEIO,
            ),
            _Reading(
                "cabeçalho",
                lambda p: (
                    p.l1 <= p.d and p.l1 <= _m(p) and _m(p) < p.l2 <= p.n - p.d
                    and p.l2 >= 2 * p.d and p.l1 + p.l2 <= p.n
                ),
                MEIO,
            ),
        ),
    ),
    _Result(
        ResultId.T17,
        lambda p: p.d < p.l1 < 2 * p.d and p.d < p.l2 < 2 * p.d and p.l1 + p.l2 <= _m(p),
        LIVRE_OU_COLAPSO,
    ),
    _Result(
        ResultId.T18,
        lambda p: p.d < p.l1 <= p.d and p.l2 >= 2 * p.d and p.l1 + p.l2 <= _m(p),
        LIVRE_OU_COLAPSO,
        consistent=False,
        notes="d < l1 <= d é vazio; cabeçalho usa d < l1 < 2d",
        variants=(
            _Reading(
                "cabeçalho",
                lambda p: p.d < p.l1 < 2 * p.d and p.l2 >= 2 * p.d and p.l1 + p.l2 <= _m(p),
                LIVRE_OU_COLAPSO,
            ),
        ),
    ),
    _Result(
        ResultId.T19,
        lambda p: p.l2 >= 2 * p.d and p.l1 + p.l2 <= _m(p),
        LIVRE_OU_COLAPSO,
        consistent=False,
        notes="enunciado admite l1 <= d, onde não há colapso; cabeçalho exige l1 >= 2d",
        variants=(
            _Reading("enunciado", lambda p: p.l2 >= 2 * p.d and p.l1 + p.l2 <= _m(p), LIVRE_OU_COLAPSO),
            _Reading(
                "cabeçalho",
                lambda p: p.l1 >= 2 * p.d and p.l2 >= 2 * p.d and p.l1 + p.l2 <= _m(p),
                LIVRE_OU_COLAPSO,
            ),
        ),
    ),
    _Result(
        ResultId.T20,
        lambda p: p.l1 >= 2 * p.d and p.l2 <= _m(p) and _m(p) < p.l1 + p.l2 <= p.n,
        COLAPSO_OU_V1,
    ),
    _Result(ResultId.T21, lambda p: p.l1 >= 2 * p.d and p.l2 <= _m(p) and p.l1 + p.l2 > p.n, COLAPSO_OU_V1),
    _Result(
        ResultId.T22,
        lambda p: p.l1 >= 2 * p.d and p.l1 <= _m(p) and _m(p) < p.l2 <= p.n - p.d,
        COLAPSO,
    ),
    _Result(
        ResultId.T23,
        lambda p: _m(p) < p.l1 <= p.l2 <= p.n - p.d,
        COLAPSO,
        consistent=False,
        notes="enunciado admite l1 <= d, onde não há ponto fixo; os resultados de colapso supõem l1 > d",
        variants=(
            _Reading("enunciado", lambda p: _m(p) < p.l1 <= p.l2 <= p.n - p.d, COLAPSO),
            _Reading("com l1 > d", lambda p: p.l1 > p.d and _m(p) < p.l1 <= p.l2 <= p.n - p.d, COLAPSO),
        ),
    ),
    _Result(
        ResultId.T24,
        lambda p: _m(p) < p.l1 <= p.n - p.d and p.l2 > p.n - p.d,
        COLAPSO,
        consistent=False,
        notes="enunciado admite l1 <= d, onde não há ponto fixo; os resultados de colapso supõem l1 > d",
        variants=(
            _Reading("enunciado", lambda p: _m(p) < p.l1 <= p.n - p.d and p.l2 > p.n - p.d, COLAPSO),
            _Reading(
                "com l1 > d",
                lambda p: p.l1 > p.d and _m(p) < p.l1 <= p.n - p.d and p.l2 > p.n - p.d,
                COLAPSO,
            ),
        ),
    ),
    _Result(ResultId.T25, lambda p: p.l1 > p.n - p.d and p.l2 > p.n - p.d, COLAPSO),
)


def _oriented(params: SystemParams) -> SystemParams:
    return params.swapped() if params.l1 > params.l2 else params


def applicable_results(params: SystemParams) -> List[TheoremPrediction]:
    """
    Avalia as hipóteses de L1..L4 e T1..T25 (na orientação l1 <= l2).

    Todos os 29 resultados são devolvidos; ``hypotheses_hold`` indica quais se
    aplicam. A previsão só é preenchida para resultados aplicáveis e
    internamente consistentes.
    """
    p = _oriented(params)
    ref = ReferenceVelocities.of(p)
    previsoes = []
    for resultado in _RESULTADOS:
        vale = bool(resultado.holds(p))
        variantes = tuple(
            VariantReading(
                name=leitura.name,
                hypotheses_hold=bool(leitura.holds(p)),
                predicted=leitura.pattern(p, ref) if leitura.holds(p) else None,
            )
            for leitura in resultado.variants
        )
        previsoes.append(
            TheoremPrediction(
                id=resultado.id,
                hypotheses_hold=vale,
                internally_consistent=resultado.consistent,
                predicted=resultado.pattern(p, ref) if vale and resultado.consistent else None,
                variants=variantes,
                notes=resultado.notes,
            )
        )
    return previsoes


# ---------------------------------------------------------------------------
# Verificação
# ---------------------------------------------------------------------------

class Verdict(str, Enum):
    MATCH = "Match"
    MISMATCH = "Mismatch"
    NOT_APPLICABLE = "NotApplicable"
    INCONCLUSIVE = "Inconclusive"


class ReportEntry(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    prediction: TheoremPrediction
    empirical_scenario: ScenarioLabel
    verdict: Verdict
    empirical_velocities: Tuple[Tuple[Fraction, Fraction], ...] = ()
    variant_agreement: Dict[str, bool] = Field(default_factory=dict)


class VerificationReport(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    params: SystemParams
    scenario: ScenarioLabel
    s5_denominator: Optional[str] = None
    entries: Tuple[ReportEntry, ...]

    def entry(self, result_id: ResultId) -> ReportEntry:
        return next(e for e in self.entries if e.prediction.id == result_id)

    def with_verdict(self, verdict: Verdict) -> List[ResultId]:
        return [e.prediction.id for e in self.entries if e.verdict is verdict]


def pattern_holds(pattern: ExpectedPattern, spectrum: VelocitySpectrum) -> bool:
    """Confere um padrão com o espectro (pares na orientação l1 <= l2)."""
    observado = normalized_velocity_set(spectrum)
    if pattern.velocities is not None and observado != pattern.velocities:
        return False
    if not pattern.required <= observado or pattern.forbidden & observado:
        return False
    if pattern.cycle_check is CycleCheck.BOTH_OR_NEITHER:
        if not all(both_or_neither_move(c) for c in spectrum.cycles):
            return False
    elif pattern.cycle_check is CycleCheck.ANCHOR_STATES:
        if not all(contains_anchor_state(spectrum.params, c) for c in spectrum.cycles):
            return False
    if pattern.fixed_point is not None:
        # (d,d) é invariante pela troca de rótulos
        if step(spectrum.params, pattern.fixed_point).next != pattern.fixed_point:
            return False
    return True


def verify(params: SystemParams) -> VerificationReport:
    """Compara cada previsão aplicável com o espectro empírico."""
    espectro = velocity_spectrum(params)
    classificacao = classify_spectrum(espectro)
    empiricos = tuple(sorted(normalized_velocity_set(espectro)))

    entradas = []
    for previsao in applicable_results(params):
        concordancia = {
            v.name: pattern_holds(v.predicted, espectro)
            for v in previsao.variants
            if v.hypotheses_hold and v.predicted is not None
        }
        if not previsao.internally_consistent:
            aplicavel = previsao.hypotheses_hold or any(v.hypotheses_hold for v in previsao.variants)
            veredito = Verdict.INCONCLUSIVE if aplicavel else Verdict.NOT_APPLICABLE
        elif not previsao.hypotheses_hold:
            veredito = Verdict.NOT_APPLICABLE
        elif pattern_holds(previsao.predicted, espectro):
            veredito = Verdict.MATCH
        else:
            veredito = Verdict.MISMATCH
            logger.warning(
                "%s diverge dos dados em %s: previsto '%s', observado %s",
                previsao.id.value, params, previsao.predicted.description,
                [f"({a}, {b})" for a, b in empiricos],
            )
        entradas.append(
            ReportEntry(
                prediction=previsao,
                empirical_scenario=classificacao.label,
                verdict=veredito,
                empirical_velocities=empiricos,
                variant_agreement=concordancia,
            )
        )
    return VerificationReport(
        params=params,
        scenario=classificacao.label,
        s5_denominator=classificacao.s5_denominator,
        entries=tuple(entradas),
    )


# ---------------------------------------------------------------------------
# Bateria exaustiva de lemas
# ---------------------------------------------------------------------------

class LemmaViolation(NamedTuple):
    params: SystemParams
    lemma: str
    detail: str


class LemmaSuiteReport(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n_min: int
    n_max: int
    points_checked: int
    violations: Tuple[LemmaViolation, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.violations


def check_lemmas(params: SystemParams) -> List[LemmaViolation]:
    """
    Confere, num ponto de parâmetros, a preservação da admissibilidade, L1..L4
    e a simetria de troca de rótulos no ciclo de (d,d).
    """
    try:
        bacias = decompose_basins(params)
    except UnacceptableState as exc:
        return [LemmaViolation(params, "admissibilidade", str(exc))]

    violacoes: List[LemmaViolation] = []
    n, l1, l2, d = params.n, params.l1, params.l2, params.d
    if l1 + l2 > n and any(c.outcome is Outcome.FREE_MOTION for c in bacias.cycles):
        violacoes.append(LemmaViolation(params, "L1", "movimento livre com l1+l2 > n"))
    for ciclo in bacias.cycles:
        if not both_or_neither_move(ciclo):
            violacoes.append(LemmaViolation(params, "L2", f"ciclo {ciclo.states[0]} com A = {ciclo.moves}"))
        if not contains_anchor_state(params, ciclo):
            violacoes.append(LemmaViolation(params, "L3", f"ciclo {ciclo.states[0]} sem estado-âncora"))

    tem_ponto_fixo = any(c.period == 1 for c in bacias.cycles)
    esperado = l1 > d and l2 > d
    centro = SystemState(d, d)
    if tem_ponto_fixo != esperado:
        violacoes.append(LemmaViolation(params, "L4", f"ponto fixo existe={tem_ponto_fixo}, esperado={esperado}"))
    elif esperado and bacias.successors[centro].next != centro:
        violacoes.append(LemmaViolation(params, "L4", "(d,d) não é ponto fixo"))

    espelho = params.swapped()
    for estado in bacias.cycles[bacias.cycle_of[centro]].states:
        if step(espelho, estado.swapped()).next != bacias.successors[estado].next.swapped():
            violacoes.append(LemmaViolation(params, "simetria", f"troca de rótulos falha em {estado}"))
            break

    for v in violacoes:
        logger.error("Violação %s em %s: %s", v.lemma, v.params, v.detail)
    return violacoes


def run_lemma_suite(n_min: int = 4, n_max: int = 20) -> LemmaSuiteReport:
    """Percorre todos os (n, l1, l2, d) válidos com n_min <= n <= n_max."""
    pontos = 0
    violacoes: List[LemmaViolation] = []
    for n in range(n_min, n_max + 1):
        for d in range(1, n // 2 + 1):
            for l1 in range(1, n):
                for l2 in range(1, n):
                    violacoes.extend(check_lemmas(make_params(n, l1, l2, d)))
                    pontos += 1
        logger.debug("Bateria de lemas: n=%d concluído (%d pontos até aqui)", n, pontos)
    return LemmaSuiteReport(n_min=n_min, n_max=n_max, points_checked=pontos, violations=tuple(violacoes))
