"""
Renderização, serialização e replay das sequências de referência.

Racionais são sempre serializados como texto "p/q" (inclusive "1/1" e "0/1").
"""
import json
import logging
from fractions import Fraction
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import yaml
from pydantic import BaseModel, ConfigDict, Field

from ..errors import ContornoError, GoldenCorpusError
from ..engine.core_model import SystemParams, SystemState, make_params
from ..engine.dynamics import step
from ..engine.orbit_analysis import OrbitSummary, Outcome
from ..engine.spectrum_classifier import ScenarioClassification, SpectrumEntry, VelocitySpectrum
from ..engine.theorem_atlas import VerificationReport, Verdict

logger = logging.getLogger(__name__)

_GOLDEN_PATH = Path(__file__).resolve().parent.parent / "config" / "golden_sequences.yaml"


# ---------------------------------------------------------------------------
# Texto
# ---------------------------------------------------------------------------

def render_trajectory(states: Sequence[SystemState], per_line: int = 6) -> str:
    """Estados "(a,b)" ligados por " -> ", até ``per_line`` por linha, sem seta no fim da linha."""
    if not states:
        raise ValueError("trajetória vazia")
    textos = [f"({a},{b})" for a, b in states]
    linhas = [" -> ".join(textos[i:i + per_line]) for i in range(0, len(textos), per_line)]
    return "\n".join(linhas) + "\n"


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    numerador, _, denominador = str(text).partition("/")
    if not denominador:
        raise ValueError(f"racional sem denominador: {text!r}")
    return Fraction(int(numerador), int(denominador))


def _pair_text(pair) -> List[str]:
    return [format_rational(pair[0]), format_rational(pair[1])]


def _pair_value(textos) -> Tuple[Fraction, Fraction]:
    return parse_rational(textos[0]), parse_rational(textos[1])


def params_document(params: SystemParams) -> Dict[str, int]:
    return {"n": params.n, "l1": params.l1, "l2": params.l2, "d": params.d}


def _params_value(doc: dict) -> SystemParams:
    return make_params(doc["n"], doc["l1"], doc["l2"], doc["d"])


# ---------------------------------------------------------------------------
# Documentos JSON
# ---------------------------------------------------------------------------

def orbit_to_document(params: SystemParams, summary: OrbitSummary) -> dict:
    return {
        "params": params_document(params),
        "initial": list(summary.initial),
        "transient": summary.transient_length,
        "period": summary.period,
        "moves": list(summary.moves),
        "velocities": _pair_text(summary.velocities),
        "outcome": summary.outcome.value,
        "cycle": [list(s) for s in summary.cycle_states],
    }


def orbit_from_document(doc: dict) -> Tuple[SystemParams, OrbitSummary]:
    resumo = OrbitSummary(
        initial=SystemState(*doc["initial"]),
        transient_length=doc["transient"],
        period=doc["period"],
        moves=tuple(doc["moves"]),
        velocities=_pair_value(doc["velocities"]),
        outcome=Outcome(doc["outcome"]),
        cycle_states=tuple(SystemState(*s) for s in doc["cycle"]),
    )
    return _params_value(doc["params"]), resumo


def spectrum_to_document(spectrum: VelocitySpectrum, classification: ScenarioClassification) -> dict:
    return {
        "params": params_document(spectrum.params),
        "scenario": classification.label.value,
        "s5_denominator": classification.s5_denominator,
        "entries": [
            {
                "velocities": _pair_text(e.velocities),
                "representative_initial": list(e.representative_initial),
                "basin_size": e.basin_size,
                "periods": list(e.periods),
            }
            for e in spectrum.entries
        ],
    }


def spectrum_from_document(doc: dict) -> VelocitySpectrum:
    """Reconstrói o espectro (sem os ciclos, que não são serializados)."""
    return VelocitySpectrum(
        params=_params_value(doc["params"]),
        entries=tuple(
            SpectrumEntry(
                velocities=_pair_value(e["velocities"]),
                representative_initial=SystemState(*e["representative_initial"]),
                basin_size=e["basin_size"],
                periods=tuple(e["periods"]),
            )
            for e in doc["entries"]
        ),
    )


def report_to_document(report: VerificationReport) -> dict:
    return {
        "params": params_document(report.params),
        "scenario": report.scenario.value,
        "s5_denominator": report.s5_denominator,
        "entries": [
            {
                "id": e.prediction.id.value,
                "hypotheses_hold": e.prediction.hypotheses_hold,
                "internally_consistent": e.prediction.internally_consistent,
                "predicted": e.prediction.predicted.description if e.prediction.predicted else None,
                "verdict": e.verdict.value,
                "empirical_velocities": [_pair_text(p) for p in e.empirical_velocities],
                "variant_agreement": dict(sorted(e.variant_agreement.items())),
                "notes": e.prediction.notes,
            }
            for e in report.entries
        ],
    }


def dumps(document: dict) -> str:
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"


_ICONES = {
    Verdict.MATCH: "✅",
    Verdict.MISMATCH: "❌",
    Verdict.INCONCLUSIVE: "⚠️",
}


def render_report(report: VerificationReport) -> str:
    """Tabela legível; resultados não aplicáveis são omitidos."""
    observadas = report.entries[0].empirical_velocities if report.entries else ()
    velocidades = ", ".join(f"({format_rational(a)}, {format_rational(b)})" for a, b in observadas)
    linhas = [
        f"Parâmetros {report.params}",
        f"Cenário empírico: {report.scenario.value}"
        + (f" (denominador {report.s5_denominator})" if report.s5_denominator else ""),
        f"Velocidades observadas: {velocidades}",
    ]
    for e in report.entries:
        if e.verdict is Verdict.NOT_APPLICABLE:
            continue
        previsto = e.prediction.predicted.description if e.prediction.predicted else "-"
        linha = f"{_ICONES[e.verdict]} {e.prediction.id.value}: {e.verdict.value} | previsto: {previsto}"
        if e.variant_agreement:
            variantes = ", ".join(f"{nome}={'sim' if ok else 'não'}" for nome, ok in sorted(e.variant_agreement.items()))
            linha += f" | variantes: {variantes}"
        if e.prediction.notes:
            linha += f" | nota: {e.prediction.notes}"
        linhas.append(linha)
    mismatches = report.with_verdict(Verdict.MISMATCH)
    if mismatches:
        linhas.append(f"❌ DIVERGÊNCIAS: {', '.join(i.value for i in mismatches)}")
    return "\n".join(linhas) + "\n"


# ---------------------------------------------------------------------------
# Corpus de referência
# ---------------------------------------------------------------------------

class MisprintNote(BaseModel):
    model_config = ConfigDict(frozen=True)

    index: int
    note: str


class GoldenSequence(BaseModel):
    model_config = ConfigDict(frozen=True)

    source: str
    params: SystemParams
    states: Tuple[SystemState, ...]
    known_misprints: Tuple[MisprintNote, ...] = ()

    @property
    def excluded(self) -> Dict[int, str]:
        return {m.index: m.note for m in self.known_misprints}


class EdgeFailure(BaseModel):
    model_config = ConfigDict(frozen=True)

    source: str
    index: int
    origin: SystemState
    expected: SystemState
    actual: Optional[SystemState] = None
    error: Optional[str] = None

    def __str__(self) -> str:
        obtido = self.actual if self.actual is not None else self.error
        return f"[{self.source}] aresta {self.index}: {self.origin} -> {self.expected}, obtido {obtido}"


class GoldenReplayReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    checked_edges: int = 0
    skipped_edges: int = 0
    failures: Tuple[EdgeFailure, ...] = Field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return not self.failures


def load_golden_corpus(path: Optional[Path] = None) -> List[GoldenSequence]:
    """
    Lê golden_sequences.yaml.

    Raises:
        GoldenCorpusError: YAML inválido, chave ausente ou índice de errata fora da sequência
        OSError: arquivo inexistente ou ilegível
    """
    caminho = Path(path) if path else _GOLDEN_PATH
    with open(caminho, encoding="utf-8") as f:
        try:
            bruto = yaml.safe_load(f) or {}
        except yaml.YAMLError as exc:
            raise GoldenCorpusError(f"YAML inválido em {caminho}: {exc}") from exc
    if not isinstance(bruto, dict):
        raise GoldenCorpusError(f"{caminho}: esperado um mapeamento com a chave 'sequencias'")

    corpus = []
    for i, item in enumerate(bruto.get("sequencias", [])):
        try:
            sequencia = GoldenSequence(
                source=item["fonte"],
                params=_params_value(item["params"]),
                states=tuple(SystemState(*s) for s in item["estados"]),
                known_misprints=tuple(
                    MisprintNote(index=e["indice"], note=e["nota"]) for e in item.get("erratas", [])
                ),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise GoldenCorpusError(f"sequência {i} malformada em {caminho}: {exc}") from exc
        for indice in sequencia.excluded:
            if not 0 <= indice < len(sequencia.states) - 1:
                raise GoldenCorpusError(f"sequência {i} ({sequencia.source}): errata {indice} fora da sequência")
        corpus.append(sequencia)
    return corpus


def replay_golden(corpus: Iterable[GoldenSequence]) -> GoldenReplayReport:
    """Confere cada aresta não excluída contra step()."""
    conferidas = 0
    puladas = 0
    falhas: List[EdgeFailure] = []
    for sequencia in corpus:
        excluidas = sequencia.excluded
        for k, (origem, esperado) in enumerate(zip(sequencia.states, sequencia.states[1:])):
            if k in excluidas:
                puladas += 1
                continue
            conferidas += 1
            try:
                obtido = step(sequencia.params, origem).next
            except ContornoError as exc:
                falhas.append(
                    EdgeFailure(source=sequencia.source, index=k, origin=origem, expected=esperado, error=str(exc))
                )
                continue
            if obtido != esperado:
                falhas.append(
                    EdgeFailure(source=sequencia.source, index=k, origin=origem, expected=esperado, actual=obtido)
                )
    for falha in falhas:
        logger.error("Replay divergente: %s", falha)
    return GoldenReplayReport(checked_edges=conferidas, skipped_edges=puladas, failures=tuple(falhas))
