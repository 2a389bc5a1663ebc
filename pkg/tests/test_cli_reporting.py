"""
Testes de renderização, serialização e replay das sequências de referência.
"""

import json
import os
import sys
import tempfile
from fractions import Fraction

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from Contorno_Duplo.engine.core_model import SystemState, make_params  # noqa: E402
from Contorno_Duplo.engine.orbit_analysis import analyze_orbit  # noqa: E402
from Contorno_Duplo.engine.spectrum_classifier import classify_spectrum, velocity_spectrum  # noqa: E402
from Contorno_Duplo.engine.theorem_atlas import verify  # noqa: E402
from Contorno_Duplo.errors import GoldenCorpusError  # noqa: E402
from Contorno_Duplo.reporting.cli_reporting import (  # noqa: E402
    GoldenSequence,
    MisprintNote,
    dumps,
    format_rational,
    load_golden_corpus,
    orbit_from_document,
    orbit_to_document,
    parse_rational,
    render_report,
    render_trajectory,
    replay_golden,
    report_to_document,
    spectrum_from_document,
    spectrum_to_document,
)


def _yaml_temporario(conteudo: str) -> str:
    f = tempfile.NamedTemporaryFile(mode='w', suffix='.yaml', delete=False, encoding='utf-8')
    f.write(conteudo)
    f.flush()
    f.close()
    return f.name


# ---------------------------------------------------------------------------
# Trajetórias em texto
# ---------------------------------------------------------------------------

class TestRenderTrajectory:
    def test_dois_estados(self):
        assert render_trajectory([SystemState(4, 0), SystemState(5, 1)]) == "(4,0) -> (5,1)\n"

    def test_estado_unico(self):
        assert render_trajectory([SystemState(4, 0)]) == "(4,0)\n"

    def test_quebra_a_cada_seis(self):
        estados = [SystemState(k, 0) for k in range(7)]
        linhas = render_trajectory(estados).splitlines()
        assert len(linhas) == 2
        assert linhas[0].count("(") == 6
        assert not linhas[0].endswith("->")
        assert linhas[0].count(" -> ") == 5
        assert linhas[1] == "(6,0)"

    def test_largura_configuravel(self):
        estados = [SystemState(k, 0) for k in range(4)]
        assert len(render_trajectory(estados, per_line=2).splitlines()) == 2

    def test_trajetoria_vazia(self):
        with pytest.raises(ValueError):
            render_trajectory([])


# ---------------------------------------------------------------------------
# Racionais
# ---------------------------------------------------------------------------

class TestRationals:
    @pytest.mark.parametrize("valor, texto", [(Fraction(6, 7), "6/7"), (Fraction(1), "1/1"), (Fraction(0), "0/1")])
    def test_formato(self, valor, texto):
        assert format_rational(valor) == texto
        assert parse_rational(texto) == valor

    def test_sem_denominador(self):
        with pytest.raises(ValueError):
            parse_rational("1")


# ---------------------------------------------------------------------------
# Documentos JSON
# ---------------------------------------------------------------------------

class TestDocuments:
    def test_documento_de_orbita(self, params_livre_ou_v1):
        resumo = analyze_orbit(params_livre_ou_v1, SystemState(6, 0))
        documento = orbit_to_document(params_livre_ou_v1, resumo)
        assert documento["period"] == 14
        assert documento["velocities"] == ["6/7", "6/7"]
        assert documento["outcome"] == "Intermediate"
        params, reconstruido = orbit_from_document(json.loads(dumps(documento)))
        assert params == params_livre_ou_v1
        assert reconstruido == resumo

    def test_documento_de_espectro(self, params_livre_ou_v1):
        espectro = velocity_spectrum(params_livre_ou_v1)
        documento = spectrum_to_document(espectro, classify_spectrum(espectro))
        assert documento["scenario"] == "S2_FreeOrV1"
        reconstruido = spectrum_from_document(json.loads(dumps(documento)))
        assert reconstruido.entries == espectro.entries
        assert reconstruido.velocity_set == espectro.velocity_set

    def test_documento_de_relatorio(self, params_lento):
        documento = report_to_document(verify(params_lento))
        t14 = next(e for e in documento["entries"] if e["id"] == "T14")
        assert t14["verdict"] == "Match"
        assert t14["empirical_velocities"] == [["6/13", "12/13"]]
        assert len(documento["entries"]) == 29

    def test_dumps_termina_em_nova_linha(self):
        assert dumps({"a": 1}).endswith("}\n")


class TestRenderReport:
    def test_omite_nao_aplicaveis(self, params_livre):
        texto = render_report(verify(params_livre))
        assert "✅ T1: Match" in texto
        assert "T25" not in texto
        assert "S1_FreeMotionAlways" in texto

    def test_divergencia_destacada(self):
        texto = render_report(verify(make_params(20, 3, 14, 8)))
        assert "❌ T13: Mismatch" in texto
        assert "DIVERGÊNCIAS: T13" in texto

    def test_inconclusivo_com_variantes(self):
        texto = render_report(verify(make_params(24, 1, 6, 5)))
        assert "⚠️ T6: Inconclusive" in texto
        assert "variantes:" in texto


# ---------------------------------------------------------------------------
# Corpus de referência
# ---------------------------------------------------------------------------

class TestGoldenReplay:
    def test_corpus_embutido_passa(self):
        corpus = load_golden_corpus()
        relatorio = replay_golden(corpus)
        assert relatorio.passed, [str(f) for f in relatorio.failures]
        assert relatorio.checked_edges > 100
        assert relatorio.skipped_edges > 0

    def test_fontes_do_corpus(self):
        fontes = {s.source for s in load_golden_corpus()}
        assert fontes == {"T1", "T2", "T8", "T13", "T14", "T16", "T25"}

    def test_aresta_corrompida_reportada(self):
        p = make_params(10, 1, 2, 3)
        sequencia = GoldenSequence(
            source="teste",
            params=p,
            states=(SystemState(4, 0), SystemState(5, 1), SystemState(7, 2)),
        )
        relatorio = replay_golden([sequencia])
        assert not relatorio.passed
        assert relatorio.checked_edges == 2
        falha = relatorio.failures[0]
        assert (falha.index, falha.expected, falha.actual) == (1, (7, 2), (6, 2))

    def test_aresta_excluida_nao_conferida(self):
        p = make_params(10, 1, 2, 3)
        sequencia = GoldenSequence(
            source="teste",
            params=p,
            states=(SystemState(4, 0), SystemState(5, 1), SystemState(7, 2)),
            known_misprints=(MisprintNote(index=1, note="salto impresso"),),
        )
        relatorio = replay_golden([sequencia])
        assert relatorio.passed
        assert (relatorio.checked_edges, relatorio.skipped_edges) == (1, 1)

    def test_origem_inadmissivel_vira_falha(self):
        sequencia = GoldenSequence(
            source="teste",
            params=make_params(10, 8, 9, 3),
            states=(SystemState(1, 0), SystemState(2, 1)),
        )
        falha = replay_golden([sequencia]).failures[0]
        assert falha.actual is None
        assert "inadmissível" in falha.error

    def test_corpus_vazio(self):
        relatorio = replay_golden([])
        assert relatorio.passed
        assert relatorio.checked_edges == 0

    def test_errata_fora_da_sequencia(self):
        caminho = _yaml_temporario(
            "sequencias:\n"
            "  - fonte: x\n"
            "    params: {n: 10, l1: 1, l2: 2, d: 3}\n"
            "    estados: [[4,0],[5,1]]\n"
            "    erratas: [{indice: 5, nota: y}]\n"
        )
        try:
            with pytest.raises(GoldenCorpusError):
                load_golden_corpus(caminho)
        finally:
            os.unlink(caminho)

    def test_chave_ausente(self):
        caminho = _yaml_temporario("sequencias:\n  - fonte: x\n    estados: [[4,0]]\n")
        try:
            with pytest.raises(GoldenCorpusError):
                load_golden_corpus(caminho)
        finally:
            os.unlink(caminho)
