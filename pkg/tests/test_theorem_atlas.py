"""
Testes do atlas de lemas e teoremas: hipóteses, previsões, vereditos e a
bateria exaustiva de lemas.
"""

import logging
import os
import sys
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from Contorno_Duplo.engine.core_model import make_params  # noqa: E402
from Contorno_Duplo.engine.spectrum_classifier import FREE, STOPPED, velocity_spectrum  # noqa: E402
from Contorno_Duplo.engine.theorem_atlas import (  # noqa: E402
    ExpectedPattern,
    ResultId,
    Verdict,
    applicable_results,
    check_lemmas,
    pattern_holds,
    run_lemma_suite,
    verify,
)

SINALIZADOS = {
    ResultId.T5, ResultId.T6, ResultId.T7, ResultId.T9,
    ResultId.T11, ResultId.T16, ResultId.T18, ResultId.T19,
    ResultId.T23, ResultId.T24,
}


def _previsao(params, result_id):
    return next(p for p in applicable_results(params) if p.id == result_id)


# ---------------------------------------------------------------------------
# applicable_results
# ---------------------------------------------------------------------------

class TestApplicableResults:
    def test_todos_os_resultados_em_ordem(self, params_livre):
        ids = [p.id for p in applicable_results(params_livre)]
        assert ids == list(ResultId)
        assert len(ids) == 29

    def test_teorema1_no_exemplo_livre(self, params_livre):
        t1 = _previsao(params_livre, ResultId.T1)
        assert t1.hypotheses_hold
        assert t1.predicted.velocities == {FREE}

    def test_teorema2_no_exemplo_de_espera(self, params_livre_ou_v1):
        t2 = _previsao(params_livre_ou_v1, ResultId.T2)
        assert t2.hypotheses_hold
        assert t2.predicted.velocities == {FREE, (Fraction(6, 7), Fraction(6, 7))}

    def test_teorema7_inconsistente_em_qualquer_ponto(self, params_livre, params_colapso):
        for p in (params_livre, params_colapso):
            t7 = _previsao(p, ResultId.T7)
            assert not t7.internally_consistent
            assert not t7.hypotheses_hold

    def test_sinalizados_tem_variantes_e_sem_previsao(self):
        p = make_params(24, 1, 6, 5)
        for previsao in applicable_results(p):
            if previsao.id in SINALIZADOS:
                assert not previsao.internally_consistent
                assert previsao.variants
                assert previsao.predicted is None

    def test_lema4_preve_ponto_fixo(self, params_colapso):
        l4 = _previsao(params_colapso, ResultId.L4)
        assert l4.predicted.required == {STOPPED}
        assert l4.predicted.fixed_point == (3, 3)

    def test_lema4_proibe_ponto_fixo(self, params_livre):
        assert _previsao(params_livre, ResultId.L4).predicted.forbidden == {STOPPED}

    def test_hipoteses_avaliadas_na_orientacao_l1_menor(self):
        direto = {p.id: p.hypotheses_hold for p in applicable_results(make_params(12, 2, 11, 3))}
        trocado = {p.id: p.hypotheses_hold for p in applicable_results(make_params(12, 11, 2, 3))}
        assert direto == trocado
        assert direto[ResultId.T14]


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

class TestVerify:
    def test_teorema1_confere(self, params_livre):
        assert verify(params_livre).entry(ResultId.T1).verdict is Verdict.MATCH

    def test_teorema2_confere(self, params_livre_ou_v1):
        assert verify(params_livre_ou_v1).entry(ResultId.T2).verdict is Verdict.MATCH

    def test_teorema8_confere(self, params_dois_ciclos):
        assert verify(params_dois_ciclos).entry(ResultId.T8).verdict is Verdict.MATCH

    def test_teorema14_confere_com_velocidades_lentas(self, params_lento):
        entrada = verify(params_lento).entry(ResultId.T14)
        assert entrada.verdict is Verdict.MATCH
        assert entrada.empirical_velocities == ((Fraction(6, 13), Fraction(12, 13)),)

    def test_teorema25_confere_com_colapso(self, params_colapso):
        relatorio = verify(params_colapso)
        assert relatorio.entry(ResultId.T25).verdict is Verdict.MATCH
        assert relatorio.entry(ResultId.L4).verdict is Verdict.MATCH

    def test_teorema13_diverge_dos_dados(self, caplog):
        p = make_params(20, 3, 14, 8)
        with caplog.at_level(logging.WARNING):
            relatorio = verify(p)
        entrada = relatorio.entry(ResultId.T13)
        assert entrada.verdict is Verdict.MISMATCH
        assert (Fraction(20, 21), Fraction(20, 21)) in entrada.empirical_velocities
        assert ResultId.T13 in relatorio.with_verdict(Verdict.MISMATCH)
        assert "T13" in caplog.text

    def test_sobreposicao_t5_t6_inconclusiva(self):
        relatorio = verify(make_params(24, 1, 6, 5))
        assert relatorio.entry(ResultId.T5).verdict is Verdict.INCONCLUSIVE
        assert relatorio.entry(ResultId.T6).verdict is Verdict.INCONCLUSIVE
        assert set(relatorio.entry(ResultId.T6).variant_agreement) == {"enunciado", "somente movimento livre"}

    def test_colapso_com_l1_menor_que_d_inconclusivo(self):
        # l1 <= d exclui ponto fixo; a leitura impressa de T23 prevê colapso mesmo assim
        relatorio = verify(make_params(24, 5, 11, 10))
        entrada = relatorio.entry(ResultId.T23)
        assert entrada.verdict is Verdict.INCONCLUSIVE
        assert entrada.variant_agreement == {"enunciado": False}
        assert ResultId.T23 not in relatorio.with_verdict(Verdict.MISMATCH)

    def test_t24_tem_leitura_com_l1_maior_que_d(self):
        previsao = _previsao(make_params(24, 5, 20, 10), ResultId.T24)
        assert not previsao.internally_consistent
        leituras = {v.name: v.hypotheses_hold for v in previsao.variants}
        assert leituras == {"enunciado": True, "com l1 > d": False}

    def test_inconsistente_fora_da_regiao_nao_aplicavel(self, params_colapso):
        assert verify(params_colapso).entry(ResultId.T5).verdict is Verdict.NOT_APPLICABLE

    def test_nao_aplicavel(self, params_livre):
        assert verify(params_livre).entry(ResultId.T25).verdict is Verdict.NOT_APPLICABLE

    def test_cenario_no_relatorio(self, params_livre_ou_v1):
        relatorio = verify(params_livre_ou_v1)
        assert relatorio.scenario.value == "S2_FreeOrV1"
        assert all(e.empirical_scenario is relatorio.scenario for e in relatorio.entries)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=4, max_value=14), st.data())
    def test_lemas1_e_4_sempre_conferem(self, n, data):
        p = make_params(
            n,
            data.draw(st.integers(min_value=1, max_value=n - 1)),
            data.draw(st.integers(min_value=1, max_value=n - 1)),
            data.draw(st.integers(min_value=1, max_value=n // 2)),
        )
        relatorio = verify(p)
        assert relatorio.entry(ResultId.L4).verdict is Verdict.MATCH
        assert relatorio.entry(ResultId.L1).verdict in (Verdict.MATCH, Verdict.NOT_APPLICABLE)
        assert relatorio.entry(ResultId.L2).verdict is Verdict.MATCH
        assert relatorio.entry(ResultId.L3).verdict is Verdict.MATCH


class TestPatternHolds:
    def test_conjunto_exato(self, params_livre):
        espectro = velocity_spectrum(params_livre)
        assert pattern_holds(ExpectedPattern(description="livre", velocities=frozenset({FREE})), espectro)
        assert not pattern_holds(
            ExpectedPattern(description="colapso", velocities=frozenset({STOPPED})), espectro
        )

    def test_pares_exigidos_e_proibidos(self, params_livre_ou_v1):
        espectro = velocity_spectrum(params_livre_ou_v1)
        assert pattern_holds(ExpectedPattern(description="x", required=frozenset({FREE})), espectro)
        assert not pattern_holds(ExpectedPattern(description="x", forbidden=frozenset({FREE})), espectro)

    def test_ponto_fixo_exigido(self, params_livre_ou_v1):
        padrao = ExpectedPattern(description="x", fixed_point=(4, 4))
        assert not pattern_holds(padrao, velocity_spectrum(params_livre_ou_v1))


# ---------------------------------------------------------------------------
# Bateria de lemas
# ---------------------------------------------------------------------------

class TestLemmaSuite:
    def test_ponto_de_colapso_sem_violacoes(self, params_colapso):
        assert check_lemmas(params_colapso) == []

    def test_ponto_com_troca_de_rotulos(self):
        assert check_lemmas(make_params(12, 11, 2, 3)) == []

    def test_bateria_pequena(self):
        relatorio = run_lemma_suite(4, 8)
        assert relatorio.passed, relatorio.violations[:5]
        # soma de floor(n/2) * (n-1)^2 para n = 4..8
        assert relatorio.points_checked == 2 * 9 + 2 * 16 + 3 * 25 + 3 * 36 + 4 * 49

    @pytest.mark.lento
    def test_bateria_completa(self):
        relatorio = run_lemma_suite(4, 20)
        assert relatorio.passed, relatorio.violations[:5]
