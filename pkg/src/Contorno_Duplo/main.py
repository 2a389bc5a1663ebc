#!/usr/bin/env python
"""
Linha de comando do Contorno Duplo.

Códigos de saída: 0 sucesso; 1 divergência no replay ou violação de lema;
2 erro de argumento, de validação ou estado inadmissível.
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from .config.settings import (
    get_default_grid_format,
    get_default_horizon,
    get_lemma_bounds,
    get_states_per_line,
    get_sweep_workers,
)
from .engine.core_model import SystemParams, SystemState, make_params
from .engine.dynamics import trajectory
from .engine.orbit_analysis import analyze_orbit
from .engine.phase_sweep import GridFormat, emit_grid, sweep_grid
from .engine.spectrum_classifier import classify_spectrum, velocity_spectrum
from .engine.theorem_atlas import run_lemma_suite, verify
from .errors import GoldenCorpusError, ParamsValidationError, UnacceptableState
from .reporting.cli_reporting import (
    dumps,
    load_golden_corpus,
    orbit_to_document,
    render_report,
    render_trajectory,
    replay_golden,
    report_to_document,
    spectrum_to_document,
)
from .tools.run_logger import auditar_tempo_execucao, get_auditor

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FALHA = 1
EXIT_USO = 2


def _estado(texto: str) -> SystemState:
    """Converte "A,B" em SystemState."""
    try:
        a, b = (int(p) for p in texto.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"estado inválido '{texto}': use A,B")
    return SystemState(a, b)


def _nao_negativo(texto: str) -> int:
    valor = int(texto)
    if valor < 0:
        raise argparse.ArgumentTypeError(f"valor deve ser >= 0 (recebido {valor})")
    return valor


def _params(args: argparse.Namespace) -> SystemParams:
    return make_params(args.n, args.l1, args.l2, args.d)


# ---------------------------------------------------------------------------
# Subcomandos
# ---------------------------------------------------------------------------

@auditar_tempo_execucao("comando_simulate")
def cmd_simulate(args: argparse.Namespace) -> int:
    params = _params(args)
    passos = args.steps if args.steps is not None else get_default_horizon()
    estados = trajectory(params, args.init, passos)
    sys.stdout.write(render_trajectory(estados, per_line=get_states_per_line()))
    return EXIT_OK


@auditar_tempo_execucao("comando_orbit")
def cmd_orbit(args: argparse.Namespace) -> int:
    params = _params(args)
    sys.stdout.write(dumps(orbit_to_document(params, analyze_orbit(params, args.init))))
    return EXIT_OK


@auditar_tempo_execucao("comando_spectrum")
def cmd_spectrum(args: argparse.Namespace) -> int:
    espectro = velocity_spectrum(_params(args))
    sys.stdout.write(dumps(spectrum_to_document(espectro, classify_spectrum(espectro))))
    return EXIT_OK


@auditar_tempo_execucao("comando_verify")
def cmd_verify(args: argparse.Namespace) -> int:
    relatorio = verify(_params(args))
    if args.format == "json":
        sys.stdout.write(dumps(report_to_document(relatorio)))
    else:
        sys.stdout.write(render_report(relatorio))
    return EXIT_OK


@auditar_tempo_execucao("comando_sweep")
def cmd_sweep(args: argparse.Namespace) -> int:
    grade = sweep_grid(args.n, args.d, workers=args.workers)
    dados = emit_grid(grade, GridFormat(args.format))
    if args.out:
        Path(args.out).write_bytes(dados)
        logger.info("Grade gravada em %s", args.out)
    else:
        sys.stdout.write(dados.decode("utf-8"))
    return EXIT_OK


@auditar_tempo_execucao("comando_replay_examples")
def cmd_replay(args: argparse.Namespace) -> int:
    relatorio = replay_golden(load_golden_corpus(args.corpus))
    for falha in relatorio.failures:
        sys.stdout.write(f"❌ {falha}\n")
    status = "✅" if relatorio.passed else "❌"
    sys.stdout.write(
        f"{status} {relatorio.checked_edges} arestas conferidas, "
        f"{relatorio.skipped_edges} excluídas, {len(relatorio.failures)} falhas\n"
    )
    return EXIT_OK if relatorio.passed else EXIT_FALHA


@auditar_tempo_execucao("comando_lemmas")
def cmd_lemmas(args: argparse.Namespace) -> int:
    n_min, n_max = get_lemma_bounds()
    relatorio = run_lemma_suite(
        args.n_min if args.n_min is not None else n_min,
        args.n_max if args.n_max is not None else n_max,
    )
    for v in relatorio.violations:
        sys.stdout.write(f"❌ {v.lemma} em {v.params}: {v.detail}\n")
    status = "✅" if relatorio.passed else "❌"
    sys.stdout.write(
        f"{status} {relatorio.points_checked} pontos (n de {relatorio.n_min} a {relatorio.n_max}), "
        f"{len(relatorio.violations)} violações\n"
    )
    return EXIT_OK if relatorio.passed else EXIT_FALHA


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def _add_params(parser: argparse.ArgumentParser, com_estado: bool = False):
    parser.add_argument("--n", type=int, required=True, help="Células por contorno")
    parser.add_argument("--l1", type=int, required=True, help="Comprimento do cluster 1")
    parser.add_argument("--l2", type=int, required=True, help="Comprimento do cluster 2")
    parser.add_argument("--d", type=int, required=True, help="Célula do nó alheio")
    if com_estado:
        parser.add_argument("--init", type=_estado, required=True, help="Estado inicial A,B")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="contorno", description="Simulador exato de dois contornos")
    parser.add_argument("--verbose", action="store_true", help="Logging DEBUG em stderr")
    sub = parser.add_subparsers(dest="comando", required=True)

    p = sub.add_parser("simulate", help="Imprime a trajetória")
    _add_params(p, com_estado=True)
    p.add_argument("--steps", type=_nao_negativo, default=None, help="Número de passos")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("orbit", help="Resumo da órbita em JSON")
    _add_params(p, com_estado=True)
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("spectrum", help="Espectro de velocidades e cenário em JSON")
    _add_params(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("verify", help="Confere lemas e teoremas")
    _add_params(p)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="Grade de cenários para (n, d)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--format", choices=[f.value for f in GridFormat], default=get_default_grid_format())
    p.add_argument("--out", default=None, help="Arquivo de saída (padrão: stdout)")
    p.add_argument("--workers", type=_nao_negativo, default=get_sweep_workers(), help="Processos paralelos")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("replay-examples", help="Confere as sequências de referência")
    p.add_argument("--corpus", default=None, help="YAML alternativo")
    p.set_defaults(func=cmd_replay)

    p = sub.add_parser("lemmas", help="Bateria exaustiva de lemas")
    p.add_argument("--n-min", type=int, default=None)
    p.add_argument("--n-max", type=int, default=None)
    p.set_defaults(func=cmd_lemmas)
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """Ponto de entrada do script ``contorno``."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    get_auditor(nivel_console="DEBUG" if args.verbose else None)
    try:
        return args.func(args)
    except (ParamsValidationError, UnacceptableState, GoldenCorpusError) as exc:
        sys.stderr.write(f"❌ ERRO: {exc.codigo}: {exc}\n")
        return EXIT_USO
    except OSError as exc:
        sys.stderr.write(f"❌ ERRO: {type(exc).__name__}: {exc}\n")
        return EXIT_USO


if __name__ == "__main__":
    sys.exit(run())
