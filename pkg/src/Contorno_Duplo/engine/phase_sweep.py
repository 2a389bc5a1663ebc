"""
Varredura de (l1, l2) para (n, d) fixos: grades de cenários em formato de dados.
"""
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from enum import Enum
from fractions import Fraction
from typing import Iterable, List, Tuple

import numpy as np
import pandas as pd
from pydantic import BaseModel, ConfigDict

from .core_model import make_params
from .orbit_analysis import VelocityPair
from .spectrum_classifier import ScenarioLabel, classify_spectrum, normalized_velocity_set, velocity_spectrum
from .theorem_atlas import Verdict, verify

logger = logging.getLogger(__name__)


class GridFormat(str, Enum):
    CSV = "csv"
    JSON = "json"


class GridCell(BaseModel):
    model_config = ConfigDict(frozen=True)

    l1: int
    l2: int
    scenario: ScenarioLabel
    spectrum_digest: str
    theorem_matches: Tuple[str, ...] = ()
    theorem_mismatches: Tuple[str, ...] = ()
    inconclusive: Tuple[str, ...] = ()


class PhaseGrid(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int
    d: int
    cells: Tuple[GridCell, ...]

    @property
    def regime(self) -> str:
        return regime(self.n, self.d)

    def cell(self, l1: int, l2: int) -> GridCell:
        return next(c for c in self.cells if (c.l1, c.l2) == (l1, l2))

    def matrix(self) -> np.ndarray:
        """Rótulos indexados por [l1-1, l2-1]; o triângulo inferior fica vazio."""
        tamanho = self.n - 1
        rotulos = np.full((tamanho, tamanho), "", dtype=object)
        for c in self.cells:
            rotulos[c.l1 - 1, c.l2 - 1] = c.scenario.value
        return rotulos

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {
                "l1": [c.l1 for c in self.cells],
                "l2": [c.l2 for c in self.cells],
                "scenario": [c.scenario.value for c in self.cells],
                "spectrum": [c.spectrum_digest for c in self.cells],
            }
        )


def regime(n: int, d: int) -> str:
    """Regime de (n, d) em relação a n/4, n/3 e n/2 (comparação inteira exata)."""
    if 4 * d < n:
        return "d<n/4"
    if 4 * d == n:
        return "d=n/4"
    if 3 * d < n:
        return "n/4<d<n/3"
    if 3 * d == n:
        return "d=n/3"
    if 2 * d < n:
        return "n/3<d<n/2"
    return "d=n/2"


def _rational(v: Fraction) -> str:
    return f"{v.numerator}/{v.denominator}"


def spectrum_digest(pairs: Iterable[VelocityPair]) -> str:
    """Texto canônico do conjunto de pares: "v1:v2;v1:v2", ordenado."""
    return ";".join(f"{_rational(a)}:{_rational(b)}" for a, b in sorted(pairs))


def _cell(n: int, d: int, l1: int, l2: int) -> GridCell:
    params = make_params(n, l1, l2, d)
    espectro = velocity_spectrum(params)
    relatorio = verify(params)
    return GridCell(
        l1=l1,
        l2=l2,
        scenario=classify_spectrum(espectro).label,
        spectrum_digest=spectrum_digest(normalized_velocity_set(espectro)),
        theorem_matches=tuple(i.value for i in relatorio.with_verdict(Verdict.MATCH)),
        theorem_mismatches=tuple(i.value for i in relatorio.with_verdict(Verdict.MISMATCH)),
        inconclusive=tuple(i.value for i in relatorio.with_verdict(Verdict.INCONCLUSIVE)),
    )


def _row(args: Tuple[int, int, int]) -> List[GridCell]:
    n, d, l1 = args
    linha = [_cell(n, d, l1, l2) for l2 in range(l1, n)]
    logger.debug("Varredura n=%d d=%d: linha l1=%d concluída", n, d, l1)
    return linha


def sweep_grid(n: int, d: int, workers: int = 1) -> PhaseGrid:
    """
    Classifica cada (l1, l2) com 1 <= l1 <= l2 <= n-1.

    Com ``workers > 1`` as linhas são distribuídas num ProcessPoolExecutor; o
    ``map`` preserva a ordem, então a grade é idêntica à sequencial.
    """
    make_params(n, 1, 1, d)
    tarefas = [(n, d, l1) for l1 in range(1, n)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            linhas = list(executor.map(_row, tarefas))
    else:
        linhas = [_row(t) for t in tarefas]
    celulas = tuple(c for linha in linhas for c in linha)
    logger.info("Grade n=%d d=%d (%s): %d células", n, d, regime(n, d), len(celulas))
    return PhaseGrid(n=n, d=d, cells=celulas)


def grid_document(grid: PhaseGrid) -> dict:
    return {
        "n": grid.n,
        "d": grid.d,
        "regime": grid.regime,
        "cells": [
            {
                "l1": c.l1,
                "l2": c.l2,
                "scenario": c.scenario.value,
                "spectrum": c.spectrum_digest,
                "theorem_matches": list(c.theorem_matches),
                "theorem_mismatches": list(c.theorem_mismatches),
                "inconclusive": list(c.inconclusive),
            }
            for c in grid.cells
        ],
    }


def emit_grid(grid: PhaseGrid, fmt: GridFormat = GridFormat.CSV) -> bytes:
    """CSV ("l1,l2,scenario,spectrum") ou JSON, com fim de linha LF, ordenado por (l1, l2)."""
    fmt = GridFormat(fmt)
    if fmt is GridFormat.CSV:
        quadro = grid.to_frame().sort_values(["l1", "l2"], kind="stable")
        return quadro.to_csv(index=False, lineterminator="\n").encode("utf-8")
    texto = json.dumps(grid_document(grid), indent=2, ensure_ascii=False)
    return (texto + "\n").encode("utf-8")
