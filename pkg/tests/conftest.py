"""
Configuração global de testes do Contorno Duplo.

Adiciona src ao path e fornece os pontos de parâmetros dos exemplos
resolvidos usados em vários módulos de teste.
"""
import os
import sys

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from Contorno_Duplo.engine.core_model import make_params  # noqa: E402


@pytest.fixture
def params_livre():
    """(10,1,2,3): movimento livre a partir de qualquer estado."""
    return make_params(10, 1, 2, 3)


@pytest.fixture
def params_livre_ou_v1():
    """(12,2,4,4): movimento livre ou v = 6/7."""
    return make_params(12, 2, 4, 4)


@pytest.fixture
def params_dois_ciclos():
    """(18,4,7,4): ciclos de período 19 e 21."""
    return make_params(18, 4, 7, 4)


@pytest.fixture
def params_lento():
    """(12,2,11,3): ciclo único de período 26."""
    return make_params(12, 2, 11, 3)


@pytest.fixture
def params_meia_velocidade():
    """(12,1,10,3): v = (1/2, 1)."""
    return make_params(12, 1, 10, 3)


@pytest.fixture
def params_colapso():
    """(10,8,9,3): colapso a partir de qualquer estado."""
    return make_params(10, 8, 9, 3)


@pytest.fixture(autouse=True)
def auditor_limpo():
    """Descarta o auditor global e seus handlers, presos ao stderr capturado do teste."""
    import logging

    from Contorno_Duplo.tools import run_logger

    yield
    pacote = logging.getLogger(run_logger.LOGGER_RAIZ)
    for handler in [h for h in pacote.handlers if getattr(h, "_contorno", False)]:
        pacote.removeHandler(handler)
        handler.close()
    auditoria = logging.getLogger(run_logger.LOGGER_AUDITORIA)
    for handler in list(auditoria.handlers):
        auditoria.removeHandler(handler)
        handler.close()
    run_logger._auditor = None
