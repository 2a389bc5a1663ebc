"""
Configuração do Contorno Duplo.

Lê simulation.yaml (ao lado deste módulo). Chaves ausentes caem nos valores
padrão abaixo; nenhuma variável de ambiente é consultada.
"""
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

_CONFIG_PATH = Path(__file__).parent / "simulation.yaml"

_PADROES: Dict[str, Dict[str, Any]] = {
    "logging": {
        "nivel_console": "WARNING",
        "nivel_arquivo": "DEBUG",
        "formato": {},
        "rotacao": {"max_bytes": 10485760, "backup_count": 5},
    },
    "auditoria": {"habilitada": False, "diretorio": "logs"},
    "simulacao": {"estados_por_linha": 6, "horizonte_padrao": 10},
    "varredura": {"workers": 1, "formato_padrao": "csv"},
    "lemas": {"n_min": 4, "n_max": 20},
}


def load_config(path: Optional[Path] = None) -> dict:
    """
    Retorna o conteúdo de simulation.yaml mesclado aos padrões.
    Lança ValueError se o YAML não for um mapeamento.
    """
    caminho = Path(path) if path else _CONFIG_PATH
    try:
        with open(caminho, encoding="utf-8") as f:
            cfg = yaml.safe_load(f) or {}
    except yaml.YAMLError as e:
        raise ValueError(f"Configuração inválida em {caminho}: {e}") from e
    if not isinstance(cfg, dict):
        raise ValueError(f"Configuração inválida em {caminho}: esperado um mapeamento")

    mesclado = {}
    for secao, padrao in _PADROES.items():
        valores = cfg.get(secao) or {}
        mesclado[secao] = {**padrao, **valores}
    return mesclado


def get_logging_config() -> dict:
    cfg = load_config()
    return {"logging": cfg["logging"], "auditoria": cfg["auditoria"]}


def get_states_per_line() -> int:
    return int(load_config()["simulacao"]["estados_por_linha"])


def get_default_horizon() -> int:
    return int(load_config()["simulacao"]["horizonte_padrao"])


def get_sweep_workers() -> int:
    return int(load_config()["varredura"]["workers"])


def get_default_grid_format() -> str:
    return str(load_config()["varredura"]["formato_padrao"])


def get_lemma_bounds() -> tuple:
    """Retorna (n_min, n_max) da bateria de lemas."""
    lemas = load_config()["lemas"]
    return int(lemas["n_min"]), int(lemas["n_max"])
