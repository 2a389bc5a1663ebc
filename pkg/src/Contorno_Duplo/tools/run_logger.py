import functools
import json
import logging
import logging.handlers
import os
import threading
import time
import uuid
from datetime import datetime, timezone
from typing import Any, Dict, Optional

import colorlog

from ..config.settings import get_logging_config

LOGGER_RAIZ = "Contorno_Duplo"
LOGGER_AUDITORIA = "contorno_auditoria"


class RunAuditor:
    """Configura o logging do pacote e mantém a trilha de auditoria das execuções."""

    def __init__(self, config: Optional[Dict[str, Any]] = None, nivel_console: Optional[str] = None):
        self.config = config if config is not None else get_logging_config()
        self.sessao_id = str(uuid.uuid4())
        self._lock = threading.Lock()
        self._eventos: list = []
        self._setup_logging(nivel_console)

    @property
    def _cfg_logging(self) -> Dict[str, Any]:
        return self.config.get("logging", {})

    @property
    def auditoria_habilitada(self) -> bool:
        return bool(self.config.get("auditoria", {}).get("habilitada", False))

    def _setup_logging(self, nivel_console: Optional[str]):
        self.logger = logging.getLogger(LOGGER_RAIZ)
        self.logger.setLevel(logging.DEBUG)
        nivel = nivel_console or self._cfg_logging.get("nivel_console", "WARNING")

        # Reconfiguração troca apenas o nível, sem duplicar handlers
        existentes = [h for h in self.logger.handlers if getattr(h, "_contorno", False)]
        if existentes:
            for handler in existentes:
                if isinstance(handler, logging.StreamHandler) and not isinstance(handler, logging.FileHandler):
                    handler.setLevel(getattr(logging, nivel))
            self.auditoria_logger = logging.getLogger(LOGGER_AUDITORIA)
            return

        # Console em stderr; stdout fica reservado à saída dos comandos
        console_handler = colorlog.StreamHandler()
        console_handler.setLevel(getattr(logging, nivel))
        console_handler.setFormatter(
            colorlog.ColoredFormatter(
                self._cfg_logging.get("formato", {}).get(
                    "formato_console",
                    "%(log_color)s%(levelname)-8s%(reset)s %(name)s: %(message)s",
                )
            )
        )
        console_handler._contorno = True
        self.logger.addHandler(console_handler)

        self.auditoria_logger = logging.getLogger(LOGGER_AUDITORIA)
        self.auditoria_logger.propagate = False
        self.auditoria_logger.setLevel(logging.INFO)
        if not self.auditoria_habilitada:
            return

        diretorio = self.config.get("auditoria", {}).get("diretorio", "logs")
        os.makedirs(diretorio, exist_ok=True)
        rotacao = self._cfg_logging.get("rotacao", {})
        file_handler = logging.handlers.RotatingFileHandler(
            os.path.join(diretorio, "contorno.log"),
            maxBytes=rotacao.get("max_bytes", 10485760),
            backupCount=rotacao.get("backup_count", 5),
            encoding="utf-8",
        )
        file_handler.setLevel(getattr(logging, self._cfg_logging.get("nivel_arquivo", "DEBUG")))
        file_handler.setFormatter(
            logging.Formatter(
                self._cfg_logging.get("formato", {}).get(
                    "formato_arquivo",
                    "%(asctime)s | %(name)s | %(levelname)s | %(funcName)s:%(lineno)d | %(message)s",
                )
            )
        )
        file_handler._contorno = True
        self.logger.addHandler(file_handler)

        auditoria_handler = logging.FileHandler(os.path.join(diretorio, "auditoria.jsonl"), encoding="utf-8")
        auditoria_handler.setLevel(logging.INFO)
        auditoria_handler.setFormatter(_JsonFormatter(self.sessao_id))
        self.auditoria_logger.addHandler(auditoria_handler)

    def auditar_evento(
        self,
        evento: str,
        dados_entrada: Optional[Dict] = None,
        dados_saida: Optional[Dict] = None,
        tempo_execucao_ms: Optional[float] = None,
    ) -> Dict[str, Any]:
        """Registra um evento; grava em JSON lines quando a auditoria está habilitada."""
        registro = {
            "sessao_id": self.sessao_id,
            "evento_tipo": evento,
            "dados_entrada": dados_entrada or {},
            "dados_saida": dados_saida or {},
            "tempo_execucao_ms": tempo_execucao_ms,
            "timestamp": datetime.now(timezone.utc).isoformat(),
        }
        with self._lock:
            self._eventos.append(registro)
        self.auditoria_logger.info(evento, extra={"dados_adicionais": registro})
        return registro

    def eventos(self) -> list:
        with self._lock:
            return list(self._eventos)


class _JsonFormatter(logging.Formatter):
    def __init__(self, sessao_id: str):
        super().__init__()
        self._sessao_id = sessao_id

    def format(self, record):
        entrada = {
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "sessao_id": self._sessao_id,
            "nivel": record.levelname,
            "evento": record.getMessage(),
            "dados_adicionais": getattr(record, "dados_adicionais", {}),
        }
        return json.dumps(entrada, ensure_ascii=False, default=str)


_auditor: Optional[RunAuditor] = None


def get_auditor(nivel_console: Optional[str] = None) -> RunAuditor:
    """Instância global; ``nivel_console`` reajusta o nível do console."""
    global _auditor
    if _auditor is None:
        _auditor = RunAuditor(nivel_console=nivel_console)
    elif nivel_console:
        _auditor._setup_logging(nivel_console)
    return _auditor


def auditar_tempo_execucao(evento: str):
    """Decorador que mede a duração da chamada e registra o evento."""

    def decorator(func):
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            inicio = time.perf_counter()
            resultado = func(*args, **kwargs)
            duracao_ms = (time.perf_counter() - inicio) * 1000
            get_auditor().auditar_evento(
                evento,
                dados_entrada={"args": [str(a) for a in args], "kwargs": {k: str(v) for k, v in kwargs.items()}},
                tempo_execucao_ms=round(duracao_ms, 3),
            )
            return resultado

        return wrapper

    return decorator
