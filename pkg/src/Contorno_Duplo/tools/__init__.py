"""Ferramentas transversais: logging e auditoria."""
