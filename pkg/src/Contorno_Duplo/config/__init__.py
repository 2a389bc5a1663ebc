"""Configuração do Contorno Duplo."""
