"""Renderização, serialização e replay das sequências de referência."""
