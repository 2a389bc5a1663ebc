"""Módulos de cálculo: modelo, dinâmica, órbitas, espectro, atlas e varredura."""
