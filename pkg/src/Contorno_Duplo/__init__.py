# Contorno Duplo - simulador exato de dois contornos com clusters
"""
Simulador e verificador exato do sistema discreto de dois contornos com um
cluster de partículas em cada contorno e dois nós comuns.
"""

__version__ = "1.0.0"

from .engine.core_model import NodeId, SystemParams, SystemState, make_params
from .engine.dynamics import step, trajectory
from .engine.orbit_analysis import analyze_orbit
from .engine.phase_sweep import emit_grid, sweep_grid
from .engine.spectrum_classifier import ScenarioLabel, classify_scenario, velocity_spectrum
from .engine.theorem_atlas import applicable_results, verify

__all__ = [
    'NodeId',
    'SystemParams',
    'SystemState',
    'make_params',
    'step',
    'trajectory',
    'analyze_orbit',
    'velocity_spectrum',
    'classify_scenario',
    'ScenarioLabel',
    'applicable_results',
    'verify',
    'sweep_grid',
    'emit_grid',
]
