"""Grid geometry module"""
from .grid import make_grid, grid_coordinates, mode_indices, wavenumbers, fd_stability_threshold

__all__ = [
    'make_grid',
    'grid_coordinates',
    'mode_indices',
    'wavenumbers',
    'fd_stability_threshold',
]
