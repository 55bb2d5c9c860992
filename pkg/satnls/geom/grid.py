"""
Grid geometry module

Builds periodic grids and the spectral mode tables that go with them
"""
import numpy as np
from scipy import fft

from ..model.state import GridSpec


def make_grid(length: float, points: int) -> GridSpec:
    """
    Build a periodic grid

    Args:
        length: Domain length L (> 0)
        points: Mesh count N (power of two, >= 8)

    Returns:
        GridSpec with spacing L/N

    Raises:
        ConfigurationError: For a nonpositive length or an illegal mesh count
    """
    return GridSpec(length=length, points=points)


def grid_coordinates(grid: GridSpec) -> np.ndarray:
    """x_j = j*h for j = 0..N-1"""
    return grid.coordinates()


def mode_indices(grid: GridSpec) -> np.ndarray:
    """
    Integer mode numbers n in the transform's native order

    0, 1, ..., N/2-1, -N/2, ..., -1 (so n covers [-N/2, N/2))
    """
    return np.rint(fft.fftfreq(grid.points, d=1.0 / grid.points)).astype(np.int64)


def wavenumbers(grid: GridSpec) -> np.ndarray:
    """k_n = 2*pi*n / L in native order"""
    return 2.0 * np.pi * mode_indices(grid) / grid.length


def fd_stability_threshold(grid: GridSpec) -> float:
    """Largest leapfrog step allowed by Von Neumann analysis: h^2 / 2 (strict)"""
    return grid.spacing ** 2 / 2.0
