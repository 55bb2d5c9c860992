"""
Logging and QA module

Collects warnings raised while building initial data, checking stability and evolving runs
"""
import logging
from typing import List, Dict, Any, Optional
from dataclasses import dataclass, field
from .config import SimulationSettings, default_settings


@dataclass
class SimulationWarning:
    """Warning during a simulation"""
    source: Optional[str]
    warning_type: str  # 'nonpositive_saturation', 'unstable_step', 'divergence', 'tau_reduced'
    message: str
    details: Dict[str, Any] = field(default_factory=dict)


class SimulationLogger:
    """Logger for simulation runs"""

    def __init__(self, settings: Optional[SimulationSettings] = None):
        """
        Args:
            settings: SimulationSettings instance (uses default_settings if None)
        """
        self.settings = settings or default_settings
        self.warnings: List[SimulationWarning] = []
        self.logger = logging.getLogger('satnls')

        # Logger configuration (default)
        if not self.logger.handlers:
            handler = logging.StreamHandler()
            formatter = logging.Formatter(
                '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
            )
            handler.setFormatter(formatter)
            self.logger.addHandler(handler)
            self.logger.setLevel(logging.INFO)

    def _record(self, source: Optional[str], warning_type: str, message: str, details: Dict[str, Any]):
        warning = SimulationWarning(
            source=source,
            warning_type=warning_type,
            message=message,
            details=details,
        )
        self.warnings.append(warning)
        self.logger.warning(f"[{source}] {message}")

    def warn_nonpositive_saturation(self, saturation: float, coefficient_b: float, source: Optional[str] = 'initial'):
        """Record B = 3/2 - 2S <= 0: the soliton profile denominator can vanish"""
        if not self.settings.warn_nonpositive_saturation:
            return

        message = (
            f"Saturation S={saturation} gives B={coefficient_b} <= 0; "
            "soliton profile has a pole"
        )
        self._record(source, 'nonpositive_saturation', message, {
            'S': saturation,
            'B': coefficient_b,
        })

    def warn_unstable_step(self, tau: float, h: float, threshold: float, source: Optional[str] = 'preflight'):
        """Record a leapfrog step violating tau < h^2/2"""
        message = f"Time step tau={tau} violates tau < h^2/2 = {threshold} (h={h})"
        self._record(source, 'unstable_step', message, {
            'tau': tau,
            'h': h,
            'threshold': threshold,
        })

    def warn_divergence(self, step_index: int, time: float, last_finite_norm: float, reason: str,
                        source: Optional[str] = None):
        """Record an aborted run"""
        message = (
            f"Run diverged at step {step_index} (t={time}): {reason}; "
            f"last finite norm {last_finite_norm}"
        )
        self._record(source, 'divergence', message, {
            'step_index': step_index,
            'time': time,
            'last_finite_norm': last_finite_norm,
            'reason': reason,
        })

    def warn_tau_reduced(self, requested: float, used: float, source: Optional[str] = 'compare'):
        """Record a time step replaced by an FD-stable one"""
        message = f"Time step {requested} is not FD-stable; using {used} for both schemes"
        self._record(source, 'tau_reduced', message, {
            'requested': requested,
            'used': used,
        })

    def info(self, message: str):
        """Info log"""
        self.logger.info(message)

    def debug(self, message: str):
        """Debug log"""
        self.logger.debug(message)

    def error(self, message: str):
        """Error log"""
        self.logger.error(message)

    def get_warnings(self) -> List[SimulationWarning]:
        """Get warning list"""
        return self.warnings

    def clear_warnings(self):
        """Clear warning list"""
        self.warnings.clear()


# Global logger instance
_default_logger = SimulationLogger()


def get_logger() -> SimulationLogger:
    """Get default logger"""
    return _default_logger
