"""rindler_lab: acceleration-radiation numerics in 1+1 dimensions.

Subpackages: :mod:`~rindler_lab.numerics` (complex special functions and
oscillatory quadrature), :mod:`~rindler_lab.spacetime` (charts, worldlines,
temperatures), :mod:`~rindler_lab.modes` (field-mode families and
Klein-Gordon products), :mod:`~rindler_lab.perturbation` (first-order
excitation/emission spectra), :mod:`~rindler_lab.vacua` (Bogoliubov
coefficients and the KMS periodicity trick), :mod:`~rindler_lab.cli`
(scenario runner).
"""

__version__ = "0.1.0"

from . import errors, modes, numerics, perturbation, spacetime, vacua  # noqa: E402,F401

__all__ = [
    "__version__",
    "errors",
    "numerics",
    "spacetime",
    "modes",
    "perturbation",
    "vacua",
]
