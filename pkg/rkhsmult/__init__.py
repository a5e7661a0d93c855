#!/usr/bin/env python3
"""
rkhsmult Package Initialization
"""

__version__ = "1.0.0"
__description__ = "Multiplicative functionals on complete Nevanlinna-Pick kernel spaces over the unit ball"

# Package imports
from .kernels import Kernel, TensorKernel, cnp_transform, kernel_eval
from .functionals import Functional, TensorFunctional
from .verify import CriterionManager, equivalence_suite
from .core.app_core import RkhsMultCore
from .main import RkhsMultApplication, main

__all__ = [
    'Kernel',
    'TensorKernel',
    'cnp_transform',
    'kernel_eval',
    'Functional',
    'TensorFunctional',
    'CriterionManager',
    'equivalence_suite',
    'RkhsMultCore',
    'RkhsMultApplication',
    'main',
]
