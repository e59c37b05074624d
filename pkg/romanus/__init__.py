"""
Romanus package source: __init__.py

Author:     romanus contributors
Version:    1.0.0-alpha.1
License:    MIT License
"""

from .config import VERSION, Settings, load_settings
from .exactpoly import Polynomial, chebyshev_T, monic_cheb
from .radical import parse, render, evaluate, numeric_equal, PrecisionDecimal
from .angles import RationalAngle, classify, factor_chain, tower, exact_value
from .solver import ChebEquation, solve, solve_numeric, verify_romanus, solve_gift
from .notation import NotationDialect, parse_poly, print_poly, convert

__version__ = VERSION
