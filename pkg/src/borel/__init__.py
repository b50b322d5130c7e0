"""Generic initial ideals, strongly stable ideals and Lefschetz properties."""

from .errors import BorelError, InputError, InternalError
from .groebner import CoordinateChange, buchberger, gin, initial_ideal
from .invariants import (BettiTable, FIndex, HilbertFunction, ek_betti, f_index, hilbert_function,
                         koszul_betti, reduction_number, reduction_number_direct)
from .lefschetz import (LefschetzReport, analyze, slp_criterion, slp_oracle, ssp_criterion,
                        ssp_oracle, wlp_betti_criterion, wlp_criterion, wlp_oracle)
from .monomials import MonomialIdeal, borel_closure, is_strongly_stable
from .polynomials import Polynomial

__version__ = "0.1.0"
