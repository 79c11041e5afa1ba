"""Atomic-unit constants and conversion factors.

Everything inside the package works in Hartree atomic units
(hbar = m_e = e = 4*pi*eps0 = 1); these constants are only needed at the
boundaries, when emitting SI quantities or ingesting isotope masses.
"""

import math

# One atomic unit of time, in seconds.
AU_TIME_S = 2.4188843265e-17

# Angular frequency: 1 a.u. = 1/AU_TIME_S rad/s (= 4.134137e16 rad/s).
AU_ANGFREQ_RAD_PER_S = 1.0 / AU_TIME_S

# Speed of light in atomic units (1/alpha).
C_AU = 137.035999

# Unified atomic mass unit in electron masses.
AMU_TO_ME = 1822.888486209

# Isotope masses (u) for the default reduced mass of the shipped model curves.
M_K39_AMU = 38.9637064864
M_RB87_AMU = 86.909180531


def reduced_mass_amu(m1_amu: float, m2_amu: float) -> float:
    """Two-body reduced mass in u."""
    return m1_amu * m2_amu / (m1_amu + m2_amu)


# Reduced mass of the 39K-87Rb pair, in electron masses.
MU_K39RB87 = reduced_mass_amu(M_K39_AMU, M_RB87_AMU) * AMU_TO_ME

# Gaussian FWHM prefactor, used by the pulse bandwidth expression.
FWHM_FACTOR = 2.0 * math.sqrt(2.0 * math.log(2.0))
