"""Physical constants (SI) used by the forward model.

User-facing quantities are relative (eps_r, mu_r); conversion to absolute
units happens only where the Helmholtz operator is assembled.
"""

import scipy.constants

C0 = scipy.constants.c            # speed of light in vacuum [m/s]
EPS0 = scipy.constants.epsilon_0  # vacuum permittivity [F/m]
MU0 = scipy.constants.mu_0        # vacuum permeability [H/m]
