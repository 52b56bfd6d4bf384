"""Dirac partial waves near bare and shielded magnetic flux strings.

Library layers:

* :mod:`abdirac.specfun`    -- fractional-order cylinder functions and Kummer's F
* :mod:`abdirac.model`      -- couplings, kinematics, tube/barrier geometry
* :mod:`abdirac.bare_tube`  -- finite flux tube, boundary matching, string limit
* :mod:`abdirac.shielded`   -- barrier region, shielded matching and eigenfunctions
* :mod:`abdirac.scattering` -- plane-wave scattering states and amplitudes
* :mod:`abdirac.propagate`  -- Green's-function differences and wave packets
* :mod:`abdirac.verify`     -- numerical acceptance/invariant suites
* :mod:`abdirac.service`    -- FastAPI front end
* :mod:`abdirac.cli`        -- command line thin client
"""

__version__ = "0.1.0"
