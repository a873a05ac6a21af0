"""hbtrace: canonical traces of height-two Cohen-Macaulay monomial quotients.

Core entry points:

- :mod:`hbtrace.monomials` exact ideal arithmetic and decompositions
- :mod:`hbtrace.graphs` chordality and the intersection-graph construction
- :mod:`hbtrace.betti` multigraded Betti numbers and Cohen-Macaulay tests
- :mod:`hbtrace.matrices` Hilbert-Burch matrices and minor ideals
- :mod:`hbtrace.trace` canonical trace and nearly-Gorenstein classification
- :mod:`hbtrace.oracle` independent multigraded brute-force verification
- :mod:`hbtrace.service` FastAPI app exposing the computations
- :mod:`hbtrace.cli` thin command-line client
"""

__version__ = "0.1.0"

SCHEMA_VERSION = 1

from .monomials import (  # noqa: E402,F401
    AmbientRing,
    Monomial,
    MonomialIdeal,
    alexander_dual,
    colon,
    height,
    ideal,
    intersect,
    irreducible_decomposition,
    minimalize,
    monomial_localization,
    polarize,
    ring,
    standard_primary_decomposition,
)
from .parsing import parse_graph_spec, parse_ideal, print_ideal  # noqa: E402,F401
from .trace import canonical_trace, classify_ng_height2  # noqa: E402,F401
