"""Special harmonic sums s(k, N) mod p, Fermat quotients and the components X(p), Z(p)."""

from .modarith import Prime, Residue, fermat_quotient, harmonic_direct, is_prime, mod_inverse
from .quotients import ComponentValues, component_values, x_of, z_of
from .recurrence import RecurrenceSpec, eval_exact, eval_mod
from .search import SearchHit, SearchTarget, overlap_report, prime_stream, scan
from .sums import SumSpec, s_components, s_direct, s_small, verify_relations

__version__ = "0.1.0"
