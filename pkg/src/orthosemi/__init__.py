"""Finite and symbolic semigroup computations around orthodox semigroups and
their subsemigroup lattices."""
from .errors import *  # noqa: F401,F403
from .finite import *  # noqa: F401,F403
from .symbolic import *  # noqa: F401,F403
from .lattice import (SubsemigroupLattice, sub_lattice, lattice_ops, LatticeIso, lattice_iso,
                      all_lattice_isos, InducedBijection, induced_bijection, is_induced_by,
                      induction_witness, BandClosureReport, band_closure_check)
from .enumeration import (CanonicalTable, canonical_form, iso_test, enumerate_semigroups,
                          corpus, corpus_up_to, orthodox_corpus)

__version__ = "0.1.0"
