from .semigroup import FiniteSemigroup, from_table, generate, mask_to_set, set_to_mask
from .constructions import (construct, trivial, left_zero, right_zero, chain_semilattice,
                            null_semigroup, cyclic_group, rectangular_band, direct_product)
from .green import GreenData, green
from .properties import (PropertyReport, classify, inverses, element_order,
                         is_group_element, nongroup_elements, idempotents_closed)
from .congruence import (CongruencePartition, congruence_witness, is_congruence, quotient,
                         generated_congruence, congruences, gamma)
from .iso import find_isomorphism, is_homomorphism
from .structure import (is_ideal, kernel, KernelDecomposition, kernel_decomposition,
                        product_of_decomposition, BandComponents, band_components,
                        ShadowReport, monogenic_shadow_check)
