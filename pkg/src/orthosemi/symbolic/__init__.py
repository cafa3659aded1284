from .bicyclic import (BicyclicElt, bicyclic_mul, is_bicyclic_idempotent, rewrite,
                       normal_form_pair, eval_word, presentation_mismatches, GEN_A, GEN_B)
from .monogenic import (C2Elt, X, X_INV, c2_mul, c2_inv, c2_attrs, is_c2_idempotent,
                        c2_of_weight, c2_up_to_weight, parse_word, word_eval, C3Word,
                        c3_to_c2, c2_to_c3, c3_words, power, order_evidence, OrderEvidence,
                        mk_elements, rees_quotient_Mk)
from .rho import (RhoType, FLAVORS, all_rho_types, class_key, rho_related, Fin, Inf,
                  RhoQuotient, rho_quotient, lr_values, expected_lr, MonogenicReport,
                  classify_monogenic)
from .extension import (FiniteHandle, BicyclicSemigroup, IntegerGroup, ExtElt,
                        IdealExtensionSpec, IdealExtension, ideal_extension,
                        partial_hom_failure, monogenic_extension, extension_image,
                        compare_with_quotient)
