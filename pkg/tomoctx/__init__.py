# -*- coding: utf-8 -*-

from .angular import EulerAngles, small_d, wigner_3j, wigner_D
from .tomography import (Tomogram, DualSymbol, dequantizer, dual_symbol,
                         fidelity, pair, quantizer, reconstruct,
                         rotated_tomogram, tomogram_of, u3_matrix,
                         unitary_tomogram)
from .contextuality import (InequalityReport, OutcomeDistribution,
                            conditional_entropy, entropic_chain,
                            joint_from_projectors, kcbs_dichotomic,
                            ncycle_bounds, ncycle_value, pentagram_value,
                            peres_mermin, shannon_entropy)
from .search import SearchConfig, maximize
