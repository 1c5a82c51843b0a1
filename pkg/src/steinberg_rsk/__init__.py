"""Partial permutations, admissible signed Young diagrams and a flag-geometric RSK."""

from .correspondence import CorrespondenceTriple, census, dual, forward, inverse, pr
from .matrices import MarginMatrix, PartialPermutation, enumerate_pp, pp_count, tau_hat
from .partitions import Partition
from .rsk import calibrate, knuth_rsk, knuth_rsk_inverse, variant_rsk, variant_rsk_inverse
from .signed_diagrams import SignedYoungDiagram
from .tableaux import RowStandardTableau, evacuate, rectify

__all__ = [
    "CorrespondenceTriple",
    "MarginMatrix",
    "PartialPermutation",
    "Partition",
    "RowStandardTableau",
    "SignedYoungDiagram",
    "calibrate",
    "census",
    "dual",
    "enumerate_pp",
    "evacuate",
    "forward",
    "inverse",
    "knuth_rsk",
    "knuth_rsk_inverse",
    "pp_count",
    "pr",
    "rectify",
    "tau_hat",
    "variant_rsk",
    "variant_rsk_inverse",
]
