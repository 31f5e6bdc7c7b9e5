"""Output-sensitive modular subset sums, witness recovery, and all-pairs
non-decreasing paths."""

from ._kernels import (available_backends, default_backend_name,
                       get_backend, numba_available)
from .apnp import (EdgeList, PathMatrix, all_pairs_non_decreasing_paths,
                   prepare_edges, recover_path)
from .dynstrings import (CompressedBitLcp, PlainBitLcp, RankSelectSet,
                         StringFamily, StringHandle)
from .errors import (DistinctWeightsError, GuardExceededError,
                     InstanceParseError, InvalidEdgeError,
                     InvalidModulusError, InvalidParameterError,
                     ModsumError, WeakPrimeError)
from .hashtree import HashPrefixTree
from .oracle import (apnp_brute, bellman_naive, brute_subset_sums,
                     dense_witness_sweep)
from .preprocess import (ResidueMultiset, canonicalize, preprocess,
                         preprocessing_check)
from .solver import (ABSENT, ENGINES, SolveReport, SumTable, recover_subset,
                     solve, validate_table, verify_solution)
from .symdiff import SymDiffResult, find_new_sums

__version__ = "0.1.0"

__all__ = [
    "ABSENT", "ENGINES", "CompressedBitLcp", "DistinctWeightsError",
    "EdgeList", "GuardExceededError", "HashPrefixTree",
    "InstanceParseError", "InvalidEdgeError", "InvalidModulusError",
    "InvalidParameterError", "ModsumError", "PathMatrix", "PlainBitLcp",
    "RankSelectSet", "ResidueMultiset", "SolveReport", "StringFamily",
    "StringHandle", "SumTable", "SymDiffResult", "WeakPrimeError",
    "all_pairs_non_decreasing_paths", "apnp_brute", "available_backends",
    "bellman_naive", "brute_subset_sums", "canonicalize",
    "default_backend_name", "dense_witness_sweep", "find_new_sums",
    "get_backend",
    "numba_available", "prepare_edges", "preprocess",
    "preprocessing_check", "recover_path", "recover_subset", "solve",
    "validate_table", "verify_solution",
]
