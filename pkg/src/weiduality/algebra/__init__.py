from .chainring import Submodule, enumerate_submodules, smith_form, standard_form
from .enumeration import count_subspaces, enumerate_subcodes, enumerate_subspaces
from .lattice import SubspaceLattice
from .linalg import BilinearForm, Subspace, matmul, rank, rref, transpose, trace
from .rings import RingSpec, gaussian_binomial

__all__ = [
    "BilinearForm",
    "RingSpec",
    "Submodule",
    "Subspace",
    "SubspaceLattice",
    "count_subspaces",
    "enumerate_subcodes",
    "enumerate_submodules",
    "enumerate_subspaces",
    "gaussian_binomial",
    "matmul",
    "rank",
    "rref",
    "smith_form",
    "standard_form",
    "trace",
    "transpose",
]
