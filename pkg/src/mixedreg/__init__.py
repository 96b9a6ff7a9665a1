"""Mixed-register stabilizer codes: exact Pauli algebra, decomposition, constructions and a dense oracle."""

from .analysis import (
    CodeParams,
    centralizer,
    contains,
    distance,
    distance_witness,
    group_order,
    logical_count,
    params,
    split_coprime,
)
from .code import CapacityError, ConsistencyError, InvalidCodeError, StabilizerCode
from .construct import ScanMap, embed_scale, resolution_lower_bound, resolve, scan, scan_many
from .decompose import DecompositionResult, HyperbolicPair, amalgamate, decompose, gram_schmidt, radical
from .pauli import (
    Device,
    PauliVec,
    commutator_matrix,
    commutes,
    compose,
    order,
    power,
    symp,
    weight,
)

__all__ = [
    "CapacityError",
    "CodeParams",
    "ConsistencyError",
    "DecompositionResult",
    "Device",
    "HyperbolicPair",
    "InvalidCodeError",
    "PauliVec",
    "ScanMap",
    "StabilizerCode",
    "amalgamate",
    "centralizer",
    "commutator_matrix",
    "commutes",
    "compose",
    "contains",
    "decompose",
    "distance",
    "distance_witness",
    "embed_scale",
    "gram_schmidt",
    "group_order",
    "logical_count",
    "order",
    "params",
    "power",
    "radical",
    "resolution_lower_bound",
    "resolve",
    "scan",
    "scan_many",
    "split_coprime",
    "symp",
    "weight",
]
