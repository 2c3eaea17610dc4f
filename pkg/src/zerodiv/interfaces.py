from ._interfaces import (
    AsymmetricMatrix,
    ConsistencyGateFailure,
    DisconnectedGraph,
    EnumerationCapacityExceeded,
    IGraph,
    IMinimumDistanceOracle,
    InvalidPrime,
    NotAZeroDivisor,
    UnsupportedPrime,
    VertexOutOfRange,
)


__all__ = (
    "AsymmetricMatrix",
    "ConsistencyGateFailure",
    "DisconnectedGraph",
    "EnumerationCapacityExceeded",
    "IGraph",
    "IMinimumDistanceOracle",
    "InvalidPrime",
    "NotAZeroDivisor",
    "UnsupportedPrime",
    "VertexOutOfRange",
)
