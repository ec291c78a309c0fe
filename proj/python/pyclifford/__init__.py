"""Sparse Clifford algebra kernel: products, grades, text I/O and a calculator session."""

from ._core import (
    EvalError,
    Multivector,
    ParseError,
    Session,
    Signature,
    blade_product,
    euclidean,
    from_mv,
    geometric_product,
    grassmann,
    left_contraction,
    load,
    parse,
    power,
    random_multivector,
    render,
    right_contraction,
    save,
    to_mv,
    wedge,
)

as_1vector = Multivector.as_1vector
basis = Multivector.basis

__all__ = [
    "EvalError",
    "Multivector",
    "ParseError",
    "Session",
    "Signature",
    "as_1vector",
    "basis",
    "blade_product",
    "euclidean",
    "from_mv",
    "geometric_product",
    "grassmann",
    "left_contraction",
    "load",
    "parse",
    "power",
    "random_multivector",
    "render",
    "right_contraction",
    "save",
    "to_mv",
    "wedge",
]
