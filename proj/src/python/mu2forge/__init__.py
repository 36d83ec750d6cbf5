"""Second-order lambda-mu kernel: CPS translation, canonical forms, free theorems.

Terms and types are passed as text; contexts are dicts from names to types.
"""

from ._mu2forge import (
    KernelError,
    acceptance,
    catalog,
    cps,
    eq,
    focal_check,
    free_theorem,
    normalize,
    typecheck,
    uncps,
)

__all__ = [
    "KernelError",
    "acceptance",
    "catalog",
    "cps",
    "eq",
    "focal_check",
    "free_theorem",
    "normalize",
    "typecheck",
    "uncps",
]
