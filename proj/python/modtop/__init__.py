"""Structure spaces of finite modules over Z/nZ.

Thin re-export of the compiled core: submodule lattices, distinguished
submodule classes, topological reports, and the statement verification suite.
"""

from ._core import (
    CapError,
    InputError,
    __version__,
    class_names,
    hom_report,
    space_report,
    submodules,
    verify,
)

__all__ = [
    "CapError",
    "InputError",
    "__version__",
    "class_names",
    "hom_report",
    "space_report",
    "submodules",
    "verify",
]
