"""The symplectic Weyl group and the Ekedahl-Oort stratification."""

from specorder.symplectic.eo import (
    EOStratum,
    EpsTuple,
    SignedPermView,
    build_symplectic,
    element_of_eps,
    element_of_view,
    eo_poset,
    eo_strata,
    eps_of,
    jw_bruhat,
    perm_view,
    sigma_of,
)

__all__ = [
    "EOStratum",
    "EpsTuple",
    "SignedPermView",
    "build_symplectic",
    "element_of_eps",
    "element_of_view",
    "eo_poset",
    "eo_strata",
    "eps_of",
    "jw_bruhat",
    "perm_view",
    "sigma_of",
]
