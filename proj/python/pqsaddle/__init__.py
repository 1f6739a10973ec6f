"""Saddle quantities, formal first integrals and Groebner bases for p:-q resonant saddles."""

from ._core import (
    InputError,
    RunReport,
    SystemFileError,
    eliminate,
    groebner,
    implicitize,
    integral,
    membership,
    normal_form,
    quantities,
    quantity_membership,
    reduced_groebner_basis,
    reversible,
    saddle_quantities,
    sibirsky,
)

__all__ = [
    "InputError",
    "RunReport",
    "SystemFileError",
    "eliminate",
    "groebner",
    "implicitize",
    "integral",
    "membership",
    "normal_form",
    "quantities",
    "quantity_membership",
    "reduced_groebner_basis",
    "reversible",
    "saddle_quantities",
    "sibirsky",
]
