__name__ = "lnalg"
__version__ = "0.1.0-dev"
__author__ = "the lnalg developers"
__description__ = (
    "lnalg is an open-source python library for exact computations with Lie "
    "n-algebras and their homotopy theory."
)
__credits__ = [
    "the lnalg developers",
]
