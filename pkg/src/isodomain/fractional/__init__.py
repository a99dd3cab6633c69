from .perimeter import (
    FractionalConfig,
    frac_perimeter,
    frac_perimeter_local,
    gap,
    interaction,
    kernel_eval,
    lambda_constant,
    submodularity_residual,
    tail_mass,
)
from .pixels import PixelSet, read_pixelset, write_pixelset
from .table import PairTable, get_table

__all__ = [
    "FractionalConfig",
    "PairTable",
    "PixelSet",
    "frac_perimeter",
    "frac_perimeter_local",
    "gap",
    "get_table",
    "interaction",
    "kernel_eval",
    "lambda_constant",
    "read_pixelset",
    "submodularity_residual",
    "tail_mass",
    "write_pixelset",
]
