from .ac_table import ac_frequency_source, load_ac_table
from .gaussian import empirical_table, gaussian_bin_probabilities, gaussian_quantized_source, quantize

__all__ = [
    "ac_frequency_source",
    "load_ac_table",
    "empirical_table",
    "gaussian_bin_probabilities",
    "gaussian_quantized_source",
    "quantize",
]
