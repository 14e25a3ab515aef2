"""
Transcoding tables between tree edge labels and nucleotides.

QUATERNARY is the fixed bijection used at unconstrained codeword positions.
GOLDMAN is the rotating ternary table: the row is the previously emitted
nucleotide and the three columns never repeat it.
"""

INITIAL_NUCLEOTIDE = "A"

QUATERNARY: tuple[str, ...] = ("A", "T", "C", "G")

GOLDMAN: dict[str, tuple[str, str, str]] = {
    "A": ("T", "C", "G"),
    "T": ("A", "C", "G"),
    "C": ("A", "T", "G"),
    "G": ("A", "T", "C"),
}

QUATERNARY_INVERSE: dict[str, int] = {nt: base for base, nt in enumerate(QUATERNARY)}

GOLDMAN_INVERSE: dict[str, dict[str, int]] = {
    prev: {nt: base for base, nt in enumerate(row)} for prev, row in GOLDMAN.items()
}
