"""Application constants."""

# Variable order for exponent vectors and canonical term ordering
VARIABLES = ("u", "v", "t", "q")
VARIABLE_INDEX = {name: i for i, name in enumerate(VARIABLES)}

# Exit codes
EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_UNSUPPORTED = 3

# CLI spellings
INVARIANT_CHOICES = ("ie", "ip", "p", "e-t", "ie-var", "ip-var", "euler")
GROUP_CHOICES = ("sl2", "pgl2", "gl2")
SIDE_CHOICES = ("betti", "dolbeault")
FORMAT_CHOICES = ("text", "json", "csv", "latex")
SUITE_CHOICES = ("palindromy", "purity", "tables", "identities", "expansion", "all")
TABLE_CHOICES = ("ie-sl2", "ip-sl2", "ip-minus-p", "euler")

# Genus limits
MIN_GENUS = 2
DEFAULT_MAX_GENUS = 16
CORRECTION_EXPANSION_MIN_GENUS = 6
CORRECTION_EXPANSION_ORDER = 6

# Golden tables shipped with the package
GOLDEN_TABLES_FILENAME = "golden_tables.yaml"
