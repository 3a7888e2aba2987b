# Environment variable names
ENV_SETTINGS_SOURCE = "COCG_SETTINGS_SOURCE"
ENV_SETTINGS_FILE = "COCG_SETTINGS_FILE"
ENV_MATCH_TOLERANCE = "COCG_TOL"
ENV_SWEEP_TOLERANCE = "COCG_SWEEP_TOL"
ENV_EXACT_DIMENSION_CAP = "COCG_EXACT_CAP"
ENV_PARALLELISM = "COCG_PARALLELISM"
ENV_REPORT_DIRECTORY = "COCG_REPORT_DIR"
ENV_SCAN_CROSS_CHECK_ORDER = "COCG_SCAN_MAX_ORDER"
ENV_CAYLEY_TABLE_MAX_ORDER = "COCG_CAYLEY_MAX_ORDER"

# Defaults
DEFAULT_SETTINGS_SOURCE = "ENVIRONMENT"
DEFAULT_SETTINGS_FILE = "cocentralizer.settings.txt"
DEFAULT_MATCH_TOLERANCE = 1e-8
DEFAULT_SWEEP_TOLERANCE = 1e-12
DEFAULT_EXACT_DIMENSION_CAP = 128
DEFAULT_SCAN_CROSS_CHECK_ORDER = 5000
DEFAULT_CAYLEY_TABLE_MAX_ORDER = 2000
DEFAULT_JACOBI_MAX_SWEEPS = 100

# GF(2^k) degree bounds
MIN_FIELD_DEGREE = 1
MAX_FIELD_DEGREE = 16

# Associativity sampling
ASSOCIATIVITY_SAMPLE_TRIPLES = 1000
ASSOCIATIVITY_FULL_CHECK_ORDER = 200

# Indeterminate used in polynomial text forms
POLY_VARIABLE = "λ"
