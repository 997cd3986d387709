"""
Configuration settings for the graphic Fourier transform verifier
"""
import os
from typing import Dict, Any, List

from dotenv import load_dotenv

# Environment overrides (.env is optional)
load_dotenv()

# Application settings
APP_NAME = "graphic-fourier"
VERSION = "0.1.0"
LOG_LEVEL = os.getenv("GFT_LOG_LEVEL", "WARNING")

# Reproducibility
DEFAULT_SEED = int(os.getenv("GFT_SEED", "20240601"))
RECORD_TIMINGS = os.getenv("GFT_RECORD_TIMINGS", "false").lower() in ("1", "true", "yes")

# Property testing over dimension vectors and morphism families
PROPERTY_TESTING: Dict[str, Any] = {
    "exhaustive_max_index": 3,       # enumerate {0,1,2}^m when m <= this
    "exhaustive_values": (0, 1, 2),
    "random_trials": 100,
    "random_max_dim": 5,
    "morphism_max_dim": 2,           # dims of random morphism families
    "morphism_entries": (-1, 0, 1, 2),
    "morphism_trials": 10,           # sampled objects for the morphism-level checks
}

# Regular morphism enumeration
REGULARITY: Dict[str, Any] = {
    "scalars": (0, 1, 2),
    "full_enumeration_limit": 729,  # families; above this enumerate class by class
    "random_families": 25,           # per class once classes outgrow full enumeration
}

# Wiener membership for fusion kernels
WIENER: Dict[str, Any] = {
    "max_solutions": 64,
}

# Generated corpus files
DATA_DIR = os.getenv("GFT_DATA_DIR", "data")
CORPUS_DIR = f"{DATA_DIR}/corpus"

# Symmetric group on three letters, behind gen:s3
S3_CAYLEY_TABLE: List[List[int]] = [
    # elements: e, r, r^2, s, sr, sr^2 (composition order: row then column)
    [0, 1, 2, 3, 4, 5],
    [1, 2, 0, 5, 3, 4],
    [2, 0, 1, 4, 5, 3],
    [3, 4, 5, 0, 1, 2],
    [4, 5, 3, 2, 0, 1],
    [5, 3, 4, 1, 2, 0],
]

# Acceptance corpus, as generator specs
CORPUS: Dict[str, List[str]] = {
    "schemes": (
        [f"gen:cyclic:{n}" for n in range(1, 9)]
        + ["gen:hamming:2,2", "gen:hamming:3,2", "gen:hamming:2,3", "gen:johnson:5,2", "gen:s3"]
    ),
    "fusion": ["gen:fibonacci", "gen:ising"] + [f"gen:zn:{n}" for n in range(1, 7)],
}

# Unweighted cyclic relation needs equal valencies; these schemes have classes of valency > 1
EXPECTED_CORPUS_FAILURES: Dict[str, List[str]] = {
    spec: ["compact"] for spec in ("gen:hamming:2,2", "gen:hamming:3,2", "gen:hamming:2,3", "gen:johnson:5,2")
}

# Canonical check order per kind
SCHEME_CHECK_ORDER = [
    "validate",
    "intersection-numbers",
    "prounit-laws",
    "valency",
    "bose-mesner",
    "proassociativity",
    "precompact",
    "compact",
    "compact-weighted",
    "multiplicative",
    "unit-preserved",
    "conservative",
    "adjunction-triangles",
    "star-preserved",
    "regularity-characterization",
    "regular-closure",
    "wiener-round-trip",
    "dual-comparison",
]

FUSION_CHECK_ORDER = [
    "validate",
    "fusion-tensor",
    "fusion-algebra",
    "proassociativity",
    "cyclic",
    "unit-dual",
    "braiding",
    "closed",
    "multiplicative",
    "unit-preserved",
    "conservative",
    "adjunction-triangles",
    "star-preserved",
    "wiener-round-trip",
    "dual-comparison",
]


def get_data_directories() -> List[str]:
    """Ensure data directories exist"""
    dirs = [DATA_DIR, CORPUS_DIR]
    for dir_path in dirs:
        os.makedirs(dir_path, exist_ok=True)
    return dirs
