"""
Gabra — Configuration
All tuneable parameters in one place.
"""
import os
from dotenv import load_dotenv

load_dotenv()

# === Environment ===
GABRA_CAP_RAW = os.getenv("GABRA_CAP", "")
LOG_LEVEL = os.getenv("GABRA_LOG_LEVEL", "WARNING").upper()
DEFAULT_SEED = int(os.getenv("GABRA_SEED", "20240917"))

# === Size Guards ===
# Largest set the closure / enumeration code may build.
# 2**24 members keeps worst-case memory around 1 GiB at |G| = 16, p = 2.
DEFAULT_CAP = 2 ** 24

# Cayley tables above this order are refused (exhaustive O(n^3) axiom check).
MAX_GROUP_ORDER = 64

# === Sweep ===
SWEEP_MAX_ORDER = 16
SWEEP_CONCURRENCY = 4

# Row order of `sweep`, per prime. Only specs of order <= SWEEP_MAX_ORDER.
SWEEP_CATALOG = {
    2: [
        "c2", "c4", "elem2e2", "c8", "c4xc2", "elem2e3", "d8", "q8",
        "c16", "c8xc2", "c4xc4", "c4xc2xc2", "elem2e4", "d8xc2", "q8xc2", "d16",
    ],
    3: ["c3", "c9", "c3xc3", "elem3e2"],
}

# === Exit Statuses ===
EXIT_OK = 0
EXIT_BAD_INPUT = 2
EXIT_CAP_EXCEEDED = 3

# === Report Schema ===
# Stable field order of the JSON conjecture report.
JSON_FIELDS = [
    "group",
    "prime",
    "order_group",
    "order_V",
    "order_S",
    "order_H",
    "S_is_subgroup",
    "S_central",
    "H_symmetric",
    "conjecture_holds",
    "enumerated_V",
]


def resolve_cap(override: int | None = None) -> int:
    """Cap from an explicit override, else GABRA_CAP, else DEFAULT_CAP."""
    if override is not None:
        cap = override
    elif GABRA_CAP_RAW.strip():
        try:
            cap = int(GABRA_CAP_RAW)
        except ValueError:
            raise ValueError(f"GABRA_CAP must be an integer, got {GABRA_CAP_RAW!r}")
    else:
        cap = DEFAULT_CAP
    if cap < 1:
        raise ValueError(f"cap must be >= 1, got {cap}")
    return cap


# === Help ===

HELP_EPILOG = """Group specs: an atom or atoms joined by 'x' (case-insensitive).
  q8          quaternion group of order 8
  d8, d16     dihedral groups of order 8 and 16
  c{m}        cyclic group of prime-power order m (c2, c4, c9, ...)
  elem{p}e{k} elementary abelian group of order p^k
  e.g. c4xc2, q8xc2

Exit statuses: 0 computed, 2 bad input, 3 cap exceeded.
GABRA_CAP overrides the default cap of 2**24 set members."""
