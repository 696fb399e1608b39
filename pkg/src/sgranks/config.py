"""Default size guards for the workbench.

Every search and constructor that can blow up takes an explicit override
parameter; these module constants are only the shared defaults. Guards
raise GuardError instead of silently truncating work.
"""

# Candidate-set budget for subset enumeration oracles (brute-force prime
# subset listing, generating-set and independence searches).
ORACLE_CANDIDATE_GUARD = 10_000_000

# Largest order accepted by the direct definition-based large-rank scan.
DIRECT_LARGE_RANK_MAX_ORDER = 14

# Largest order accepted by the exponential independence searches (r3, r4).
INDEPENDENCE_SEARCH_MAX_ORDER = 12

# Family constructor limits.
CYCLIC_MAX_ORDER = 2048
SYMMETRIC_MAX_DEGREE = 5
BRANDT_MAX_ORDER = 100_000
MONOGENIC_MAX_ORDER = 4096
FULL_TRANSFORMATION_MAX_DEGREE = 4
ORDER_PRESERVING_MAX_DEGREE = 8

# Checked-arithmetic ceiling for closed-form evaluation.
CLOSED_FORM_MAX_N = 30
INT64_MAX = 2**63 - 1
