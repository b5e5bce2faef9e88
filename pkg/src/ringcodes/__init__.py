"""Two-dimensional minimal linear codes over Z/p^n: construction and
brute-force verification."""

__version__ = "0.1.0"

from .codes import (
    Codeword,
    GeneratorMatrix,
    LinearCode,
    MinimalityReport,
    covers,
    enumerate_code,
    hamming_distance,
    hamming_weight,
    is_minimal_code,
    is_minimal_codeword,
    one_dim_minimal_check,
    support,
)
from .construction import (
    ColumnKind,
    DemoName,
    ScalingVector,
    build_G,
    build_G_omitted,
    build_G_scaled,
    canonical_blocks,
    demo_matrix,
    from_text,
    inverse_scaling,
    shuffle_columns,
    to_text,
)
from .errors import (
    EnumerationCapError,
    InvalidModulusError,
    MatrixFormatError,
    MembershipError,
    NoValuationError,
    NotInvertibleError,
    OmissionViolatedError,
    RingCodesError,
    ShapeError,
    UnsupportedRingError,
    WrongClassError,
    ZeroCodewordError,
)
from .ring import (
    ElementClass,
    RingSpec,
    Valuation,
    additive_partner,
    classify,
    inv,
    make_ring,
    neg_unit_partner,
    units,
    valuation,
    zero_divisors,
)
from .structure import (
    LemmaId,
    LemmaReport,
    PairDecomposition,
    PairKind,
    classify_pair,
    unit_orbit,
    verify_all,
    verify_unique_additive_partner,
    verify_unique_neg_partner,
    verify_unit_orbit,
    verify_unit_zd_sum,
    verify_zd_closure,
    verify_zd_translates,
    zd_translates,
)
