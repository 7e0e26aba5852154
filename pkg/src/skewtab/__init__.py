"""skewtab: exact counting, bounds and finite-scale asymptotics for standard
Young tableaux of skew shape."""

from .shapes import (
    Cell,
    Partition,
    ShapeFamily,
    ShapeParseError,
    SkewShape,
    column_ribbon,
    inverted_hook,
    inverted_thick_hook,
    parse_shape,
    regev_vershik_shape,
    shape_text,
    slim_stripe,
    square_shape,
    staircase,
    thick_ribbon,
    zigzag,
)
from .errors import CapExceeded
from .exact import (
    brute_force_count,
    catalan,
    double_superfactorial,
    dual_hook_products,
    euler_number,
    factorials,
    hlf_count,
    jacobi_trudi_count,
    lr_coefficient,
    naive_hlf,
    odd_double_factorial,
    rv_hook_identity_check,
    schur_principal,
    super_doublefactorial,
    superfactorial,
)
from .excited import (
    PathFamily,
    border_strip_decomposition,
    enumerate_excited,
    flagged_tableaux_count,
    is_excited_diagram,
    macmahon_xi,
    macmahon_xi_superfactorial,
    min_max_term,
    nhlf_count,
    paths_from_diagram,
    proctor_xi,
    proctor_xi_superfactorial,
    row_flags,
    slim_xi_checks,
    xi_bounds,
    xi_determinant,
)
from .bounds import (
    BoundsReport,
    ChainDecomposition,
    antidiagonal_chains,
    binom_lemma_check,
    bounds_report,
    chain_upper,
    compare_check,
    hp_lower,
    main_sandwich,
    rank_factorial_lower,
    skew_lr_upper,
    upper_ideal_sizes,
)
from .asymptotics import (
    BandConstants,
    StableShape,
    TvkData,
    band_constants,
    corner_constants,
    family_report,
    family_row,
    hook_integral,
    log_factorial_family,
    ribbon_rho_terms,
    second_order_constant,
    subpoly_report,
    tvk_constant,
    tvk_skew_shape,
    unit_box_log_integral,
)

__version__ = "0.1.0"
