from ._wittmod import (
    DimensionError,
    DomainError,
    ObstructionError,
    OmegaModule,
    OverflowError,
    ParseError,
    Poly,
    StructuralViolation,
    SubspaceBasis,
    TruncationError,
    WittElement,
    bracket,
    extract_params,
    isomorphic,
    isomorphic_w,
    lowest_weight_check,
    member_w,
    quotient_dim,
    reducibility_index,
    sigma,
    sl_embed,
    w_basis,
    y_product,
)

__all__ = [name for name in dir() if not name.startswith("_")]
