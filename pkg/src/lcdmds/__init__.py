"""LCD MDS codes from Fourier matrices over finite fields."""

from .codec import DecodeReport, decode, encode, syndromes
from .construction import (
    CodeSpec,
    LinearCode,
    PlanResult,
    RowSelection,
    build_code,
    count_constructions,
    dual_code,
    enumerate_constructions,
    lcd_certificate,
    plan_dim_capability,
    plan_family,
    plan_prime_family,
    plan_rate_capability,
    select,
    select_even_odd_n,
    select_symmetric_odd,
)
from .errors import DomainError, InternalError, LcdMdsError, ResourceError, UsageError
from .finite_field import (
    FieldElement,
    FieldSpec,
    RootOfUnity,
    element_of_order,
    field_with_root,
    find_modulus,
    multiplicative_order,
    primitive_element,
    smallest_extension,
    smallest_prime_field,
)
from .fourier import FourierMatrix, dual_row_index

__version__ = "0.1.0"
