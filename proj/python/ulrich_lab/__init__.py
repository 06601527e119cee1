"""Exact numerics of Ulrich bundles and their iterated syzygies on del Pezzo surfaces."""

from ._core import (
    BundleNumerics,
    DelPezzoSurface,
    DivisorClass,
    NumericClassData,
    PolarizedData,
    UlrichLabError,
    butler_semistability_criterion,
    chi_pair_closed_form,
    chi_pair_oracle,
    cink_chern,
    coprime_stability_criterion,
    cubic_moduli_pair,
    curve_section_genus,
    decompose_stable_sum,
    direct_sum,
    discriminant,
    discriminant_drift,
    dual,
    euler_char,
    expected_moduli_dim,
    intersect,
    intro_chern,
    is_twisted_cubic,
    is_ulrich_candidate,
    iterate_syzygy,
    koszul_criterion,
    line_bundle,
    numeric_data,
    polarization,
    prioritary_polarization_check,
    rank_by_recurrence,
    rank_closed_form,
    run_checks,
    run_command,
    slope,
    syzygy_numerics,
    tensor,
    tensor_line,
    twisted_cubics,
    ulrich_c2,
)

__version__ = "0.1.0"


def parse_divisor(text, surface=None):
    """Parse "(a;b1,...,bt)", optionally checking the arity against a surface."""
    if surface is None:
        return DivisorClass.parse(text)
    return surface.parse(text)


__all__ = [name for name in dir() if not name.startswith("_")]
