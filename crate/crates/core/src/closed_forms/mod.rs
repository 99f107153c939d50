//! Closed-form results for minimal cages: shell and distance polynomials,
//! exact spectra, and the distance structure of the subdivision graph.

mod coefficients;
mod polynomials;
mod spectra;
mod subdivision;

pub use coefficients::{coefficient_table, CoefficientTable};
pub use polynomials::{
    distance_polynomial, printed_bound_diagnostic, printed_distance_polynomial, printed_even_polynomial,
    shell_polynomials, shell_polynomials_closed, shell_polynomials_recurrence, BoundDiagnostic,
    DistancePolynomial, ShellPolynomial, SumBound,
};
pub(crate) use polynomials::ensure_formula_ok;
pub use spectra::{
    cage_adjacency_spectrum, cage_distance_spectrum, distinct_count, dr_radius, known_distance_spectrum,
    printed_distance_spectrum, trace_is_zero,
};
pub use subdivision::{
    equidistance_matrix, max_distance_indicator, printed_half_blocks, printed_subdivision_char_poly,
    printed_subdivision_radius, s_prime_closed, s_prime_sums, sub_complete_bipartite_spectrum,
    sub_complete_spectrum, subdivision_distance_blocks, subdivision_quotient, subdivision_radius, Parity,
    SubdivisionQuotient,
};
