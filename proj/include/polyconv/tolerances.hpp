#ifndef POLYCONV_TOLERANCES_HPP
#define POLYCONV_TOLERANCES_HPP

namespace polyconv {

// Every numeric threshold used by the library, with its default value.
// Each public operation accepts an optional override of this record.
struct Tolerances {
    // root finding
    int    aberth_max_iterations = 200;
    double root_cluster_radius = 1e-6;       // cluster radius for multiplicity detection
    double root_multiplicity_confirm = 1e-6; // x max|coeff|: derivative vanishing bound
    double root_residual_contract = 1e-8;    // x max|coeff|: polished residual contract

    // contour winding
    double curve_origin_guard = 1e-12;       // |sample| below this -> curve through origin

    // planes
    double totally_real_det = 1e-10;         // |det of normalized basis| below -> not totally real
    double transverse_det = 1e-10;           // singular imaginary-part map / A1-A2
    double eigen_discriminant = 1e-10;       // distinct-real-eigenvalue gate
    double factorability_rel = 1e-9;         // relative residual for a2^2 = 3 a1 a3
    double cubic_leading_min = 1e-12;        // |a3| must exceed this
    double pullback_residual = 1e-9;         // contract for verify_pullback
    double branch_parameter_band = 1e-12;    // excludes t = 1 in branch lifts

    // invariants / Omega membership
    double omega_commutator = 1e-10;
    double omega_spectral_separation = 1e-8;
    double omega_spectral_i_distance = 1e-8;
    double identity_rel = 1e-10;             // algebraic identity agreement, relative

    // convexity decisions
    double weinstock_band = 1e-9;            // pair test strictness band
    double band_edge = 1e-12;                // family band boundary comparisons

    // analysis
    double maslov_circle_margin = 1e-6;      // roots of q this close to |z|=1 are rejected
    double singularity_circle_floor = 1e-12; // min |dp/dzbar| on circle, scaled
    double circle_modulus_band = 1e-8;       // |.|-1 band for circle preimage filters
    double coincidence_newton_residual = 1e-12;
    double coincidence_jacobian_min = 1e-10;
    double coincidence_dedupe = 1e-6;
    double arc_gap_slack = 1e-9;
    double laplacian_imag_residue = 1e-10;
    double subharmonic_floor = 1e-9;         // min Laplacian >= -floor
    double harmonic_window_excess = 1e-9;    // window max must exceed +this
    double fd_step_scale = 1e-4;             // finite-difference step = scale * radius
    double fd_rel_agreement = 1e-4;
    int    curve_default_samples = 4096;

    // certificates
    double kallin_violation = 1e-9;
    double kallin_zero_fiber_value = 1e-9;
    double kallin_zero_fiber_distance = 1e-6;
    double hypothesis_zero_band = 1e-10;     // |det| treated as zero in hypothesis gates

    unsigned default_seed = 42;
};

inline const Tolerances& default_tolerances() {
    static const Tolerances tol{};
    return tol;
}

} // namespace polyconv

#endif
