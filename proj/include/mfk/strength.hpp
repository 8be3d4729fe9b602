#pragma once

#include <optional>
#include <vector>

#include "mfk/decomposition.hpp"
#include "mfk/ideal.hpp"

namespace mfk {

// Singular-locus invariants of a homogeneous hypersurface f of degree >= 2.
// jacobian_codim_R is the codimension, in the ambient polynomial ring, of the
// ideal generated by all partial derivatives of f together with f itself;
// sing_codim_hypersurface is one less (the codimension of the singular locus
// inside the hypersurface).
struct SingularityProfile {
    Polynomial f;
    std::size_t jacobian_codim_R = 0;
    std::size_t sing_codim_hypersurface = 0;
    long e = 0;               // floor((sing_codim_hypersurface - 2) / 2)
    long strength_lower = 0;  // ceil((sing_codim_hypersurface - 1) / 2)
};

SingularityProfile singularity_profile(const Polynomial& f);

// A strength value that may be infinite (linear forms admit no decomposition
// into products of positive-degree factors).
struct StrengthBound {
    bool infinite = false;
    long value = 0; // meaningful only when !infinite

    static StrengthBound inf() { return {true, 0}; }
    static StrengthBound of(long v) { return {false, v}; }
    std::string to_string() const;
    bool operator==(const StrengthBound& o) const {
        return infinite == o.infinite && (infinite || value == o.value);
    }
};

// Certified lower bound on the collective strength of a tuple of forms: the
// codimension c of the ideal of maximal minors of their Jacobian matrix
// certifies collective strength >= ceil(c/2) - 1.  A degree-1 entry makes the
// collective strength infinite outright (no minors ideal is computed).
struct StrengthCertificate {
    std::vector<Polynomial> polys;
    std::optional<std::size_t> minors_codim; // absent on the infinite branch
    StrengthBound certified_collective_lower;
};

StrengthCertificate collective_strength_certificate(const std::vector<Polynomial>& fs);

// Certified lower bound on the secondary strength of f from one exhibited
// decomposition: the collective-strength certificate of (g0..gs, h0..hs).
StrengthCertificate secondary_strength_bound(const StrengthDecomposition& D);

// Exact strength of a nonzero quadratic form away from characteristic 2:
// ceil(rank/2) - 1 where rank is the rank of the associated symmetric
// bilinear form.
long quadric_strength(const Polynomial& q);

// Consistency report for one decomposition f = sum g_i h_i with s+1 summands
// against the singular-locus invariant e(f): always s >= e + 1, with the
// rank thresholds 2^{e+1} (matrix factorizations) and 2^e (MCM modules),
// clamped below at 1.
struct GapReport {
    Polynomial f;
    std::size_t s = 0;
    SingularityProfile profile;
    bool consistent = false; // s >= e + 1
    long mf_threshold = 1;   // max(2^{e+1}, 1)
    long mcm_threshold = 1;  // max(2^e, 1)
};

GapReport e_s_gap_check(const StrengthDecomposition& D);

// Integer division helpers that round toward -infinity / +infinity even for
// negative numerators (C++ / truncates toward zero).
long floor_div(long a, long b);
long ceil_div(long a, long b);

} // namespace mfk
