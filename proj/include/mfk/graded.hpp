#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mfk/polynomial.hpp"

namespace mfk {

// A graded free module, the direct sum of rank() twisted line summands; the
// i-th summand is the free rank-1 module generated in degree twists[i].
struct FreeModule {
    std::vector<long> twists;

    std::size_t rank() const { return twists.size(); }
    // The module M(c): every generator degree drops by c.
    FreeModule twisted(long c) const {
        FreeModule m = *this;
        for (long& t : m.twists) t -= c;
        return m;
    }
    static FreeModule direct_sum(const FreeModule& a, const FreeModule& b) {
        FreeModule m = a;
        m.twists.insert(m.twists.end(), b.twists.begin(), b.twists.end());
        return m;
    }
    bool operator==(const FreeModule& o) const { return twists == o.twists; }
    bool operator!=(const FreeModule& o) const { return !(*this == o); }
};

// Location and nature of the first failed matrix check, for error reporting.
struct GradingViolation {
    std::size_t row = 0, col = 0;
    std::string reason;
};

// A degree-0 map source -> target of graded free modules, stored as a
// target.rank() x source.rank() matrix of polynomials.  Entry (j, i) must be
// zero or homogeneous of degree source.twists[i] - target.twists[j]; builders
// maintain this and graded_violation() checks it (documents read from disk
// may violate it, which verification reports rather than throws).
class GradedMatrix {
public:
    GradedMatrix(Field k, std::uint32_t num_vars, FreeModule source, FreeModule target);

    const Field& field() const { return field_; }
    std::uint32_t num_vars() const { return nvars_; }
    const FreeModule& source() const { return src_; }
    const FreeModule& target() const { return tgt_; }
    std::size_t rows() const { return tgt_.rank(); }
    std::size_t cols() const { return src_.rank(); }

    const Polynomial& entry(std::size_t row, std::size_t col) const;
    void set_entry(std::size_t row, std::size_t col, Polynomial p);

    // Expected degree of entry (row, col).
    long entry_degree(std::size_t row, std::size_t col) const {
        return src_.twists[col] - tgt_.twists[row];
    }

    std::optional<GradingViolation> graded_violation() const;
    // First entry with a nonzero constant term, if any.
    std::optional<GradingViolation> constant_term_violation() const;

    static GradedMatrix identity(Field k, std::uint32_t num_vars, const FreeModule& m);
    // f * id as a map m.twisted(-deg f) -> m.
    static GradedMatrix scalar_map(const Polynomial& f, const FreeModule& m);
    // [[a, b], [c, d]] with compatible block shapes.
    static GradedMatrix block2x2(const GradedMatrix& a, const GradedMatrix& b,
                                 const GradedMatrix& c, const GradedMatrix& d);

    GradedMatrix operator-() const;
    bool operator==(const GradedMatrix& o) const;
    bool operator!=(const GradedMatrix& o) const { return !(*this == o); }

    GradedMatrix extended(std::uint32_t new_num_vars) const;

private:
    Field field_;
    std::uint32_t nvars_;
    FreeModule src_, tgt_;
    std::vector<Polynomial> e_; // row-major
};

// Matrix product a*b as a map b.source -> a.target; requires matching module
// twists at the interface.
GradedMatrix compose(const GradedMatrix& a, const GradedMatrix& b);

// Exact determinant: cofactor expansion up to 6x6, fraction-free elimination
// (Bareiss, divisions exact) up to 16x16, refused beyond (budget_error).
Polynomial determinant(const GradedMatrix& m);

// Schwartz-Zippel style check that det(M) = c * f^r for one consistent
// nonzero scalar c across all trials, evaluating at seeded random points.
// Points where f vanishes are re-drawn (bounded resampling budget).
struct RandomizedDetReport {
    bool ok;
    Scalar c;
    std::uint32_t trials;
};
RandomizedDetReport randomized_det_check(const GradedMatrix& m, const Polynomial& f,
                                         std::uint32_t r, std::uint32_t trials,
                                         std::uint64_t seed);

} // namespace mfk
