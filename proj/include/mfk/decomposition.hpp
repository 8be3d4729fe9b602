#pragma once

#include <vector>

#include "mfk/polynomial.hpp"

namespace mfk {

// A presentation f = sum of gs[i] * hs[i] with s+1 homogeneous summand pairs,
// every factor of degree between 1 and d-1.  Normal form: within each pair
// deg g <= deg h, pairs sorted by ascending deg g (stable), so mu() is the
// sorted type vector and mu()[i] <= d/2.
class StrengthDecomposition {
public:
    static StrengthDecomposition make(std::vector<Polynomial> gs, std::vector<Polynomial> hs);

    const Field& field() const { return gs_[0].field(); }
    std::uint32_t num_vars() const { return gs_[0].num_vars(); }
    const std::vector<Polynomial>& gs() const { return gs_; }
    const std::vector<Polynomial>& hs() const { return hs_; }

    // Number of summands minus one: the strength witnessed by this
    // presentation.
    std::size_t s() const { return gs_.size() - 1; }
    long total_degree() const { return gs_[0].degree() + hs_[0].degree(); }
    std::vector<long> mu() const;

    Polynomial f() const;

    StrengthDecomposition extended(std::uint32_t new_num_vars) const;

private:
    StrengthDecomposition() = default;
    std::vector<Polynomial> gs_, hs_;
};

} // namespace mfk
