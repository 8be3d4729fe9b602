#pragma once

#include "mfk/mf.hpp"

namespace mfk {

struct SearchResult {
    std::optional<MatrixFactorization> found;
    std::uint64_t candidates_tried = 0;
    // True when the whole candidate space was enumerated without a hit.
    bool exhaustive = false;
};

// Exhaustive search for a reduced matrix factorization of f over a small
// prime field with the given degree pattern (source/target twists for phi).
// Every coefficient assignment for phi is enumerated in a fixed canonical
// order (entries row-major, monomials in descending grevlex, trailing
// coefficient varies fastest); for each phi a partner psi is solved for
// column-wise by linear algebra over F_p.  The first verified factorization
// is returned.
//
// Scope: p <= 3, at most 4 variables, rank <= 2, total coefficient space at
// most 2^30 candidates (budget_error beyond).
SearchResult search_reduced_mf(const Polynomial& f, const FreeModule& target,
                               const FreeModule& source);

} // namespace mfk
