#pragma once

#include <optional>

#include "mfk/decomposition.hpp"
#include "mfk/graded.hpp"

namespace mfk {

// A graded matrix factorization of a homogeneous f of degree d >= 2:
// phi: G -> F and psi: F(-d) -> G with phi*psi = psi*phi = f * id.
// Builders produce valid, reduced factorizations; verify() re-checks any
// instance, including ones deserialized from disk.
struct MatrixFactorization {
    Polynomial f;
    GradedMatrix phi;
    GradedMatrix psi;

    std::size_t rank() const { return phi.target().rank(); }

    MatrixFactorization extended(std::uint32_t new_num_vars) const {
        return {f.extended(new_num_vars), phi.extended(new_num_vars),
                psi.extended(new_num_vars)};
    }
};

struct VerificationReport {
    bool products_ok = false;
    bool graded_ok = false;
    bool reduced_ok = false;
    bool ok() const { return products_ok && graded_ok && reduced_ok; }

    struct Witness {
        std::string check;   // "products" | "graded" | "reduced" | "twists"
        std::string where;   // "phi" | "psi" | "phi*psi" | "psi*phi"
        std::size_t row = 0, col = 0;
        std::string expected;
        std::string actual;
    };
    std::optional<Witness> witness; // first violation found
};

// Checks both products against f * id, the twist contract between phi and
// psi, entry-wise grading, and the absence of constant terms.
VerificationReport verify(const MatrixFactorization& mf);

// One Knoerrer step: from a factorization of f and a product g*h of matching
// total degree, the rank-doubled factorization of f + g*h.
MatrixFactorization tensor_step(const MatrixFactorization& mf, const Polynomial& g,
                                const Polynomial& h);

// Iterated tensor_step over the pairs of D, starting from the 1x1
// factorization (g0), (h0).  Rank 2^s for s+1 pairs.
MatrixFactorization knorrer_build(const StrengthDecomposition& D);

// det(phi) = c * f^r for a matrix factorization with irreducible f; returns
// (r, c) without normalizing c.  Errors when det(phi) has a different shape.
struct McmRank {
    std::uint32_t r;
    Scalar c;
};
McmRank mcm_rank_of(const MatrixFactorization& mf);

// The generic n x n matrix (variables x_{i,j}, row-major) paired with its
// adjugate: a rank-n factorization of the degree-n determinant.  2 <= n <= 5.
MatrixFactorization adjugate_mf(std::uint32_t n);

// The generic skew-symmetric n x n matrix (variables x_{i,j}, i < j) paired
// with its Pfaffian adjoint: a rank-n factorization of the degree-n/2
// Pfaffian.  n in {4, 6}.
MatrixFactorization pfaffian_mf(std::uint32_t n);

// Pfaffian of a skew-symmetric polynomial matrix of even size, by recursive
// expansion along the first row.
Polynomial pfaffian(const std::vector<std::vector<Polynomial>>& m, Field k,
                    std::uint32_t num_vars);

// Names x11, x12, ..., xnn for the generic matrix families.
std::vector<std::string> matrix_variable_names(std::uint32_t n);
// Names x12, x13, ..., x{n-1}{n} for the skew families.
std::vector<std::string> skew_variable_names(std::uint32_t n);

} // namespace mfk
