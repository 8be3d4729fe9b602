#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mfk/decomposition.hpp"
#include "mfk/mf.hpp"

namespace mfk {

// A named example: the polynomial, an exhibited decomposition when the family
// carries one, an explicitly constructed matrix factorization when the family
// carries one, and a one-line description of where the family comes from.
struct CatalogEntry {
    std::string name;
    Field field;
    std::uint32_t num_vars = 0;
    std::vector<std::string> var_names; // empty -> default z0, z1, ...
    Polynomial f;
    std::optional<StrengthDecomposition> decomposition;
    std::optional<MatrixFactorization> mf;
    std::string provenance;

    CatalogEntry() : f(Field::rationals(), 0) {}
};

// Sum of (n+1) d-th powers z_0^d + ... + z_n^d.
Polynomial power_sum(std::uint32_t d, std::uint32_t n, Field k = Field::rationals());

// x_0*y_0 + ... + x_s*y_s as the decomposition (g_i, h_i) = (x_i, y_i) in
// 2s+2 variables (x block first).
StrengthDecomposition standard_quadric(std::uint32_t s, Field k = Field::rationals());

// F = sum_{i=0}^{s} x_i * p_i where p_i is the power sum of degree d-1 in its
// own block of n+1 variables y_{i,0..n}; (s+1) + (s+1)(n+1) variables total.
StrengthDecomposition block_power_sum(std::uint32_t d, std::uint32_t s, std::uint32_t n,
                                      Field k = Field::rationals());

// Pseudorandom strength decomposition of the given type in n+1 variables:
// deg g_i = mu[i], deg h_i = d - mu[i], sparse supports, deterministic under
// the seed.  Requires 1 <= mu[0] <= ... <= mu[s] <= d/2.
StrengthDecomposition sample_type_mu(const std::vector<long>& mu, std::uint32_t d,
                                     std::uint32_t n, Field k, std::uint64_t seed);

// Catalog entries for the named families.
CatalogEntry quadric_entry(std::uint32_t s);
CatalogEntry power_sum_entry(std::uint32_t d, std::uint32_t n);
CatalogEntry block_power_sum_entry(std::uint32_t d, std::uint32_t s, std::uint32_t n);
// Generic determinant with its adjugate factorization and the top-row
// Laplace decomposition (2 <= n <= 4).
CatalogEntry generic_matrix_det(std::uint32_t n);
// Generic Pfaffian with its adjoint factorization and the first-row
// expansion decomposition (n in {4, 6}).
CatalogEntry pfaffian_entry(std::uint32_t n);

// The fixed list of built-in instances used by reports and tests.
std::vector<CatalogEntry> builtin_catalog();

} // namespace mfk
