#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mfk/errors.hpp"

namespace mfk {

// Hard desk-scale caps of the dense exponent representation.
inline constexpr std::uint32_t kMaxVars = 24;
inline constexpr std::uint32_t kMaxExponent = 255;

// A monomial in a ring with a fixed number of variables, stored as a dense
// exponent vector.  All comparisons use graded reverse lexicographic order
// with z0 > z1 > ... (the library-wide term order).
class Monomial {
public:
    explicit Monomial(std::uint32_t num_vars);

    static Monomial variable(std::uint32_t num_vars, std::uint32_t i, std::uint32_t exp = 1);

    std::uint32_t num_vars() const { return n_; }
    std::uint32_t exponent(std::uint32_t i) const;
    void set_exponent(std::uint32_t i, std::uint32_t e);
    long degree() const;
    bool is_constant() const { return degree() == 0; }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;       // this | o
    Monomial divided_into(const Monomial& o) const; // o / this
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool coprime(const Monomial& o) const;

    // Padding with zero exponents; shrinking below the support is an error.
    Monomial extended(std::uint32_t new_num_vars) const;

    // grevlex: higher total degree wins; ties go to the monomial with the
    // smaller exponent at the last position where they differ.
    static int compare(const Monomial& a, const Monomial& b);
    bool operator==(const Monomial& o) const;
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    std::size_t hash() const;

    // Bitmask of variables with positive exponent.
    std::uint32_t support_mask() const;

private:
    std::array<std::uint8_t, kMaxVars> e_;
    std::uint32_t n_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// All monomials of the given total degree, in descending grevlex order.
std::vector<Monomial> monomials_of_degree(std::uint32_t num_vars, long degree);

} // namespace mfk
