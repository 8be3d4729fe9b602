#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mfk/field.hpp"
#include "mfk/monomial.hpp"

namespace mfk {

struct Term {
    Monomial mono;
    Scalar coef;
};

// Result of a homogeneity check.  The zero polynomial is homogeneous of every
// degree, which matters when grading matrix entries.
struct Homogeneity {
    bool homogeneous = false;
    bool any_degree = false; // zero polynomial
    long degree = 0;

    bool compatible_with(long d) const {
        return homogeneous && (any_degree || degree == d);
    }
};

// A multivariate polynomial over a fixed Field in a ring with a fixed number
// of variables.  Terms are kept sorted in descending grevlex order with
// nonzero coefficients, so equal polynomials have identical representations.
class Polynomial {
public:
    Polynomial(Field k, std::uint32_t num_vars) : field_(k), nvars_(num_vars) {
        if (num_vars > kMaxVars)
            throw budget_error("ring has " + std::to_string(num_vars) +
                               " variables; the cap is " + std::to_string(kMaxVars));
    }

    static Polynomial zero(Field k, std::uint32_t num_vars) { return Polynomial(k, num_vars); }
    static Polynomial constant(Field k, std::uint32_t num_vars, const Scalar& c);
    static Polynomial variable(Field k, std::uint32_t num_vars, std::uint32_t i);
    static Polynomial monomial(Field k, const Monomial& m, const Scalar& c);
    // Sorts, merges and drops zero terms.
    static Polynomial from_terms(Field k, std::uint32_t num_vars, std::vector<Term> terms);

    const Field& field() const { return field_; }
    std::uint32_t num_vars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }

    // Total degree; -1 for the zero polynomial.
    long degree() const;
    const Term& leading_term() const;

    Homogeneity homogeneity() const;
    bool is_homogeneous() const { return homogeneity().homogeneous; }
    // Coefficient of the degree-0 monomial.
    Scalar constant_term() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scaled(const Scalar& c) const;
    Polynomial times_monomial(const Monomial& m, const Scalar& c) const;

    Polynomial partial_derivative(std::uint32_t i) const;
    Scalar evaluate(const std::vector<Scalar>& point) const;
    Polynomial extended(std::uint32_t new_num_vars) const;

    // Exact quotient this/b, or nullopt when b does not divide this.
    std::optional<Polynomial> divided_by(const Polynomial& b) const;

    // Divides rational coefficients by their content (gcd of numerators over
    // lcm of denominators, sign of the leading term) giving a primitive
    // integer polynomial; over F_p makes the polynomial monic.  No-op on 0.
    Polynomial primitive_part() const;
    Polynomial monic() const;

    Polynomial pow(std::uint32_t k) const;

    // Canonical text form; names defaults to z0, z1, ...
    std::string to_string() const;
    std::string to_string(const std::vector<std::string>& names) const;

private:
    void check_compatible(const Polynomial& o) const;

    Field field_;
    std::uint32_t nvars_;
    std::vector<Term> terms_; // descending grevlex
};

} // namespace mfk
