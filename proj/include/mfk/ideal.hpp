#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "mfk/polynomial.hpp"

namespace mfk {

// A reduced Groebner basis in the library-wide grevlex order: monic elements,
// no term of any element divisible by another element's leading monomial,
// sorted by descending leading monomial.
class GroebnerBasis {
public:
    GroebnerBasis(Field k, std::uint32_t num_vars, std::vector<Polynomial> elems)
        : field_(k), nvars_(num_vars), elems_(std::move(elems)) {}

    const Field& field() const { return field_; }
    std::uint32_t num_vars() const { return nvars_; }
    const std::vector<Polynomial>& elements() const { return elems_; }

private:
    Field field_;
    std::uint32_t nvars_;
    std::vector<Polynomial> elems_;
};

// An ideal given by a finite list of nonzero generators in a fixed ring.
// Zero generators are dropped at construction; an empty list is the zero
// ideal.  The Groebner basis is computed once on demand and shared.
class Ideal {
public:
    Ideal(Field k, std::uint32_t num_vars, std::vector<Polynomial> gens);

    const Field& field() const { return field_; }
    std::uint32_t num_vars() const { return nvars_; }
    const std::vector<Polynomial>& generators() const { return gens_; }

    Ideal extended(std::uint32_t new_num_vars) const;

    // Computed once, then shared between copies (compute-then-publish).
    const GroebnerBasis& groebner_basis() const;

private:
    struct Cache;
    Field field_;
    std::uint32_t nvars_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_;
};

// Remainder of full division by the basis elements, taken in basis order.
// Zero iff f lies in the ideal.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

// Krull dimension / codimension of R/I for a homogeneous proper ideal,
// via the maximal-independent-variable-subset criterion on the leading-term
// ideal.  Errors on the unit ideal; refuses rings beyond 20 variables.
long dimension(const Ideal& I);
long codimension(const Ideal& I);

// Ideal generated by all first partial derivatives of f.
Ideal jacobian_ideal(const Polynomial& f);

// Ideal of r x r minors of the Jacobian matrix (rows: the fs, columns: the
// variables).  Zero minors are dropped; all-zero means the zero ideal.
Ideal jacobian_minors_ideal(const std::vector<Polynomial>& fs, std::uint32_t r);

} // namespace mfk
