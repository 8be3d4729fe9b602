#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "mfk/errors.hpp"

namespace mfk {

// Coefficient field: the rationals (p == 0) or a prime field F_p, p < 2^31.
class Field {
public:
    Field() : p_(0) {}

    static Field rationals() { return Field(); }
    static Field prime(std::uint32_t p);

    // Parses "Q" or "Fp:<p>".
    static Field from_name(const std::string& name);

    bool is_rational() const { return p_ == 0; }
    std::uint32_t characteristic() const { return p_; }
    std::string name() const;

    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return p_ != o.p_; }

private:
    std::uint32_t p_;
};

// An element of a Field.  Rational values are kept canonical (lowest terms,
// positive denominator) by GMP; prime-field values are residues in [0, p).
class Scalar {
public:
    Scalar() : field_(), v_(mpq_class(0)) {}

    static Scalar zero(const Field& k);
    static Scalar one(const Field& k);
    static Scalar of_int(const Field& k, long n);
    static Scalar of_mpz(const Field& k, const mpz_class& n);
    // The value a/b; over F_p this means a * b^{-1} and requires p not | b.
    static Scalar fraction(const Field& k, const mpz_class& a, const mpz_class& b);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    // Rational value; only valid over Q.
    const mpq_class& rational() const;
    // Residue in [0, p); only valid over F_p.
    std::uint64_t residue() const;

    // True for rationals with negative sign (used for printing).  Always
    // false over F_p.
    bool is_negative() const;

    std::string to_string() const;

private:
    Scalar(Field k, mpq_class q) : field_(k), v_(std::move(q)) {}
    Scalar(Field k, std::uint64_t r) : field_(k), v_(r) {}
    void check_same_field(const Scalar& o) const;

    Field field_;
    std::variant<mpq_class, std::uint64_t> v_;
};

} // namespace mfk
