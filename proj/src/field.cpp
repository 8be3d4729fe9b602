#include "mfk/field.hpp"

namespace mfk {

namespace {

bool is_prime_u32(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Residue inverse by extended Euclid.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    long long t = 0, newt = 1;
    long long r = (long long)p, newr = (long long)a;
    while (newr != 0) {
        long long q = r / newr;
        t -= q * newt;
        std::swap(t, newt);
        r -= q * newr;
        std::swap(r, newr);
    }
    if (r != 1) throw domain_error("element has no inverse mod " + std::to_string(p));
    if (t < 0) t += (long long)p;
    return (std::uint64_t)t;
}

} // namespace

Field Field::prime(std::uint32_t p) {
    if (p >= (1u << 31) || !is_prime_u32(p))
        throw domain_error("field characteristic must be a prime below 2^31, got " +
                           std::to_string(p));
    Field k;
    k.p_ = p;
    return k;
}

Field Field::from_name(const std::string& name) {
    if (name == "Q") return rationals();
    if (name.rfind("Fp:", 0) == 0) {
        const std::string digits = name.substr(3);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw domain_error("bad field name '" + name + "'");
        unsigned long p = std::stoul(digits);
        if (p >= (1ul << 31)) throw domain_error("field characteristic too large in '" + name + "'");
        return prime((std::uint32_t)p);
    }
    throw domain_error("bad field name '" + name + "' (expected Q or Fp:<p>)");
}

std::string Field::name() const {
    return is_rational() ? "Q" : "Fp:" + std::to_string(p_);
}

Scalar Scalar::zero(const Field& k) {
    return k.is_rational() ? Scalar(k, mpq_class(0)) : Scalar(k, std::uint64_t(0));
}

Scalar Scalar::one(const Field& k) {
    return k.is_rational() ? Scalar(k, mpq_class(1)) : Scalar(k, std::uint64_t(1));
}

Scalar Scalar::of_int(const Field& k, long n) {
    if (k.is_rational()) return Scalar(k, mpq_class(n));
    long long p = k.characteristic();
    long long r = n % p;
    if (r < 0) r += p;
    return Scalar(k, (std::uint64_t)r);
}

Scalar Scalar::of_mpz(const Field& k, const mpz_class& n) {
    if (k.is_rational()) return Scalar(k, mpq_class(n));
    mpz_class r = n % (unsigned long)k.characteristic();
    if (r < 0) r += (unsigned long)k.characteristic();
    return Scalar(k, (std::uint64_t)r.get_ui());
}

Scalar Scalar::fraction(const Field& k, const mpz_class& a, const mpz_class& b) {
    if (b == 0) throw domain_error("zero denominator");
    if (k.is_rational()) {
        mpq_class q(a, b);
        q.canonicalize();
        return Scalar(k, std::move(q));
    }
    Scalar num = of_mpz(k, a);
    Scalar den = of_mpz(k, b);
    if (den.is_zero())
        throw domain_error("denominator divisible by the field characteristic " +
                           std::to_string(k.characteristic()));
    return num * den.inverse();
}

bool Scalar::is_zero() const {
    if (field_.is_rational()) return std::get<mpq_class>(v_) == 0;
    return std::get<std::uint64_t>(v_) == 0;
}

bool Scalar::is_one() const {
    if (field_.is_rational()) return std::get<mpq_class>(v_) == 1;
    return std::get<std::uint64_t>(v_) == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (field_ != o.field_)
        throw domain_error("mixed scalar fields: " + field_.name() + " vs " + o.field_.name());
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_rational())
        return Scalar(field_, mpq_class(std::get<mpq_class>(v_) + std::get<mpq_class>(o.v_)));
    std::uint64_t s = std::get<std::uint64_t>(v_) + std::get<std::uint64_t>(o.v_);
    if (s >= field_.characteristic()) s -= field_.characteristic();
    return Scalar(field_, s);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_rational())
        return Scalar(field_, mpq_class(std::get<mpq_class>(v_) * std::get<mpq_class>(o.v_)));
    return Scalar(field_, std::get<std::uint64_t>(v_) * std::get<std::uint64_t>(o.v_) %
                              field_.characteristic());
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
    if (field_.is_rational()) return Scalar(field_, mpq_class(-std::get<mpq_class>(v_)));
    std::uint64_t r = std::get<std::uint64_t>(v_);
    return Scalar(field_, r == 0 ? 0 : field_.characteristic() - r);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw domain_error("division by zero scalar");
    if (field_.is_rational())
        return Scalar(field_, mpq_class(1 / std::get<mpq_class>(v_)));
    return Scalar(field_, inv_mod(std::get<std::uint64_t>(v_), field_.characteristic()));
}

bool Scalar::operator==(const Scalar& o) const {
    if (field_ != o.field_) return false;
    if (field_.is_rational()) return std::get<mpq_class>(v_) == std::get<mpq_class>(o.v_);
    return std::get<std::uint64_t>(v_) == std::get<std::uint64_t>(o.v_);
}

const mpq_class& Scalar::rational() const {
    if (!field_.is_rational()) throw domain_error("not a rational scalar");
    return std::get<mpq_class>(v_);
}

std::uint64_t Scalar::residue() const {
    if (field_.is_rational()) throw domain_error("not a prime-field scalar");
    return std::get<std::uint64_t>(v_);
}

bool Scalar::is_negative() const {
    return field_.is_rational() && std::get<mpq_class>(v_) < 0;
}

std::string Scalar::to_string() const {
    if (field_.is_rational()) return std::get<mpq_class>(v_).get_str();
    return std::to_string(std::get<std::uint64_t>(v_));
}

} // namespace mfk
