#include "mfk/monomial.hpp"

#include <algorithm>

namespace mfk {

Monomial::Monomial(std::uint32_t num_vars) : n_(num_vars) {
    if (num_vars > kMaxVars)
        throw budget_error("ring has " + std::to_string(num_vars) + " variables; the cap is " +
                           std::to_string(kMaxVars));
    e_.fill(0);
}

Monomial Monomial::variable(std::uint32_t num_vars, std::uint32_t i, std::uint32_t exp) {
    Monomial m(num_vars);
    m.set_exponent(i, exp);
    return m;
}

std::uint32_t Monomial::exponent(std::uint32_t i) const {
    if (i >= n_) throw domain_error("variable index out of range");
    return e_[i];
}

void Monomial::set_exponent(std::uint32_t i, std::uint32_t e) {
    if (i >= n_) throw domain_error("variable index out of range");
    if (e > kMaxExponent)
        throw budget_error("exponent " + std::to_string(e) + " exceeds the cap of " +
                           std::to_string(kMaxExponent));
    e_[i] = (std::uint8_t)e;
}

long Monomial::degree() const {
    long d = 0;
    for (std::uint32_t i = 0; i < n_; ++i) d += e_[i];
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (n_ != o.n_) throw domain_error("monomials from different rings");
    Monomial r(n_);
    for (std::uint32_t i = 0; i < n_; ++i) {
        std::uint32_t s = (std::uint32_t)e_[i] + o.e_[i];
        if (s > kMaxExponent)
            throw budget_error("exponent overflow past " + std::to_string(kMaxExponent));
        r.e_[i] = (std::uint8_t)s;
    }
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    if (n_ != o.n_) throw domain_error("monomials from different rings");
    for (std::uint32_t i = 0; i < n_; ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::divided_into(const Monomial& o) const {
    if (!divides(o)) throw domain_error("monomial does not divide");
    Monomial r(n_);
    for (std::uint32_t i = 0; i < n_; ++i) r.e_[i] = (std::uint8_t)(o.e_[i] - e_[i]);
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    if (a.n_ != b.n_) throw domain_error("monomials from different rings");
    Monomial r(a.n_);
    for (std::uint32_t i = 0; i < a.n_; ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
    return r;
}

bool Monomial::coprime(const Monomial& o) const {
    if (n_ != o.n_) throw domain_error("monomials from different rings");
    for (std::uint32_t i = 0; i < n_; ++i)
        if (e_[i] && o.e_[i]) return false;
    return true;
}

Monomial Monomial::extended(std::uint32_t new_num_vars) const {
    Monomial r(new_num_vars);
    for (std::uint32_t i = 0; i < n_; ++i) {
        if (e_[i] && i >= new_num_vars)
            throw domain_error("cannot shrink ring below a monomial's support");
        if (i < new_num_vars) r.e_[i] = e_[i];
    }
    return r;
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
    if (a.n_ != b.n_) throw domain_error("monomials from different rings");
    long da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    for (std::uint32_t i = a.n_; i-- > 0;) {
        if (a.e_[i] != b.e_[i]) return a.e_[i] > b.e_[i] ? -1 : 1;
    }
    return 0;
}

bool Monomial::operator==(const Monomial& o) const {
    if (n_ != o.n_) return false;
    for (std::uint32_t i = 0; i < n_; ++i)
        if (e_[i] != o.e_[i]) return false;
    return true;
}

std::size_t Monomial::hash() const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint32_t i = 0; i < n_; ++i) {
        h ^= e_[i];
        h *= 1099511628211ull;
    }
    return h;
}

std::uint32_t Monomial::support_mask() const {
    std::uint32_t m = 0;
    for (std::uint32_t i = 0; i < n_; ++i)
        if (e_[i]) m |= (1u << i);
    return m;
}

std::vector<Monomial> monomials_of_degree(std::uint32_t num_vars, long degree) {
    std::vector<Monomial> out;
    if (degree < 0) return out;
    if (degree > static_cast<long>(kMaxExponent) * (num_vars ? num_vars : 1))
        throw budget_error("monomial degree " + std::to_string(degree) + " out of range");
    if (num_vars == 0) {
        if (degree == 0) out.push_back(Monomial(0));
        return out;
    }
    std::vector<std::uint32_t> e(num_vars, 0);
    auto rec = [&](auto&& self, std::uint32_t i, long remaining) -> void {
        if (i + 1 == num_vars) {
            if (remaining > static_cast<long>(kMaxExponent)) return;
            e[i] = static_cast<std::uint32_t>(remaining);
            Monomial m(num_vars);
            for (std::uint32_t v = 0; v < num_vars; ++v) m.set_exponent(v, e[v]);
            out.push_back(m);
            return;
        }
        const long top = std::min<long>(remaining, kMaxExponent);
        for (long x = 0; x <= top; ++x) {
            e[i] = static_cast<std::uint32_t>(x);
            self(self, i + 1, remaining - x);
        }
    };
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return Monomial::compare(a, b) > 0; });
    return out;
}

} // namespace mfk
