#include "mfk/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

namespace mfk {

Polynomial Polynomial::constant(Field k, std::uint32_t num_vars, const Scalar& c) {
    return monomial(k, Monomial(num_vars), c);
}

Polynomial Polynomial::variable(Field k, std::uint32_t num_vars, std::uint32_t i) {
    return monomial(k, Monomial::variable(num_vars, i), Scalar::one(k));
}

Polynomial Polynomial::monomial(Field k, const Monomial& m, const Scalar& c) {
    Polynomial p(k, m.num_vars());
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
}

Polynomial Polynomial::from_terms(Field k, std::uint32_t num_vars, std::vector<Term> terms) {
    Polynomial p(k, num_vars);
    for (const Term& t : terms) {
        if (t.mono.num_vars() != num_vars) throw domain_error("term from a different ring");
        if (t.coef.field() != k) throw domain_error("term coefficient from a different field");
    }
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        return Monomial::compare(a.mono, b.mono) > 0;
    });
    for (Term& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coef += t.coef;
            if (p.terms_.back().coef.is_zero()) p.terms_.pop_back();
        } else if (!t.coef.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_constant());
}

long Polynomial::degree() const {
    if (terms_.empty()) return -1;
    // Leading term has maximal degree under any graded order.
    return terms_[0].mono.degree();
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw domain_error("zero polynomial has no leading term");
    return terms_[0];
}

Homogeneity Polynomial::homogeneity() const {
    Homogeneity h;
    if (terms_.empty()) {
        h.homogeneous = true;
        h.any_degree = true;
        return h;
    }
    long d = terms_[0].mono.degree();
    for (const Term& t : terms_)
        if (t.mono.degree() != d) return h;
    h.homogeneous = true;
    h.degree = d;
    return h;
}

Scalar Polynomial::constant_term() const {
    if (!terms_.empty() && terms_.back().mono.is_constant()) return terms_.back().coef;
    return Scalar::zero(field_);
}

void Polynomial::check_compatible(const Polynomial& o) const {
    if (field_ != o.field_)
        throw domain_error("mixed coefficient fields: " + field_.name() + " vs " + o.field_.name());
    if (nvars_ != o.nvars_)
        throw domain_error("mixed rings: " + std::to_string(nvars_) + " vs " +
                           std::to_string(o.nvars_) + " variables");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_compatible(o);
    Polynomial r(field_, nvars_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = Monomial::compare(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Scalar s = terms_[i].coef + o.terms_[j].coef;
            if (!s.is_zero()) r.terms_.push_back({terms_[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(field_, nvars_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.mono, -t.coef});
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_compatible(o);
    Polynomial r(field_, nvars_);
    if (terms_.empty() || o.terms_.empty()) return r;
    // Small products: merge the term products directly.  Large ones:
    // accumulate through a hash map to avoid materializing t1*t2 terms.
    if (terms_.size() * o.terms_.size() <= 4096) {
        std::vector<Term> prods;
        prods.reserve(terms_.size() * o.terms_.size());
        for (const Term& a : terms_)
            for (const Term& b : o.terms_)
                prods.push_back({a.mono * b.mono, a.coef * b.coef});
        return from_terms(field_, nvars_, std::move(prods));
    }
    std::unordered_map<Monomial, Scalar, MonomialHash> acc;
    acc.reserve(terms_.size() + o.terms_.size());
    for (const Term& a : terms_) {
        for (const Term& b : o.terms_) {
            Monomial m = a.mono * b.mono;
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(std::move(m), a.coef * b.coef);
            else
                it->second += a.coef * b.coef;
        }
    }
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) r.terms_.push_back({m, std::move(c)});
    std::sort(r.terms_.begin(), r.terms_.end(), [](const Term& a, const Term& b) {
        return Monomial::compare(a.mono, b.mono) > 0;
    });
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (field_ != o.field_ || nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coef != o.terms_[i].coef) return false;
    return true;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    if (c.field() != field_) throw domain_error("scalar from a different field");
    Polynomial r(field_, nvars_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.mono, t.coef * c});
    return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Scalar& c) const {
    if (c.is_zero()) return Polynomial(field_, nvars_);
    Polynomial r(field_, nvars_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.mono * m, t.coef * c});
    return r;
}

Polynomial Polynomial::partial_derivative(std::uint32_t i) const {
    if (i >= nvars_) throw domain_error("variable index out of range");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) {
        std::uint32_t e = t.mono.exponent(i);
        if (e == 0) continue;
        Monomial m = t.mono;
        m.set_exponent(i, e - 1);
        out.push_back({m, t.coef * Scalar::of_int(field_, (long)e)});
    }
    return from_terms(field_, nvars_, std::move(out));
}

Scalar Polynomial::evaluate(const std::vector<Scalar>& point) const {
    if (point.size() != nvars_)
        throw domain_error("point has " + std::to_string(point.size()) + " coordinates, ring has " +
                           std::to_string(nvars_));
    for (const Scalar& c : point)
        if (c.field() != field_) throw domain_error("point coordinate from a different field");
    Scalar acc = Scalar::zero(field_);
    for (const Term& t : terms_) {
        Scalar v = t.coef;
        for (std::uint32_t i = 0; i < nvars_; ++i) {
            for (std::uint32_t e = t.mono.exponent(i); e > 0; --e) v *= point[i];
        }
        acc += v;
    }
    return acc;
}

Polynomial Polynomial::extended(std::uint32_t new_num_vars) const {
    Polynomial r(field_, new_num_vars);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.mono.extended(new_num_vars), t.coef});
    // grevlex order is stable under appending unused variables, so the term
    // order is preserved as long as the support fits (shrinking re-sorts).
    std::sort(r.terms_.begin(), r.terms_.end(), [](const Term& a, const Term& b) {
        return Monomial::compare(a.mono, b.mono) > 0;
    });
    return r;
}

std::optional<Polynomial> Polynomial::divided_by(const Polynomial& b) const {
    check_compatible(b);
    if (b.is_zero()) throw domain_error("division by the zero polynomial");
    Polynomial q(field_, nvars_);
    Polynomial r = *this;
    const Term& lb = b.leading_term();
    while (!r.is_zero()) {
        const Term& lr = r.leading_term();
        if (!lb.mono.divides(lr.mono)) return std::nullopt;
        Monomial m = lb.mono.divided_into(lr.mono);
        Scalar c = lr.coef / lb.coef;
        q.terms_.push_back({m, c});
        r -= b.times_monomial(m, c);
    }
    // Quotient terms were emitted in strictly descending order already.
    return q;
}

Polynomial Polynomial::primitive_part() const {
    if (terms_.empty()) return *this;
    if (!field_.is_rational()) return monic();
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const Term& t : terms_) {
        const mpq_class& q = t.coef.rational();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num().get_mpz_t());
        num_gcd = g;
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
        den_lcm = l;
    }
    mpq_class factor(den_lcm, num_gcd);
    factor.canonicalize();
    if (terms_[0].coef.rational() < 0) factor = -factor;
    return scaled(Scalar::fraction(field_, factor.get_num(), factor.get_den()));
}

Polynomial Polynomial::monic() const {
    if (terms_.empty()) return *this;
    return scaled(terms_[0].coef.inverse());
}

Polynomial Polynomial::pow(std::uint32_t k) const {
    Polynomial acc = Polynomial::constant(field_, nvars_, Scalar::one(field_));
    Polynomial base = *this;
    while (k) {
        if (k & 1) acc *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return acc;
}

std::string Polynomial::to_string() const {
    std::vector<std::string> names;
    names.reserve(nvars_);
    for (std::uint32_t i = 0; i < nvars_; ++i) names.push_back("z" + std::to_string(i));
    return to_string(names);
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
    if (names.size() != nvars_) throw domain_error("name table size mismatch");
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const Term& t : terms_) {
        Scalar c = t.coef;
        if (first) {
            if (c.is_negative()) {
                out += "-";
                c = -c;
            }
        } else {
            if (c.is_negative()) {
                out += " - ";
                c = -c;
            } else {
                out += " + ";
            }
        }
        first = false;
        std::string monos;
        for (std::uint32_t i = 0; i < nvars_; ++i) {
            std::uint32_t e = t.mono.exponent(i);
            if (!e) continue;
            if (!monos.empty()) monos += "*";
            monos += names[i];
            if (e > 1) monos += "^" + std::to_string(e);
        }
        if (monos.empty()) {
            out += c.to_string();
        } else if (c.is_one()) {
            out += monos;
        } else {
            out += c.to_string() + "*" + monos;
        }
    }
    return out;
}

} // namespace mfk
