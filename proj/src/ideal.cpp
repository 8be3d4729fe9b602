#include "mfk/ideal.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace mfk {

struct Ideal::Cache {
    std::once_flag flag;
    std::shared_ptr<const GroebnerBasis> basis;
};

Ideal::Ideal(Field k, std::uint32_t num_vars, std::vector<Polynomial> gens)
    : field_(k), nvars_(num_vars), cache_(std::make_shared<Cache>()) {
    for (Polynomial& g : gens) {
        if (g.field() != k || g.num_vars() != num_vars)
            throw domain_error("generator from a different ring");
        if (!g.is_zero()) gens_.push_back(std::move(g));
    }
}

Ideal Ideal::extended(std::uint32_t new_num_vars) const {
    std::vector<Polynomial> gens;
    gens.reserve(gens_.size());
    for (const Polynomial& g : gens_) gens.push_back(g.extended(new_num_vars));
    return Ideal(field_, new_num_vars, std::move(gens));
}

namespace {

// Divides f by the basis list, fully reducing every term.  With scale_free
// set, reductions over Q cross-scale by integers instead of dividing, so the
// result is canonical only up to a positive scalar; Buchberger's loop does
// not mind and re-normalizes.
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis, bool scale_free) {
    const Field k = f.field();
    Polynomial tail = f;
    Polynomial out(k, f.num_vars());
    int steps_since_rescale = 0;
    while (!tail.is_zero()) {
        const Term lt = tail.leading_term();
        const Polynomial* reducer = nullptr;
        for (const Polynomial& b : basis) {
            if (!b.is_zero() && b.leading_term().mono.divides(lt.mono)) {
                reducer = &b;
                break;
            }
        }
        if (!reducer) {
            out += Polynomial::monomial(k, lt.mono, lt.coef);
            tail -= Polynomial::monomial(k, lt.mono, lt.coef);
            continue;
        }
        const Term& lb = reducer->leading_term();
        Monomial m = lb.mono.divided_into(lt.mono);
        if (scale_free && k.is_rational()) {
            // Scale the whole state by s and subtract t*m*reducer, with s, t
            // integers chosen so the leading terms cancel: s*lc(tail) = t*lc(b).
            const mpq_class& a = lt.coef.rational();
            const mpq_class& b = lb.coef.rational();
            mpz_class sn = b.get_num() * a.get_den();
            mpz_class tn = a.get_num() * b.get_den();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), sn.get_mpz_t(), tn.get_mpz_t());
            sn /= g;
            tn /= g;
            if (sn < 0) {
                sn = -sn;
                tn = -tn;
            }
            Scalar s = Scalar::of_mpz(k, sn);
            if (!s.is_one()) {
                out = out.scaled(s);
                tail = tail.scaled(s);
            }
            tail -= reducer->times_monomial(m, Scalar::of_mpz(k, tn));
            if (++steps_since_rescale >= 32) {
                steps_since_rescale = 0;
                // Shed accumulated content from the joint state.
                mpz_class content = 0;
                for (const Term& t : out.terms()) {
                    mpz_class gg;
                    mpz_gcd(gg.get_mpz_t(), content.get_mpz_t(),
                            t.coef.rational().get_num().get_mpz_t());
                    content = gg;
                }
                for (const Term& t : tail.terms()) {
                    mpz_class gg;
                    mpz_gcd(gg.get_mpz_t(), content.get_mpz_t(),
                            t.coef.rational().get_num().get_mpz_t());
                    content = gg;
                }
                if (content > 1) {
                    Scalar inv = Scalar::fraction(k, 1, content);
                    out = out.scaled(inv);
                    tail = tail.scaled(inv);
                }
            }
        } else {
            tail -= reducer->times_monomial(m, lt.coef / lb.coef);
        }
    }
    return out;
}

struct Pair {
    long lcm_degree;
    std::size_t i, j;
    bool operator<(const Pair& o) const {
        if (lcm_degree != o.lcm_degree) return lcm_degree < o.lcm_degree;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

Polynomial s_polynomial(const Polynomial& a, const Polynomial& b) {
    const Term& la = a.leading_term();
    const Term& lb = b.leading_term();
    Monomial l = Monomial::lcm(la.mono, lb.mono);
    Polynomial sa = a.times_monomial(la.mono.divided_into(l), Scalar::one(a.field()));
    Polynomial sb = b.times_monomial(lb.mono.divided_into(l), Scalar::one(b.field()));
    if (a.field().is_rational()) {
        // Cross-scale by leading coefficients to stay fraction-free.
        return sa.scaled(lb.coef) - sb.scaled(la.coef);
    }
    return sa.scaled(la.coef.inverse()) - sb.scaled(lb.coef.inverse());
}

std::shared_ptr<const GroebnerBasis> buchberger(const Field& k, std::uint32_t nvars,
                                                const std::vector<Polynomial>& gens) {
    std::vector<Polynomial> basis;
    for (const Polynomial& g : gens) {
        if (!g.is_homogeneous())
            throw domain_error("Groebner bases are supported for homogeneous generators only");
        basis.push_back(g.primitive_part());
    }

    std::set<Pair> queue;
    auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            Monomial l = Monomial::lcm(basis[i].leading_term().mono, basis[j].leading_term().mono);
            queue.insert({l.degree(), i, j});
        }
    };
    for (std::size_t j = 0; j < basis.size(); ++j) push_pairs(j);

    auto pending = [&](std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        Monomial l = Monomial::lcm(basis[a].leading_term().mono, basis[b].leading_term().mono);
        return queue.count({l.degree(), a, b}) != 0;
    };

    while (!queue.empty()) {
        Pair p = *queue.begin();
        queue.erase(queue.begin());
        const Monomial& mi = basis[p.i].leading_term().mono;
        const Monomial& mj = basis[p.j].leading_term().mono;
        if (mi.coprime(mj)) continue; // product criterion
        // chain criterion
        Monomial l = Monomial::lcm(mi, mj);
        bool skip = false;
        for (std::size_t t = 0; t < basis.size(); ++t) {
            if (t == p.i || t == p.j) continue;
            if (basis[t].leading_term().mono.divides(l) && !pending(t, p.i) && !pending(t, p.j)) {
                skip = true;
                break;
            }
        }
        if (skip) continue;

        Polynomial r = reduce(s_polynomial(basis[p.i], basis[p.j]), basis, true);
        if (!r.is_zero()) {
            basis.push_back(r.primitive_part());
            push_pairs(basis.size() - 1);
        }
    }

    // Minimalize: drop elements whose leading monomial another one divides.
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            const Monomial& a = basis[j].leading_term().mono;
            const Monomial& b = basis[i].leading_term().mono;
            if (a.divides(b) && (a != b || j < i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // Tail-reduce each element against the others and make monic.
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        reduced.push_back(reduce(minimal[i], others, true).monic());
    }
    std::sort(reduced.begin(), reduced.end(), [](const Polynomial& a, const Polynomial& b) {
        return Monomial::compare(a.leading_term().mono, b.leading_term().mono) > 0;
    });
    return std::make_shared<GroebnerBasis>(k, nvars, std::move(reduced));
}

} // namespace

const GroebnerBasis& Ideal::groebner_basis() const {
    std::call_once(cache_->flag, [&] { cache_->basis = buchberger(field_, nvars_, gens_); });
    return *cache_->basis;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
    if (f.field() != basis.field() || f.num_vars() != basis.num_vars())
        throw domain_error("polynomial and basis from different rings");
    return reduce(f, basis.elements(), false);
}

long dimension(const Ideal& I) {
    const std::uint32_t n = I.num_vars();
    if (n > 20)
        throw budget_error("dimension is limited to 20 variables, ring has " + std::to_string(n));
    const GroebnerBasis& gb = I.groebner_basis();
    std::vector<std::uint32_t> lead_supports;
    for (const Polynomial& g : gb.elements()) {
        if (g.leading_term().mono.is_constant()) throw domain_error("unit ideal has no dimension");
        lead_supports.push_back(g.leading_term().mono.support_mask());
    }
    // S independent iff no leading monomial is supported inside S.
    long best = 0;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        if ((long)__builtin_popcount(s) <= best) continue;
        bool independent = true;
        for (std::uint32_t m : lead_supports) {
            if ((m & ~s) == 0) {
                independent = false;
                break;
            }
        }
        if (independent) best = __builtin_popcount(s);
    }
    return best;
}

long codimension(const Ideal& I) { return (long)I.num_vars() - dimension(I); }

Ideal jacobian_ideal(const Polynomial& f) {
    std::vector<Polynomial> gens;
    for (std::uint32_t i = 0; i < f.num_vars(); ++i) gens.push_back(f.partial_derivative(i));
    return Ideal(f.field(), f.num_vars(), std::move(gens));
}

namespace {

// Cofactor-expansion determinant of a small square polynomial matrix given by
// an element accessor.
Polynomial small_det(Field k, std::uint32_t nvars,
                     const std::vector<std::vector<Polynomial>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Polynomial det(k, nvars);
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Polynomial>> sub;
        sub.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Polynomial> row;
            row.reserve(n - 1);
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            sub.push_back(std::move(row));
        }
        Polynomial cof = m[0][j] * small_det(k, nvars, sub);
        det = (j % 2 == 0) ? det + cof : det - cof;
    }
    return det;
}

void column_subsets(std::uint32_t n, std::uint32_t r, std::vector<std::uint32_t>& cur,
                    std::uint32_t start, const std::function<void(const std::vector<std::uint32_t>&)>& fn) {
    if (cur.size() == r) {
        fn(cur);
        return;
    }
    for (std::uint32_t c = start; c + (r - (std::uint32_t)cur.size()) <= n; ++c) {
        cur.push_back(c);
        column_subsets(n, r, cur, c + 1, fn);
        cur.pop_back();
    }
}

} // namespace

Ideal jacobian_minors_ideal(const std::vector<Polynomial>& fs, std::uint32_t r) {
    if (fs.empty()) throw domain_error("empty polynomial list");
    const Field k = fs[0].field();
    const std::uint32_t n = fs[0].num_vars();
    for (const Polynomial& f : fs)
        if (f.field() != k || f.num_vars() != n) throw domain_error("polynomials from different rings");
    if (r == 0 || r > fs.size() || r > n)
        throw domain_error("minor size out of range");
    if (r > 6) throw budget_error("minors of size above 6 are not supported");

    std::vector<std::vector<Polynomial>> jac;
    for (const Polynomial& f : fs) {
        std::vector<Polynomial> row;
        for (std::uint32_t j = 0; j < n; ++j) row.push_back(f.partial_derivative(j));
        jac.push_back(std::move(row));
    }

    std::vector<Polynomial> minors;
    std::vector<std::uint32_t> rows, cols;
    column_subsets((std::uint32_t)fs.size(), r, rows, 0, [&](const std::vector<std::uint32_t>& rs) {
        std::vector<std::uint32_t> cur;
        column_subsets(n, r, cur, 0, [&](const std::vector<std::uint32_t>& cs) {
            std::vector<std::vector<Polynomial>> sub;
            for (std::uint32_t i : rs) {
                std::vector<Polynomial> row;
                for (std::uint32_t j : cs) row.push_back(jac[i][j]);
                sub.push_back(std::move(row));
            }
            Polynomial d = small_det(k, n, sub);
            if (!d.is_zero()) minors.push_back(std::move(d));
        });
    });
    return Ideal(k, n, std::move(minors));
}

} // namespace mfk
