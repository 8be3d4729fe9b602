#include "mfk/catalog.hpp"

#include <random>

namespace mfk {

namespace {

std::string num(std::uint32_t v) { return std::to_string(v); }

} // namespace

Polynomial power_sum(std::uint32_t d, std::uint32_t n, Field k) {
    if (d < 1) throw domain_error("power sum needs degree at least 1");
    const std::uint32_t nvars = n + 1;
    Polynomial f(k, nvars);
    for (std::uint32_t i = 0; i < nvars; ++i)
        f += Polynomial::variable(k, nvars, i).pow(d);
    return f;
}

StrengthDecomposition standard_quadric(std::uint32_t s, Field k) {
    const std::uint32_t nvars = 2 * (s + 1);
    std::vector<Polynomial> gs, hs;
    for (std::uint32_t i = 0; i <= s; ++i) {
        gs.push_back(Polynomial::variable(k, nvars, i));
        hs.push_back(Polynomial::variable(k, nvars, s + 1 + i));
    }
    return StrengthDecomposition::make(std::move(gs), std::move(hs));
}

StrengthDecomposition block_power_sum(std::uint32_t d, std::uint32_t s, std::uint32_t n,
                                      Field k) {
    if (d < 2) throw domain_error("block power sum needs degree at least 2");
    const std::uint32_t nvars = (s + 1) + (s + 1) * (n + 1);
    std::vector<Polynomial> gs, hs;
    for (std::uint32_t i = 0; i <= s; ++i) {
        gs.push_back(Polynomial::variable(k, nvars, i));
        Polynomial block(k, nvars);
        for (std::uint32_t j = 0; j <= n; ++j) {
            const std::uint32_t v = (s + 1) + i * (n + 1) + j;
            block += Polynomial::variable(k, nvars, v).pow(d - 1);
        }
        hs.push_back(std::move(block));
    }
    return StrengthDecomposition::make(std::move(gs), std::move(hs));
}

StrengthDecomposition sample_type_mu(const std::vector<long>& mu, std::uint32_t d,
                                     std::uint32_t n, Field k, std::uint64_t seed) {
    if (mu.empty()) throw domain_error("type vector must be nonempty");
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (mu[i] < 1 || 2 * mu[i] > static_cast<long>(d))
            throw domain_error("type entries must satisfy 1 <= mu_i <= d/2");
        if (i > 0 && mu[i] < mu[i - 1])
            throw domain_error("type vector must be non-decreasing");
    }
    const std::uint32_t nvars = n + 1;
    std::mt19937_64 rng(seed);

    auto random_form = [&](long deg) {
        const std::vector<Monomial> basis = monomials_of_degree(nvars, deg);
        std::size_t want = 2 + static_cast<std::size_t>(rng() % 5);
        if (want > basis.size()) want = basis.size();
        // Partial Fisher-Yates over the basis indices.
        std::vector<std::size_t> idx(basis.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::vector<Term> terms;
        for (std::size_t t = 0; t < want; ++t) {
            const std::size_t pick = t + static_cast<std::size_t>(rng() % (idx.size() - t));
            std::swap(idx[t], idx[pick]);
            Scalar c = Scalar::zero(k);
            if (k.is_rational()) {
                // Uniform over {-3,...,3} \ {0}.
                const long v = static_cast<long>(rng() % 6);
                c = Scalar::of_int(k, v < 3 ? v - 3 : v - 2);
            } else {
                const std::uint64_t p = k.characteristic();
                c = Scalar::of_int(k, static_cast<long>(1 + rng() % (p - 1)));
            }
            terms.push_back({basis[idx[t]], c});
        }
        return Polynomial::from_terms(k, nvars, std::move(terms));
    };

    std::vector<Polynomial> gs, hs;
    for (long m : mu) {
        gs.push_back(random_form(m));
        hs.push_back(random_form(static_cast<long>(d) - m));
    }
    return StrengthDecomposition::make(std::move(gs), std::move(hs));
}

CatalogEntry quadric_entry(std::uint32_t s) {
    CatalogEntry e;
    e.name = "quadric-" + num(s);
    e.field = Field::rationals();
    e.decomposition = standard_quadric(s);
    e.num_vars = e.decomposition->num_vars();
    for (std::uint32_t i = 0; i <= s; ++i) e.var_names.push_back("x" + num(i));
    for (std::uint32_t i = 0; i <= s; ++i) e.var_names.push_back("y" + num(i));
    e.f = e.decomposition->f();
    e.provenance = "split quadric x0*y0 + ... + xs*ys with s = " + num(s);
    return e;
}

CatalogEntry power_sum_entry(std::uint32_t d, std::uint32_t n) {
    if (d < 2) throw domain_error("power sum entries need degree at least 2");
    CatalogEntry e;
    e.name = "power-sum-" + num(d) + "-" + num(n);
    e.field = Field::rationals();
    e.f = power_sum(d, n);
    const std::uint32_t nvars = n + 1;
    std::vector<Polynomial> gs, hs;
    for (std::uint32_t i = 0; i < nvars; ++i) {
        gs.push_back(Polynomial::variable(e.field, nvars, i));
        hs.push_back(Polynomial::variable(e.field, nvars, i).pow(d - 1));
    }
    e.decomposition = StrengthDecomposition::make(std::move(gs), std::move(hs));
    e.num_vars = nvars;
    e.provenance = "sum of " + num(n + 1) + " powers z_i^" + num(d) +
                   ", split as z_i * z_i^" + num(d - 1);
    return e;
}

CatalogEntry block_power_sum_entry(std::uint32_t d, std::uint32_t s, std::uint32_t n) {
    CatalogEntry e;
    e.name = "block-power-sum-" + num(d) + "-" + num(s) + "-" + num(n);
    e.field = Field::rationals();
    e.decomposition = block_power_sum(d, s, n);
    e.num_vars = e.decomposition->num_vars();
    for (std::uint32_t i = 0; i <= s; ++i) e.var_names.push_back("x" + num(i));
    for (std::uint32_t i = 0; i <= s; ++i)
        for (std::uint32_t j = 0; j <= n; ++j)
            e.var_names.push_back("y" + num(i) + "_" + num(j));
    e.f = e.decomposition->f();
    e.provenance = "sum of x_i times a degree-" + num(d - 1) +
                   " power sum in its own block of " + num(n + 1) + " variables";
    return e;
}

CatalogEntry generic_matrix_det(std::uint32_t n) {
    if (n < 2 || n > 4)
        throw domain_error("generic determinant entries cover 2 <= n <= 4");
    CatalogEntry e;
    e.name = "det-" + num(n);
    e.field = Field::rationals();
    e.mf = adjugate_mf(n);
    e.f = e.mf->f;
    e.num_vars = n * n;
    e.var_names = matrix_variable_names(n);
    // Laplace expansion along the top row: f = sum_j x_{1,j+1} * cof(0, j),
    // and the adjugate holds cof(0, j) at entry (j, 0).
    std::vector<Polynomial> gs, hs;
    for (std::uint32_t j = 0; j < n; ++j) {
        gs.push_back(Polynomial::variable(e.field, e.num_vars, j));
        hs.push_back(e.mf->psi.entry(j, 0));
    }
    e.decomposition = StrengthDecomposition::make(std::move(gs), std::move(hs));
    e.provenance = "determinant of the generic " + num(n) + "x" + num(n) +
                   " matrix, with its adjugate and the top-row Laplace split";
    return e;
}

CatalogEntry pfaffian_entry(std::uint32_t n) {
    if (n != 4 && n != 6)
        throw domain_error("Pfaffian entries cover n in {4, 6}");
    CatalogEntry e;
    e.name = "pfaffian-" + num(n);
    e.field = Field::rationals();
    e.mf = pfaffian_mf(n);
    e.f = e.mf->f;
    e.num_vars = n * (n - 1) / 2;
    e.var_names = skew_variable_names(n);
    // First-row expansion: Pf = sum_{j>=1} sign_j * m[0][j] * Pf(minor_{0j})
    // with sign + exactly when j is odd.
    std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n, Polynomial(e.field, e.num_vars)));
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) m[i][j] = e.mf->phi.entry(i, j);
    std::vector<Polynomial> gs, hs;
    for (std::uint32_t j = 1; j < n; ++j) {
        std::vector<std::vector<Polynomial>> minor;
        for (std::uint32_t r = 0; r < n; ++r) {
            if (r == 0 || r == j) continue;
            std::vector<Polynomial> row;
            for (std::uint32_t c = 0; c < n; ++c) {
                if (c == 0 || c == j) continue;
                row.push_back(m[r][c]);
            }
            minor.push_back(std::move(row));
        }
        Polynomial pf = pfaffian(minor, e.field, e.num_vars);
        gs.push_back(m[0][j]);
        hs.push_back(j % 2 == 1 ? pf : -pf);
    }
    e.decomposition = StrengthDecomposition::make(std::move(gs), std::move(hs));
    e.provenance = "Pfaffian of the generic skew " + num(n) + "x" + num(n) +
                   " matrix, with its adjoint partner and the first-row split";
    return e;
}

std::vector<CatalogEntry> builtin_catalog() {
    std::vector<CatalogEntry> out;
    for (std::uint32_t s = 0; s <= 3; ++s) out.push_back(quadric_entry(s));
    out.push_back(power_sum_entry(2, 3));
    out.push_back(power_sum_entry(3, 2));
    out.push_back(power_sum_entry(3, 4));
    out.push_back(power_sum_entry(4, 2));
    out.push_back(block_power_sum_entry(3, 1, 1));
    out.push_back(block_power_sum_entry(3, 1, 2));
    out.push_back(block_power_sum_entry(4, 2, 1));
    out.push_back(generic_matrix_det(2));
    out.push_back(generic_matrix_det(3));
    out.push_back(pfaffian_entry(4));
    out.push_back(pfaffian_entry(6));
    return out;
}

} // namespace mfk
