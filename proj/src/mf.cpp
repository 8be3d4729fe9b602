#include "mfk/mf.hpp"

namespace mfk {

namespace {

// Compares a matrix product against f * id and reports the first bad entry.
std::optional<VerificationReport::Witness> product_witness(const GradedMatrix& prod,
                                                           const Polynomial& f,
                                                           const std::string& label) {
    for (std::size_t j = 0; j < prod.rows(); ++j) {
        for (std::size_t i = 0; i < prod.cols(); ++i) {
            const Polynomial expected =
                i == j ? f : Polynomial::zero(f.field(), f.num_vars());
            if (prod.entry(j, i) != expected) {
                return VerificationReport::Witness{
                    "products", label,          j, i,
                    expected.to_string(),        prod.entry(j, i).to_string()};
            }
        }
    }
    return std::nullopt;
}

} // namespace

VerificationReport verify(const MatrixFactorization& mf) {
    VerificationReport rep;
    const Polynomial& f = mf.f;
    const GradedMatrix& phi = mf.phi;
    const GradedMatrix& psi = mf.psi;

    if (f.field() != phi.field() || f.field() != psi.field() || f.num_vars() != phi.num_vars() ||
        f.num_vars() != psi.num_vars())
        throw domain_error("factorization pieces from different rings");
    if (f.is_zero() || !f.is_homogeneous() || f.degree() < 2)
        throw domain_error("matrix factorizations need a homogeneous f of degree at least 2");

    const long d = f.degree();

    // Twist contract: psi.source = phi.target(-d), psi.target = phi.source.
    bool twists_ok = phi.source() == psi.target() && phi.target().twisted(-d) == psi.source() &&
                     phi.rows() == phi.cols() && psi.rows() == psi.cols() &&
                     phi.rows() == psi.rows();
    rep.graded_ok = twists_ok;
    if (!twists_ok) {
        rep.witness = VerificationReport::Witness{
            "twists", "psi", 0, 0, "source = phi.target shifted by " + std::to_string(d) +
                                       ", target = phi.source",
            "mismatched module twists or ranks"};
    } else {
        const GradedMatrix* mats[2] = {&phi, &psi};
        const char* labels[2] = {"phi", "psi"};
        for (int t = 0; t < 2 && rep.graded_ok; ++t) {
            if (auto v = mats[t]->graded_violation()) {
                rep.graded_ok = false;
                if (!rep.witness)
                    rep.witness = VerificationReport::Witness{
                        "graded", labels[t], v->row, v->col,
                        "homogeneous of degree " +
                            std::to_string(mats[t]->entry_degree(v->row, v->col)),
                        v->reason};
            }
        }
    }

    // Products: phi*psi = f*id on phi.target, psi*phi = f*id on phi.source.
    // Multiply entry-wise; the twist data does not constrain this check.
    bool products_ok = phi.rows() == phi.cols() && psi.rows() == psi.cols() &&
                       phi.cols() == psi.rows() && psi.cols() == phi.rows();
    if (products_ok) {
        GradedMatrix pp(f.field(), f.num_vars(), psi.source(), phi.target());
        for (std::size_t j = 0; j < phi.rows(); ++j)
            for (std::size_t i = 0; i < psi.cols(); ++i) {
                Polynomial acc(f.field(), f.num_vars());
                for (std::size_t t = 0; t < phi.cols(); ++t)
                    if (!phi.entry(j, t).is_zero() && !psi.entry(t, i).is_zero())
                        acc += phi.entry(j, t) * psi.entry(t, i);
                pp.set_entry(j, i, std::move(acc));
            }
        auto w = product_witness(pp, f, "phi*psi");
        if (w) {
            products_ok = false;
            if (!rep.witness) rep.witness = w;
        } else {
            GradedMatrix qq(f.field(), f.num_vars(), phi.source(), psi.target());
            for (std::size_t j = 0; j < psi.rows(); ++j)
                for (std::size_t i = 0; i < phi.cols(); ++i) {
                    Polynomial acc(f.field(), f.num_vars());
                    for (std::size_t t = 0; t < psi.cols(); ++t)
                        if (!psi.entry(j, t).is_zero() && !phi.entry(t, i).is_zero())
                            acc += psi.entry(j, t) * phi.entry(t, i);
                    qq.set_entry(j, i, std::move(acc));
                }
            w = product_witness(qq, f, "psi*phi");
            if (w) {
                products_ok = false;
                if (!rep.witness) rep.witness = w;
            }
        }
    } else if (!rep.witness) {
        rep.witness = VerificationReport::Witness{"products", "phi", 0, 0,
                                                  "square matrices of equal rank", "shape mismatch"};
    }
    rep.products_ok = products_ok;

    rep.reduced_ok = true;
    const GradedMatrix* mats[2] = {&phi, &psi};
    const char* labels[2] = {"phi", "psi"};
    for (int t = 0; t < 2 && rep.reduced_ok; ++t) {
        if (auto v = mats[t]->constant_term_violation()) {
            rep.reduced_ok = false;
            if (!rep.witness)
                rep.witness = VerificationReport::Witness{"reduced", labels[t], v->row, v->col,
                                                          "zero constant term", v->reason};
        }
    }
    return rep;
}

MatrixFactorization tensor_step(const MatrixFactorization& mf, const Polynomial& g,
                                const Polynomial& h) {
    const Field k = mf.f.field();
    const std::uint32_t n = mf.f.num_vars();
    if (g.field() != k || h.field() != k || g.num_vars() != n || h.num_vars() != n)
        throw domain_error("tensor factors from a different ring");
    if (g.is_zero() || h.is_zero() || !g.is_homogeneous() || !h.is_homogeneous())
        throw domain_error("tensor factors must be nonzero homogeneous");
    if (g.degree() < 1 || h.degree() < 1)
        throw domain_error("tensor factors must have degree at least 1");
    if (g.degree() + h.degree() != mf.f.degree())
        throw domain_error("tensor factor degrees must sum to deg f");

    const FreeModule& F = mf.phi.target();
    const FreeModule& G = mf.phi.source();
    FreeModule Fn = FreeModule::direct_sum(F, G.twisted(h.degree()));
    FreeModule Gn = FreeModule::direct_sum(G, F.twisted(-g.degree()));

    Polynomial fn = mf.f + g * h;
    GradedMatrix phi(k, n, Gn, Fn);
    GradedMatrix psi(k, n, Fn.twisted(-fn.degree()), Gn);
    const std::size_t r = F.rank();
    for (std::size_t j = 0; j < r; ++j) {
        for (std::size_t i = 0; i < r; ++i) {
            phi.set_entry(j, i, mf.phi.entry(j, i));
            phi.set_entry(r + j, r + i, -mf.psi.entry(j, i));
            psi.set_entry(j, i, mf.psi.entry(j, i));
            psi.set_entry(r + j, r + i, -mf.phi.entry(j, i));
        }
        phi.set_entry(j, r + j, g);
        phi.set_entry(r + j, j, h);
        psi.set_entry(j, r + j, g);
        psi.set_entry(r + j, j, h);
    }
    return {std::move(fn), std::move(phi), std::move(psi)};
}

MatrixFactorization knorrer_build(const StrengthDecomposition& D) {
    const Field k = D.field();
    const std::uint32_t n = D.num_vars();
    const Polynomial& g0 = D.gs()[0];
    const Polynomial& h0 = D.hs()[0];

    FreeModule F{{0}};
    FreeModule G{{g0.degree()}};
    GradedMatrix phi(k, n, G, F);
    phi.set_entry(0, 0, g0);
    GradedMatrix psi(k, n, F.twisted(-(g0.degree() + h0.degree())), G);
    psi.set_entry(0, 0, h0);
    MatrixFactorization mf{g0 * h0, std::move(phi), std::move(psi)};

    for (std::size_t i = 1; i < D.gs().size(); ++i)
        mf = tensor_step(mf, D.gs()[i], D.hs()[i]);
    return mf;
}

McmRank mcm_rank_of(const MatrixFactorization& mf) {
    Polynomial det = determinant(mf.phi);
    if (det.is_zero()) throw domain_error("det(phi) is zero, not a power of f");
    std::uint32_t r = 0;
    while (!det.is_constant()) {
        auto q = det.divided_by(mf.f);
        if (!q)
            throw domain_error("det(phi) is not a scalar times a power of f");
        det = std::move(*q);
        ++r;
    }
    return {r, det.constant_term()};
}

std::vector<std::string> matrix_variable_names(std::uint32_t n) {
    std::vector<std::string> names;
    names.reserve(n * n);
    for (std::uint32_t i = 1; i <= n; ++i)
        for (std::uint32_t j = 1; j <= n; ++j)
            names.push_back("x" + std::to_string(i) + std::to_string(j));
    return names;
}

std::vector<std::string> skew_variable_names(std::uint32_t n) {
    std::vector<std::string> names;
    for (std::uint32_t i = 1; i <= n; ++i)
        for (std::uint32_t j = i + 1; j <= n; ++j)
            names.push_back("x" + std::to_string(i) + std::to_string(j));
    return names;
}

namespace {

// Adjugate by signed cofactors; adj(M) * M = det(M) * id.
std::vector<std::vector<Polynomial>> adjugate(const std::vector<std::vector<Polynomial>>& m,
                                              Field k, std::uint32_t nvars) {
    const std::size_t n = m.size();
    std::vector<std::vector<Polynomial>> adj(n, std::vector<Polynomial>(n, Polynomial::zero(k, nvars)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::vector<Polynomial>> sub;
            sub.reserve(n - 1);
            for (std::size_t r = 0; r < n; ++r) {
                if (r == i) continue;
                std::vector<Polynomial> row;
                row.reserve(n - 1);
                for (std::size_t c = 0; c < n; ++c)
                    if (c != j) row.push_back(m[r][c]);
                sub.push_back(std::move(row));
            }
            FreeModule src{std::vector<long>(n - 1, 1)};
            FreeModule tgt{std::vector<long>(n - 1, 0)};
            GradedMatrix gm(k, nvars, src, tgt);
            for (std::size_t r = 0; r < n - 1; ++r)
                for (std::size_t c = 0; c < n - 1; ++c) gm.set_entry(r, c, sub[r][c]);
            Polynomial cof = determinant(gm);
            if ((i + j) % 2 == 1) cof = -cof;
            adj[j][i] = std::move(cof); // transposed cofactor
        }
    }
    return adj;
}

} // namespace

MatrixFactorization adjugate_mf(std::uint32_t n) {
    if (n < 2 || n > 5) throw domain_error("adjugate factorizations cover 2 <= n <= 5");
    const Field k = Field::rationals();
    const std::uint32_t nvars = n * n;
    std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n, Polynomial::zero(k, nvars)));
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            m[i][j] = Polynomial::variable(k, nvars, i * n + j);

    std::vector<std::vector<Polynomial>> adj = adjugate(m, k, nvars);

    FreeModule F{std::vector<long>(n, 0)};
    FreeModule G{std::vector<long>(n, 1)};
    GradedMatrix phi(k, nvars, G, F);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) phi.set_entry(i, j, m[i][j]);

    GradedMatrix psi(k, nvars, F.twisted(-(long)n), G);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) psi.set_entry(i, j, adj[i][j]);

    Polynomial f = determinant(phi);
    return {std::move(f), std::move(phi), std::move(psi)};
}

Polynomial pfaffian(const std::vector<std::vector<Polynomial>>& m, Field k,
                    std::uint32_t num_vars) {
    const std::size_t n = m.size();
    if (n % 2 != 0) throw domain_error("Pfaffians need even size");
    if (n == 0) return Polynomial::constant(k, num_vars, Scalar::one(k));
    if (n == 2) return m[0][1];
    Polynomial acc(k, num_vars);
    for (std::size_t j = 1; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        // Remove rows/columns 0 and j.
        std::vector<std::vector<Polynomial>> sub;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == 0 || r == j) continue;
            std::vector<Polynomial> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != 0 && c != j) row.push_back(m[r][c]);
            sub.push_back(std::move(row));
        }
        Polynomial term = m[0][j] * pfaffian(sub, k, num_vars);
        acc = (j % 2 == 1) ? acc + term : acc - term;
    }
    return acc;
}

MatrixFactorization pfaffian_mf(std::uint32_t n) {
    if (n != 4 && n != 6) throw domain_error("Pfaffian factorizations cover n in {4, 6}");
    const Field k = Field::rationals();
    const std::uint32_t nvars = n * (n - 1) / 2;
    std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n, Polynomial::zero(k, nvars)));
    std::uint32_t v = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) {
            m[i][j] = Polynomial::variable(k, nvars, v);
            m[j][i] = -m[i][j];
            ++v;
        }
    }

    Polynomial pf = pfaffian(m, k, nvars);

    // The Pfaffian adjoint adj(M)/Pf satisfies M * P = Pf * id.
    std::vector<std::vector<Polynomial>> adj = adjugate(m, k, nvars);
    std::vector<std::vector<Polynomial>> p(n, std::vector<Polynomial>(n, Polynomial::zero(k, nvars)));
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = 0; j < n; ++j) {
            if (adj[i][j].is_zero()) continue;
            auto q = adj[i][j].divided_by(pf);
            if (!q) throw domain_error("adjugate entry not divisible by the Pfaffian");
            p[i][j] = std::move(*q);
        }
    }

    FreeModule F{std::vector<long>(n, 0)};
    FreeModule G{std::vector<long>(n, 1)};
    GradedMatrix phi(k, nvars, G, F);
    GradedMatrix psi(k, nvars, F.twisted(-(long)(n / 2)), G);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) {
            phi.set_entry(i, j, m[i][j]);
            psi.set_entry(i, j, p[i][j]);
        }
    return {std::move(pf), std::move(phi), std::move(psi)};
}

} // namespace mfk
