#include "mfk/search.hpp"

#include <algorithm>
#include <cstddef>
#include <unordered_map>
#include <vector>

namespace mfk {

namespace {

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
    for (std::uint32_t u = 1; u < p; ++u)
        if (a * u % p == 1) return u;
    throw domain_error("no inverse of " + std::to_string(a) + " modulo " + std::to_string(p));
}

// Dense Gauss-Jordan over F_p.  Solves A x = b with free unknowns set to 0;
// returns false when inconsistent.  A and b are clobbered.
bool solve_mod_p(std::vector<std::uint32_t>& A, std::vector<std::uint32_t>& b,
                 std::size_t rows, std::size_t cols, std::uint32_t p,
                 std::vector<std::uint32_t>& x) {
    x.assign(cols, 0);
    std::vector<std::size_t> pivot_row_of_col(cols, SIZE_MAX);
    std::size_t next_row = 0;
    for (std::size_t c = 0; c < cols && next_row < rows; ++c) {
        std::size_t piv = SIZE_MAX;
        for (std::size_t r = next_row; r < rows; ++r) {
            if (A[r * cols + c] != 0) {
                piv = r;
                break;
            }
        }
        if (piv == SIZE_MAX) continue;
        if (piv != next_row) {
            for (std::size_t j = c; j < cols; ++j)
                std::swap(A[piv * cols + j], A[next_row * cols + j]);
            std::swap(b[piv], b[next_row]);
        }
        const std::uint32_t inv = inverse_mod(A[next_row * cols + c], p);
        if (inv != 1) {
            for (std::size_t j = c; j < cols; ++j)
                A[next_row * cols + j] = A[next_row * cols + j] * inv % p;
            b[next_row] = b[next_row] * inv % p;
        }
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == next_row) continue;
            const std::uint32_t factor = A[r * cols + c];
            if (factor == 0) continue;
            for (std::size_t j = c; j < cols; ++j)
                A[r * cols + j] = (A[r * cols + j] + (p - factor) * A[next_row * cols + j]) % p;
            b[r] = (b[r] + (p - factor) * b[next_row]) % p;
        }
        pivot_row_of_col[c] = next_row;
        ++next_row;
    }
    for (std::size_t r = next_row; r < rows; ++r)
        if (b[r] != 0) return false;
    for (std::size_t c = 0; c < cols; ++c)
        if (pivot_row_of_col[c] != SIZE_MAX) x[c] = b[pivot_row_of_col[c]];
    return true;
}

} // namespace

SearchResult search_reduced_mf(const Polynomial& f, const FreeModule& target,
                               const FreeModule& source) {
    const Field k = f.field();
    if (k.is_rational())
        throw domain_error("search_reduced_mf requires a prime field");
    const std::uint32_t p = k.characteristic();
    if (p > 3)
        throw domain_error("search_reduced_mf supports characteristic at most 3");
    const std::uint32_t nvars = f.num_vars();
    if (nvars > 4)
        throw domain_error("search_reduced_mf supports at most 4 variables");
    const std::size_t rank = target.rank();
    if (rank == 0 || source.rank() != rank)
        throw domain_error("twist pattern must describe a square matrix of positive rank");
    if (rank > 2)
        throw domain_error("search_reduced_mf supports rank at most 2");
    const Homogeneity hom = f.homogeneity();
    if (!hom.homogeneous || hom.any_degree || hom.degree < 2)
        throw domain_error("search target must be homogeneous of degree at least 2");
    const long d = hom.degree;

    // Entry degrees.  phi: source -> target, psi: target(-d) -> source.
    auto phi_deg = [&](std::size_t j, std::size_t i) {
        return source.twists[i] - target.twists[j];
    };
    auto psi_deg = [&](std::size_t kk, std::size_t i) {
        return target.twists[i] + d - source.twists[kk];
    };
    auto prod_deg = [&](std::size_t j, std::size_t i) {
        return target.twists[i] + d - target.twists[j];
    };

    // An all-zero row of phi*psi can never equal f on the diagonal.
    for (std::size_t i = 0; i < rank; ++i) {
        bool feasible = false;
        for (std::size_t kk = 0; kk < rank; ++kk)
            if (phi_deg(i, kk) >= 1 && psi_deg(kk, i) >= 1) feasible = true;
        if (!feasible) return {std::nullopt, 0, true};
    }

    // Monomial bases per degree.
    std::unordered_map<long, std::vector<Monomial>> basis;
    std::unordered_map<long, std::unordered_map<Monomial, std::uint32_t, MonomialHash>> index_of;
    auto ensure_basis = [&](long deg) {
        if (basis.count(deg)) return;
        auto b = monomials_of_degree(nvars, deg);
        auto& idx = index_of[deg];
        for (std::uint32_t t = 0; t < b.size(); ++t) idx.emplace(b[t], t);
        basis.emplace(deg, std::move(b));
    };

    // phi coefficient slots, row-major.
    struct Slot {
        std::size_t row, col;
        long deg;
        std::uint32_t offset, size;
    };
    std::vector<Slot> slots;
    std::uint32_t total_digits = 0;
    for (std::size_t j = 0; j < rank; ++j) {
        for (std::size_t i = 0; i < rank; ++i) {
            const long deg = phi_deg(j, i);
            if (deg < 1) continue;
            ensure_basis(deg);
            const auto sz = static_cast<std::uint32_t>(basis[deg].size());
            slots.push_back({j, i, deg, total_digits, sz});
            total_digits += sz;
        }
    }

    // Candidate budget: p^total_digits enumerations at most.
    {
        std::uint64_t cand = 1;
        const std::uint64_t cap = std::uint64_t(1) << 30;
        for (std::uint32_t t = 0; t < total_digits; ++t) {
            cand *= p;
            if (cand > cap)
                throw budget_error("search space exceeds 2^30 candidates");
        }
    }

    // Per-row / per-column digit ranges of phi, for the zero-line shortcut.
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> row_ranges(rank),
        col_ranges(rank);
    for (const Slot& s : slots) {
        row_ranges[s.row].push_back({s.offset, s.offset + s.size});
        col_ranges[s.col].push_back({s.offset, s.offset + s.size});
    }

    // Precompute, per psi column, the linear system layout.
    struct Contribution {
        std::uint32_t digit; // phi coefficient index
        std::uint32_t cell;  // row-major index into the system matrix
    };
    struct ColumnSystem {
        std::size_t rows = 0, cols = 0;
        std::vector<Contribution> contribs;
        // Unknown layout: for each psi row k, offset into the unknown vector
        // (SIZE_MAX when the entry is forced zero) and its basis degree.
        std::vector<std::size_t> unknown_offset;
        std::vector<long> unknown_deg;
        std::vector<std::uint32_t> rhs;
    };
    ensure_basis(d);
    std::vector<std::uint32_t> f_coef(basis[d].size(), 0);
    for (const Term& t : f.terms()) f_coef[index_of[d].at(t.mono)] = static_cast<std::uint32_t>(t.coef.residue());

    std::vector<ColumnSystem> systems(rank);
    for (std::size_t i = 0; i < rank; ++i) {
        ColumnSystem& sys = systems[i];
        sys.unknown_offset.assign(rank, SIZE_MAX);
        sys.unknown_deg.assign(rank, 0);
        for (std::size_t kk = 0; kk < rank; ++kk) {
            const long deg = psi_deg(kk, i);
            sys.unknown_deg[kk] = deg;
            if (deg < 1) continue;
            ensure_basis(deg);
            sys.unknown_offset[kk] = sys.cols;
            sys.cols += basis[deg].size();
        }
        // Equation rows: product entries (j, i) with any contribution or on
        // the diagonal.
        std::vector<std::size_t> eq_row_offset(rank, SIZE_MAX);
        for (std::size_t j = 0; j < rank; ++j) {
            bool any = (j == i);
            for (std::size_t kk = 0; kk < rank; ++kk)
                if (phi_deg(j, kk) >= 1 && psi_deg(kk, i) >= 1) any = true;
            if (!any) continue;
            const long deg = prod_deg(j, i);
            ensure_basis(deg);
            eq_row_offset[j] = sys.rows;
            sys.rows += basis[deg].size();
        }
        sys.rhs.assign(sys.rows, 0);
        if (eq_row_offset[i] != SIZE_MAX)
            for (std::size_t t = 0; t < f_coef.size(); ++t)
                sys.rhs[eq_row_offset[i] + t] = f_coef[t];
        for (const Slot& s : slots) {
            const std::size_t j = s.row, kk = s.col;
            if (eq_row_offset[j] == SIZE_MAX) continue;
            if (sys.unknown_offset[kk] == SIZE_MAX) continue;
            const auto& pb = basis[s.deg];
            const auto& qb = basis[sys.unknown_deg[kk]];
            const auto& pidx = index_of[prod_deg(j, i)];
            for (std::uint32_t a = 0; a < pb.size(); ++a) {
                for (std::uint32_t b = 0; b < qb.size(); ++b) {
                    const Monomial prod = pb[a] * qb[b];
                    const std::size_t row = eq_row_offset[j] + pidx.at(prod);
                    const std::size_t col = sys.unknown_offset[kk] + b;
                    sys.contribs.push_back({s.offset + a,
                                            static_cast<std::uint32_t>(row * sys.cols + col)});
                }
            }
        }
    }

    // Enumerate phi coefficient assignments: a base-p odometer whose last
    // digit varies fastest.
    std::vector<std::uint8_t> digits(total_digits, 0);
    std::vector<std::uint32_t> A, b, x;
    std::vector<std::vector<std::uint32_t>> solution(rank);
    SearchResult result;
    bool done = total_digits == 0;
    while (!done) {
        ++result.candidates_tried;

        bool degenerate = false;
        for (std::size_t l = 0; l < rank && !degenerate; ++l) {
            for (const auto* ranges : {&row_ranges[l], &col_ranges[l]}) {
                bool nonzero = false;
                for (const auto& [lo, hi] : *ranges)
                    for (std::uint32_t t = lo; t < hi; ++t)
                        if (digits[t]) nonzero = true;
                if (!nonzero) degenerate = true;
            }
        }

        bool solved = !degenerate;
        if (solved) {
            for (std::size_t i = 0; i < rank; ++i) {
                ColumnSystem& sys = systems[i];
                A.assign(sys.rows * sys.cols, 0);
                b = sys.rhs;
                for (const Contribution& ct : sys.contribs) A[ct.cell] += digits[ct.digit];
                for (auto& v : A) v %= p;
                if (!solve_mod_p(A, b, sys.rows, sys.cols, p, x)) {
                    solved = false;
                    break;
                }
                solution[i] = x;
            }
        }

        if (solved) {
            GradedMatrix phi(k, nvars, source, target);
            for (const Slot& s : slots) {
                std::vector<Term> terms;
                const auto& bs = basis[s.deg];
                for (std::uint32_t t = 0; t < s.size; ++t)
                    if (digits[s.offset + t])
                        terms.push_back({bs[t], Scalar::of_int(k, digits[s.offset + t])});
                phi.set_entry(s.row, s.col, Polynomial::from_terms(k, nvars, std::move(terms)));
            }
            GradedMatrix psi(k, nvars, target.twisted(-d), source);
            for (std::size_t i = 0; i < rank; ++i) {
                const ColumnSystem& sys = systems[i];
                for (std::size_t kk = 0; kk < rank; ++kk) {
                    if (sys.unknown_offset[kk] == SIZE_MAX) continue;
                    const auto& bs = basis.at(sys.unknown_deg[kk]);
                    std::vector<Term> terms;
                    for (std::uint32_t t = 0; t < bs.size(); ++t) {
                        const std::uint32_t v = solution[i][sys.unknown_offset[kk] + t];
                        if (v) terms.push_back({bs[t], Scalar::of_int(k, v)});
                    }
                    psi.set_entry(kk, i, Polynomial::from_terms(k, nvars, std::move(terms)));
                }
            }
            MatrixFactorization mf{f, std::move(phi), std::move(psi)};
            if (verify(mf).ok()) {
                result.found = std::move(mf);
                return result;
            }
        }

        // Advance the odometer.
        std::size_t pos = total_digits;
        while (pos > 0) {
            --pos;
            if (++digits[pos] < p) break;
            digits[pos] = 0;
            if (pos == 0) done = true;
        }
    }
    result.exhaustive = true;
    return result;
}

} // namespace mfk
