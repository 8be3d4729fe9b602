#include "mfk/graded.hpp"

#include <random>

namespace mfk {

GradedMatrix::GradedMatrix(Field k, std::uint32_t num_vars, FreeModule source, FreeModule target)
    : field_(k), nvars_(num_vars), src_(std::move(source)), tgt_(std::move(target)) {
    e_.assign(src_.rank() * tgt_.rank(), Polynomial::zero(k, num_vars));
}

const Polynomial& GradedMatrix::entry(std::size_t row, std::size_t col) const {
    if (row >= rows() || col >= cols()) throw domain_error("matrix index out of range");
    return e_[row * cols() + col];
}

void GradedMatrix::set_entry(std::size_t row, std::size_t col, Polynomial p) {
    if (row >= rows() || col >= cols()) throw domain_error("matrix index out of range");
    if (p.field() != field_ || p.num_vars() != nvars_)
        throw domain_error("entry from a different ring");
    e_[row * cols() + col] = std::move(p);
}

std::optional<GradingViolation> GradedMatrix::graded_violation() const {
    for (std::size_t j = 0; j < rows(); ++j) {
        for (std::size_t i = 0; i < cols(); ++i) {
            Homogeneity h = entry(j, i).homogeneity();
            if (!h.homogeneous)
                return GradingViolation{j, i, "entry is not homogeneous"};
            if (!h.compatible_with(entry_degree(j, i)))
                return GradingViolation{j, i,
                                        "entry degree " + std::to_string(h.degree) +
                                            " does not match twist difference " +
                                            std::to_string(entry_degree(j, i))};
        }
    }
    return std::nullopt;
}

std::optional<GradingViolation> GradedMatrix::constant_term_violation() const {
    for (std::size_t j = 0; j < rows(); ++j)
        for (std::size_t i = 0; i < cols(); ++i)
            if (!entry(j, i).constant_term().is_zero())
                return GradingViolation{j, i, "entry has a nonzero constant term"};
    return std::nullopt;
}

GradedMatrix GradedMatrix::identity(Field k, std::uint32_t num_vars, const FreeModule& m) {
    GradedMatrix r(k, num_vars, m, m);
    for (std::size_t i = 0; i < m.rank(); ++i)
        r.set_entry(i, i, Polynomial::constant(k, num_vars, Scalar::one(k)));
    return r;
}

GradedMatrix GradedMatrix::scalar_map(const Polynomial& f, const FreeModule& m) {
    long d = std::max(f.degree(), 0L);
    GradedMatrix r(f.field(), f.num_vars(), m.twisted(-d), m);
    for (std::size_t i = 0; i < m.rank(); ++i) r.set_entry(i, i, f);
    return r;
}

GradedMatrix GradedMatrix::block2x2(const GradedMatrix& a, const GradedMatrix& b,
                                    const GradedMatrix& c, const GradedMatrix& d) {
    if (a.field() != b.field() || a.field() != c.field() || a.field() != d.field() ||
        a.num_vars() != b.num_vars() || a.num_vars() != c.num_vars() ||
        a.num_vars() != d.num_vars())
        throw domain_error("block matrices from different rings");
    if (a.target() != b.target() || c.target() != d.target() || a.source() != c.source() ||
        b.source() != d.source())
        throw domain_error("block shapes do not fit");
    FreeModule src = FreeModule::direct_sum(a.source(), b.source());
    FreeModule tgt = FreeModule::direct_sum(a.target(), c.target());
    GradedMatrix r(a.field(), a.num_vars(), src, tgt);
    const std::size_t r0 = a.rows(), c0 = a.cols();
    for (std::size_t j = 0; j < r.rows(); ++j) {
        for (std::size_t i = 0; i < r.cols(); ++i) {
            const GradedMatrix& blk = j < r0 ? (i < c0 ? a : b) : (i < c0 ? c : d);
            r.set_entry(j, i, blk.entry(j < r0 ? j : j - r0, i < c0 ? i : i - c0));
        }
    }
    return r;
}

GradedMatrix GradedMatrix::operator-() const {
    GradedMatrix r = *this;
    for (Polynomial& p : r.e_) p = -p;
    return r;
}

bool GradedMatrix::operator==(const GradedMatrix& o) const {
    return field_ == o.field_ && nvars_ == o.nvars_ && src_ == o.src_ && tgt_ == o.tgt_ &&
           e_ == o.e_;
}

GradedMatrix GradedMatrix::extended(std::uint32_t new_num_vars) const {
    GradedMatrix r(field_, new_num_vars, src_, tgt_);
    for (std::size_t j = 0; j < rows(); ++j)
        for (std::size_t i = 0; i < cols(); ++i)
            r.set_entry(j, i, entry(j, i).extended(new_num_vars));
    return r;
}

GradedMatrix compose(const GradedMatrix& a, const GradedMatrix& b) {
    if (a.field() != b.field() || a.num_vars() != b.num_vars())
        throw domain_error("matrices from different rings");
    if (a.source() != b.target())
        throw domain_error("twist mismatch in composition");
    GradedMatrix r(a.field(), a.num_vars(), b.source(), a.target());
    for (std::size_t k = 0; k < a.rows(); ++k) {
        for (std::size_t i = 0; i < b.cols(); ++i) {
            Polynomial acc(a.field(), a.num_vars());
            for (std::size_t j = 0; j < a.cols(); ++j) {
                if (a.entry(k, j).is_zero() || b.entry(j, i).is_zero()) continue;
                acc += a.entry(k, j) * b.entry(j, i);
            }
            r.set_entry(k, i, std::move(acc));
        }
    }
    return r;
}

namespace {

Polynomial cofactor_det(Field k, std::uint32_t nvars, std::vector<std::vector<Polynomial>> m) {
    const std::size_t n = m.size();
    if (n == 0) return Polynomial::constant(k, nvars, Scalar::one(k));
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
        Polynomial cof = m[0][j] * cofactor_det(k, nvars, std::move(sub));
        det = (j % 2 == 0) ? det + cof : det - cof;
    }
    return det;
}

// Fraction-free (Bareiss) elimination: after step k every entry is a minor of
// the original matrix, and each division by the previous pivot is exact.
// Rows are swapped to the nonzero candidate pivot with the fewest terms.
Polynomial bareiss_det(Field k, std::uint32_t nvars, std::vector<std::vector<Polynomial>> m) {
    const std::size_t n = m.size();
    Polynomial prev_pivot = Polynomial::constant(k, nvars, Scalar::one(k));
    bool negate = false;
    for (std::size_t step = 0; step + 1 < n; ++step) {
        std::size_t best = n;
        for (std::size_t r = step; r < n; ++r) {
            if (m[r][step].is_zero()) continue;
            if (best == n || m[r][step].term_count() < m[best][step].term_count()) best = r;
        }
        if (best == n) return Polynomial::zero(k, nvars);
        if (best != step) {
            std::swap(m[best], m[step]);
            negate = !negate;
        }
        const Polynomial& pivot = m[step][step];
        for (std::size_t r = step + 1; r < n; ++r) {
            for (std::size_t c = step + 1; c < n; ++c) {
                Polynomial num = m[r][c] * pivot - m[r][step] * m[step][c];
                if (num.is_zero()) {
                    m[r][c] = std::move(num);
                    continue;
                }
                auto q = num.divided_by(prev_pivot);
                if (!q)
                    throw domain_error("fraction-free elimination division failed");
                m[r][c] = std::move(*q);
            }
            m[r][step] = Polynomial::zero(k, nvars);
        }
        prev_pivot = pivot;
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

std::vector<std::vector<Polynomial>> to_rows(const GradedMatrix& m) {
    std::vector<std::vector<Polynomial>> rows;
    rows.reserve(m.rows());
    for (std::size_t j = 0; j < m.rows(); ++j) {
        std::vector<Polynomial> row;
        row.reserve(m.cols());
        for (std::size_t i = 0; i < m.cols(); ++i) row.push_back(m.entry(j, i));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

Polynomial determinant(const GradedMatrix& m) {
    if (m.rows() != m.cols()) throw domain_error("determinant of a non-square matrix");
    if (m.rows() > 16)
        throw budget_error("exact determinants are limited to 16x16, matrix is " +
                           std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                           "; use the randomized check instead");
    if (m.rows() <= 6) return cofactor_det(m.field(), m.num_vars(), to_rows(m));
    return bareiss_det(m.field(), m.num_vars(), to_rows(m));
}

namespace {

// Deterministic scalar draw; avoids std::uniform_int_distribution, whose
// output sequence is implementation-defined.
Scalar draw_scalar(const Field& k, std::mt19937_64& rng) {
    if (k.is_rational()) {
        // Integers in [-50, 50].
        return Scalar::of_int(k, (long)(rng() % 101) - 50);
    }
    return Scalar::of_int(k, (long)(rng() % k.characteristic()));
}

// Exact determinant of a scalar matrix by Gaussian elimination.
Scalar scalar_det(const Field& k, std::vector<std::vector<Scalar>> m) {
    const std::size_t n = m.size();
    Scalar det = Scalar::one(k);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pivot = n;
        for (std::size_t r = step; r < n; ++r) {
            if (!m[r][step].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot == n) return Scalar::zero(k);
        if (pivot != step) {
            std::swap(m[pivot], m[step]);
            det = -det;
        }
        det *= m[step][step];
        Scalar inv = m[step][step].inverse();
        for (std::size_t r = step + 1; r < n; ++r) {
            if (m[r][step].is_zero()) continue;
            Scalar factor = m[r][step] * inv;
            for (std::size_t c = step; c < n; ++c) m[r][c] -= factor * m[step][c];
        }
    }
    return det;
}

} // namespace

RandomizedDetReport randomized_det_check(const GradedMatrix& m, const Polynomial& f,
                                         std::uint32_t r, std::uint32_t trials,
                                         std::uint64_t seed) {
    if (m.rows() != m.cols()) throw domain_error("determinant of a non-square matrix");
    if (f.field() != m.field() || f.num_vars() != m.num_vars())
        throw domain_error("polynomial and matrix from different rings");
    if (f.is_zero()) throw domain_error("cannot check against the zero polynomial");
    std::mt19937_64 rng(seed);
    const Field& k = m.field();
    std::optional<Scalar> c;
    std::uint32_t resample_budget = 64 * std::max(trials, 1u);
    for (std::uint32_t t = 0; t < trials; ++t) {
        std::vector<Scalar> point;
        Scalar fv = Scalar::zero(k);
        for (;;) {
            point.clear();
            for (std::uint32_t i = 0; i < m.num_vars(); ++i) point.push_back(draw_scalar(k, rng));
            fv = f.evaluate(point);
            if (!fv.is_zero()) break;
            if (resample_budget-- == 0)
                throw budget_error("could not sample a point where f is nonzero");
        }
        std::vector<std::vector<Scalar>> num(m.rows(), std::vector<Scalar>());
        for (std::size_t j = 0; j < m.rows(); ++j) {
            num[j].reserve(m.cols());
            for (std::size_t i = 0; i < m.cols(); ++i)
                num[j].push_back(m.entry(j, i).evaluate(point));
        }
        Scalar dv = scalar_det(k, std::move(num));
        Scalar fr = Scalar::one(k);
        for (std::uint32_t e = 0; e < r; ++e) fr *= fv;
        Scalar ratio = dv / fr;
        if (ratio.is_zero()) return {false, ratio, t + 1};
        if (!c) {
            c = ratio;
        } else if (*c != ratio) {
            return {false, *c, t + 1};
        }
    }
    return {true, c ? *c : Scalar::one(k), trials};
}

} // namespace mfk
