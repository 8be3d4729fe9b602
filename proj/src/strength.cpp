#include "mfk/strength.hpp"

#include <string>

namespace mfk {

long floor_div(long a, long b) {
    long q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

long ceil_div(long a, long b) {
    long q = a / b, r = a % b;
    if (r != 0 && ((r < 0) == (b < 0))) ++q;
    return q;
}

std::string StrengthBound::to_string() const {
    return infinite ? "infinite" : std::to_string(value);
}

SingularityProfile singularity_profile(const Polynomial& f) {
    const Homogeneity hom = f.homogeneity();
    if (f.is_zero() || !hom.homogeneous)
        throw domain_error("singularity profile requires a nonzero homogeneous polynomial");
    if (hom.degree < 2)
        throw domain_error("singularity profile requires degree at least 2");

    std::vector<Polynomial> gens;
    for (std::uint32_t i = 0; i < f.num_vars(); ++i) {
        Polynomial di = f.partial_derivative(i);
        if (!di.is_zero()) gens.push_back(std::move(di));
    }
    gens.push_back(f);
    Ideal J(f.field(), f.num_vars(), std::move(gens));

    SingularityProfile out{f, 0, 0, 0, 0};
    out.jacobian_codim_R = static_cast<std::size_t>(codimension(J));
    out.sing_codim_hypersurface = out.jacobian_codim_R - 1;
    const long sc = static_cast<long>(out.sing_codim_hypersurface);
    out.e = floor_div(sc - 2, 2);
    out.strength_lower = ceil_div(sc - 1, 2);
    return out;
}

StrengthCertificate collective_strength_certificate(const std::vector<Polynomial>& fs) {
    if (fs.empty())
        throw domain_error("collective strength certificate needs at least one polynomial");
    const Field k = fs[0].field();
    const std::uint32_t nvars = fs[0].num_vars();
    bool any_linear = false;
    for (const Polynomial& f : fs) {
        if (f.field() != k || f.num_vars() != nvars)
            throw domain_error("certificate inputs must live in one ring");
        const Homogeneity hom = f.homogeneity();
        if (f.is_zero() || !hom.homogeneous)
            throw domain_error("certificate inputs must be nonzero homogeneous polynomials");
        if (hom.degree < 1)
            throw domain_error("certificate inputs must have positive degree");
        if (hom.degree == 1) any_linear = true;
    }

    StrengthCertificate cert;
    cert.polys = fs;
    if (any_linear) {
        // A linear form is a product of positive-degree factors in no way at
        // all, so its strength -- and the tuple's collective strength -- is
        // infinite.
        cert.certified_collective_lower = StrengthBound::inf();
        return cert;
    }
    if (fs.size() > nvars) {
        // The Jacobian has fewer columns than rows, so no minor of size
        // fs.size() exists: the minors ideal is zero and only the vacuous
        // bound -1 is certified.
        cert.minors_codim = 0;
        cert.certified_collective_lower = StrengthBound::of(-1);
        return cert;
    }
    Ideal J = jacobian_minors_ideal(fs, static_cast<std::uint32_t>(fs.size()));
    const long c = codimension(J);
    cert.minors_codim = static_cast<std::size_t>(c);
    cert.certified_collective_lower = StrengthBound::of(ceil_div(c, 2) - 1);
    return cert;
}

StrengthCertificate secondary_strength_bound(const StrengthDecomposition& D) {
    std::vector<Polynomial> all = D.gs();
    for (const Polynomial& h : D.hs()) all.push_back(h);
    return collective_strength_certificate(all);
}

long quadric_strength(const Polynomial& q) {
    const Homogeneity hom = q.homogeneity();
    if (q.is_zero() || !hom.homogeneous || hom.degree != 2)
        throw domain_error("quadric strength requires a nonzero quadratic form");
    const Field k = q.field();
    if (k.characteristic() == 2)
        throw domain_error("quadric strength via the symmetric form needs characteristic != 2");

    const std::uint32_t n = q.num_vars();
    const Scalar half = Scalar::one(k) / Scalar::of_int(k, 2);
    std::vector<std::vector<Scalar>> B(n, std::vector<Scalar>(n, Scalar::zero(k)));
    for (const Term& t : q.terms()) {
        std::uint32_t idx[2];
        std::uint32_t found = 0;
        for (std::uint32_t v = 0; v < n; ++v) {
            for (std::uint32_t rep = 0; rep < t.mono.exponent(v); ++rep) idx[found++] = v;
        }
        const std::uint32_t i = idx[0], j = idx[1];
        if (i == j) {
            B[i][i] = t.coef;
        } else {
            B[i][j] = t.coef * half;
            B[j][i] = B[i][j];
        }
    }

    // Rank by Gaussian elimination.
    std::size_t rank = 0;
    for (std::uint32_t c = 0; c < n && rank < n; ++c) {
        std::size_t piv = SIZE_MAX;
        for (std::size_t r = rank; r < n; ++r)
            if (!B[r][c].is_zero()) {
                piv = r;
                break;
            }
        if (piv == SIZE_MAX) continue;
        std::swap(B[piv], B[rank]);
        const Scalar inv = B[rank][c].inverse();
        for (std::uint32_t j = c; j < n; ++j) B[rank][j] *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == rank || B[r][c].is_zero()) continue;
            const Scalar factor = B[r][c];
            for (std::uint32_t j = c; j < n; ++j) B[r][j] -= factor * B[rank][j];
        }
        ++rank;
    }
    return ceil_div(static_cast<long>(rank), 2) - 1;
}

GapReport e_s_gap_check(const StrengthDecomposition& D) {
    Polynomial f = D.f();
    if (f.is_zero())
        throw domain_error("the decomposition sums to zero; no hypersurface to analyze");
    SingularityProfile profile = singularity_profile(f);
    const long e = profile.e;
    GapReport rep{std::move(f),
                  D.s(),
                  std::move(profile),
                  static_cast<long>(D.s()) >= e + 1,
                  e + 1 >= 0 ? (1L << (e + 1)) : 1,
                  e >= 0 ? (1L << e) : 1};
    return rep;
}

} // namespace mfk
