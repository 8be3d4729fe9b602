#include "mfk/decomposition.hpp"

#include <algorithm>
#include <numeric>

namespace mfk {

StrengthDecomposition StrengthDecomposition::make(std::vector<Polynomial> gs,
                                                  std::vector<Polynomial> hs) {
    if (gs.empty() || gs.size() != hs.size())
        throw domain_error("a decomposition needs equally many g and h factors, at least one pair");
    const Field k = gs[0].field();
    const std::uint32_t n = gs[0].num_vars();
    long d = -1;
    for (std::size_t i = 0; i < gs.size(); ++i) {
        for (const Polynomial* p : {&gs[i], &hs[i]}) {
            if (p->field() != k || p->num_vars() != n)
                throw domain_error("decomposition factors from different rings");
            if (p->is_zero()) throw domain_error("decomposition factor is zero");
            if (!p->is_homogeneous()) throw domain_error("decomposition factor is not homogeneous");
            if (p->degree() < 1)
                throw domain_error("decomposition factors must have degree at least 1");
        }
        if (gs[i].degree() > hs[i].degree()) std::swap(gs[i], hs[i]);
        long di = gs[i].degree() + hs[i].degree();
        if (d == -1) d = di;
        if (di != d)
            throw domain_error("summand degrees disagree: " + std::to_string(di) + " vs " +
                               std::to_string(d));
    }
    std::vector<std::size_t> order(gs.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return gs[a].degree() < gs[b].degree(); });
    StrengthDecomposition D;
    for (std::size_t i : order) {
        D.gs_.push_back(std::move(gs[i]));
        D.hs_.push_back(std::move(hs[i]));
    }
    return D;
}

std::vector<long> StrengthDecomposition::mu() const {
    std::vector<long> m;
    m.reserve(gs_.size());
    for (const Polynomial& g : gs_) m.push_back(g.degree());
    return m;
}

Polynomial StrengthDecomposition::f() const {
    Polynomial acc(field(), num_vars());
    for (std::size_t i = 0; i < gs_.size(); ++i) acc += gs_[i] * hs_[i];
    return acc;
}

StrengthDecomposition StrengthDecomposition::extended(std::uint32_t new_num_vars) const {
    std::vector<Polynomial> gs, hs;
    for (const Polynomial& g : gs_) gs.push_back(g.extended(new_num_vars));
    for (const Polynomial& h : hs_) hs.push_back(h.extended(new_num_vars));
    return make(std::move(gs), std::move(hs));
}

} // namespace mfk
