#include "mfk/json_io.hpp"

namespace mfk {

namespace {

std::string poly_str(const Polynomial& p, const std::vector<std::string>& names) {
    return names.empty() ? p.to_string() : p.to_string(names);
}

long clamp_pow2(long exp) { return exp >= 0 ? (1L << exp) : 1; }

const json& require(const json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key))
        throw domain_error(std::string("document is missing \"") + key + "\"");
    return doc.at(key);
}

std::string get_string(const json& doc, const char* key) {
    const json& v = require(doc, key);
    if (!v.is_string())
        throw domain_error(std::string("\"") + key + "\" must be a string");
    return v.get<std::string>();
}

std::uint32_t get_u32(const json& doc, const char* key) {
    const json& v = require(doc, key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long>() >= 0))
        throw domain_error(std::string("\"") + key + "\" must be a nonnegative integer");
    return v.get<std::uint32_t>();
}

std::vector<std::string> string_array(const json& v, const char* what) {
    if (!v.is_array()) throw domain_error(std::string(what) + " must be an array");
    std::vector<std::string> out;
    for (const json& e : v) {
        if (!e.is_string())
            throw domain_error(std::string(what) + " must contain strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

FreeModule twists_from(const json& v, const char* what) {
    if (!v.is_array()) throw domain_error(std::string(what) + " must be an array");
    FreeModule m;
    for (const json& e : v) {
        if (!e.is_number_integer())
            throw domain_error(std::string(what) + " must contain integers");
        m.twists.push_back(e.get<long>());
    }
    return m;
}

void put_ring(ordered_json& doc, const Field& k, std::uint32_t num_vars,
              const std::vector<std::string>& names) {
    doc["field"] = k.name();
    doc["num_vars"] = num_vars;
    if (!names.empty()) doc["var_names"] = names;
}

} // namespace

ordered_json decomposition_to_json(const StrengthDecomposition& D,
                                   const std::vector<std::string>& names) {
    ordered_json doc;
    put_ring(doc, D.field(), D.num_vars(), names);
    ordered_json gs = ordered_json::array(), hs = ordered_json::array();
    for (const Polynomial& g : D.gs()) gs.push_back(poly_str(g, names));
    for (const Polynomial& h : D.hs()) hs.push_back(poly_str(h, names));
    doc["gs"] = std::move(gs);
    doc["hs"] = std::move(hs);
    return doc;
}

ordered_json mf_to_json(const MatrixFactorization& mf,
                        const std::vector<std::string>& names) {
    ordered_json doc;
    put_ring(doc, mf.f.field(), mf.f.num_vars(), names);
    doc["f"] = poly_str(mf.f, names);
    for (const auto* part : {&mf.phi, &mf.psi}) {
        ordered_json m;
        m["source_twists"] = part->source().twists;
        m["target_twists"] = part->target().twists;
        ordered_json rows = ordered_json::array();
        for (std::size_t r = 0; r < part->rows(); ++r) {
            ordered_json row = ordered_json::array();
            for (std::size_t c = 0; c < part->cols(); ++c)
                row.push_back(poly_str(part->entry(r, c), names));
            rows.push_back(std::move(row));
        }
        m["entries"] = std::move(rows);
        doc[part == &mf.phi ? "phi" : "psi"] = std::move(m);
    }
    return doc;
}

ordered_json catalog_entry_to_json(const CatalogEntry& e) {
    ordered_json doc;
    doc["name"] = e.name;
    put_ring(doc, e.field, e.num_vars, e.var_names);
    doc["f"] = poly_str(e.f, e.var_names);
    doc["decomposition"] =
        e.decomposition ? ordered_json(decomposition_to_json(*e.decomposition, e.var_names))
                        : ordered_json(nullptr);
    doc["mf"] = e.mf ? ordered_json(mf_to_json(*e.mf, e.var_names)) : ordered_json(nullptr);
    doc["provenance"] = e.provenance;
    return doc;
}

ordered_json verification_report_to_json(const VerificationReport& r) {
    ordered_json doc;
    doc["ok"] = r.ok();
    doc["products_ok"] = r.products_ok;
    doc["graded_ok"] = r.graded_ok;
    doc["reduced_ok"] = r.reduced_ok;
    if (r.witness) {
        ordered_json w;
        w["check"] = r.witness->check;
        w["where"] = r.witness->where;
        w["row"] = r.witness->row;
        w["col"] = r.witness->col;
        w["expected"] = r.witness->expected;
        w["actual"] = r.witness->actual;
        doc["witness"] = std::move(w);
    } else {
        doc["witness"] = nullptr;
    }
    return doc;
}

ordered_json mcm_rank_to_json(const McmRank& r) {
    ordered_json doc;
    doc["r"] = r.r;
    doc["c"] = r.c.to_string();
    return doc;
}

ordered_json profile_to_json(const SingularityProfile& p,
                             const std::vector<std::string>& names) {
    ordered_json doc;
    doc["f"] = poly_str(p.f, names);
    doc["degree"] = p.f.degree();
    doc["jacobian_codim"] = p.jacobian_codim_R;
    doc["sing_codim"] = p.sing_codim_hypersurface;
    doc["e"] = p.e;
    doc["strength_lower"] = p.strength_lower;
    if (p.f.degree() == 2 && p.f.field().characteristic() != 2)
        doc["strength_upper"] = quadric_strength(p.f);
    else
        doc["strength_upper"] = nullptr;
    doc["bgs_mf_threshold"] = clamp_pow2(p.e + 1);
    doc["bgs_mcm_threshold"] = clamp_pow2(p.e);
    return doc;
}

ordered_json certificate_to_json(const StrengthCertificate& c,
                                 const std::vector<std::string>& names) {
    ordered_json doc;
    ordered_json polys = ordered_json::array();
    for (const Polynomial& f : c.polys) polys.push_back(poly_str(f, names));
    doc["polys"] = std::move(polys);
    if (c.minors_codim)
        doc["minors_codim"] = *c.minors_codim;
    else
        doc["minors_codim"] = nullptr;
    if (c.certified_collective_lower.infinite)
        doc["certified_collective_lower"] = "infinite";
    else
        doc["certified_collective_lower"] = c.certified_collective_lower.value;
    return doc;
}

ordered_json gap_report_to_json(const GapReport& r,
                                const std::vector<std::string>& names) {
    ordered_json doc;
    doc["f"] = poly_str(r.f, names);
    doc["s"] = r.s;
    doc["e"] = r.profile.e;
    doc["sing_codim"] = r.profile.sing_codim_hypersurface;
    doc["consistent"] = r.consistent;
    doc["mf_threshold"] = r.mf_threshold;
    doc["mcm_threshold"] = r.mcm_threshold;
    return doc;
}

ordered_json search_result_to_json(const SearchResult& r,
                                   const std::vector<std::string>& names) {
    ordered_json doc;
    doc["found"] = r.found ? ordered_json(mf_to_json(*r.found, names)) : ordered_json(nullptr);
    doc["candidates_tried"] = r.candidates_tried;
    doc["exhaustive"] = r.exhaustive;
    return doc;
}

ordered_json bgs_report_json(const StrengthDecomposition& D,
                             const std::vector<std::string>& names) {
    const Polynomial f = D.f();
    if (f.is_zero())
        throw domain_error("the decomposition sums to zero; no hypersurface to analyze");
    const SingularityProfile p = singularity_profile(f);
    const long s = static_cast<long>(D.s());
    ordered_json doc;
    doc["f"] = poly_str(f, names);
    doc["s_exhibited"] = s;
    doc["e"] = p.e;
    doc["strength_interval"] = {p.strength_lower, s};
    doc["mf_rank_upper"] = 1L << s;
    if (s >= 1)
        doc["mcm_rank_upper"] = 1L << (s - 1);
    else
        doc["mcm_rank_upper"] = nullptr;
    doc["bgs_mf_threshold"] = clamp_pow2(p.e + 1);
    doc["bgs_mcm_threshold"] = clamp_pow2(p.e);
    doc["consistent"] = p.e + 1 <= s;
    return doc;
}

VarTable doc_var_table(const json& doc) {
    const std::uint32_t n = get_u32(doc, "num_vars");
    if (doc.contains("var_names") && !doc.at("var_names").is_null()) {
        VarTable t = VarTable::from_names(string_array(doc.at("var_names"), "\"var_names\""));
        if (t.size() != n)
            throw domain_error("\"var_names\" length does not match \"num_vars\"");
        return t;
    }
    return VarTable::defaults(n);
}

StrengthDecomposition decomposition_from_json(const json& doc) {
    if (!doc.is_object()) throw domain_error("decomposition document must be a JSON object");
    if (!doc.contains("gs")) {
        if (doc.contains("decomposition") && !doc.at("decomposition").is_null())
            return decomposition_from_json(doc.at("decomposition"));
        throw domain_error("document carries no decomposition");
    }
    const Field k = Field::from_name(get_string(doc, "field"));
    const VarTable vars = doc_var_table(doc);
    std::vector<Polynomial> gs, hs;
    for (const std::string& s : string_array(require(doc, "gs"), "\"gs\""))
        gs.push_back(parse_polynomial(s, k, vars));
    for (const std::string& s : string_array(require(doc, "hs"), "\"hs\""))
        hs.push_back(parse_polynomial(s, k, vars));
    return StrengthDecomposition::make(std::move(gs), std::move(hs));
}

MatrixFactorization mf_from_json(const json& doc) {
    if (!doc.is_object()) throw domain_error("factorization document must be a JSON object");
    if (!doc.contains("phi")) {
        if (doc.contains("mf") && !doc.at("mf").is_null())
            return mf_from_json(doc.at("mf"));
        throw domain_error("document carries no matrix factorization");
    }
    const Field k = Field::from_name(get_string(doc, "field"));
    const std::uint32_t n = get_u32(doc, "num_vars");
    const VarTable vars = doc_var_table(doc);
    Polynomial f = parse_polynomial(get_string(doc, "f"), k, vars);

    auto read_matrix = [&](const json& m, const char* what) {
        FreeModule src = twists_from(require(m, "source_twists"), "\"source_twists\"");
        FreeModule tgt = twists_from(require(m, "target_twists"), "\"target_twists\"");
        GradedMatrix out(k, n, src, tgt);
        const json& rows = require(m, "entries");
        if (!rows.is_array() || rows.size() != tgt.rank())
            throw domain_error(std::string(what) + ": \"entries\" must have one row per target twist");
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const json& row = rows.at(r);
            if (!row.is_array() || row.size() != src.rank())
                throw domain_error(std::string(what) +
                                   ": each entries row must have one column per source twist");
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (!row.at(c).is_string())
                    throw domain_error(std::string(what) + ": entries must be strings");
                out.set_entry(r, c, parse_polynomial(row.at(c).get<std::string>(), k, vars));
            }
        }
        return out;
    };
    GradedMatrix phi = read_matrix(require(doc, "phi"), "phi");
    GradedMatrix psi = read_matrix(require(doc, "psi"), "psi");
    return {std::move(f), std::move(phi), std::move(psi)};
}

} // namespace mfk
