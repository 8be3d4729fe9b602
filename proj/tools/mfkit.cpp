#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mfk/json_io.hpp"

namespace {

using namespace mfk;

std::string read_text(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw domain_error("cannot write " + path);
    out << text;
}

json read_json(const std::string& path) {
    const std::string text = read_text(path);
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw domain_error(std::string("invalid JSON in ") + path + ": " + e.what());
    }
}

void emit(const ordered_json& doc, const std::string& out_path = "-") {
    write_text(out_path, doc.dump(2) + "\n");
}

std::vector<long> parse_int_list(const std::string& text, const char* what) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stol(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw domain_error(std::string(what) + ": expected a comma-separated integer list");
        }
    }
    if (out.empty()) throw domain_error(std::string(what) + ": empty list");
    return out;
}

std::uint64_t effective_seed(std::uint64_t flag_seed) {
    if (const char* env = std::getenv("MFKIT_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw domain_error("MFKIT_SEED must be an unsigned integer");
        }
    }
    return flag_seed;
}

// The variable-name list a JSON document declares, for echoing polynomials
// back in the caller's names.
std::vector<std::string> doc_names(const json& doc) {
    const json* d = &doc;
    if (!d->contains("num_vars") && d->contains("decomposition") && !d->at("decomposition").is_null())
        d = &d->at("decomposition");
    if (!d->contains("num_vars") && d->contains("mf") && !d->at("mf").is_null())
        d = &d->at("mf");
    VarTable t = doc_var_table(*d);
    return t.is_default() ? std::vector<std::string>{} : t.names();
}

int exit_code = 0;

void cmd_mf_build(const std::string& decomp_path, const std::string& out_path) {
    const json doc = read_json(decomp_path);
    StrengthDecomposition D = decomposition_from_json(doc);
    const std::vector<std::string> names = doc_names(doc);
    MatrixFactorization mf = knorrer_build(D);
    const VerificationReport rep = verify(mf);
    if (!rep.ok()) {
        emit(verification_report_to_json(rep), out_path);
        std::cerr << "built factorization FAILED verification\n";
        exit_code = 1;
        return;
    }
    emit(mf_to_json(mf, names), out_path);
    std::cerr << "built rank-" << mf.rank() << " factorization of a degree-"
              << mf.f.degree() << " form; verification passed\n";
}

void cmd_mf_verify(const std::string& path) {
    const json doc = read_json(path);
    MatrixFactorization mf = mf_from_json(doc);
    const VerificationReport rep = verify(mf);
    emit(verification_report_to_json(rep));
    if (rep.ok()) {
        std::cerr << "verification passed (rank " << mf.rank() << ")\n";
    } else {
        std::cerr << "verification FAILED";
        if (rep.witness)
            std::cerr << " at " << rep.witness->where << " (" << rep.witness->row << ", "
                      << rep.witness->col << "): " << rep.witness->check;
        std::cerr << "\n";
        exit_code = 1;
    }
}

void cmd_mf_mcm_rank(const std::string& path) {
    const json doc = read_json(path);
    MatrixFactorization mf = mf_from_json(doc);
    const McmRank r = mcm_rank_of(mf);
    emit(mcm_rank_to_json(r));
    std::cerr << "det(phi) = c * f^r with r = " << r.r << ", c = " << r.c.to_string() << "\n";
}

void cmd_analyze(const std::string& path, const std::string& field_name) {
    const Field k = Field::from_name(field_name);
    const ParsedPolynomial parsed = parse_polynomial(read_text(path), k);
    const std::vector<std::string> names =
        parsed.vars.is_default() ? std::vector<std::string>{} : parsed.vars.names();
    const SingularityProfile p = singularity_profile(parsed.poly);
    emit(profile_to_json(p, names));
    std::cerr << "degree-" << p.f.degree() << " hypersurface: singular locus codimension "
              << p.sing_codim_hypersurface << ", e = " << p.e << ", strength >= "
              << p.strength_lower << "\n";
}

void cmd_strength_cert(const std::vector<std::string>& paths, const std::string& field_name) {
    const Field k = Field::from_name(field_name);
    std::vector<std::string> texts;
    for (const std::string& p : paths) texts.push_back(read_text(p));
    const VarTable vars = VarTable::inferred(texts);
    const std::vector<std::string> names =
        vars.is_default() ? std::vector<std::string>{} : vars.names();
    std::vector<Polynomial> fs;
    for (const std::string& t : texts) fs.push_back(parse_polynomial(t, k, vars));
    const StrengthCertificate cert = collective_strength_certificate(fs);
    emit(certificate_to_json(cert, names));
    std::cerr << "certified collective strength >= "
              << cert.certified_collective_lower.to_string() << "\n";
}

void cmd_bgs_check(const std::string& decomp_path) {
    const json doc = read_json(decomp_path);
    StrengthDecomposition D = decomposition_from_json(doc);
    const ordered_json rep = bgs_report_json(D, doc_names(doc));
    emit(rep);
    const bool consistent = rep.at("consistent").get<bool>();
    std::cerr << "s = " << rep.at("s_exhibited") << ", e = " << rep.at("e")
              << ", rank thresholds " << rep.at("bgs_mf_threshold") << "/"
              << rep.at("bgs_mcm_threshold") << ": "
              << (consistent ? "consistent" : "INCONSISTENT") << "\n";
    if (!consistent) exit_code = 1;
}

void cmd_catalog(const CatalogEntry& e) {
    emit(catalog_entry_to_json(e));
    std::cerr << "catalog entry " << e.name << ": " << e.provenance << "\n";
}

void cmd_search(const std::string& poly_path, const std::string& field_name,
                std::uint32_t rank, const std::string& pattern) {
    const Field k = Field::from_name(field_name);
    const ParsedPolynomial parsed = parse_polynomial(read_text(poly_path), k);
    const std::vector<std::string> names =
        parsed.vars.is_default() ? std::vector<std::string>{} : parsed.vars.names();

    const std::size_t colon = pattern.find(':');
    if (colon == std::string::npos)
        throw domain_error("--pattern must be <target twists>:<source twists>, e.g. 0,0:1,1");
    FreeModule target, source;
    target.twists = parse_int_list(pattern.substr(0, colon), "--pattern target twists");
    source.twists = parse_int_list(pattern.substr(colon + 1), "--pattern source twists");
    if (target.rank() != rank || source.rank() != rank)
        throw domain_error("--pattern twist counts must equal --rank");

    const SearchResult r = search_reduced_mf(parsed.poly, target, source);
    emit(search_result_to_json(r, names));
    if (r.found)
        std::cerr << "found a rank-" << rank << " factorization after " << r.candidates_tried
                  << " candidates\n";
    else
        std::cerr << "none (exhaustive): no reduced rank-" << rank
                  << " factorization with this pattern (" << r.candidates_tried
                  << " candidates)\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact graded matrix factorizations and strength invariants"};
    app.require_subcommand(1);

    // mf build | verify | mcm-rank
    auto* mf = app.add_subcommand("mf", "build, verify, and measure matrix factorizations");
    mf->require_subcommand(1);

    std::string build_decomp, build_out = "-";
    auto* build = mf->add_subcommand("build", "Knoerrer factorization from a decomposition");
    build->add_option("--decomp", build_decomp, "decomposition JSON file (- for stdin)")
        ->required();
    build->add_option("--out", build_out, "output file (- for stdout)");
    build->callback([&] { cmd_mf_build(build_decomp, build_out); });

    std::string verify_path;
    auto* verify_cmd = mf->add_subcommand("verify", "re-check a factorization document");
    verify_cmd->add_option("file", verify_path, "factorization JSON file (- for stdin)")
        ->required();
    verify_cmd->callback([&] { cmd_mf_verify(verify_path); });

    std::string mcm_path;
    auto* mcm = mf->add_subcommand("mcm-rank", "exponent r and scalar c in det(phi) = c*f^r");
    mcm->add_option("file", mcm_path, "factorization JSON file (- for stdin)")->required();
    mcm->callback([&] { cmd_mf_mcm_rank(mcm_path); });

    // analyze
    std::string analyze_path, analyze_field = "Q";
    auto* analyze = app.add_subcommand("analyze", "singular-locus profile of a hypersurface");
    analyze->add_option("poly-file", analyze_path, "polynomial text file (- for stdin)")
        ->required();
    analyze->add_option("--field", analyze_field, "Q or Fp:<p> (default Q)");
    analyze->callback([&] { cmd_analyze(analyze_path, analyze_field); });

    // strength cert
    auto* strength = app.add_subcommand("strength", "strength bounds");
    strength->require_subcommand(1);
    std::vector<std::string> cert_paths;
    std::string cert_field = "Q";
    auto* cert = strength->add_subcommand("cert", "certified collective strength lower bound");
    cert->add_option("poly-file", cert_paths, "polynomial text files (- for stdin)")
        ->required()
        ->expected(-1);
    cert->add_option("--field", cert_field, "Q or Fp:<p> (default Q)");
    cert->callback([&] { cmd_strength_cert(cert_paths, cert_field); });

    // bgs-check
    std::string bgs_decomp;
    auto* bgs = app.add_subcommand("bgs-check", "rank thresholds vs an exhibited decomposition");
    bgs->add_option("--decomp", bgs_decomp, "decomposition JSON file (- for stdin)")->required();
    bgs->callback([&] { cmd_bgs_check(bgs_decomp); });

    // catalog
    auto* catalog = app.add_subcommand("catalog", "named example families");
    catalog->require_subcommand(1);

    std::uint32_t cat_s = 0, cat_n = 0, cat_d = 2;
    auto* quad = catalog->add_subcommand("quadric", "split quadric x0*y0 + ... + xs*ys");
    quad->add_option("--s", cat_s, "number of summands minus one")->required();
    quad->callback([&] { cmd_catalog(quadric_entry(cat_s)); });

    std::uint32_t ps_d = 2, ps_n = 1;
    auto* ps = catalog->add_subcommand("power-sum", "z_0^d + ... + z_n^d");
    ps->add_option("--d", ps_d, "degree")->required();
    ps->add_option("--n", ps_n, "last variable index (n+1 variables)")->required();
    ps->callback([&] { cmd_catalog(power_sum_entry(ps_d, ps_n)); });

    std::uint32_t bp_d = 3, bp_s = 1, bp_n = 1;
    auto* bp = catalog->add_subcommand("block-power-sum",
                                       "sum of x_i times power sums in disjoint blocks");
    bp->add_option("--d", bp_d, "total degree")->required();
    bp->add_option("--s", bp_s, "number of summands minus one")->required();
    bp->add_option("--n", bp_n, "last index inside each block")->required();
    bp->callback([&] { cmd_catalog(block_power_sum_entry(bp_d, bp_s, bp_n)); });

    std::uint32_t det_n = 3;
    auto* det = catalog->add_subcommand("det", "generic determinant with adjugate partner");
    det->add_option("--n", det_n, "matrix size (2..4)")->required();
    det->callback([&] { cmd_catalog(generic_matrix_det(det_n)); });

    std::uint32_t pf_n = 4;
    auto* pf = catalog->add_subcommand("pfaffian", "generic Pfaffian with adjoint partner");
    pf->add_option("--n", pf_n, "matrix size (4 or 6)")->required();
    pf->callback([&] { cmd_catalog(pfaffian_entry(pf_n)); });

    std::string sample_mu;
    std::uint32_t sample_d = 4, sample_n = 3;
    std::uint64_t sample_seed = 1;
    std::string sample_field = "Q";
    auto* sample = catalog->add_subcommand("sample", "seeded pseudorandom decomposition");
    sample->add_option("--mu", sample_mu, "comma-separated type vector, e.g. 1,2")->required();
    sample->add_option("--d", sample_d, "total degree")->required();
    sample->add_option("--n", sample_n, "last variable index (n+1 variables)")->required();
    sample->add_option("--seed", sample_seed, "PRNG seed (MFKIT_SEED overrides)");
    sample->add_option("--field", sample_field, "Q or Fp:<p> (default Q)");
    sample->callback([&] {
        const std::vector<long> mu = parse_int_list(sample_mu, "--mu");
        const std::uint64_t seed = effective_seed(sample_seed);
        const Field k = Field::from_name(sample_field);
        CatalogEntry e;
        e.name = "sample-" + sample_mu + "-d" + std::to_string(sample_d) + "-n" +
                 std::to_string(sample_n) + "-seed" + std::to_string(seed);
        e.field = k;
        e.decomposition = sample_type_mu(mu, sample_d, sample_n, k, seed);
        e.num_vars = e.decomposition->num_vars();
        e.f = e.decomposition->f();
        e.provenance = "heuristically generic sample of the requested type";
        cmd_catalog(e);
    });

    auto* list = catalog->add_subcommand("list", "names of the built-in instances");
    list->callback([&] {
        ordered_json arr = ordered_json::array();
        for (const CatalogEntry& e : builtin_catalog()) {
            ordered_json item;
            item["name"] = e.name;
            item["provenance"] = e.provenance;
            arr.push_back(std::move(item));
        }
        emit(arr);
        std::cerr << arr.size() << " built-in entries\n";
    });

    // search
    std::string search_poly, search_field, search_pattern;
    std::uint32_t search_rank = 1;
    auto* search = app.add_subcommand("search", "exhaustive reduced-factorization search");
    search->add_option("poly-file", search_poly, "polynomial text file (- for stdin)")
        ->required();
    search->add_option("--field", search_field, "Fp:<p>, p <= 3")->required();
    search->add_option("--rank", search_rank, "matrix size (1 or 2)")->required();
    search->add_option("--pattern", search_pattern,
                       "target twists : source twists, e.g. 0,0:1,1")
        ->required();
    search->callback([&] { cmd_search(search_poly, search_field, search_rank, search_pattern); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const budget_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
