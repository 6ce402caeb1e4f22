// dkpent: basis computation, equation solving, theorem audits, pentagon
// evaluation and braid reports for the Drinfeld-Kohno / double-shuffle /
// Kashiwara-Vergne toolkit.
#include <CLI11.hpp>
#include <json.hpp>

#include "dkpent/comb.hpp"
#include "dkpent/emergent.hpp"
#include "dkpent/johnson.hpp"
#include "dkpent/json_io.hpp"
#include "dkpent/magnus.hpp"
#include "dkpent/pspace.hpp"
#include "dkpent/rng.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace dkpent;
using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Output {
    bool pretty = false;
    void emit(const json& j) const { std::cout << (pretty ? j.dump(2) : j.dump()) << std::endl; }
};

struct CacheDir {
    fs::path dir;
    bool enabled = false;

    static CacheDir from_options(const std::string& flag, bool disabled) {
        CacheDir c;
        if (disabled) return c;
        if (!flag.empty())
            c.dir = flag;
        else if (const char* env = std::getenv("DKPENT_CACHE_DIR"))
            c.dir = env;
        else
            c.dir = ".dkpent-cache";
        c.enabled = true;
        return c;
    }

    fs::path entry(const std::string& ambient, const std::string& spec, int degree) const {
        std::string name = ambient + "__" + spec + "__d" + std::to_string(degree) + "__v" +
                           std::to_string(io::kSubspaceFormatVersion) + ".json";
        for (char& ch : name)
            if (ch == '(' || ch == ')' || ch == ',' || ch == ' ') ch = '-';
        return dir / name;
    }

    bool load(const std::string& ambient, const std::string& spec, int degree,
              linalg::Subspace& out) const {
        if (!enabled) return false;
        std::ifstream in(entry(ambient, spec, degree));
        if (!in) return false;
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        if (io::subspace_from_json(text, ambient, spec, degree, out)) return true;
        std::cerr << "warning: ignoring stale or corrupt cache entry "
                  << entry(ambient, spec, degree).string() << std::endl;
        return false;
    }

    void store(const std::string& ambient, const std::string& spec, int degree,
               const linalg::Subspace& s) const {
        if (!enabled) return;
        std::error_code ec;
        fs::create_directories(dir, ec);
        std::ofstream out(entry(ambient, spec, degree));
        if (!out) {
            std::cerr << "warning: cache directory not writable, proceeding without cache" << std::endl;
            return;
        }
        out << io::subspace_to_json(ambient, spec, degree, s);
    }
};

struct AlgebraChoice {
    enum class Kind { Tn, Pn, WI, WJ } kind = Kind::Tn;
    int n = 4;
    dkho::SubSpec spec;
};

AlgebraChoice parse_algebra(const std::string& name, int lcs_k) {
    AlgebraChoice a;
    auto finish = [&](AlgebraChoice c) {
        if (lcs_k > 1 && c.kind == AlgebraChoice::Kind::Tn)
            c.spec = dkho::SubSpec::lcs(lcs_k, c.spec);
        return c;
    };
    if (name == "WI") {
        a.kind = AlgebraChoice::Kind::WI;
        return a;
    }
    if (name == "WJ") {
        a.kind = AlgebraChoice::Kind::WJ;
        return a;
    }
    if (name.size() == 2 && name[0] == 't') {
        a.n = name[1] - '0';
        if (a.n < 2 || a.n > 6) throw CLI::ValidationError("algebra", "t_n supports 2 <= n <= 6");
        a.spec = dkho::SubSpec::full();
        return finish(a);
    }
    if (name.size() == 2 && name[0] == 'p') {
        a.kind = AlgebraChoice::Kind::Pn;
        a.n = name[1] - '0';
        if (a.n < 3 || a.n > 6) throw CLI::ValidationError("algebra", "p_n supports 3 <= n <= 6");
        return a;
    }
    if (name.rfind("brun", 0) == 0) {
        std::string rest = name.substr(4);
        if (rest.size() == 1) {
            a.n = rest[0] - '0';
            a.spec = dkho::SubSpec::brun();
        } else if (rest.size() == 2) {
            int m = rest[0] - '0', nn = rest[1] - '0';
            a.n = m + nn;
            a.spec = dkho::SubSpec::brun_mixed(m);
        } else {
            throw CLI::ValidationError("algebra", "unknown brun spec: " + name);
        }
        if (a.n < 2 || a.n > 6) throw CLI::ValidationError("algebra", "strand count out of range");
        return finish(a);
    }
    if (name.rfind("dk", 0) == 0 && name.size() == 4) {
        int m = name[2] - '0', nn = name[3] - '0';
        a.n = m + nn;
        if (a.n < 2 || a.n > 6) throw CLI::ValidationError("algebra", "strand count out of range");
        a.spec = dkho::SubSpec::dk(m);
        return finish(a);
    }
    throw CLI::ValidationError("algebra", "unknown algebra: " + name);
}

json subspace_json(const linalg::Subspace& s, const std::vector<std::string>& labels) {
    json rows = json::array();
    for (std::size_t i = 0; i < s.dim(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < s.ambient_dim(); ++c) row.push_back(scalar_to_string(s.basis().at(i, c)));
        rows.push_back(row);
    }
    json j;
    j["dim"] = s.dim();
    j["basis"] = rows;
    j["coordinates"] = labels;
    return j;
}

int default_degree_guard(int n) { return n >= 5 ? 6 : 8; }

int cmd_basis(const std::string& algebra, int degree, int lcs_k, const CacheDir& cache, const Output& out,
              bool force) {
    AlgebraChoice a = parse_algebra(algebra, lcs_k);
    json result;
    result["algebra"] = algebra;
    if (lcs_k > 1) result["lcs"] = lcs_k;
    json per_degree = json::array();
    const int guard = default_degree_guard(a.n);
    if (!force && degree > guard)
        throw CLI::ValidationError("degree", "degree exceeds the runtime guard (" + std::to_string(guard) +
                                                 "); pass --force to override");
    for (int d = 1; d <= degree; ++d) {
        json entry;
        entry["degree"] = d;
        switch (a.kind) {
            case AlgebraChoice::Kind::Tn: {
                std::string ambient = "t" + std::to_string(a.n);
                std::string spec = a.spec.key() + (lcs_k > 1 ? "" : "");
                linalg::Subspace s;
                if (!cache.load(ambient, spec, d, s)) {
                    s = dkho::tn_subspace(a.n, a.spec, d);
                    cache.store(ambient, spec, d, s);
                }
                std::vector<std::string> labels;
                for (const auto& [comp, w] : dkho::tn_basis(a.n, d))
                    labels.push_back("s" + std::to_string(comp) + ":" +
                                     ncalg::word_to_string(*dkho::component_alphabet(comp), w));
                entry.update(subspace_json(s, labels));
                break;
            }
            case AlgebraChoice::Kind::Pn: {
                entry["dim"] = dkho::pn_dim(a.n, d);
                break;
            }
            case AlgebraChoice::Kind::WI: {
                linalg::Subspace s = dkho::wi_subspace(d);
                std::vector<std::string> labels;
                for (const auto& w : freelie::lyndon_basis(dkho::wi_alphabet(), d))
                    labels.push_back(ncalg::word_to_string(*dkho::wi_alphabet(), w));
                entry.update(subspace_json(s, labels));
                break;
            }
            case AlgebraChoice::Kind::WJ: {
                linalg::Subspace s = dkho::wj_subspace(d);
                std::vector<std::string> labels;
                for (const auto& w : freelie::lyndon_basis(dkho::wj_alphabet(), d))
                    labels.push_back(ncalg::word_to_string(*dkho::wj_alphabet(), w));
                entry.update(subspace_json(s, labels));
                break;
            }
        }
        per_degree.push_back(entry);
    }
    result["degrees"] = per_degree;
    out.emit(result);
    return 0;
}

pentagon::Flavor parse_flavor(const std::string& f) {
    if (f == "grt") return pentagon::Flavor::GRT;
    if (f == "dmr") return pentagon::Flavor::DMR;
    if (f == "krv") return pentagon::Flavor::KRV;
    throw CLI::ValidationError("flavor", "unknown flavor: " + f);
}

int cmd_solve(const std::string& system, int weight, const std::string& flavor, int k, const Output& out,
              bool force) {
    if (!force && weight > 8)
        throw CLI::ValidationError("weight", "weight exceeds the runtime guard (8); pass --force");
    pentagon::System sys;
    if (system == "dmr0") sys = pentagon::System::Dmr0;
    else if (system == "grt1") sys = pentagon::System::Grt1;
    else if (system == "pentk") sys = pentagon::System::PentK;
    else if (system == "krvsym") sys = pentagon::System::KrvSymPair;
    else if (system == "grtem") sys = pentagon::System::GrtEm;
    else throw CLI::ValidationError("system", "unknown system: " + system);

    pentagon::SolveOptions opts;
    opts.flavor = parse_flavor(flavor);
    opts.k = k;

    json result;
    result["system"] = system;
    if (sys == pentagon::System::PentK) {
        result["flavor"] = flavor;
        result["k"] = k;
    }
    json weights = json::array();
    for (int w = 2; w <= weight; ++w) {
        json entry;
        entry["weight"] = w;
        std::vector<freelie::LieElement> basis = pentagon::solve_basis(sys, w, opts);
        entry["dim"] = basis.size();
        json list = json::array();
        for (const auto& e : basis) list.push_back(json::parse(io::to_json(e)));
        entry["basis"] = list;
        weights.push_back(entry);
    }
    result["weights"] = weights;
    out.emit(result);
    return 0;
}

int cmd_verify(const std::string& theorem, int max_degree, int max_weight, int samples, int max_k,
               std::uint64_t seed, const Output& out) {
    json result;
    result["theorem"] = theorem;
    result["seed"] = seed;
    bool pass = true;
    rng::Gen g(seed);
    auto xy = ncalg::xy_alphabet();

    if (theorem == "relations") {
        json rows = json::array();
        for (const pentagon::AuditRow& row : pentagon::implication_audit(max_weight, max_k)) {
            json r;
            r["weight"] = row.weight;
            r["k"] = row.k;
            r["flavor"] = "all";
            r["dim"] = {{"grt", row.dim_grt}, {"dmr", row.dim_dmr}, {"krv", row.dim_krv}};
            r["contains"] = json::array({row.grt_in_dmr, row.dmr_in_krv, row.grt_k_monotone,
                                         row.dmr_k_monotone, row.krv_k_monotone});
            if (!row.ok()) pass = false;
            rows.push_back(r);
        }
        result["rows"] = rows;
    } else if (theorem == "dmr") {
        json rows = json::array();
        for (int w = 3; w <= max_weight; ++w) {
            pentagon::SolveOptions o;
            o.flavor = pentagon::Flavor::DMR;
            o.k = 1;
            linalg::Subspace a = pentagon::solve_space(pentagon::System::PentK, w, o);
            linalg::Subspace b = pentagon::solve_space(pentagon::System::Dmr0, w);
            bool eq = a == b;
            if (!eq) pass = false;
            rows.push_back({{"weight", w}, {"dim", a.dim()}, {"equal", eq}});
        }
        result["rows"] = rows;
    } else if (theorem == "shuffle-coproduct") {
        json rows = json::array();
        for (int d = 3; d <= max_degree; ++d)
            for (int t = 0; t < samples; ++t) {
                freelie::LieElement psi = g.lie_nonzero(xy, d);
                dmr::DiagramReport rep = dmr::dmr_diagram_check(psi);
                dmr::DiagramReport repc = dmr::dmr_diagram_check(psi, true);
                if (!rep.pass || !repc.pass) {
                    pass = false;
                    rows.push_back({{"degree", d}, {"defect_left", rep.left.str()}, {"defect_right", rep.right.str()}});
                }
            }
        result["failures"] = rows;
    } else if (theorem == "div-mu") {
        for (int m = 2; m <= max_degree; ++m)
            for (const ncalg::Word& w : freelie::all_words(2, m)) {
                if (ncalg::min_rotation(w) != w) continue;
                if (!krv::div_mu_identity_check(w)) pass = false;
            }
        result["max_degree"] = max_degree;
    } else if (theorem == "krv-commutative") {
        json rows = json::array();
        for (int w = 3; w <= max_weight; ++w) {
            // Basis of L^sym via the speciality kernel.
            auto words = freelie::lyndon_basis(xy, w);
            const std::size_t rows_dim = freelie::lyndon_basis(xy, w + 1).size();
            linalg::Matrix m(rows_dim, words.size());
            for (std::size_t j = 0; j < words.size(); ++j) {
                freelie::LieElement phi(xy);
                phi.add_coord(words[j], 1);
                linalg::Vec col = freelie::lie_to_vec(krv::special_defect(krv::sd(phi)).is_zero()
                                                          ? freelie::LieElement(xy)
                                                          : freelie::as_lie(krv::special_defect(krv::sd(phi))),
                                                      w + 1);
                for (std::size_t i = 0; i < rows_dim; ++i) m.at(i, j) = col[i];
            }
            linalg::Subspace sym(words.size(), linalg::kernel(m));
            std::size_t checked = 0;
            for (std::size_t i = 0; i < sym.dim(); ++i) {
                freelie::LieElement psi = freelie::lie_from_vec(xy, w, sym.basis().row(i));
                ncalg::CyclicPoly lhs =
                    ncalg::cyclic_project(emergent::pent_tilde(psi, emergent::PentTilde::Sym));
                lhs *= Scalar(1, w);
                if (!(lhs == krv::divergence(krv::sd(psi)))) pass = false;
                ++checked;
            }
            rows.push_back({{"weight", w}, {"checked", checked}});
        }
        result["rows"] = rows;
    } else if (theorem == "krv") {
        json rows = json::array();
        for (int w = 3; w <= max_weight; ++w) {
            emergent::KrvAuditRow row = emergent::krv_equivalence_audit(w);
            if (!row.a_equals_b || !row.c_in_b) pass = false;
            rows.push_back({{"weight", row.weight},
                            {"dimA", row.dim_a},
                            {"dimB", row.dim_b},
                            {"dimC", row.dim_c},
                            {"equal", row.a_equals_b},
                            {"contained", row.c_in_b},
                            {"convention", row.with_xinf ? "with x_infinity" : "without x_infinity"}});
        }
        result["rows"] = rows;
    } else if (theorem == "kv-right") {
        // Independent check of the commuting square: cobracket co-Jacobi on
        // all cyclic words up to max_degree.
        auto x = ncalg::x_alphabet();
        for (int m = 2; m <= max_degree; ++m)
            for (const ncalg::Word& w : freelie::all_words(2, m)) {
                if (ncalg::min_rotation(w) != w) continue;
                ncalg::CyclicPoly a(x);
                a.add_class(w, 1);
                ncalg::WedgePoly d = krv::necklace_cobracket(a);
                std::map<std::tuple<ncalg::Word, ncalg::Word, ncalg::Word>, Scalar> acc;
                auto add3 = [&acc](const ncalg::Word& p, const ncalg::Word& q, const ncalg::Word& r,
                                   const Scalar& c) {
                    acc[{p, q, r}] += c;
                    acc[{q, r, p}] += c;
                    acc[{r, p, q}] += c;
                };
                for (const auto& [k2, c] : d.terms()) {
                    ncalg::CyclicPoly first(x);
                    first.add_class(k2.first, 1);
                    for (const auto& [k3, c2] : krv::necklace_cobracket(first).terms()) {
                        add3(k3.first, k3.second, k2.second, c * c2);
                        add3(k3.second, k3.first, k2.second, -c * c2);
                    }
                    ncalg::CyclicPoly second(x);
                    second.add_class(k2.second, 1);
                    for (const auto& [k3, c2] : krv::necklace_cobracket(second).terms()) {
                        add3(k3.first, k3.second, k2.first, -c * c2);
                        add3(k3.second, k3.first, k2.first, c * c2);
                    }
                }
                for (const auto& [key, c] : acc)
                    if (c != 0) pass = false;
            }
        result["max_degree"] = max_degree;
    } else if (theorem == "pent-j-route") {
        for (int t = 0; t < samples; ++t) {
            int d = 2 + t % std::max(1, max_degree - 1);
            freelie::LieElement psi = g.lie_nonzero(xy, d);
            if (!(emergent::pent1_krv_closed(psi, emergent::PentVariant::T13T23) ==
                  emergent::pent1_krv_route(psi, emergent::PentVariant::T13T23)))
                pass = false;
        }
        result["samples"] = samples;
    } else {
        throw CLI::ValidationError("theorem", "unknown theorem: " + theorem);
    }

    result["pass"] = pass;
    out.emit(result);
    return pass ? 0 : 1;
}

int cmd_pent(const std::string& flavor, int k, const std::string& input_file, const std::string& inline_json,
             const Output& out) {
    std::string text = inline_json;
    if (!input_file.empty()) {
        std::ifstream in(input_file);
        if (!in) throw CLI::ValidationError("input", "cannot read " + input_file);
        text.assign((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    }
    if (text.empty()) throw CLI::ValidationError("input", "no input element");
    freelie::LieElement phi = io::lie_from_json(text);
    json result;
    result["flavor"] = flavor;
    result["k"] = k;
    json residuals = json::array();
    bool zero = true;
    for (int d = std::max(2, phi.min_degree()); d <= phi.max_degree(); ++d) {
        freelie::LieElement comp = phi.homogeneous_part(d);
        if (comp.is_zero()) continue;
        linalg::Vec r = pentagon::pent_k_eval(comp, parse_flavor(flavor), k);
        json coords = json::array();
        for (const auto& c : r) {
            if (c != 0) zero = false;
            coords.push_back(scalar_to_string(c));
        }
        residuals.push_back({{"degree", d}, {"residual", coords}});
    }
    result["zero"] = zero;
    result["residuals"] = residuals;
    out.emit(result);
    return 0;
}

braids::BraidWord read_braid(const std::string& input_file, const std::string& word, int n) {
    if (!input_file.empty()) {
        std::ifstream in(input_file);
        if (!in) throw CLI::ValidationError("input", "cannot read " + input_file);
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        return io::braid_from_json(text);
    }
    return braids::braid_from_string(n, word);
}

int cmd_braid_pent_triviality(const std::string& phi_word, int truncate, const Output& out) {
    braids::BraidWord phi = braids::braid_from_string(3, phi_word);
    if (!braids::is_pure(phi)) throw CLI::ValidationError("phi", "phi must be a pure braid");
    braids::BraidWord pent = braids::pent_braid(phi);
    braids::TrivialityReport rep = braids::n_triviality_report(pent, truncate);
    json result;
    result["phi"] = braids::braid_to_string(phi);
    result["pent"] = json::parse(io::to_json(pent));
    result["defined"] = rep.defined;
    if (rep.defined) {
        result["leading_degree"] = rep.leading < 0 ? json("> " + std::to_string(truncate)) : json(rep.leading);
        result["in_deletion_kernels"] = rep.in_deletion_kernels;
        result["lie_leading"] = rep.lie_leading;
        result["leading_in_brun"] = rep.leading_in_brun;
        if (rep.leading >= 0) result["leading_term"] = json::parse(io::to_json(rep.leading_poly));
    }
    out.emit(result);
    return 0;
}

int cmd_braid_is_brunnian(const std::string& input_file, const std::string& word, int n, const Output& out) {
    braids::BraidWord b = read_braid(input_file, word, n);
    json result;
    result["n"] = b.n;
    result["brunnian"] = braids::is_brunnian(b);
    out.emit(result);
    return 0;
}

int cmd_braid_magnus(const std::string& input_file, const std::string& word, int n, int truncate,
                     const Output& out) {
    braids::BraidWord b = read_braid(input_file, word, n);
    braids::FreeGroupWord w = braids::comb_to_free(b);
    braids::MagnusSeries m = braids::magnus(w, b.n - 1, truncate);
    json result;
    result["fiber_word_length"] = w.size();
    result["leading_degree"] = braids::leading_degree(m);
    result["series"] = json::parse(io::to_json(m.poly));
    out.emit(result);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Drinfeld-Kohno / double shuffle / Kashiwara-Vergne toolkit"};
    app.require_subcommand(1);
    Output out;
    app.add_flag("--pretty", out.pretty, "pretty-print JSON output");
    std::string cache_flag;
    bool no_cache = false;
    app.add_option("--cache-dir", cache_flag, "cache directory (default: DKPENT_CACHE_DIR or .dkpent-cache)");
    app.add_flag("--no-cache", no_cache, "disable the on-disk cache");

    // basis
    auto* basis = app.add_subcommand("basis", "per-degree bases of the named algebra or subspace");
    std::string algebra = "t4";
    int degree = 4, lcs_k = 1;
    bool force = false;
    basis->add_option("--algebra", algebra, "t2..t6, p3..p6, brun4.., brun13, brun22, dk13, dk22, WI, WJ");
    basis->add_option("--degree", degree, "maximum degree")->required();
    basis->add_option("--lcs", lcs_k, "lower-central-series level (t_n subspaces)");
    basis->add_flag("--force", force, "override the degree guard");

    // solve
    auto* solve = app.add_subcommand("solve", "solution spaces of the paper's linear systems");
    std::string system = "dmr0", flavor = "dmr";
    int weight = 3, level_k = 1;
    bool force_w = false;
    solve->add_option("--system", system, "grt1, pentk, dmr0, krvsym, grtem")->required();
    solve->add_option("--weight", weight, "maximum weight")->required();
    solve->add_option("--flavor", flavor, "grt, dmr, krv (for pentk)");
    solve->add_option("--k", level_k, "filtration level (for pentk)");
    solve->add_flag("--force", force_w, "override the weight guard");

    // verify
    auto* verify = app.add_subcommand("verify", "machine verification of the theorems");
    std::string theorem;
    int max_degree = 8, max_weight = 6, samples = 50, max_k = 3;
    std::uint64_t seed = 20240901;
    verify->add_option("--theorem", theorem,
                       "relations, dmr, shuffle-coproduct, div-mu, krv-commutative, krv, kv-right, pent-j-route")
        ->required();
    verify->add_option("--max-degree", max_degree, "degree bound");
    verify->add_option("--max-weight", max_weight, "weight bound");
    verify->add_option("--samples", samples, "random samples per degree");
    verify->add_option("--max-k", max_k, "filtration level bound");
    verify->add_option("--seed", seed, "random seed (embedded in the report)");

    // pent
    auto* pent = app.add_subcommand("pent", "evaluate pent^k_flavor on a Lie element");
    std::string pent_flavor = "dmr", pent_input, pent_inline;
    int pent_k = 1;
    pent->add_option("--flavor", pent_flavor, "grt, dmr, krv");
    pent->add_option("--k", pent_k, "filtration level");
    pent->add_option("--input", pent_input, "LieElement JSON file");
    pent->add_option("--phi-json", pent_inline, "LieElement JSON inline");

    // braid
    auto* braid = app.add_subcommand("braid", "braid reports");
    auto* pt = braid->add_subcommand("pent-triviality", "Magnus criterion for Pent(Phi)");
    std::string phi_word;
    int truncate = 6;
    pt->add_option("--phi", phi_word, "3-strand braid word, e.g. \"s1 S2 s1\"")->required();
    pt->add_option("--truncate", truncate, "Magnus truncation degree");
    auto* ib = braid->add_subcommand("is-brunnian", "deletion-triviality test");
    std::string braid_input, braid_word;
    int braid_n = 4;
    ib->add_option("--input", braid_input, "braid JSON file");
    ib->add_option("--word", braid_word, "braid word text");
    ib->add_option("--n", braid_n, "strand count for --word");
    auto* mg = braid->add_subcommand("magnus", "Magnus expansion of the combed fiber word");
    std::string mg_input, mg_word;
    int mg_n = 4, mg_trunc = 6;
    mg->add_option("--input", mg_input, "braid JSON file");
    mg->add_option("--word", mg_word, "braid word text");
    mg->add_option("--n", mg_n, "strand count for --word");
    mg->add_option("--truncate", mg_trunc, "truncation degree");
    braid->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0; // --help
        std::cerr << e.what() << std::endl;
        return 2;
    }

    try {
        CacheDir cache = CacheDir::from_options(cache_flag, no_cache);
        if (basis->parsed()) return cmd_basis(algebra, degree, lcs_k, cache, out, force);
        if (solve->parsed()) return cmd_solve(system, weight, flavor, level_k, out, force_w);
        if (verify->parsed())
            return cmd_verify(theorem, max_degree, max_weight, samples, max_k, seed, out);
        if (pent->parsed()) return cmd_pent(pent_flavor, pent_k, pent_input, pent_inline, out);
        if (braid->parsed()) {
            if (pt->parsed()) return cmd_braid_pent_triviality(phi_word, truncate, out);
            if (ib->parsed()) return cmd_braid_is_brunnian(braid_input, braid_word, braid_n, out);
            if (mg->parsed()) return cmd_braid_magnus(mg_input, mg_word, mg_n, mg_trunc, out);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    }
    return 2;
}
