#include "dkpent/json_io.hpp"

#include <json.hpp>

namespace dkpent::io {

using nlohmann::json;

namespace {

json alphabet_json(const ncalg::AlphabetPtr& a) {
    json names = json::array();
    if (a && !a->is_y_family())
        for (const auto& n : a->names()) names.push_back(n);
    else if (a && a->is_y_family())
        names.push_back("y*");
    return names;
}

ncalg::AlphabetPtr alphabet_from_json(const json& j) {
    std::vector<std::string> names = j.get<std::vector<std::string>>();
    if (names.size() == 1 && names[0] == "y*") return ncalg::y_alphabet();
    return ncalg::alphabet(names);
}

json word_json(const ncalg::AlphabetPtr& a, const ncalg::Word& w) {
    json out = json::array();
    for (ncalg::Letter l : w) out.push_back(a->letter_name(l));
    return out;
}

ncalg::Word word_from_json(const ncalg::AlphabetPtr& a, const json& j) {
    ncalg::Word w;
    for (const auto& s : j) w.push_back(a->letter_index(s.get<std::string>()));
    return w;
}

} // namespace

std::string to_json(const ncalg::NCPoly& p) {
    json j;
    j["alphabet"] = alphabet_json(p.alph());
    json terms = json::array();
    for (const auto& [w, c] : p.terms())
        terms.push_back({{"coeff", scalar_to_string(c)}, {"word", word_json(p.alph(), w)}});
    j["terms"] = terms;
    return j.dump();
}

ncalg::NCPoly ncpoly_from_json(const std::string& text) {
    json j = json::parse(text);
    auto a = alphabet_from_json(j.at("alphabet"));
    ncalg::NCPoly p(a);
    for (const auto& t : j.at("terms"))
        p.add_term(word_from_json(a, t.at("word")), scalar_from_string(t.at("coeff").get<std::string>()));
    return p;
}

std::string to_json(const ncalg::CyclicPoly& p) {
    json j;
    j["alphabet"] = alphabet_json(p.alph());
    j["cyclic"] = true;
    json terms = json::array();
    for (const auto& [w, c] : p.terms())
        terms.push_back({{"coeff", scalar_to_string(c)}, {"word", word_json(p.alph(), w)}});
    j["terms"] = terms;
    return j.dump();
}

std::string to_json(const freelie::LieElement& e) {
    json j;
    j["alphabet"] = alphabet_json(e.alph());
    json coords = json::array();
    for (const auto& [w, c] : e.coords())
        coords.push_back({{"coeff", scalar_to_string(c)}, {"lyndon", word_json(e.alph(), w)}});
    j["coords"] = coords;
    return j.dump();
}

freelie::LieElement lie_from_json(const std::string& text) {
    json j = json::parse(text);
    auto a = alphabet_from_json(j.at("alphabet"));
    freelie::LieElement e(a);
    for (const auto& t : j.at("coords"))
        e.add_coord(word_from_json(a, t.at("lyndon")), scalar_from_string(t.at("coeff").get<std::string>()));
    return e;
}

std::string to_json(const braids::BraidWord& b) {
    json j;
    j["n"] = b.n;
    json w = json::array();
    for (const auto& c : b.word) w.push_back({c.index, c.sign});
    j["word"] = w;
    if (b.fixed > 0) j["fixed"] = b.fixed;
    return j.dump();
}

braids::BraidWord braid_from_json(const std::string& text) {
    json j = json::parse(text);
    braids::BraidWord b;
    b.n = j.at("n").get<int>();
    for (const auto& c : j.at("word")) b.word.push_back({c.at(0).get<int>(), c.at(1).get<int>()});
    if (j.contains("fixed")) b.fixed = j.at("fixed").get<int>();
    return b;
}

std::string to_json(const krv::TangentialDerivation& u) {
    json j;
    j["a0"] = json::parse(to_json(u.a0));
    j["a1"] = json::parse(to_json(u.a1));
    return j.dump();
}

krv::TangentialDerivation tder_from_json(const std::string& text) {
    json j = json::parse(text);
    return krv::TangentialDerivation(ncpoly_from_json(j.at("a0").dump()), ncpoly_from_json(j.at("a1").dump()));
}

std::string subspace_to_json(const std::string& ambient, const std::string& spec, int degree,
                             const linalg::Subspace& s) {
    json j;
    j["ambient"] = ambient;
    j["spec"] = spec;
    j["degree"] = degree;
    j["version"] = kSubspaceFormatVersion;
    j["ambient_dim"] = s.ambient_dim();
    json rows = json::array();
    for (std::size_t i = 0; i < s.dim(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < s.ambient_dim(); ++c) row.push_back(scalar_to_string(s.basis().at(i, c)));
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j.dump();
}

bool subspace_from_json(const std::string& text, const std::string& ambient, const std::string& spec,
                        int degree, linalg::Subspace& out) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) return false;
    if (!j.contains("version") || j["version"].get<int>() != kSubspaceFormatVersion) return false;
    if (j.value("ambient", "") != ambient || j.value("spec", "") != spec) return false;
    if (j.value("degree", -1) != degree) return false;
    const std::size_t dim = j.at("ambient_dim").get<std::size_t>();
    linalg::Matrix rows(0, dim);
    for (const auto& r : j.at("rows")) {
        linalg::Vec v;
        for (const auto& c : r) v.push_back(scalar_from_string(c.get<std::string>()));
        if (v.size() != dim) return false;
        rows.push_row(std::move(v));
    }
    out = linalg::Subspace(dim, std::move(rows));
    return true;
}

} // namespace dkpent::io
