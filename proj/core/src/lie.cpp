#include "dkpent/lie.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace dkpent::freelie {

void LieElement::add_coord(const Word& lyndon, const Scalar& c) {
    if (c == 0) return;
    auto it = coords_.find(lyndon);
    if (it == coords_.end()) {
        coords_.emplace(lyndon, c);
    } else {
        it->second += c;
        if (it->second == 0) coords_.erase(it);
    }
}

Scalar LieElement::coord(const Word& lyndon) const {
    auto it = coords_.find(lyndon);
    return it == coords_.end() ? Scalar(0) : it->second;
}

LieElement& LieElement::operator+=(const LieElement& o) {
    if (alph_ && o.alph_ && alph_ != o.alph_) throw std::invalid_argument("alphabet mismatch");
    if (!alph_) alph_ = o.alph_;
    for (const auto& [w, c] : o.coords_) add_coord(w, c);
    return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
    if (alph_ && o.alph_ && alph_ != o.alph_) throw std::invalid_argument("alphabet mismatch");
    if (!alph_) alph_ = o.alph_;
    for (const auto& [w, c] : o.coords_) add_coord(w, -c);
    return *this;
}

LieElement& LieElement::operator*=(const Scalar& c) {
    if (c == 0) {
        coords_.clear();
        return *this;
    }
    for (auto& [w, v] : coords_) v *= c;
    return *this;
}

LieElement LieElement::operator-() const {
    LieElement r(*this);
    for (auto& [w, v] : r.coords_) v = -v;
    return r;
}

int LieElement::min_degree() const {
    int d = -1;
    for (const auto& [w, c] : coords_)
        if (d < 0 || static_cast<int>(w.size()) < d) d = static_cast<int>(w.size());
    return d;
}

int LieElement::max_degree() const {
    int d = -1;
    for (const auto& [w, c] : coords_) d = std::max<int>(d, static_cast<int>(w.size()));
    return d;
}

LieElement LieElement::homogeneous_part(int degree) const {
    LieElement r(alph_);
    for (const auto& [w, c] : coords_)
        if (static_cast<int>(w.size()) == degree) r.add_coord(w, c);
    return r;
}

std::string LieElement::str() const {
    if (coords_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : coords_) {
        os << (first ? "" : " + ") << scalar_to_string(c) << "*[" << word_to_string(*alph_, w) << "]";
        first = false;
    }
    return os.str();
}

ncalg::NCPoly to_ncpoly(const LieElement& e) {
    ncalg::NCPoly r(e.alph());
    for (const auto& [w, c] : e.coords()) r += expand_bracketing(e.alph(), w) * c;
    return r;
}

LieNormalForm lie_normal_form(const ncalg::NCPoly& p) {
    LieNormalForm nf;
    nf.element = LieElement(p.alph());
    if (p.coeff(Word{}) != 0) {
        nf.ok = false;
        nf.defect = ncalg::NCPoly(p.alph(), Word{}, p.coeff(Word{}));
        return nf;
    }
    // Triangular extraction: the lex-least support word of a Lie polynomial is
    // Lyndon, and subtracting its bracketing expansion keeps it so.
    ncalg::NCPoly rest = p;
    LieElement out(p.alph());
    while (!rest.is_zero()) {
        const auto& [w, c] = *rest.terms().begin();
        if (!is_lyndon(w)) {
            nf.ok = false;
            ncalg::NCPoly defect(p.alph());
            for (int d = p.min_degree(); d <= p.max_degree(); ++d) {
                ncalg::NCPoly h = p.homogeneous_part(d);
                defect += dynkin(h) - h * Scalar(d);
            }
            nf.defect = std::move(defect);
            return nf;
        }
        out.add_coord(w, c);
        rest -= expand_bracketing(p.alph(), w) * c;
    }
    nf.ok = true;
    nf.element = std::move(out);
    return nf;
}

LieElement as_lie(const ncalg::NCPoly& p) {
    LieNormalForm nf = lie_normal_form(p);
    if (!nf.ok) throw std::invalid_argument("polynomial is not a Lie element");
    return nf.element;
}

LieElement bracket(const LieElement& a, const LieElement& b) {
    return as_lie(ncalg::commutator(to_ncpoly(a), to_ncpoly(b)));
}

std::vector<Word> lyndon_basis(const ncalg::AlphabetPtr& a, int degree) {
    return lyndon_words(a->size(), degree);
}

linalg::Vec lie_to_vec(const LieElement& e, int degree) {
    std::vector<Word> basis = lyndon_basis(e.alph(), degree);
    linalg::Vec v(basis.size(), Scalar(0));
    for (std::size_t i = 0; i < basis.size(); ++i) v[i] = e.coord(basis[i]);
    return v;
}

LieElement lie_from_vec(const ncalg::AlphabetPtr& a, int degree, const linalg::Vec& v) {
    std::vector<Word> basis = lyndon_basis(a, degree);
    if (basis.size() != v.size()) throw std::invalid_argument("coordinate length mismatch");
    LieElement e(a);
    for (std::size_t i = 0; i < basis.size(); ++i) e.add_coord(basis[i], v[i]);
    return e;
}

LieElement substitute(const LieElement& e, const std::vector<LieElement>& images) {
    return substitute_hom(e, images, [](const LieElement& a, const LieElement& b) { return bracket(a, b); });
}

ncalg::NCPoly substitute_nc(const LieElement& e, const std::vector<ncalg::NCPoly>& images) {
    return substitute_hom(e, images,
                          [](const ncalg::NCPoly& a, const ncalg::NCPoly& b) { return ncalg::commutator(a, b); });
}

LieElement ad_word(const ncalg::AlphabetPtr& full, const Word& w_over_outer) {
    const Letter last = static_cast<Letter>(full->size() - 1);
    LieElement acc = LieElement::generator(full, last);
    for (auto it = w_over_outer.rbegin(); it != w_over_outer.rend(); ++it)
        acc = bracket(LieElement::generator(full, *it), acc);
    return acc;
}

namespace {

struct LazardTables {
    std::mutex mutex;
    std::map<std::pair<const ncalg::Alphabet*, int>, linalg::Subspace> ideal, derived;
};

LazardTables& lazard_tables() {
    static LazardTables t;
    return t;
}

} // namespace

linalg::Subspace lazard_ideal(const ncalg::AlphabetPtr& full, int degree) {
    auto& tables = lazard_tables();
    {
        std::lock_guard<std::mutex> lock(tables.mutex);
        auto it = tables.ideal.find({full.get(), degree});
        if (it != tables.ideal.end()) return it->second;
    }
    // Kernel of the substitution last -> 0 on the degree component.
    std::vector<Word> basis = lyndon_basis(full, degree);
    std::vector<std::string> outer_names(full->names().begin(), full->names().end() - 1);
    auto outer = ncalg::alphabet(outer_names);
    std::vector<LieElement> images;
    for (std::size_t l = 0; l + 1 < full->size(); ++l)
        images.push_back(LieElement::generator(outer, static_cast<Letter>(l)));
    images.push_back(LieElement(outer));
    const std::size_t target_dim = lyndon_basis(outer, degree).size();
    linalg::Matrix m(target_dim, basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        LieElement g(full);
        g.add_coord(basis[i], 1);
        linalg::Vec col = lie_to_vec(substitute(g, images), degree);
        for (std::size_t j = 0; j < target_dim; ++j) m.at(j, i) = col[j];
    }
    linalg::Subspace result(basis.size(), linalg::kernel(m));
    std::lock_guard<std::mutex> lock(tables.mutex);
    tables.ideal.emplace(std::make_pair(full.get(), degree), result);
    return result;
}

linalg::Subspace lazard_ideal_derived(const ncalg::AlphabetPtr& full, int degree) {
    auto& tables = lazard_tables();
    {
        std::lock_guard<std::mutex> lock(tables.mutex);
        auto it = tables.derived.find({full.get(), degree});
        if (it != tables.derived.end()) return it->second;
    }
    const std::size_t dim = lyndon_basis(full, degree).size();
    linalg::Matrix rows(0, dim);
    for (int p = 1; p < degree; ++p) {
        const int q = degree - p;
        if (p > q) break;
        linalg::Subspace ip = lazard_ideal(full, p);
        linalg::Subspace iq = lazard_ideal(full, q);
        for (std::size_t i = 0; i < ip.dim(); ++i)
            for (std::size_t j = 0; j < iq.dim(); ++j) {
                LieElement u = lie_from_vec(full, p, ip.basis().row(i));
                LieElement v = lie_from_vec(full, q, iq.basis().row(j));
                rows.push_row(lie_to_vec(bracket(u, v), degree));
            }
    }
    linalg::Subspace result(dim, std::move(rows));
    std::lock_guard<std::mutex> lock(tables.mutex);
    tables.derived.emplace(std::make_pair(full.get(), degree), result);
    return result;
}

LazardSplit lazard_split(const LieElement& e) {
    const auto& full = e.alph();
    if (!full || full->size() < 2) throw std::invalid_argument("lazard_split needs >= 2 letters");
    std::vector<std::string> outer_names(full->names().begin(), full->names().end() - 1);
    auto outer_alph = ncalg::alphabet(outer_names);

    LazardSplit split;
    // Outer component: kill the last letter.
    std::vector<LieElement> to_outer;
    for (std::size_t l = 0; l + 1 < full->size(); ++l)
        to_outer.push_back(LieElement::generator(outer_alph, static_cast<Letter>(l)));
    to_outer.push_back(LieElement(outer_alph));
    split.outer = substitute(e, to_outer);

    // Ideal component: e minus the embedded outer part, in ad-word coordinates
    // modulo the derived subalgebra of the ideal.
    std::vector<LieElement> embed;
    for (std::size_t l = 0; l + 1 < full->size(); ++l)
        embed.push_back(LieElement::generator(full, static_cast<Letter>(l)));
    LieElement ideal_part = e - substitute(split.outer, embed);

    for (int d = 1; d <= std::max(0, ideal_part.max_degree()); ++d) {
        LieElement comp = ideal_part.homogeneous_part(d);
        if (comp.is_zero()) continue;
        // Columns: ad_w(last) for words w over the outer letters of length d-1,
        // then a basis of [ideal, ideal] at degree d.
        std::vector<Word> ad_words;
        {
            Word w(d - 1, 0);
            const Letter top = static_cast<Letter>(full->size() - 2);
            while (true) {
                ad_words.push_back(w);
                int i = d - 2;
                while (i >= 0 && w[i] == top) w[i--] = 0;
                if (i < 0) break;
                ++w[i];
            }
        }
        linalg::Subspace derived = lazard_ideal_derived(full, d);
        const std::size_t dim = lyndon_basis(full, d).size();
        linalg::Matrix sys(dim, ad_words.size() + derived.dim());
        for (std::size_t j = 0; j < ad_words.size(); ++j) {
            linalg::Vec col = lie_to_vec(ad_word(full, ad_words[j]), d);
            for (std::size_t i = 0; i < dim; ++i) sys.at(i, j) = col[i];
        }
        for (std::size_t j = 0; j < derived.dim(); ++j)
            for (std::size_t i = 0; i < dim; ++i) sys.at(i, ad_words.size() + j) = derived.basis().at(j, i);
        // Solve sys * x = comp.
        linalg::Vec rhs = lie_to_vec(comp, d);
        linalg::Matrix aug(dim, sys.cols() + 1);
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < sys.cols(); ++j) aug.at(i, j) = sys.at(i, j);
            aug.at(i, sys.cols()) = rhs[i];
        }
        std::vector<std::size_t> pivots = linalg::rref(aug);
        linalg::Vec x(sys.cols(), Scalar(0));
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            if (pivots[i] == sys.cols())
                throw std::logic_error("lazard_split: element not in the ideal span");
            x[pivots[i]] = aug.at(i, sys.cols());
        }
        for (std::size_t j = 0; j < ad_words.size(); ++j)
            if (x[j] != 0) split.ideal_coords[ad_words[j]] += x[j];
    }
    for (auto it = split.ideal_coords.begin(); it != split.ideal_coords.end();)
        it = it->second == 0 ? split.ideal_coords.erase(it) : std::next(it);
    return split;
}

} // namespace dkpent::freelie
