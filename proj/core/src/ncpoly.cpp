#include "dkpent/ncpoly.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace dkpent::ncalg {

std::string Alphabet::letter_name(Letter l) const {
    if (y_family_) return "y" + std::to_string(l + 1);
    if (l >= names_.size()) throw std::out_of_range("letter index out of range");
    return names_[l];
}

Letter Alphabet::letter_index(const std::string& name) const {
    if (y_family_) {
        if (name.size() < 2 || name[0] != 'y') throw std::invalid_argument("bad y letter: " + name);
        long n = std::stol(name.substr(1));
        if (n < 1) throw std::invalid_argument("bad y letter: " + name);
        return static_cast<Letter>(n - 1);
    }
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<Letter>(i);
    throw std::invalid_argument("letter not in alphabet: " + name);
}

namespace {
std::mutex g_registry_mutex;
std::vector<AlphabetPtr>& registry() {
    static std::vector<AlphabetPtr> r;
    return r;
}
} // namespace

AlphabetPtr alphabet(const std::vector<std::string>& names) {
    std::lock_guard<std::mutex> lock(g_registry_mutex);
    for (const auto& a : registry())
        if (!a->is_y_family() && a->names() == names) return a;
    auto a = std::make_shared<Alphabet>(names);
    registry().push_back(a);
    return a;
}

AlphabetPtr y_alphabet() {
    static AlphabetPtr y = std::make_shared<Alphabet>(true);
    return y;
}

AlphabetPtr x_alphabet() { return alphabet({"x0", "x1"}); }
AlphabetPtr xy_alphabet() { return alphabet({"x", "y"}); }

int word_weight(const Alphabet& a, const Word& w) {
    int d = 0;
    for (Letter l : w) d += a.letter_weight(l);
    return d;
}

std::string word_to_string(const Alphabet& a, const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ".";
        s += a.letter_name(w[i]);
    }
    return s;
}

void NCPoly::require_same_alphabet(const NCPoly& o) const {
    if (alph_ && o.alph_ && alph_ != o.alph_)
        throw std::invalid_argument("alphabet mismatch");
}

void NCPoly::add_term(const Word& w, const Scalar& c) {
    if (c == 0) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    require_same_alphabet(o);
    if (!alph_) alph_ = o.alph_;
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    require_same_alphabet(o);
    if (!alph_) alph_ = o.alph_;
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

NCPoly& NCPoly::operator*=(const Scalar& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

NCPoly NCPoly::operator-() const {
    NCPoly r(*this);
    for (auto& [w, v] : r.terms_) v = -v;
    return r;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    a.require_same_alphabet(b);
    NCPoly r(a.alph_ ? a.alph_ : b.alph_);
    for (const auto& [u, cu] : a.terms_)
        for (const auto& [v, cv] : b.terms_) {
            Word w = u;
            w.insert(w.end(), v.begin(), v.end());
            r.add_term(w, cu * cv);
        }
    return r;
}

int NCPoly::min_degree() const {
    int d = -1;
    for (const auto& [w, c] : terms_) {
        int wd = word_weight(*alph_, w);
        if (d < 0 || wd < d) d = wd;
    }
    return d;
}

int NCPoly::max_degree() const {
    int d = -1;
    for (const auto& [w, c] : terms_) d = std::max(d, word_weight(*alph_, w));
    return d;
}

NCPoly NCPoly::homogeneous_part(int degree) const {
    NCPoly r(alph_);
    for (const auto& [w, c] : terms_)
        if (word_weight(*alph_, w) == degree) r.add_term(w, c);
    return r;
}

bool NCPoly::is_homogeneous() const {
    return terms_.empty() || min_degree() == max_degree();
}

std::string NCPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        os << (first ? "" : " + ") << scalar_to_string(c) << "*" << word_to_string(*alph_, w);
        first = false;
    }
    return os.str();
}

NCPoly commutator(const NCPoly& a, const NCPoly& b) { return a * b - b * a; }

NCPoly subst_assoc(const NCPoly& p, const std::vector<NCPoly>& images) {
    if (!p.alph() || p.alph()->is_y_family())
        throw std::invalid_argument("subst_assoc needs a finite alphabet");
    if (images.size() != p.alph()->size())
        throw std::invalid_argument("arity mismatch in substitution");
    AlphabetPtr target;
    for (const auto& im : images)
        if (im.alph()) target = im.alph();
    NCPoly r(target);
    for (const auto& [w, c] : p.terms()) {
        NCPoly acc = NCPoly::unit(target);
        for (Letter l : w) acc = acc * images[l];
        r += acc * c;
    }
    return r;
}

void TensorPoly::add_term(const Word& u, const Word& v, const Scalar& c) {
    if (c == 0) return;
    auto key = std::make_pair(u, v);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Scalar TensorPoly::coeff(const Word& u, const Word& v) const {
    auto it = terms_.find(std::make_pair(u, v));
    return it == terms_.end() ? Scalar(0) : it->second;
}

TensorPoly& TensorPoly::operator+=(const TensorPoly& o) {
    if (!alph_) alph_ = o.alph_;
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

TensorPoly& TensorPoly::operator-=(const TensorPoly& o) {
    if (!alph_) alph_ = o.alph_;
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

TensorPoly& TensorPoly::operator*=(const Scalar& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

TensorPoly operator*(const TensorPoly& a, const TensorPoly& b) {
    TensorPoly r(a.alph_ ? a.alph_ : b.alph_);
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            Word u = ka.first;
            u.insert(u.end(), kb.first.begin(), kb.first.end());
            Word v = ka.second;
            v.insert(v.end(), kb.second.begin(), kb.second.end());
            r.add_term(u, v, ca * cb);
        }
    return r;
}

std::string TensorPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        os << (first ? "" : " + ") << scalar_to_string(c) << "*" << word_to_string(*alph_, k.first)
           << "(x)" << word_to_string(*alph_, k.second);
        first = false;
    }
    return os.str();
}

TensorPoly tensor(const NCPoly& a, const NCPoly& b) {
    TensorPoly r(a.alph() ? a.alph() : b.alph());
    for (const auto& [u, cu] : a.terms())
        for (const auto& [v, cv] : b.terms()) r.add_term(u, v, cu * cv);
    return r;
}

Word min_rotation(const Word& w) {
    if (w.size() < 2) return w;
    Word best = w;
    Word rot = w;
    for (std::size_t i = 1; i < w.size(); ++i) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < best) best = rot;
    }
    return best;
}

void CyclicPoly::add_class(const Word& representative, const Scalar& c) {
    if (c == 0) return;
    Word key = min_rotation(representative);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

CyclicPoly& CyclicPoly::operator+=(const CyclicPoly& o) {
    if (!alph_) alph_ = o.alph_;
    for (const auto& [w, c] : o.terms_) add_class(w, c);
    return *this;
}

CyclicPoly& CyclicPoly::operator-=(const CyclicPoly& o) {
    if (!alph_) alph_ = o.alph_;
    for (const auto& [w, c] : o.terms_) add_class(w, -c);
    return *this;
}

CyclicPoly& CyclicPoly::operator*=(const Scalar& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

CyclicPoly CyclicPoly::reduced() const {
    CyclicPoly r(*this);
    r.terms_.erase(Word{});
    return r;
}

std::string CyclicPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        os << (first ? "" : " + ") << scalar_to_string(c) << "*|" << word_to_string(*alph_, w) << "|";
        first = false;
    }
    return os.str();
}

void WedgePoly::add_wedge(const Word& a, const Word& b, const Scalar& c) {
    if (c == 0) return;
    Word ka = min_rotation(a), kb = min_rotation(b);
    if (ka == kb) return;
    Scalar v = c;
    if (kb < ka) {
        std::swap(ka, kb);
        v = -v;
    }
    auto key = std::make_pair(std::move(ka), std::move(kb));
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, v);
    } else {
        it->second += v;
        if (it->second == 0) terms_.erase(it);
    }
}

WedgePoly& WedgePoly::operator+=(const WedgePoly& o) {
    if (!alph_) alph_ = o.alph_;
    for (const auto& [k, c] : o.terms_) add_wedge(k.first, k.second, c);
    return *this;
}

WedgePoly& WedgePoly::operator-=(const WedgePoly& o) {
    if (!alph_) alph_ = o.alph_;
    for (const auto& [k, c] : o.terms_) add_wedge(k.first, k.second, -c);
    return *this;
}

WedgePoly& WedgePoly::operator*=(const Scalar& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

std::string WedgePoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        os << (first ? "" : " + ") << scalar_to_string(c) << "*|" << word_to_string(*alph_, k.first)
           << "|^|" << word_to_string(*alph_, k.second) << "|";
        first = false;
    }
    return os.str();
}

TensorPoly coproduct(const NCPoly& p) {
    TensorPoly r(p.alph());
    for (const auto& [w, c] : p.terms()) {
        const std::size_t n = w.size();
        // Sum over subsets of positions going to the left factor.
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
            Word u, v;
            for (std::size_t i = 0; i < n; ++i)
                ((mask >> i) & 1 ? u : v).push_back(w[i]);
            r.add_term(u, v, c);
        }
    }
    return r;
}

NCPoly antipode(const NCPoly& p) {
    NCPoly r(p.alph());
    for (const auto& [w, c] : p.terms()) {
        Word rev(w.rbegin(), w.rend());
        r.add_term(rev, w.size() % 2 == 0 ? c : -c);
    }
    return r;
}

TensorPoly delta_tilde(const NCPoly& p) {
    TensorPoly d = coproduct(p);
    TensorPoly r(p.alph());
    for (const auto& [k, c] : d.terms()) {
        Word rev(k.second.rbegin(), k.second.rend());
        r.add_term(k.first, rev, k.second.size() % 2 == 0 ? c : -c);
    }
    return r;
}

Scalar counit(const NCPoly& p) { return p.coeff(Word{}); }

NCPoly d_right(const NCPoly& p, Letter l) {
    NCPoly r(p.alph());
    for (const auto& [w, c] : p.terms())
        if (!w.empty() && w.front() == l) r.add_term(Word(w.begin() + 1, w.end()), c);
    return r;
}

NCPoly d_left(const NCPoly& p, Letter l) {
    NCPoly r(p.alph());
    for (const auto& [w, c] : p.terms())
        if (!w.empty() && w.back() == l) r.add_term(Word(w.begin(), w.end() - 1), c);
    return r;
}

RightLeftDecomposition decompose_right_left(const NCPoly& p) {
    if (!p.alph() || p.alph()->is_y_family() || p.alph()->size() != 2)
        throw std::invalid_argument("decompose_right_left needs a two-letter alphabet");
    RightLeftDecomposition d;
    d.eps = counit(p);
    d.d_r0 = d_right(p, 0);
    d.d_r1 = d_right(p, 1);
    d.d_l0 = d_left(p, 0);
    d.d_l1 = d_left(p, 1);
    return d;
}

NCPoly reduced_coaction(const NCPoly& p) {
    NCPoly r(p.alph());
    for (const auto& [w, c] : p.terms()) {
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i] != w[i + 1]) continue;
            Word m;
            m.reserve(w.size() - 1);
            m.insert(m.end(), w.begin(), w.begin() + i + 1);
            m.insert(m.end(), w.begin() + i + 2, w.end());
            r.add_term(m, c);
        }
    }
    return r;
}

CyclicPoly cyclic_project(const NCPoly& p) {
    CyclicPoly r(p.alph());
    for (const auto& [w, c] : p.terms()) r.add_class(w, c);
    return r;
}

NCPoly symmetrize(const AlphabetPtr& a, const Word& cyclic_rep) {
    NCPoly r(a);
    Word rot = cyclic_rep;
    const std::size_t m = cyclic_rep.size();
    for (std::size_t i = 0; i < m; ++i) {
        r.add_term(rot, 1);
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    }
    return r;
}

NCPoly symmetrize(const CyclicPoly& c) {
    NCPoly r(c.alph());
    for (const auto& [w, v] : c.terms()) r += symmetrize(c.alph(), w) * v;
    return r;
}

WedgePoly wedge_project(const TensorPoly& t) {
    WedgePoly r(t.alph());
    for (const auto& [k, c] : t.terms()) {
        if (k.first.empty() || k.second.empty()) continue;
        r.add_wedge(k.first, k.second, c);
    }
    return r;
}

} // namespace dkpent::ncalg
