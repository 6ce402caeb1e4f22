#include "dkpent/lyndon.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace dkpent::freelie {

bool is_lyndon(const Word& w) {
    if (w.empty()) return false;
    if (w.size() == 1) return true;
    Word rot = w;
    for (std::size_t i = 1; i < w.size(); ++i) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (!(w < rot)) return false;
    }
    return true;
}

std::vector<Word> all_words(std::size_t num_letters, int length) {
    std::vector<Word> out;
    if (length < 0) return out;
    Word w(length, 0);
    const Letter top = static_cast<Letter>(num_letters - 1);
    while (true) {
        out.push_back(w);
        int i = length - 1;
        while (i >= 0 && w[i] == top) w[i--] = 0;
        if (i < 0) break;
        ++w[i];
    }
    return out;
}

std::vector<Word> lyndon_words(std::size_t num_letters, int length) {
    std::vector<Word> out;
    if (length <= 0 || num_letters == 0) return out;
    // Duval's algorithm, filtered to the exact length.
    Word w{0};
    const Letter kmax = static_cast<Letter>(num_letters - 1);
    while (true) {
        if (static_cast<int>(w.size()) == length) out.push_back(w);
        // Extend periodically to the target length, then increment.
        Word t = w;
        while (static_cast<int>(t.size()) < length) t.push_back(t[t.size() % w.size()]);
        while (!t.empty() && t.back() == kmax) t.pop_back();
        if (t.empty()) break;
        ++t.back();
        w = std::move(t);
    }
    return out;
}

long long witt_dimension(std::size_t num_letters, int length) {
    if (length <= 0) return 0;
    // (1/n) sum_{d | n} mu(d) k^{n/d}
    auto mobius = [](int n) {
        int result = 1;
        for (int p = 2; p * p <= n; ++p) {
            if (n % p) continue;
            n /= p;
            if (n % p == 0) return 0;
            result = -result;
        }
        if (n > 1) result = -result;
        return result;
    };
    long long total = 0;
    for (int d = 1; d <= length; ++d) {
        if (length % d) continue;
        long long power = 1;
        for (int i = 0; i < length / d; ++i) power *= static_cast<long long>(num_letters);
        total += mobius(d) * power;
    }
    return total / length;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
    if (w.size() < 2) throw std::invalid_argument("standard_factorization needs length >= 2");
    for (std::size_t i = 1; i < w.size(); ++i) {
        Word suffix(w.begin() + i, w.end());
        if (is_lyndon(suffix)) return {Word(w.begin(), w.begin() + i), std::move(suffix)};
    }
    throw std::logic_error("no Lyndon suffix found; input not Lyndon?");
}

namespace {
std::mutex g_expand_mutex;
std::map<std::pair<const ncalg::Alphabet*, Word>, ncalg::NCPoly>& expand_cache() {
    static std::map<std::pair<const ncalg::Alphabet*, Word>, ncalg::NCPoly> c;
    return c;
}
} // namespace

ncalg::NCPoly expand_bracketing(const ncalg::AlphabetPtr& a, const Word& w) {
    {
        std::lock_guard<std::mutex> lock(g_expand_mutex);
        auto it = expand_cache().find({a.get(), w});
        if (it != expand_cache().end()) return it->second;
    }
    ncalg::NCPoly result;
    if (w.size() == 1) {
        result = ncalg::NCPoly::letter(a, w[0]);
    } else {
        auto [u, v] = standard_factorization(w);
        result = ncalg::commutator(expand_bracketing(a, u), expand_bracketing(a, v));
    }
    std::lock_guard<std::mutex> lock(g_expand_mutex);
    expand_cache().emplace(std::make_pair(a.get(), w), result);
    return result;
}

ncalg::NCPoly dynkin(const ncalg::NCPoly& p) {
    ncalg::NCPoly r(p.alph());
    for (const auto& [w, c] : p.terms()) {
        if (w.empty()) continue;
        ncalg::NCPoly cur = ncalg::NCPoly::letter(p.alph(), w[0]);
        for (std::size_t i = 1; i < w.size(); ++i)
            cur = ncalg::commutator(cur, ncalg::NCPoly::letter(p.alph(), w[i]));
        r += cur * c;
    }
    return r;
}

} // namespace dkpent::freelie
