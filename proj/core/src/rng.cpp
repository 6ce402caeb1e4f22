#include "dkpent/rng.hpp"

namespace dkpent::rng {

int Gen::uniform(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(eng_);
}

Scalar Gen::small_scalar() {
    int num = 0;
    while (num == 0) num = uniform(-3, 3);
    return Scalar(num) / uniform(1, 3);
}

freelie::LieElement Gen::lie(const ncalg::AlphabetPtr& a, int degree) {
    freelie::LieElement e(a);
    for (const ncalg::Word& w : freelie::lyndon_basis(a, degree))
        if (uniform(0, 2) == 0) e.add_coord(w, small_scalar());
    return e;
}

freelie::LieElement Gen::lie_nonzero(const ncalg::AlphabetPtr& a, int degree) {
    for (int tries = 0; tries < 64; ++tries) {
        freelie::LieElement e = lie(a, degree);
        if (!e.is_zero()) return e;
    }
    // Fall back to a basis element.
    freelie::LieElement e(a);
    e.add_coord(freelie::lyndon_basis(a, degree).front(), 1);
    return e;
}

ncalg::NCPoly Gen::ncpoly(const ncalg::AlphabetPtr& a, int degree, int terms) {
    ncalg::NCPoly p(a);
    for (int t = 0; t < terms; ++t) p.add_term(word(a->size(), degree), small_scalar());
    return p;
}

ncalg::Word Gen::word(std::size_t num_letters, int length) {
    ncalg::Word w;
    for (int i = 0; i < length; ++i)
        w.push_back(static_cast<ncalg::Letter>(uniform(0, static_cast<int>(num_letters) - 1)));
    return w;
}

dkho::CombedLie Gen::combed(int n, int degree) {
    const auto& basis = dkho::tn_basis(n, degree);
    linalg::Vec v(basis.size(), Scalar(0));
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (uniform(0, 2) == 0) v[i] = small_scalar();
    return dkho::tn_from_vec(n, degree, v);
}

braids::BraidWord Gen::braid(int n, int length) {
    braids::BraidWord b;
    b.n = n;
    for (int i = 0; i < length; ++i) b.word.push_back({uniform(1, n - 1), uniform(0, 1) ? 1 : -1});
    return braids::free_reduce(std::move(b));
}

braids::BraidWord Gen::pure_braid(int n, int generators) {
    // Random word in the standard pure generators A_{ij}.
    braids::BraidWord b;
    b.n = n;
    for (int t = 0; t < generators; ++t) {
        int i = uniform(1, n - 1);
        int j = uniform(i + 1, n);
        braids::BraidWord a;
        a.n = n;
        for (int k = j - 1; k > i; --k) a.word.push_back({k, 1});
        a.word.push_back({i, 1});
        a.word.push_back({i, 1});
        for (int k = i + 1; k <= j - 1; ++k) a.word.push_back({k, -1});
        if (uniform(0, 1)) a = braids::inverse(a);
        b = braids::compose(b, a);
    }
    return b;
}

braids::BraidWord Gen::commutator_braid(int n, int factors) {
    braids::BraidWord b;
    b.n = n;
    for (int t = 0; t < factors; ++t) {
        braids::BraidWord u = pure_braid(n, 1);
        braids::BraidWord v = pure_braid(n, 1);
        braids::BraidWord c = braids::compose(braids::compose(u, v),
                                              braids::compose(braids::inverse(u), braids::inverse(v)));
        b = braids::compose(b, c);
    }
    return b;
}

} // namespace dkpent::rng
