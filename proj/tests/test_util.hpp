#ifndef PFOL_TEST_UTIL_HPP
#define PFOL_TEST_UTIL_HPP

#include <random>

#include "pfol/multipoly.hpp"

namespace pfol::testutil {

// random polynomial with total degree <= deg and about `terms` terms
inline MultiPoly random_poly(std::mt19937_64& rng, const Field& f, int nvars, int deg,
                             int terms) {
    MultiPoly::Builder b(f, nvars);
    u128 q = *f.cardinality();
    for (int t = 0; t < terms; ++t) {
        unsigned budget = unsigned(deg);
        Monomial m;
        for (int v = 0; v < nvars; ++v) {
            unsigned e = unsigned(rng() % (budget + 1));
            m.e[size_t(v)] = uint16_t(e);
            budget -= e;
        }
        b.add(m, FieldElement::by_index(f, rng() % u64(q)));
    }
    return b.build();
}

inline MultiPoly random_nonzero_poly(std::mt19937_64& rng, const Field& f, int nvars,
                                     int deg, int terms) {
    for (int tries = 0; tries < 100; ++tries) {
        MultiPoly p = random_poly(rng, f, nvars, deg, terms);
        if (!p.is_zero()) return p;
    }
    return MultiPoly::constant(f, nvars, 1);
}

// random homogeneous polynomial of exact degree `deg` (possibly zero)
inline MultiPoly random_homogeneous(std::mt19937_64& rng, const Field& f, int deg,
                                    int terms) {
    MultiPoly::Builder b(f, 3);
    u128 q = *f.cardinality();
    for (int t = 0; t < terms; ++t) {
        unsigned a = unsigned(rng() % unsigned(deg + 1));
        unsigned bb = unsigned(rng() % (deg + 1 - a));
        Monomial m(a, bb, unsigned(deg) - a - bb);
        b.add(m, FieldElement::by_index(f, rng() % u64(q)));
    }
    return b.build();
}

} // namespace pfol::testutil

#endif
