#pragma once

#include <random>
#include <string>
#include <vector>

#include "qsurf/kronecker.hpp"
#include "qsurf/seeds.hpp"
#include "qsurf/skein_mult.hpp"

namespace qtest {

inline qsurf::Surface corpus(const std::string& name, qsurf::SeedMode mode = qsurf::SeedMode::Auto) {
    return qsurf::load_surface(std::string(QSURF_DATA_DIR) + "/" + name + ".json", mode);
}

inline const std::vector<std::string>& corpus_names() {
    static const std::vector<std::string> names{"annulus",         "pentagon",       "square",
                                                "hexagon_fan",     "hexagon_zigzag", "hexagon_triangle",
                                                "heptagon_zigzag", "octagon_zigzag", "nonagon_triangle"};
    return names;
}

inline qsurf::StringWord str(const qsurf::Surface& s, const std::string& text) {
    return qsurf::parse_string(s.quiver, text);
}

inline qsurf::TorusElement mono(qsurf::IntVector g, int64_t twice = 0) {
    return qsurf::TorusElement::monomial(g, qsurf::QPoly::monomial(twice));
}

// Random element with small support and coefficients.
inline qsurf::TorusElement random_element(std::mt19937& rng, size_t rank, int terms = 3) {
    std::uniform_int_distribution<int> e(-2, 2), c(-3, 3), q(-3, 3);
    qsurf::TorusElement a(rank);
    for (int t = 0; t < terms; ++t) {
        qsurf::IntVector g(rank);
        for (auto& x : g)
            x = e(rng);
        a.add_term(g, qsurf::QPoly::monomial(q(rng), c(rng)));
    }
    return a;
}

} // namespace qtest
