#pragma once

#include <vector>

#include "qsurf/laurent.hpp"
#include "qsurf/torus.hpp"

namespace qsurf {

constexpr size_t kDefaultMutationDepth = 12;

CompatiblePair make_compatible_pair(const IntMatrix& b_tilde, const IntMatrix& lambda);

struct QuantumSeed {
    CompatiblePair pair;
    // Variables expressed in the initial torus.
    std::vector<TorusElement> cluster;
    IntMatrix initial_lambda;

    size_t frozen_count() const { return pair.m() - pair.n(); }
    static QuantumSeed initial(const CompatiblePair& pair);
};

// k is 1-based throughout.
IntMatrix mutate_matrix(const IntMatrix& b_tilde, size_t k);
IntMatrix mutate_lambda(const IntMatrix& lambda, const IntMatrix& b_tilde, size_t k);
QuantumSeed mutate_seed(const QuantumSeed& seed, size_t k);
QuantumSeed mutation_sequence(const QuantumSeed& seed, const std::vector<size_t>& ks,
                              size_t depth_limit = kDefaultMutationDepth);

// Commutative mutation over Laurent polynomials, kept independent of the
// quantum code path.
struct ClassicalSeed {
    IntMatrix b_tilde;
    std::vector<LaurentPoly> cluster;

    static ClassicalSeed initial(const IntMatrix& b_tilde);
};
ClassicalSeed classical_mutate(const ClassicalSeed& seed, size_t k);

} // namespace qsurf
