#pragma once

#include "qsurf/laurent.hpp"
#include "qsurf/valuation.hpp"

namespace qsurf {

// Exponent of the product of the diagonals crossed by w.
IntVector crossing_monomial_exponent(const Surface& s, const StringWord& w);
// Edge labels of P; boundary arcs are dropped unless the surface keeps them frozen.
IntVector weight_exponent(const Surface& s, const SnakeGraph& g, const PerfectMatching& p);
IntVector x_of_matching(const Surface& s, const SnakeGraph& g, const PerfectMatching& p);

struct ExpansionTerm {
    IndexSet index_set;
    IntVector dimension;
    int64_t valuation = 0;
    IntVector exponent;
};

struct ExpansionResult {
    TorusElement element;
    std::vector<ExpansionTerm> terms; // sorted by index set
    int64_t scale = 1;
};

// Sum of q^{scale * v / 2} X^{x(P)}. scale = 0 uses the uniform d of the
// seed, which makes the result agree with mutation; scale = 1 gives the
// bare valuations. The matching sum and the submodule sum are both built
// and must agree term by term.
ExpansionResult quantum_expansion(const Surface& s, const StringWord& w, int64_t scale = 0);
LaurentPoly classical_specialization(const ExpansionResult& e);

struct OracleReport {
    bool equal = false;
    TorusElement expansion;
    TorusElement mutated;
    std::string detail; // first differing term when unequal
};
// Compares the expansion of w with the variable produced by the last step
// of a mutation sequence (1-based arcs) from the initial seed.
OracleReport oracle_compare(const Surface& s, const StringWord& w, const std::vector<size_t>& sequence);

// First lattice vector where a and b differ, or empty when equal.
std::string first_difference(const TorusElement& a, const TorusElement& b);

} // namespace qsurf
