#include "qsurf/expansion.hpp"

#include <algorithm>
#include <set>

#include "qsurf/seeds.hpp"

namespace qsurf {

IntVector crossing_monomial_exponent(const Surface& s, const StringWord& w) {
    IntVector g(s.rank(), 0);
    for (int v : w.vertices) {
        int idx = s.lattice_index(v);
        if (idx < 0)
            throw Error(ErrorCode::InvalidArgument, "string vertex " + std::to_string(v) + " is not internal");
        ++g[static_cast<size_t>(idx)];
    }
    return g;
}

IntVector weight_exponent(const Surface& s, const SnakeGraph& g, const PerfectMatching& p) {
    IntVector out(s.rank(), 0);
    for (int e : p) {
        int idx = s.lattice_index(g.edges.at(static_cast<size_t>(e)).label);
        if (idx >= 0)
            ++out[static_cast<size_t>(idx)];
    }
    return out;
}

IntVector x_of_matching(const Surface& s, const SnakeGraph& g, const PerfectMatching& p) {
    IntVector a = weight_exponent(s, g, p);
    IntVector c = crossing_monomial_exponent(s, g.word);
    for (size_t i = 0; i < a.size(); ++i)
        a[i] -= c[i];
    return a;
}

ExpansionResult quantum_expansion(const Surface& s, const StringWord& w, int64_t scale) {
    if (scale == 0)
        scale = s.uniform_d();
    if (scale < 0)
        throw Error(ErrorCode::InvalidArgument, "scale must be positive");
    SnakeGraph g = label_snake(w, s);
    MatchingValuation v = valuation_v(g);
    SubmoduleValuation vg = valuation_v_gamma(s, w);
    if (v.size() != vg.size())
        throw Error(ErrorCode::BijectionViolation, std::to_string(v.size()) + " matchings but " +
                                                       std::to_string(vg.size()) + " canonical submodules");

    const size_t n = s.n();
    const IntMatrix& b = s.pair.b_tilde;
    const IntVector index = x_of_matching(s, g, minimal_matching(g));

    ExpansionResult r;
    r.scale = scale;
    r.element = TorusElement(s.rank());
    TorusElement module_side(s.rank());
    std::set<IndexSet> seen;
    for (const auto& [p, val] : v) {
        IndexSet iset = matching_to_submodule(g, p).index_set;
        if (!seen.insert(iset).second)
            throw Error(ErrorCode::BijectionViolation, "two matchings enclose the same tiles");
        ExpansionTerm t{iset, dimension_vector(w, iset, n), val, x_of_matching(s, g, p)};
        r.element.add_term(t.exponent, QPoly::monomial(scale * val));

        IntVector e = index;
        for (size_t i = 0; i < e.size(); ++i)
            for (size_t j = 0; j < n; ++j)
                e[i] += b[i][j] * t.dimension[j];
        auto it = vg.find(iset);
        if (it == vg.end())
            throw Error(ErrorCode::BijectionViolation, "enclosed tiles are not a canonical submodule");
        if (e != t.exponent || it->second != val)
            throw Error(ErrorCode::Mismatch, "matching and submodule terms differ at " + format_vector(t.exponent));
        module_side.add_term(e, QPoly::monomial(scale * it->second));
        r.terms.push_back(std::move(t));
    }
    if (!(module_side == r.element))
        throw Error(ErrorCode::Mismatch, "matching and submodule sums differ");
    std::sort(r.terms.begin(), r.terms.end(), [](const ExpansionTerm& a, const ExpansionTerm& b) {
        return std::make_pair(a.index_set.size(), a.index_set) < std::make_pair(b.index_set.size(), b.index_set);
    });
    return r;
}

LaurentPoly classical_specialization(const ExpansionResult& e) { return specialize_q1(e.element); }

std::string first_difference(const TorusElement& a, const TorusElement& b) {
    std::set<IntVector> keys;
    for (const auto& [g, c] : a.terms())
        keys.insert(g);
    for (const auto& [g, c] : b.terms())
        keys.insert(g);
    for (const IntVector& g : keys) {
        auto ia = a.terms().find(g);
        auto ib = b.terms().find(g);
        QPoly ca = ia == a.terms().end() ? QPoly() : ia->second;
        QPoly cb = ib == b.terms().end() ? QPoly() : ib->second;
        if (!(ca == cb))
            return "at X" + format_vector(g) + ": " + (ca.is_zero() ? "0" : to_text(ca)) + " vs " +
                   (cb.is_zero() ? "0" : to_text(cb));
    }
    return "";
}

OracleReport oracle_compare(const Surface& s, const StringWord& w, const std::vector<size_t>& sequence) {
    if (sequence.empty())
        throw Error(ErrorCode::InvalidArgument, "empty mutation sequence");
    OracleReport r;
    r.expansion = quantum_expansion(s, w).element;
    QuantumSeed seed = mutation_sequence(QuantumSeed::initial(s.pair), sequence);
    r.mutated = seed.cluster.at(sequence.back() - 1);
    r.equal = r.expansion == r.mutated;
    if (!r.equal)
        r.detail = first_difference(r.expansion, r.mutated);
    return r;
}

} // namespace qsurf
