#include "qsurf/seeds.hpp"

#include <algorithm>

namespace qsurf {

CompatiblePair make_compatible_pair(const IntMatrix& b_tilde, const IntMatrix& lambda) {
    CompatiblePair p;
    p.b_tilde = b_tilde;
    p.lambda = lambda;
    p.d = check_compatible(b_tilde, lambda);
    return p;
}

QuantumSeed QuantumSeed::initial(const CompatiblePair& pair) {
    QuantumSeed s;
    s.pair = pair;
    s.initial_lambda = pair.lambda;
    for (size_t i = 0; i < pair.m(); ++i)
        s.cluster.push_back(TorusElement::generator(pair.m(), i));
    return s;
}

static void check_index(const IntMatrix& b_tilde, size_t k) {
    size_t n = b_tilde.empty() ? 0 : b_tilde[0].size();
    if (k < 1 || k > n)
        throw Error(ErrorCode::IndexOutOfRange, "mutation index " + std::to_string(k) + " not in 1.." +
                                                    std::to_string(n));
}

IntMatrix mutate_matrix(const IntMatrix& b, size_t k) {
    check_index(b, k);
    const size_t c = k - 1;
    IntMatrix r = b;
    for (size_t i = 0; i < b.size(); ++i)
        for (size_t j = 0; j < b[i].size(); ++j) {
            if (i == c || j == c)
                r[i][j] = -b[i][j];
            else
                r[i][j] = b[i][j] + std::max<int64_t>(b[i][c], 0) * b[c][j] +
                          b[i][c] * std::max<int64_t>(-b[c][j], 0);
        }
    return r;
}

IntMatrix mutate_lambda(const IntMatrix& lambda, const IntMatrix& b, size_t k) {
    check_index(b, k);
    const size_t c = k - 1;
    const size_t m = lambda.size();
    IntVector e(m, 0);
    e[c] = -1;
    for (size_t l = 0; l < m; ++l)
        e[l] += std::max<int64_t>(b[l][c], 0);
    IntMatrix r = lambda;
    for (size_t i = 0; i < m; ++i) {
        if (i == c)
            continue;
        IntVector ei(m, 0);
        ei[i] = 1;
        r[i][c] = lambda_form(lambda, ei, e);
        r[c][i] = -r[i][c];
    }
    return r;
}

QuantumSeed mutate_seed(const QuantumSeed& seed, size_t k) {
    const IntMatrix& b = seed.pair.b_tilde;
    check_index(b, k);
    const size_t c = k - 1;
    const size_t m = seed.pair.m();
    IntVector plus(m), minus(m), ek(m, 0);
    for (size_t i = 0; i < m; ++i) {
        plus[i] = std::max<int64_t>(b[i][c], 0);
        minus[i] = std::max<int64_t>(-b[i][c], 0);
    }
    ek[c] = 1;
    const IntMatrix& lam = seed.pair.lambda;
    // X'_k X_k = q^{L(b+,e_k)/2} M(b+) + q^{L(b-,e_k)/2} M(b-)
    TorusElement numer =
        cluster_monomial(plus, seed.cluster, lam, seed.initial_lambda).shifted(lambda_form(lam, plus, ek)) +
        cluster_monomial(minus, seed.cluster, lam, seed.initial_lambda).shifted(lambda_form(lam, minus, ek));
    QuantumSeed r;
    r.initial_lambda = seed.initial_lambda;
    r.cluster = seed.cluster;
    r.cluster[c] = torus_div_right(numer, seed.cluster[c], seed.initial_lambda);
    r.pair.b_tilde = mutate_matrix(b, k);
    r.pair.lambda = mutate_lambda(lam, b, k);
    r.pair.d = check_compatible(r.pair.b_tilde, r.pair.lambda);
    return r;
}

QuantumSeed mutation_sequence(const QuantumSeed& seed, const std::vector<size_t>& ks, size_t depth_limit) {
    if (ks.size() > depth_limit)
        throw Error(ErrorCode::InvalidArgument, "mutation sequence longer than depth limit " +
                                                    std::to_string(depth_limit));
    QuantumSeed s = seed;
    for (size_t k : ks)
        s = mutate_seed(s, k);
    return s;
}

ClassicalSeed ClassicalSeed::initial(const IntMatrix& b_tilde) {
    ClassicalSeed s;
    s.b_tilde = b_tilde;
    for (size_t i = 0; i < b_tilde.size(); ++i)
        s.cluster.push_back(LaurentPoly::generator(b_tilde.size(), i));
    return s;
}

ClassicalSeed classical_mutate(const ClassicalSeed& seed, size_t k) {
    check_index(seed.b_tilde, k);
    const size_t c = k - 1;
    const size_t m = seed.b_tilde.size();
    LaurentPoly p = LaurentPoly::one(m), n = LaurentPoly::one(m);
    for (size_t i = 0; i < m; ++i) {
        for (int64_t t = 0; t < seed.b_tilde[i][c]; ++t)
            p = p * seed.cluster[i];
        for (int64_t t = 0; t < -seed.b_tilde[i][c]; ++t)
            n = n * seed.cluster[i];
    }
    ClassicalSeed r;
    r.b_tilde = mutate_matrix(seed.b_tilde, k);
    r.cluster = seed.cluster;
    r.cluster[c] = (p + n).divide_exact(seed.cluster[c]);
    return r;
}

} // namespace qsurf
