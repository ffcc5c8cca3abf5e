#include "qsurf/torus.hpp"

#include <sstream>

namespace qsurf {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::NonExactDivision: return "NonExactDivision";
    case ErrorCode::NotNormalizable: return "NotNormalizable";
    case ErrorCode::NotSkew: return "NotSkew";
    case ErrorCode::NotCompatible: return "NotCompatible";
    case ErrorCode::NonPositiveD: return "NonPositiveD";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidTriangulation: return "InvalidTriangulation";
    case ErrorCode::NoCompatibleLambda: return "NoCompatibleLambda";
    case ErrorCode::NotComposable: return "NotComposable";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::RelationViolated: return "RelationViolated";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotCrossingSequence: return "NotCrossingSequence";
    case ErrorCode::CannotTwist: return "CannotTwist";
    case ErrorCode::BijectionViolation: return "BijectionViolation";
    case ErrorCode::InconsistentValuation: return "InconsistentValuation";
    case ErrorCode::UnreachableSubmodule: return "UnreachableSubmodule";
    case ErrorCode::UnmatchedCase: return "UnmatchedCase";
    case ErrorCode::AmbiguousConnector: return "AmbiguousConnector";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::AmbiguousSolution: return "AmbiguousSolution";
    case ErrorCode::Mismatch: return "Mismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Error";
}

std::string HalfInt::str() const {
    if (is_integer())
        return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

// ---- QPoly

QPoly QPoly::monomial(int64_t twice_exp, const BigInt& coeff) {
    QPoly p;
    p.add_term(twice_exp, coeff);
    return p;
}

void QPoly::add_term(int64_t twice_exp, const BigInt& coeff) {
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(twice_exp, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

QPoly& QPoly::operator+=(const QPoly& o) {
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

QPoly QPoly::operator+(const QPoly& o) const {
    QPoly r = *this;
    r += o;
    return r;
}

QPoly QPoly::operator-(const QPoly& o) const {
    QPoly r = *this;
    r -= o;
    return r;
}

QPoly QPoly::operator-() const {
    QPoly r;
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e, -c);
    return r;
}

QPoly QPoly::operator*(const QPoly& o) const {
    QPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            r.add_term(e1 + e2, c1 * c2);
    return r;
}

QPoly QPoly::shifted(int64_t twice) const {
    QPoly r;
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e + twice, c);
    return r;
}

QPoly QPoly::bar() const {
    QPoly r;
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(-e, c);
    return r;
}

QPoly QPoly::rescaled(int64_t factor) const {
    QPoly r;
    for (const auto& [e, c] : terms_)
        r.add_term(e * factor, c);
    return r;
}

BigInt QPoly::at_one() const {
    BigInt s = 0;
    for (const auto& [e, c] : terms_)
        s += c;
    return s;
}

bool QPoly::nonnegative() const {
    for (const auto& [e, c] : terms_)
        if (c < 0)
            return false;
    return true;
}

QPoly QPoly::divide_exact(const QPoly& d) const {
    if (d.is_zero())
        throw Error(ErrorCode::NonExactDivision, "division by zero polynomial");
    QPoly quotient;
    if (is_zero())
        return quotient;
    QPoly rem = *this;
    const int64_t dl = d.max_exp();
    const BigInt& dc = d.terms_.at(dl);
    // The lowest quotient term is fixed by the lowest terms of both operands.
    const int64_t floor_exp = min_exp() - d.min_exp();
    while (!rem.is_zero()) {
        const int64_t rl = rem.max_exp();
        const BigInt& rc = rem.terms_.at(rl);
        const int64_t t = rl - dl;
        if (t < floor_exp || rc % dc != 0)
            throw Error(ErrorCode::NonExactDivision, "coefficient division not exact");
        QPoly term = monomial(t, rc / dc);
        quotient += term;
        rem -= term * d;
    }
    return quotient;
}

// ---- TorusElement

TorusElement TorusElement::monomial(const IntVector& g, const QPoly& c) {
    TorusElement r(g.size());
    r.add_term(g, c);
    return r;
}

TorusElement TorusElement::generator(size_t rank, size_t i) {
    IntVector g(rank, 0);
    g.at(i) = 1;
    return monomial(g);
}

size_t TorusElement::term_count() const {
    size_t n = 0;
    for (const auto& [g, c] : terms_)
        n += c.terms().size();
    return n;
}

void TorusElement::check_rank(const IntVector& g) const {
    if (g.size() != rank_)
        throw Error(ErrorCode::RankMismatch, "lattice vector of length " + std::to_string(g.size()) +
                                                 " in rank " + std::to_string(rank_) + " torus");
}

void TorusElement::add_term(const IntVector& g, const QPoly& c) {
    check_rank(g);
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(g, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

TorusElement& TorusElement::operator+=(const TorusElement& o) {
    if (o.rank_ != rank_)
        throw Error(ErrorCode::RankMismatch, "adding elements of different rank");
    for (const auto& [g, c] : o.terms_)
        add_term(g, c);
    return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& o) {
    if (o.rank_ != rank_)
        throw Error(ErrorCode::RankMismatch, "subtracting elements of different rank");
    for (const auto& [g, c] : o.terms_)
        add_term(g, -c);
    return *this;
}

TorusElement TorusElement::operator+(const TorusElement& o) const {
    TorusElement r = *this;
    r += o;
    return r;
}

TorusElement TorusElement::operator-(const TorusElement& o) const {
    TorusElement r = *this;
    r -= o;
    return r;
}

TorusElement TorusElement::scaled(const QPoly& c) const {
    TorusElement r(rank_);
    for (const auto& [g, p] : terms_)
        r.add_term(g, p * c);
    return r;
}

TorusElement TorusElement::bar() const {
    TorusElement r(rank_);
    for (const auto& [g, p] : terms_)
        r.terms_.emplace(g, p.bar());
    return r;
}

TorusElement TorusElement::rescaled(int64_t factor) const {
    TorusElement r(rank_);
    for (const auto& [g, p] : terms_)
        r.add_term(g, p.rescaled(factor));
    return r;
}

bool TorusElement::nonnegative() const {
    for (const auto& [g, p] : terms_)
        if (!p.nonnegative())
            return false;
    return true;
}

// ---- torus operations

int64_t lambda_form(const IntMatrix& lambda, const IntVector& g, const IntVector& h) {
    if (g.size() != lambda.size() || h.size() != lambda.size())
        throw Error(ErrorCode::RankMismatch, "vector length does not match lambda");
    int64_t s = 0;
    for (size_t i = 0; i < g.size(); ++i) {
        if (g[i] == 0)
            continue;
        for (size_t j = 0; j < h.size(); ++j)
            s += g[i] * lambda[i][j] * h[j];
    }
    return s;
}

static IntVector vec_add(const IntVector& a, const IntVector& b) {
    IntVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

static IntVector vec_sub(const IntVector& a, const IntVector& b) {
    IntVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

TorusElement torus_mul(const TorusElement& a, const TorusElement& b, const IntMatrix& lambda) {
    if (a.rank() != b.rank() || a.rank() != lambda.size())
        throw Error(ErrorCode::RankMismatch, "torus_mul operands of rank " + std::to_string(a.rank()) +
                                                 " and " + std::to_string(b.rank()) + " with lambda of size " +
                                                 std::to_string(lambda.size()));
    TorusElement r(a.rank());
    for (const auto& [g, c] : a.terms())
        for (const auto& [h, d] : b.terms())
            r.add_term(vec_add(g, h), (c * d).shifted(lambda_form(lambda, g, h)));
    return r;
}

TorusElement torus_mul(const TorusElement& a, const TorusElement& b, const CompatiblePair& pair) {
    return torus_mul(a, b, pair.lambda);
}

TorusElement torus_div_exact(const TorusElement& a, const IntVector& g, const IntMatrix& lambda) {
    if (g.size() != a.rank() || lambda.size() != a.rank())
        throw Error(ErrorCode::RankMismatch, "torus_div_exact rank mismatch");
    // X^{h-g} X^g = q^{Lambda(h-g,g)/2} X^h
    TorusElement r(a.rank());
    for (const auto& [h, c] : a.terms()) {
        IntVector k = vec_sub(h, g);
        r.add_term(k, c.shifted(-lambda_form(lambda, k, g)));
    }
    return r;
}

TorusElement torus_div_exact(const TorusElement& a, const IntVector& g, const CompatiblePair& pair) {
    return torus_div_exact(a, g, pair.lambda);
}

TorusElement torus_div_right(const TorusElement& a, const TorusElement& b, const IntMatrix& lambda) {
    if (b.is_zero())
        throw Error(ErrorCode::NonExactDivision, "division by zero");
    if (a.rank() != b.rank() || lambda.size() != a.rank())
        throw Error(ErrorCode::RankMismatch, "torus_div_right rank mismatch");
    TorusElement quotient(a.rank());
    if (a.is_zero())
        return quotient;
    const IntVector& top = b.terms().rbegin()->first;
    const QPoly& top_coeff = b.terms().rbegin()->second;
    // Lex order is a group order, so the lowest quotient term is determined
    // by the lowest terms of a and b; anything below it means non-exact.
    const IntVector floor = vec_sub(a.terms().begin()->first, b.terms().begin()->first);
    TorusElement rem = a;
    while (!rem.is_zero()) {
        const auto& [g, c] = *rem.terms().rbegin();
        IntVector k = vec_sub(g, top);
        if (k < floor)
            throw Error(ErrorCode::NonExactDivision, "remainder below quotient floor");
        QPoly qc = c.divide_exact(top_coeff.shifted(lambda_form(lambda, k, top)));
        TorusElement term = TorusElement::monomial(k, qc);
        quotient += term;
        rem -= torus_mul(term, b, lambda);
    }
    return quotient;
}

BarNormalized bar_normalize(const TorusElement& a) {
    if (a.is_zero())
        throw Error(ErrorCode::NotNormalizable, "zero element");
    bool have = false;
    int64_t twice = 0;
    for (const auto& [g, c] : a.terms()) {
        int64_t s = c.min_exp() + c.max_exp();
        if (s % 2 != 0)
            throw Error(ErrorCode::NotNormalizable, "coefficient of X" + format_vector(g) + " has no centre");
        if (!have) {
            twice = s / 2;
            have = true;
        } else if (twice != s / 2) {
            throw Error(ErrorCode::NotNormalizable, "coefficients need different shifts");
        }
    }
    TorusElement r = a.shifted(-twice);
    if (!r.is_bar_invariant())
        throw Error(ErrorCode::NotNormalizable, "no shift makes the element bar-invariant");
    return BarNormalized{HalfInt::from_twice(twice), r};
}

TorusElement cluster_monomial(const IntVector& a, const std::vector<TorusElement>& variables,
                              const IntMatrix& current_lambda, const IntMatrix& torus_lambda) {
    if (a.size() != variables.size() || current_lambda.size() != a.size())
        throw Error(ErrorCode::RankMismatch, "cluster_monomial exponent length mismatch");
    int64_t prefactor = 0;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j)
            prefactor -= a[i] * a[j] * current_lambda[i][j];
    TorusElement r = TorusElement::one(torus_lambda.size()).shifted(prefactor);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 0)
            throw Error(ErrorCode::InvalidArgument, "cluster monomial exponents must be nonnegative");
        for (int64_t t = 0; t < a[i]; ++t)
            r = torus_mul(r, variables[i], torus_lambda);
    }
    return r;
}

IntVector check_compatible(const IntMatrix& b_tilde, const IntMatrix& lambda) {
    const size_t m = lambda.size();
    if (b_tilde.size() != m)
        throw Error(ErrorCode::RankMismatch, "b_tilde has " + std::to_string(b_tilde.size()) + " rows, lambda " +
                                                 std::to_string(m));
    const size_t n = m == 0 ? 0 : b_tilde[0].size();
    if (n > m)
        throw Error(ErrorCode::RankMismatch, "b_tilde has more columns than rows");
    for (size_t i = 0; i < m; ++i) {
        if (lambda[i].size() != m || b_tilde[i].size() != n)
            throw Error(ErrorCode::RankMismatch, "ragged matrix");
        for (size_t j = 0; j < m; ++j)
            if (lambda[i][j] != -lambda[j][i])
                throw Error(ErrorCode::NotSkew, "lambda(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                                    ") != -lambda(" + std::to_string(j + 1) + "," +
                                                    std::to_string(i + 1) + ")");
    }
    IntVector d(n, 0);
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < n; ++j) {
            int64_t p = 0;
            for (size_t l = 0; l < m; ++l)
                p += lambda[i][l] * b_tilde[l][j];
            if (i == j)
                d[j] = -p;
            else if (p != 0)
                throw Error(ErrorCode::NotCompatible, "entry (" + std::to_string(i + 1) + "," +
                                                          std::to_string(j + 1) + ") of lambda*B is " +
                                                          std::to_string(p));
        }
    }
    for (size_t j = 0; j < n; ++j)
        if (d[j] <= 0)
            throw Error(ErrorCode::NonPositiveD, "d_" + std::to_string(j + 1) + " = " + std::to_string(d[j]));
    return d;
}

// ---- rendering

std::string format_vector(const IntVector& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

static std::string q_power(int64_t twice) {
    if (twice == 0)
        return "";
    if (twice == 2)
        return "q";
    if (twice % 2 == 0)
        return "q^" + std::to_string(twice / 2);
    return "q^{" + std::to_string(twice) + "/2}";
}

static void append_term(std::string& out, bool first, const BigInt& c, int64_t twice, const std::string& mono) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first)
        out += c < 0 ? "-" : "";
    else
        out += c < 0 ? " - " : " + ";
    std::vector<std::string> parts;
    if (mag != 1 || (twice == 0 && mono.empty()))
        parts.push_back(mag.str());
    if (twice != 0)
        parts.push_back(q_power(twice));
    if (!mono.empty())
        parts.push_back(mono);
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i)
            out += " ";
        out += parts[i];
    }
}

std::string to_text(const QPoly& p) {
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        append_term(out, first, c, e, "");
        first = false;
    }
    return out;
}

std::string to_text(const TorusElement& a) {
    if (a.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [g, c] : a.terms()) {
        std::string mono = "X[" + format_vector(g) + "]";
        for (const auto& [e, k] : c.terms()) {
            append_term(out, first, k, e, mono);
            first = false;
        }
    }
    return out;
}

} // namespace qsurf
