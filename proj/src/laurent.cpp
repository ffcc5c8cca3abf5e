#include "qsurf/laurent.hpp"

namespace qsurf {

LaurentPoly LaurentPoly::monomial(const IntVector& g, const BigInt& c) {
    LaurentPoly p(g.size());
    p.add_term(g, c);
    return p;
}

LaurentPoly LaurentPoly::generator(size_t rank, size_t i) {
    IntVector g(rank, 0);
    g.at(i) = 1;
    return monomial(g);
}

void LaurentPoly::add_term(const IntVector& g, const BigInt& c) {
    if (g.size() != rank_)
        throw Error(ErrorCode::RankMismatch, "laurent term of wrong length");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(g, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [g, c] : o.terms_)
        r.add_term(g, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [g, c] : o.terms_)
        r.add_term(g, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (rank_ != o.rank_)
        throw Error(ErrorCode::RankMismatch, "laurent product of different ranks");
    LaurentPoly r(rank_);
    IntVector s(rank_);
    for (const auto& [g, c] : terms_)
        for (const auto& [h, d] : o.terms_) {
            for (size_t i = 0; i < rank_; ++i)
                s[i] = g[i] + h[i];
            r.add_term(s, c * d);
        }
    return r;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& d) const {
    if (d.is_zero())
        throw Error(ErrorCode::NonExactDivision, "division by zero");
    LaurentPoly quotient(rank_);
    if (is_zero())
        return quotient;
    const auto& [top, top_c] = *d.terms_.rbegin();
    IntVector floor(rank_);
    for (size_t i = 0; i < rank_; ++i)
        floor[i] = terms_.begin()->first[i] - d.terms_.begin()->first[i];
    LaurentPoly rem = *this;
    IntVector k(rank_);
    while (!rem.is_zero()) {
        const auto& [g, c] = *rem.terms_.rbegin();
        for (size_t i = 0; i < rank_; ++i)
            k[i] = g[i] - top[i];
        if (k < floor || c % top_c != 0)
            throw Error(ErrorCode::NonExactDivision, "commutative division not exact");
        LaurentPoly term = monomial(k, c / top_c);
        quotient = quotient + term;
        rem = rem - term * d;
    }
    return quotient;
}

bool LaurentPoly::positive() const {
    for (const auto& [g, c] : terms_)
        if (c <= 0)
            return false;
    return true;
}

LaurentPoly specialize_q1(const TorusElement& a) {
    LaurentPoly p(a.rank());
    for (const auto& [g, c] : a.terms())
        p.add_term(g, c.at_one());
    return p;
}

std::string to_text(const LaurentPoly& p) {
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [g, c] : p.terms()) {
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (mag != 1)
            out += mag.str() + " ";
        out += "x[" + format_vector(g) + "]";
        first = false;
    }
    return out;
}

} // namespace qsurf
