#include "clusterkit/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace clusterkit {

ExponentVector expAdd(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

ExponentVector expSub(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

ExponentVector expNeg(const ExponentVector& a) {
    ExponentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

LaurentPoly LaurentPoly::constant(int arity, const Rational& c) {
    LaurentPoly p(arity);
    if (c != 0) p.terms_.emplace(ExponentVector(arity, 0), c);
    return p;
}

LaurentPoly LaurentPoly::variable(int arity, int i) {
    if (i < 0 || i >= arity) throw IndexOutOfRange("variable index out of range");
    ExponentVector e(arity, 0);
    e[i] = 1;
    return monomial(e, 1);
}

LaurentPoly LaurentPoly::monomial(const ExponentVector& e, const Rational& c) {
    LaurentPoly p(static_cast<int>(e.size()));
    if (c != 0) p.terms_.emplace(e, c);
    return p;
}

LaurentPoly LaurentPoly::fromTerms(int arity, TermMap terms) {
    LaurentPoly p(arity);
    for (auto& [e, c] : terms) {
        if (static_cast<int>(e.size()) != arity)
            throw ArityMismatch("term arity does not match polynomial arity");
        if (c != 0) p.terms_.emplace(e, c);
    }
    return p;
}

bool LaurentPoly::operator<(const LaurentPoly& o) const {
    if (arity_ != o.arity_) return arity_ < o.arity_;
    return std::lexicographical_compare(
        terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
        [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first < b.first;
            return a.second < b.second;
        });
}

void LaurentPoly::addTerm(const ExponentVector& e, const Rational& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

void LaurentPoly::checkArity(const LaurentPoly& o) const {
    if (arity_ != o.arity_)
        throw ArityMismatch("operands have different arities");
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    checkArity(o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.addTerm(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    checkArity(o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.addTerm(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(arity_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly mulImpl(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r(a.arity_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.addTerm(expAdd(ea, eb), ca * cb);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    checkArity(o);
    return mulImpl(*this, o);
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    LaurentPoly r(arity_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

LaurentPoly LaurentPoly::pow(int k) const {
    if (k < 0) throw IndexOutOfRange("pow expects a nonnegative exponent");
    LaurentPoly acc = constant(arity_, 1);
    LaurentPoly base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = (k >>= 1) ? base * base : base;
    }
    return acc;
}

LaurentPoly LaurentPoly::divByMonomial(const ExponentVector& m) const {
    if (static_cast<int>(m.size()) != arity_)
        throw ArityMismatch("monomial arity mismatch");
    LaurentPoly r(arity_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(expSub(e, m), c);
    return r;
}

LaurentPoly LaurentPoly::mulByMonomial(const ExponentVector& m) const {
    return divByMonomial(expNeg(m));
}

bool LaurentPoly::isPositive() const {
    for (const auto& [e, c] : terms_)
        if (c <= 0) return false;
    return true;
}

bool LaurentPoly::isUnitMonomial() const {
    return terms_.size() == 1 && terms_.begin()->second == 1;
}

ExponentVector LaurentPoly::minExponents() const {
    ExponentVector m(arity_, 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            m = e;
            first = false;
        } else {
            for (int i = 0; i < arity_; ++i) m[i] = std::min(m[i], e[i]);
        }
    }
    return m;
}

ExponentVector LaurentPoly::maxExponents() const {
    ExponentVector m(arity_, 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            m = e;
            first = false;
        } else {
            for (int i = 0; i < arity_; ++i) m[i] = std::max(m[i], e[i]);
        }
    }
    return m;
}

std::vector<int> LaurentPoly::support() const {
    std::vector<int> s;
    for (int i = 0; i < arity_; ++i) {
        for (const auto& [e, c] : terms_) {
            if (e[i] != 0) {
                s.push_back(i);
                break;
            }
        }
    }
    return s;
}

std::string LaurentPoly::toString(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Leading (lex-largest) term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational coeff = c;
        if (first) {
            if (coeff < 0) {
                out << "-";
                coeff = -coeff;
            }
        } else {
            out << (coeff < 0 ? " - " : " + ");
            if (coeff < 0) coeff = -coeff;
        }
        first = false;
        bool hasVar = false;
        std::ostringstream mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (hasVar) mono << "*";
            hasVar = true;
            mono << (i < names.size() ? names[i] : "v" + std::to_string(i));
            if (e[i] != 1) mono << "^" << e[i];
        }
        if (!hasVar) {
            out << coeff.str();
        } else {
            if (coeff != 1) out << coeff.str() << "*";
            out << mono.str();
        }
    }
    return out.str();
}

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

LaurentPoly divExactByMonomial(const LaurentPoly& a, const ExponentVector& m) {
    return a.divByMonomial(m);
}

namespace {

bool expDivides(const ExponentVector& a, const ExponentVector& b) {
    // a | b componentwise, for nonnegative exponent vectors
    for (std::size_t i = 0; i < a.size(); ++i)
        if (b[i] < a[i]) return false;
    return true;
}

} // namespace

std::optional<LaurentPoly> tryExactDivide(const LaurentPoly& num,
                                          const LaurentPoly& den) {
    if (num.arity() != den.arity())
        throw ArityMismatch("division operands have different arities");
    if (den.isZero()) throw ClusterError("division by zero polynomial");
    if (num.isZero()) return LaurentPoly::zero(num.arity());

    // Normalize so the divisor has componentwise minimal exponent 0. Then
    // Laurent divisibility coincides with polynomial divisibility, and the
    // quotient shift is recovered afterwards.
    const ExponentVector shiftD = den.minExponents();
    const ExponentVector shiftN = num.minExponents();
    LaurentPoly P = num.divByMonomial(shiftN);
    const LaurentPoly Q = den.divByMonomial(shiftD);

    LaurentPoly quot(num.arity());
    const auto& qLead = *Q.terms().rbegin();
    while (!P.isZero()) {
        const auto& pLead = *P.terms().rbegin();
        if (!expDivides(qLead.first, pLead.first)) return std::nullopt;
        const ExponentVector t = expSub(pLead.first, qLead.first);
        const Rational c = pLead.second / qLead.second;
        quot.addTerm(t, c);
        P = P - Q.mulByMonomial(t).scaled(c);
    }
    return quot.mulByMonomial(expSub(shiftN, shiftD));
}

LaurentPoly exactDivide(const LaurentPoly& num, const LaurentPoly& den) {
    auto q = tryExactDivide(num, den);
    if (!q) throw NonLaurentResult("quotient is not a Laurent polynomial");
    return *q;
}

SubstImage asImage(const LaurentPoly& value) {
    ExponentVector m = value.minExponents();
    for (auto& e : m) e = std::min(e, 0);
    return SubstImage{value.divByMonomial(m), expNeg(m)};
}

LaurentPoly substitute(const LaurentPoly& p, const std::vector<SubstImage>& images) {
    const int arity = p.arity();
    if (static_cast<int>(images.size()) != arity)
        throw ArityMismatch("one substitution image required per variable");
    int outArity = arity;
    if (!images.empty()) outArity = images[0].numerator.arity();
    for (const auto& img : images) {
        if (img.numerator.arity() != outArity ||
            static_cast<int>(img.denominator.size()) != outArity)
            throw ArityMismatch("substitution images have inconsistent arity");
    }
    if (p.isZero()) return LaurentPoly::zero(outArity);

    // Negative powers of an image are handled by clearing a global
    // denominator R = prod N_i^{D_i} and checking exact division at the end.
    ExponentVector minExp = p.minExponents();
    std::vector<int> D(arity, 0);
    for (int i = 0; i < arity; ++i) D[i] = std::max(0, -minExp[i]);

    // Cache powers of each numerator up to what the terms require.
    ExponentVector maxExp = p.maxExponents();
    std::vector<std::vector<LaurentPoly>> powers(arity);
    for (int i = 0; i < arity; ++i) {
        int need = std::max(maxExp[i], 0) + D[i];
        powers[i].reserve(need + 1);
        powers[i].push_back(LaurentPoly::constant(outArity, 1));
        for (int k = 1; k <= need; ++k)
            powers[i].push_back(powers[i].back() * images[i].numerator);
    }

    LaurentPoly Q(outArity);
    for (const auto& [e, c] : p.terms()) {
        ExponentVector shift(outArity, 0);
        LaurentPoly term = LaurentPoly::constant(outArity, c);
        for (int i = 0; i < arity; ++i) {
            term = term * powers[i][e[i] + D[i]];
            for (int s = 0; s < outArity; ++s)
                shift[s] -= images[i].denominator[s] * e[i];
        }
        Q = Q + term.mulByMonomial(shift);
    }

    LaurentPoly R = LaurentPoly::constant(outArity, 1);
    for (int i = 0; i < arity; ++i)
        if (D[i] > 0) R = R * powers[i][D[i]];
    return exactDivide(Q, R);
}

LaurentPoly substitute(const LaurentPoly& p, const std::vector<LaurentPoly>& images) {
    std::vector<SubstImage> imgs;
    imgs.reserve(images.size());
    for (const auto& v : images) imgs.push_back(asImage(v));
    return substitute(p, imgs);
}

} // namespace clusterkit
