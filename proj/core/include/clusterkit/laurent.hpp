#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clusterkit/errors.hpp"
#include "clusterkit/rational.hpp"

namespace clusterkit {

// Exponent vector of a Laurent monomial. Fixed arity per ambient context:
// one slot per initial cluster variable, exchange slots first, then frozen.
using ExponentVector = std::vector<int>;

ExponentVector expAdd(const ExponentVector& a, const ExponentVector& b);
ExponentVector expSub(const ExponentVector& a, const ExponentVector& b);
ExponentVector expNeg(const ExponentVector& a);

// Multivariate Laurent polynomial over Q in canonical form: the term map
// holds no zero coefficients, and equality is structural equality of maps.
// Term order is lexicographic on exponent vectors; the leading term is the
// lex-largest one. Values are immutable once built; all operations are pure.
class LaurentPoly {
public:
    using TermMap = std::map<ExponentVector, Rational>;

    LaurentPoly() : arity_(0) {}
    explicit LaurentPoly(int arity) : arity_(arity) {}

    static LaurentPoly zero(int arity) { return LaurentPoly(arity); }
    static LaurentPoly constant(int arity, const Rational& c);
    // The i-th coordinate monomial x_i (0-based).
    static LaurentPoly variable(int arity, int i);
    static LaurentPoly monomial(const ExponentVector& e, const Rational& c);
    static LaurentPoly fromTerms(int arity, TermMap terms);

    int arity() const { return arity_; }
    bool isZero() const { return terms_.empty(); }
    std::size_t termCount() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    bool operator==(const LaurentPoly& o) const {
        return arity_ == o.arity_ && terms_ == o.terms_;
    }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    // Total order used for canonical sorting of clusters.
    bool operator<(const LaurentPoly& o) const;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;

    LaurentPoly scaled(const Rational& c) const;
    // Nonnegative integer power by repeated squaring.
    LaurentPoly pow(int k) const;

    // Shift every exponent by -m. Always exact in the Laurent ring.
    LaurentPoly divByMonomial(const ExponentVector& m) const;
    LaurentPoly mulByMonomial(const ExponentVector& m) const;

    // True iff every coefficient is > 0 (vacuously true for 0).
    bool isPositive() const;

    // True iff the poly is a single monomial with coefficient 1.
    bool isUnitMonomial() const;

    // Componentwise minimum of exponents over all terms (0 if no terms).
    ExponentVector minExponents() const;
    ExponentVector maxExponents() const;

    // Slots that occur with a nonzero exponent in some term.
    std::vector<int> support() const;

    std::string toString(const std::vector<std::string>& names) const;

private:
    int arity_;
    TermMap terms_;

    void addTerm(const ExponentVector& e, const Rational& c);
    void checkArity(const LaurentPoly& o) const;

    friend LaurentPoly mulImpl(const LaurentPoly& a, const LaurentPoly& b);
    friend std::optional<LaurentPoly> tryExactDivide(const LaurentPoly& num,
                                                     const LaurentPoly& den);
};

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly divExactByMonomial(const LaurentPoly& a, const ExponentVector& m);

// Exact division in the Laurent ring; nullopt when den does not divide num.
std::optional<LaurentPoly> tryExactDivide(const LaurentPoly& num,
                                          const LaurentPoly& den);
// Throwing variant: NonLaurentResult when the quotient leaves the ring.
LaurentPoly exactDivide(const LaurentPoly& num, const LaurentPoly& den);

// One substitution image per variable, written numerator / x^denominator.
struct SubstImage {
    LaurentPoly numerator;
    ExponentVector denominator;
};

SubstImage asImage(const LaurentPoly& value);

// Evaluate p at the given images, exactly. Clears denominators and verifies
// the final division; throws NonLaurentResult when the value is not Laurent.
LaurentPoly substitute(const LaurentPoly& p, const std::vector<SubstImage>& images);
LaurentPoly substitute(const LaurentPoly& p, const std::vector<LaurentPoly>& images);

} // namespace clusterkit
