#pragma once

#include "weitz/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace weitz {

/// The ring K[x_{i,j} : 1 <= i <= n, 0 <= j <= k] extended by the two
/// covariant variables CX and CY.
struct Ambient {
    int n = 1;
    int k = 1;

    /// Throws std::invalid_argument unless n >= 1 and k >= 1.
    static Ambient make(int n, int k);

    std::size_t ring_variable_count() const { return static_cast<std::size_t>(n) * (k + 1); }
    std::size_t variable_count() const { return ring_variable_count() + 2; }

    friend bool operator==(const Ambient&, const Ambient&) = default;
};

std::string to_string(const Ambient& a);

/// A variable of the ring: Ring(block, level) or one of the covariant
/// variables. Levels 0, 1, 2 print as x, y, z; higher levels as v{block}.{level}.
struct VariableId {
    enum class Kind : std::uint8_t { Ring, CovX, CovY };

    Kind kind = Kind::Ring;
    int block = 1;
    int level = 0;

    static VariableId ring(int block, int level) { return {Kind::Ring, block, level}; }
    static VariableId cov_x() { return {Kind::CovX, 0, 0}; }
    static VariableId cov_y() { return {Kind::CovY, 0, 0}; }

    bool is_ring() const { return kind == Kind::Ring; }
    bool valid_in(const Ambient& a) const;

    /// Position in the canonical variable order. Throws UnknownVariable when
    /// the variable does not belong to `a`.
    std::size_t index(const Ambient& a) const;
    static VariableId from_index(const Ambient& a, std::size_t index);

    std::string name() const;

    friend bool operator==(const VariableId&, const VariableId&) = default;
};

/// Exponent vector indexed by VariableId::index().
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t variable_count) : exponents_(variable_count, 0) {}
    explicit Monomial(std::vector<unsigned> exponents);

    static Monomial one(const Ambient& a) { return Monomial(a.variable_count()); }
    static Monomial variable(const Ambient& a, VariableId v, unsigned power = 1);

    std::size_t size() const { return exponents_.size(); }
    unsigned operator[](std::size_t i) const { return exponents_[i]; }
    const std::vector<unsigned>& exponents() const { return exponents_; }

    void set(std::size_t i, unsigned e);

    unsigned total_degree() const { return degree_; }
    unsigned ring_degree(const Ambient& a) const;
    unsigned covariant_degree(const Ambient& a) const;
    /// Sum of level * exponent over ring variables.
    unsigned weight(const Ambient& a) const;
    std::vector<unsigned> block_degrees(const Ambient& a) const;

    bool is_one() const { return degree_ == 0; }

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.exponents_ == b.exponents_;
    }

    /// Graded lexicographic comparison: total degree first, then the first
    /// variable (in index order) where the exponents differ; the larger
    /// exponent wins.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

private:
    std::vector<unsigned> exponents_;
    unsigned degree_ = 0;
};

/// Canonical term order: leading (grlex-largest) monomial first.
struct LeadingFirst {
    bool operator()(const Monomial& a, const Monomial& b) const { return b < a; }
};

/// Grading of a single monomial.
struct Grading {
    std::vector<unsigned> block_degrees;
    unsigned weight = 0;
    unsigned covariant_degree = 0;

    friend auto operator<=>(const Grading&, const Grading&) = default;
};

/// Sparse polynomial over Rational. Never stores a zero coefficient.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, LeadingFirst>;

    explicit Polynomial(Ambient ambient) : ambient_(ambient) {}

    static Polynomial constant(Ambient a, const Rational& c);
    static Polynomial variable(Ambient a, VariableId v);
    static Polynomial term(Ambient a, Monomial m, const Rational& c);

    const Ambient& ambient() const { return ambient_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const Monomial& m) const;

    /// Adds c * m in place.
    void add_term(const Monomial& m, const Rational& c);

    /// Largest total degree of a term; 0 for the zero polynomial.
    unsigned total_degree() const;
    bool is_homogeneous() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.ambient_ == b.ambient_ && a.terms_ == b.terms_;
    }

private:
    Ambient ambient_;
    TermMap terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial pow(const Polynomial& p, unsigned e);

Polynomial partial_derivative(const Polynomial& p, VariableId v);

/// Distinct grading triples over the terms of p.
std::set<Grading> grading(const Polynomial& p);

std::string format(const Monomial& m, const Ambient& a);
/// Renders p in the text grammar accepted by parse().
std::string format(const Polynomial& p);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

void require_same_ambient(const Ambient& a, const Ambient& b);

} // namespace weitz
