#include "weitz/polynomial.hpp"

#include "weitz/error.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace weitz {

Ambient Ambient::make(int n, int k) {
    if (n < 1 || k < 1) {
        throw std::invalid_argument("ambient requires n >= 1 and k >= 1, got " + to_string({n, k}));
    }
    return {n, k};
}

std::string to_string(const Ambient& a) {
    return "(n=" + std::to_string(a.n) + ", k=" + std::to_string(a.k) + ")";
}

void require_same_ambient(const Ambient& a, const Ambient& b) {
    if (!(a == b)) {
        throw AmbientMismatch("ambient mismatch: " + to_string(a) + " vs " + to_string(b));
    }
}

// ---------------------------------------------------------------------------
// VariableId

bool VariableId::valid_in(const Ambient& a) const {
    if (kind != Kind::Ring) {
        return true;
    }
    return block >= 1 && block <= a.n && level >= 0 && level <= a.k;
}

std::size_t VariableId::index(const Ambient& a) const {
    switch (kind) {
    case Kind::CovX:
        return a.ring_variable_count();
    case Kind::CovY:
        return a.ring_variable_count() + 1;
    case Kind::Ring:
        break;
    }
    if (!valid_in(a)) {
        throw UnknownVariable("variable " + name() + " is not in the ring " + to_string(a));
    }
    return static_cast<std::size_t>(block - 1) * (a.k + 1) + level;
}

VariableId VariableId::from_index(const Ambient& a, std::size_t index) {
    const std::size_t ring_count = a.ring_variable_count();
    if (index == ring_count) {
        return cov_x();
    }
    if (index == ring_count + 1) {
        return cov_y();
    }
    if (index > ring_count + 1) {
        throw UnknownVariable("variable index " + std::to_string(index) + " out of range");
    }
    const auto width = static_cast<std::size_t>(a.k + 1);
    return ring(static_cast<int>(index / width) + 1, static_cast<int>(index % width));
}

std::string VariableId::name() const {
    switch (kind) {
    case Kind::CovX:
        return "CX";
    case Kind::CovY:
        return "CY";
    case Kind::Ring:
        break;
    }
    switch (level) {
    case 0:
        return "x" + std::to_string(block);
    case 1:
        return "y" + std::to_string(block);
    case 2:
        return "z" + std::to_string(block);
    default:
        return "v" + std::to_string(block) + "." + std::to_string(level);
    }
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<unsigned> exponents)
    : exponents_(std::move(exponents)),
      degree_(std::accumulate(exponents_.begin(), exponents_.end(), 0U)) {}

Monomial Monomial::variable(const Ambient& a, VariableId v, unsigned power) {
    Monomial m(a.variable_count());
    m.set(v.index(a), power);
    return m;
}

void Monomial::set(std::size_t i, unsigned e) {
    degree_ = degree_ - exponents_.at(i) + e;
    exponents_[i] = e;
}

unsigned Monomial::ring_degree(const Ambient& a) const {
    return degree_ - covariant_degree(a);
}

unsigned Monomial::covariant_degree(const Ambient& a) const {
    const std::size_t r = a.ring_variable_count();
    return exponents_[r] + exponents_[r + 1];
}

unsigned Monomial::weight(const Ambient& a) const {
    unsigned w = 0;
    const auto width = static_cast<std::size_t>(a.k + 1);
    for (std::size_t i = 0; i < a.ring_variable_count(); ++i) {
        w += static_cast<unsigned>(i % width) * exponents_[i];
    }
    return w;
}

std::vector<unsigned> Monomial::block_degrees(const Ambient& a) const {
    std::vector<unsigned> out(static_cast<std::size_t>(a.n), 0);
    const auto width = static_cast<std::size_t>(a.k + 1);
    for (std::size_t i = 0; i < a.ring_variable_count(); ++i) {
        out[i / width] += exponents_[i];
    }
    return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out = a;
    for (std::size_t i = 0; i < out.exponents_.size(); ++i) {
        out.exponents_[i] += b.exponents_[i];
    }
    out.degree_ += b.degree_;
    return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) {
        return a.degree_ <=> b.degree_;
    }
    return a.exponents_ <=> b.exponents_;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(Ambient a, const Rational& c) {
    return term(a, Monomial::one(a), c);
}

Polynomial Polynomial::variable(Ambient a, VariableId v) {
    return term(a, Monomial::variable(a, v), Rational(1));
}

Polynomial Polynomial::term(Ambient a, Monomial m, const Rational& c) {
    if (m.size() != a.variable_count()) {
        throw AmbientMismatch("monomial arity does not match ambient " + to_string(a));
    }
    Polynomial p(a);
    p.add_term(m, c);
    return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

unsigned Polynomial::total_degree() const {
    // Leading term has the largest total degree under grlex.
    return terms_.empty() ? 0 : terms_.begin()->first.total_degree();
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) {
        return true;
    }
    const unsigned d = terms_.begin()->first.total_degree();
    return terms_.rbegin()->first.total_degree() == d;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& [m, c] : out.terms_) {
        c = -c;
    }
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    require_same_ambient(ambient_, o.ambient_);
    for (const auto& [m, c] : o.terms_) {
        add_term(m, c);
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    require_same_ambient(ambient_, o.ambient_);
    for (const auto& [m, c] : o.terms_) {
        add_term(m, -c);
    }
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) {
        coeff *= c;
    }
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_ambient(a.ambient_, b.ambient_);
    Polynomial out(a.ambient_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            out.add_term(ma * mb, ca * cb);
        }
    }
    return out;
}

Polynomial add(const Polynomial& p, const Polynomial& q) {
    return p + q;
}

Polynomial mul(const Polynomial& p, const Polynomial& q) {
    return p * q;
}

Polynomial pow(const Polynomial& p, unsigned e) {
    Polynomial result = Polynomial::constant(p.ambient(), Rational(1));
    Polynomial base = p;
    while (e > 0) {
        if (e & 1U) {
            result = result * base;
        }
        e >>= 1U;
        if (e > 0) {
            base = base * base;
        }
    }
    return result;
}

Polynomial partial_derivative(const Polynomial& p, VariableId v) {
    const std::size_t idx = v.index(p.ambient());
    Polynomial out(p.ambient());
    for (const auto& [m, c] : p.terms()) {
        const unsigned e = m[idx];
        if (e == 0) {
            continue;
        }
        Monomial d = m;
        d.set(idx, e - 1);
        out.add_term(d, c * Rational(static_cast<long>(e)));
    }
    return out;
}

std::set<Grading> grading(const Polynomial& p) {
    std::set<Grading> out;
    const Ambient& a = p.ambient();
    for (const auto& [m, c] : p.terms()) {
        out.insert({m.block_degrees(a), m.weight(a), m.covariant_degree(a)});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Printing

std::string format(const Monomial& m, const Ambient& a) {
    // Factors print grouped by level (all x's, then y's, ...), then CX, CY.
    std::vector<std::size_t> order;
    const std::size_t ring_count = a.ring_variable_count();
    for (int level = 0; level <= a.k; ++level) {
        for (int block = 1; block <= a.n; ++block) {
            order.push_back(VariableId::ring(block, level).index(a));
        }
    }
    order.push_back(ring_count);
    order.push_back(ring_count + 1);

    std::string out;
    for (std::size_t i : order) {
        if (m[i] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += VariableId::from_index(a, i).name();
        if (m[i] > 1) {
            out += '^';
            out += std::to_string(m[i]);
        }
    }
    return out.empty() ? "1" : out;
}

std::string format(const Polynomial& p) {
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool negative = c.sign() < 0;
        if (first) {
            if (negative) {
                out += '-';
            }
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const Rational magnitude = negative ? -c : c;
        if (m.is_one()) {
            out += magnitude.to_string();
        } else {
            if (!magnitude.is_one()) {
                out += magnitude.to_string();
                out += '*';
            }
            out += format(m, p.ambient());
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << format(p);
}

} // namespace weitz
