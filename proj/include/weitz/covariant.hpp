#pragma once

#include "weitz/polynomial.hpp"

#include <string>
#include <vector>

namespace weitz {

/// A polynomial homogeneous of degree `order` in the covariant variables
/// CX, CY.
class Covariant {
public:
    /// Throws NonHomogeneousOrder unless p is homogeneous in CX, CY. The zero
    /// polynomial gets order 0.
    explicit Covariant(Polynomial p);
    /// Zero allowed with any order; otherwise the order must match.
    Covariant(Polynomial p, unsigned order);

    const Polynomial& value() const { return value_; }
    unsigned order() const { return order_; }
    const Ambient& ambient() const { return value_.ambient(); }
    bool is_zero() const { return value_.is_zero(); }

    friend Covariant operator*(const Covariant& a, const Covariant& b);
    friend Covariant operator+(const Covariant& a, const Covariant& b);
    friend Covariant operator*(const Rational& c, const Covariant& a);

    friend bool operator==(const Covariant& a, const Covariant& b) {
        return a.order_ == b.order_ && a.value_ == b.value_;
    }

private:
    Polynomial value_;
    unsigned order_ = 0;
};

/// Order of p in CX, CY; throws NonHomogeneousOrder if p mixes orders.
unsigned covariant_order(const Polynomial& p);

/// f_i = x_i*CX + y_i*CY. Throws IndexOutOfRange unless 1 <= i <= n.
Covariant linear_form(Ambient a, int i);

/// The r-th transvectant
///   sum_{i=0}^{r} (-1)^i C(r, i) d^r u / dCX^{r-i} dCY^i * d^r v / dCX^i dCY^{r-i}
/// without normalizing factors. Throws NegativeOrder for r < 0.
Covariant transvectant(const Covariant& u, const Covariant& v, int r);

Covariant jacobian(const Covariant& u, const Covariant& v);

/// Coefficient of CX^m where m is the order; a polynomial in the ring
/// variables only.
Polynomial tau(const Covariant& c);
/// Throws NonHomogeneousOrder if p is not homogeneous in CX, CY.
Polynomial tau(const Polynomial& p);

struct LabeledCovariant {
    std::string label;
    Covariant value;
};

/// f_1..f_n followed by J(f_i, f_j) for i < j, labeled "f{i}" and "Jf{i},{j}".
/// Their tau images are the generators of ker D_1 in the same order.
std::vector<LabeledCovariant> joint_covariant_generators(Ambient a);

} // namespace weitz
