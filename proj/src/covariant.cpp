#include "weitz/covariant.hpp"

#include "weitz/error.hpp"

namespace weitz {
namespace {

Polynomial mixed_partial(Polynomial p, int dx, int dy) {
    for (int i = 0; i < dx && !p.is_zero(); ++i) {
        p = partial_derivative(p, VariableId::cov_x());
    }
    for (int i = 0; i < dy && !p.is_zero(); ++i) {
        p = partial_derivative(p, VariableId::cov_y());
    }
    return p;
}

Rational binomial(int r, int i) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(i));
    return Rational(b, mpz_class(1));
}

} // namespace

unsigned covariant_order(const Polynomial& p) {
    if (p.is_zero()) {
        return 0;
    }
    const Ambient& a = p.ambient();
    const unsigned order = p.terms().begin()->first.covariant_degree(a);
    for (const auto& [m, c] : p.terms()) {
        if (m.covariant_degree(a) != order) {
            throw NonHomogeneousOrder(format(p) + " is not homogeneous in CX, CY");
        }
    }
    return order;
}

Covariant::Covariant(Polynomial p) : value_(std::move(p)), order_(covariant_order(value_)) {}

Covariant::Covariant(Polynomial p, unsigned order) : value_(std::move(p)), order_(order) {
    if (!value_.is_zero() && covariant_order(value_) != order) {
        throw NonHomogeneousOrder(format(value_) + " does not have order " + std::to_string(order));
    }
}

Covariant operator*(const Covariant& a, const Covariant& b) {
    return Covariant(a.value_ * b.value_, a.order_ + b.order_);
}

Covariant operator+(const Covariant& a, const Covariant& b) {
    Polynomial sum = a.value_ + b.value_;
    if (a.is_zero()) {
        return b;
    }
    if (b.is_zero()) {
        return a;
    }
    if (a.order_ != b.order_) {
        throw NonHomogeneousOrder("sum of covariants of orders " + std::to_string(a.order_) + " and " +
                                  std::to_string(b.order_));
    }
    return Covariant(std::move(sum), a.order_);
}

Covariant operator*(const Rational& c, const Covariant& a) {
    return Covariant(a.value_ * c, a.order_);
}

Covariant linear_form(Ambient a, int i) {
    if (i < 1 || i > a.n) {
        throw IndexOutOfRange("linear form index " + std::to_string(i) + " outside 1.." + std::to_string(a.n));
    }
    Polynomial f = Polynomial::variable(a, VariableId::ring(i, 0)) * Polynomial::variable(a, VariableId::cov_x()) +
                   Polynomial::variable(a, VariableId::ring(i, 1)) * Polynomial::variable(a, VariableId::cov_y());
    return Covariant(std::move(f), 1);
}

Covariant transvectant(const Covariant& u, const Covariant& v, int r) {
    if (r < 0) {
        throw NegativeOrder("transvectant order must be non-negative, got " + std::to_string(r));
    }
    require_same_ambient(u.ambient(), v.ambient());
    Polynomial sum(u.ambient());
    for (int i = 0; i <= r; ++i) {
        const Polynomial du = mixed_partial(u.value(), r - i, i);
        if (du.is_zero()) {
            continue;
        }
        const Polynomial dv = mixed_partial(v.value(), i, r - i);
        if (dv.is_zero()) {
            continue;
        }
        Rational c = binomial(r, i);
        if (i % 2 == 1) {
            c = -c;
        }
        sum += c * (du * dv);
    }
    if (sum.is_zero()) {
        return Covariant(std::move(sum), 0);
    }
    return Covariant(std::move(sum), u.order() + v.order() - 2 * static_cast<unsigned>(r));
}

Covariant jacobian(const Covariant& u, const Covariant& v) {
    return transvectant(u, v, 1);
}

Polynomial tau(const Covariant& c) {
    const Ambient& a = c.ambient();
    const std::size_t cx = VariableId::cov_x().index(a);
    Polynomial out(a);
    for (const auto& [m, coeff] : c.value().terms()) {
        if (m[cx] == c.order()) {
            Monomial stripped = m;
            stripped.set(cx, 0);
            out.add_term(stripped, coeff);
        }
    }
    return out;
}

Polynomial tau(const Polynomial& p) {
    return tau(Covariant(p));
}

std::vector<LabeledCovariant> joint_covariant_generators(Ambient a) {
    std::vector<LabeledCovariant> out;
    std::vector<Covariant> forms;
    for (int i = 1; i <= a.n; ++i) {
        forms.push_back(linear_form(a, i));
        out.push_back({"f" + std::to_string(i), forms.back()});
    }
    for (int i = 1; i <= a.n; ++i) {
        for (int j = i + 1; j <= a.n; ++j) {
            out.push_back({"Jf" + std::to_string(i) + "," + std::to_string(j),
                           jacobian(forms[static_cast<std::size_t>(i - 1)], forms[static_cast<std::size_t>(j - 1)])});
        }
    }
    return out;
}

} // namespace weitz
