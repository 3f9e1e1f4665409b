#pragma once

// Shared helpers for the test binaries: seeded random generators and an
// independent kernel-dimension oracle that shares no code with kernel_lab.

#include "weitz/covariant.hpp"
#include "weitz/polynomial.hpp"

#include <gmpxx.h>

#include <map>
#include <random>
#include <vector>

namespace weitz::testing {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, 4);
    return Rational(mpz_class(num(rng)), mpz_class(den(rng)));
}

/// Random polynomial in the ring variables (and optionally CX, CY) with
/// integer coefficients in [-9, 9] and total degree <= max_degree.
inline Polynomial random_polynomial(Rng& rng, Ambient a, unsigned max_degree, int max_terms = 5,
                                    bool covariant_vars = false) {
    const std::size_t vars = covariant_vars ? a.variable_count() : a.ring_variable_count();
    std::uniform_int_distribution<int> terms(0, max_terms);
    std::uniform_int_distribution<unsigned> degree(0, max_degree);
    std::uniform_int_distribution<std::size_t> pick(0, vars - 1);
    std::uniform_int_distribution<int> coeff(-9, 9);
    Polynomial p(a);
    const int count = terms(rng);
    for (int t = 0; t < count; ++t) {
        Monomial m = Monomial::one(a);
        const unsigned d = degree(rng);
        for (unsigned i = 0; i < d; ++i) {
            const std::size_t v = pick(rng);
            m.set(v, m[v] + 1);
        }
        p.add_term(m, Rational(coeff(rng)));
    }
    return p;
}

/// Random covariant of the given order: terms are ring monomials of degree <=
/// ring_degree times CX^a CY^(order - a).
inline Covariant random_covariant(Rng& rng, Ambient a, unsigned order, unsigned ring_degree = 2,
                                  int max_terms = 4) {
    std::uniform_int_distribution<unsigned> split(0, order);
    Polynomial p(a);
    const std::size_t cx = VariableId::cov_x().index(a);
    const std::size_t cy = VariableId::cov_y().index(a);
    const Polynomial ring = random_polynomial(rng, a, ring_degree, max_terms);
    for (const auto& [m, c] : ring.terms()) {
        Monomial full = m;
        const unsigned s = split(rng);
        full.set(cx, s);
        full.set(cy, order - s);
        p.add_term(full, c);
    }
    return Covariant(std::move(p), order);
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
inline std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> m) {
    const std::size_t rows = m.size();
    if (rows == 0) {
        return 0;
    }
    const std::size_t cols = m[0].size();
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

/// dim ker D_k on all degree-d monomials in the n(k+1) ring variables, built
/// from scratch: no grading, no library derivation, integer Bareiss rank.
inline std::size_t ungraded_kernel_dimension(int n, int k, unsigned d) {
    const std::size_t vars = static_cast<std::size_t>(n) * (k + 1);
    std::vector<std::vector<unsigned>> monos;
    std::vector<unsigned> cur(vars, 0);
    auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
        if (i + 1 == vars) {
            cur[i] = left;
            monos.push_back(cur);
            return;
        }
        for (unsigned e = 0; e <= left; ++e) {
            cur[i] = e;
            self(self, i + 1, left - e);
        }
    };
    rec(rec, 0, d);

    std::map<std::vector<unsigned>, std::size_t> row;
    for (std::size_t i = 0; i < monos.size(); ++i) {
        row.emplace(monos[i], i);
    }
    // Rows = image monomials, columns = source monomials.
    std::vector<std::vector<mpz_class>> m(monos.size(), std::vector<mpz_class>(monos.size(), 0));
    for (std::size_t c = 0; c < monos.size(); ++c) {
        const auto& e = monos[c];
        for (std::size_t v = 0; v < vars; ++v) {
            if (e[v] == 0 || v % static_cast<std::size_t>(k + 1) == 0) {
                continue;
            }
            auto image = e;
            --image[v];
            ++image[v - 1];
            m[row.at(image)][c] += e[v];
        }
    }
    return monos.size() - bareiss_rank(std::move(m));
}

} // namespace weitz::testing
