#pragma once

#include "weitz/derivation.hpp"
#include "weitz/linalg.hpp"
#include "weitz/polynomial.hpp"

#include <compare>
#include <functional>
#include <string>
#include <vector>

namespace weitz {

/// A graded piece of the ring: fixed per-block degrees and fixed weight.
/// D maps piece (b, w) into piece (b, w - 1).
struct GradedPieceKey {
    std::vector<unsigned> block_degrees;
    unsigned weight = 0;

    unsigned total_degree() const;

    friend auto operator<=>(const GradedPieceKey&, const GradedPieceKey&) = default;
};

std::string to_string(const GradedPieceKey& key);

/// Ring monomials of the piece, in canonical order (leading first).
/// Throws InvalidKey if the key does not fit (n, k).
std::vector<Monomial> graded_monomials(int n, int k, const GradedPieceKey& key);

/// Every key of total degree `degree`, sorted.
std::vector<GradedPieceKey> graded_pieces(int n, int k, unsigned degree);

/// Matrix of D from piece (b, w) to piece (b, w - 1) over the canonical
/// monomial bases; columns index the source monomials.
RationalMatrix derivation_matrix(const WeitzenboeckDerivation& d, const GradedPieceKey& key);

std::vector<Polynomial> kernel_basis(int n, int k, const GradedPieceKey& key);

/// Basis of the degree-d homogeneous part of ker D_k: the per-piece
/// nullspaces concatenated in key order.
std::vector<Polynomial> kernel_basis(int n, int k, unsigned degree);

std::size_t kernel_dimension(int n, int k, const GradedPieceKey& key);
std::size_t kernel_dimension(int n, int k, unsigned degree);

/// A monomial in the generators: `factors` are non-decreasing indices into
/// the generator set.
struct GeneratorProduct {
    std::vector<std::size_t> factors;
    Polynomial value;
};

/// All products of generators of total ring degree exactly `degree`, in
/// lexicographic order of the factor index sequences. Degree 0 yields the
/// empty product 1.
std::vector<GeneratorProduct> generator_products(const GeneratorSet& g, unsigned degree);

/// Rank of the coefficient matrix of `polys`. Throws NonHomogeneous unless
/// every polynomial is homogeneous of total degree `degree` (zero is
/// accepted).
std::size_t span_dimension(const std::vector<Polynomial>& polys, unsigned degree);

/// Same, with every polynomial required to lie in the piece `key`.
std::size_t span_dimension(const std::vector<Polynomial>& polys, const GradedPieceKey& key);

struct PieceReport {
    GradedPieceKey key;
    std::size_t kernel_dim = 0;
    std::size_t span_dim = 0;
};

struct CompletenessReport {
    int n = 0;
    int k = 0;
    unsigned degree = 0;
    std::size_t kernel_dim = 0;
    std::size_t span_dim = 0;
    bool complete = false;
    /// Pieces with a nonzero kernel, in key order.
    std::vector<PieceReport> per_piece;
};

/// Compares the kernel dimension with the span of generator products at the
/// given degree. Throws UnsupportedK for k >= 3.
CompletenessReport completeness_check(int n, int k, unsigned degree);

/// Same, against an arbitrary (possibly reduced) generator set.
CompletenessReport completeness_check(const GeneratorSet& g, unsigned degree);

struct CombinationTerm {
    std::vector<std::size_t> factors;
    Rational coefficient;
};

/// Linear combination of generator products.
struct Combination {
    std::vector<CombinationTerm> terms;
};

/// Writes p as a combination of generator products of its degree. The
/// returned solution is the one produced by Gauss-Jordan over the products in
/// enumeration order with free variables set to zero.
///
/// Throws NonHomogeneous, NotInKernel, or NotInSpan.
Combination express_in_generators(const Polynomial& p, const GeneratorSet& g);

Polynomial evaluate(const Combination& c, const GeneratorSet& g);

/// e.g. "x1^2 + 1/2*x2*J1,2"; the empty combination prints as "0".
std::string format(const Combination& c, const GeneratorSet& g);

struct CensusRow {
    unsigned degree = 0;
    std::size_t kernel_dim = 0;
};

/// Kernel dimensions for degrees 0..max_degree. `on_row`, when set, is called
/// as each degree finishes.
std::vector<CensusRow> kernel_census(int n, int k, unsigned max_degree,
                                     const std::function<void(const CensusRow&)>& on_row = {});

} // namespace weitz
