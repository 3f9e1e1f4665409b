#pragma once

#include "weitz/polynomial.hpp"

#include <string>
#include <vector>

namespace weitz {

/// The Weitzenboeck derivation with n Jordan blocks of size k + 1:
/// Ring(i, j) -> Ring(i, j - 1), Ring(i, 0) -> 0, CX, CY -> 0.
class WeitzenboeckDerivation {
public:
    /// Throws std::invalid_argument unless n >= 1 and k >= 1.
    WeitzenboeckDerivation(int n, int k);

    int n() const { return ambient_.n; }
    int k() const { return ambient_.k; }
    const Ambient& ambient() const { return ambient_; }

    /// D(p) by the Leibniz rule, one monomial at a time.
    Polynomial apply(const Polynomial& p) const;

    bool is_in_kernel(const Polynomial& p) const;

    /// Smallest r >= 0 with D^r(p) = 0.
    unsigned nilpotency_index(const Polynomial& p) const;

private:
    Ambient ambient_;
};

struct Generator {
    std::string label;
    Polynomial value;
};

/// Explicit kernel generators of D_1 (x_i, J_{i,j}) or D_2 (additionally
/// H_{i,j} with i <= j and the 3x3 determinants D{i},{j},{l}).
struct GeneratorSet {
    int n = 0;
    int k = 0;
    std::vector<Generator> items;

    std::size_t size() const { return items.size(); }
    /// Index of `label`, or -1.
    int find(const std::string& label) const;
    /// Copy without the listed labels. Throws std::invalid_argument for an
    /// unknown label.
    GeneratorSet without(const std::vector<std::string>& labels) const;
};

/// Throws UnsupportedK for k >= 3, std::invalid_argument for n < 1 or k < 1.
GeneratorSet generators(int n, int k);

/// Expected size of generators(n, k).
std::size_t generator_count(int n, int k);

} // namespace weitz
