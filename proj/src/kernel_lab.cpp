#include "weitz/kernel_lab.hpp"

#include "parallel.hpp"
#include "weitz/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace weitz {
namespace {

struct BlockPart {
    std::vector<unsigned> levels;  // exponent per level 0..k
    unsigned weight = 0;
};

// Exponent distributions of `degree` over the k + 1 levels of one block.
std::vector<BlockPart> block_parts(int k, unsigned degree) {
    std::vector<BlockPart> out;
    BlockPart cur;
    cur.levels.assign(static_cast<std::size_t>(k + 1), 0);
    auto rec = [&](auto&& self, std::size_t level, unsigned left) -> void {
        if (level == cur.levels.size() - 1) {
            cur.levels[level] = left;
            BlockPart done = cur;
            done.weight = 0;
            for (std::size_t j = 0; j < done.levels.size(); ++j) {
                done.weight += static_cast<unsigned>(j) * done.levels[j];
            }
            out.push_back(std::move(done));
            return;
        }
        for (unsigned e = 0; e <= left; ++e) {
            cur.levels[level] = e;
            self(self, level + 1, left - e);
        }
    };
    rec(rec, 0, degree);
    return out;
}

void validate_key(int n, int k, const GradedPieceKey& key) {
    if (key.block_degrees.size() != static_cast<std::size_t>(n)) {
        throw InvalidKey("piece key " + to_string(key) + " has the wrong number of blocks for n = " +
                         std::to_string(n));
    }
    if (key.weight > key.total_degree() * static_cast<unsigned>(k)) {
        throw InvalidKey("piece key " + to_string(key) + " has weight above its bound " +
                         std::to_string(key.total_degree() * static_cast<unsigned>(k)));
    }
}

GradedPieceKey key_of(const Monomial& m, const Ambient& a) {
    return {m.block_degrees(a), m.weight(a)};
}

// Rank of `polys` over the given monomial basis; every term must be in it.
std::size_t rank_over(const std::vector<const Polynomial*>& polys, const std::vector<Monomial>& basis) {
    if (polys.empty() || basis.empty()) {
        return 0;
    }
    std::map<Monomial, std::size_t, LeadingFirst> index;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        index.emplace(basis[i], i);
    }
    RationalMatrix m(polys.size(), basis.size());
    for (std::size_t r = 0; r < polys.size(); ++r) {
        for (const auto& [mono, c] : polys[r]->terms()) {
            m(r, index.at(mono)) = c;
        }
    }
    return rank(m);
}

std::vector<Monomial> support_of(const std::vector<const Polynomial*>& polys) {
    std::map<Monomial, bool, LeadingFirst> seen;
    for (const Polynomial* p : polys) {
        for (const auto& [m, c] : p->terms()) {
            seen.emplace(m, true);
        }
    }
    std::vector<Monomial> out;
    out.reserve(seen.size());
    for (const auto& [m, unused] : seen) {
        out.push_back(m);
    }
    return out;
}

} // namespace

unsigned GradedPieceKey::total_degree() const {
    return std::accumulate(block_degrees.begin(), block_degrees.end(), 0U);
}

std::string to_string(const GradedPieceKey& key) {
    std::string s = "((";
    for (std::size_t i = 0; i < key.block_degrees.size(); ++i) {
        if (i > 0) {
            s += ',';
        }
        s += std::to_string(key.block_degrees[i]);
    }
    s += "), " + std::to_string(key.weight) + ")";
    return s;
}

std::vector<Monomial> graded_monomials(int n, int k, const GradedPieceKey& key) {
    const Ambient a = Ambient::make(n, k);
    validate_key(n, k, key);

    std::vector<std::vector<BlockPart>> parts;
    parts.reserve(static_cast<std::size_t>(n));
    for (unsigned b : key.block_degrees) {
        parts.push_back(block_parts(k, b));
    }

    std::vector<Monomial> out;
    std::vector<unsigned> exps(a.variable_count(), 0);
    const auto width = static_cast<std::size_t>(k + 1);
    auto rec = [&](auto&& self, std::size_t block, unsigned weight_left) -> void {
        if (block == parts.size()) {
            if (weight_left == 0) {
                out.emplace_back(exps);
            }
            return;
        }
        for (const BlockPart& part : parts[block]) {
            if (part.weight > weight_left) {
                continue;
            }
            std::copy(part.levels.begin(), part.levels.end(),
                      exps.begin() + static_cast<std::ptrdiff_t>(block * width));
            self(self, block + 1, weight_left - part.weight);
        }
    };
    rec(rec, 0, key.weight);
    std::sort(out.begin(), out.end(), LeadingFirst{});
    return out;
}

std::vector<GradedPieceKey> graded_pieces(int n, int k, unsigned degree) {
    Ambient::make(n, k);
    std::vector<GradedPieceKey> out;
    std::vector<unsigned> blocks(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
        if (i + 1 == blocks.size()) {
            blocks[i] = left;
            for (unsigned w = 0; w <= degree * static_cast<unsigned>(k); ++w) {
                out.push_back({blocks, w});
            }
            return;
        }
        for (unsigned e = 0; e <= left; ++e) {
            blocks[i] = e;
            self(self, i + 1, left - e);
        }
    };
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end());
    return out;
}

RationalMatrix derivation_matrix(const WeitzenboeckDerivation& d, const GradedPieceKey& key) {
    const std::vector<Monomial> source = graded_monomials(d.n(), d.k(), key);
    if (key.weight == 0) {
        return RationalMatrix(0, source.size());
    }
    GradedPieceKey lower = key;
    --lower.weight;
    const std::vector<Monomial> target = graded_monomials(d.n(), d.k(), lower);
    std::map<Monomial, std::size_t, LeadingFirst> row_of;
    for (std::size_t i = 0; i < target.size(); ++i) {
        row_of.emplace(target[i], i);
    }
    RationalMatrix m(target.size(), source.size());
    for (std::size_t c = 0; c < source.size(); ++c) {
        const Polynomial image = d.apply(Polynomial::term(d.ambient(), source[c], Rational(1)));
        for (const auto& [mono, coeff] : image.terms()) {
            m(row_of.at(mono), c) = coeff;
        }
    }
    return m;
}

std::vector<Polynomial> kernel_basis(int n, int k, const GradedPieceKey& key) {
    const WeitzenboeckDerivation d(n, k);
    const std::vector<Monomial> source = graded_monomials(n, k, key);
    std::vector<Polynomial> out;
    for (const RationalVector& v : nullspace(derivation_matrix(d, key))) {
        Polynomial p(d.ambient());
        for (std::size_t i = 0; i < v.size(); ++i) {
            p.add_term(source[i], v[i]);
        }
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<Polynomial> kernel_basis(int n, int k, unsigned degree) {
    const auto keys = graded_pieces(n, k, degree);
    auto per_piece = detail::parallel_map(keys.size(), [&](std::size_t i) { return kernel_basis(n, k, keys[i]); });
    std::vector<Polynomial> out;
    for (auto& basis : per_piece) {
        for (auto& p : basis) {
            out.push_back(std::move(p));
        }
    }
    return out;
}

std::size_t kernel_dimension(int n, int k, const GradedPieceKey& key) {
    const WeitzenboeckDerivation d(n, k);
    const RationalMatrix m = derivation_matrix(d, key);
    return m.cols() - rank(m);
}

std::size_t kernel_dimension(int n, int k, unsigned degree) {
    const auto keys = graded_pieces(n, k, degree);
    const auto dims =
        detail::parallel_map(keys.size(), [&](std::size_t i) { return kernel_dimension(n, k, keys[i]); });
    return std::accumulate(dims.begin(), dims.end(), std::size_t{0});
}

std::vector<GeneratorProduct> generator_products(const GeneratorSet& g, unsigned degree) {
    const Ambient a = Ambient::make(g.n, g.k);
    std::vector<unsigned> gen_degree;
    gen_degree.reserve(g.size());
    for (const auto& item : g.items) {
        if (!item.value.is_homogeneous() || item.value.is_zero()) {
            throw NonHomogeneous("generator " + item.label + " is not a nonzero homogeneous polynomial");
        }
        gen_degree.push_back(item.value.total_degree());
    }

    std::vector<GeneratorProduct> out;
    std::vector<std::size_t> factors;
    auto rec = [&](auto&& self, std::size_t start, unsigned left, const Polynomial& prefix) -> void {
        if (left == 0) {
            out.push_back({factors, prefix});
            return;
        }
        for (std::size_t i = start; i < g.size(); ++i) {
            if (gen_degree[i] > left || gen_degree[i] == 0) {
                continue;
            }
            factors.push_back(i);
            self(self, i, left - gen_degree[i], prefix * g.items[i].value);
            factors.pop_back();
        }
    };
    rec(rec, 0, degree, Polynomial::constant(a, Rational(1)));
    return out;
}

std::size_t span_dimension(const std::vector<Polynomial>& polys, unsigned degree) {
    std::vector<const Polynomial*> ptrs;
    for (const Polynomial& p : polys) {
        if (p.is_zero()) {
            continue;
        }
        if (!p.is_homogeneous() || p.total_degree() != degree) {
            throw NonHomogeneous("polynomial " + format(p) + " is not homogeneous of degree " +
                                 std::to_string(degree));
        }
        ptrs.push_back(&p);
    }
    return rank_over(ptrs, support_of(ptrs));
}

std::size_t span_dimension(const std::vector<Polynomial>& polys, const GradedPieceKey& key) {
    std::vector<const Polynomial*> ptrs;
    for (const Polynomial& p : polys) {
        if (p.is_zero()) {
            continue;
        }
        for (const auto& [m, c] : p.terms()) {
            if (m.covariant_degree(p.ambient()) != 0 || key_of(m, p.ambient()) != key) {
                throw NonHomogeneous("polynomial " + format(p) + " does not lie in piece " + to_string(key));
            }
        }
        ptrs.push_back(&p);
    }
    return rank_over(ptrs, support_of(ptrs));
}

CompletenessReport completeness_check(int n, int k, unsigned degree) {
    return completeness_check(generators(n, k), degree);
}

CompletenessReport completeness_check(const GeneratorSet& g, unsigned degree) {
    if (g.k > 2) {
        throw UnsupportedK("completeness check needs a generator set; k = " + std::to_string(g.k));
    }
    const Ambient a = Ambient::make(g.n, g.k);
    const auto keys = graded_pieces(g.n, g.k, degree);

    // Generators are multihomogeneous, so each product sits in one piece.
    std::map<GradedPieceKey, std::vector<const Polynomial*>> bucket;
    const auto products = generator_products(g, degree);
    for (const auto& prod : products) {
        const Polynomial& v = prod.value;
        if (v.is_zero()) {
            continue;
        }
        bucket[key_of(v.terms().begin()->first, a)].push_back(&v);
    }

    const auto pieces = detail::parallel_map(keys.size(), [&](std::size_t i) {
        PieceReport r{keys[i], kernel_dimension(g.n, g.k, keys[i]), 0};
        if (auto it = bucket.find(keys[i]); it != bucket.end()) {
            r.span_dim = rank_over(it->second, graded_monomials(g.n, g.k, keys[i]));
        }
        return r;
    });

    CompletenessReport report;
    report.n = g.n;
    report.k = g.k;
    report.degree = degree;
    for (const PieceReport& p : pieces) {
        report.kernel_dim += p.kernel_dim;
        report.span_dim += p.span_dim;
        if (p.kernel_dim > 0) {
            report.per_piece.push_back(p);
        }
    }
    report.complete = report.kernel_dim == report.span_dim;
    return report;
}

Combination express_in_generators(const Polynomial& p, const GeneratorSet& g) {
    const WeitzenboeckDerivation d(g.n, g.k);
    require_same_ambient(d.ambient(), p.ambient());
    if (!p.is_homogeneous()) {
        throw NonHomogeneous("cannot express non-homogeneous polynomial " + format(p));
    }
    if (!d.is_in_kernel(p)) {
        throw NotInKernel(format(p) + " is not in the kernel of D_" + std::to_string(g.k));
    }
    Combination out;
    if (p.is_zero()) {
        return out;
    }

    const Ambient& a = p.ambient();
    std::map<GradedPieceKey, bool> wanted;
    for (const auto& [m, c] : p.terms()) {
        wanted[key_of(m, a)] = true;
    }
    std::vector<GeneratorProduct> candidates;
    for (auto& prod : generator_products(g, p.total_degree())) {
        if (wanted.contains(key_of(prod.value.terms().begin()->first, a))) {
            candidates.push_back(std::move(prod));
        }
    }

    std::vector<const Polynomial*> ptrs{&p};
    for (const auto& c : candidates) {
        ptrs.push_back(&c.value);
    }
    const std::vector<Monomial> rows = support_of(ptrs);
    std::map<Monomial, std::size_t, LeadingFirst> row_of;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        row_of.emplace(rows[i], i);
    }
    RationalMatrix m(rows.size(), candidates.size());
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        for (const auto& [mono, coeff] : candidates[c].value.terms()) {
            m(row_of.at(mono), c) = coeff;
        }
    }
    RationalVector rhs(rows.size());
    for (const auto& [mono, coeff] : p.terms()) {
        rhs[row_of.at(mono)] = coeff;
    }

    const auto solution = solve(m, rhs);
    if (!solution) {
        throw NotInSpan(format(p) + " is not in the span of generator products of degree " +
                        std::to_string(p.total_degree()));
    }
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        if (!(*solution)[c].is_zero()) {
            out.terms.push_back({candidates[c].factors, (*solution)[c]});
        }
    }
    return out;
}

Polynomial evaluate(const Combination& c, const GeneratorSet& g) {
    const Ambient a = Ambient::make(g.n, g.k);
    Polynomial out(a);
    for (const auto& term : c.terms) {
        Polynomial prod = Polynomial::constant(a, term.coefficient);
        for (std::size_t f : term.factors) {
            prod = prod * g.items.at(f).value;
        }
        out += prod;
    }
    return out;
}

std::string format(const Combination& c, const GeneratorSet& g) {
    if (c.terms.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& term : c.terms) {
        const bool negative = term.coefficient.sign() < 0;
        if (first) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const Rational magnitude = negative ? -term.coefficient : term.coefficient;

        std::string product;
        for (std::size_t i = 0; i < term.factors.size();) {
            std::size_t j = i;
            while (j < term.factors.size() && term.factors[j] == term.factors[i]) {
                ++j;
            }
            if (!product.empty()) {
                product += '*';
            }
            product += g.items.at(term.factors[i]).label;
            if (j - i > 1) {
                product += '^' + std::to_string(j - i);
            }
            i = j;
        }
        if (product.empty()) {
            out += magnitude.to_string();
        } else if (magnitude.is_one()) {
            out += product;
        } else {
            out += magnitude.to_string() + "*" + product;
        }
    }
    return out;
}

std::vector<CensusRow> kernel_census(int n, int k, unsigned max_degree,
                                     const std::function<void(const CensusRow&)>& on_row) {
    std::vector<CensusRow> out;
    for (unsigned d = 0; d <= max_degree; ++d) {
        out.push_back({d, kernel_dimension(n, k, d)});
        if (on_row) {
            on_row(out.back());
        }
    }
    return out;
}

} // namespace weitz
