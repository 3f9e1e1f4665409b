#include "weitz/derivation.hpp"

#include "weitz/error.hpp"

#include <stdexcept>

namespace weitz {

WeitzenboeckDerivation::WeitzenboeckDerivation(int n, int k) : ambient_(Ambient::make(n, k)) {}

Polynomial WeitzenboeckDerivation::apply(const Polynomial& p) const {
    require_same_ambient(ambient_, p.ambient());
    Polynomial out(ambient_);
    const auto width = static_cast<std::size_t>(ambient_.k + 1);
    for (const auto& [m, c] : p.terms()) {
        for (std::size_t i = 0; i < ambient_.ring_variable_count(); ++i) {
            const unsigned e = m[i];
            if (e == 0 || i % width == 0) {
                continue;
            }
            Monomial image = m;
            image.set(i, e - 1);
            image.set(i - 1, m[i - 1] + 1);
            out.add_term(image, c * Rational(static_cast<long>(e)));
        }
    }
    return out;
}

bool WeitzenboeckDerivation::is_in_kernel(const Polynomial& p) const {
    return apply(p).is_zero();
}

unsigned WeitzenboeckDerivation::nilpotency_index(const Polynomial& p) const {
    require_same_ambient(ambient_, p.ambient());
    unsigned r = 0;
    Polynomial current = p;
    while (!current.is_zero()) {
        current = apply(current);
        ++r;
    }
    return r;
}

int GeneratorSet::find(const std::string& label) const {
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (items[i].label == label) {
            return static_cast<int>(i);
        }
    }
    return -1;
}

GeneratorSet GeneratorSet::without(const std::vector<std::string>& labels) const {
    for (const auto& l : labels) {
        if (find(l) < 0) {
            throw std::invalid_argument("unknown generator label '" + l + "'");
        }
    }
    GeneratorSet out{n, k, {}};
    for (const auto& g : items) {
        bool drop = false;
        for (const auto& l : labels) {
            drop = drop || g.label == l;
        }
        if (!drop) {
            out.items.push_back(g);
        }
    }
    return out;
}

std::size_t generator_count(int n, int k) {
    const auto m = static_cast<std::size_t>(n);
    const std::size_t pairs = m * (m - 1) / 2;
    std::size_t count = m + pairs;
    if (k == 2) {
        count += pairs + m + m * (m - 1) * (m - 2) / 6;
    }
    return count;
}

GeneratorSet generators(int n, int k) {
    const Ambient a = Ambient::make(n, k);
    if (k > 2) {
        throw UnsupportedK("unsupported k = " + std::to_string(k) +
                           ": no generator family is known for k >= 3; use census");
    }
    auto var = [&](int block, int level) {
        return Polynomial::variable(a, VariableId::ring(block, level));
    };
    auto idx = [](std::initializer_list<int> parts) {
        std::string s;
        for (int p : parts) {
            if (!s.empty()) {
                s += ',';
            }
            s += std::to_string(p);
        }
        return s;
    };

    GeneratorSet g{n, k, {}};
    for (int i = 1; i <= n; ++i) {
        g.items.push_back({"x" + std::to_string(i), var(i, 0)});
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            g.items.push_back({"J" + idx({i, j}), var(i, 0) * var(j, 1) - var(j, 0) * var(i, 1)});
        }
    }
    if (k == 2) {
        for (int i = 1; i <= n; ++i) {
            for (int j = i; j <= n; ++j) {
                Polynomial h = var(i, 0) * var(j, 2) - var(i, 1) * var(j, 1) + var(i, 2) * var(j, 0);
                g.items.push_back({"H" + idx({i, j}), std::move(h)});
            }
        }
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                for (int l = j + 1; l <= n; ++l) {
                    // Cofactor expansion along the x row.
                    Polynomial det = var(i, 0) * (var(j, 1) * var(l, 2) - var(l, 1) * var(j, 2)) -
                                     var(j, 0) * (var(i, 1) * var(l, 2) - var(l, 1) * var(i, 2)) +
                                     var(l, 0) * (var(i, 1) * var(j, 2) - var(j, 1) * var(i, 2));
                    g.items.push_back({"D" + idx({i, j, l}), std::move(det)});
                }
            }
        }
    }
    return g;
}

} // namespace weitz
