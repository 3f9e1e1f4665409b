#include "cli.hpp"

#include "weitz/covariant.hpp"
#include "weitz/derivation.hpp"
#include "weitz/error.hpp"
#include "weitz/kernel_lab.hpp"
#include "weitz/parse.hpp"
#include "weitz/serialize.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>

namespace weitz::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Config {
    int n = 1;
    int k = 1;
    int max_degree = 4;
    int degree = -1;
    std::string output = "text";
    std::uint64_t seed = 0;
    std::vector<std::string> exclude;
    std::string poly;
    std::string u;
    std::string v;
    int r = 0;

    bool machine() const { return output == "machine"; }
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json base_params(const Config& c) {
    return {{"n", c.n}, {"k", c.k}, {"seed", c.seed}};
}

void emit(std::ostream& out, const std::string& command, Json params, Json result, int indent = -1) {
    Json doc = {{"command", command}, {"params", std::move(params)}, {"result", std::move(result)}};
    out << doc.dump(indent) << '\n';
}

Polynomial parse_arg(const std::string& what, const std::string& text, Ambient a) {
    try {
        return parse(text, a);
    } catch (const SyntaxError& e) {
        throw UsageError("--" + what + ": " + e.what() + "\n  " + text + "\n  " + std::string(e.position(), ' ') + "^");
    } catch (const AmbientMismatch& e) {
        throw UsageError("--" + what + ": " + e.what());
    }
}

// A range of degrees: --degree selects one, otherwise 0..--max-degree.
std::vector<unsigned> degrees(const Config& c) {
    if (c.degree >= 0) {
        return {static_cast<unsigned>(c.degree)};
    }
    std::vector<unsigned> out;
    for (int d = 0; d <= c.max_degree; ++d) {
        out.push_back(static_cast<unsigned>(d));
    }
    return out;
}

GeneratorSet checked_generators(const Config& c) {
    try {
        return generators(c.n, c.k);
    } catch (const UnsupportedK&) {
        throw UsageError("unsupported k = " + std::to_string(c.k) +
                         ": no generator set is known for k >= 3; use `census` to explore kernel dimensions");
    }
}

int cmd_gens(const Config& c, std::ostream& out) {
    const GeneratorSet g = checked_generators(c);
    if (c.machine()) {
        emit(out, "gens", base_params(c), to_json(g));
        return kOk;
    }
    for (const Generator& gen : g.items) {
        const std::string text = format(gen.value);
        out << gen.label;
        if (text != gen.label) {
            out << " = " << text;
        }
        out << '\n';
    }
    return kOk;
}

int cmd_verify(const Config& c, std::ostream& out) {
    GeneratorSet g = checked_generators(c);
    if (!c.exclude.empty()) {
        try {
            g = g.without(c.exclude);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--exclude: ") + e.what());
        }
    }
    bool all_complete = true;
    Json reports = Json::array();
    for (unsigned d : degrees(c)) {
        const CompletenessReport r = completeness_check(g, d);
        all_complete = all_complete && r.complete;
        if (c.machine()) {
            reports.push_back(to_json(r));
        } else {
            out << "degree " << d << ": kernel_dim " << r.kernel_dim << ", span_dim " << r.span_dim << ' '
                << (r.complete ? "OK" : "FAIL") << '\n';
        }
    }
    if (c.machine()) {
        Json params = base_params(c);
        params["max_degree"] = c.max_degree;
        params["degree"] = c.degree;
        params["exclude"] = c.exclude;
        emit(out, "verify", std::move(params), std::move(reports), 2);
    }
    return all_complete ? kOk : kVerificationFailed;
}

int cmd_census(const Config& c, std::ostream& out) {
    Json params = base_params(c);
    params["max_degree"] = c.max_degree;
    params["degree"] = c.degree;
    if (!c.machine()) {
        out << "# kernel dimensions of D_" << c.k << " with n = " << c.n << "\n";
        out << "degree kernel_dim\n";
    }
    for (unsigned d : degrees(c)) {
        const CensusRow row{d, kernel_dimension(c.n, c.k, d)};
        if (c.machine()) {
            emit(out, "census", params, to_json(row));
        } else {
            out << row.degree << ' ' << row.kernel_dim << '\n';
        }
        out.flush();
    }
    return kOk;
}

int print_polynomial(const Config& c, std::ostream& out, const std::string& command, Json params,
                     const Polynomial& p) {
    if (c.machine()) {
        emit(out, command, std::move(params), format(p));
    } else {
        out << format(p) << '\n';
    }
    return kOk;
}

int cmd_apply(const Config& c, std::ostream& out) {
    const WeitzenboeckDerivation d(c.n, c.k);
    const Polynomial p = parse_arg("poly", c.poly, d.ambient());
    Json params = base_params(c);
    params["poly"] = c.poly;
    return print_polynomial(c, out, "apply", std::move(params), d.apply(p));
}

int cmd_nilpotency(const Config& c, std::ostream& out) {
    const WeitzenboeckDerivation d(c.n, c.k);
    const Polynomial p = parse_arg("poly", c.poly, d.ambient());
    const unsigned index = d.nilpotency_index(p);
    if (c.machine()) {
        Json params = base_params(c);
        params["poly"] = c.poly;
        emit(out, "nilpotency", std::move(params), index);
    } else {
        out << index << '\n';
    }
    return kOk;
}

Covariant covariant_arg(const std::string& what, const std::string& text, Ambient a) {
    Polynomial p = parse_arg(what, text, a);
    try {
        return Covariant(std::move(p));
    } catch (const NonHomogeneousOrder& e) {
        throw UsageError("--" + what + ": " + e.what());
    }
}

int cmd_transvect(const Config& c, std::ostream& out) {
    const Ambient a = Ambient::make(c.n, c.k);
    if (c.r < 0) {
        throw UsageError("--r must be non-negative");
    }
    const Covariant u = covariant_arg("u", c.u, a);
    const Covariant v = covariant_arg("v", c.v, a);
    Json params = base_params(c);
    params["r"] = c.r;
    params["u"] = c.u;
    params["v"] = c.v;
    return print_polynomial(c, out, "transvect", std::move(params), transvectant(u, v, c.r).value());
}

int cmd_tau(const Config& c, std::ostream& out) {
    const Ambient a = Ambient::make(c.n, c.k);
    const Covariant cov = covariant_arg("poly", c.poly, a);
    Json params = base_params(c);
    params["poly"] = c.poly;
    return print_polynomial(c, out, "tau", std::move(params), tau(cov));
}

int cmd_express(const Config& c, std::ostream& out) {
    const GeneratorSet g = checked_generators(c);
    const Polynomial p = parse_arg("poly", c.poly, Ambient::make(c.n, c.k));
    Json params = base_params(c);
    params["poly"] = c.poly;

    std::string status = "ok";
    std::string text;
    Json terms = Json::array();
    int code = kOk;
    try {
        const Combination comb = express_in_generators(p, g);
        text = format(comb, g);
        for (const auto& t : comb.terms) {
            std::vector<std::string> labels;
            for (std::size_t f : t.factors) {
                labels.push_back(g.items[f].label);
            }
            terms.push_back({{"factors", labels}, {"coefficient", t.coefficient.to_string()}});
        }
    } catch (const NotInSpan&) {
        status = "not_in_span";
        text = "NOT IN SPAN";
        code = kVerificationFailed;
    } catch (const NotInKernel&) {
        status = "not_in_kernel";
        text = "NOT IN KERNEL";
        code = kVerificationFailed;
    } catch (const NonHomogeneous& e) {
        throw UsageError(std::string("--poly: ") + e.what());
    }
    if (c.machine()) {
        emit(out, "express", std::move(params), {{"status", status}, {"text", text}, {"terms", terms}});
    } else {
        out << text << '\n';
    }
    return code;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weitzenboeck derivation kernels: generators, verification, census, transvectants"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    Config c;
    app.add_option("--n", c.n, "number of Jordan blocks")->check(CLI::PositiveNumber);
    app.add_option("--k", c.k, "block size minus one")->check(CLI::PositiveNumber);
    app.add_option("--max-degree", c.max_degree, "largest degree for verify/census")->check(CLI::NonNegativeNumber);
    app.add_option("--degree", c.degree, "single degree for verify/census")->check(CLI::NonNegativeNumber);
    app.add_option("--output", c.output, "output format")->check(CLI::IsMember({"text", "machine"}));
    app.add_option("--seed", c.seed, "seed recorded in machine output");

    std::map<std::string, std::function<int(const Config&, std::ostream&)>> handlers;
    auto sub = [&](const std::string& name, const std::string& help, auto handler) {
        handlers[name] = handler;
        return app.add_subcommand(name, help);
    };

    sub("gens", "print the kernel generators for k = 1 or 2", cmd_gens);
    auto* verify = sub("verify", "check generation of the kernel degree by degree", cmd_verify);
    verify->add_option("--exclude", c.exclude, "drop a generator by label (repeatable)");
    sub("census", "kernel dimensions per degree (any k)", cmd_census);
    sub("apply", "apply D_k to a polynomial", cmd_apply)->add_option("--poly", c.poly)->required();
    sub("nilpotency", "smallest r with D^r(p) = 0", cmd_nilpotency)->add_option("--poly", c.poly)->required();
    sub("tau", "coefficient of CX^m of an order-m covariant", cmd_tau)->add_option("--poly", c.poly)->required();
    sub("express", "write a kernel element in the generators", cmd_express)->add_option("--poly", c.poly)->required();
    auto* transvect = sub("transvect", "r-th transvectant of two covariants", cmd_transvect);
    transvect->add_option("--r", c.r)->required();
    transvect->add_option("--u", c.u)->required();
    transvect->add_option("--v", c.v)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    try {
        return handlers.at(name)(c, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
}

} // namespace weitz::cli
