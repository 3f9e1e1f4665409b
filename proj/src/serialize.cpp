#include "weitz/serialize.hpp"

namespace weitz {

nlohmann::ordered_json to_json(const GradedPieceKey& key) {
    return {{"block_degrees", key.block_degrees}, {"weight", key.weight}};
}

nlohmann::ordered_json to_json(const CompletenessReport& report) {
    nlohmann::ordered_json pieces = nlohmann::ordered_json::array();
    for (const PieceReport& p : report.per_piece) {
        pieces.push_back({{"key", to_json(p.key)}, {"kernel_dim", p.kernel_dim}, {"span_dim", p.span_dim}});
    }
    return {{"n", report.n},
            {"k", report.k},
            {"degree", report.degree},
            {"kernel_dim", report.kernel_dim},
            {"span_dim", report.span_dim},
            {"complete", report.complete},
            {"per_piece", std::move(pieces)}};
}

nlohmann::ordered_json to_json(const CensusRow& row) {
    return {{"degree", row.degree}, {"kernel_dim", row.kernel_dim}};
}

nlohmann::ordered_json to_json(const GeneratorSet& g) {
    nlohmann::ordered_json items = nlohmann::ordered_json::array();
    for (const Generator& gen : g.items) {
        items.push_back({{"label", gen.label}, {"polynomial", format(gen.value)}, {"degree", gen.value.total_degree()}});
    }
    return items;
}

} // namespace weitz
