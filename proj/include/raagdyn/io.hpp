#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "raagdyn/automorphism.hpp"
#include "raagdyn/diagram.hpp"
#include "raagdyn/dynamics.hpp"

namespace raagdyn {

// Parsed input document: the defining graph plus either raw generator
// images or a Laurence-Servatius generator list.
struct SpecFile {
    struct RawImages {
        std::vector<Word> images; // indexed by vertex id
        std::optional<std::vector<Word>> inverse_images;
        bool operator==(const RawImages&) const = default;
    };

    SimplicialGraph graph;
    std::variant<RawImages, std::vector<LSGenerator>> source;

    Automorphism build() const;

    bool operator==(const SpecFile&) const = default;
};

SpecFile parse_spec(std::string_view text);
nlohmann::ordered_json spec_to_json(const SpecFile& spec);
std::string serialize_spec(const SpecFile& spec);

// Deterministic DOT text for the diagram; nodes in complete SCCs render as
// boxes, nodes in empty SCCs as double ellipses.
std::string export_dot(const SimplicialGraph& g, const AutomorphismDiagram& d,
                       const CycleClassification& cycles);

struct AnalyzeOptions {
    std::size_t k_max = kDefaultKMax;
    std::uint64_t length_cap = kDefaultLengthCap;
    bool pure_power_first = false;
    std::uint64_t pure_power_cap = std::uint64_t(1) << 20;
};

struct AnalysisReport {
    SpecFile input;
    bool verified_automorphism;
    bool positive;
    PurityReport purity;
    SquareReport square;
    std::optional<std::uint64_t> pure_power_exponent;
    AutomorphismDiagram diagram;
    std::vector<VertexSet> diagram_components;
    std::optional<TerminalPartition> terminal; // when the diagram is acyclic
    CycleClassification cycles;
    GrowthReport growth;
};

AnalysisReport analyze(const SpecFile& spec, const AnalyzeOptions& options = {});
nlohmann::ordered_json report_to_json(const AnalysisReport& report);

// structure serializers shared by the report, the CLI and the bindings
nlohmann::ordered_json purity_to_json(const SimplicialGraph& g, const PurityReport& purity);
nlohmann::ordered_json square_to_json(const SimplicialGraph& g, const SquareReport& square);
nlohmann::ordered_json cycle_classification_to_json(const SimplicialGraph& g,
                                                    const CycleClassification& cycles);
nlohmann::ordered_json invariant_subgraph_to_json(const SimplicialGraph& g,
                                                  const InvariantSubgraphResult& result);
nlohmann::ordered_json growth_to_json(const SimplicialGraph& g, const GrowthReport& growth);

// CLI entry point; args exclude the program name. Exit codes: 0 success,
// 1 usage error, 2 parse/validation error, 3 dichotomy violation.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace raagdyn
