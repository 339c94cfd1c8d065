#include "raagdyn/io.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "raagdyn/errors.hpp"

namespace raagdyn {

namespace {

using nlohmann::ordered_json;

std::vector<Word> parse_image_map(const SimplicialGraph& g, const nlohmann::json& object,
                                  const char* what) {
    if (!object.is_object())
        throw ParseError(std::string(what) + " must be an object mapping vertices to words");
    std::vector<std::optional<Word>> images(g.vertex_count());
    for (const auto& [key, value] : object.items()) {
        const VertexId v = g.require_vertex(key);
        if (!value.is_string())
            throw ParseError(std::string(what) + " for '" + key + "' must be a word string");
        images[v] = parse_word(g, value.get<std::string>());
    }
    std::vector<Word> out;
    out.reserve(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!images[v])
            throw ParseError(std::string(what) + " is missing vertex '" + g.vertex_name(v) + "'");
        out.push_back(std::move(*images[v]));
    }
    return out;
}

LSGenerator parse_generator(const SimplicialGraph& g, const nlohmann::json& object) {
    if (!object.is_object() || !object.contains("type") || !object["type"].is_string())
        throw ParseError("each generator descriptor needs a string 'type' field");
    const std::string type = object["type"].get<std::string>();

    auto vertex_field = [&](const char* field) {
        if (!object.contains(field) || !object[field].is_string())
            throw ParseError("generator '" + type + "' needs a string field '" + field + "'");
        return g.require_vertex(object[field].get<std::string>());
    };

    if (type == "inversion")
        return Inversion{vertex_field("v")};
    if (type == "transvection")
        return Transvection{vertex_field("v"), vertex_field("w")};
    if (type == "partial_conjugation") {
        if (!object.contains("component") || !object["component"].is_array())
            throw ParseError("partial_conjugation needs an array field 'component'");
        VertexSet component;
        for (const auto& name : object["component"]) {
            if (!name.is_string())
                throw ParseError("partial_conjugation component entries must be vertex names");
            component.push_back(g.require_vertex(name.get<std::string>()));
        }
        return PartialConjugation{set_sorted_unique(component), vertex_field("w")};
    }
    if (type == "graph_symmetry") {
        if (!object.contains("perm") || !object["perm"].is_object())
            throw ParseError("graph_symmetry needs an object field 'perm'");
        std::vector<VertexId> perm(g.vertex_count(), VertexId(g.vertex_count()));
        for (const auto& [key, value] : object["perm"].items()) {
            if (!value.is_string())
                throw ParseError("graph_symmetry perm values must be vertex names");
            perm[g.require_vertex(key)] = g.require_vertex(value.get<std::string>());
        }
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (perm[v] >= g.vertex_count())
                throw ParseError("graph_symmetry perm is missing vertex '" + g.vertex_name(v) + "'");
        return GraphSymmetry{std::move(perm)};
    }
    throw ParseError("unknown generator type '" + type + "'");
}

ordered_json names_json(const SimplicialGraph& g, const VertexSet& s) {
    ordered_json arr = ordered_json::array();
    for (VertexId v : s)
        arr.push_back(g.vertex_name(v));
    return arr;
}



const char* kind_name(CycleKind kind) {
    switch (kind) {
    case CycleKind::Complete: return "complete";
    case CycleKind::Empty: return "empty";
    default: return "violation";
    }
}




std::string format_set(const SimplicialGraph& g, const VertexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += ",";
        out += g.vertex_name(s[i]);
    }
    return out + "}";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void print_verification(std::ostream& out, const SimplicialGraph& g, const AnalysisReport& report) {
    out << "graph: " << g.vertex_count() << " vertices, " << g.edges().size() << " edges\n";
    out << "relations: ok\n";
    out << "automorphism: " << (report.verified_automorphism ? "verified" : "unverified-inverse")
        << "\n";
    out << "positive: " << (report.positive ? "true" : "false") << "\n";
    out << "pure: " << (report.purity.pure ? "true" : "false") << "\n";
    out << "  support-ok:";
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        out << " " << g.vertex_name(v) << "=" << (report.purity.support_ok[v] ? "true" : "false");
    out << "\n  cyclically-reduced:";
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        out << " " << g.vertex_name(v) << "="
            << (report.purity.cyclically_reduced_ok[v] ? "true" : "false");
    out << "\nsquare: " << (report.square.square ? "true" : "false") << "\n";
    if (report.square.witness) {
        out << "  witness: edge {" << g.vertex_name(report.square.witness->edge_u) << ","
            << g.vertex_name(report.square.witness->edge_v) << "} pair ("
            << g.vertex_name(report.square.witness->support_u) << ","
            << g.vertex_name(report.square.witness->support_v) << ")\n";
    }
}

void print_diagram(std::ostream& out, const SimplicialGraph& g, const AutomorphismDiagram& diagram,
                   const std::vector<VertexSet>& comps,
                   const std::optional<TerminalPartition>& terminal,
                   const CycleClassification& cycles) {
    out << "arcs:";
    for (const auto& [u, v] : diagram.graph.arcs())
        out << " " << g.vertex_name(u) << "->" << g.vertex_name(v);
    out << "\ncomponents:";
    for (const auto& comp : comps)
        out << " " << format_set(g, comp);
    out << "\n";
    if (terminal) {
        out << "terminal-partition: height " << terminal->height();
        for (std::size_t i = 0; i < terminal->layers.size(); ++i)
            out << " T" << i << "=" << format_set(g, terminal->layers[i]);
        out << "\n";
    }
    if (cycles.sccs.empty()) {
        out << "cycles: none\n";
    } else {
        out << "cycles:\n";
        for (const auto& scc : cycles.sccs)
            out << "  " << format_set(g, scc.vertices) << ": " << kind_name(scc.kind) << "\n";
    }
}

void print_growth(std::ostream& out, const SimplicialGraph& g, const GrowthReport& growth) {
    out << "growth: ";
    switch (growth.kind) {
    case GrowthKind::PolynomialByTheorem:
        out << "polynomial-by-theorem degree-bound " << *growth.degree_bound;
        break;
    case GrowthKind::PerGeneratorMixed:
        out << "per-generator-mixed";
        break;
    default:
        out << "inconclusive";
    }
    out << "\n";
    if (growth.estimates) {
        out << "lambda-hat: " << std::setprecision(6) << growth.estimates->lambda_phi_hat
            << " (argmax " << g.vertex_name(growth.estimates->argmax_generator) << ")\n";
    }
    for (const auto& entry : growth.per_generator) {
        out << "  " << g.vertex_name(entry.generator) << ": "
            << (entry.downset_acyclic ? "polynomial" : "cyclic") << " lambda-hat "
            << std::setprecision(6) << entry.lambda_hat;
        if (entry.degree_bound)
            out << " degree-bound " << *entry.degree_bound;
        if (entry.fit)
            out << " degree-hat " << std::setprecision(4) << entry.fit->degree_hat;
        out << "\n";
    }
    if (growth.invariant_subgraph) {
        const auto& inv = *growth.invariant_subgraph;
        out << "invariant-subgraph: delta " << format_set(g, inv.delta) << " case "
            << (inv.kind == SubgraphCase::Complete ? "complete"
                : inv.kind == SubgraphCase::EmptyCore ? "empty-core"
                                                      : "acyclic");
        if (inv.kind == SubgraphCase::EmptyCore)
            out << " core " << format_set(g, inv.empty_core);
        out << "\n";
    }
    for (const auto& warning : growth.warnings)
        out << "warning: " << warning << "\n";
}

void print_report_block(std::ostream& out, const ordered_json& json) {
    out << "#BEGIN-REPORT\n" << json.dump(2) << "\n#END-REPORT\n";
}

} // namespace

ordered_json purity_to_json(const SimplicialGraph& g, const PurityReport& purity) {
    ordered_json support = ordered_json::object(), cyclic = ordered_json::object();
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        support[g.vertex_name(v)] = bool(purity.support_ok[v]);
        cyclic[g.vertex_name(v)] = bool(purity.cyclically_reduced_ok[v]);
    }
    return {{"pure", purity.pure}, {"support_ok", support}, {"cyclically_reduced_ok", cyclic}};
}

ordered_json square_to_json(const SimplicialGraph& g, const SquareReport& square) {
    ordered_json out{{"square", square.square}};
    if (square.witness) {
        out["witness"] = {
            {"edge", {g.vertex_name(square.witness->edge_u), g.vertex_name(square.witness->edge_v)}},
            {"pair",
             {g.vertex_name(square.witness->support_u), g.vertex_name(square.witness->support_v)}}};
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

ordered_json cycle_classification_to_json(const SimplicialGraph& g, const CycleClassification& cycles) {
    ordered_json arr = ordered_json::array();
    for (const auto& scc : cycles.sccs) {
        ordered_json entry{{"vertices", names_json(g, scc.vertices)}, {"kind", kind_name(scc.kind)}};
        if (scc.commuting_pair)
            entry["commuting_pair"] = {g.vertex_name(scc.commuting_pair->first),
                                       g.vertex_name(scc.commuting_pair->second)};
        if (scc.noncommuting_pair)
            entry["noncommuting_pair"] = {g.vertex_name(scc.noncommuting_pair->first),
                                          g.vertex_name(scc.noncommuting_pair->second)};
        arr.push_back(std::move(entry));
    }
    return arr;
}

ordered_json invariant_subgraph_to_json(const SimplicialGraph& g, const InvariantSubgraphResult& result) {
    const char* kind = result.kind == SubgraphCase::Complete ? "complete"
                       : result.kind == SubgraphCase::EmptyCore ? "empty-core"
                                                                : "acyclic";
    ordered_json out{{"starting", g.vertex_name(result.starting)},
                     {"down_set", names_json(g, result.down)},
                     {"trimmed", names_json(g, result.trimmed)},
                     {"delta", names_json(g, result.delta)},
                     {"case", kind}};
    if (result.kind == SubgraphCase::EmptyCore)
        out["empty_core"] = names_json(g, result.empty_core);
    return out;
}

ordered_json growth_to_json(const SimplicialGraph& g, const GrowthReport& growth) {
    const char* kind = growth.kind == GrowthKind::PolynomialByTheorem ? "polynomial-by-theorem"
                       : growth.kind == GrowthKind::PerGeneratorMixed ? "per-generator-mixed"
                                                                      : "inconclusive";
    ordered_json out{{"classification", kind}};
    if (growth.degree_bound)
        out["degree_bound"] = *growth.degree_bound;
    if (growth.estimates) {
        out["lambda_hat"] = growth.estimates->lambda_phi_hat;
        out["argmax_generator"] = g.vertex_name(growth.estimates->argmax_generator);
    }
    ordered_json per = ordered_json::object();
    for (const auto& entry : growth.per_generator) {
        ordered_json item{{"downset_acyclic", entry.downset_acyclic},
                          {"lambda_hat", entry.lambda_hat}};
        if (entry.degree_bound)
            item["degree_bound"] = *entry.degree_bound;
        if (entry.fit) {
            item["degree_hat"] = entry.fit->degree_hat;
            item["fit_residual"] = entry.fit->residual;
        }
        const auto& orbit = growth.orbits[entry.generator];
        item["lengths"] = orbit.lengths;
        item["truncated"] = orbit.truncated;
        if (growth.estimates) {
            const auto& pg = growth.estimates->per_generator[entry.generator];
            item["window"] = {pg.window_begin, pg.window_end};
        }
        per[g.vertex_name(entry.generator)] = std::move(item);
    }
    out["per_generator"] = std::move(per);
    out["invariant_subgraph"] =
        growth.invariant_subgraph ? invariant_subgraph_to_json(g, *growth.invariant_subgraph) : ordered_json();
    out["warnings"] = growth.warnings;
    return out;
}

Automorphism SpecFile::build() const {
    if (const auto* raw = std::get_if<RawImages>(&source))
        return Automorphism::from_images(graph, raw->images, raw->inverse_images);
    return Automorphism::from_generators(graph, std::get<std::vector<LSGenerator>>(source));
}

SpecFile parse_spec(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("graph") || !doc.contains("automorphism"))
        throw ParseError("spec must be an object with 'graph' and 'automorphism' fields");

    const auto& graph_doc = doc["graph"];
    if (!graph_doc.is_object() || !graph_doc.contains("vertices") ||
        !graph_doc["vertices"].is_array())
        throw ParseError("'graph' needs a 'vertices' array");
    std::vector<std::string> vertices;
    for (const auto& v : graph_doc["vertices"]) {
        if (!v.is_string())
            throw ParseError("vertex names must be strings");
        vertices.push_back(v.get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> edges;
    if (graph_doc.contains("edges")) {
        if (!graph_doc["edges"].is_array())
            throw ParseError("'edges' must be an array of vertex pairs");
        for (const auto& e : graph_doc["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
                throw ParseError("each edge must be a pair of vertex names");
            edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
        }
    }
    SimplicialGraph graph(std::move(vertices), edges);

    const auto& auto_doc = doc["automorphism"];
    if (!auto_doc.is_object())
        throw ParseError("'automorphism' must be an object");
    if (auto_doc.contains("images")) {
        SpecFile::RawImages raw;
        raw.images = parse_image_map(graph, auto_doc["images"], "images");
        if (auto_doc.contains("inverse_images"))
            raw.inverse_images = parse_image_map(graph, auto_doc["inverse_images"], "inverse_images");
        return SpecFile{std::move(graph), std::move(raw)};
    }
    if (auto_doc.contains("generators")) {
        if (!auto_doc["generators"].is_array())
            throw ParseError("'generators' must be an array");
        std::vector<LSGenerator> generators;
        for (const auto& entry : auto_doc["generators"])
            generators.push_back(parse_generator(graph, entry));
        return SpecFile{std::move(graph), std::move(generators)};
    }
    throw ParseError("'automorphism' needs either 'images' or 'generators'");
}

nlohmann::ordered_json spec_to_json(const SpecFile& spec) {
    const auto& g = spec.graph;
    ordered_json edges = ordered_json::array();
    for (const auto& [u, v] : g.edges())
        edges.push_back({g.vertex_name(u), g.vertex_name(v)});
    ordered_json out{{"graph", {{"vertices", g.vertex_names()}, {"edges", edges}}}};

    if (const auto* raw = std::get_if<SpecFile::RawImages>(&spec.source)) {
        ordered_json images = ordered_json::object();
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            images[g.vertex_name(v)] = format_word(g, raw->images[v]);
        out["automorphism"] = {{"images", images}};
        if (raw->inverse_images) {
            ordered_json inverses = ordered_json::object();
            for (VertexId v = 0; v < g.vertex_count(); ++v)
                inverses[g.vertex_name(v)] = format_word(g, (*raw->inverse_images)[v]);
            out["automorphism"]["inverse_images"] = inverses;
        }
        return out;
    }

    ordered_json generators = ordered_json::array();
    for (const auto& generator : std::get<std::vector<LSGenerator>>(spec.source)) {
        if (const auto* inv = std::get_if<Inversion>(&generator)) {
            generators.push_back({{"type", "inversion"}, {"v", g.vertex_name(inv->v)}});
        } else if (const auto* sym = std::get_if<GraphSymmetry>(&generator)) {
            ordered_json perm = ordered_json::object();
            for (VertexId v = 0; v < g.vertex_count(); ++v)
                perm[g.vertex_name(v)] = g.vertex_name(sym->perm[v]);
            generators.push_back({{"type", "graph_symmetry"}, {"perm", perm}});
        } else if (const auto* tv = std::get_if<Transvection>(&generator)) {
            generators.push_back({{"type", "transvection"},
                                  {"v", g.vertex_name(tv->v)},
                                  {"w", g.vertex_name(tv->w)}});
        } else {
            const auto& pc = std::get<PartialConjugation>(generator);
            generators.push_back({{"type", "partial_conjugation"},
                                  {"component", names_json(g, pc.component)},
                                  {"w", g.vertex_name(pc.w)}});
        }
    }
    out["automorphism"] = {{"generators", generators}};
    return out;
}

std::string serialize_spec(const SpecFile& spec) { return spec_to_json(spec).dump(2); }

std::string export_dot(const SimplicialGraph& g, const AutomorphismDiagram& d,
                       const CycleClassification& cycles) {
    std::vector<CycleKind> node_kind(g.vertex_count(), CycleKind::Violation);
    std::vector<std::uint8_t> in_scc(g.vertex_count(), 0);
    for (const auto& scc : cycles.sccs) {
        for (VertexId v : scc.vertices) {
            in_scc[v] = 1;
            node_kind[v] = scc.kind;
        }
    }
    std::string out = "digraph diagram {\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        out += "  \"" + g.vertex_name(v) + "\"";
        if (in_scc[v] && node_kind[v] == CycleKind::Complete)
            out += " [shape=box]";
        else if (in_scc[v] && node_kind[v] == CycleKind::Empty)
            out += " [shape=ellipse,peripheries=2]";
        out += ";\n";
    }
    for (const auto& [u, v] : d.graph.arcs())
        out += "  \"" + g.vertex_name(u) + "\" -> \"" + g.vertex_name(v) + "\";\n";
    out += "}\n";
    return out;
}

AnalysisReport analyze(const SpecFile& spec, const AnalyzeOptions& options) {
    Automorphism phi = spec.build();
    std::optional<std::uint64_t> exponent;
    if (options.pure_power_first) {
        auto pp = pure_power(phi, options.pure_power_cap);
        exponent = pp.exponent;
        phi = std::move(pp.power);
    }

    AnalysisReport report{spec,
                          phi.verified(),
                          is_positive(phi),
                          is_pure(phi),
                          is_square(phi),
                          exponent,
                          build_diagram(phi),
                          {},
                          std::nullopt,
                          {},
                          {}};
    report.diagram_components = components(report.diagram);
    report.cycles = cycle_analysis(spec.graph, report.diagram);
    if (report.cycles.sccs.empty())
        report.terminal = terminal_partition(report.diagram);
    report.growth = classify_growth(spec.graph, phi, options.k_max, options.length_cap);
    return report;
}

nlohmann::ordered_json report_to_json(const AnalysisReport& report) {
    const auto& g = report.input.graph;
    ordered_json out{{"input", spec_to_json(report.input)}};
    out["verification"] = {{"relations", true},
                           {"automorphism", report.verified_automorphism},
                           {"positive", report.positive},
                           {"pure", purity_to_json(g, report.purity)},
                           {"square", square_to_json(g, report.square)}};
    out["pure_power"] =
        report.pure_power_exponent ? ordered_json(*report.pure_power_exponent) : ordered_json();
    ordered_json arcs = ordered_json::array();
    for (const auto& [u, v] : report.diagram.graph.arcs())
        arcs.push_back({g.vertex_name(u), g.vertex_name(v)});
    ordered_json comps = ordered_json::array();
    for (const auto& comp : report.diagram_components)
        comps.push_back(names_json(g, comp));
    out["diagram"] = {{"arcs", arcs}, {"components", comps}};
    if (report.terminal) {
        ordered_json layers = ordered_json::array();
        for (const auto& layer : report.terminal->layers)
            layers.push_back(names_json(g, layer));
        out["terminal_partition"] = {{"layers", layers}, {"height", report.terminal->height()}};
    } else {
        out["terminal_partition"] = nullptr;
    }
    out["cycle_classification"] = cycle_classification_to_json(g, report.cycles);
    out["growth"] = growth_to_json(g, report.growth);
    return out;
}

namespace {

int run_check(const std::string& path, std::ostream& out) {
    const SpecFile spec = parse_spec(read_file(path));
    Automorphism phi = spec.build();
    AnalysisReport report{spec,
                          phi.verified(),
                          is_positive(phi),
                          is_pure(phi),
                          is_square(phi),
                          std::nullopt,
                          build_diagram(phi),
                          {},
                          std::nullopt,
                          {},
                          {}};
    print_verification(out, spec.graph, report);
    ordered_json json{{"input", spec_to_json(spec)},
                      {"verification",
                       {{"relations", true},
                        {"automorphism", report.verified_automorphism},
                        {"positive", report.positive},
                        {"pure", purity_to_json(spec.graph, report.purity)},
                        {"square", square_to_json(spec.graph, report.square)}}}};
    print_report_block(out, json);
    return 0;
}

int run_reduce(const std::string& path, const std::string& word_text, std::ostream& out) {
    const SpecFile spec = parse_spec(read_file(path));
    const auto& g = spec.graph;
    const Word word = parse_word(g, word_text);
    const Word reduced = reduce(g, word);
    const CyclicForm cyclic = cyclically_reduce(g, reduced);
    const SupportLength sl = support_and_length(g, reduced);

    out << "word: " << word_text << "\n";
    out << "reduced: " << format_word(g, reduced) << " (length " << reduced.size() << ")\n";
    out << "support: " << format_set(g, sl.support) << "\n";
    out << "cyclic-core: " << format_word(g, cyclic.core) << " (length " << cyclic.core.size()
        << ")\n";
    out << "conjugator: " << format_word(g, cyclic.conjugator) << "\n";
    ordered_json json{{"word", word_text},
                      {"reduced", format_word(g, reduced)},
                      {"length", reduced.size()},
                      {"support", names_json(g, sl.support)},
                      {"cyclic_core", format_word(g, cyclic.core)},
                      {"conjugator", format_word(g, cyclic.conjugator)}};
    print_report_block(out, json);
    return 0;
}

int run_diagram(const std::string& path, const std::string& dot_path, std::ostream& out) {
    const SpecFile spec = parse_spec(read_file(path));
    const Automorphism phi = spec.build();
    const AutomorphismDiagram diagram = build_diagram(phi);
    const auto comps = components(diagram);
    const CycleClassification cycles = cycle_analysis(spec.graph, diagram);

    std::optional<TerminalPartition> terminal;
    if (cycles.sccs.empty())
        terminal = terminal_partition(diagram);
    print_diagram(out, spec.graph, diagram, comps, terminal, cycles);

    if (!dot_path.empty()) {
        std::ofstream dot(dot_path, std::ios::binary);
        if (!dot)
            throw ParseError("cannot write DOT file '" + dot_path + "'");
        dot << export_dot(spec.graph, diagram, cycles);
        out << "dot: written to " << dot_path << "\n";
    }

    ordered_json arcs = ordered_json::array();
    for (const auto& [u, v] : diagram.graph.arcs())
        arcs.push_back({spec.graph.vertex_name(u), spec.graph.vertex_name(v)});
    ordered_json comp_json = ordered_json::array();
    for (const auto& comp : comps)
        comp_json.push_back(names_json(spec.graph, comp));
    ordered_json json{{"input", spec_to_json(spec)},
                      {"diagram", {{"arcs", arcs}, {"components", comp_json}}},
                      {"cycle_classification", cycle_classification_to_json(spec.graph, cycles)}};
    print_report_block(out, json);
    return cycles.has_violation() ? 3 : 0;
}

int run_analyze(const std::string& path, const AnalyzeOptions& options, std::ostream& out) {
    const SpecFile spec = parse_spec(read_file(path));
    const AnalysisReport report = analyze(spec, options);
    print_verification(out, spec.graph, report);
    if (report.pure_power_exponent)
        out << "pure-power: " << *report.pure_power_exponent << "\n";
    print_diagram(out, spec.graph, report.diagram, report.diagram_components, report.terminal,
                  report.cycles);
    print_growth(out, spec.graph, report.growth);
    print_report_block(out, report_to_json(report));
    return report.cycles.has_violation() ? 3 : 0;
}

int run_dilatation(const std::string& path, std::size_t k_max, std::uint64_t cap,
                   std::ostream& out) {
    const SpecFile spec = parse_spec(read_file(path));
    const auto& g = spec.graph;
    const Automorphism phi = spec.build();
    const auto orbits = iterate_lengths(phi, k_max, cap);
    const DilatationEstimate est = estimate_dilatation(orbits);

    out << "generator lambda-hat lengths\n";
    ordered_json orbit_json = ordered_json::object();
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        out << g.vertex_name(s) << " " << std::setprecision(6) << est.per_generator[s].lambda_hat
            << " ";
        for (std::size_t k = 0; k < orbits[s].lengths.size(); ++k)
            out << (k ? "," : "") << orbits[s].lengths[k];
        if (orbits[s].truncated)
            out << " (truncated)";
        out << "\n";
        orbit_json[g.vertex_name(s)] = {
            {"lengths", orbits[s].lengths},
            {"truncated", orbits[s].truncated},
            {"lambda_hat", est.per_generator[s].lambda_hat},
            {"window", {est.per_generator[s].window_begin, est.per_generator[s].window_end}}};
    }
    out << "lambda-hat: " << std::setprecision(6) << est.lambda_phi_hat << " (argmax "
        << g.vertex_name(est.argmax_generator) << ")\n";
    ordered_json json{{"input", spec_to_json(spec)},
                      {"orbits", orbit_json},
                      {"lambda_hat", est.lambda_phi_hat},
                      {"argmax_generator", g.vertex_name(est.argmax_generator)}};
    print_report_block(out, json);
    return 0;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"growth analysis of right-angled Artin group automorphisms", "raagdyn"};
    app.require_subcommand(1);

    std::string file, word_text, dot_path;
    AnalyzeOptions options;
    std::size_t k_max = kDefaultKMax;
    std::uint64_t cap = kDefaultLengthCap;

    auto* check = app.add_subcommand("check", "verify relations and classify the map");
    check->add_option("file", file, "input spec (JSON)")->required();

    auto* reduce_cmd = app.add_subcommand("reduce", "reduce a word over the input file's graph");
    reduce_cmd->add_option("file", file, "input spec (JSON)")->required();
    reduce_cmd->add_option("--word", word_text, "word in token grammar")->required();

    auto* diagram_cmd = app.add_subcommand("diagram", "print the automorphism diagram");
    diagram_cmd->add_option("file", file, "input spec (JSON)")->required();
    diagram_cmd->add_option("--dot", dot_path, "write DOT output to this path");

    auto* analyze_cmd = app.add_subcommand("analyze", "full growth analysis");
    analyze_cmd->add_option("file", file, "input spec (JSON)")->required();
    analyze_cmd->add_option("--kmax", k_max, "iteration count");
    analyze_cmd->add_option("--cap", cap, "orbit length cap");
    analyze_cmd->add_flag("--pure-power", options.pure_power_first,
                          "replace the map by its pure power first");

    auto* dilatation_cmd = app.add_subcommand("dilatation", "per-generator growth table");
    dilatation_cmd->add_option("file", file, "input spec (JSON)")->required();
    dilatation_cmd->add_option("--kmax", k_max, "iteration count")->required();
    dilatation_cmd->add_option("--cap", cap, "orbit length cap");

    std::vector<const char*> argv{"raagdyn"};
    for (const auto& arg : args)
        argv.push_back(arg.c_str());

    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (app.got_subcommand(check))
            return run_check(file, out);
        if (app.got_subcommand(reduce_cmd))
            return run_reduce(file, word_text, out);
        if (app.got_subcommand(diagram_cmd))
            return run_diagram(file, dot_path, out);
        if (app.got_subcommand(analyze_cmd)) {
            options.k_max = k_max;
            options.length_cap = cap;
            return run_analyze(file, options, out);
        }
        options.k_max = k_max;
        options.length_cap = cap;
        return run_dilatation(file, k_max, cap, out);
    } catch (const ViolationError& e) {
        err << "violation: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace raagdyn
