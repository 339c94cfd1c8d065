#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "raagdyn/errors.hpp"
#include "raagdyn/io.hpp"

namespace py = pybind11;
using namespace raagdyn;

namespace {

py::object json_to_py(const nlohmann::ordered_json& value) {
    using nlohmann::ordered_json;
    switch (value.type()) {
    case ordered_json::value_t::null:
        return py::none();
    case ordered_json::value_t::boolean:
        return py::bool_(value.get<bool>());
    case ordered_json::value_t::number_integer:
        return py::int_(value.get<std::int64_t>());
    case ordered_json::value_t::number_unsigned:
        return py::int_(value.get<std::uint64_t>());
    case ordered_json::value_t::number_float:
        return py::float_(value.get<double>());
    case ordered_json::value_t::string:
        return py::str(value.get<std::string>());
    case ordered_json::value_t::array: {
        py::list list;
        for (const auto& item : value)
            list.append(json_to_py(item));
        return list;
    }
    default: {
        py::dict dict;
        for (const auto& [key, item] : value.items())
            dict[py::str(key)] = json_to_py(item);
        return dict;
    }
    }
}

VertexSet names_to_set(const SimplicialGraph& g, const std::vector<std::string>& names) {
    return vertices_from_names(g, names);
}

std::vector<Word> images_from_dict(const SimplicialGraph& g,
                                   const std::map<std::string, std::string>& images) {
    std::vector<std::optional<Word>> slots(g.vertex_count());
    for (const auto& [name, text] : images)
        slots[g.require_vertex(name)] = parse_word(g, text);
    std::vector<Word> out;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!slots[v])
            throw ValidationError("missing image for vertex '" + g.vertex_name(v) + "'");
        out.push_back(std::move(*slots[v]));
    }
    return out;
}

LSGenerator generator_from_dict(const SimplicialGraph& g, const py::dict& entry) {
    const std::string type = entry["type"].cast<std::string>();
    if (type == "inversion")
        return Inversion{g.require_vertex(entry["v"].cast<std::string>())};
    if (type == "transvection")
        return Transvection{g.require_vertex(entry["v"].cast<std::string>()),
                            g.require_vertex(entry["w"].cast<std::string>())};
    if (type == "partial_conjugation") {
        VertexSet component;
        for (const auto& name : entry["component"].cast<std::vector<std::string>>())
            component.push_back(g.require_vertex(name));
        return PartialConjugation{set_sorted_unique(component),
                                  g.require_vertex(entry["w"].cast<std::string>())};
    }
    if (type == "graph_symmetry") {
        std::vector<VertexId> perm(g.vertex_count(), VertexId(g.vertex_count()));
        for (const auto& [key, value] : entry["perm"].cast<std::map<std::string, std::string>>())
            perm[g.require_vertex(key)] = g.require_vertex(value);
        return GraphSymmetry{std::move(perm)};
    }
    throw ValidationError("unknown generator type '" + type + "'");
}

std::string kind_string(InducedKind kind) {
    switch (kind) {
    case InducedKind::Complete: return "complete";
    case InducedKind::Empty: return "empty";
    default: return "mixed";
    }
}

py::dict orbit_dict(const SimplicialGraph& g, const std::vector<OrbitLengths>& orbits) {
    py::dict out;
    for (const auto& orbit : orbits) {
        py::dict entry;
        entry["lengths"] = orbit.lengths;
        entry["truncated"] = orbit.truncated;
        out[py::str(g.vertex_name(orbit.generator))] = entry;
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "growth dynamics of right-angled Artin group automorphisms";
#ifdef RAAGDYN_VERSION
    m.attr("__version__") = RAAGDYN_VERSION;
#else
    m.attr("__version__") = "dev";
#endif

    py::register_exception<ViolationError>(m, "ViolationError", PyExc_RuntimeError);
    py::register_exception<CycleError>(m, "CycleError", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

    py::class_<SimplicialGraph>(m, "SimplicialGraph")
        .def(py::init<std::vector<std::string>,
                      const std::vector<std::pair<std::string, std::string>>&>(),
             py::arg("vertices"), py::arg("edges") = std::vector<std::pair<std::string, std::string>>{})
        .def_property_readonly("vertices", &SimplicialGraph::vertex_names)
        .def_property_readonly("edges",
                               [](const SimplicialGraph& g) {
                                   std::vector<std::pair<std::string, std::string>> out;
                                   for (const auto& [u, v] : g.edges())
                                       out.emplace_back(g.vertex_name(u), g.vertex_name(v));
                                   return out;
                               })
        .def("adjacent",
             [](const SimplicialGraph& g, const std::string& u, const std::string& v) {
                 return g.adjacent(g.require_vertex(u), g.require_vertex(v));
             })
        .def("induced_subgraph",
             [](const SimplicialGraph& g, const std::vector<std::string>& names) {
                 return induced_subgraph(g, names_to_set(g, names));
             })
        .def("complement",
             [](const SimplicialGraph& g) { return complement_analysis(g).complement; })
        .def("neighborhood",
             [](const SimplicialGraph& g, const std::string& v) {
                 const auto nb = neighborhood(g, g.require_vertex(v));
                 return py::make_tuple(names_of(g, nb.link), names_of(g, nb.star));
             })
        .def("complement_analysis",
             [](const SimplicialGraph& g) {
                 const auto analysis = complement_analysis(g);
                 py::dict out;
                 out["is_join"] = analysis.is_join;
                 if (analysis.join_parts)
                     out["join_parts"] = py::make_tuple(names_of(g, analysis.join_parts->first),
                                                        names_of(g, analysis.join_parts->second));
                 else
                     out["join_parts"] = py::none();
                 return out;
             })
        .def("classify_induced",
             [](const SimplicialGraph& g, const std::vector<std::string>& names) {
                 return kind_string(classify_induced(g, names_to_set(g, names)));
             })
        .def("supports_commute",
             [](const SimplicialGraph& g, const std::vector<std::string>& s1,
                const std::vector<std::string>& s2) {
                 return supports_commute(g, names_to_set(g, s1), names_to_set(g, s2));
             })
        .def("__eq__", [](const SimplicialGraph& a, const SimplicialGraph& b) { return a == b; })
        .def("__repr__", [](const SimplicialGraph& g) {
            return "SimplicialGraph(" + std::to_string(g.vertex_count()) + " vertices, " +
                   std::to_string(g.edges().size()) + " edges)";
        });

    // word operations work on token strings relative to a graph
    m.def("reduce_word", [](const SimplicialGraph& g, const std::string& w) {
        return format_word(g, reduce(g, parse_word(g, w)));
    });
    m.def("cyclically_reduce", [](const SimplicialGraph& g, const std::string& w) {
        const auto form = cyclically_reduce(g, parse_word(g, w));
        return py::make_tuple(format_word(g, form.core), format_word(g, form.conjugator));
    });
    m.def("support_and_length", [](const SimplicialGraph& g, const std::string& w) {
        const auto sl = support_and_length(g, parse_word(g, w));
        return py::make_tuple(names_of(g, sl.support), sl.length);
    });
    m.def("words_equal", [](const SimplicialGraph& g, const std::string& a, const std::string& b) {
        return words_equal(g, parse_word(g, a), parse_word(g, b));
    });
    m.def("canonical_form", [](const SimplicialGraph& g, const std::string& w) {
        return format_word(g, canonical_form(g, parse_word(g, w)));
    });

    py::class_<Automorphism>(m, "Automorphism")
        .def_static(
            "from_images",
            [](const SimplicialGraph& g, const std::map<std::string, std::string>& images,
               const std::optional<std::map<std::string, std::string>>& inverse_images) {
                std::optional<std::vector<Word>> inverses;
                if (inverse_images)
                    inverses = images_from_dict(g, *inverse_images);
                return Automorphism::from_images(g, images_from_dict(g, images),
                                                 std::move(inverses));
            },
            py::arg("graph"), py::arg("images"), py::arg("inverse_images") = py::none())
        .def_static(
            "from_generators",
            [](const SimplicialGraph& g, const std::vector<py::dict>& generators) {
                std::vector<LSGenerator> parsed;
                parsed.reserve(generators.size());
                for (const auto& entry : generators)
                    parsed.push_back(generator_from_dict(g, entry));
                return Automorphism::from_generators(g, std::move(parsed));
            },
            py::arg("graph"), py::arg("generators"))
        .def_static("identity", &Automorphism::identity)
        .def_property_readonly("graph", &Automorphism::graph,
                               py::return_value_policy::reference_internal)
        .def_property_readonly("images",
                               [](const Automorphism& phi) {
                                   py::dict out;
                                   const auto& g = phi.graph();
                                   for (VertexId v = 0; v < g.vertex_count(); ++v)
                                       out[py::str(g.vertex_name(v))] =
                                           format_word(g, phi.image(v));
                                   return out;
                               })
        .def_property_readonly("verified", &Automorphism::verified)
        .def("apply",
             [](const Automorphism& phi, const std::string& w) {
                 return format_word(phi.graph(), phi.apply(parse_word(phi.graph(), w)));
             })
        .def("apply_inverse",
             [](const Automorphism& phi, const std::string& w) {
                 return format_word(phi.graph(), phi.apply_inverse(parse_word(phi.graph(), w)));
             })
        .def("compose", &Automorphism::compose)
        .def("power", &Automorphism::power)
        .def("conjugate_by",
             [](const Automorphism& phi, const std::string& g) {
                 return phi.conjugate_by(parse_word(phi.graph(), g));
             })
        .def("inverse", &Automorphism::inverse)
        .def("__repr__", [](const Automorphism& phi) {
            return "Automorphism(on " + std::to_string(phi.graph().vertex_count()) +
                   " generators)";
        });

    m.def("is_positive", &is_positive);
    m.def("is_pure", [](const Automorphism& phi) {
        return json_to_py(purity_to_json(phi.graph(), is_pure(phi)));
    });
    m.def("is_square", [](const Automorphism& phi) {
        return json_to_py(square_to_json(phi.graph(), is_square(phi)));
    });
    m.def("mod2_matrix", [](const Automorphism& phi) {
        const auto matrix = mod2_matrix(phi);
        std::vector<std::vector<int>> rows(matrix.size(), std::vector<int>(matrix.size(), 0));
        for (std::size_t i = 0; i < matrix.size(); ++i)
            for (std::size_t j = 0; j < matrix.size(); ++j)
                rows[i][j] = matrix.get(i, j) ? 1 : 0;
        return rows;
    });
    m.def(
        "pure_power",
        [](const Automorphism& phi, std::uint64_t max_exponent) {
            auto result = pure_power(phi, max_exponent);
            return py::make_tuple(result.exponent,
                                  json_to_py(purity_to_json(phi.graph(), result.purity)),
                                  std::move(result.power));
        },
        py::arg("phi"), py::arg("max_exponent") = std::uint64_t(1) << 20);

    // diagram layer: functions build the diagram from the map on demand
    m.def("diagram_arcs", [](const Automorphism& phi) {
        const auto d = build_diagram(phi);
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& [u, v] : d.graph.arcs())
            out.emplace_back(phi.graph().vertex_name(u), phi.graph().vertex_name(v));
        return out;
    });
    m.def("down_set", [](const Automorphism& phi, const std::string& s) {
        const auto d = build_diagram(phi);
        return names_of(phi.graph(), down_set(d, phi.graph().require_vertex(s)));
    });
    m.def("trim", [](const Automorphism& phi, const std::vector<std::string>& names) {
        const auto d = build_diagram(phi);
        return names_of(phi.graph(), trim(d, names_to_set(phi.graph(), names)));
    });
    m.def("terminal_partition", [](const Automorphism& phi) {
        const auto partition = terminal_partition(build_diagram(phi));
        std::vector<std::vector<std::string>> layers;
        for (const auto& layer : partition.layers)
            layers.push_back(names_of(phi.graph(), layer));
        return layers;
    });
    m.def("diagram_components", [](const Automorphism& phi) {
        std::vector<std::vector<std::string>> out;
        for (const auto& comp : components(build_diagram(phi)))
            out.push_back(names_of(phi.graph(), comp));
        return out;
    });
    m.def("cycle_analysis", [](const Automorphism& phi) {
        const auto cycles = cycle_analysis(phi.graph(), build_diagram(phi));
        return json_to_py(cycle_classification_to_json(phi.graph(), cycles));
    });
    m.def("decompose_image", [](const Automorphism& phi, const std::string& s) -> py::object {
        const auto partition = terminal_partition(build_diagram(phi));
        const auto split = decompose_image(phi, partition, phi.graph().require_vertex(s));
        if (!split)
            return py::none();
        py::dict out;
        out["left"] = format_word(phi.graph(), split->left);
        out["sign"] = split->sign;
        out["right"] = format_word(phi.graph(), split->right);
        out["supports_in_lower_layers"] = split->supports_in_lower_layers;
        return out;
    });
    m.def("invariant_subgraph", [](const Automorphism& phi, const std::string& starting) {
        const auto result =
            invariant_subgraph(phi.graph(), phi, phi.graph().require_vertex(starting));
        return json_to_py(invariant_subgraph_to_json(phi.graph(), result));
    });

    // dynamics
    m.def(
        "iterate_lengths",
        [](const Automorphism& phi, std::size_t k_max, std::uint64_t length_cap) {
            return orbit_dict(phi.graph(), iterate_lengths(phi, k_max, length_cap));
        },
        py::arg("phi"), py::arg("k_max") = kDefaultKMax, py::arg("length_cap") = kDefaultLengthCap);
    m.def(
        "dilatation",
        [](const Automorphism& phi, std::size_t k_max, std::uint64_t length_cap) {
            const auto orbits = iterate_lengths(phi, k_max, length_cap);
            const auto est = estimate_dilatation(orbits);
            py::dict per;
            for (const auto& orbit : orbits) {
                const auto& entry = est.per_generator[orbit.generator];
                py::dict item;
                item["lambda_hat"] = entry.lambda_hat;
                item["window"] = py::make_tuple(entry.window_begin, entry.window_end);
                item["lengths"] = orbit.lengths;
                item["truncated"] = orbit.truncated;
                per[py::str(phi.graph().vertex_name(orbit.generator))] = item;
            }
            py::dict out;
            out["per_generator"] = per;
            out["lambda_hat"] = est.lambda_phi_hat;
            out["argmax_generator"] = phi.graph().vertex_name(est.argmax_generator);
            return out;
        },
        py::arg("phi"), py::arg("k_max") = kDefaultKMax, py::arg("length_cap") = kDefaultLengthCap);
    m.def("fit_polynomial_degree", [](const std::vector<std::uint64_t>& lengths) {
        const OrbitLengths orbit{0, lengths, false};
        const auto fit = fit_polynomial_degree(orbit);
        return py::make_tuple(fit.degree_hat, fit.residual);
    });
    m.def(
        "classify_growth",
        [](const Automorphism& phi, std::size_t k_max, std::uint64_t length_cap) {
            return json_to_py(
                growth_to_json(phi.graph(), classify_growth(phi.graph(), phi, k_max, length_cap)));
        },
        py::arg("phi"), py::arg("k_max") = kDefaultKMax, py::arg("length_cap") = kDefaultLengthCap);

    // spec files and reports
    m.def("load_spec", [](const std::string& text) { return parse_spec(text).build(); });
    m.def(
        "analyze_spec",
        [](const std::string& text, std::size_t k_max, std::uint64_t length_cap, bool pure_power) {
            AnalyzeOptions options;
            options.k_max = k_max;
            options.length_cap = length_cap;
            options.pure_power_first = pure_power;
            return json_to_py(report_to_json(analyze(parse_spec(text), options)));
        },
        py::arg("text"), py::arg("k_max") = kDefaultKMax,
        py::arg("length_cap") = kDefaultLengthCap, py::arg("pure_power") = false);
    m.def("export_dot", [](const Automorphism& phi) {
        const auto d = build_diagram(phi);
        return export_dot(phi.graph(), d, cycle_analysis(phi.graph(), d));
    });
}
