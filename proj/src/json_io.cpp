#include "cyclecert/json_io.hpp"

namespace cyclecert {

Json to_json(const Graph& g) {
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return Json{{"n", g.num_vertices()},
                {"edges", std::move(edges)},
                {"digest", graph_digest(g)}};
}

Json to_json(const GraphProfile& p) {
    return Json{{"n", p.n},
                {"delta", p.delta},
                {"kappa", p.kappa},
                {"alpha", Json{{"lo", p.alpha.lo},
                               {"hi", p.alpha.hi},
                               {"exact", p.alpha.exact}}}};
}

Json to_json(const PathWitness& w) {
    return Json{{"kind", "path"},
                {"length", w.length()},
                {"vertices", w.vertices()}};
}

Json to_json(const CycleWitness& w) {
    return Json{{"kind", "cycle"},
                {"length", w.length()},
                {"vertices", w.vertices()}};
}

Json to_json(const TriangulatedCycle& c) {
    Json chords = Json::array();
    for (auto [a, b] : c.chords()) chords.push_back({a, b});
    return Json{{"kind", "triangulated-cycle"},
                {"length", c.length()},
                {"r", c.r()},
                {"order", c.order()},
                {"chords", std::move(chords)}};
}

Json to_json(const SurgeryResult& r) {
    return Json{{"mechanism", to_string(r.mechanism)},
                {"old_length", r.old_len},
                {"new_length", r.new_len},
                {"window", {r.window.first, r.window.second}},
                {"path", to_json(r.new_path)}};
}

Json to_json(const SpectrumCertificate& c) {
    Json covered = Json::array();
    for (const auto& [len, entry] : c.covered)
        covered.push_back(Json{{"length", len},
                               {"mechanism", entry.mechanism},
                               {"vertices", entry.witness.vertices()}});
    return Json{{"graph_id", c.graph_id},
                {"n", c.n},
                {"covered", std::move(covered)},
                {"missing", c.missing},
                {"pancyclic", c.pancyclic()}};
}

Json to_json(const TrianglePartition& p) {
    Json edges = Json::array();
    for (auto [u, v] : p.edges)
        edges.push_back(Json{{"edge", {u, v}}, {"apex", p.apex.at({u, v})}});
    return Json{{"x_side", p.x_side},
                {"edges", std::move(edges)},
                {"edge_count", static_cast<int>(p.edges.size())},
                {"winning_trial", p.winning_trial},
                {"seed", p.seed}};
}

Json to_json(const RangePlan& p) {
    return Json{{"n", p.n},
                {"kappa", p.kappa},
                {"alpha", p.alpha},
                {"epsilon", p.epsilon},
                {"m_upper_raw", p.m_upper_raw},
                {"m_upper", p.m_upper},
                {"upper_degenerate", p.upper_degenerate},
                {"upper_uses_degree", p.upper_uses_degree},
                {"r_upper_raw", p.r_upper_raw},
                {"r_upper", p.r_upper},
                {"lower_cut_raw", p.lower_cut_raw},
                {"lower_cut", p.lower_cut},
                {"lower_empty", p.lower_empty},
                {"r_middle", p.r_middle},
                {"middle_empty", p.middle_empty}};
}

Json to_json(const PancyclicityResult& r) {
    Json flags = Json::object();
    for (const auto& [len, ok] : r.ramsey_flags)
        flags[std::to_string(len)] = ok;
    Json notes = Json::object();
    for (const auto& [len, note] : r.failure_notes)
        notes[std::to_string(len)] = note;
    return Json{{"certificate", to_json(r.certificate)},
                {"plan", to_json(r.plan)},
                {"ramsey_flags", std::move(flags)},
                {"failure_notes", std::move(notes)}};
}

} // namespace cyclecert
