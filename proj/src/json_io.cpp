#include "horn/json_io.hpp"

#include <cmath>
#include <stdexcept>

namespace horn {

using nlohmann::json;

namespace {

json index_set_to_json(const IndexSet& s) { return json(s.elements); }

json triple_to_json(const HornTriple& t) {
    return json::array({index_set_to_json(t.i), index_set_to_json(t.j), index_set_to_json(t.k)});
}

IndexSet index_set_from_json(const json& j) {
    IndexSet s;
    s.elements = j.get<std::vector<int>>();
    for (std::size_t k = 0; k + 1 < s.elements.size(); ++k)
        if (s.elements[k] >= s.elements[k + 1])
            throw std::invalid_argument("index set must be strictly increasing");
    return s;
}

HornTriple triple_from_json(int p, int r, const json& j) {
    if (!j.is_array() || j.size() != 3)
        throw std::invalid_argument("triple must be an array of three index sets");
    HornTriple t;
    t.p = p;
    t.r = r;
    t.i = index_set_from_json(j[0]);
    t.j = index_set_from_json(j[1]);
    t.k = index_set_from_json(j[2]);
    if (static_cast<int>(t.i.elements.size()) != r || static_cast<int>(t.j.elements.size()) != r ||
        static_cast<int>(t.k.elements.size()) != r)
        throw std::invalid_argument("triple cardinality does not match its rank");
    for (const IndexSet* s : {&t.i, &t.j, &t.k})
        if (!s->elements.empty() && (s->elements.front() < 1 || s->elements.back() > p))
            throw std::invalid_argument("triple indices out of ambient range");
    if (!t.sum_identity_holds())
        throw std::invalid_argument("triple violates the sum identity");
    return t;
}

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

json table_to_json(const TripleTable& table) {
    json ranks = json::array();
    for (int r = 1; r <= table.p(); ++r) {
        json triples = json::array();
        for (const HornTriple& t : table.rank(r)) triples.push_back(triple_to_json(t));
        ranks.push_back(json{{"p", table.p()}, {"r", r}, {"triples", std::move(triples)}});
    }
    return json{{"p", table.p()}, {"ranks", std::move(ranks)}};
}

TripleTable table_from_json(const json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("ranks"))
        throw std::invalid_argument("table document needs 'p' and 'ranks'");
    const int p = j.at("p").get<int>();
    if (p < 1) throw std::invalid_argument("ambient size must be positive");
    const json& ranks = j.at("ranks");
    if (!ranks.is_array() || static_cast<int>(ranks.size()) != p)
        throw std::invalid_argument("table document must list one rank per cardinality");
    std::vector<std::vector<HornTriple>> by_rank(static_cast<std::size_t>(p));
    for (int r = 1; r <= p; ++r) {
        const json& entry = ranks[static_cast<std::size_t>(r - 1)];
        if (entry.at("p").get<int>() != p || entry.at("r").get<int>() != r)
            throw std::invalid_argument("rank entry out of order");
        for (const json& t : entry.at("triples"))
            by_rank[static_cast<std::size_t>(r - 1)].push_back(triple_from_json(p, r, t));
    }
    return TripleTable(p, std::move(by_rank));
}

json polytope_to_json(const PolytopeSpec& spec) {
    json inequalities = json::array();
    for (const PolytopeInequality& ineq : spec.inequalities) {
        inequalities.push_back(json{{"triple", triple_to_json(ineq.triple)},
                                    {"r", ineq.triple.r},
                                    {"alpha_sum", ineq.alpha_sum},
                                    {"beta_sum", ineq.beta_sum}});
    }
    return json{{"p", spec.p},
                {"trace_sum", spec.trace_sum},
                {"scale", spec.scale},
                {"inequalities", std::move(inequalities)}};
}

json report_to_json(const RunReport& report) {
    const ExperimentConfig& cfg = report.config;
    return json{{"kind", experiment_kind_name(report.kind)},
                {"sigma", cfg.sigma.values()},
                {"samples", cfg.samples},
                {"seed", cfg.seed},
                {"epsilon", cfg.resolved_epsilon()},
                {"sampler", cfg.sampler == SamplerKind::Haar ? "haar" : "paper"},
                {"threads", cfg.threads},
                {"count_inside", report.count_inside},
                {"hermitian_close_count", report.hermitian_close_count},
                {"worst_trace_residual", finite_or_null(report.worst_trace_residual)},
                {"worst_min_slack", finite_or_null(report.worst_min_slack)},
                {"wall_seconds", report.wall_seconds},
                {"tight_counts", report.tight_counts}};
}

}  // namespace horn
