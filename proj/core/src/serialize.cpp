#include "brokenstick/serialize.hpp"

#include <json.hpp>

#include <cstdio>

namespace brokenstick {

namespace {

using Json = nlohmann::ordered_json;

// 12 significant digits, enough to eyeball the exact strings.
std::string decimal(const Rat& r) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", r.to_double());
    return buf;
}

Json vertices_json(const Tri& t) {
    Json out = Json::array();
    for (const BaryPoint* v : {&t.a, &t.b, &t.c}) {
        out.push_back(Json::array({v->l1.str(), v->l2.str(), v->l3.str()}));
    }
    return out;
}

Json region_json(const Tri& t) {
    return Json{{"vertices", vertices_json(t)}, {"area", bary_area(t).str()}};
}

Json policy_json(const Policy& policy) {
    Json steps = Json::array();
    for (const PolicyStep& s : policy.pattern()) {
        steps.push_back(Json{{"apex", s.apex},
                             {"half", s.half == HalfSide::First ? "first" : "second"}});
    }
    return Json{{"spec", policy.str()}, {"steps", steps}};
}

Json rat_array(const std::vector<Rat>& values) {
    Json out = Json::array();
    for (const Rat& v : values) {
        out.push_back(v.str());
    }
    return out;
}

std::string dump(const Json& j) {
    return j.dump(2) + "\n";
}

Json report_json(const ProbabilityReport& r) {
    Json table = Json::array();
    for (const DeltaRow& row : r.delta_table) {
        table.push_back(Json{{"i", row.index},
                             {"delta", row.delta.str()},
                             {"delta_decimal", decimal(row.delta)},
                             {"p_equilateral", row.p_equilateral.str()},
                             {"p_equilateral_decimal", decimal(row.p_equilateral)},
                             {"p_band", row.p_band.str()},
                             {"p_band_decimal", decimal(row.p_band)},
                             {"tail_difference", row.tail_difference.str()},
                             {"flagged", row.flagged}});
    }
    return Json{{"mode", mode_name(r.mode)},
                {"classical", r.classical.str()},
                {"classical_decimal", decimal(r.classical)},
                {"total_area", r.total_area.str()},
                {"triangle_area", r.triangle_area.str()},
                {"p_triangle", r.p_triangle.str()},
                {"p_triangle_decimal", decimal(r.p_triangle)},
                {"delta_table", table}};
}

void append_delta_rows(std::string& csv, const ProbabilityReport& r) {
    for (const DeltaRow& row : r.delta_table) {
        csv += std::string(mode_name(r.mode)) + "," + std::to_string(row.index) + "," +
               row.delta.str() + "," + row.p_equilateral.str() + "," + row.p_band.str() + "," +
               row.tail_difference.str() + "," + (row.flagged ? "true" : "false") + "\n";
    }
}

}  // namespace

const char* mode_name(Mode mode) {
    return mode == Mode::Paper ? "paper" : "measured";
}

std::string to_json(const FractalApprox& a) {
    Json pieces = Json::array();
    for (const Piece& p : a.pieces) {
        pieces.push_back(Json{{"level", p.level},
                              {"vertices", vertices_json(p.triangle)},
                              {"area", bary_area(p.triangle).str()},
                              {"parent_area", bary_area(p.parent).str()}});
    }
    return dump(Json{{"level", a.level},
                     {"policy", policy_json(a.policy)},
                     {"pieces", pieces},
                     {"residual", region_json(a.residual)}});
}

std::string to_json(const AuditReport& r) {
    return dump(Json{
        {"level", r.level},
        {"piece_areas", rat_array(r.piece_areas)},
        {"successive_ratios", rat_array(r.successive_ratios)},
        {"ratios_uniform", r.ratios_uniform},
        {"kept_area", r.kept_area.str()},
        {"residual_area", r.residual_area.str()},
        {"deleted_area", r.deleted_area.str()},
        {"conservation_ok", r.conservation_ok},
        {"measured",
         Json{{"ratio", r.measured_ratio.str()},
              {"total", r.measured_total.str()},
              {"triangle_area", r.measured_triangle_area.str()},
              {"probability", r.measured_probability.str()}}},
        {"paper",
         Json{{"ratio", r.paper_ratio.str()},
              {"total", r.paper_total.str()},
              {"triangle_area", r.paper_triangle_area.str()},
              {"probability", r.paper_probability.str()}}},
        {"matches_paper", r.matches_paper}});
}

std::string to_json(const ProbabilityReport& r) {
    return dump(report_json(r));
}

std::string to_json(const std::vector<ProbabilityReport>& reports) {
    Json out = Json::array();
    for (const ProbabilityReport& r : reports) {
        out.push_back(report_json(r));
    }
    return dump(out);
}

std::string to_json(const EstimateRecord& r) {
    Json targets{{"paper", nullptr}, {"measured", nullptr}};
    if (r.target_paper) {
        targets["paper"] = r.target_paper->str();
    }
    if (r.target_measured) {
        targets["measured"] = r.target_measured->str();
    }
    Json out{{"p_hat", r.estimate.p_hat},
             {"stderr", r.estimate.standard_error},
             {"n", r.estimate.n},
             {"seed", r.estimate.seed},
             {"sampler", r.sampler},
             {"predicate", r.predicate},
             {"targets", targets},
             {"rng", r.rng}};
    if (r.level) {
        out["level"] = *r.level;
    }
    if (r.truncation_share) {
        out["truncation_share"] = *r.truncation_share;
    }
    return dump(out);
}

std::string to_csv(const AuditReport& r) {
    std::string csv = "piece,area,parent_area,ratio\n";
    for (std::size_t k = 0; k < r.piece_areas.size(); ++k) {
        csv += std::to_string(k + 1) + "," + r.piece_areas[k].str() + ",";
        // parent area is 4x the residual shrink: piece k is 1/8 of its parent.
        csv += (r.piece_areas[k] * Rat(8)).str() + ",";
        csv += k == 0 ? "" : r.successive_ratios[k - 1].str();
        csv += "\n";
    }
    return csv;
}

std::string delta_table_csv(const ProbabilityReport& r) {
    std::string csv = "mode,i,delta,p_equilateral,p_band,tail_difference,flagged\n";
    append_delta_rows(csv, r);
    return csv;
}

std::string delta_table_csv(const std::vector<ProbabilityReport>& reports) {
    std::string csv = "mode,i,delta,p_equilateral,p_band,tail_difference,flagged\n";
    for (const ProbabilityReport& r : reports) {
        append_delta_rows(csv, r);
    }
    return csv;
}

}  // namespace brokenstick
