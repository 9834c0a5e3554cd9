#include "birmax/report.hpp"

namespace birmax {

Json report_json(const std::string& input, const ProjBundle& normal, const AutReport& r) {
    Json j;
    j["input"] = input;
    j["normal_form"] = normal.to_string();
    j["genus"] = r.genus;
    j["case_tag"] = to_string(r.case_tag);
    j["maximal"] = to_string(r.maximal);
    j["vertical_group"] = r.vertical.to_string();
    j["base_action"] = to_string(r.base_action);
    j["superrigid"] = to_string(r.superrigid);
    j["ses"] = r.ses;
    j["citations"] = r.citations;
    return j;
}

Json degree_json(const DegreeReport& r) {
    Json j;
    j["degree"] = r.degree;
    j["occurs"] = r.occurs;
    j["aut_if_maximal"] = r.delegated_to_p2_bundle ? "delegated" : r.aut_if_maximal.to_string();
    j["delegated_to_p2_bundle"] = r.delegated_to_p2_bundle;
    j["structure"] = r.structure;
    j["birational_to_trivial"] = r.birational_to_trivial;
    j["equivariant_targets"] = r.equivariant_targets;
    j["citations"] = r.citations;
    return j;
}

Json descriptor_json(const MfsDescriptor& d) {
    Json j;
    j["kind"] = kind_name(d);
    j["base"] = nullptr;
    j["b"] = nullptr;
    j["invariant"] = nullptr;
    j["family_n"] = nullptr;
    if (auto p = std::get_if<P2Bundle>(&d)) {
        j["base"] = "C";
        j["invariant"] = p->bundle.to_string();
    } else if (auto p = std::get_if<P1OverRuled>(&d)) {
        j["base"] = p->base.to_string();
        j["b"] = p->b;
        j["invariant"] = p->inv.to_string();
        if (p->family_n) j["family_n"] = *p->family_n;
    } else if (auto p = std::get_if<FibreProduct>(&d)) {
        j["base"] = p->left.to_string() + " x_C " + p->right.to_string();
    } else {
        const auto& f = std::get<DelPezzoFibration>(d);
        j["base"] = "C";
        j["invariant"] = "degree " + std::to_string(f.degree);
    }
    j["text"] = to_string(d);
    return j;
}

Json catalog_json(const Catalog& c) {
    Json arr = Json::array();
    for (const auto& e : c.entries) {
        Json j;
        j["descriptor"] = descriptor_json(e.descriptor);
        j["family"] = e.family;
        j["witness"] = {{"description", e.witness.to_string()}, {"holds", e.witness.holds()}};
        arr.push_back(std::move(j));
    }
    return arr;
}

Json heisenberg_json(bool dualized, const HeisenbergReport& r) {
    Json j;
    j["dualized"] = dualized;
    j["order_diagonal"] = r.order_diagonal ? Json(*r.order_diagonal) : Json(nullptr);
    j["order_permutation"] = r.order_permutation ? Json(*r.order_permutation) : Json(nullptr);
    j["commutator_scalar"] = r.commutator_scalar ? Json(r.commutator_scalar->to_string()) : Json(nullptr);
    j["irreducible"] = r.irreducible;
    j["ok"] = r.ok();
    return j;
}

namespace {

std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "-";
    if (v.is_array()) {
        std::string s;
        for (const auto& x : v) s += (s.empty() ? "" : ", ") + scalar_text(x);
        return s;
    }
    return v.dump();
}

void render_into(std::string& out, const Json& obj, const std::string& prefix) {
    for (const auto& [k, v] : obj.items()) {
        if (v.is_object()) {
            render_into(out, v, prefix + k + ".");
            continue;
        }
        out += prefix + k + ": " + scalar_text(v) + "\n";
    }
}

}  // namespace

std::string render_text(const Json& object) {
    std::string out;
    render_into(out, object, "");
    return out;
}

}  // namespace birmax
