// Command-line front end: parses a curve/bundle query and prints reports.

#include <iostream>
#include <iterator>
#include <regex>
#include <string>

#include "CLI11.hpp"

#include "birmax/descriptor.hpp"
#include "birmax/report.hpp"

using namespace birmax;

namespace {

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kSemantic = 3, kVerify = 4 };

struct Options {
    std::string format = "text";
    int sl2_bound = 2;
    std::string b_range = "-2..2";
    std::string d0;
    int degree = 0;
    std::string query;
    std::string query2;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_query(const std::string& arg) {
    if (!arg.empty() && arg != "-") return arg;
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& s) {
    static const std::regex re(R"(\s*(-?\d{1,9})\s*\.\.\s*(-?\d{1,9})\s*)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw UsageError("--b-range expects LO..HI, got '" + s + "'");
    auto lo = std::stoll(m[1]), hi = std::stoll(m[2]);
    if (lo > hi) throw UsageError("--b-range needs LO <= HI");
    return {lo, hi};
}

void emit(const Options& o, const Json& j) {
    if (o.format == "json") {
        std::cout << j.dump(2) << "\n";
    } else if (j.is_array()) {
        for (const auto& e : j) std::cout << render_text(e) << "\n";
    } else {
        std::cout << render_text(j);
    }
}

ProjBundle rank3_bundle(const Query& q) {
    const auto* e = q.payload ? std::get_if<VBundle>(&*q.payload) : nullptr;
    if (!e) throw ContractError("expected a P2-bundle payload P(...) or A30/A31/A32");
    if (e->rank() != 3) throw ContractError("expected a rank-3 bundle, got rank " + std::to_string(e->rank()));
    return canonicalize(*e);
}

int run_classify(const Options& o) {
    std::string text = read_query(o.query);
    Query q = parse_query(text);
    ProjBundle x = rank3_bundle(q);
    emit(o, report_json(print_query(q), x, classify_p2_bundle(x)));
    return kOk;
}

int run_classify_degree(const Options& o) {
    Query q = parse_query(read_query(o.query), true);
    Json out = Json::array();
    for (int d = 1; d <= 9; ++d)
        if (o.degree == 0 || o.degree == d) out.push_back(degree_json(classify_mdp_degree(*q.curve, d)));
    if (o.degree != 0) {
        if (out.empty()) throw ContractError("degree must lie in 1..9");
        emit(o, out[0]);
    } else {
        emit(o, out);
    }
    return kOk;
}

int run_conjugates(const Options& o) {
    Query q = parse_query(read_query(o.query));
    ProjBundle x = rank3_bundle(q);
    auto [lo, hi] = parse_range(o.b_range);
    Json out = Json::array();
    for (const auto& d : conjugates(x, {o.sl2_bound, lo, hi})) out.push_back(descriptor_json(d));
    emit(o, out);
    return kOk;
}

int run_isom(const Options& o) {
    if (o.query2.empty()) throw UsageError("isom needs two queries");
    Query a = parse_query(read_query(o.query));
    Query b = parse_query(o.query2);
    if (!(*a.curve == *b.curve)) throw ContractError("the two queries use different curves");
    const auto* x = std::get_if<VBundle>(&*a.payload);
    const auto* y = std::get_if<VBundle>(&*b.payload);
    if (!x || !y) throw ContractError("isom compares bundle payloads");
    Json j;
    j["left"] = canonicalize(*x).to_string();
    j["right"] = canonicalize(*y).to_string();
    j["isomorphic"] = x->rank() == y->rank() && proj_iso(*x, *y);
    emit(o, j);
    return kOk;
}

int run_normalize(const Options& o) {
    Query q = parse_query(read_query(o.query));
    Json j;
    j["input"] = print_query(q);
    if (const auto* e = std::get_if<VBundle>(&*q.payload)) {
        ProjBundle x = canonicalize(*e);
        j["vector_normal_form"] = print_payload(*q.payload);
        j["normal_form"] = x.to_string();
        j["case_tag"] = to_string(x.tag);
        j["stability"] = to_string(stability_class(*e));
    } else {
        j["normal_form"] = print_payload(*q.payload);
    }
    emit(o, j);
    return kOk;
}

int run_catalog(const Options& o) {
    Query q = parse_query(read_query(o.query), true);
    CatalogParams p;
    std::tie(p.b_lo, p.b_hi) = parse_range(o.b_range);
    if (!o.d0.empty()) p.d0 = parse_pic(o.d0, q.curve);
    if (p.d0 && p.d0->deg() != 2) throw ContractError("--d0 must have degree 2");
    Catalog c = maximal_catalog(q.curve, p);
    if (o.format == "json") {
        std::cout << catalog_json(c).dump(2) << "\n";
        for (const auto& n : c.notes) std::cerr << "note: " << n << "\n";
    } else {
        for (const auto& e : c.entries)
            std::cout << to_string(e.descriptor) << "  [" << e.family << "; " << e.witness.to_string() << "]\n";
        for (const auto& n : c.notes) std::cout << "note: " << n << "\n";
    }
    return kOk;
}

int run_verify_reps(const Options& o) {
    Json j;
    bool ok = true;
    Json reps = Json::array();
    for (bool dualized : {false, true}) {
        auto r = verify_heisenberg(dualized);
        ok = ok && r.ok();
        reps.push_back(heisenberg_json(dualized, r));
    }
    j["heisenberg"] = reps;
    bool omega = verify_omega_identity();
    bool reducible_detected = !irreducible_pair(heisenberg_diagonal(false),
                                                mat_mul(heisenberg_diagonal(false), heisenberg_diagonal(false)));
    bool identity_rejected = !verify_omega_identity(identity3());
    j["omega_identity"] = omega;
    j["negative_reducible_pair_detected"] = reducible_detected;
    j["negative_identity_rejected"] = identity_rejected;
    ok = ok && omega && reducible_detected && identity_rejected;
    j["ok"] = ok;
    if (o.format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& r : reps) std::cout << render_text(r) << "\n";
        std::cout << "omega_identity: " << omega << "\nnegative_reducible_pair_detected: "
                  << reducible_detected << "\nnegative_identity_rejected: " << identity_rejected
                  << "\nok: " << ok << "\n";
    }
    return ok ? kOk : kVerify;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Maximal connected automorphism groups of Mori fibre spaces over curves"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--sl2-bound", o.sl2_bound, "Entry bound for SL2(Z) enumeration")->check(CLI::PositiveNumber);
    app.add_option("--b-range", o.b_range, "Range LO..HI for the integer b");
    app.add_option("--d0", o.d0, "Degree-2 base class for the 2-divisor test");
    app.fallthrough();

    auto* classify = app.add_subcommand("classify", "Classify a P2-bundle");
    classify->add_option("query", o.query, "Query text, or - for stdin");
    auto* degree = app.add_subcommand("classify-degree", "Degree table for a curve");
    degree->add_option("query", o.query, "Curve text, or - for stdin");
    degree->add_option("-d,--degree", o.degree, "Single degree 1..9");
    auto* conj = app.add_subcommand("conjugates", "Mori fibre spaces with conjugate automorphism group");
    conj->add_option("query", o.query, "Query text, or - for stdin");
    auto* isom = app.add_subcommand("isom", "Isomorphism of two projective bundles");
    isom->add_option("query", o.query, "First query")->required();
    isom->add_option("query2", o.query2, "Second query")->required();
    auto* normalize = app.add_subcommand("normalize", "Canonical form of a payload");
    normalize->add_option("query", o.query, "Query text, or - for stdin");
    auto* catalog = app.add_subcommand("catalog", "Catalog of maximal groups for a curve");
    catalog->add_option("query", o.query, "Curve text, or - for stdin");
    app.add_subcommand("verify-reps", "Check the explicit projective representations");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        const auto* sub = app.get_subcommands().front();
        const std::string name = sub->get_name();
        if (name == "classify") return run_classify(o);
        if (name == "classify-degree") return run_classify_degree(o);
        if (name == "conjugates") return run_conjugates(o);
        if (name == "isom") return run_isom(o);
        if (name == "normalize") return run_normalize(o);
        if (name == "catalog") return run_catalog(o);
        return run_verify_reps(o);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error at line " << e.line << ", column " << e.column << ": " << e.what() << "\n";
        return kParse;
    } catch (const SemanticError& e) {
        std::cerr << "semantic error at line " << e.line << ", column " << e.column << ": " << e.what() << "\n";
        return kSemantic;
    } catch (const ContractError& e) {
        std::cerr << "semantic error: " << e.what() << "\n";
        return kSemantic;
    } catch (const TableError& e) {
        std::cerr << "semantic error: " << e.what() << "\n";
        return kSemantic;
    }
}
