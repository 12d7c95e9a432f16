#include "divcodes/bounds.hpp"
#include "divcodes/codes.hpp"
#include "divcodes/divisible.hpp"
#include "divcodes/geometry.hpp"
#include "divcodes/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

using namespace divcodes;
using nlohmann::json;

// Exit codes: 0 success, 1 usage/parameter error, 2 internal inconsistency,
// 3 oracle inconclusive. Integers are emitted as decimal strings so they
// are never truncated.

namespace {

json expansion_to_json(const SqrExpansion& e) {
    json doc;
    doc["q"] = e.q;
    doc["r"] = e.r;
    doc["n"] = e.n.str();
    doc["digits"] = e.digits;
    doc["leading"] = e.leading.str();
    doc["cross_sum"] = e.cross_sum().str();
    return doc;
}

json witness_to_json(const DivisibleWitness& w) {
    json blocks = json::array();
    for (const auto& [level, count] : w.blocks)
        blocks.push_back({{"level", level}, {"count", count.str()}});
    return {{"q", w.q}, {"r", w.r}, {"blocks", blocks}, {"cardinality", w.cardinality().str()}};
}

json bound_to_json(const BoundResult& b, bool with_trace) {
    json doc;
    doc["value"] = b.value.str();
    doc["kind"] = b.kind == BoundKind::exact ? "exact"
                  : b.kind == BoundKind::lower ? "lower"
                                               : "upper";
    doc["method"] = b.method;
    if (with_trace) {
        json trace = json::array();
        for (const auto& s : b.trace) {
            json step;
            step["v"] = s.v;
            step["k"] = s.k;
            step["base"] = s.base.str();
            step["rem"] = s.rem.str();
            step["delta_max"] = s.delta;
            step["value"] = s.value.str();
            if (!s.note.empty())
                step["note"] = s.note;
            trace.push_back(step);
        }
        doc["trace"] = trace;
    }
    return doc;
}

json distribution_to_json(const WeightDistribution& w) {
    json counts = json::array();
    for (long long i = 0; i <= w.n; ++i) {
        const Rational& c = w.counts[i];
        if (c == 0)
            continue;
        counts.push_back({{"weight", i},
                          {"count", denominator(c) == 1
                                        ? numerator(c).str()
                                        : numerator(c).str() + "/" + denominator(c).str()}});
    }
    return {{"n", w.n}, {"k", w.k}, {"q", w.q}, {"counts", counts}};
}

void emit(const json& doc) {
    std::cout << doc.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact realizability of q^r-divisible multiset cardinalities and "
                 "improved Johnson-type bounds for subspace codes"};
    app.require_subcommand(1);

    std::string n_str;
    long long q = 2, v = 0, d = 0, k = 0, n_small = 0, vmax = 0;
    int r = 0;
    std::string registry_path, witness_path, multiset_path, format = "structured";
    bool classic = false, improved = false, trace = false;
    long long max_mult = -1, budget = -1;
    std::optional<int> verify_r;

    auto* cmd_expand = app.add_subcommand("expand", "S_q(r)-adic expansion of n");
    cmd_expand->add_option("n", n_str)->required();
    cmd_expand->add_option("--q", q)->required();
    cmd_expand->add_option("--r", r)->required();

    auto* cmd_exists = app.add_subcommand(
        "exists", "decide whether a q^r-divisible multiset of cardinality n exists");
    cmd_exists->add_option("n", n_str)->required();
    cmd_exists->add_option("--q", q)->required();
    cmd_exists->add_option("--r", r)->required();
    cmd_exists->add_option("--witness", witness_path,
                           "write a witness multiset file when one exists");

    auto* cmd_frob = app.add_subcommand("frobenius",
                                        "largest non-realizable cardinality for (q, r)");
    cmd_frob->add_option("--q", q)->required();
    cmd_frob->add_option("--r", r)->required();

    auto* cmd_johnson = app.add_subcommand("johnson", "Johnson-type upper bound for A_q(v,d;k)");
    cmd_johnson->add_option("--q", q)->required();
    cmd_johnson->add_option("--v", v)->required();
    cmd_johnson->add_option("--d", d)->required();
    cmd_johnson->add_option("--k", k)->required();
    cmd_johnson->add_flag("--classic", classic);
    cmd_johnson->add_flag("--improved", improved);
    cmd_johnson->add_option("--registry", registry_path);
    cmd_johnson->add_flag("--trace", trace);

    auto* cmd_spread = app.add_subcommand("spread", "partial k-spread bounds for A_q(v,2k;k)");
    cmd_spread->add_option("--q", q)->required();
    cmd_spread->add_option("--v", v)->required();
    cmd_spread->add_option("--k", k)->required();

    auto* cmd_table = app.add_subcommand("table", "bound table over a range of v");
    cmd_table->add_option("--q", q)->required();
    cmd_table->add_option("--d", d)->required();
    cmd_table->add_option("--k", k)->required();
    cmd_table->add_option("--vmax", vmax)->required();
    cmd_table->add_option("--registry", registry_path);
    cmd_table->add_option("--format", format)->check(CLI::IsMember({"csv", "structured"}));

    auto* cmd_oracle = app.add_subcommand(
        "oracle", "exhaustive search for a q^r-divisible multiset of cardinality n");
    cmd_oracle->add_option("--q", q)->required();
    cmd_oracle->add_option("--r", r)->required();
    cmd_oracle->add_option("--n", n_small)->required();
    cmd_oracle->add_option("--max-mult", max_mult);
    cmd_oracle->add_option("--budget", budget);

    auto* cmd_verify = app.add_subcommand(
        "verify-multiset", "check a multiset file and report its code invariants");
    cmd_verify->add_option("file", multiset_path)->required();
    cmd_verify->add_option("--r", verify_r, "also check q^r-divisibility");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (cmd_expand->parsed()) {
            SqrExpansion e = expand(Int(n_str), q, r);
            json doc = {{"command", "expand"}, {"result", expansion_to_json(e)}};
            emit(doc);
        } else if (cmd_exists->parsed()) {
            Int n(n_str);
            SqrExpansion e = expand(n, q, r);
            bool realizable = e.leading >= 0;
            json doc = {{"command", "exists"},
                        {"result", {{"exists", realizable}, {"expansion", expansion_to_json(e)}}}};
            if (realizable && n >= 0) {
                auto w = witness(n, q, r);
                doc["result"]["witness"] = witness_to_json(*w);
                if (!witness_path.empty())
                    write_multiset_file(expand_witness(*w), witness_path);
            }
            emit(doc);
        } else if (cmd_frob->parsed()) {
            json doc = {{"command", "frobenius"},
                        {"result", {{"q", q}, {"r", r}, {"value", frobenius(q, r).str()}}}};
            emit(doc);
        } else if (cmd_johnson->parsed()) {
            if (classic && improved)
                throw std::invalid_argument("choose one of --classic / --improved");
            JohnsonMode mode = classic ? JohnsonMode::classical : JohnsonMode::improved;
            KnownValuesRegistry reg = registry_path.empty()
                                          ? KnownValuesRegistry::with_defaults()
                                          : KnownValuesRegistry::from_file(registry_path);
            BoundResult b = upper_bound({q, v, d, k}, reg, mode);
            json doc = {{"command", "johnson"},
                        {"params", {{"q", q}, {"v", v}, {"d", d}, {"k", k}}},
                        {"result", bound_to_json(b, trace)}};
            emit(doc);
        } else if (cmd_spread->parsed()) {
            auto [lower, upper] = spread_bounds(q, v, k);
            json doc = {{"command", "spread"},
                        {"params", {{"q", q}, {"v", v}, {"k", k}}},
                        {"result",
                         {{"lower", bound_to_json(lower, false)},
                          {"upper", bound_to_json(upper, false)},
                          {"exact", lower.value == upper.value}}}};
            emit(doc);
        } else if (cmd_table->parsed()) {
            KnownValuesRegistry reg = registry_path.empty()
                                          ? KnownValuesRegistry::with_defaults()
                                          : KnownValuesRegistry::from_file(registry_path);
            KnownValuesRegistry empty;
            json rows = json::array();
            std::ostringstream csv;
            csv << "v,classical,improved,exact_or_best_known\n";
            for (long long vv = k; vv <= vmax; ++vv) {
                BoundResult c = upper_bound({q, vv, d, k}, empty, JohnsonMode::classical);
                BoundResult i = upper_bound({q, vv, d, k}, reg, JohnsonMode::improved);
                auto entry = reg.lookup(q, vv, d, k);
                Int best = entry && entry->upper ? std::min(*entry->upper, i.value) : i.value;
                csv << vv << "," << c.value << "," << i.value << "," << best << "\n";
                rows.push_back({{"v", vv},
                                {"classical", c.value.str()},
                                {"improved", i.value.str()},
                                {"exact_or_best_known", best.str()}});
            }
            if (format == "csv")
                std::cout << csv.str();
            else
                emit({{"command", "table"},
                      {"params", {{"q", q}, {"d", d}, {"k", k}, {"vmax", vmax}}},
                      {"rows", rows}});
        } else if (cmd_oracle->parsed()) {
            SearchConfig cfg;
            cfg.q = q;
            cfg.r = r;
            cfg.n = n_small;
            if (max_mult >= 0)
                cfg.max_mult = Int(max_mult);
            if (budget >= 0)
                cfg.node_budget = budget;
            SearchResult res = search_exists(cfg);
            json doc = {{"command", "oracle"},
                        {"params", {{"q", q}, {"r", r}, {"n", n_small}}},
                        {"result", {{"found", res.found}, {"nodes", res.nodes}}}};
            if (res.example)
                doc["result"]["example"] = json::parse(write_multiset(*res.example));
            emit(doc);
        } else if (cmd_verify->parsed()) {
            PointMultiset p = read_multiset_file(multiset_path);
            WeightDistribution w = weight_distribution(p);
            WeightDistribution dual = macwilliams_dual(w);
            CodePredicates flags = predicates(dual);
            json doc = {{"command", "verify-multiset"},
                        {"result",
                         {{"q", p.q()},
                          {"v", p.v()},
                          {"cardinality", p.cardinality().str()},
                          {"distribution", distribution_to_json(w)},
                          {"dual_distribution", distribution_to_json(dual)},
                          {"full_length", flags.full_length},
                          {"projective", flags.projective}}}};
            if (verify_r) {
                doc["result"]["r"] = *verify_r;
                doc["result"]["divisible"] = is_divisible(p, *verify_r);
                doc["result"]["weights_divisible_by_q^r"] =
                    divisible_by(w, int_pow(p.q(), *verify_r));
            }
            emit(doc);
        }
    } catch (const InconsistencyError& e) {
        std::cerr << "inconsistency: " << e.what() << "\n";
        return 2;
    } catch (const InconclusiveError& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
