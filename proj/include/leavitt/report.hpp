#pragma once

// Full classification report for one graph, and the golden-corpus runner.
// Reports are deterministic given (graph bytes, characteristic): keys are
// sorted, set outputs follow declaration order, and nothing time- or
// machine-dependent is emitted.

#include <filesystem>

#include "leavitt/json_io.hpp"
#include "leavitt/props.hpp"

namespace leavitt {

struct ReportOptions {
    FieldChar k{0};
    CheckOptions checks;
};

namespace detail {

inline json verdict_to_json(const LieVerdict& v) {
    json j;
    j["verdict"] = v.verdict;
    j["branch"] = v.branch;
    j["witnesses"] = v.witnesses;
    return j;
}

}  // namespace detail

inline json build_report(const Graph& g, const std::string& id, const ReportOptions& opts = {}) {
    if (g.empty()) throw std::invalid_argument("cannot classify the empty graph");
    json j;
    j["graph"] = id;
    j["char"] = opts.k.p;

    LieVerdict simple = is_simple_lpa(g);
    j["simple"] = simple.verdict;
    j["graded_simple"] = is_graded_simple(g);

    LieVerdict solvable = is_lie_solvable(g, opts.k);
    LieVerdict solvable_monoid = is_lie_solvable_monoid(g, opts.k);
    j["lie_solvable"] = solvable.verdict;
    LieVerdict nilpotent = is_lie_nilpotent(g);
    j["lie_nilpotent"] = nilpotent.verdict;
    j["commutator_zero"] = commutator_zero(g);

    GkAnalysis gk = gk_analysis(g);
    if (gk.gk.infinite)
        j["gk"] = "inf";
    else
        j["gk"] = gk.gk.value;

    json series = series_to_json(g, composition_series(g));
    j["series"] = series["chain"];
    j["series_types"] = series["types"];

    json lie_simple;
    if (is_connected(g)) {
        LieVerdict v = is_lie_simple(g, opts.k);
        lie_simple["verdict"] = v.verdict;
        lie_simple["branch"] = v.branch;
        json w = json::array();
        if (v.branch == "B")
            if (auto core = simple_core(g)) w = member_ids(g, *core);
        lie_simple["W"] = w;
    } else {
        lie_simple["verdict"] = nullptr;
        lie_simple["branch"] = "skipped: disconnected graph";
        lie_simple["W"] = json::array();
    }
    j["lie_simple"] = lie_simple;

    CheckOptions checks = opts.checks;
    checks.chars = {opts.k.p};
    j["consistency"] = json::array();
    for (const CheckResult& r : run_graph_checks(g, checks)) {
        json entry;
        entry["check"] = r.check;
        entry["ok"] = r.ok;
        if (!r.note.empty()) entry["note"] = r.note;
        j["consistency"].push_back(entry);
    }

    json details;
    details["simple"] = detail::verdict_to_json(simple);
    details["lie_solvable"] = detail::verdict_to_json(solvable);
    details["lie_solvable_monoid"] = detail::verdict_to_json(solvable_monoid);
    details["lie_nilpotent"] = detail::verdict_to_json(nilpotent);
    details["gk"] = gk_to_json(gk);
    j["details"] = details;
    return j;
}

inline bool report_consistency_clean(const json& report) {
    for (const auto& entry : report.at("consistency"))
        if (!entry.at("ok").get<bool>()) return false;
    return true;
}

struct CorpusEntry {
    std::string name;
    bool ok = false;
    std::string note;
};

struct CorpusResult {
    int total = 0;
    int passed = 0;
    std::vector<CorpusEntry> entries;
};

// Runs every *.graph file against its adjacent golden report
// (<stem>.expected.json). Comparison is structural JSON equality; the golden
// pins the characteristic through its "char" field.
inline CorpusResult run_corpus(const std::string& dir) {
    namespace fs = std::filesystem;
    CorpusResult result;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".graph")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const fs::path& file : files) {
        ++result.total;
        std::string stem = file.stem().string();
        fs::path golden = file.parent_path() / (stem + ".expected.json");
        CorpusEntry entry{stem, false, ""};
        try {
            if (!fs::exists(golden)) throw std::runtime_error("missing golden " + golden.string());
            Graph g = load_graph_file(file.string());
            json expected = json::parse(read_file(golden.string()));
            ReportOptions opts;
            opts.k = FieldChar(expected.value("char", 0));
            json actual = build_report(g, stem, opts);
            if (actual == expected) {
                entry.ok = true;
            } else {
                entry.note = "report mismatch";
            }
        } catch (const std::exception& e) {
            entry.note = e.what();
        }
        if (entry.ok) ++result.passed;
        result.entries.push_back(std::move(entry));
    }
    return result;
}

inline json corpus_to_json(const CorpusResult& r) {
    json j;
    j["total"] = r.total;
    j["passed"] = r.passed;
    j["cases"] = json::array();
    for (const CorpusEntry& e : r.entries) {
        json entry;
        entry["name"] = e.name;
        entry["ok"] = e.ok;
        if (!e.note.empty()) entry["note"] = e.note;
        j["cases"].push_back(entry);
    }
    return j;
}

inline json prop_to_json(const PropReport& r) {
    json j;
    j["cases"] = r.cases;
    j["checks"] = json::object();
    for (const auto& [name, runs] : r.runs) j["checks"][name] = runs;
    j["failures"] = json::array();
    for (const PropFinding& f : r.findings) {
        json entry;
        entry["check"] = f.check;
        entry["case"] = f.case_index;
        entry["graph"] = f.graph_text;
        if (!f.note.empty()) entry["note"] = f.note;
        j["failures"].push_back(entry);
    }
    return j;
}

}  // namespace leavitt
