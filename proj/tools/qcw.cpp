// Copyright 2026 The qcw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// qcw: command-line entry point for bounds, code search, distance tools and
// structural analyzers.
//
// Exit codes: 0 ok, 1 usage or input error, 2 verification failure,
// 3 enumeration budget exceeded.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qcw/codes.hpp"
#include "qcw/distance.hpp"
#include "qcw/frontier.hpp"
#include "qcw/lpbounds.hpp"
#include "qcw/parallel.hpp"
#include "qcw/structure.hpp"
#include "qcw/tanner.hpp"

#ifndef QCW_DATA_DIR
#define QCW_DATA_DIR "data"
#endif

namespace fs = std::filesystem;
using nlohmann::json;
using namespace qcw;

namespace {

constexpr const char *kVersion = "0.1.0";
constexpr int kExitOk = 0, kExitUsage = 1, kExitVerify = 2, kExitBudget = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Helpers

/// "3..20", "2,3,5", "4" or mixtures such as "3..5,8".
std::vector<size_t> parse_counts(const std::string &text, const std::string &what) {
    std::vector<size_t> out;
    std::stringstream ss(text);
    std::string part;
    auto num = [&](const std::string &s) {
        size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(s, &pos);
        } catch (const std::exception &) {
            pos = 0;
        }
        if (pos == 0 || pos != s.size()) throw UsageError("invalid " + what + " value '" + s + "'");
        return static_cast<size_t>(v);
    };
    while (std::getline(ss, part, ',')) {
        if (part.empty()) continue;
        auto dots = part.find("..");
        if (dots == std::string::npos) {
            out.push_back(num(part));
            continue;
        }
        size_t lo = num(part.substr(0, dots)), hi = num(part.substr(dots + 2));
        if (lo > hi) throw UsageError("empty " + what + " range '" + part + "'");
        for (size_t v = lo; v <= hi; v++) out.push_back(v);
    }
    if (out.empty()) throw UsageError("empty " + what + " list");
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string hex64(uint64_t v) {
    std::ostringstream ss;
    ss << std::hex << std::setw(16) << std::setfill('0') << v;
    return ss.str();
}

/// FNV-1a over the file bytes.
std::string file_hash(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    uint64_t h = 0xcbf29ce484222325ULL;
    char c;
    while (in.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return hex64(h);
}

std::string rational_str(const Rational &r) { return r.get_str(); }

json support_json(const BinaryVector &v) { return v.support(); }

class Manifest {
   public:
    Manifest(std::string subcommand, const CLI::App &app) : start_(std::chrono::steady_clock::now()) {
        doc_["tool"] = "qcw";
        doc_["version"] = kVersion;
        doc_["subcommand"] = std::move(subcommand);
        json cfg = json::object();
        for (const CLI::Option *opt : app.get_options()) {
            if (opt->get_name() == "--help" || opt->get_name().empty()) continue;
            std::string key = opt->get_lnames().empty() ? opt->get_name() : opt->get_lnames().front();
            if (opt->get_type_size() == 0) {
                cfg[key] = opt->count() > 0;
            } else if (opt->count() > 0) {
                auto res = opt->results();
                cfg[key] = res.size() == 1 ? json(res.front()) : json(res);
            } else if (!opt->get_default_str().empty()) {
                cfg[key] = opt->get_default_str();
            }
        }
        doc_["config"] = cfg;
        doc_["inputs"] = json::object();
        doc_["outputs"] = json::array();
    }
    void set_seed(uint64_t seed) { doc_["seed"] = seed; }
    void input(const std::string &path) { doc_["inputs"][path] = file_hash(path); }
    void output(const std::string &rel) { doc_["outputs"].push_back(rel); }
    void write(const fs::path &dir) {
        doc_["wall_time_s"] =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        std::ofstream(dir / "manifest.json") << doc_.dump(2) << '\n';
    }

   private:
    json doc_;
    std::chrono::steady_clock::time_point start_;
};

fs::path prepare_dir(const std::string &out) {
    fs::path dir(out);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw UsageError("cannot create output directory " + out + ": " + ec.message());
    return dir;
}

/// Writes `text` to DIR/name when an output directory was given, else stdout.
void emit(const std::string &out_dir, const std::string &name, const std::string &text, Manifest &m) {
    if (out_dir.empty()) {
        std::cout << text;
        return;
    }
    fs::path dir = prepare_dir(out_dir);
    std::ofstream(dir / name) << text;
    m.output(name);
    m.write(dir);
}

struct CodeArgs {
    std::string code, hx, hz;

    void add(CLI::App *app) {
        app->add_option("--code", code, "JSON code envelope {family, n, hx, hz, metadata}");
        app->add_option("--hx", hx, "H_X as .alist or .bm");
        app->add_option("--hz", hz, "H_Z as .alist or .bm");
    }
    bool given() const { return !code.empty() || !hx.empty() || !hz.empty(); }

    std::pair<BinaryMatrix, BinaryMatrix> matrices(Manifest *m) const {
        std::string px = hx, pz = hz;
        if (!code.empty()) {
            if (!hx.empty() || !hz.empty()) throw UsageError("--code excludes --hx/--hz");
            std::ifstream in(code);
            if (!in) throw UsageError("cannot read " + code);
            json env;
            try {
                env = json::parse(in);
                if (env.value("family", std::string("css")) != "css") throw UsageError("only CSS envelopes are supported");
                fs::path base = fs::path(code).parent_path();
                px = (base / env.at("hx").get<std::string>()).string();
                pz = (base / env.at("hz").get<std::string>()).string();
            } catch (const json::exception &e) {
                throw UsageError("malformed code envelope " + code + ": " + e.what());
            }
            if (m) m->input(code);
        }
        if (px.empty() || pz.empty()) throw UsageError("a code needs --code or both --hx and --hz");
        BinaryMatrix mx, mz;
        try {
            mx = load_matrix(px);
            mz = load_matrix(pz);
        } catch (const std::runtime_error &e) {
            throw UsageError(e.what());
        }
        if (m) {
            m->input(px);
            m->input(pz);
        }
        if (mx.cols() != mz.cols()) throw UsageError("H_X and H_Z have different column counts");
        return {mx, mz};
    }

    CssCode load(Manifest *m) const {
        auto [mx, mz] = matrices(m);
        try {
            return CssCode(mx, mz);
        } catch (const MalformedCode &e) {
            throw UsageError(e.what());
        }
    }
};

std::vector<PauliOperator> read_paulis(const std::string &path, size_t &n) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::vector<PauliOperator> out;
    std::string line;
    n = 0;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::string s;
        for (char c : line) {
            if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
        }
        if (s.empty()) continue;
        try {
            out.push_back(PauliOperator::from_string(s));
        } catch (const std::exception &e) {
            throw UsageError(path + ": " + e.what());
        }
        if (n && out.back().size() != n) throw UsageError(path + ": Pauli strings of different lengths");
        n = out.back().size();
    }
    if (out.empty()) throw UsageError(path + ": no Pauli operators");
    return out;
}

json params_json(const CssParams &p) {
    return {{"n", p.n},         {"k", p.k},           {"w_x", p.w_x},       {"w_z", p.w_z},
            {"q_x", p.q_x},     {"q_z", p.q_z},       {"w", p.w()},         {"wbar_x", p.wbar_x},
            {"wbar_z", p.wbar_z}, {"wbar", p.wbar},   {"qbar", p.qbar}};
}

json matrix_rows(const BinaryMatrix &m) {
    json rows = json::array();
    for (size_t r = 0; r < m.rows(); r++) rows.push_back(m.row(r).str());
    return rows;
}

json surface_json(const SurfaceReport &rep) {
    json comps = json::array();
    for (const auto &c : rep.components) {
        comps.push_back({{"vertices", c.vertices}, {"edges", c.edges}, {"faces", c.faces}, {"euler", c.euler}, {"k", c.k}});
    }
    json removed = json::array();
    for (auto [a, b] : rep.removed_pairs) removed.push_back({a, b});
    return {{"recognized", rep.recognized}, {"components", comps},          {"removed_pairs", removed},
            {"split_checks", rep.split_checks}, {"diagnostics", rep.diagnostics}, {"qubits", rep.qubits},
            {"reduced", {{"hx", matrix_rows(rep.reduced.hx())}, {"hz", matrix_rows(rep.reduced.hz())}}}};
}

// ---------------------------------------------------------------------------
// bound

struct BoundArgs {
    std::string family = "css", n, d, w, out;
    bool strict = false, printed_stab = false, screen = false, certificates = false;
    size_t workers = 0;
};

int cmd_bound(const BoundArgs &a, const CLI::App &app) {
    Manifest m("bound", app);
    SweepSpec spec;
    try {
        spec.family = parse_family(a.family);
    } catch (const std::exception &e) {
        throw UsageError(e.what());
    }
    spec.ns = parse_counts(a.n, "n");
    spec.ds = parse_counts(a.d, "d");
    spec.ws = parse_counts(a.w, "w");
    if (spec.ns.front() == 0 || spec.ds.front() == 0 || spec.ws.front() == 0) throw UsageError("n, d and w must be positive");
    spec.options.drop_wide_rows = a.strict;
    spec.options.printed_stabilizer_weight_rows = a.printed_stab;
    BoundTable table = postprocess(sweep(spec, a.workers), spec.family);
    std::ostringstream csv;
    write_bound_csv(csv, table, a.strict ? "strict-paper" : "exact");

    if (a.out.empty()) {
        std::cout << csv.str();
        return kExitOk;
    }
    fs::path dir = prepare_dir(a.out);
    std::ofstream(dir / "bounds.csv") << csv.str();
    m.output("bounds.csv");

    if (a.certificates) {
        fs::create_directories(dir / "certificates");
        for (const auto &[key, cell] : table.cells) {
            if (cell.status == CellStatus::kSkipped) continue;
            auto [n, d, w] = key;
            MaxKResult r = max_feasible_k(spec.family, n, d, w, spec.options, true);
            json cert = {{"n", n}, {"d", d}, {"w", w}, {"family", family_name(spec.family)}};
            cert["k_bar1"] = r.k ? json(*r.k) : json(nullptr);
            json rows = json::array();
            for (const auto &[inst, y] : r.certificates) {
                json mult = json::array();
                for (const auto &v : y) mult.push_back(rational_str(v));
                rows.push_back({{"k", inst.k()},
                                {"k_x", inst.k_x},
                                {"k_z", inst.k_z},
                                {"verified", verify_farkas(inst.program, y)},
                                {"farkas", mult}});
            }
            cert["infeasible"] = rows;
            std::string name = "certificates/n" + std::to_string(n) + "_d" + std::to_string(d) + "_w" + std::to_string(w) + ".json";
            std::ofstream(dir / name) << cert.dump(1) << '\n';
            m.output(name);
        }
    }

    if (a.screen) {
        // Cells where the floating-point screen disagrees with the exact verdict.
        json advisory = json::array();
        for (const auto &[key, cell] : table.cells) {
            if (cell.status == CellStatus::kSkipped) continue;
            auto [n, d, w] = key;
            size_t k_next = cell.k_bar1 ? *cell.k_bar1 + 1 : 0;
            for (size_t k = k_next; k <= n && k <= k_next + 1; k++) {
                std::vector<std::pair<size_t, size_t>> splits =
                    spec.family == Family::kCss ? css_splits(n, k, w) : std::vector<std::pair<size_t, size_t>>{{k, k}};
                for (auto [kx, kz] : splits) {
                    LpInstance inst = spec.family == Family::kCss ? build_css_lp(n, d, w, kx, kz, spec.options)
                                                                  : build_stab_lp(n, d, w, k, spec.options);
                    LpResult res = solve_feasible(inst.program);
                    if (res.screen_feasible && *res.screen_feasible != res.feasible) {
                        advisory.push_back({{"n", n}, {"d", d}, {"w", w}, {"k_x", kx}, {"k_z", kz},
                                            {"screen_feasible", *res.screen_feasible}, {"exact_feasible", res.feasible}});
                    }
                }
            }
        }
        std::ofstream(dir / "advisory.json") << advisory.dump(2) << '\n';
        m.output("advisory.json");
    }
    m.write(dir);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// tanner-search

struct SearchArgs {
    std::string config, out, local_codes;
    uint64_t seed = 0;
    size_t workers = 0;
};

TannerSearchConfig read_search_config(const std::string &path, const std::string &library_override,
                                      std::string &library_path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception &e) {
        throw UsageError("config " + path + ": " + e.what());
    }
    static const std::set<std::string> known{"group",          "code_a",       "code_b",          "pairs",
                                              "permutations",   "seed",         "betas",           "keep",
                                              "allow_identity", "distance_trials", "certify_cap",  "certify_budget",
                                              "skip_trivial",   "local_codes"};
    for (const auto &[k, v] : j.items()) {
        if (!known.count(k)) throw UsageError("config " + path + ": unknown key '" + k + "'");
    }
    TannerSearchConfig cfg;
    try {
        cfg.group = j.at("group").get<std::string>();
        cfg.code_a = j.at("code_a").get<std::string>();
        cfg.code_b = j.at("code_b").get<std::string>();
        cfg.pairs = j.value("pairs", cfg.pairs);
        cfg.permutations = j.value("permutations", cfg.permutations);
        cfg.seed = j.value("seed", cfg.seed);
        cfg.betas = j.value("betas", cfg.betas);
        cfg.keep = j.value("keep", cfg.keep);
        cfg.allow_identity = j.value("allow_identity", cfg.allow_identity);
        cfg.distance_trials = j.value("distance_trials", cfg.distance_trials);
        cfg.certify_cap = j.value("certify_cap", cfg.certify_cap);
        cfg.certify_budget = j.value("certify_budget", cfg.certify_budget);
        cfg.skip_trivial = j.value("skip_trivial", cfg.skip_trivial);
        library_path = j.value("local_codes", std::string(QCW_DATA_DIR "/local_codes.json"));
        if (j.contains("local_codes")) library_path = (fs::path(path).parent_path() / library_path).string();
    } catch (const json::exception &e) {
        throw UsageError("config " + path + ": " + e.what());
    }
    if (!library_override.empty()) library_path = library_override;
    std::vector<LocalCode> lib;
    try {
        lib = load_local_codes(library_path);
        cfg.h_a = find_local_code(lib, cfg.code_a).h;
        cfg.h_b = find_local_code(lib, cfg.code_b).h;
        make_group(cfg.group);
        cfg.validate();
    } catch (const std::exception &e) {
        throw UsageError(e.what());
    }
    return cfg;
}

int cmd_tanner_search(const SearchArgs &a, const CLI::App &app) {
    Manifest m("tanner-search", app);
    std::string library_path;
    TannerSearchConfig cfg = read_search_config(a.config, a.local_codes, library_path);
    if (app.count("--seed")) cfg.seed = a.seed;
    m.input(a.config);
    m.input(library_path);
    m.set_seed(cfg.seed);
    fs::path dir = prepare_dir(a.out);
    fs::create_directories(dir / "codes");
    auto results = tanner_search(cfg, a.workers);
    FiniteGroup g = make_group(cfg.group);
    auto labels = [&](const GeneratingSet &s) {
        json out = json::array();
        for (uint32_t e : s.elements) out.push_back(g.labels[e]);
        return out;
    };
    std::ofstream lines(dir / "results.jsonl");
    for (size_t i = 0; i < results.size(); i++) {
        const TannerResult &r = results[i];
        char stem[32];
        std::snprintf(stem, sizeof stem, "%03zu", i);
        std::string hx = std::string(stem) + "_hx.alist", hz = std::string(stem) + "_hz.alist";
        save_matrix((dir / "codes" / hx).string(), r.code.hx());
        save_matrix((dir / "codes" / hz).string(), r.code.hz());
        json meta = {{"group", cfg.group}, {"code_a", cfg.code_a}, {"code_b", cfg.code_b}, {"A", labels(r.a)},
                     {"B", labels(r.b)},   {"perm_b", r.perm_b},   {"bipartite", r.bipartite}};
        json env = {{"family", "css"}, {"n", r.code.n()}, {"hx", hx}, {"hz", hz}, {"metadata", meta}};
        std::ofstream(dir / "codes" / (std::string(stem) + ".json")) << env.dump(2) << '\n';
        json scores = json::object();
        for (size_t b = 0; b < cfg.betas.size(); b++) {
            std::ostringstream key;
            key << cfg.betas[b];
            scores[key.str()] = r.scores[b];
        }
        json line = {{"rank", i},
                     {"construction", "quantum tanner"},
                     {"n", r.code.n()},
                     {"k", r.code.k()},
                     {"d_x", r.d_x},
                     {"d_z", r.d_z},
                     {"d", r.d()},
                     {"w", r.params.w()},
                     {"certified", r.certified},
                     {"failure_bound", r.failure_bound},
                     {"params", params_json(r.params)},
                     {"scores", scores},
                     {"pair_index", r.pair_index},
                     {"perm_index", r.perm_index},
                     {"hash", hex64(r.hash)},
                     {"code", "codes/" + std::string(stem) + ".json"}};
        line["metadata"] = meta;
        lines << line.dump() << '\n';
        m.output("codes/" + std::string(stem) + ".json");
    }
    m.output("results.jsonl");
    lines.close();
    m.write(dir);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// distance / certify

struct DistanceArgs {
    CodeArgs code;
    size_t trials = 50000, stop_at = 0, workers = 0;
    uint64_t seed = 0;
    std::string out;
};

int cmd_distance(const DistanceArgs &a, const CLI::App &app) {
    Manifest m("distance", app);
    m.set_seed(a.seed);
    CssCode c = a.code.load(&m);
    if (c.k() == 0) throw UsageError("code encodes no logical qubits; distance is undefined");
    EstimateOptions opts;
    opts.trials = a.trials;
    opts.seed = a.seed;
    opts.stop_at = a.stop_at;
    opts.workers = a.workers;
    DistanceEstimate e = estimate_distance(c, opts);
    auto type = [](const TypeEstimate &t) {
        return json{{"d_upper", t.d_upper},
                    {"hits", t.hits},
                    {"distinct", t.distinct},
                    {"mean_hits", rational_str(t.mean_hits())},
                    {"failure_bound", t.failure_bound()},
                    {"witness", support_json(t.witness)}};
    };
    json out = {{"n", c.n()},     {"k", c.k()},           {"trials", e.trials}, {"d_upper", e.d_upper()},
                {"x", type(e.x)}, {"z", type(e.z)},       {"failure_bound", e.failure_bound()}};
    emit(a.out, "distance.json", out.dump(2) + "\n", m);
    return kExitOk;
}

struct CertifyArgs {
    CodeArgs code;
    size_t t = 0, cap = 9;
    uint64_t budget = 200'000'000;
    std::string out;
};

int cmd_certify(const CertifyArgs &a, const CLI::App &app) {
    Manifest m("certify", app);
    CssCode c = a.code.load(&m);
    CertifyOptions opts;
    opts.cap = a.cap;
    opts.budget = a.budget;
    auto start = std::chrono::steady_clock::now();
    json out = {{"claimed_d", a.t}};
    int code = kExitOk;
    try {
        Certificate cert = certify_distance(c, a.t, opts);
        out["verified"] = cert.verified;
        out["enumerated_count"] = cert.enumerated;
        if (cert.witness) {
            out["witness"] = support_json(*cert.witness);
            out["witness_type"] = cert.witness_is_x ? "X" : "Z";
            out["witness_weight"] = cert.witness->weight();
        }
        if (!cert.verified) code = kExitVerify;
    } catch (const BudgetExceeded &e) {
        out["verified"] = false;
        out["error"] = e.what();
        out["enumerated_count"] = e.required();
        code = kExitBudget;
    } catch (const std::invalid_argument &e) {
        out["verified"] = false;
        out["error"] = e.what();
        code = kExitBudget;
    }
    out["wall_time"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    emit(a.out, "certificate.json", out.dump(2) + "\n", m);
    return code;
}

// ---------------------------------------------------------------------------
// subsystem / surface

struct SubsystemArgs {
    std::string matrix, gauge, out;
};

json matrix_report(const BinaryMatrix &a, size_t n) {
    json out = {{"a", matrix_rows(a)}, {"ones", a.count_ones()}};
    if (a.rows() == 0 || a.cols() == 0) {
        out["rank"] = 0;
        return out;
    }
    try {
        MatrixDistances d = matrix_distances(a);
        size_t dmin = std::min(d.d_row, d.d_col);
        out["rank"] = d.rank;
        out["d_row"] = d.d_row;
        out["d_col"] = d.d_col;
        if (d.rank > 0) {
            out["d_le_sqrt_n"] = static_cast<double>(dmin) <= std::sqrt(static_cast<double>(n));
            out["kd_le_n"] = d.rank * dmin <= n;
        }
    } catch (const std::length_error &e) {
        out["rank"] = rank(a);
        out["distance_error"] = e.what();
    }
    return out;
}

int cmd_subsystem(const SubsystemArgs &a, const CLI::App &app) {
    Manifest m("subsystem", app);
    if (a.matrix.empty() == a.gauge.empty()) throw UsageError("give exactly one of --matrix or --gauge");
    json out;
    BinaryMatrix mat;
    SubsystemCode code;
    if (!a.matrix.empty()) {
        try {
            mat = load_matrix(a.matrix);
            code = subsystem_from_matrix(mat);
        } catch (const std::exception &e) {
            throw UsageError(e.what());
        }
        m.input(a.matrix);
        out["direction"] = "matrix-to-code";
    } else {
        size_t n = 0;
        auto ops = read_paulis(a.gauge, n);
        m.input(a.gauge);
        code = SubsystemCode(n, ops);
        try {
            mat = analyze_weight2_subsystem(code);
        } catch (const UnsupportedGauge &e) {
            throw UsageError(e.what());
        }
        out["direction"] = "code-to-matrix";
    }
    out["n"] = code.n();
    json gauge = json::array();
    for (const auto &g : code.gauge()) gauge.push_back(g.str());
    out["gauge"] = gauge;
    out["matrix"] = matrix_report(mat, code.n());
    if (code.n() <= 24) out["k"] = subsystem_decompose(code).k;
    if (code.n() <= 22) {
        auto [dx, dz] = subsystem_css_distances(code);
        out["d_x"] = dx;
        out["d_z"] = dz;
    }
    if (!a.out.empty()) {
        fs::path dir = prepare_dir(a.out);
        if (mat.rows() && mat.cols()) {
            save_matrix((dir / "A.alist").string(), mat);
            m.output("A.alist");
        }
        std::ofstream g(dir / "gauge.txt");
        for (const auto &op : code.gauge()) g << op.str() << '\n';
        m.output("gauge.txt");
    }
    emit(a.out, "subsystem.json", out.dump(2) + "\n", m);
    return kExitOk;
}

struct SurfaceArgs {
    CodeArgs code;
    std::string out;
};

int cmd_surface(const SurfaceArgs &a, const CLI::App &app) {
    Manifest m("surface", app);
    CssCode c = a.code.load(&m);
    json out;
    int code = kExitOk;
    try {
        SurfaceReport rep = check_surface(c);
        out = surface_json(rep);
        if (!rep.recognized) code = kExitVerify;
    } catch (const SurfaceRejected &e) {
        out = {{"recognized", false}, {"rejected", e.what()}};
        code = kExitVerify;
    }
    emit(a.out, "surface.json", out.dump(2) + "\n", m);
    return code;
}

// ---------------------------------------------------------------------------
// frontier

struct FrontierArgs {
    std::vector<std::string> bounds, results;
    std::string literature = QCW_DATA_DIR "/literature.csv", w_cap = "4,6,8,10", out;
    size_t d_min = 2;
};

int cmd_frontier(const FrontierArgs &a, const CLI::App &app) {
    Manifest m("frontier", app);
    std::vector<CodePoint> bounds, instances;
    auto open = [&](const std::string &p) {
        auto in = std::make_unique<std::ifstream>(p);
        if (!*in) throw UsageError("cannot read " + p);
        m.input(p);
        return in;
    };
    try {
        for (const auto &p : a.bounds) {
            auto pts = read_bound_points(*open(p));
            bounds.insert(bounds.end(), pts.begin(), pts.end());
        }
        for (const auto &p : a.results) {
            auto pts = read_result_points(*open(p), "search");
            instances.insert(instances.end(), pts.begin(), pts.end());
        }
        if (!a.literature.empty()) {
            auto pts = read_literature_csv(*open(a.literature));
            instances.insert(instances.end(), pts.begin(), pts.end());
        }
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    } catch (const json::exception &e) {
        throw UsageError(e.what());
    }
    std::ostringstream csv;
    write_frontier_csv(csv, bounds, instances, parse_counts(a.w_cap, "w cap"), a.d_min);
    emit(a.out, "frontier.csv", csv.str(), m);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
    CodeArgs code;
    std::string gauge, out;
    size_t t = 0;
    uint64_t budget = 50'000'000;
};

int cmd_verify(const VerifyArgs &a, const CLI::App &app) {
    Manifest m("verify", app);
    if (!a.code.given() && a.gauge.empty()) throw UsageError("nothing to verify: give a code or --gauge");
    json checks = json::array();
    bool failed = false;
    auto record = [&](const std::string &name, const std::string &status, json detail) {
        checks.push_back({{"check", name}, {"status", status}, {"detail", std::move(detail)}});
        failed = failed || status == "FAIL";
    };
    if (a.code.given()) {
        auto [hx, hz] = a.code.matrices(&m);
        bool commute = hx.multiply_transpose(hz).is_zero();
        record("commutation", commute ? "PASS" : "FAIL", json{{"rows_x", hx.rows()}, {"rows_z", hz.rows()}});
        if (commute) {
            CssCode c(hx, hz);
            CssParams p = css_params(c);
            record("params", "PASS", params_json(p));
            CertifyOptions opts;
            opts.budget = a.budget;
            if (c.k() == 0) {
                record("distance", "SKIP", "no logical qubits");
            } else if (a.t) {
                try {
                    Certificate cert = certify_distance(c, a.t, opts);
                    json d = {{"claimed_d", a.t}, {"enumerated_count", cert.enumerated}};
                    if (cert.witness) d["witness"] = support_json(*cert.witness);
                    record("distance", cert.verified ? "PASS" : "FAIL", d);
                } catch (const std::exception &e) {
                    record("distance", "SKIP", e.what());
                }
            } else {
                try {
                    record("distance", "PASS", json{{"d", exact_distance(c, opts)}});
                } catch (const std::exception &e) {
                    record("distance", "SKIP", e.what());
                }
            }
            try {
                SurfaceReport rep = check_surface(c);
                size_t ksum = 0;
                for (const auto &comp : rep.components) ksum += comp.k;
                if (!rep.recognized) {
                    record("surface", "SKIP", surface_json(rep));
                } else {
                    record("surface", ksum == c.k() ? "PASS" : "FAIL", surface_json(rep));
                }
            } catch (const SurfaceRejected &e) {
                record("surface", "SKIP", std::string("not in the weight-4 two-checks-per-qubit class: ") + e.what());
            }
        }
    }
    if (!a.gauge.empty()) {
        size_t n = 0;
        auto ops = read_paulis(a.gauge, n);
        m.input(a.gauge);
        SubsystemCode code(n, ops);
        try {
            BinaryMatrix mat = analyze_weight2_subsystem(code);
            json rep = matrix_report(mat, n);
            size_t k = subsystem_decompose(code).k;
            rep["k"] = k;
            record("subsystem", rep["rank"].get<size_t>() == k ? "PASS" : "FAIL", rep);
            if (rep.contains("d_le_sqrt_n")) {
                bool ok = rep["d_le_sqrt_n"].get<bool>() && rep["kd_le_n"].get<bool>();
                record("subsystem_bounds", ok ? "PASS" : "FAIL",
                       json{{"d", std::min(rep["d_row"].get<size_t>(), rep["d_col"].get<size_t>())}, {"k", k}, {"n", n}});
            }
        } catch (const UnsupportedGauge &e) {
            record("subsystem", "SKIP", e.what());
        } catch (const std::length_error &e) {
            record("subsystem", "SKIP", e.what());
        }
    }
    json out = {{"checks", checks}, {"ok", !failed}};
    emit(a.out, "verify.json", out.dump(2) + "\n", m);
    return failed ? kExitVerify : kExitOk;
}

// ---------------------------------------------------------------------------
// falsify-w3

struct FalsifyArgs {
    size_t n_exhaustive = 5, random_n = 8;
    uint64_t trials = 100000, seed = 0;
    std::string out;
};

int cmd_falsify(const FalsifyArgs &a, const CLI::App &app) {
    Manifest m("falsify-w3", app);
    m.set_seed(a.seed);
    FalsifierOptions opts;
    opts.n_exhaustive = a.n_exhaustive;
    opts.random_n = a.random_n;
    opts.random_trials = a.trials;
    opts.seed = a.seed;
    FalsifierReport rep;
    try {
        rep = falsify_weight3(opts);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    json ces = json::array();
    for (const auto &c : rep.counterexamples) {
        json checks = json::array();
        for (const auto &p : c.code.checks()) checks.push_back(p.str());
        ces.push_back({{"n", c.code.n()}, {"k", c.k}, {"checks", checks}});
    }
    json out = {{"n_exhaustive", a.n_exhaustive},
                {"random_n", a.random_n},
                {"exhaustive_codes", rep.exhaustive_codes},
                {"random_codes", rep.random_codes},
                {"codes_with_logicals", rep.codes_with_logicals},
                {"counterexamples", ces}};
    emit(a.out, "falsify.json", out.dump(2) + "\n", m);
    return rep.counterexamples.empty() ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"qcw: check-weight-constrained quantum code workbench"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    BoundArgs bound;
    auto *sb = app.add_subcommand("bound", "LP upper bounds on k over an (n, d, w) grid");
    sb->add_option("--family", bound.family, "css or stabilizer")->capture_default_str();
    sb->add_option("--n", bound.n, "block lengths, e.g. 3..20")->required();
    sb->add_option("--d", bound.d, "distances, e.g. 2..5 or 3")->required();
    sb->add_option("--w", bound.w, "check weights, e.g. 3,4,6")->required();
    sb->add_flag("--strict-paper", bound.strict, "drop rows with coefficient range above 1e10");
    sb->add_flag("--printed-stab-rows", bound.printed_stab, "stabilizer weight rows summed from i = 1");
    sb->add_flag("--float-screen", bound.screen, "write advisory.json comparing the float screen to exact verdicts");
    sb->add_flag("--certificates", bound.certificates, "write Farkas certificates for infeasible instances");
    sb->add_option("--out", bound.out, "output directory (default: CSV to stdout)");
    sb->add_option("--workers", bound.workers, "worker threads (default: QCW_WORKERS or 1)");

    SearchArgs search;
    auto *ss = app.add_subcommand("tanner-search", "randomized quantum Tanner code search");
    ss->add_option("--config", search.config, "JSON search config")->required();
    ss->add_option("--out", search.out, "output directory")->required();
    ss->add_option("--seed", search.seed, "overrides the config seed");
    ss->add_option("--local-codes", search.local_codes, "local code library JSON");
    ss->add_option("--workers", search.workers, "worker threads");

    DistanceArgs dist;
    auto *sd = app.add_subcommand("distance", "randomized distance upper bound");
    dist.code.add(sd);
    sd->add_option("--trials", dist.trials, "trials per type")->capture_default_str();
    sd->add_option("--seed", dist.seed, "random seed")->capture_default_str();
    sd->add_option("--stop-at", dist.stop_at, "stop once this bound is reached (0: never)");
    sd->add_option("--workers", dist.workers, "worker threads");
    sd->add_option("--out", dist.out, "output directory");

    CertifyArgs cert;
    auto *sc = app.add_subcommand("certify", "prove that no logical of weight below t exists");
    cert.code.add(sc);
    sc->add_option("--t", cert.t, "claimed distance")->required();
    sc->add_option("--cap", cert.cap, "largest t accepted")->capture_default_str();
    sc->add_option("--budget", cert.budget, "enumeration budget")->capture_default_str();
    sc->add_option("--out", cert.out, "output directory");

    SubsystemArgs sub;
    auto *sy = app.add_subcommand("subsystem", "weight-2 subsystem code <-> binary matrix");
    sy->add_option("--matrix", sub.matrix, "matrix A (.alist or .bm): build the code");
    sy->add_option("--gauge", sub.gauge, "gauge generators, one Pauli string per line: extract A");
    sy->add_option("--out", sub.out, "output directory");

    SurfaceArgs surf;
    auto *su = app.add_subcommand("surface", "recognize a generalized surface code");
    surf.code.add(su);
    su->add_option("--out", surf.out, "output directory");

    FrontierArgs fr;
    auto *sf = app.add_subcommand("frontier", "rate-distance frontier and scatter data");
    sf->add_option("--bounds", fr.bounds, "bound CSV files");
    sf->add_option("--results", fr.results, "search result JSON-lines files");
    sf->add_option("--literature", fr.literature, "literature CSV ('' to skip)")->capture_default_str();
    sf->add_option("--w-cap", fr.w_cap, "check-weight caps")->capture_default_str();
    sf->add_option("--d-min", fr.d_min, "smallest distance kept")->capture_default_str();
    sf->add_option("--out", fr.out, "output directory");

    VerifyArgs ver;
    auto *sv = app.add_subcommand("verify", "run all applicable checks on a code");
    ver.code.add(sv);
    sv->add_option("--gauge", ver.gauge, "weight-2 subsystem gauge file");
    sv->add_option("--t", ver.t, "claimed distance to certify (default: compute exactly)");
    sv->add_option("--budget", ver.budget, "enumeration budget")->capture_default_str();
    sv->add_option("--out", ver.out, "output directory");

    FalsifyArgs fa;
    auto *sw = app.add_subcommand("falsify-w3", "search for weight-3 stabilizer codes with k >= 1 and d >= 3");
    sw->add_option("--n-exhaustive", fa.n_exhaustive, "exhaustive scan up to this n (<= 6)")->capture_default_str();
    sw->add_option("--random-n", fa.random_n, "qubits in randomized mode")->capture_default_str();
    sw->add_option("--trials", fa.trials, "randomized codes")->capture_default_str();
    sw->add_option("--seed", fa.seed, "random seed")->capture_default_str();
    sw->add_option("--out", fa.out, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*sb) return cmd_bound(bound, *sb);
        if (*ss) return cmd_tanner_search(search, *ss);
        if (*sd) return cmd_distance(dist, *sd);
        if (*sc) return cmd_certify(cert, *sc);
        if (*sy) return cmd_subsystem(sub, *sy);
        if (*su) return cmd_surface(surf, *su);
        if (*sf) return cmd_frontier(fr, *sf);
        if (*sv) return cmd_verify(ver, *sv);
        if (*sw) return cmd_falsify(fa, *sw);
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const BudgetExceeded &e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    }
    return kExitUsage;
}
