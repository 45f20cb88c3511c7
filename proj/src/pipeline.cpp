#include "hmrnet/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "hmrnet/ap.hpp"
#include "hmrnet/error.hpp"
#include "hmrnet/parallel.hpp"

namespace hmrnet {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

SimilarityMatrix prepared_similarity(const HomogeneousLayer& layer, const PreferenceStrategy& pref) {
    return set_preferences(shortest_path_similarity(layer), pref);
}

json metrics_json(const MetricsReport& m) {
    json j;
    if (m.accuracy_percent) j["accuracy_percent"] = *m.accuracy_percent;
    if (m.nmi) j["nmi"] = *m.nmi;
    if (m.vi) j["vi"] = *m.vi;
    j["modularity"] = m.modularity ? json(*m.modularity) : json(nullptr);
    j["mean_conductance"] = m.mean_conductance;
    j["mean_tpr"] = m.mean_tpr;
    j["mean_cut_ratio"] = m.mean_cut_ratio;
    j["internal_triangles"] = m.internal_triangles;
    json per = json::array();
    for (const auto& c : m.per_community)
        per.push_back({{"size", c.size}, {"conductance", c.conductance}, {"tpr", c.tpr}, {"cut_ratio", c.cut_ratio}});
    j["per_community"] = std::move(per);
    return j;
}

json layer_json(const LayerOutcome& l) {
    return {{"exemplars", l.labels.exemplar},
            {"communities", l.partition.community_of},
            {"community_count", l.partition.community_count()},
            {"metrics", metrics_json(l.metrics)}};
}

}  // namespace

void RunConfig::validate() const {
    mp().validate();
    if (const auto* fixed = std::get_if<FixedPreference>(&preference); fixed && !std::isfinite(fixed->value))
        throw UsageError("preference must be finite");
    if (bicliques.min_x < 1 || bicliques.min_y < 1 || bicliques.cap < 1)
        throw UsageError("biclique minima and cap must be at least 1");
}

MPConfig RunConfig::mp() const {
    MPConfig c;
    c.m_penalty = m_penalty;
    c.damping = damping;
    c.max_iterations = max_iterations;
    c.stable_window = stable_window;
    c.tie_noise = tie_noise;
    c.seed = seed;
    return c;
}

Detection detect(const RunConfig& cfg, const NetworkFile& input) {
    cfg.validate();
    const HMRNet& net = input.net;
    Detection out;

    auto t = Clock::now();
    const SimilarityMatrix sx = prepared_similarity(net.layer_x, cfg.preference);
    const SimilarityMatrix sy = prepared_similarity(net.layer_y, cfg.preference);
    out.timings.similarity_ms = elapsed_ms(t);

    if (cfg.algorithm == Algorithm::AP) {
        if (!net.hetero.empty())
            out.notices.push_back("heterogeneous links ignored by the ap algorithm (" +
                                  std::to_string(net.hetero.edge_count()) + " links)");
        t = Clock::now();
        const APConfig ap = cfg.mp().ap();
        const APResult rx = ap_solve(sx, ap, cfg.seed);
        const APResult ry = ap_solve(sy, ap, cfg.seed);
        out.timings.solver_ms = elapsed_ms(t);
        out.x.labels = rx.labels;
        out.x.iterations = rx.iterations_run;
        out.x.converged = rx.converged;
        out.y.labels = ry.labels;
        out.y.iterations = ry.iterations_run;
        out.y.converged = ry.converged;
    } else {
        t = Clock::now();
        const auto bicliques = enumerate_maximal_bicliques(net.hetero, cfg.bicliques);
        out.timings.bicliques_ms = elapsed_ms(t);
        out.biclique_count = bicliques.size();
        out.factors_inert = bicliques.empty() || cfg.m_penalty == 0.0;
        if (bicliques.empty())
            out.notices.push_back("no bicliques meet the size minima; biclique factors are inert");
        else if (cfg.m_penalty == 0.0)
            out.notices.push_back("m_penalty is 0; biclique factors are inert");

        t = Clock::now();
        MPResult r = mp_run(net, sx, sy, bicliques, cfg.mp());
        out.timings.solver_ms = elapsed_ms(t);
        out.x.labels = std::move(r.x);
        out.y.labels = std::move(r.y);
        out.x.iterations = out.y.iterations = r.diagnostics.iterations_run;
        out.x.converged = out.y.converged = r.diagnostics.converged;
        out.joint_objective = joint_objective(out.x.labels, out.y.labels, sx, sy, bicliques, cfg.m_penalty);
        out.inconsistent_bicliques = inconsistent_biclique_count(out.x.labels, out.y.labels, bicliques);
        out.mp_diagnostics = std::move(r.diagnostics);
    }

    t = Clock::now();
    out.x.partition = partition_from_labeling(out.x.labels);
    out.y.partition = partition_from_labeling(out.y.labels);
    out.x.metrics = evaluate(out.x.partition, net.layer_x, input.truth_x);
    out.y.metrics = evaluate(out.y.partition, net.layer_y, input.truth_y);
    out.timings.metrics_ms = elapsed_ms(t);
    return out;
}

json config_json(const RunConfig& cfg) {
    json pref;
    if (const auto* fixed = std::get_if<FixedPreference>(&cfg.preference))
        pref = {{"kind", "fixed"}, {"value", fixed->value}};
    else
        pref = {{"kind", "median"}};
    return {{"algorithm", cfg.algorithm == Algorithm::AP ? "ap" : "mp"},
            {"m_penalty", cfg.m_penalty},
            {"damping", cfg.damping},
            {"stable_window", cfg.stable_window},
            {"max_iterations", cfg.max_iterations},
            {"preference", pref},
            {"biclique_min_x", cfg.bicliques.min_x},
            {"biclique_min_y", cfg.bicliques.min_y},
            {"biclique_cap", cfg.bicliques.cap},
            {"seed", cfg.seed},
            {"tie_noise", cfg.tie_noise}};
}

json detect_report(const RunConfig& cfg, const NetworkFile& input, const Detection& result,
                   const std::string& input_name, bool with_timings) {
    const HMRNet& net = input.net;
    json report;
    report["input"] = input_name;
    report["config"] = config_json(cfg);
    report["network"] = {{"x_nodes", net.layer_x.node_count()},
                         {"y_nodes", net.layer_y.node_count()},
                         {"x_edges", net.layer_x.edge_count()},
                         {"y_edges", net.layer_y.edge_count()},
                         {"hetero_edges", net.hetero.edge_count()},
                         {"has_truth_x", input.truth_x.has_value()},
                         {"has_truth_y", input.truth_y.has_value()}};
    report["notices"] = result.notices;
    report["layers"] = {{"x", layer_json(result.x)}, {"y", layer_json(result.y)}};

    json diag;
    if (cfg.algorithm == Algorithm::AP) {
        diag["x"] = {{"iterations", result.x.iterations}, {"converged", result.x.converged}};
        diag["y"] = {{"iterations", result.y.iterations}, {"converged", result.y.converged}};
    } else {
        const MPDiagnostics& d = *result.mp_diagnostics;
        diag["iterations"] = d.iterations_run;
        diag["converged"] = d.converged;
        diag["biclique_count"] = result.biclique_count;
        diag["biclique_factors_inert"] = result.factors_inert;
        diag["inconsistent_bicliques"] = result.inconsistent_bicliques;
        diag["joint_objective"] = *result.joint_objective;
        diag["objective_trace"] = d.objective_trace;
        diag["label_change_counts"] = d.label_change_counts;
    }
    report["diagnostics"] = std::move(diag);

    if (with_timings) {
        const Timings& t = result.timings;
        report["timings_ms"] = {{"similarity", t.similarity_ms},
                                {"bicliques", t.bicliques_ms},
                                {"solver", t.solver_ms},
                                {"metrics", t.metrics_ms}};
    }
    return report;
}

void write_atomically(const std::filesystem::path& path, const std::function<void(std::ostream&)>& writer) {
    std::filesystem::path tmp = path;
    tmp += ".partial";
    try {
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out) throw InputError("cannot open " + tmp.string() + " for writing");
            writer(out);
            out.flush();
            if (!out) throw InputError("write to " + tmp.string() + " failed");
        }
        std::filesystem::rename(tmp, path);
    } catch (...) {
        std::error_code ec;
        std::filesystem::remove(tmp, ec);
        throw;
    }
}

SyntheticInstance generate_instance(const GeneratorParams& params) {
    if (params.kind == GeneratorKind::Synth2)
        return generate_synthetic_II(params.k, params.p_intra, params.p_inter, params.seed, params.link_model);
    SynthSpec spec;
    spec.p_intra = params.p_intra;
    spec.p_inter = params.p_inter;
    spec.seed = params.seed;
    spec.link_model = params.link_model;
    return generate(spec);
}

const std::string& sweep_csv_header() {
    static const std::string header =
        "cell,m_penalty,k,p_intra,p_inter,seed,algorithm,layer,communities,accuracy_percent,nmi,vi,"
        "modularity,mean_conductance,mean_tpr,mean_cut_ratio,internal_triangles,iterations,converged";
    return header;
}

namespace {

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string opt_num(const std::optional<double>& v) { return v ? num(*v) : std::string(); }

double round12(double v) { return std::round(v * 1e12) / 1e12; }

struct CellKey {
    std::size_t cell;
    double m;
    std::size_t k;
    double p_intra;
    double p_inter;
    std::uint64_t seed;
};

std::string csv_row(const CellKey& key, const char* algo, const char* layer, const LayerOutcome& o) {
    const MetricsReport& m = o.metrics;
    std::ostringstream row;
    row << key.cell << ',' << num(key.m) << ',' << key.k << ',' << num(key.p_intra) << ',' << num(key.p_inter) << ','
        << key.seed << ',' << algo << ',' << layer << ',' << o.partition.community_count() << ','
        << opt_num(m.accuracy_percent) << ',' << opt_num(m.nmi) << ',' << opt_num(m.vi) << ','
        << opt_num(m.modularity) << ',' << num(m.mean_conductance) << ',' << num(m.mean_tpr) << ','
        << num(m.mean_cut_ratio) << ',' << m.internal_triangles << ',' << o.iterations << ','
        << (o.converged ? 1 : 0) << '\n';
    return row.str();
}

LayerOutcome finish(Labeling labels, const HomogeneousLayer& layer, const Partition& truth, std::size_t iterations,
                    bool converged) {
    LayerOutcome o;
    o.partition = partition_from_labeling(labels);
    o.labels = std::move(labels);
    o.metrics = evaluate(o.partition, layer, truth);
    o.iterations = iterations;
    o.converged = converged;
    return o;
}

}  // namespace

void run_sweep(const SweepConfig& cfg, std::ostream& out) {
    cfg.base.validate();
    if (cfg.m_values.empty() && cfg.p_inter_values.empty()) throw UsageError("empty grid: give an M grid or a pIO grid");
    if (cfg.seeds.empty()) throw UsageError("empty seed list");
    for (double m : cfg.m_values)
        if (!(m >= 0.0) || !std::isfinite(m)) throw UsageError("M grid values must be finite and >= 0");
    for (double p : cfg.p_inter_values)
        if (!(p >= 0.0 && p <= 1.0)) throw UsageError("pIO grid values must lie in [0, 1]");

    const std::vector<double> ms = cfg.m_values.empty() ? std::vector<double>{cfg.base.m_penalty} : cfg.m_values;
    const bool p_grid = !cfg.p_inter_values.empty();
    const std::vector<double> ps = p_grid ? cfg.p_inter_values : std::vector<double>{cfg.generator.p_inter};
    const std::size_t k = cfg.generator.kind == GeneratorKind::Synth2 ? cfg.generator.k : 10;

    // rows[(p * seeds + s) * ms + m] holds the four rows of that run.
    const std::size_t n_seeds = cfg.seeds.size();
    std::vector<std::string> rows(ps.size() * n_seeds * ms.size());

    parallel_for(ps.size() * n_seeds, [&](std::size_t unit) {
        const std::size_t pi = unit / n_seeds;
        const std::size_t si = unit % n_seeds;
        GeneratorParams gp = cfg.generator;
        gp.seed = cfg.seeds[si];
        if (p_grid) {
            gp.p_inter = ps[pi];
            gp.p_intra = round12(1.0 - ps[pi]);
        }
        const SyntheticInstance inst = generate_instance(gp);
        const SimilarityMatrix sx = prepared_similarity(inst.net.layer_x, cfg.base.preference);
        const SimilarityMatrix sy = prepared_similarity(inst.net.layer_y, cfg.base.preference);
        const auto bicliques = enumerate_maximal_bicliques(inst.net.hetero, cfg.base.bicliques);

        RunConfig run = cfg.base;
        run.seed = gp.seed;
        const APConfig ap = run.mp().ap();
        const APResult ax = ap_solve(sx, ap, run.seed);
        const APResult ay = ap_solve(sy, ap, run.seed);
        const LayerOutcome ap_x = finish(ax.labels, inst.net.layer_x, inst.truth_x, ax.iterations_run, ax.converged);
        const LayerOutcome ap_y = finish(ay.labels, inst.net.layer_y, inst.truth_y, ay.iterations_run, ay.converged);

        for (std::size_t mi = 0; mi < ms.size(); ++mi) {
            run.m_penalty = ms[mi];
            MPResult r = mp_run(inst.net, sx, sy, bicliques, run.mp());
            const auto& d = r.diagnostics;
            const LayerOutcome mp_x = finish(std::move(r.x), inst.net.layer_x, inst.truth_x, d.iterations_run, d.converged);
            const LayerOutcome mp_y = finish(std::move(r.y), inst.net.layer_y, inst.truth_y, d.iterations_run, d.converged);
            const CellKey key{pi * ms.size() + mi, ms[mi], k, gp.p_intra, gp.p_inter, gp.seed};
            rows[unit * ms.size() + mi] = csv_row(key, "ap", "x", ap_x) + csv_row(key, "ap", "y", ap_y) +
                                          csv_row(key, "mp", "x", mp_x) + csv_row(key, "mp", "y", mp_y);
        }
    });

    out << sweep_csv_header() << '\n';
    for (std::size_t pi = 0; pi < ps.size(); ++pi)
        for (std::size_t mi = 0; mi < ms.size(); ++mi)
            for (std::size_t si = 0; si < n_seeds; ++si) out << rows[(pi * n_seeds + si) * ms.size() + mi];
}

std::vector<double> arithmetic_grid(double start, double stop, double step) {
    if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step))
        throw UsageError("grid bounds must be finite");
    if (!(step > 0.0)) throw UsageError("grid step must be positive");
    std::vector<double> out;
    if (stop < start) throw UsageError("empty grid: stop is below start");
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    if (count > 1000000) throw UsageError("grid too large");
    for (std::size_t i = 0; i < count; ++i) out.push_back(round12(start + static_cast<double>(i) * step));
    return out;
}

std::vector<double> parse_grid(const std::string& text) {
    auto parse_number = [&](const std::string& token) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(token, &used);
        } catch (const std::exception&) {
            throw UsageError("malformed grid '" + text + "'");
        }
        if (used != token.size()) throw UsageError("malformed grid '" + text + "'");
        return v;
    };
    auto split = [](const std::string& s, char sep) {
        std::vector<std::string> parts;
        std::string part;
        std::istringstream in(s);
        while (std::getline(in, part, sep)) parts.push_back(part);
        if (!s.empty() && s.back() == sep) parts.emplace_back();
        return parts;
    };

    if (text.find(':') != std::string::npos) {
        const auto parts = split(text, ':');
        if (parts.size() != 3) throw UsageError("grid range must be start:step:stop");
        return arithmetic_grid(parse_number(parts[0]), parse_number(parts[2]), parse_number(parts[1]));
    }
    std::vector<double> out;
    for (const auto& p : split(text, ',')) out.push_back(round12(parse_number(p)));
    if (out.empty()) throw UsageError("empty grid");
    return out;
}

}  // namespace hmrnet
