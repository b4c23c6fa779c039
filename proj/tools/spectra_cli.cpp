#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "spectra/bounds.hpp"
#include "spectra/montecarlo.hpp"
#include "spectra/serialize.hpp"

using namespace spectra;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitConstraint = 3;
constexpr int kExitVerify = 4;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    // write-then-rename so a partial file never lands at the target path
    std::string tmp = out_path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw ConstraintError("cannot open output file: " + tmp);
        f << text;
    }
    if (std::rename(tmp.c_str(), out_path.c_str()) != 0)
        throw ConstraintError("cannot move output into place: " + out_path);
}

void emit_json(const Json& j, const std::string& out_path) { emit(j.dump(2) + "\n", out_path); }

int run_spectrum(const std::string& matrix_path, long limit, const std::string& out_path) {
    FieldMatrix a = parse_matrix_file(matrix_path);
    JointSpectrum joint = joint_spectrum_of_map(a, limit);
    SpectrumDecomposition dec = marginals_and_conditionals(joint);
    Json j;
    j["config"] = Json{{"command", "spectrum"}, {"matrix", matrix_path}, {"limit", limit}};
    j["joint"] = joint_spectrum_to_json(joint);
    j["marginal_input"] = spectrum_to_json(dec.marginal_x);
    j["marginal_output"] = spectrum_to_json(dec.marginal_y);
    j["conditional_output_given_input"] = cond_spectrum_to_json(dec.y_given_x);
    j["conditional_input_given_output"] = cond_spectrum_to_json(dec.x_given_y);
    j["kernel"] = spectrum_to_json(kernel_spectrum(a, limit));
    emit_json(j, out_path);
    return kExitOk;
}

Json structural_stats(const FieldMatrix& g) {
    Json row_weights = Json::array(), col_weights = Json::array();
    for (std::size_t i = 0; i < g.rows(); ++i) {
        long w = 0;
        for (std::size_t jc = 0; jc < g.cols(); ++jc) w += g.at(i, jc) != 0;
        row_weights.push_back(w);
    }
    for (std::size_t jc = 0; jc < g.cols(); ++jc) {
        long w = 0;
        for (std::size_t i = 0; i < g.rows(); ++i) w += g.at(i, jc) != 0;
        col_weights.push_back(w);
    }
    return Json{{"rank", g.rank()}, {"row_weights", row_weights}, {"col_weights", col_weights}};
}

int run_ldgm(int q, long n, long c, long d, std::uint64_t seed, long limit,
             const std::string& out_path) {
    LdgmParams params{q, n, c, d};
    long m = params.output_len();
    if (q == 2)
        std::cerr << "warning: the sparse-generator goodness guarantee needs a field larger "
                     "than F_2; q=2 codes are constructible but not covered by it\n";
    Rng rng = Rng::stream(seed, 0);
    LdgmSample sample = sample_ldgm(q, n, c, d, rng);
    Json j;
    j["config"] = Json{{"command", "ldgm"}, {"q", q},       {"n", n},
                       {"c", c},            {"d", d},       {"m", m},
                       {"seed", seed},      {"limit", limit}};
    j["generator"] = matrix_to_string(sample.code.generator());
    j["stats"] = structural_stats(sample.code.generator());
    Int domain = int_pow(q, static_cast<unsigned long>(n));
    if (domain <= limit)
        j["joint_spectrum"] = joint_spectrum_to_json(joint_spectrum_of_map(sample.code.generator(), limit));
    emit_json(j, out_path);
    return kExitOk;
}

int run_rlc(int q, long n, long m, std::uint64_t seed, long limit, const std::string& out_path) {
    Rng rng = Rng::stream(seed, 0);
    LinearCodeMatrix code = sample_rlc(q, n, m, rng);
    Json j;
    j["config"] = Json{{"command", "rlc"}, {"q", q},         {"n", n},
                       {"m", m},           {"seed", seed},   {"limit", limit}};
    j["generator"] = matrix_to_string(code.generator());
    j["stats"] = structural_stats(code.generator());
    Int domain = int_pow(q, static_cast<unsigned long>(n));
    if (domain <= limit)
        j["joint_spectrum"] = joint_spectrum_to_json(joint_spectrum_of_map(code.generator(), limit));
    emit_json(j, out_path);
    return kExitOk;
}

int run_delta_d(int q, long d, double gamma, double grid, double delta, const std::string& format,
                const std::string& out_path) {
    if (grid <= 0.0 || grid > 1.0) throw ConstraintError("--grid must lie in (0, 1]");
    struct Row {
        double x, y, value, minimizer;
    };
    std::vector<Row> rows;
    for (double x = grid; x < 1.0 - 1e-12; x += grid)
        for (double y = 0.0; y <= 1.0 + 1e-12; y += grid) {
            DeltaDParams r = delta_d(q, d, x, std::min(y, 1.0));
            rows.push_back({x, std::min(y, 1.0), r.value, r.minimizer});
        }
    double sup = sup_delta_d(q, d, gamma);
    if (format == "csv") {
        std::ostringstream os;
        os << "# command=delta-d q=" << q << " d=" << d << " gamma=" << gamma << " grid=" << grid
           << "\n";
        os << "x,y,value,minimizer\n";
        os.precision(12);
        for (const Row& r : rows)
            os << r.x << "," << r.y << "," << r.value << "," << r.minimizer << "\n";
        os << "# sup over x in [0 1-gamma)," << sup << "\n";
        emit(os.str(), out_path);
    } else {
        Json j;
        j["config"] = Json{{"command", "delta-d"}, {"q", q},       {"d", d},          {"gamma", gamma},
                           {"grid", grid},         {"delta", delta}, {"format", format}};
        Json table = Json::array();
        for (const Row& r : rows)
            table.push_back(Json{{"x", r.x}, {"y", r.y}, {"value", r.value}, {"minimizer", r.minimizer}});
        j["table"] = std::move(table);
        j["sup_over_admissible_x"] = sup;
        if (delta > 0.0) {
            std::optional<long> d0 = d0_search(q, gamma, delta, 1.0, 64);
            j["least_degree_meeting_delta"] = d0 ? Json(*d0) : Json(nullptr);
        }
        emit_json(j, out_path);
    }
    return kExitOk;
}

int run_rank(int q, long n, long m, const std::string& out_path) {
    Rat exact = rank_full_probability(q, n, m);
    Json j;
    j["config"] = Json{{"command", "rank"}, {"q", q}, {"n", n}, {"m", m}};
    j["full_rank_probability"] = rat_to_string(exact);
    j["full_rank_probability_decimal"] = rat_to_double(exact);
    Json bounds = Json::array();
    for (long k = 1; k <= m; ++k)
        bounds.push_back(Json{{"k", k}, {"lower_bound", rat_to_string(rank_lower_bound(q, n, m, k))}});
    j["lower_bounds"] = std::move(bounds);
    emit_json(j, out_path);
    return kExitOk;
}

int run_goodness(int q, long n, long m, long c, long d, long limit, const std::string& out_path) {
    Json j;
    JointSpectrum e_s;
    if (c > 0 && d > 0) {
        LdgmParams params{q, n, c, d};
        m = params.output_len();
        if (q == 2)
            std::cerr << "warning: the sparse-generator goodness guarantee needs a field larger "
                         "than F_2\n";
        e_s = exact_ldgm_expected_joint(q, n, c, d, limit);
        j["config"] = Json{{"command", "goodness"}, {"ensemble", "ldgm"}, {"q", q}, {"n", n},
                           {"c", c},                {"d", d},             {"m", m}, {"limit", limit}};
    } else {
        if (m <= 0) throw ConstraintError("goodness needs either --m or both --c and --d");
        e_s = exact_rlc_expected_joint(q, n, m, limit);
        j["config"] = Json{{"command", "goodness"}, {"ensemble", "rlc"}, {"q", q},
                           {"n", n},                {"m", m},            {"limit", limit}};
    }
    j["expected_joint_spectrum"] = joint_spectrum_to_json(e_s);
    Json alphas = Json::array();
    for (const auto& [key, v] : alpha_of_expected_spectrum(e_s))
        alphas.push_back(Json{{"P", Json(key.first.counts)}, {"Q", Json(key.second.counts)},
                              {"alpha", rat_to_string(v)}});
    j["alpha"] = std::move(alphas);
    j["jscc_goodness_exponent"] = jscc_goodness(e_s);
    emit_json(j, out_path);
    return kExitOk;
}

int run_mc(const std::string& kind, int q, long n, long m, long c, long d, std::uint64_t seed,
           long trials, long limit, const std::string& out_path) {
    EnsembleSpec spec;
    spec.seed = seed;
    if (kind == "rlc")
        spec.kind = RlcParams{q, n, m};
    else if (kind == "chk")
        spec.kind = ChkParallelParams{q, d, m};
    else if (kind == "ldgm")
        spec.kind = LdgmParams{q, n, c, d};
    else
        throw ConstraintError("unknown ensemble kind: " + kind);
    auto est = estimate_expected_spectrum(spec, trials, limit);
    Json j;
    j["config"] = Json{{"command", "mc"}, {"trials", trials}, {"limit", limit}};
    j["ensemble"] = ensemble_spec_to_json(spec);
    Json entries = Json::array();
    for (const auto& [key, e] : est) {
        Json row = mc_estimate_to_json(e);
        row["P"] = Json(key.first.counts);
        row["Q"] = Json(key.second.counts);
        entries.push_back(std::move(row));
    }
    j["estimates"] = std::move(entries);
    emit_json(j, out_path);
    return kExitOk;
}

int run_verify(double tol) {
    struct Invariant {
        std::string name;
        bool ok;
    };
    std::vector<Invariant> results;
    auto check = [&](const std::string& name, bool ok) { results.push_back({name, ok}); };

    {
        Spectrum amb = ambient_spectrum(4, 3);
        check("ambient spectrum sums to one", amb.total() == 1);
    }
    check("full-rank probability 2x2 over F_2 is 3/8",
          rank_full_probability(2, 2, 2) == make_rat(3, 8));
    check("full-rank probability exceeds the universal floor",
          rank_full_probability(2, 8, 8) > make_rat(1, 4));
    {
        auto law = checksum_distribution(3, 2);
        check("checksum law at q=3 d=2",
              law[0] == make_rat(1, 2) && law[1] == make_rat(1, 4) && law[2] == make_rat(1, 4));
    }
    {
        JointSpectrum e_s = exact_rlc_expected_joint(2, 2, 2);
        bool flat = true;
        for (const auto& [key, v] : alpha_of_expected_spectrum(e_s))
            if (!key.first.is_zero_type() && v != 1) flat = false;
        check("random-linear-code expected spectrum is flat off the zero type", flat);
        check("random-linear-code joint exponent is zero", jscc_goodness(e_s) == 0.0);
    }
    {
        JointSpectrum exact = exact_chk_parallel_expected_joint(3, 2, 1);
        check("closed-form parallel-check spectrum matches exhaustive averaging",
              expected_chk_parallel_joint(3, 2, 1).entries == exact.entries);
    }
    {
        bool ok = true;
        for (int yi = 0; yi <= 4; ++yi)
            ok = ok && delta_d(3, 4, 1.0 / 3.0, yi / 4.0).value <= tol;
        check("distance exponent is nonpositive at the uniform marginal", ok);
    }
    {
        JointSpectrum s = joint_spectrum_of_map(rep_parallel(2, 2, 2).generator());
        bool diag = true;
        for (const auto& [key, v] : s.entries) diag = diag && key.second == key.first.scaled(2);
        check("repetition-layer joint spectrum is diagonal", diag);
    }

    bool all_ok = true;
    for (const auto& r : results) {
        std::cout << (r.ok ? "ok   " : "FAIL ") << r.name << "\n";
        all_ok = all_ok && r.ok;
    }
    if (!all_ok) {
        std::cout << "verification failed\n";
        return kExitVerify;
    }
    std::cout << "all invariants hold\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"code spectrum toolkit"};
    app.require_subcommand(1);

    int q = 2;
    long n = 1, m = 0, c = 0, d = 0, limit = kDefaultDomainLimit, trials = 1000;
    double gamma = 0.5, delta = 0.1, tol = 1e-9, grid = 0.05;
    std::uint64_t seed = 0;
    std::string out_path, format = "json", matrix_path, kind = "rlc";

    auto* sp = app.add_subcommand("spectrum", "exact spectra of an explicit generator matrix");
    sp->add_option("matrix", matrix_path, "matrix file: \"q m n\" then m rows")->required();
    sp->add_option("--limit", limit, "enumeration guard on the domain size");
    sp->add_option("--out", out_path, "output file (stdout when omitted)");

    auto* ld = app.add_subcommand("ldgm", "sample a sparse-generator code");
    ld->add_option("--q", q, "field size (prime)")->required();
    ld->add_option("--n", n, "input length")->required();
    ld->add_option("--c", c, "repetitions per input symbol")->required();
    ld->add_option("--d", d, "check degree")->required();
    ld->add_option("--seed", seed, "master seed");
    ld->add_option("--limit", limit, "enumeration guard for the optional exact spectrum");
    ld->add_option("--out", out_path, "output file");

    auto* rl = app.add_subcommand("rlc", "sample a dense random linear code");
    rl->add_option("--q", q)->required();
    rl->add_option("--n", n)->required();
    rl->add_option("--m", m, "output length")->required();
    rl->add_option("--seed", seed);
    rl->add_option("--limit", limit);
    rl->add_option("--out", out_path);

    auto* dd = app.add_subcommand("delta-d", "distance exponent table");
    dd->add_option("--q", q)->required();
    dd->add_option("--d", d, "check degree")->required();
    dd->add_option("--gamma", gamma, "weight threshold for the sup column");
    dd->add_option("--grid", grid, "step of the (x, y) table");
    dd->add_option("--delta", delta, "target exponent for the degree search");
    dd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    dd->add_option("--out", out_path);

    auto* rk = app.add_subcommand("rank", "exact full-rank probability of a uniform matrix");
    rk->add_option("--q", q)->required();
    rk->add_option("--n", n, "columns")->required();
    rk->add_option("--m", m, "rows")->required();
    rk->add_option("--out", out_path);

    auto* gd = app.add_subcommand("goodness", "exact ensemble spectrum flatness exponents");
    gd->add_option("--q", q)->required();
    gd->add_option("--n", n)->required();
    gd->add_option("--m", m, "output length (dense ensemble)");
    gd->add_option("--c", c, "repetitions (sparse ensemble)");
    gd->add_option("--d", d, "check degree (sparse ensemble)");
    gd->add_option("--limit", limit);
    gd->add_option("--out", out_path);

    auto* mc = app.add_subcommand("mc", "Monte Carlo spectrum estimates");
    mc->add_option("--kind", kind)->check(CLI::IsMember({"rlc", "chk", "ldgm"}))->required();
    mc->add_option("--q", q)->required();
    mc->add_option("--n", n);
    mc->add_option("--m", m);
    mc->add_option("--c", c);
    mc->add_option("--d", d);
    mc->add_option("--seed", seed);
    mc->add_option("--trials", trials);
    mc->add_option("--limit", limit);
    mc->add_option("--out", out_path);

    auto* vf = app.add_subcommand("verify", "run the built-in invariant suite");
    vf->add_option("--tol", tol, "tolerance for floating-point invariants");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (sp->parsed()) return run_spectrum(matrix_path, limit, out_path);
        if (ld->parsed()) return run_ldgm(q, n, c, d, seed, limit, out_path);
        if (rl->parsed()) return run_rlc(q, n, m, seed, limit, out_path);
        if (dd->parsed()) return run_delta_d(q, d, gamma, grid, delta, format, out_path);
        if (rk->parsed()) return run_rank(q, n, m, out_path);
        if (gd->parsed()) return run_goodness(q, n, m, c, d, limit, out_path);
        if (mc->parsed()) return run_mc(kind, q, n, m, c, d, seed, trials, limit, out_path);
        if (vf->parsed()) return run_verify(tol);
    } catch (const ConstraintError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConstraint;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConstraint;
    }
    return kExitUsage;
}
