#include "spectra/serialize.hpp"

namespace spectra {

namespace {

Json counts_to_json(const TypeVector& p) {
    Json a = Json::array();
    for (long c : p.counts) a.push_back(c);
    return a;
}

TypeVector counts_from_json(const Json& j, int q) {
    std::vector<long> counts;
    for (const auto& v : j) counts.push_back(v.get<long>());
    return TypeVector(q, std::move(counts));
}

}  // namespace

Json spectrum_to_json(const Spectrum& s) {
    Json j;
    j["arity"] = 1;
    j["q"] = s.q;
    j["n"] = s.n;
    Json entries = Json::array();
    for (const auto& [p, v] : s.entries)
        entries.push_back(Json{{"P", counts_to_json(p)}, {"value", rat_to_string(v)}});
    j["entries"] = std::move(entries);
    return j;
}

Json joint_spectrum_to_json(const JointSpectrum& s) {
    Json j;
    j["arity"] = 2;
    j["qx"] = s.qx;
    j["n"] = s.n;
    j["qy"] = s.qy;
    j["m"] = s.m;
    Json entries = Json::array();
    for (const auto& [key, v] : s.entries)
        entries.push_back(Json{
            {"P", counts_to_json(key.first)}, {"Q", counts_to_json(key.second)}, {"value", rat_to_string(v)}});
    j["entries"] = std::move(entries);
    return j;
}

Json cond_spectrum_to_json(const CondSpectrum& s) {
    Json j;
    j["q_in"] = s.q_in;
    j["n_in"] = s.n_in;
    j["q_out"] = s.q_out;
    j["n_out"] = s.n_out;
    Json slices = Json::array();
    for (const auto& [p, sl] : s.slices)
        slices.push_back(Json{{"given", counts_to_json(p)}, {"spectrum", spectrum_to_json(sl)}});
    j["slices"] = std::move(slices);
    return j;
}

Spectrum spectrum_from_json(const Json& j) {
    if (j.at("arity").get<int>() != 1) throw ConstraintError("expected an arity-1 spectrum");
    Spectrum s{j.at("q").get<int>(), j.at("n").get<long>(), {}};
    for (const auto& e : j.at("entries"))
        s.entries.emplace(counts_from_json(e.at("P"), s.q), rat_from_string(e.at("value").get<std::string>()));
    return s;
}

JointSpectrum joint_spectrum_from_json(const Json& j) {
    if (j.at("arity").get<int>() != 2) throw ConstraintError("expected an arity-2 spectrum");
    JointSpectrum s{j.at("qx").get<int>(), j.at("n").get<long>(), j.at("qy").get<int>(), j.at("m").get<long>(), {}};
    for (const auto& e : j.at("entries"))
        s.entries.emplace(std::make_pair(counts_from_json(e.at("P"), s.qx), counts_from_json(e.at("Q"), s.qy)),
                          rat_from_string(e.at("value").get<std::string>()));
    return s;
}

Json genpoly_to_json(const GenPoly& g) {
    Json j;
    j["nu"] = g.nu();
    j["nv"] = g.nv();
    Json terms = Json::array();
    for (const auto& [e, c] : g.terms())
        terms.push_back(Json{{"exponents", e}, {"value", rat_to_string(c)}});
    j["terms"] = std::move(terms);
    return j;
}

Json ensemble_spec_to_json(const EnsembleSpec& spec) {
    Json j;
    j["kind"] = spec.kind_name();
    if (const auto* rlc = std::get_if<RlcParams>(&spec.kind)) {
        j["q"] = rlc->q;
        j["n"] = rlc->n;
        j["m"] = rlc->m;
    } else if (const auto* chk = std::get_if<ChkParallelParams>(&spec.kind)) {
        j["q"] = chk->q;
        j["d"] = chk->d;
        j["m"] = chk->m;
    } else {
        const auto& ld = std::get<LdgmParams>(spec.kind);
        j["q"] = ld.q;
        j["n"] = ld.n;
        j["c"] = ld.c;
        j["d"] = ld.d;
    }
    j["seed"] = spec.seed;
    return j;
}

EnsembleSpec ensemble_spec_from_json(const Json& j) {
    EnsembleSpec spec;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "rlc")
        spec.kind = RlcParams{j.at("q").get<int>(), j.at("n").get<long>(), j.at("m").get<long>()};
    else if (kind == "chk")
        spec.kind = ChkParallelParams{j.at("q").get<int>(), j.at("d").get<long>(), j.at("m").get<long>()};
    else if (kind == "ldgm")
        spec.kind = LdgmParams{j.at("q").get<int>(), j.at("n").get<long>(), j.at("c").get<long>(),
                               j.at("d").get<long>()};
    else
        throw ConstraintError("unknown ensemble kind: " + kind);
    spec.seed = j.value("seed", 0ULL);
    return spec;
}

Json mc_estimate_to_json(const McEstimate& e) {
    return Json{{"target", e.target}, {"mean", e.mean},          {"std_err", e.std_err},
                {"trials", e.trials}, {"seed", e.seed}};
}

}  // namespace spectra
