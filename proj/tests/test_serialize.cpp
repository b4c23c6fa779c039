#include <doctest.h>

#include "spectra/serialize.hpp"

using namespace spectra;

TEST_CASE("spectrum json schema and round trip") {
    Spectrum s = ambient_spectrum(3, 2);
    Json j = spectrum_to_json(s);
    CHECK(j["arity"] == 1);
    CHECK(j["q"] == 2);
    CHECK(j["n"] == 3);
    CHECK(j["entries"].is_array());
    CHECK(spectrum_from_json(j).entries == s.entries);
}

TEST_CASE("joint spectrum json matches the documented shape") {
    JointSpectrum s = joint_spectrum_of_map(rep_parallel(2, 1, 3).generator());
    // restrict to a 3 -> 2 map for a mixed-shape case
    FieldMatrix g(FieldSpec(2), 2, 3, {1, 0, 0, 0, 1, 0});
    s = joint_spectrum_of_map(g);
    Json j = joint_spectrum_to_json(s);
    CHECK(j["arity"] == 2);
    CHECK(j["qx"] == 2);
    CHECK(j["n"] == 3);
    CHECK(j["qy"] == 2);
    CHECK(j["m"] == 2);
    bool found = false;
    for (const auto& e : j["entries"]) {
        REQUIRE(e.contains("P"));
        REQUIRE(e.contains("Q"));
        REQUIRE(e["value"].is_string());
        if (e["P"] == Json::array({2, 1}) && e["Q"] == Json::array({1, 1})) {
            found = true;
            CHECK(e["value"] == "1/4");
        }
    }
    CHECK(found);
    CHECK(joint_spectrum_from_json(j).entries == s.entries);
}

TEST_CASE("conditional spectrum serialization carries the conditioning type") {
    JointSpectrum s = joint_spectrum_of_map(rep_parallel(3, 2, 2).generator());
    Json j = cond_spectrum_to_json(forward_conditional(s));
    CHECK(j["q_in"] == 3);
    CHECK(j["n_in"] == 2);
    CHECK(j["n_out"] == 4);
    REQUIRE(!j["slices"].empty());
    for (const auto& slice : j["slices"]) {
        REQUIRE(slice.contains("given"));
        REQUIRE(slice["spectrum"]["entries"].is_array());
    }
}

TEST_CASE("genpoly serialization") {
    GenPoly g = genpoly_from_spectrum(ambient_spectrum(2, 2));
    Json j = genpoly_to_json(g);
    REQUIRE(j["terms"].is_array());
    CHECK(j["terms"].size() == g.terms().size());
    for (const auto& t : j["terms"]) {
        REQUIRE(t.contains("exponents"));
        REQUIRE(t["value"].is_string());
    }
}

TEST_CASE("ensemble spec round trip") {
    for (EnsembleSpec spec : {EnsembleSpec{RlcParams{3, 4, 2}, 11},
                              EnsembleSpec{ChkParallelParams{5, 3, 2}, 12},
                              EnsembleSpec{LdgmParams{3, 4, 2, 2}, 13}}) {
        Json j = ensemble_spec_to_json(spec);
        CHECK(j["seed"] == spec.seed);
        CHECK(j["kind"] == spec.kind_name());
        EnsembleSpec back = ensemble_spec_from_json(j);
        CHECK(back.seed == spec.seed);
        CHECK(back.kind_name() == spec.kind_name());
        CHECK(ensemble_spec_to_json(back) == j);
    }
}

TEST_CASE("mc estimate serialization records the run context") {
    McEstimate e{0.5, 0.01, 1000, 42, "rank rate"};
    Json j = mc_estimate_to_json(e);
    CHECK(j["mean"] == 0.5);
    CHECK(j["std_err"] == 0.01);
    CHECK(j["trials"] == 1000);
    CHECK(j["seed"] == 42);
    CHECK(j["target"] == "rank rate");
}

TEST_CASE("malformed json is rejected") {
    CHECK_THROWS(spectrum_from_json(Json::object()));
    Json j = spectrum_to_json(ambient_spectrum(2, 2));
    j["entries"][0]["value"] = "not-a-rational";
    CHECK_THROWS(spectrum_from_json(j));
    Json joint = joint_spectrum_to_json(joint_spectrum_of_map(FieldMatrix::identity(FieldSpec(2), 1)));
    CHECK_THROWS_AS(spectrum_from_json(joint), ConstraintError);
}
