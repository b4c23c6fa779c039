#pragma once

#include <json.hpp>

#include "spectra/codes.hpp"
#include "spectra/genpoly.hpp"
#include "spectra/montecarlo.hpp"
#include "spectra/spectrum.hpp"

namespace spectra {

using Json = nlohmann::ordered_json;

Json spectrum_to_json(const Spectrum& s);
Json joint_spectrum_to_json(const JointSpectrum& s);
Json cond_spectrum_to_json(const CondSpectrum& s);

Spectrum spectrum_from_json(const Json& j);
JointSpectrum joint_spectrum_from_json(const Json& j);

Json genpoly_to_json(const GenPoly& g);

Json ensemble_spec_to_json(const EnsembleSpec& spec);
EnsembleSpec ensemble_spec_from_json(const Json& j);

Json mc_estimate_to_json(const McEstimate& e);

}  // namespace spectra
