#pragma once

#include <string>

#include <json.hpp>

#include "perlef/bigint.hpp"
#include "perlef/classifier.hpp"
#include "perlef/harness.hpp"
#include "perlef/homology.hpp"
#include "perlef/lefschetz.hpp"
#include "perlef/spectrum.hpp"

namespace perlef::io {

using nlohmann::json;

/// Number when |v| < 2^53, decimal string otherwise.
json to_json(const BigInt& v);
BigInt bigint_from_json(const json& j, const std::string& field);

/// Parses {"name": ..., "h": {"<degree>": [[...], ...]}}.
GradedHomologyAction parse_action(const json& doc);
json serialize_action(const GradedHomologyAction& action);

/// Parses {"family": ..., "coeffs": ..., "domain": ..., "action": ...}.
MapSpec parse_map(const json& doc);

json polynomial_coeffs(const IntPolynomial& p);

json lefschetz_fragment(const LefschetzSequence& seq);
json zeta_fragment(const RationalFunction& z);
json spectrum_fragment(const SpectrumSummary& s);
json classification_fragment(const ClassificationResult& r);
json verification_fragment(const VerificationReport& r);

json load_file(const std::string& path);

}  // namespace perlef::io
