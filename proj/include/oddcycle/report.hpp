#pragma once

#include <string>

#include "json.hpp"
#include "oddcycle/extremal.hpp"
#include "oddcycle/kelmans.hpp"
#include "oddcycle/matching.hpp"
#include "oddcycle/polynomial.hpp"
#include "oddcycle/roots.hpp"
#include "oddcycle/skew.hpp"

namespace oddcycle {

using Json = nlohmann::ordered_json;

inline constexpr int kJsonSchema = 1;

/// Coefficients from the constant term up, as decimal strings.
Json to_json(const IntPolynomial& p);
Json to_json(const MatchingProfile& profile);
/// {"decimal", "lo", "hi", "polynomial"}; lo and hi are exact rationals.
Json to_json(const AlgebraicRoot& root, int digits);
/// {"start", "steps": [{"phase", "u", "v", "moved": [[v, w], ...],
/// "graph6"}], "final"}.
Json to_json(const ReductionTrace& trace);
/// {"graph6", "mask"}.
Json to_json(const Orientation& o);
/// Everything but the timing lives outside the "seconds" field, so two runs
/// differ only there.
Json to_json(const VerificationReport& report);

/// Plain-text rendering of a verification report.
std::string to_table(const VerificationReport& report);

}  // namespace oddcycle
