#pragma once

#include <cstddef>
#include <string>

#include <nlohmann/json.hpp>

#include "addcomb/bounds.hpp"
#include "addcomb/covering.hpp"
#include "addcomb/fourier.hpp"
#include "addcomb/growth.hpp"
#include "addcomb/pipeline.hpp"
#include "addcomb/rectify.hpp"
#include "addcomb/torsion.hpp"

namespace addcomb {

// Structured documents with a stable field order. Floating-point values are
// rounded to 12 significant digits, rationals are written as "p/q" strings
// and big integers as decimal strings when they leave the int64 range.
using Json = nlohmann::ordered_json;

// Spectra of groups larger than this are written as their top entries only.
inline constexpr std::int64_t kFullSpectrumLimit = std::int64_t{1} << 16;

Json json_number(double x);
Json json_rational(const Rational& q);
Json json_bigint(const BigInt& x);

Json to_json(const DoublingRatios& r);
Json to_json(const DiameterWitness& w);
Json to_json(const SpectrumReport& s, std::size_t top = 8);
Json to_json(const ConvolutionCounts& c);
Json to_json(const MomentReport& m);
Json to_json(const LargeCoeffParameters& p);
Json to_json(const LargeCoefficientCertificate& c);
Json to_json(const PluenneckeWitness& w);
Json to_json(const CoveringCertificate& c);
Json to_json(const GrowthBoundReport& r);
Json to_json(const JBoundReport& r);
Json to_json(const GrowthTable& t);
Json to_json(const LevResult& r);
Json to_json(const GapCoverResult& r);
Json to_json(const DiamSpectrumReport& r);
Json to_json(const IsoCheck& r);
Json to_json(const RectifyResult& r);
Json to_json(const IntegerModel& m);
Json to_json(const SubgroupCosetCertificate& c);
Json to_json(const BoundReport& r);
Json to_json(const Theorem1Report& r);

// "key: value" lines, nested keys joined by '.'.
std::string to_human(const Json& doc);

}  // namespace addcomb
