#pragma once

#include <nlohmann/json.hpp>

#include "bispec/bispectral.hpp"

namespace bispec {

using nlohmann::json;

// Scalars are rational strings ("-20/9"); polynomials are arrays of scalars,
// low degree first. Malformed input throws Error(kUsage).
void to_json(json& j, const Rational& r);
void from_json(const json& j, Rational& r);
void to_json(json& j, const Poly& p);
void from_json(const json& j, Poly& p);
void to_json(json& j, const RationalFunction& f);
void from_json(const json& j, RationalFunction& f);
void to_json(json& j, const DiffOp& a);
void from_json(const json& j, DiffOp& a);
void to_json(json& j, const BesselIndex& b);
void from_json(const json& j, BesselIndex& b);
void to_json(json& j, const QuasiPolynomial& q);
void from_json(const json& j, QuasiPolynomial& q);
void to_json(json& j, const Window& w);
void from_json(const json& j, Window& w);
void to_json(json& j, const WaveSeries& s);
void from_json(const json& j, WaveSeries& s);

void to_json(json& j, const AtZeroGroup& g);
void from_json(const json& j, AtZeroGroup& g);
void to_json(json& j, const AtPointGroup& g);
void from_json(const json& j, AtPointGroup& g);
void to_json(json& j, const KernelSpec& s);
void from_json(const json& j, KernelSpec& s);

void to_json(json& j, const Witnesses& w);
void from_json(const json& j, Witnesses& w);
void to_json(json& j, const DarbouxCertificate& c);
void from_json(const json& j, DarbouxCertificate& c);
void to_json(json& j, const BuildStats& s);

void to_json(json& j, const Involution& v);
void to_json(json& j, const BispectralPair& p);
void to_json(json& j, const VerifyReport& r);
void to_json(json& j, const ClosedForm& c);
void to_json(json& j, const SpectralAlgebraReport& r);
void to_json(json& j, const BetaPrime& b);

// Parses text, mapping syntax errors to Error(kUsage).
json parse_json(const std::string& text);

}  // namespace bispec
