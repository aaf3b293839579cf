#ifndef SINGCLASS_REPORT_JSON_HPP
#define SINGCLASS_REPORT_JSON_HPP

#include <json.hpp>

#include "singclass/engine.hpp"

namespace singclass {

/* JSON is the machine contract: rationals are "p/q" strings (never
 * floats), y-polynomials are exponent -> coefficient maps, classes are
 * arrays of y-polynomials indexed by the h-power. Every emitter has a
 * parser and parse(emit(x)) == x. */

nlohmann::json to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json to_json(const YPolynomial& p);
YPolynomial ypoly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PowerSeries& s);
PowerSeries series_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CohomologyClass& c);
CohomologyClass class_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ConstructibleFunction& f);
ConstructibleFunction constructible_from_json(const nlohmann::json& j);

nlohmann::json to_json(const LocalizedClass& c);
LocalizedClass localized_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ClassReport& r);
ClassReport class_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GeneraReport& r);
GeneraReport genera_from_json(const nlohmann::json& j);

nlohmann::json to_json(const VerifyReport& r);
VerifyReport verify_from_json(const nlohmann::json& j);

} // namespace singclass

#endif
