#include <array>
#include <utility>

#include "json.hpp"
#include "wirsing/bounds.hpp"
#include "wirsing/errors.hpp"

namespace wirsing {

namespace {

constexpr std::array<std::pair<FormulaId, const char*>, 24> kNames = {{
    {FormulaId::PHI, "PHI"},
    {FormulaId::EQUILIBRIUM, "EQUILIBRIUM"},
    {FormulaId::F, "F"},
    {FormulaId::G, "G"},
    {FormulaId::R, "R"},
    {FormulaId::S, "S"},
    {FormulaId::C_GAMMA, "C_GAMMA"},
    {FormulaId::H11, "H11"},
    {FormulaId::H21, "H21"},
    {FormulaId::VERYNEW, "VERYNEW"},
    {FormulaId::WINDAG, "WINDAG"},
    {FormulaId::TOLL, "TOLL"},
    {FormulaId::DAVSCHM, "DAVSCHM"},
    {FormulaId::TOLLER_1, "TOLLER_1"},
    {FormulaId::TOLLER_2, "TOLLER_2"},
    {FormulaId::TOLLER_3, "TOLLER_3"},
    {FormulaId::STRONG_TOLL, "STRONG_TOLL"},
    {FormulaId::EVEN_N_LOWER, "EVEN_N_LOWER"},
    {FormulaId::EVEN_N_UPPER, "EVEN_N_UPPER"},
    {FormulaId::CONSISTENCY_MAX, "CONSISTENCY_MAX"},
    {FormulaId::GAMMA0, "GAMMA0"},
    {FormulaId::DELTA, "DELTA"},
    {FormulaId::ALPHA0, "ALPHA0"},
    {FormulaId::INV_SQRT3, "INV_SQRT3"},
}};

}  // namespace

std::string to_string(FormulaId id) {
  for (const auto& [k, name] : kNames) {
    if (k == id) return name;
  }
  return "UNKNOWN";
}

FormulaId formula_id_from_string(const std::string& name) {
  for (const auto& [k, n] : kNames) {
    if (name == n) return k;
  }
  throw InputError("unknown formula id '" + name + "'");
}

BoundReport make_report(FormulaId id, std::map<std::string, Rational> params, int digits,
                        const std::function<RealInterval(const Rational& width)>& eval) {
  if (digits < 0) throw DomainError("digits must be non-negative");
  BoundReport r;
  r.formula_id = id;
  r.params = std::move(params);
  r.display_digits = digits;
  const Rational floor_width = pow10(-200 - digits);
  for (Rational w = pow10(-(digits + 12)); w >= floor_width; w *= pow10(-20)) {
    r.value = eval(w);
    if (auto d = truncated_decimal(r.value, digits)) {
      r.display = *d;
      return r;
    }
  }
  throw PrecisionError("could not certify " + std::to_string(digits) + " digits of " + to_string(id));
}

std::string report_to_json(const BoundReport& r, int endpoint_digits) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["formula_id"] = to_string(r.formula_id);
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = to_string(v);
  j["params"] = params;
  j["lo"] = to_decimal_down(r.value.lo(), endpoint_digits);
  j["hi"] = to_decimal_up(r.value.hi(), endpoint_digits);
  j["display"] = r.display;
  j["flags"] = r.flags;
  return j.dump();
}

}  // namespace wirsing
