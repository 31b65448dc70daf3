#include "hyperfns/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#ifndef HYPERFNS_DEFAULT_FIXTURES
#define HYPERFNS_DEFAULT_FIXTURES "fixtures"
#endif

namespace hyperfns::io {

namespace {

double parse_decimal(const std::string& s) {
  // strtod handles arbitrarily long mantissas; the oracle writes 50 digits.
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0')
    throw Error(ErrorCode::InvalidArgument, "bad decimal string in fixture: " + s);
  return v;
}

Complex parse_value(const json& j) {
  if (j.is_string()) return {parse_decimal(j.get<std::string>()), 0.0};
  if (j.is_object()) return {parse_decimal(j.at("re").get<std::string>()), parse_decimal(j.at("im").get<std::string>())};
  if (j.is_number()) return {j.get<double>(), 0.0};
  throw Error(ErrorCode::InvalidArgument, "fixture values must be decimal strings or {re, im}");
}

}  // namespace

std::string format_double(double x) {
  if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

json to_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json to_json(const EvalResult& r) {
  return json{{"value", to_json(r.value)}, {"abs_err", r.abs_err}, {"status", to_string(r.status)}};
}

json to_json(const hc::CoeffTable& t) {
  json values = json::array();
  for (std::size_t m = 0; m < t.values.size(); ++m)
    values.push_back({{"re", t.values[m].real()}, {"im", t.values[m].imag()}, {"regular", static_cast<bool>(t.regular[m])}});
  const KType k = t.ktype.value_or(KType{});
  return json{{"p", t.space.p},
              {"q", t.space.q},
              {"k", k.k},
              {"l", k.l},
              {"lambda", to_json(t.lambda)},
              {"kind", t.kind == hc::CoeffKind::Gamma ? "Gamma" : "GammaTilde"},
              {"values", values}};
}

json to_json(const eis::Progression& p) {
  return json{{"start", p.start.value()}, {"step", p.step}, {"count", "infinite"}};
}

json to_json(const eis::PoleCatalog& c) {
  auto list = [](const std::vector<eis::Progression>& v) {
    json a = json::array();
    for (const auto& p : v) a.push_back(to_json(p));
    return a;
  };
  return json{{"e_poles", list(c.e_poles)}, {"c_poles", list(c.c_poles)}, {"c_zeros", list(c.c_zeros)}, {"e_zeros", list(c.e_zeros)}};
}

json to_json(const fourier::HarnessReport& r) {
  return json{{"lhs", r.lhs}, {"rhs", r.rhs}, {"ratio", r.ratio}, {"xi_max", r.xi_max}, {"tail_estimate", r.tail_estimate}};
}

json to_json(const fourier::PaleyWienerFit& f) {
  return json{{"M", f.M}, {"rate", f.rate}, {"support_end", f.support_end}, {"rate_ok", f.rate_ok}};
}

double FixtureRecord::real(const std::string& name) const { return inputs.at(name).real(); }

int FixtureRecord::integer(const std::string& name) const {
  return static_cast<int>(std::lround(inputs.at(name).real()));
}

FixtureRecord parse_fixture(const json& j) {
  FixtureRecord r;
  r.case_id = j.at("case_id").get<std::string>();
  for (const auto& [name, v] : j.at("inputs").items()) r.inputs[name] = parse_value(v);
  r.expected = parse_value(j.at("expected"));
  r.digits = j.at("digits").get<int>();
  r.formula_ref = j.value("formula_ref", "");
  return r;
}

std::string fixture_dir() {
  if (const char* env = std::getenv("HYPERFNS_FIXTURES"); env && *env) return env;
  return HYPERFNS_DEFAULT_FIXTURES;
}

std::vector<std::string> fixture_suites() {
  std::vector<std::string> out;
  const std::filesystem::path dir(fixture_dir());
  if (!std::filesystem::is_directory(dir)) return out;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".json") out.push_back(e.path().stem().string());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FixtureRecord> load_fixtures(const std::string& suite) {
  const std::filesystem::path path = std::filesystem::path(fixture_dir()) / (suite + ".json");
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open fixture file " + path.string());
  const json doc = json::parse(in);
  const json& cases = doc.is_array() ? doc : doc.at("cases");
  std::vector<FixtureRecord> out;
  for (const auto& c : cases) out.push_back(parse_fixture(c));
  return out;
}

}  // namespace hyperfns::io
