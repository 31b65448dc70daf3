#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hyperfns/eisenstein.hpp"
#include "hyperfns/fourier.hpp"

namespace hyperfns::io {

using nlohmann::json;

json to_json(Complex z);
json to_json(const EvalResult& r);
json to_json(const hc::CoeffTable& t);
json to_json(const eis::Progression& p);
json to_json(const eis::PoleCatalog& c);
json to_json(const fourier::HarnessReport& r);
json to_json(const fourier::PaleyWienerFit& f);

// Shortest round-trip decimal for finite doubles.
std::string format_double(double x);

// One golden value. Inputs and expected are decimal strings; scalars carry
// im = 0 after parsing.
struct FixtureRecord {
  std::string case_id;
  std::map<std::string, Complex> inputs;
  Complex expected;
  int digits = 0;
  std::string formula_ref;

  double real(const std::string& name) const;
  int integer(const std::string& name) const;
  Complex complex(const std::string& name) const { return inputs.at(name); }
  bool has(const std::string& name) const { return inputs.count(name) != 0; }
};

FixtureRecord parse_fixture(const json& j);

// HYPERFNS_FIXTURES if set, else the source tree's fixtures/ directory.
std::string fixture_dir();
std::vector<std::string> fixture_suites();
std::vector<FixtureRecord> load_fixtures(const std::string& suite);

}  // namespace hyperfns::io
