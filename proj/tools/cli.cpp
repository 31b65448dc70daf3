#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>

#include "hyperfns/fourier.hpp"
#include "hyperfns/io.hpp"
#include "hyperfns/verify.hpp"

namespace hyperfns::cli {

namespace {

using eis::EtaVector;

struct Grid {
  double start = 0.0, stop = 0.0;
  int count = 1;
  std::vector<double> points() const {
    std::vector<double> v(count);
    for (int i = 0; i < count; ++i) v[i] = count == 1 ? start : start + (stop - start) * i / (count - 1);
    return v;
  }
};

double parse_num(const std::string& s) {
  double v = 0.0;
  const char* b = s.data();
  const char* e = b + s.size();
  while (b < e && *b == ' ') ++b;
  if (b < e && *b == '+') ++b;
  auto [ptr, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || ptr != e) throw CLI::ValidationError("not a number: '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

Complex parse_complex(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() == 1) return {parse_num(parts[0]), 0.0};
  if (parts.size() == 2) return {parse_num(parts[0]), parse_num(parts[1])};
  throw CLI::ValidationError("complex values are written re,im");
}

Grid parse_grid(const std::string& s) {
  const auto parts = split(s, ':');
  Grid g;
  if (parts.size() == 1) {
    g.start = g.stop = parse_num(parts[0]);
    return g;
  }
  if (parts.size() != 3) throw CLI::ValidationError("grids are written start:stop:count");
  g.start = parse_num(parts[0]);
  g.stop = parse_num(parts[1]);
  const double n = parse_num(parts[2]);
  if (n < 1 || n != static_cast<int>(n)) throw CLI::ValidationError("grid count must be a positive integer");
  g.count = static_cast<int>(n);
  return g;
}

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct Common {
  int p = 0, q = 0;
  std::optional<int> k, l;
  std::string lambda = "0,0";
  std::string eta;
  bool json = false;
  int jobs = 1;
  std::string reading = "consistent";
  bool formal = false;

  Space space() const { return Space(p, q); }
  std::optional<KType> ktype() const {
    if (!k && !l) return std::nullopt;
    return KType{k.value_or(0), l.value_or(0)};
  }
  eis::KTypeReading kreading() const {
    return reading == "literal" ? eis::KTypeReading::Literal : eis::KTypeReading::Consistent;
  }
  EtaVector eta_vector() const {
    const Space s = space();
    if (eta.empty()) return EtaVector::unit(s);
    const auto parts = split(eta, ';');
    EtaVector e;
    for (const auto& part : parts) e.components.push_back(parse_complex(part));
    eis::check_eta(s, e);
    return e;
  }
  // The CLI enforces the representation rules the library leaves to callers.
  void check() const {
    const Space s = space();
    if (auto kt = ktype(); kt && !formal) validate(s, *kt);
  }
};

void add_space(CLI::App* app, Common& c, bool with_lambda = true) {
  app->add_option("--p", c.p, "p >= 1")->required();
  app->add_option("--q", c.q, "q >= 1")->required();
  app->add_option("--k", c.k, "K-type k");
  app->add_option("--l", c.l, "K-type l");
  if (with_lambda) app->add_option("--lambda", c.lambda, "spectral parameter re,im");
  app->add_flag("--json", c.json, "JSON instead of CSV");
  app->add_flag("--formal", c.formal, "accept K-types outside the representation rules");
  app->add_option("--reading", c.reading, "reading of the K-type pole offsets")->check(CLI::IsMember({"consistent", "literal"}));
}

void print_json(std::ostream& out, const io::json& j) { out << j.dump(1) << "\n"; }

// ---------------------------------------------------------------- commands

int cmd_eval(const Common& c, const std::string& tgrid, const std::string& method, std::optional<double> R,
             std::ostream& out) {
  const Space s = c.space();
  const auto kt = c.ktype();
  const Complex lam = parse_complex(c.lambda);
  const EtaVector eta = c.eta_vector();
  const auto ts = parse_grid(tgrid).points();
  const auto orbits = s.orbits();

  struct Row {
    EvalResult a, b;
  };
  auto rows = fourier::parallel_map<std::vector<Row>>(ts.size(), c.jobs, [&](std::size_t i) {
    std::vector<Row> r;
    for (int w : orbits) {
      Row row;
      const double t = ts[i];
      if (R) {
        row.a = eis::eisenstein_regularized(s, kt, *R, lam, eta, w, t, eis::RegularizationMethod::Auto, c.kreading());
      } else if (method == "series") {
        row.a = eis::eisenstein_series(s, kt, lam, eta, w, t);
      } else if (method == "auto") {
        row.a = eis::eisenstein(s, kt, lam, eta, w, t);
      } else {
        row.a = eis::eisenstein_closed(s, kt, lam, eta, w, t);
        if (method == "both") {
          if (t >= hc::t_min_series) {
            row.b = eis::eisenstein_series(s, kt, lam, eta, w, t);
          } else {
            row.b.status = Status::AccuracyLoss;
            row.b.value = Complex(std::nan(""), std::nan(""));
          }
        }
      }
      r.push_back(row);
    }
    return r;
  });

  const bool both = method == "both" && !R;
  if (c.json) {
    io::json arr = io::json::array();
    for (std::size_t i = 0; i < ts.size(); ++i)
      for (std::size_t k = 0; k < orbits.size(); ++k) {
        io::json j{{"t", ts[i]}, {"w", orbits[k]}, {"result", io::to_json(rows[i][k].a)}};
        if (both) j["series"] = io::to_json(rows[i][k].b);
        arr.push_back(j);
      }
    print_json(out, arr);
    return 0;
  }
  out << "t,w,value_re,value_im,abs_err,status";
  if (both) out << ",series_re,series_im,series_abs_err,series_status,discrepancy";
  out << "\n";
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (std::size_t k = 0; k < orbits.size(); ++k) {
      const Row& r = rows[i][k];
      out << num(ts[i]) << "," << orbits[k] << "," << num(r.a.value.real()) << "," << num(r.a.value.imag()) << ","
          << num(r.a.abs_err) << "," << to_string(r.a.status);
      if (both) {
        const double scale = std::max(std::abs(r.a.value), 1e-300);
        out << "," << num(r.b.value.real()) << "," << num(r.b.value.imag()) << "," << num(r.b.abs_err) << ","
            << to_string(r.b.status) << "," << num(std::abs(r.a.value - r.b.value) / scale);
      }
      out << "\n";
    }
  return 0;
}

int cmd_coeffs(const Common& c, int n, const std::string& kind, std::ostream& out) {
  const Space s = c.space();
  const Complex lam = parse_complex(c.lambda);
  const auto tab = kind == "tilde" ? hc::gamma_tilde(s, c.ktype(), lam, n) : hc::gamma_coeffs(s, c.ktype(), lam, n);
  if (c.json) {
    print_json(out, io::to_json(tab));
    return 0;
  }
  out << "m,value_re,value_im,regular\n";
  for (int m = 0; m <= n; ++m)
    out << m << "," << num(tab.values[m].real()) << "," << num(tab.values[m].imag()) << ","
        << (tab.regular[m] ? 1 : 0) << "\n";
  return 0;
}

std::vector<Complex> lambda_points(const Common& c, const std::string& re, const std::string& im) {
  if (re.empty() && im.empty()) return {parse_complex(c.lambda)};
  const auto xs = parse_grid(re.empty() ? "0" : re).points();
  const auto ys = parse_grid(im.empty() ? "0" : im).points();
  std::vector<Complex> out;
  for (double x : xs)
    for (double y : ys) out.emplace_back(x, y);
  return out;
}

int cmd_cfun(const Common& c, const std::string& re, const std::string& im, std::ostream& out) {
  const Space s = c.space();
  const auto pts = lambda_points(c, re, im);
  const auto vals = fourier::parallel_map<EvalResult>(pts.size(), c.jobs,
                                                     [&](std::size_t i) { return eis::c_function(s, c.ktype(), pts[i]); });
  if (c.json) {
    io::json arr = io::json::array();
    for (std::size_t i = 0; i < pts.size(); ++i)
      arr.push_back({{"lambda", io::to_json(pts[i])}, {"c", io::to_json(vals[i])}});
    print_json(out, arr);
    return 0;
  }
  out << "lambda_re,lambda_im,value_re,value_im,abs_err,status\n";
  for (std::size_t i = 0; i < pts.size(); ++i)
    out << num(pts[i].real()) << "," << num(pts[i].imag()) << "," << num(vals[i].value.real()) << ","
        << num(vals[i].value.imag()) << "," << num(vals[i].abs_err) << "," << to_string(vals[i].status) << "\n";
  return 0;
}

int cmd_poles(const Common& c, int count, std::ostream& out) {
  const auto cat = eis::pole_catalog(c.space(), c.ktype(), c.kreading());
  if (c.json) {
    print_json(out, io::to_json(cat));
    return 0;
  }
  auto line = [&](const char* name, const std::vector<eis::Progression>& set) {
    out << name << ":";
    for (const auto& p : set) {
      out << " {";
      const auto first = p.first(count);
      for (std::size_t i = 0; i < first.size(); ++i) out << (i ? "," : "") << to_string(first[i]);
      out << ",...}";
    }
    out << "\n";
  };
  line("e_poles", cat.e_poles);
  line("c_poles", cat.c_poles);
  line("c_zeros", cat.c_zeros);
  line("e_zeros", cat.e_zeros);
  return 0;
}

int cmd_classify(const Common& c, double R, std::ostream& out) {
  const Space s = c.space();
  const Complex lam = parse_complex(c.lambda);
  const auto cls = eis::classify_bounded(s, c.ktype(), R, lam, c.kreading());
  if (c.json) {
    print_json(out, {{"class", eis::to_string(cls)}});
    return 0;
  }
  out << eis::to_string(cls) << "\n";
  if (cls == eis::Boundedness::Undetermined && c.ktype()) {
    out << "note: rho is an integer and lambda0 lies in A = {";
    const auto A = eis::undetermined_set(s, *c.ktype(), c.kreading());
    for (std::size_t i = 0; i < A.size(); ++i) out << (i ? "," : "") << to_string(A[i]);
    out << "}; the K-type classification makes no claim on A\n";
  }
  return 0;
}

struct FourierArgs {
  std::string profile = "smooth";
  double a = 1.0, b = 2.0, power = 1.0;
  std::string re, im;
  std::string harness;
  double r = 2.0, lambda0 = 0.0, R = 2.0, xi_max = 200.0;
  int n = 2;
  std::optional<double> regularize;
};

int cmd_fourier(const Common& c, const FourierArgs& fa, std::ostream& out) {
  const Space s = c.space();
  const auto kt = c.ktype();
  const EtaVector eta = c.eta_vector();
  const fourier::Profile prof = fa.profile == "poly" ? fourier::Profile::polynomial_bump(fa.a, fa.b, fa.power)
                                                     : fourier::Profile::smooth_bump(fa.a, fa.b);
  const auto f = fourier::RadialProfile::uniform(s, prof);
  fourier::HarnessOptions ho;
  ho.xi_max = fa.xi_max;
  ho.jobs = c.jobs;

  if (fa.harness == "plancherel") {
    print_json(out, io::to_json(fourier::plancherel_check(s, f, eta, ho)));
    return 0;
  }
  if (fa.harness == "hy") {
    print_json(out, io::to_json(fourier::hy_ratio(s, kt, f, eta, fa.r, fa.lambda0, fa.R, ho)));
    return 0;
  }
  if (fa.harness == "rl") {
    fourier::LineSpec line;
    line.re_part = fa.lambda0;
    for (int j = 0; j <= 7; ++j) line.heights.push_back(std::ldexp(1.0, j));
    const auto v = fourier::rl_decay_profile(s, kt, f, eta, fa.r, line, ho);
    out << "xi,abs_value\n";
    for (std::size_t i = 0; i < v.size(); ++i) out << num(line.heights[i]) << "," << num(v[i]) << "\n";
    return 0;
  }
  if (fa.harness == "pw") {
    std::vector<Complex> grid;
    for (double x = -20.25; x <= fa.R; x += 1.0)
      for (double y : {0.0, 1.0, 3.0, 10.0}) grid.emplace_back(x, y);
    print_json(out, io::to_json(fourier::paley_wiener_check(s, kt, f, eta, fa.n, fa.R, grid, ho)));
    return 0;
  }

  fourier::FourierOptions fo;
  fo.regularize_R = fa.regularize;
  fo.reading = c.kreading();
  const auto pts = lambda_points(c, fa.re, fa.im);
  const auto vals = fourier::parallel_map<EvalResult>(pts.size(), c.jobs, [&](std::size_t i) {
    return fourier::fourier_transform(s, kt, f, pts[i], eta, {}, fo);
  });
  if (c.json) {
    io::json arr = io::json::array();
    for (std::size_t i = 0; i < pts.size(); ++i)
      arr.push_back({{"lambda", io::to_json(pts[i])}, {"value", io::to_json(vals[i])}});
    print_json(out, arr);
    return 0;
  }
  out << "lambda_re,lambda_im,value_re,value_im,abs_err\n";
  for (std::size_t i = 0; i < pts.size(); ++i)
    out << num(pts[i].real()) << "," << num(pts[i].imag()) << "," << num(vals[i].value.real()) << ","
        << num(vals[i].value.imag()) << "," << num(vals[i].abs_err) << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, std::optional<int> p, std::optional<int> q, std::optional<int> k,
               std::optional<int> l, int jobs, bool json, std::ostream& out) {
  verify::SuiteOptions opt;
  if (p || q) {
    if (!p || !q) throw CLI::ValidationError("--p and --q go together");
    opt.space = Space(*p, *q);
  }
  if (k || l) opt.ktype = KType{k.value_or(0), l.value_or(0)};
  opt.jobs = jobs;
  const auto results = verify::run_suite(suite, opt);
  int failed = 0;
  io::json arr = io::json::array();
  for (const auto& r : results) {
    if (!r.pass) ++failed;
    if (json)
      arr.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    else
      out << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
  }
  if (json) print_json(out, arr);
  if (failed) {
    if (!json) {
      out << failed << " of " << results.size() << " checks failed:";
      for (const auto& r : results)
        if (!r.pass) out << " " << r.name;
      out << "\n";
    }
    return 2;
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Eisenstein integrals and spherical transforms on rank-one hyperbolic spaces", "hyperfns"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Common c;
  std::string tgrid = "0:4:81", method = "closed", kind = "gamma", suite = "all", re, im;
  std::optional<double> R_opt;
  double R = 3.0;
  int n = 20, count = 5;
  FourierArgs fa;
  std::optional<int> vp, vq, vk, vl;
  bool vjson = false;

  auto* eval = app.add_subcommand("eval", "E° on a t grid");
  add_space(eval, c);
  eval->add_option("--t", tgrid, "start:stop:count");
  eval->add_option("--method", method)->check(CLI::IsMember({"closed", "series", "both", "auto"}));
  eval->add_option("--R", R_opt, "evaluate p_R E° instead");
  eval->add_option("--eta", c.eta, "eta components re,im;re,im");
  eval->add_option("--jobs", c.jobs)->check(CLI::PositiveNumber);

  auto* coeffs = app.add_subcommand("coeffs", "Harish-Chandra coefficient table");
  add_space(coeffs, c);
  coeffs->add_option("--n", n, "n_max")->check(CLI::NonNegativeNumber);
  coeffs->add_option("--kind", kind)->check(CLI::IsMember({"gamma", "tilde"}));

  auto* cfun = app.add_subcommand("cfun", "c-function at a point or on a grid");
  add_space(cfun, c);
  cfun->add_option("--re", re, "start:stop:count");
  cfun->add_option("--im", im, "start:stop:count");
  cfun->add_option("--jobs", c.jobs)->check(CLI::PositiveNumber);

  auto* poles = app.add_subcommand("poles", "pole and zero catalogs");
  add_space(poles, c, false);
  poles->add_option("--count", count, "entries listed per progression")->check(CLI::PositiveNumber);

  auto* classify = app.add_subcommand("classify", "boundedness class of p_R E°(lambda0)");
  add_space(classify, c);
  classify->add_option("--R", R)->required();

  auto* four = app.add_subcommand("fourier", "spherical transform of a bump profile, or a harness report");
  add_space(four, c);
  four->add_option("--eta", c.eta, "eta components re,im;re,im");
  four->add_option("--profile", fa.profile)->check(CLI::IsMember({"smooth", "poly"}));
  four->add_option("--a", fa.a);
  four->add_option("--b", fa.b);
  four->add_option("--power", fa.power);
  four->add_option("--re", fa.re, "start:stop:count");
  four->add_option("--im", fa.im, "start:stop:count");
  four->add_option("--regularize", fa.regularize, "R for the p_R-regularized integrand");
  four->add_option("--harness", fa.harness)->check(CLI::IsMember({"plancherel", "hy", "rl", "pw"}));
  four->add_option("--r", fa.r);
  four->add_option("--lambda0", fa.lambda0);
  four->add_option("--R", fa.R);
  four->add_option("--n", fa.n);
  four->add_option("--xi-max", fa.xi_max);
  four->add_option("--jobs", c.jobs)->check(CLI::PositiveNumber);

  auto* ver = app.add_subcommand("verify", "run invariant suites");
  ver->add_option("--suite", suite)->check(CLI::IsMember(verify::suite_names()));
  ver->add_option("--p", vp);
  ver->add_option("--q", vq);
  ver->add_option("--k", vk);
  ver->add_option("--l", vl);
  ver->add_option("--jobs", c.jobs)->check(CLI::PositiveNumber);
  ver->add_flag("--json", vjson);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "hyperfns: " << e.what() << "\n";
    return 1;
  }

  try {
    if (*ver) return cmd_verify(suite, vp, vq, vk, vl, c.jobs, vjson, out);
    c.check();
    if (*eval) return cmd_eval(c, tgrid, method, R_opt, out);
    if (*coeffs) return cmd_coeffs(c, n, kind, out);
    if (*cfun) return cmd_cfun(c, re, im, out);
    if (*poles) return cmd_poles(c, count, out);
    if (*classify) return cmd_classify(c, R, out);
    if (*four) return cmd_fourier(c, fa, out);
  } catch (const Error& e) {
    err << "hyperfns: " << to_string(e.code()) << ": " << e.what() << "\n";
    return 1;
  } catch (const CLI::Error& e) {
    err << "hyperfns: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "hyperfns: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace hyperfns::cli
