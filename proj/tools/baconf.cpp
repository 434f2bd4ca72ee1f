// baconf: batch front-end for construction, certification, Hilbert series,
// Gorenstein scans and Darboux verification.

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "baconf/baconf.hpp"

namespace {

using namespace baconf;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kComputation = 3;

struct Globals {
  unsigned precision = 256;
  std::optional<long> threshold_log2;
  unsigned long long seed = 1;
  unsigned jobs = 1;
  std::string output;
};

/// Negative values are exponents; positive values are read as 2^{-t}.
double threshold_for(const Globals& g) {
  if (!g.threshold_log2) return static_cast<double>(default_threshold_log2(g.precision));
  const long t = *g.threshold_log2;
  return static_cast<double>(t > 0 ? -t : t);
}

/// "3", "1..4", "2,4,6" or a mix such as "1..3,8". "m" as an upper bound refers to `m_value`.
std::vector<long> parse_range(const std::string& text, std::optional<long> m_value = std::nullopt) {
  auto number = [&](const std::string& s) -> long {
    if (s == "m") {
      if (!m_value) throw CLI::ValidationError("range", "'m' is only valid in --mt");
      return *m_value;
    }
    try {
      std::size_t used = 0;
      long v = std::stol(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw CLI::ValidationError("range", "bad integer '" + s + "'");
    }
  };
  std::vector<long> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(number(part));
      continue;
    }
    const long lo = number(part.substr(0, dots)), hi = number(part.substr(dots + 2));
    for (long v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) throw CLI::ValidationError("range", "empty range '" + text + "'");
  return out;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << '\n';
    return;
  }
  std::ofstream f(path);
  if (!f) fail(ErrorKind::InvalidArgument, "cannot write " + path);
  f << text << '\n';
}

Configuration read_configuration(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(ErrorKind::InvalidArgument, "cannot read " + path);
  Json j;
  try {
    f >> j;
  } catch (const std::exception& e) {
    fail(ErrorKind::Parse, path + ": " + e.what());
  }
  return configuration_from_json(j);
}

/// Runs f(i) for i < count on `jobs` threads; results stay indexed so output order is fixed.
template <class F>
void parallel_for(std::size_t count, unsigned jobs, F&& f) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) f(i);
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
}

struct Manifest {
  std::string subcommand;
  Json parameters = Json::object();
  std::vector<std::string> outputs;
  std::vector<double> wall_clock_s;
};

Json to_json(const Manifest& m, const Globals& g) {
  return {{"subcommand", m.subcommand},
          {"parameters", m.parameters},
          {"seed", g.seed},
          {"precision_bits", g.precision},
          {"outputs", m.outputs},
          {"tool_version", baconf::version},
          {"wall_clock_s", m.wall_clock_s}};
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Configuration sources shared by construct, certify and hilbert.
struct Source {
  std::string family;
  std::string input;
  std::string base = "am1n";
  long m = 1, mt = 1, n = 2, q = 1;
  std::vector<std::string> mults;
  std::optional<unsigned long long> seed;
  std::optional<long> perturb_line;
  double perturb_delta = 1e-2;
};

void add_source_options(CLI::App* app, Source& s, bool family_positional) {
  if (family_positional)
    app->add_option("family", s.family, "am1n | twomult | tq | random | general")
        ->check(CLI::IsMember({"am1n", "twomult", "tq", "random", "general"}));
  else
    app->add_option("--family", s.family, "am1n | twomult | tq | random | general")
        ->check(CLI::IsMember({"am1n", "twomult", "tq", "random", "general"}));
  app->add_option("--input,-i", s.input, "configuration JSON to read");
  app->add_option("--m", s.m, "multiplicity of the phi = 0 line")->check(CLI::NonNegativeNumber);
  app->add_option("--mt", s.mt, "multiplicity of the phi = pi/2 line")->check(CLI::NonNegativeNumber);
  app->add_option("--n", s.n, "number of simple lines")->check(CLI::NonNegativeNumber);
  app->add_option("--q", s.q, "expansion factor for tq")->check(CLI::PositiveNumber);
  app->add_option("--base", s.base, "family expanded by tq when no --input is given")
      ->check(CLI::IsMember({"am1n", "twomult"}));
  app->add_option("--mults", s.mults, "multiplicities for general, e.g. 2 3 1 1 or 1/2");
  app->add_option("--config-seed", s.seed, "seed for random (defaults to --seed)");
  app->add_option("--perturb-line", s.perturb_line, "rotate this line index after building");
  app->add_option("--perturb-delta", s.perturb_delta, "rotation applied by --perturb-line");
}

Configuration build_source(const Source& s, const Globals& g) {
  Configuration c;
  const auto prec = g.precision;
  const std::string fam = s.family.empty() ? (s.input.empty() ? "am1n" : "") : s.family;
  if (fam == "tq") {
    Configuration base = !s.input.empty() ? read_configuration(s.input)
                         : s.base == "twomult" ? build_two_mult(s.m, s.mt, s.n, prec)
                                               : build_am1n(s.m, s.n, prec);
    c = t_q_expand(base, s.q);
  } else if (!s.input.empty()) {
    c = read_configuration(s.input);
  } else if (fam == "am1n") {
    c = build_am1n(s.m, s.n, prec);
  } else if (fam == "twomult") {
    c = build_two_mult(s.m, s.mt, s.n, prec);
  } else if (fam == "random") {
    c = random_type_m1n(s.m, s.n, s.seed.value_or(g.seed), prec);
  } else if (fam == "general") {
    require(s.mults.size() >= 2, ErrorKind::InvalidArgument, "general needs at least two --mults");
    c = solve_general_locus(parse_rationals(s.mults), prec);
  } else {
    fail(ErrorKind::InvalidArgument, "no configuration source given");
  }
  if (s.perturb_line)
    c = perturb_angle(c, static_cast<std::size_t>(*s.perturb_line), BigFloat(s.perturb_delta, c.precision));
  return c;
}

Json source_parameters(const Source& s) {
  Json j{{"family", s.family}, {"input", s.input}, {"m", s.m}, {"mt", s.mt}, {"n", s.n}, {"q", s.q}};
  if (s.family == "tq") j["base"] = s.base;
  if (s.seed) j["config_seed"] = *s.seed;
  if (!s.mults.empty()) j["mults"] = s.mults;
  if (s.perturb_line) {
    j["perturb_line"] = *s.perturb_line;
    j["perturb_delta"] = s.perturb_delta;
  }
  return j;
}

// construct

int cmd_construct(const Source& s, const Globals& g) {
  Configuration c = build_source(s, g);
  emit(g.output, to_json(c).dump(2));
  return kPass;
}

// certify

int cmd_certify(const Source& s, const Globals& g) {
  Manifest man{"certify", source_parameters(s), {g.output}, {}};
  const auto t0 = std::chrono::steady_clock::now();
  Configuration c = build_source(s, g);
  BACertificate cert = certify_ba(c, threshold_for(g));
  man.wall_clock_s.push_back(seconds_since(t0));
  Json out = to_json(cert);
  out["configuration"] = {{"kind", to_string(c.kind)}, {"lines", c.size()}};
  out["manifest"] = to_json(man, g);
  emit(g.output, out.dump(2));
  if (!cert.pass)
    std::cerr << "certify: fail, max residual 2^" << cert.max_residual_log2 << " above 2^" << cert.threshold_log2
              << '\n';
  return cert.pass ? kPass : kFail;
}

// hilbert

struct HilbertArgs {
  Source source;
  bool random = false;
  std::optional<long> D;
  std::string route = "auto";
  std::string csv;
  bool check_closed_form = false;
};

int cmd_hilbert(const HilbertArgs& a, const Globals& g) {
  Source s = a.source;
  if (a.random) s.family = "random";
  Manifest man{"hilbert", source_parameters(s), {g.output}, {}};
  const auto t0 = std::chrono::steady_clock::now();
  Configuration c = build_source(s, g);
  const TypeM1n t = type_m1n(c);
  const long m = t.m, n = static_cast<long>(t.simple.size());
  const long D = a.D.value_or(default_cutoff(m, n));
  const Route route = a.route == "exact" ? Route::Exact : a.route == "numeric" ? Route::Numeric : Route::Auto;
  HilbertSeries h = hilbert_rational_form(hilbert_coefficients(c, D, route, g.precision), m, n);
  man.wall_clock_s.push_back(seconds_since(t0));
  Json out = to_json(h);
  out["r"] = r_parameter(c);
  int code = kPass;
  if (a.check_closed_form) {
    const bool match = h.numerator == closed_form_numerator(m, n);
    out["closed_form_match"] = match;
    if (!match) code = kFail;
  }
  if (!a.csv.empty()) {
    emit(a.csv, to_csv(h));
    man.outputs.push_back(a.csv);
  }
  out["manifest"] = to_json(man, g);
  emit(g.output, out.dump(2));
  return code;
}

// scan

struct ScanArgs {
  std::string kind;
  std::string m, mt, n, q = "1";  // empty: per-kind defaults
  std::string family = "am1n";
  std::string base = "am1n,twomult";
  long samples = 20;
};

struct ScanItem {
  Json report;
  bool ok = false;
  double seconds = 0;
};

int finish_scan(const ScanArgs& a, const Globals& g, std::vector<ScanItem>& items, Json parameters) {
  Manifest man{"scan " + a.kind, std::move(parameters), {g.output}, {}};
  Json list = Json::array();
  std::size_t bad = 0;
  for (auto& it : items) {
    bad += it.ok ? 0 : 1;
    man.wall_clock_s.push_back(it.seconds);
    list.push_back(std::move(it.report));
  }
  Json out{{"items", list}, {"total", items.size()}, {"failures", bad}, {"manifest", to_json(man, g)}};
  emit(g.output, out.dump(2));
  return bad == 0 ? kPass : kFail;
}

template <class F>
void run_items(std::vector<ScanItem>& items, unsigned jobs, F&& body) {
  parallel_for(items.size(), jobs, [&](std::size_t i) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
      body(i, items[i]);
    } catch (const Error& e) {
      items[i].ok = false;
      items[i].report["error"] = e.what();
    }
    items[i].seconds = seconds_since(t0);
  });
}

int scan_gorenstein(const ScanArgs& a, const Globals& g) {
  struct Task {
    long m, n;
    std::optional<unsigned long long> seed;  // empty for the (m, 1^n) arrangement itself
  };
  std::vector<Task> tasks;
  for (long m : parse_range(a.m))
    for (long n : parse_range(a.n)) {
      tasks.push_back({m, n, std::nullopt});
      for (long s = 0; s < a.samples; ++s) tasks.push_back({m, n, g.seed + static_cast<unsigned long long>(s)});
    }
  std::vector<ScanItem> items(tasks.size());
  run_items(items, g.jobs, [&](std::size_t i, ScanItem& it) {
    const Task& t = tasks[i];
    const bool am1n = !t.seed;
    Configuration c = am1n ? build_am1n(t.m, t.n, g.precision) : random_type_m1n(t.m, t.n, *t.seed, g.precision);
    const long D = default_cutoff(t.m, t.n);
    HilbertSeries h = hilbert_rational_form(hilbert_coefficients(c, D, Route::Auto, g.precision), t.m, t.n);
    const GorensteinVerdict v = is_gorenstein(h);
    const long crit = h.b[static_cast<std::size_t>(2 * (t.m + t.n - 1))];
    const SegmentContext ctx{slope_symmetric(c), am1n};
    long seg_bad = 0;
    for (const auto& p : segment_oracles(t.m, t.n, r_parameter(c), ctx, D))
      if (h.b[static_cast<std::size_t>(p.degree)] != p.value) ++seg_bad;
    it.report = {{"m", t.m}, {"n", t.n}, {"kind", am1n ? "am1n" : "random"}, {"gorenstein", v.gorenstein},
                 {"M", v.M ? Json(*v.M) : Json(nullptr)}, {"critical_coefficient", crit},
                 {"segment_mismatches", seg_bad}, {"coefficients", h.b}};
    if (t.seed) it.report["seed"] = *t.seed;
    it.ok = seg_bad == 0 && (am1n ? v.gorenstein && v.M == 2 - 2 * t.m - 2 * t.n && crit == t.m + t.n
                                  : !v.gorenstein && crit == t.m + t.n - 1);
  });
  return finish_scan(a, g, items, {{"m", a.m}, {"n", a.n}, {"samples", a.samples}});
}

int scan_certify(const ScanArgs& a, const Globals& g) {
  struct Task {
    std::string family;
    long m, mt, n, q;
  };
  std::vector<Task> tasks;
  const auto qs = parse_range(a.q);
  auto add_family = [&](const std::string& fam, const std::vector<long>& q_values) {
    for (long m : parse_range(a.m))
      for (long n : parse_range(a.n)) {
        if (fam == "am1n") {
          for (long q : q_values) tasks.push_back({"am1n", m, 0, n, q});
        } else {
          for (long mt : parse_range(a.mt, m))
            if (mt >= 0 && mt <= m && n % 2 == 0)
              for (long q : q_values) tasks.push_back({"twomult", m, mt, n, q});
        }
      }
  };
  if (a.family == "tq") {
    std::stringstream ss(a.base);
    std::string b;
    while (std::getline(ss, b, ',')) add_family(b, qs);
  } else {
    add_family(a.family, {1});
  }
  const double threshold = threshold_for(g);
  std::vector<ScanItem> items(tasks.size());
  run_items(items, g.jobs, [&](std::size_t i, ScanItem& it) {
    const Task& t = tasks[i];
    Configuration c =
        t.family == "am1n" ? build_am1n(t.m, t.n, g.precision) : build_two_mult(t.m, t.mt, t.n, g.precision);
    c = t_q_expand(c, t.q);
    const BACertificate cert = certify_ba(c, threshold);
    const bool ode = (t.family == "am1n" ? ode_residual_am1n(c) : ode_residual_two_mult(c)).is_zero();
    it.report = {{"family", t.family}, {"m", t.m}, {"n", t.n}, {"q", t.q}, {"verdict", cert.pass ? "pass" : "fail"},
                 {"max_residual_log2", log2_json(cert.max_residual_log2)}, {"ode_residual_zero", ode}};
    if (t.family == "twomult") {
      it.report["mtilde"] = t.mt;
      it.report["branch"] = c.branch;
    }
    it.ok = cert.pass && ode;
  });
  return finish_scan(a, g, items, {{"family", a.family}, {"m", a.m}, {"mt", a.mt}, {"n", a.n}, {"q", a.q}});
}

int scan_darboux(const ScanArgs& a, const Globals& g) {
  struct Task {
    long m, mt, n, q;
  };
  std::vector<Task> tasks;
  for (long m : parse_range(a.m))
    for (long mt : parse_range(a.mt, m))
      for (long n : parse_range(a.n))
        for (long q : parse_range(a.q))
          if (mt >= 0 && mt <= m && (mt == 0 || n % 2 == 0)) tasks.push_back({m, mt, n, q});
  std::vector<ScanItem> items(tasks.size());
  run_items(items, g.jobs, [&](std::size_t i, ScanItem& it) {
    const Task& t = tasks[i];
    const DarbouxReport r = darboux_report(t.m, t.mt, t.n, t.q, g.precision);
    it.report = to_json(r);
    it.ok = all_pass(r);
  });
  return finish_scan(a, g, items, {{"m", a.m}, {"mt", a.mt}, {"n", a.n}, {"q", a.q}});
}

int cmd_scan(ScanArgs a, const Globals& g) {
  auto fallback = [](std::string& v, const char* d) {
    if (v.empty()) v = d;
  };
  if (a.kind == "gorenstein") {
    fallback(a.m, "1..3");
    fallback(a.n, "2..5");
    return scan_gorenstein(a, g);
  }
  fallback(a.m, "1..4");
  fallback(a.n, "2,4,6");
  if (a.kind == "certify") {
    fallback(a.mt, "1..m");
    return scan_certify(a, g);
  }
  fallback(a.mt, "0..m");
  return scan_darboux(a, g);
}

// darboux

struct DarbouxArgs {
  long m = 1, mt = 0, n = 2, q = 1;
};

int cmd_darboux(const DarbouxArgs& a, const Globals& g) {
  Manifest man{"darboux", {{"m", a.m}, {"mt", a.mt}, {"n", a.n}, {"q", a.q}}, {g.output}, {}};
  const auto t0 = std::chrono::steady_clock::now();
  const DarbouxReport r = darboux_report(a.m, a.mt, a.n, a.q, g.precision);
  man.wall_clock_s.push_back(seconds_since(t0));
  Json out = to_json(r);
  out["manifest"] = to_json(man, g);
  emit(g.output, out.dump(2));
  return all_pass(r) ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Baker-Akhiezer line configurations: construction, certification, quasi-invariants, Darboux data"};
  app.set_version_flag("--version", std::string(baconf::version));
  app.require_subcommand(1);

  Globals g;
  app.add_option("--precision", g.precision, "working precision in bits")
      ->envname("BA_PRECISION")
      ->check(CLI::Range(64u, 1u << 16));
  app.add_option("--threshold-log2", g.threshold_log2, "certification threshold exponent (default -(precision-32))");
  app.add_option("--seed", g.seed, "base seed for random configurations");
  app.add_option("--jobs,-j", g.jobs, "worker threads for scans")->check(CLI::PositiveNumber);
  app.add_option("-o,--output", g.output, "output file (stdout if omitted)");

  Source construct_src;
  auto* construct = app.add_subcommand("construct", "build a configuration and write its JSON");
  add_source_options(construct, construct_src, true);
  construct->fallthrough();

  Source certify_src;
  auto* certify = app.add_subcommand("certify", "certify the BA conditions; exit 0 iff pass");
  add_source_options(certify, certify_src, false);
  certify->fallthrough();

  HilbertArgs hilbert_args;
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series of the quasi-invariants");
  add_source_options(hilbert, hilbert_args.source, false);
  hilbert->add_flag("--random", hilbert_args.random, "use random_type_m1n(m, n, seed)");
  hilbert->add_option("--D", hilbert_args.D, "degree cutoff (default 2m + 2n + 4)");
  hilbert->add_option("--route", hilbert_args.route, "auto | exact | numeric")
      ->check(CLI::IsMember({"auto", "exact", "numeric"}));
  hilbert->add_option("--csv", hilbert_args.csv, "also write degree,b rows here");
  hilbert->add_flag("--check-closed-form", hilbert_args.check_closed_form,
                    "exit 1 unless the numerator equals the (m, 1^n) closed form");
  hilbert->fallthrough();

  ScanArgs scan_args;
  auto* scan = app.add_subcommand("scan", "aggregate checks over a parameter grid");
  scan->add_option("kind", scan_args.kind, "gorenstein | certify | darboux")
      ->required()
      ->check(CLI::IsMember({"gorenstein", "certify", "darboux"}));
  scan->add_option("--m", scan_args.m, "range, e.g. 1..4");
  scan->add_option("--mt", scan_args.mt, "range; 'm' stands for the current m");
  scan->add_option("--n", scan_args.n, "range, e.g. 2,4,6");
  scan->add_option("--q", scan_args.q, "range of expansion factors");
  scan->add_option("--family", scan_args.family, "certify: am1n | twomult | tq")
      ->check(CLI::IsMember({"am1n", "twomult", "tq"}));
  scan->add_option("--base", scan_args.base, "tq: comma list of base families");
  scan->add_option("--samples", scan_args.samples, "gorenstein: random samples per (m, n)")
      ->check(CLI::NonNegativeNumber);
  scan->fallthrough();

  DarbouxArgs darboux_args;
  auto* darboux = app.add_subcommand("darboux", "verify the Darboux identities for one chain");
  darboux->add_option("--m", darboux_args.m)->check(CLI::NonNegativeNumber);
  darboux->add_option("--mt", darboux_args.mt)->check(CLI::NonNegativeNumber);
  darboux->add_option("--n", darboux_args.n)->check(CLI::NonNegativeNumber);
  darboux->add_option("--q", darboux_args.q)->check(CLI::PositiveNumber);
  darboux->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*construct) return cmd_construct(construct_src, g);
    if (*certify) return cmd_certify(certify_src, g);
    if (*hilbert) return cmd_hilbert(hilbert_args, g);
    if (*scan) return cmd_scan(scan_args, g);
    if (*darboux) return cmd_darboux(darboux_args, g);
  } catch (const CLI::ParseError& e) {
    std::cerr << "baconf: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "baconf: " << e.what() << '\n';
    return kComputation;
  } catch (const std::exception& e) {
    std::cerr << "baconf: " << e.what() << '\n';
    return kComputation;
  }
  return kUsage;
}
