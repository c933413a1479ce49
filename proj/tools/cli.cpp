#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hamfix/cohomology.hpp"
#include "hamfix/document.hpp"
#include "hamfix/error.hpp"
#include "hamfix/localization.hpp"
#include "hamfix/models.hpp"
#include "hamfix/solver.hpp"

namespace hamfix::cli {

namespace {

using ojson = nlohmann::ordered_json;

struct Globals {
  bool json = false;
  std::string out_path;
  unsigned jobs = 1;
  bool normalize = false;
  bool no_integrality = false;
  std::uint64_t budget = kDefaultBudget;
};

std::uint64_t budget_from_env() {
  if (const char* env = std::getenv("HAMFIX_BUDGET")) {
    std::uint64_t v = 0;
    std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && ptr == s.data() + s.size() && v > 0) return v;
  }
  return kDefaultBudget;
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  return parts;
}

std::vector<std::int64_t> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<std::int64_t> out;
  for (const auto& part : split(text)) {
    std::string_view s(part);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
      throw Error(ErrorKind::ParseError, flag + ": \"" + part + "\" is not an integer");
    out.push_back(v);
  }
  if (out.empty()) throw Error(ErrorKind::ParseError, flag + ": empty list");
  return out;
}

std::vector<Rat> parse_rat_list(const std::string& text, const std::string& flag) {
  std::vector<Rat> out;
  for (const auto& part : split(text)) {
    auto r = parse_rat(part);
    if (!r) throw Error(ErrorKind::ParseError, flag + ": \"" + part + "\" is not a rational");
    out.push_back(*r);
  }
  return out;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SearchBudgetExceeded: return kBudgetExceeded;
    case ErrorKind::ParseError:
    case ErrorKind::StructureError:
    case ErrorKind::InvalidInput:
    case ErrorKind::IndexOutOfRange:
    case ErrorKind::DuplicateB:
    case ErrorKind::EvenN:
    case ErrorKind::ZeroB:
    case ErrorKind::DuplicateAbsB:
    case ErrorKind::NonIncreasing:
    case ErrorKind::SpecMismatch: return kInputError;
    default: return kCheckFailed;
  }
}

std::string join(const std::vector<Rat>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? ", " : "") + to_string(values[i]);
  return s;
}

std::string join(const std::vector<Weight>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? ", " : "") + std::to_string(values[i]);
  return s;
}

ojson rat_array(const std::vector<Rat>& values) {
  ojson a = ojson::array();
  for (const auto& v : values) a.push_back(to_string(v));
  return a;
}

std::string format_total_chern(const std::vector<Rat>& total) {
  std::string s = "c = 1";
  for (std::size_t k = 1; k < total.size(); ++k) {
    const Rat& c = total[k];
    if (c == 0) continue;
    s += c < 0 ? " - " : " + ";
    const Rat mag = c < 0 ? Rat(-c) : c;
    if (mag != 1) s += is_integer(mag) ? to_string(mag) : "(" + to_string(mag) + ")";
    s += k == 1 ? "x" : "x^" + std::to_string(k);
  }
  return s;
}

void print_system(std::ostream& os, const FixedPointData& d) {
  for (const auto& p : d.points())
    os << "  P_" << p.index << " phi=" << to_string(p.moment_value) << ": " << join(p.weights) << "\n";
}

class Runner {
 public:
  Runner(const Globals& g, std::ostream& out, std::ostream& err) : g_(g), out_(out), err_(err) {}

  int check(const std::string& file);
  int ring(const std::string& file);
  int chern(const std::string& file);
  int model(const std::string& kind, const std::string& b, int n);
  int solve(const std::string& ring, const std::string& phi, const std::string& r, std::optional<std::int64_t> max_w);
  int verify(const std::string& ring, const std::string& phi, const std::string& r, std::optional<std::int64_t> max_w);

  int finish(int code) {
    if (g_.out_path.empty()) {
      out_ << buf_.str();
    } else {
      std::ofstream f(g_.out_path);
      if (!f) {
        err_ << "error: cannot write " << g_.out_path << "\n";
        return kInputError;
      }
      f << buf_.str();
    }
    return code;
  }

 private:
  FixedPointData load(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw Error(ErrorKind::ParseError, "cannot read " + file);
    std::stringstream ss;
    ss << in.rdbuf();
    auto doc = parse_document_text(ss.str());
    return g_.normalize ? doc.data.normalized() : doc.data;
  }

  // Ring and Chern reports only make sense for data that validates.
  bool require_valid(const FixedPointData& d) {
    auto report = validate(d, {!g_.no_integrality});
    if (report.ok()) return true;
    err_ << "input fails validation:\n";
    for (const auto& v : report.violations) err_ << "  " << v.message << "\n";
    return false;
  }

  RingSpec make_spec(const std::string& ring, std::size_t points, const std::string& r) {
    if (points < 2) throw Error(ErrorKind::InvalidInput, "--phi needs at least two values");
    const int n = static_cast<int>(points) - 1;
    if (ring == "cpn") return RingSpec::projective_space(n);
    if (ring == "quadric") return RingSpec::quadric(n);
    if (r.empty()) throw Error(ErrorKind::InvalidInput, "--ring other needs --r");
    return RingSpec::other(parse_rat_list(r, "--r"));
  }

  SolveOptions solve_options(std::optional<std::int64_t> max_w) const {
    SolveOptions opts;
    opts.max_weight = max_w;
    opts.budget = g_.budget;
    opts.jobs = g_.jobs;
    return opts;
  }

  const Globals& g_;
  std::ostream& out_;
  std::ostream& err_;
  std::ostringstream buf_;
};

int Runner::check(const std::string& file) {
  const auto data = load(file);
  const auto vr = validate(data, {!g_.no_integrality});

  struct Step {
    bool passed = false;
    std::optional<std::string> value;
    std::optional<std::string> error;
  };
  auto step = [](auto&& f) {
    Step s;
    try {
      s.value = to_string(f());
      s.passed = true;
    } catch (const Error& e) {
      s.error = e.what();
    }
    return s;
  };
  const Step c1 = step([&] { return c1_coefficient(data); });
  const Step d = step([&] { return condition_d_offset(data); });

  Step battery;
  std::vector<std::pair<int, int>> failures;
  try {
    auto br = vanishing_battery(data);
    battery.passed = br.passed();
    battery.value = to_string(br.volume);
    failures = br.failures;
  } catch (const Error& e) {
    battery.error = e.what();
  }
  const bool all = vr.ok() && c1.passed && d.passed && battery.passed;

  if (g_.json) {
    auto step_json = [](const Step& s) {
      ojson j;
      j["passed"] = s.passed;
      j["value"] = s.value ? ojson(*s.value) : ojson(nullptr);
      j["error"] = s.error ? ojson(*s.error) : ojson(nullptr);
      return j;
    };
    ojson j;
    j["command"] = "check";
    j["passed"] = all;
    j["validate"]["passed"] = vr.ok();
    j["validate"]["violations"] = ojson::array();
    for (const auto& v : vr.violations) {
      static constexpr const char* names[] = {"MomentOrder", "MomentIntegrality", "ZeroWeight", "NegativeCount",
                                              "IndexBound"};
      ojson vj;
      vj["rule"] = names[static_cast<int>(v.rule)];
      vj["point"] = v.point;
      vj["message"] = v.message;
      j["validate"]["violations"].push_back(std::move(vj));
    }
    j["c1"] = step_json(c1);
    j["condition_d"] = step_json(d);
    ojson bj;
    bj["passed"] = battery.passed;
    bj["failures"] = ojson::array();
    for (auto [a, b] : failures) bj["failures"].push_back({a, b});
    bj["volume"] = battery.value ? ojson(*battery.value) : ojson(nullptr);
    bj["error"] = battery.error ? ojson(*battery.error) : ojson(nullptr);
    j["battery"] = std::move(bj);
    buf_ << j.dump(2) << "\n";
  } else {
    auto verdict = [](bool ok) { return ok ? "PASS" : "FAIL"; };
    buf_ << "validate: " << verdict(vr.ok()) << "\n";
    for (const auto& v : vr.violations) buf_ << "  " << v.message << "\n";
    buf_ << "c1: " << verdict(c1.passed) << (c1.value ? " (C = " + *c1.value + ")" : " (" + *c1.error + ")") << "\n";
    buf_ << "condition D: " << verdict(d.passed) << (d.value ? " (d = " + *d.value + ")" : " (" + *d.error + ")")
         << "\n";
    buf_ << "battery: " << verdict(battery.passed);
    if (battery.value) buf_ << " (V = " << *battery.value << ")";
    if (battery.error) buf_ << " (" << *battery.error << ")";
    buf_ << "\n";
    for (auto [a, b] : failures) buf_ << "  nonzero localization sum for c1^" << a << " [omega - phi t]^" << b << "\n";
  }
  return finish(all ? kPass : kCheckFailed);
}

int Runner::ring(const std::string& file) {
  const auto data = load(file);
  if (!require_valid(data)) return finish(kCheckFailed);
  const auto rc = ring_coefficients(data);
  const auto kind = classify_ring(rc).kind();
  if (g_.json) {
    ojson j;
    j["command"] = "ring";
    j["r"] = rat_array(rc.r);
    j["classification"] = to_string(kind);
    buf_ << j.dump(2) << "\n";
  } else {
    buf_ << "ring: " << join(rc.r) << " — " << to_string(kind) << "\n";
  }
  return finish(kPass);
}

int Runner::chern(const std::string& file) {
  const auto data = load(file);
  if (!require_valid(data)) return finish(kCheckFailed);
  const auto cd = chern_coefficients(data);
  if (g_.json) {
    ojson j;
    j["command"] = "chern";
    j["gamma"] = rat_array(std::vector<Rat>(cd.total.begin() + 1, cd.total.end()));
    j["sigma"] = ojson::array();
    for (const auto& row : cd.sigma) {
      ojson r = ojson::array();
      for (const auto& v : row) r.push_back(v.str());
      j["sigma"].push_back(std::move(r));
    }
    buf_ << j.dump(2) << "\n";
  } else {
    buf_ << format_total_chern(cd.total) << "\n";
    for (std::size_t i = 0; i < cd.sigma.size(); ++i) {
      buf_ << "sigma P_" << i << ":";
      for (const auto& v : cd.sigma[i]) buf_ << " " << v.str();
      buf_ << "\n";
    }
  }
  return finish(kPass);
}

int Runner::model(const std::string& kind, const std::string& b, int n) {
  const auto values = parse_int_list(b, "--b");
  InputDocument doc{kind == "cpn" ? cpn_model(values) : quadric_model(n, values), {}};
  doc.meta["name"] = kind == "cpn" ? "CP^" + std::to_string(doc.data.n()) : "Q_" + std::to_string(doc.data.n());
  if (g_.normalize) doc.data = doc.data.normalized();
  buf_ << serialize(doc);
  return finish(kPass);
}

int Runner::solve(const std::string& ring, const std::string& phi, const std::string& r,
                  std::optional<std::int64_t> max_w) {
  const auto phis = parse_int_list(phi, "--phi");
  const auto spec = make_spec(ring, phis.size(), r);
  const auto result = enumerate_weight_systems(spec, phis, solve_options(max_w));
  const auto count = result.systems.size();
  if (g_.json) {
    ojson j;
    j["command"] = "solve";
    j["ring"] = to_string(spec.kind());
    j["phis"] = phis;
    j["count"] = count;
    j["uniqueness_claimed"] = result.uniqueness_claimed;
    j["systems"] = ojson::array();
    for (const auto& s : result.systems) j["systems"].push_back(to_json(s));
    buf_ << j.dump(2) << "\n";
  } else {
    for (std::size_t k = 0; k < count; ++k) {
      buf_ << "system " << k + 1 << ":\n";
      print_system(buf_, result.systems[k]);
    }
    buf_ << count << (count == 1 ? " system found" : " systems found") << "\n";
    if (!result.uniqueness_claimed) buf_ << "note: ring is not CP^n or a quadric; no uniqueness claim\n";
  }
  return finish(kPass);
}

int Runner::verify(const std::string& ring, const std::string& phi, const std::string& r,
                   std::optional<std::int64_t> max_w) {
  const auto phis = parse_int_list(phi, "--phi");
  const auto spec = make_spec(ring, phis.size(), r);
  const auto report = verify_equivalence(spec, phis, solve_options(max_w));
  if (g_.json) {
    ojson j;
    j["command"] = "verify";
    j["ring"] = to_string(spec.kind());
    j["passed"] = report.passed();
    j["lines"] = ojson::array();
    for (const auto& l : report.lines) j["lines"].push_back({{"name", l.name}, {"passed", l.passed}, {"detail", l.detail}});
    buf_ << j.dump(2) << "\n";
  } else {
    for (const auto& l : report.lines)
      buf_ << (l.passed ? "PASS " : "FAIL ") << l.name << ": " << l.detail << "\n";
  }
  return finish(report.passed() ? kPass : kCheckFailed);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fixed point data of Hamiltonian circle actions with isolated fixed points"};
  app.name(args.empty() ? "hamfix" : args.front());
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  g.budget = budget_from_env();
  app.add_flag("--json", g.json, "Machine-readable report");
  app.add_option("--out", g.out_path, "Write the report or document to PATH");
  app.add_option("--jobs", g.jobs, "Solver threads")->check(CLI::PositiveNumber);
  app.add_flag("--normalize", g.normalize, "Translate moment values so that phi(P_0) = 0");
  app.add_flag("--no-integrality", g.no_integrality, "Allow non-integral moment differences");
  app.add_option("--budget", g.budget, "Solver node budget (default: $HAMFIX_BUDGET or 50000000)")
      ->check(CLI::PositiveNumber);

  std::string file;
  auto* check = app.add_subcommand("check", "Validate a fixed point datum and run the consistency checks");
  check->add_option("file", file, "Input JSON")->required();
  auto* ring = app.add_subcommand("ring", "Ring coefficients r_i and the ring classification");
  ring->add_option("file", file, "Input JSON")->required();
  auto* chern = app.add_subcommand("chern", "Chern coefficients and per-point symmetric functions");
  chern->add_option("file", file, "Input JSON")->required();

  std::string kind, b;
  int n = 0;
  auto* model = app.add_subcommand("model", "Emit the standard fixed point data of CP^n or a quadric");
  model->add_option("kind", kind, "cpn or quadric")->required()->check(CLI::IsMember({"cpn", "quadric"}));
  model->add_option("--b", b, "Comma separated exponents")->required();
  model->add_option("--n", n, "Complex dimension (quadric)");

  std::string ring_kind, phi, r;
  std::optional<std::int64_t> max_w;
  auto* solve = app.add_subcommand("solve", "Enumerate weight systems compatible with a ring and moment values");
  auto* verify = app.add_subcommand("verify", "Check the four equivalent conditions for CP^n or a quadric");
  for (auto* sub : {solve, verify}) {
    sub->add_option("--ring", ring_kind, "cpn, quadric or other")
        ->required()
        ->check(CLI::IsMember({"cpn", "quadric", "other"}));
    sub->add_option("--phi", phi, "Comma separated increasing integer moment values")->required();
    sub->add_option("--r", r, "Ring coefficients r_0..r_n for --ring other");
    sub->add_option("--max-weight", max_w, "Largest weight magnitude to try");
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }

  if (model->parsed() && kind == "quadric" && model->count("--n") == 0) {
    err << "error: model quadric needs --n\n";
    return kInputError;
  }

  Runner runner(g, out, err);
  try {
    if (check->parsed()) return runner.check(file);
    if (ring->parsed()) return runner.ring(file);
    if (chern->parsed()) return runner.chern(file);
    if (model->parsed()) return runner.model(kind, b, n);
    if (solve->parsed()) return runner.solve(ring_kind, phi, r, max_w);
    if (verify->parsed()) return runner.verify(ring_kind, phi, r, max_w);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kInputError;
}

}  // namespace hamfix::cli
