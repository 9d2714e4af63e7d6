#include "cli.hpp"

#include <bezout/acceptance.hpp>
#include <bezout/eliminant.hpp>
#include <bezout/error.hpp>
#include <bezout/fibercount.hpp>
#include <bezout/oracle.hpp>
#include <bezout/parse.hpp>
#include <bezout/puiseux.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace bezout::cli {

using json = nlohmann::ordered_json;

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

template <typename T>
T parse_number(const std::string& value, std::size_t line, const std::string& key) {
  std::istringstream is(value);
  T v{};
  if (!(is >> v) || !is.eof()) throw ParseError(line, "line " + std::to_string(line) + ": bad value for " + key);
  return v;
}

int exit_for(Errc code) {
  switch (code) {
    case Errc::parse:
    case Errc::invalid_spec:
      return usage;
    case Errc::infinite_fiber:
    case Errc::degree_drop:
    case Errc::degree_overflow:
    case Errc::identically_zero:
      return invalid_system;
    case Errc::no_general_line:
      return no_general_line;
    case Errc::ill_conditioned:
    case Errc::fit_diverged:
    case Errc::non_integer_sum:
    case Errc::numeric_unstable:
      return numeric_failure;
    default:
      return disagreement;
  }
}

struct Settings {
  std::string method = "all";
  std::uint64_t seed = 0;
  std::optional<double> precision;
  std::optional<double> radius;
  std::string scale = "small";
  int trials = 5;
};

struct Loaded {
  SystemFile file;
  PolySystem system;
  std::optional<BivarPoly> H;
};

Loaded load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::invalid_spec, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  Loaded l;
  l.file = parse_system_file(buf.str());
  const auto& f = l.file;
  if (f.n1 < 1 || f.n2 < 1) throw Error(Errc::invalid_spec, "n1 and n2 must be positive");
  l.system = PolySystem(f.n1, f.n2, parse_poly(f.F1, f.n1), parse_poly(f.F2, f.n2));
  if (f.H) {
    BivarPoly h = parse_poly(*f.H);
    if (h.degree() != 1 || !is_zero(h.coeff(0, 0))) throw Error(Errc::invalid_spec, "H must be a nonzero homogeneous linear polynomial");
    l.H = h;
  }
  return l;
}

json input_json(const PolySystem& s) { return {{"n1", s.n1}, {"n2", s.n2}, {"F1", s.F1.str()}, {"F2", s.F2.str()}}; }

json dims_json(const std::vector<std::size_t>& dims) {
  json a = json::array();
  for (auto d : dims) a.push_back(d);
  return a;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

class Timer {
 public:
  Timer(std::ostream& err, std::string label) : err_(err), label_(std::move(label)), start_(std::chrono::steady_clock::now()) {}
  ~Timer() {
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    err_ << "[bezout] " << label_ << " took " << s << " s\n";
  }

 private:
  std::ostream& err_;
  std::string label_;
  std::chrono::steady_clock::time_point start_;
};

int cmd_count(const Loaded& l, const Settings& st, std::ostream& out, std::ostream& err) {
  const PolySystem& s = l.system;
  json r{{"command", "count"}, {"method", st.method}, {"input", input_json(s)}};
  fibercount::require_valid(s);
  const BivarPoly line = l.H ? *l.H : fibercount::choose_general_line(s);
  fibercount::require_general(s, line);
  r["valid"] = true;
  r["line"] = line.str();
  json counts = json::object();
  std::optional<int> agreed;
  bool diverged = false;
  auto record = [&](const std::string& name, int value) {
    counts[name] = value;
    if (agreed && *agreed != value) diverged = true;
    if (!agreed) agreed = value;
  };
  if (st.method == "filtration" || st.method == "all") {
    Timer t(err, "filtration");
    const auto fc = fibercount::count_filtration(s, line);
    record("filtration", fc.count);
    r["dims"] = dims_json(fc.filtration.dims);
  }
  if (st.method == "eliminant" || st.method == "all") {
    Timer t(err, "eliminant");
    record("eliminant", eliminant::count_via_eliminant(s, line));
  }
  if (st.method == "oracle" || st.method == "all") {
    Timer t(err, "oracle");
    record("oracle", oracle::count_via_line_pencil(s, line));
  }
  r["counts"] = counts;
  if (st.method == "all") {
    try {
      r["advisory"] = {{"numeric", oracle::numeric_count(s)}};
    } catch (const Error& e) {
      r["advisory"] = {{"numeric", nullptr}, {"note", e.what()}};
    }
  }
  if (diverged) {
    r["status"] = "MethodDisagreement";
    emit(out, r);
    err << "[bezout] counting methods disagree\n";
    return disagreement;
  }
  r["status"] = "ok";
  r["count"] = *agreed;
  emit(out, r);
  return ok;
}

int cmd_trace(const Loaded& l, std::ostream& out, std::ostream& err) {
  const PolySystem& s = l.system;
  Timer t(err, "trace");
  const auto fc = fibercount::count_filtration(s, l.H);
  const auto& f = fc.filtration;
  json conc = json::array();
  for (std::size_t i = 1; i + 1 < f.dims.size(); ++i)
    conc.push_back({{"i", i}, {"ok", 2 * f.dims[i] >= f.dims[i - 1] + f.dims[i + 1]}});
  json r{{"command", "trace"},
         {"input", input_json(s)},
         {"valid", true},
         {"line", fc.line.str()},
         {"dim_K", f.K.dim()},
         {"prefix_dim", f.prefix_dim},
         {"dims", dims_json(f.dims)},
         {"stabilized_at", f.stabilized_at},
         {"monotone", qlinalg::is_chain(f.chain)},
         {"concave", qlinalg::is_concave(f.dims)},
         {"concavity", conc},
         {"count", fc.count},
         {"status", "ok"}};
  emit(out, r);
  return ok;
}

puiseux::TrackOptions track_options(const Loaded& l, const Settings& st) {
  puiseux::TrackOptions o;
  if (auto p = st.precision ? st.precision : l.file.precision) o.tolerance = *p;
  if (auto rad = st.radius ? st.radius : l.file.radius) o.radius = *rad;
  return o;
}

int cmd_zeuthen(const Loaded& l, const Settings& st, std::ostream& out, std::ostream& err) {
  const PolySystem& s = l.system;
  Timer t(err, "zeuthen");
  const auto z = puiseux::zeuthen(s, track_options(l, st));
  json cycles = json::array();
  for (const auto& c : z.cycles)
    cycles.push_back({{"den", c.den},
                      {"lead_exp", c.lead_exp ? json(c.lead_exp->get_str()) : json(nullptr)},
                      {"degree", c.degree.get_str()},
                      {"multiplicity", c.multiplicity}});
  if (z.negative_degree) err << "[bezout] a branch has negative composition degree\n";
  json r{{"command", "zeuthen"},
         {"input", input_json(s)},
         {"valid", true},
         {"substitution_lambda", z.substitution.lambda.get_str()},
         {"radius", z.radius},
         {"escalations", z.escalations},
         {"negative_degree", z.negative_degree},
         {"cycles", cycles},
         {"count", z.count},
         {"status", "ok"}};
  emit(out, r);
  return ok;
}

int cmd_bound_check(const Loaded& l, const Settings& st, std::ostream& out, std::ostream& err) {
  const PolySystem& s = l.system;
  Timer t(err, "bound-check");
  const std::uint64_t seed = st.seed != 0 ? st.seed : l.file.seed.value_or(0);
  const auto rep = puiseux::degree_bound_check(s, st.trials, seed);
  auto opt = [](const std::optional<int>& v) { return v ? json(*v) : json(nullptr); };
  json r{{"command", "bound-check"},
         {"input", input_json(s)},
         {"k", rep.k},
         {"bound", rep.bound},
         {"jacobian_zero", rep.jacobian_zero},
         {"fiber_count", opt(rep.fiber_count)},
         {"degree_estimate", opt(rep.degree_estimate)},
         {"satisfied", rep.satisfied},
         {"status", rep.satisfied ? "ok" : "BoundViolated"}};
  emit(out, r);
  return rep.satisfied ? ok : disagreement;
}

int cmd_gen(const std::string& family, int n1, int n2, int bound, const Settings& st, std::ostream& out, std::ostream& err) {
  const oracle::GeneratorSpec spec{oracle::family_from_string(family), n1, n2, bound, st.seed};
  const auto g = oracle::generate(spec);
  err << "[bezout] gen: " << g.rejections << " rejected draws\n";
  out << "# family " << family << " seed " << st.seed << "\n";
  if (g.points) {
    out << "# points";
    for (const auto& p : *g.points) out << " (" << p[0].get_str() << ", " << p[1].get_str() << ")";
    out << "\n";
  }
  if (g.degree) out << "# degree " << *g.degree << "\n";
  if (g.jacobian_degree_bound) out << "# jacobian degree <= " << *g.jacobian_degree_bound << "\n";
  out << format_system_file(g.system);
  return ok;
}

int cmd_selftest(const Settings& st, std::ostream& out) {
  const auto scale = st.scale == "full" ? acceptance::Scale::full : acceptance::Scale::small;
  bool all = true;
  for (int id = 1; id <= 9; ++id) {
    const auto r = acceptance::run_criterion(id, scale, st.seed);
    out << acceptance::format_line(r) << "\n" << std::flush;
    all = all && r.passed;
  }
  return all ? ok : disagreement;
}

}  // namespace

SystemFile parse_system_file(std::string_view text) {
  SystemFile f;
  bool have_n1 = false, have_n2 = false, have_f1 = false, have_f2 = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError(line_no, "line " + std::to_string(line_no) + ": unterminated section header");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(line_no, "line " + std::to_string(line_no) + ": expected key = value");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key == "n1") {
      f.n1 = parse_number<int>(value, line_no, key);
      have_n1 = true;
    } else if (key == "n2") {
      f.n2 = parse_number<int>(value, line_no, key);
      have_n2 = true;
    } else if (key == "F1") {
      f.F1 = value;
      have_f1 = true;
    } else if (key == "F2") {
      f.F2 = value;
      have_f2 = true;
    } else if (key == "H") {
      f.H = value;
    } else if (key == "precision") {
      f.precision = parse_number<double>(value, line_no, key);
    } else if (key == "seed") {
      f.seed = parse_number<std::uint64_t>(value, line_no, key);
    } else if (key == "radius") {
      f.radius = parse_number<double>(value, line_no, key);
    } else {
      throw ParseError(line_no, "line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  if (!have_n1 || !have_n2 || !have_f1 || !have_f2) throw ParseError(line_no, "system file needs n1, n2, F1 and F2");
  return f;
}

std::string format_system_file(const PolySystem& s) {
  std::ostringstream os;
  os << "n1 = " << s.n1 << "\nn2 = " << s.n2 << "\nF1 = " << s.F1.str() << "\nF2 = " << s.F2.str() << "\n";
  return os.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counts common zeros of bivariate polynomial systems."};
  app.require_subcommand(1);
  Settings st;
  std::string file;
  std::string family = "random";
  int n1 = 2, n2 = 2, bound = 5;

  auto add_file = [&](CLI::App* sub) { sub->add_option("file", file, "system file")->required(); };
  auto add_seed = [&](CLI::App* sub) { sub->add_option("--seed", st.seed, "random seed"); };

  auto* count = app.add_subcommand("count", "count common zeros");
  add_file(count);
  count->add_option("--method", st.method, "filtration, eliminant, oracle or all")
      ->check(CLI::IsMember({"filtration", "eliminant", "oracle", "all"}));
  auto* trace = app.add_subcommand("trace", "K_i dimension chain");
  add_file(trace);
  auto* zeuthen = app.add_subcommand("zeuthen", "count from branches at infinity");
  add_file(zeuthen);
  zeuthen->add_option("--precision", st.precision, "relative residual tolerance");
  zeuthen->add_option("--radius", st.radius, "smallest tracking radius");
  auto* bound_check = app.add_subcommand("bound-check", "Jacobian degree bound");
  add_file(bound_check);
  add_seed(bound_check);
  bound_check->add_option("--trials", st.trials, "generic targets sampled");
  auto* gen = app.add_subcommand("gen", "generate a system file");
  gen->add_option("--family", family, "random, line_products, automorphism or dk_family");
  gen->add_option("--n1", n1, "first degree (n for dk_family)");
  gen->add_option("--n2", n2, "second degree (d for dk_family)");
  gen->add_option("--bound", bound, "coefficient bound");
  add_seed(gen);
  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
  selftest->add_option("--scale", st.scale, "small or full")->check(CLI::IsMember({"small", "full"}));
  add_seed(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  const auto* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  try {
    if (name == "gen") return cmd_gen(family, n1, n2, bound, st, out, err);
    if (name == "selftest") return cmd_selftest(st, out);
    const Loaded l = load(file);
    if (name == "count") return cmd_count(l, st, out, err);
    if (name == "trace") return cmd_trace(l, out, err);
    if (name == "zeuthen") return cmd_zeuthen(l, st, out, err);
    return cmd_bound_check(l, st, out, err);
  } catch (const Error& e) {
    const int code = exit_for(e.code());
    json r{{"command", name}, {"valid", code != invalid_system}, {"status", std::string(to_string(e.code()))}, {"error", e.what()}};
    emit(out, r);
    err << "[bezout] " << e.what() << "\n";
    return code;
  } catch (const std::exception& e) {
    json r{{"command", name}, {"valid", nullptr}, {"status", "internal"}, {"error", e.what()}};
    emit(out, r);
    err << "[bezout] " << e.what() << "\n";
    return disagreement;
  }
}

}  // namespace bezout::cli
