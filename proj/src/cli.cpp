#include "fano/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <future>
#include <optional>
#include <regex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "fano/errors.hpp"
#include "fano/json_io.hpp"

namespace fano::cli {

namespace {

using io::json;

constexpr const char* kPrimeWarning =
    "computation over a prime field; statements proved in characteristic zero "
    "may fail in positive characteristic";

struct Options {
  std::string cubic_path;
  std::string line_path;
  std::string matrix_path;
  std::uint32_t prime = 0;
  std::uint64_t seed = 0;
  std::size_t limit = 20;
  std::string twists = "-3..3";
  int coeff_bound = 5;
  std::size_t points = 200;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

unsigned worker_count() {
  const char* env = std::getenv("FANO_WORKERS");
  if (env == nullptr) return 1;
  char* end = nullptr;
  const long n = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || n < 1) return 1;
  return static_cast<unsigned>(std::min<long>(n, 256));
}

std::pair<int, int> parse_twists(const std::string& text) {
  static const std::regex pattern(R"(^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw ParseError("--twists expects a..b, got '" + text + "'");
  const int lo = std::stoi(m[1].str());
  const int hi = std::stoi(m[2].str());
  if (lo > hi) throw ParseError("--twists range is empty");
  return {lo, hi};
}

struct Inputs {
  CubicFourfold cubic;
  Line line;
};

Inputs load_cubic_and_line(const Options& o) {
  CubicFourfold y = io::cubic_from_json(read_json_file(o.cubic_path), o.prime);
  Line l = io::line_from_json(read_json_file(o.line_path), o.prime);
  return {std::move(y), std::move(l)};
}

void stamp_prime(json& doc, std::uint32_t p) {
  if (p == 0) return;
  doc["prime"] = p;
  doc["warning"] = kPrimeWarning;
}

json verify_line(const Options& o, int& code) {
  const Inputs in = load_cubic_and_line(o);
  json doc = {{"line", io::to_json(in.line)}};
  if (!contains_line(in.cubic, in.line)) {
    doc["on_cubic"] = false;
    doc["error"] = {{"kind", LineNotOnCubicError("").kind()},
                    {"message", "F does not vanish identically on the line"}};
    code = 2;
    return doc;
  }
  doc["on_cubic"] = true;
  doc["smooth_along_line"] = smooth_along_line(in.cubic, in.line);
  return doc;
}

json tangent(const Options& o) {
  const Inputs in = load_cubic_and_line(o);
  const JacobianRestriction q = jacobian_on_line(in.cubic, in.line);
  const auto basis = tangent_space_basis(q);
  json sections = json::array();
  for (const auto& v : basis) sections.push_back(io::to_json(v.components));
  return {{"line", io::to_json(in.line)},
          {"smooth_along_line", smooth_along_line(q)},
          {"dimension", basis.size()},
          {"basis", sections}};
}

json splitting(const Options& o) {
  const Inputs in = load_cubic_and_line(o);
  json doc = io::to_json(splitting_basis(in.cubic, in.line));
  doc["line"] = io::to_json(in.line);
  return doc;
}

json form(const Options& o) {
  const Inputs in = load_cubic_and_line(o);
  const JacobianRestriction q = smooth_jacobian(in.cubic, in.line);
  const CechCocycle sigma = connecting_sigma(q);
  const SplittingData sd = splitting_basis(q);
  const GramMatrix g = gram_matrix(q, sigma, tangent_space_basis(q));
  json basis = json::array();
  for (const auto& v : g.basis) basis.push_back(io::to_json(v.components));
  return {{"line", io::to_json(in.line)},
          {"basis", basis},
          {"gram", io::to_json(g.entries)},
          {"rank", g.rank},
          {"non_generic", g.non_generic},
          {"splitting_type", to_string(sd.kind)},
          {"sigma", io::to_json(sigma)},
          {"sigma_components", io::to_json(sigma_splitting_components(sigma, sd), sd.kind)}};
}

/// Summary of one (Y, l) pair; precondition failures become an "error" entry.
json line_report(const CubicFourfold& y, const Line& l) {
  json r = {{"line", io::to_json(l)}};
  try {
    const JacobianRestriction q = jacobian_on_line(y, l);
    const bool smooth = smooth_along_line(q);
    r["smooth_along_line"] = smooth;
    r["tangent_dim"] = tangent_space_basis(q).size();
    if (!smooth) return r;
    const CechCocycle sigma = connecting_sigma(q);
    const SplittingData sd = splitting_basis(q);
    const GramMatrix g = gram_matrix(q, sigma, tangent_space_basis(q));
    r["splitting_type"] = to_string(sd.kind);
    r["h0_minus_one"] = sd.h0_table.at(-1);
    r["gram_rank"] = g.rank;
  } catch (const Error& e) {
    r["error"] = {{"kind", e.kind()}, {"message", e.what()}};
  }
  return r;
}

template <class Job>
std::vector<json> run_parallel(std::size_t n, unsigned workers, Job job) {
  std::vector<json> out(n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = job(i);
    return out;
  }
  for (std::size_t start = 0; start < n; start += workers) {
    const std::size_t stop = std::min<std::size_t>(n, start + workers);
    std::vector<std::future<json>> jobs;
    for (std::size_t i = start; i < stop; ++i) jobs.push_back(std::async(std::launch::async, job, i));
    for (std::size_t i = start; i < stop; ++i) out[i] = jobs[i - start].get();
  }
  return out;
}

json summarize(const std::vector<json>& reports) {
  std::size_t smooth = 0, type1 = 0, type2 = 0, rank4 = 0, errors = 0;
  for (const auto& r : reports) {
    if (r.contains("error") || r.contains("skipped")) ++errors;
    if (r.value("smooth_along_line", false)) ++smooth;
    const std::string t = r.value("splitting_type", "");
    type1 += t == "Type1";
    type2 += t == "Type2";
    rank4 += r.value("gram_rank", 0) == 4;
  }
  return {{"count", reports.size()}, {"smooth_along_line", smooth}, {"type1", type1},
          {"type2", type2},          {"gram_rank_4", rank4},        {"errors", errors}};
}

json sample(const Options& o) {
  const unsigned workers = worker_count();
  std::vector<json> reports;
  json doc;
  if (!o.cubic_path.empty()) {
    if (o.prime == 0) throw ParseError("sample --cubic enumerates lines and needs --prime");
    const CubicFourfold y = io::cubic_from_json(read_json_file(o.cubic_path), o.prime);
    const std::vector<Line> lines = enumerate_lines_mod_p(y, o.prime, o.limit, workers);
    reports = run_parallel(lines.size(), workers, [&](std::size_t i) { return line_report(y, lines[i]); });
    doc["mode"] = "enumerate";
  } else {
    reports = run_parallel(o.limit, workers, [&](std::size_t i) {
      const std::uint64_t s = o.seed + i;
      json r;
      try {
        Line l = random_line(s, 3);
        CubicFourfold y = cubic_through_line(l, s, o.coeff_bound);
        if (o.prime != 0) {
          y = y.in_field(o.prime);
          l = l.in_field(o.prime);
        }
        r = line_report(y, l);
      } catch (const Error& e) {
        r = {{"skipped", {{"kind", e.kind()}, {"message", e.what()}}}};
      }
      r["seed"] = s;
      return r;
    });
    doc["mode"] = "random";
    doc["seed"] = o.seed;
    doc["coeff_bound"] = o.coeff_bound;
  }
  doc["samples"] = reports;
  doc["summary"] = summarize(reports);
  return doc;
}

json pfaffian_cmd(const Options& o) {
  const auto [lo, hi] = parse_twists(o.twists);
  const SkewLinearMatrix m = io::skew_from_json(read_json_file(o.matrix_path), o.prime);
  const CubicThreefold x{pfaffian(m)};
  const CohomologyTable table = graded_cohomology_table(m, lo, hi);
  bool euler_ok = true;
  for (const auto& r : table.rows) euler_ok = euler_ok && r.euler_ok();
  json checks = {{"pfaffian_nonzero", true}, {"euler_ok", euler_ok}};
  const bool band_covered = table.find(-3) && table.find(-2) && table.find(-1);
  checks["vanishing_band"] = band_covered ? json(table.vanishing_band()) : json(nullptr);
  checks["h0_E1"] = table.find(0) ? json(table.find(0)->h[0]) : json(nullptr);
  checks["h0_E2"] = table.find(1) ? json(table.find(1)->h[0]) : json(nullptr);
  json doc = {{"pfaffian", io::to_json(x.form)}, {"table", io::to_json(table)}, {"checks", checks}};
  if (o.prime != 0) {
    const auto points = points_mod_p(x, o.prime, o.points);
    const auto ranks = rank_profile(m, x, points);
    json hist = json::object();
    bool parity = true;
    for (const auto r : ranks) {
      parity = parity && r % 2 == 0;
      hist[std::to_string(r)] = hist.value(std::to_string(r), 0) + 1;
    }
    doc["rank_profile"] = {{"points", points.size()}, {"ranks", hist}, {"parity_ok", parity}};
  }
  return doc;
}

/// "--twists -3..3" would otherwise be read as a short option.
std::vector<std::string> join_twists(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--twists" && i + 1 < args.size()) {
      out.push_back("--twists=" + args[++i]);
    } else {
      out.push_back(args[i]);
    }
  }
  return out;
}

void error_doc(std::ostream& out, const char* kind, const std::string& message) {
  out << json{{"error", {{"kind", kind}, {"message", message}}}}.dump(2) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Symplectic form on the Fano scheme of lines of a cubic fourfold", "fano"};
  app.require_subcommand(1, 1);

  const auto cubic_line = [&](CLI::App* sub) {
    sub->add_option("--cubic", o.cubic_path, "cubic JSON")->required();
    sub->add_option("--line", o.line_path, "line JSON")->required();
    sub->add_option("--prime", o.prime, "work over F_p");
  };
  CLI::App* verify = app.add_subcommand("verify-line", "check that the line lies on the cubic");
  cubic_line(verify);
  CLI::App* tan = app.add_subcommand("tangent", "basis of H^0(N)");
  cubic_line(tan);
  CLI::App* split = app.add_subcommand("splitting-type", "normal bundle splitting and generators");
  cubic_line(split);
  CLI::App* frm = app.add_subcommand("form", "Gram matrix of the 2-form on the tangent space");
  cubic_line(frm);

  CLI::App* smp = app.add_subcommand("sample", "random cubics through random lines, or lines mod p");
  smp->add_option("--cubic", o.cubic_path, "enumerate lines on this cubic (needs --prime)");
  smp->add_option("--prime", o.prime, "work over F_p");
  smp->add_option("--seed", o.seed, "first seed");
  smp->add_option("--limit", o.limit, "number of samples");
  smp->add_option("--coeff-bound", o.coeff_bound, "coefficient bound")->check(CLI::PositiveNumber);

  CLI::App* pf = app.add_subcommand("pfaffian", "Pfaffian cubic and cohomology table");
  pf->add_option("--matrix", o.matrix_path, "skew linear matrix JSON")->required();
  pf->add_option("--twists", o.twists, "range a..b of rows d (H^i(E(1+d)))");
  pf->add_option("--prime", o.prime, "work over F_p and sample rank profile");
  pf->add_option("--limit", o.points, "points for the rank profile");

  const std::vector<std::string> args = join_twists(raw_args);
  std::vector<const char*> argv{"fano"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    error_doc(out, "usage", e.what());
    return 1;
  }

  try {
    if (o.prime != 0) require_odd_prime(o.prime);
    int code = 0;
    json doc;
    if (app.got_subcommand(verify)) {
      doc = verify_line(o, code);
    } else if (app.got_subcommand(tan)) {
      doc = tangent(o);
    } else if (app.got_subcommand(split)) {
      doc = splitting(o);
    } else if (app.got_subcommand(frm)) {
      doc = form(o);
    } else if (app.got_subcommand(smp)) {
      doc = sample(o);
    } else {
      doc = pfaffian_cmd(o);
    }
    stamp_prime(doc, o.prime);
    out << doc.dump(2) << '\n';
    return code;
  } catch (const PreconditionError& e) {
    error_doc(out, e.kind(), e.what());
    return 2;
  } catch (const InconsistencyError& e) {
    error_doc(out, e.kind(), e.what());
    return 2;
  } catch (const Error& e) {
    error_doc(out, e.kind(), e.what());
    return 1;
  }
}

}  // namespace fano::cli
