#include "weyl/commands.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "weyl/errors.hpp"
#include "weyl/format.hpp"
#include "weyl/parse.hpp"
#include "weyl/screen.hpp"
#include "weyl/selftest.hpp"
#include "weyl/support_geometry.hpp"
#include "weyl/unipoly.hpp"
#include "weyl/weyl_core.hpp"

namespace weyl {

namespace {

using Json = nlohmann::ordered_json;

Json point_json(LatticePoint p) { return Json::array({p.i, p.j}); }
Json dir_json(const Direction& d) { return Json::array({d.rho(), d.sigma()}); }

template <class Tag>
Json bipoly_json(const BiPoly<Tag>& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exp", point_json(e)}, {"coeff", to_string(c)}});
  return {{"text", render(p)}, {"terms", terms}};
}

Json unipoly_json(const UniPoly& f, char var) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"exp", e}, {"coeff", to_string(c)}});
  return {{"text", render(f, var)}, {"terms", terms}};
}

Json witnesses_json(const std::vector<Witness>& ws) {
  Json out = Json::array();
  for (const auto& w : ws) out.push_back({{"name", w.name}, {"value", w.value}});
  return out;
}

std::int64_t parse_int(std::string s, const char* what) {
  s.erase(0, s.find_first_not_of(' '));
  std::int64_t v = 0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) throw PreconditionError(std::string("expected an integer for ") + what + ", got '" + s + "'");
  return v;
}

Direction parse_dir(const std::optional<std::string>& text) {
  if (!text) throw PreconditionError("this command needs --dir R,S");
  const auto comma = text->find(',');
  if (comma == std::string::npos) throw PreconditionError("--dir expects R,S");
  return Direction(parse_int(text->substr(0, comma), "--dir"), parse_int(text->substr(comma + 1), "--dir"));
}

struct Context {
  explicit Context(const CommandRequest& r) : req(r) {}

  const CommandRequest& req;
  Json result = Json::object();
  std::vector<Witness> witnesses;
  std::ostringstream text;
  bool failed = false;

  const std::string& arg(std::size_t n) const { return req.args[n]; }
  WeylElement element(std::size_t n) const { return parse_element(arg(n)); }
  UniPoly unipoly(std::size_t n) const { return parse_unipoly(arg(n)); }
  Direction dir() const { return parse_dir(req.dir); }
};

using Handler = std::function<void(Context&)>;

struct CommandSpec {
  std::size_t arity;
  Handler run;
};

void element_result(Context& c, const WeylElement& p) {
  c.result["element"] = bipoly_json(p);
  c.text << render(p) << '\n';
}

void comm_result(Context& c, const CommPoly& p) {
  c.result["polynomial"] = bipoly_json(p);
  c.text << render(p) << '\n';
}

std::string join_points(const std::vector<LatticePoint>& pts) {
  std::string s;
  for (const auto& p : pts) s += (s.empty() ? "" : " ") + to_string(p);
  return s;
}

const std::map<std::string, CommandSpec>& commands() {
  static const std::map<std::string, CommandSpec> table = {
      {"normalize", {1, [](Context& c) { element_result(c, c.element(0)); }}},
      {"mul", {2, [](Context& c) { element_result(c, normal_mul(c.element(0), c.element(1))); }}},
      {"bracket", {2, [](Context& c) { element_result(c, bracket(c.element(0), c.element(1))); }}},
      {"pow",
       {2,
        [](Context& c) {
          const std::int64_t k = parse_int(c.arg(1), "the exponent");
          if (k < 0) throw PreconditionError("pow needs a nonnegative exponent");
          element_result(c, pow(c.element(0), static_cast<unsigned>(k)));
        }}},
      {"mass",
       {1,
        [](Context& c) {
          WeylElement p = c.element(0);
          if (c.req.square) p = normal_mul(p, p);
          const Index m = mass(p);
          c.result["mass"] = m;
          c.result["squared"] = c.req.square;
          c.text << m << '\n';
        }}},
      {"valuation",
       {1,
        [](Context& c) {
          const Direction d = c.dir();
          const Valuation v = valuation(c.element(0), d);
          c.result["dir"] = dir_json(d);
          if (v.is_neg_infinity()) {
            c.result["valuation"] = "-inf";
            c.text << "-inf\n";
          } else {
            c.result["valuation"] = v.value();
            c.text << v.value() << '\n';
          }
        }}},
      {"leading",
       {1,
        [](Context& c) {
          const Direction d = c.dir();
          c.result["dir"] = dir_json(d);
          comm_result(c, leading(c.element(0), d));
        }}},
      {"st-en",
       {1,
        [](Context& c) {
          const Direction d = c.dir();
          const Endpoints e = st_en(c.element(0), d);
          c.result["dir"] = dir_json(d);
          c.result["st"] = point_json(e.st);
          c.result["en"] = point_json(e.en);
          c.text << "st " << to_string(e.st) << " en " << to_string(e.en) << '\n';
        }}},
      {"newton",
       {1,
        [](Context& c) {
          const NewtonPolygon hull = newton_polygon(c.element(0));
          Json vs = Json::array();
          for (const auto& v : hull.vertices) vs.push_back(point_json(v));
          c.result["vertices"] = vs;
          c.text << join_points(hull.vertices) << '\n';
        }}},
      {"dirs",
       {1,
        [](Context& c) {
          const std::vector<Direction> ds = dir_set(c.element(0));
          Json arr = Json::array();
          std::string line;
          for (const auto& d : ds) {
            arr.push_back(dir_json(d));
            line += (line.empty() ? "" : " ") + to_string(d);
          }
          c.result["dirs"] = arr;
          c.text << (line.empty() ? "none" : line) << '\n';
        }}},
      {"fpoly",
       {1,
        [](Context& c) {
          const Direction d = c.dir();
          const LeadingPolynomial lp = extract_fP(c.element(0), d);
          c.result["dir"] = dir_json(d);
          c.result["st"] = point_json(lp.st);
          c.result["f"] = unipoly_json(lp.f, 'y');
          c.text << "st " << to_string(lp.st) << '\n' << "f " << render(lp.f, 'y') << '\n';
        }}},
      {"subrect",
       {1,
        [](Context& c) {
          const auto corner = is_subrectangular(c.element(0));
          c.result["subrectangular"] = corner.has_value();
          c.result["corner"] = corner ? point_json(*corner) : Json(nullptr);
          c.text << (corner ? to_string(*corner) : "none") << '\n';
        }}},
      {"bracket-rs",
       {2,
        [](Context& c) {
          const Direction d = c.dir();
          c.result["dir"] = dir_json(d);
          comm_result(c, bracket_rs(c.element(0), c.element(1), d));
        }}},
      {"classify",
       {1,
        [](Context& c) {
          const WeylElement p = c.element(0);
          const Classification cl = classify_case(p);
          const BoundReport br = mass_bound_report(p);
          c.result["case"] = cl.label.name();
          c.result["reason"] = cl.label.reason;
          c.result["bound"] = {{"implied_bound", br.implied_bound ? Json(*br.implied_bound) : Json(nullptr)},
                               {"row", br.row},
                               {"rationale", br.rationale},
                               {"predicates", witnesses_json(br.predicates)}};
          c.witnesses = cl.witnesses;
          c.text << cl.label.name();
          if (cl.label.is_excluded()) c.text << ": " << cl.label.reason;
          c.text << '\n' << "bound: " << br.rationale << '\n';
        }}},
      {"screen",
       {2,
        [](Context& c) {
          const ScreenReport r = check_pair(c.element(0), c.element(1));
          c.result["bracket_ok"] = r.bracket_ok;
          c.result["mass_p"] = r.mass_p;
          c.result["mass_q"] = r.mass_q;
          c.result["case"] = r.case_label ? Json(r.case_label->name()) : Json(nullptr);
          c.result["implied_bound"] = r.implied_bound ? Json(*r.implied_bound) : Json(nullptr);
          c.result["verdict"] = r.verdict ? Json(to_string(*r.verdict)) : Json(nullptr);
          c.witnesses = r.witnesses;
          c.text << "bracket_ok: " << (r.bracket_ok ? "true" : "false") << '\n';
          c.text << "m(P): " << r.mass_p << '\n' << "m(Q): " << r.mass_q << '\n';
          if (r.case_label) c.text << "case: " << r.case_label->name() << '\n';
          if (r.implied_bound) c.text << "implied bound: " << *r.implied_bound << '\n';
          c.text << "verdict: " << (r.verdict ? to_string(*r.verdict) : "none") << '\n';
        }}},
      {"decompose",
       {1,
        [](Context& c) {
          const Direction d = c.dir();
          const auto ds = decompose_leading_power(c.element(0), d, c.req.max_k);
          Json arr = Json::array();
          for (const auto& dec : ds) {
            arr.push_back({{"k", dec.k}, {"mu", to_string(dec.mu)}, {"root", bipoly_json(dec.root)}});
            c.text << "k=" << dec.k << " mu=" << to_string(dec.mu) << " R=" << render(dec.root) << '\n';
          }
          c.result["dir"] = dir_json(d);
          c.result["decompositions"] = arr;
          if (ds.empty()) c.text << "none\n";
        }}},
      {"find-f",
       {1,
        [](Context& c) {
          const Direction d = c.dir();
          const auto sol = find_F(c.element(0), d, c.req.bound);
          c.result["dir"] = dir_json(d);
          c.result["bound"] = c.req.bound;
          if (!sol) {
            c.result["found"] = false;
            c.text << "none within bound " << c.req.bound << '\n';
            return;
          }
          Json kernel = Json::array();
          std::string ktext;
          for (const auto& k : sol->kernel) {
            kernel.push_back(bipoly_json(k));
            ktext += (ktext.empty() ? "" : "; ") + render(k);
          }
          c.result["found"] = true;
          c.result["particular"] = bipoly_json(sol->particular);
          c.result["kernel"] = kernel;
          c.text << "particular: " << render(sol->particular) << '\n'
                 << "kernel: " << (ktext.empty() ? "none" : ktext) << '\n';
        }}},
      {"untwist",
       {1,
        [](Context& c) {
          const UntwistResult r = reduce_upper_edge(c.element(0), c.req.max_iters);
          Json trace = Json::array();
          std::string ttext;
          for (const auto& s : r.trace) {
            trace.push_back({{"sigma", s.sigma}, {"mu", to_string(s.mu)}});
            ttext += (ttext.empty() ? "" : ", ") + ("(" + std::to_string(s.sigma) + "," + to_string(s.mu) + ")");
          }
          c.result["reduced"] = bipoly_json(r.reduced);
          c.result["trace"] = trace;
          c.text << "reduced: " << render(r.reduced) << '\n' << "trace: [" << ttext << "]\n";
        }}},
      {"tcount",
       {1,
        [](Context& c) {
          const std::int64_t t = t_count(c.unipoly(0));
          c.result["t"] = t;
          c.text << t << '\n';
        }}},
      {"kth-root",
       {2,
        [](Context& c) {
          const UniPoly f = c.unipoly(0);
          const std::int64_t k = parse_int(c.arg(1), "k");
          if (c.req.prec) {
            const UniPoly u = kth_root_series(f, k, *c.req.prec);
            c.result["series"] = unipoly_json(u, 'x');
            c.text << render(u) << '\n';
            return;
          }
          const auto root = poly_kth_root(f, k);
          c.result["exists"] = root.has_value();
          if (!root) {
            c.text << "none\n";
            return;
          }
          c.result["mu"] = to_string(root->mu);
          c.result["root"] = unipoly_json(root->root, 'x');
          c.text << "mu " << to_string(root->mu) << '\n' << "root " << render(root->root) << '\n';
        }}},
      {"factors",
       {1,
        [](Context& c) {
          const std::int64_t n = distinct_factor_count(c.unipoly(0));
          c.result["distinct_factors"] = n;
          c.text << n << '\n';
        }}},
      {"power-check",
       {2,
        [](Context& c) {
          const PowerSupport ps = power_support_check(c.unipoly(0), parse_int(c.arg(1), "k"));
          c.result["t"] = ps.t;
          c.result["boundary_case"] = ps.boundary_case;
          c.text << "t " << ps.t << '\n' << "boundary " << (ps.boundary_case ? "true" : "false") << '\n';
        }}},
      {"selftest",
       {0,
        [](Context& c) {
          if (c.req.cases < 1) throw PreconditionError("selftest needs --cases >= 1");
          const SelftestSummary s = oracle_suite(c.req.seed, c.req.cases);
          Json suites = Json::array();
          for (const auto& r : s.suites) {
            suites.push_back({{"name", r.name},
                              {"cases", r.cases},
                              {"failures", r.failures},
                              {"first_failure", r.first_failure}});
            c.text << r.name << ": ";
            if (r.passed()) {
              c.text << "pass (" << r.cases << " cases)\n";
            } else {
              c.text << "FAIL (" << r.failures << " of " << r.cases << "), first: " << r.first_failure << '\n';
            }
          }
          c.result["suites"] = suites;
          c.result["all_passed"] = s.all_passed();
          c.text << (s.all_passed() ? "all passed" : "FAILED") << '\n';
          c.failed = !s.all_passed();
        }}},
  };
  return table;
}

Json inputs_json(const CommandRequest& r) {
  Json in = {{"args", r.args}};
  if (r.dir) in["dir"] = dir_json(parse_dir(r.dir));
  if (r.name == "mass") in["square"] = r.square;
  if (r.name == "kth-root" && r.prec) in["prec"] = *r.prec;
  if (r.name == "find-f") in["bound"] = r.bound;
  if (r.name == "untwist") in["max_iters"] = r.max_iters;
  if (r.name == "decompose") in["max_k"] = r.max_k;
  if (r.name == "selftest") in["cases"] = r.cases;
  return in;
}

struct CliOptions {
  std::string command;
  std::vector<std::string> args;
  std::string dir;
  bool json = false;
  bool square = false;
  std::int64_t prec = -1;
  std::int64_t bound = 32;
  int max_iters = 64;
  std::int64_t max_k = 0;
  std::uint64_t seed = 0;
  std::int64_t cases = 200;
  std::string golden;
};

void configure(CLI::App& app, CliOptions& o) {
  app.add_option("command", o.command, "Command name");
  app.add_option("args", o.args, "Command arguments");
  app.add_option("--dir", o.dir, "Direction R,S (coprime)");
  app.add_flag("--json", o.json, "Emit the JSON report");
  app.add_flag("--square", o.square, "mass: use P^2");
  app.add_option("--prec", o.prec, "kth-root: truncated series to this precision");
  app.add_option("--bound", o.bound, "find-f: exponent window")->capture_default_str();
  app.add_option("--max-iters", o.max_iters, "untwist: iteration cap")->capture_default_str();
  app.add_option("--max-k", o.max_k, "decompose: largest k (0 = automatic)")->capture_default_str();
  app.add_option("--seed", o.seed, "selftest: seed")->capture_default_str();
  app.add_option("--cases", o.cases, "selftest: cases per suite")->capture_default_str();
  app.add_option("--golden", o.golden, "Run a golden file");
}

int execute(const CliOptions& o, std::ostream& out, std::ostream& err) {
  if (!o.golden.empty()) {
    const int failures = run_golden(o.golden, out, err);
    return failures == 0 ? 0 : 2;
  }
  if (o.command.empty()) {
    err << "error: no command given\n";
    return 1;
  }
  CommandRequest req;
  req.name = o.command;
  req.args = o.args;
  if (!o.dir.empty()) req.dir = o.dir;
  req.square = o.square;
  if (o.prec >= 0) req.prec = o.prec;
  req.bound = o.bound;
  req.max_iters = o.max_iters;
  req.max_k = o.max_k;
  req.seed = o.seed;
  req.cases = o.cases;
  try {
    const CommandResult r = run_command(req);
    out << (o.json ? r.document.dump(2) + "\n" : r.text);
    return r.failed ? 2 : 0;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const InvariantError& e) {
    err << "invariant violated: " << e.what() << '\n';
    return 2;
  }
}

// Single-dash tokens ("-X*Y", "-1,1") are values: prefix a space.
std::vector<std::string> shield_negatives(std::vector<std::string> tokens) {
  for (auto& t : tokens) {
    if (t.size() > 1 && t[0] == '-' && t[1] != '-') t.insert(0, " ");
  }
  return tokens;
}

int cli_main(std::vector<std::string> tokens, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tools for the first Weyl algebra", "weylscreen"};
  CliOptions o;
  configure(app, o);
  tokens = shield_negatives(std::move(tokens));
  std::reverse(tokens.begin(), tokens.end());
  try {
    app.parse(tokens);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return execute(o, out, err);
}

}  // namespace

CommandResult run_command(const CommandRequest& request) {
  const auto& table = commands();
  const auto it = table.find(request.name);
  if (it == table.end()) throw PreconditionError("unknown command '" + request.name + "'");
  if (request.args.size() != it->second.arity) {
    throw PreconditionError(request.name + " takes " + std::to_string(it->second.arity) + " argument(s), got " +
                            std::to_string(request.args.size()));
  }
  Context ctx(request);
  it->second.run(ctx);
  CommandResult out;
  out.document = {{"command", request.name},
                  {"inputs", inputs_json(request)},
                  {"result", ctx.result},
                  {"witnesses", witnesses_json(ctx.witnesses)},
                  {"meta", {{"version", kToolVersion}, {"seed", request.name == "selftest" ? Json(request.seed) : Json(nullptr)}}}};
  out.text = ctx.text.str();
  out.failed = ctx.failed;
  return out;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  return cli_main(std::vector<std::string>(argv + std::min(argc, 1), argv + argc), out, err);
}

int run_cli_line(const std::string& line, std::ostream& out, std::ostream& err) {
  std::vector<std::string> tokens = CLI::detail::split_up(line);
  for (auto& t : tokens) {
    if (t.size() >= 2 && (t.front() == '"' || t.front() == '\'') && t.back() == t.front()) t = t.substr(1, t.size() - 2);
  }
  return cli_main(std::move(tokens), out, err);
}

int run_golden(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open golden file " + path);

  struct Entry {
    std::string command;
    std::string expected;
    int line;
  };
  std::vector<Entry> entries;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.starts_with("#")) continue;
    if (line.starts_with("$ ")) {
      entries.push_back({line.substr(2), {}, number});
    } else if (!entries.empty()) {
      entries.back().expected += line + "\n";
    } else if (!line.empty()) {
      throw PreconditionError("golden file: output before the first command at line " + std::to_string(number));
    }
  }

  int failures = 0;
  for (auto& e : entries) {
    // Blank lines separate entries; they are not part of the output.
    while (e.expected.ends_with("\n\n")) e.expected.pop_back();
    if (e.expected == "\n") e.expected.clear();
    std::ostringstream captured;
    const int code = run_cli_line(e.command, captured, captured);
    std::string actual = captured.str();
    if (code != 0) actual += "[exit " + std::to_string(code) + "]\n";
    if (actual != e.expected) {
      ++failures;
      err << path << ":" << e.line << ": mismatch for '" << e.command << "'\n--- expected\n"
          << e.expected << "--- actual\n"
          << actual;
    }
  }
  out << entries.size() - static_cast<std::size_t>(failures) << "/" << entries.size() << " golden entries match\n";
  return failures;
}

}  // namespace weyl
