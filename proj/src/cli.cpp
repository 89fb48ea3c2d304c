#include "qvcount/cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "qvcount/config.hpp"
#include "qvcount/errors.hpp"
#include "qvcount/fock.hpp"
#include "qvcount/integral.hpp"
#include "qvcount/partitions.hpp"
#include "qvcount/quiver.hpp"
#include "qvcount/report.hpp"
#include "qvcount/walls.hpp"
#include "qvcount/weights.hpp"

namespace qvc {

namespace {

struct Options {
  std::string quiver = "a1";
  std::string v, w, lambda, v0, alpha, chi, partition;
  std::vector<std::string> summands;
  std::string kind = "classical";
  bool with_chambers = false;
  int m = 2;
  int e = 2;
  int r = 1;
  int n = 0;
  long slack = 0;
  long max_dim = 0;
  std::string grid_v, grid_lambda;
  bool has_grid_v = false;
  bool has_grid_lambda = false;
  int threads = 0;
  std::string report_path;
  std::string format = "json";
};

// Options that may be given several times; replay repeats them.
const std::set<std::string> kRepeatable = {"summand"};

IntVector need_ints(const std::string& text, const char* name) {
  if (text.empty()) throw ParseError(std::string("missing --") + name);
  return parse_int_list(text);
}

RationalVector need_rationals(const std::string& text, const char* name) {
  if (text.empty()) throw ParseError(std::string("missing --") + name);
  return parse_rational_list(text);
}

Limits limits_from(const Options& o) {
  Limits l = Limits::from_env();
  if (o.slack > 0) l.slack = o.slack;
  if (o.max_dim > 0) l.max_module_dim = static_cast<std::size_t>(o.max_dim);
  if (l.max_slack < l.slack) l.max_slack = l.slack;
  return l;
}

Json count_json(const CountResult& c) {
  Json j;
  j["count"] = c.count ? Json(*c.count) : Json(nullptr);
  j["status"] = to_string(c.status);
  j["branch"] = c.branch;
  if (!c.reason.empty()) j["reason"] = c.reason;
  if (c.slack) j["slack"] = *c.slack;
  return j;
}

Json hyperplanes_json(const std::vector<Hyperplane>& hs) {
  Json a = Json::array();
  for (const auto& h : hs) a.push_back(to_json(h));
  return a;
}

std::vector<std::string> split_grid(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ';')) {
    auto b = cur.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    out.push_back(cur.substr(b));
  }
  return out;
}

// ---------------------------------------------------------------- commands

Json cmd_count(const Options& o) {
  Quiver q = load_quiver(o.quiver);
  IntVector v = need_ints(o.v, "v");
  IntVector w = need_ints(o.w, "w");
  RationalVector lambda = need_rationals(o.lambda, "lambda");
  auto c = predicted_count(q, v, w, lambda, limits_from(o));
  return make_report("count", {}, count_json(c), to_string(c.status));
}

Json cmd_mult(const Options& o) {
  Quiver q = load_quiver(o.quiver);
  IntVector v = need_ints(o.v, "v");
  auto m = freudenthal_mult(q, need_ints(o.w, "w"), v);
  return make_report("mult", {}, Json{{"multiplicity", m}}, "proven");
}

Json cmd_walls(const Options& o) {
  Quiver q = load_quiver(o.quiver);
  IntVector v = need_ints(o.v, "v");
  if (o.kind == "classical") {
    IntVector w = o.w.empty() ? IntVector(q.size(), 0) : parse_int_list(o.w);
    auto walls = classical_walls(q, v, w);
    Json res{{"hyperplanes", hyperplanes_json(walls)}};
    if (o.with_chambers) {
      Json ch = Json::array();
      for (const auto& s : chambers(walls, q.size())) ch.push_back(s);
      res["chambers"] = ch;
    }
    return make_report("walls", {}, res, "proven");
  }
  if (o.kind == "quantum") {
    Json roots = Json::array();
    for (const auto& r : quantum_walls(q, v, need_rationals(o.lambda, "lambda"))) roots.push_back(to_json(r));
    return make_report("walls", {}, Json{{"roots", roots}}, "proven");
  }
  if (o.kind == "singular") {
    auto rep = singular_hyperplanes(q, v, need_ints(o.w, "w"));
    Json unknown = Json::array();
    for (const auto& u : rep.unknown) {
      unknown.push_back(Json{{"root", to_json(u.root)},
                             {"k", u.k},
                             {"loops", u.loops},
                             {"hat_v", u.hat_v},
                             {"hat_w", u.hat_w}});
    }
    return make_report("walls", {}, Json{{"hyperplanes", hyperplanes_json(rep.planes)}, {"unknown", unknown}},
                       rep.unknown.empty() ? "conjectural" : "unknown-oracle");
  }
  if (o.kind == "translation") {
    IntVector w = need_ints(o.w, "w");
    IntVector alpha = need_ints(o.alpha, "alpha");
    auto hs = translation_bad_hyperplanes(q, v, w, alpha, need_ints(o.chi, "chi"));
    return make_report("walls", {}, Json{{"hyperplanes", hyperplanes_json(hs)}}, "conjectural");
  }
  throw ParseError("unknown --kind '" + o.kind + "' (classical, quantum, singular, translation)");
}

Json cmd_slice(const Options& o) {
  Quiver q = load_quiver(o.quiver);
  std::vector<Summand> summands;
  for (const auto& s : o.summands) {
    auto colon = s.find(':');
    Summand sm;
    sm.root = parse_int_list(s.substr(0, colon));
    if (colon != std::string::npos) {
      auto m = parse_int_list(s.substr(colon + 1));
      if (m.size() != 1) throw ParseError("summand multiplicity must be one integer in '" + s + "'");
      sm.mult = m[0];
    }
    summands.push_back(std::move(sm));
  }
  IntVector v = need_ints(o.v, "v");
  IntVector w = need_ints(o.w, "w");
  auto d = slice_data(q, v, w, need_ints(o.v0, "v0"), summands);
  Json linear = Json::array();
  for (const auto& row : d.linear) linear.push_back(to_json(row));
  Json res{{"hat_quiver", to_json(d.hat_quiver)},
           {"hat_v", to_json(d.hat_v)},
           {"hat_w", to_json(d.hat_w)},
           {"restriction", Json{{"linear", linear}, {"offset", to_json(d.offset)}}}};
  if (!o.lambda.empty()) res["restricted_lambda"] = to_json(d.restrict(parse_rational_list(o.lambda)));
  return make_report("slice", {}, res, "proven");
}

Json cmd_flat(const Options& o) {
  Quiver q = load_quiver(o.quiver);
  IntVector v = need_ints(o.v, "v");
  auto f = cb_flat(q, v, need_ints(o.w, "w"), limits_from(o).max_flat_total);
  Json witness = nullptr;
  if (f.witness) {
    Json roots = Json::array();
    for (const auto& r : f.witness->roots) roots.push_back(to_json(r));
    witness = Json{{"v0", to_json(f.witness->v0)}, {"roots", roots}};
  }
  return make_report("flat", {}, Json{{"flat", f.flat}, {"margin", f.margin}, {"witness", witness}}, "proven");
}

Partition need_partition(const std::string& text) {
  Partition p;
  if (!text.empty() && text != "0") {
    for (auto x : parse_int_list(text)) p.push_back(static_cast<int>(x));
  }
  if (!is_partition(p)) throw ParseError("'" + text + "' is not a weakly decreasing list of positive parts");
  return p;
}

Json cmd_wallcross(const Options& o) {
  auto nu = need_partition(o.partition);
  auto [hi, lo] = m_adic_row_decompose(nu, o.m);
  return make_report("wallcross", {},
                     Json{{"image", to_json(wallcross_map(nu, o.m))},
                          {"nu_prime", to_json(hi)},
                          {"nu_double_prime", to_json(lo)}},
                     "conjectural");
}

Json cmd_mullineux(const Options& o) {
  auto nu = need_partition(o.partition);
  return make_report("mullineux", {}, Json{{"image", to_json(mullineux(nu, o.e))}}, "proven");
}

Json cmd_filtration(const Options& o) {
  auto rep = heis_filtration_dims(o.m, o.r, o.n, limits_from(o).max_module_dim);
  Json dims = Json::array();
  for (auto d : rep.dims) dims.push_back(d);
  return make_report("fock-filtration", {}, Json{{"degree", rep.degree}, {"m", rep.m}, {"r", rep.r}, {"dims", dims}},
                     "proven");
}

Json cmd_singular(const Options& o) {
  auto v = need_ints(o.v, "v");
  auto w = need_ints(o.w, "w");
  auto lam = need_rationals(o.lambda, "lambda");
  if (v.size() != 1 || w.size() != 1 || lam.size() != 1) {
    throw DimensionError("singular: v, w and lambda are single numbers (one vertex)");
  }
  auto g = grassmannian_singular_count(v[0], w[0], lam[0]);
  return make_report("singular", {}, Json{{"exponent", g.exponent}, {"count", g.count}}, "conjectural");
}

Json cmd_perverse(const Options& o) {
  auto p = perverse_profile(o.n, o.m);
  Json d = Json::array();
  for (auto x : p.d) d.push_back(x);
  Json idx = Json::array();
  for (auto x : p.filtration) idx.push_back(x);
  return make_report("perverse", {}, Json{{"n", p.n}, {"m", p.m}, {"q", p.q}, {"d", d}, {"filtration_index", idx}},
                     "proven");
}

Json cmd_sweep(const Options& o) {
  Quiver q = load_quiver(o.quiver);
  IntVector w = need_ints(o.w, "w");
  std::vector<std::string> vs = o.has_grid_v ? split_grid(o.grid_v) : std::vector<std::string>{o.v};
  std::vector<std::string> ls =
      o.has_grid_lambda ? split_grid(o.grid_lambda) : std::vector<std::string>{o.lambda};
  struct Point {
    IntVector v;
    RationalVector lambda;
  };
  std::vector<Point> grid;
  for (const auto& vt : vs)
    for (const auto& lt : ls) grid.push_back({need_ints(vt, "v"), need_rationals(lt, "lambda")});
  for (const auto& p : grid) {
    q.check_length(p.v, "v");
    q.check_length(p.lambda, "lambda");
  }

  const Limits lim = limits_from(o);
  std::vector<Json> rows(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t k = next++; k < grid.size(); k = next++) {
      Json row{{"v", to_json(grid[k].v)}, {"lambda", to_json(grid[k].lambda)}};
      try {
        auto c = predicted_count(q, grid[k].v, w, grid[k].lambda, lim);
        row["count"] = c.count ? Json(*c.count) : Json(nullptr);
        row["status"] = to_string(c.status);
        row["branch"] = c.branch;
      } catch (const Error& e) {
        row["count"] = nullptr;
        row["status"] = "error";
        row["branch"] = e.what();
      }
      rows[k] = std::move(row);
    }
  };
  std::size_t nthreads = o.threads > 0 ? static_cast<std::size_t>(o.threads)
                                       : std::max<std::size_t>(1, std::thread::hardware_concurrency());
  nthreads = std::min(nthreads, std::max<std::size_t>(1, grid.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  Json table = Json::array();
  std::set<std::string> statuses;
  for (auto& r : rows) {
    statuses.insert(r.at("status").get<std::string>());
    table.push_back(std::move(r));
  }
  std::string status = statuses.empty() ? "empty" : statuses.size() == 1 ? *statuses.begin() : "mixed";
  return make_report("sweep", {}, Json{{"rows", table}}, status);
}

// ---------------------------------------------------------------- plumbing

Json echo_inputs(const CLI::App* sub) {
  Json in = Json::object();
  for (const CLI::Option* opt : sub->get_options()) {
    if (opt->count() == 0) continue;
    const std::string name = opt->get_single_name();
    if (name == "help" || name == "format" || name == "threads") continue;
    if (opt->get_expected_min() == 0) {
      in[name] = true;
    } else if (kRepeatable.count(name)) {
      in[name] = opt->results();
    } else {
      in[name] = opt->results().back();
    }
  }
  return in;
}

std::vector<std::string> replay_args(const Json& report) {
  if (!report.contains("command") || !report.contains("inputs")) {
    throw ParseError("replay: report lacks 'command' or 'inputs'");
  }
  std::vector<std::string> args{report.at("command").get<std::string>()};
  for (const auto& [k, val] : report.at("inputs").items()) {
    if (val.is_boolean()) {
      if (val.get<bool>()) args.push_back("--" + k);
    } else if (val.is_array()) {
      for (const auto& x : val) {
        args.push_back("--" + k);
        args.push_back(x.get<std::string>());
      }
    } else {
      args.push_back("--" + k);
      args.push_back(val.is_string() ? val.get<std::string>() : val.dump());
    }
  }
  return args;
}

void print(const Json& report, const std::string& format, std::ostream& out) {
  if (format == "csv") {
    out << to_csv(report);
  } else {
    out << report.dump(2) << "\n";
  }
}

void add_common(CLI::App* sub, Options& o, bool need_w = true) {
  sub->add_option("--quiver", o.quiver, "builtin name (a1, vertex, a2, a3, d4, jordan, cyclic:L) or quiver file");
  sub->add_option("--v", o.v, "dimension vector, comma separated");
  if (need_w) sub->add_option("--w", o.w, "framing vector, comma separated");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"qvcount: predicted counts of finite-dimensional irreducibles for quantized quiver varieties",
               "qvcount"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "json (default) or csv")->check(CLI::IsMember({"json", "csv"}));

  std::map<std::string, std::function<Json(const Options&)>> handlers;

  auto* count = app.add_subcommand("count", "dimension of the nu-weight space of the a-submodule");
  add_common(count, o);
  count->add_option("--lambda", o.lambda, "parameter, comma separated p/q");
  count->add_option("--slack", o.slack, "initial window slack for the Fock closure");
  count->add_option("--max-dim", o.max_dim, "module size cap");
  handlers["count"] = cmd_count;

  auto* mult = app.add_subcommand("mult", "weight multiplicity dim L_omega[nu] (Freudenthal)");
  add_common(mult, o);
  handlers["mult"] = cmd_mult;

  auto* walls = app.add_subcommand("walls", "wall and hyperplane arrangements");
  add_common(walls, o);
  walls->add_option("--kind", o.kind, "classical | quantum | singular | translation")
      ->check(CLI::IsMember({"classical", "quantum", "singular", "translation"}));
  walls->add_option("--lambda", o.lambda, "parameter (quantum walls)");
  walls->add_option("--alpha", o.alpha, "real root (translation)");
  walls->add_option("--chi", o.chi, "integral shift (translation)");
  walls->add_flag("--chambers", o.with_chambers, "also list chambers (classical, rank <= 4)");
  handlers["walls"] = cmd_walls;

  auto* slice = app.add_subcommand("slice", "slice quiver and restriction map at a decomposition");
  add_common(slice, o);
  slice->add_option("--v0", o.v0, "the v^0 part");
  slice->add_option("--summand", o.summands, "root:multiplicity, repeatable (e.g. 1,1:2)");
  slice->add_option("--lambda", o.lambda, "evaluate the restriction at this parameter");
  handlers["slice"] = cmd_slice;

  auto* flat = app.add_subcommand("flat", "flatness of the moment map");
  add_common(flat, o);
  handlers["flat"] = cmd_flat;

  auto* wc = app.add_subcommand("wallcross", "combinatorial wall-crossing of a partition");
  wc->add_option("--partition", o.partition, "parts, comma separated")->required();
  wc->add_option("--m", o.m, "denominator m >= 2");
  handlers["wallcross"] = cmd_wallcross;

  auto* mull = app.add_subcommand("mullineux", "Mullineux involution of an e-regular partition");
  mull->add_option("--partition", o.partition, "parts, comma separated")->required();
  mull->add_option("--e", o.e, "modulus e >= 2");
  handlers["mullineux"] = cmd_mullineux;

  auto* fil = app.add_subcommand("fock-filtration", "Heisenberg filtration dimensions on the Fock space");
  fil->add_option("--m", o.m, "m >= 2");
  fil->add_option("--r", o.r, "number of tensor factors");
  fil->add_option("--n", o.n, "degree")->required();
  fil->add_option("--max-dim", o.max_dim, "Fock space size cap");
  handlers["fock-filtration"] = cmd_filtration;

  auto* sing = app.add_subcommand("singular", "kernel predictor at a singular integral parameter (one vertex)");
  sing->add_option("--v", o.v, "v")->required();
  sing->add_option("--w", o.w, "w")->required();
  sing->add_option("--lambda", o.lambda, "integer in 1-w..-1")->required();
  handlers["singular"] = cmd_singular;

  auto* perv = app.add_subcommand("perverse", "perverse filtration constants");
  perv->add_option("--n", o.n, "n >= 1")->required();
  perv->add_option("--m", o.m, "m >= 2");
  handlers["perverse"] = cmd_perverse;

  auto* sweep = app.add_subcommand("sweep", "count over a grid of v and lambda values");
  add_common(sweep, o);
  sweep->add_option("--lambda", o.lambda, "parameter when no lambda grid is given");
  auto* gv = sweep->add_option("--grid-v", o.grid_v, "dimension vectors separated by ';'");
  auto* gl = sweep->add_option("--grid-lambda", o.grid_lambda, "parameters separated by ';'");
  sweep->add_option("--threads", o.threads, "worker threads (default: hardware)");
  sweep->add_option("--slack", o.slack, "initial window slack for the Fock closure");
  sweep->add_option("--max-dim", o.max_dim, "module size cap");
  handlers["sweep"] = cmd_sweep;

  auto* replay = app.add_subcommand("replay", "rerun the command recorded in a JSON report");
  replay->add_option("--report", o.report_path, "report file")->required();

  std::vector<std::string> argv_store{"qvcount"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParse;
  }
  o.has_grid_v = gv->count() > 0;
  o.has_grid_lambda = gl->count() > 0;

  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  auto fail = [&](const char* kind, int code, const std::string& reason) {
    Json j{{"error", kind}, {"command", name}, {"reason", reason}, {"version", kVersion}};
    out << j.dump(2) << "\n";
    err << "qvcount " << name << ": " << reason << "\n";
    return code;
  };
  try {
    if (name == "replay") {
      std::ifstream in(o.report_path);
      if (!in) throw ParseError("cannot read report '" + o.report_path + "'");
      Json report;
      try {
        report = Json::parse(in);
      } catch (const Json::exception& e) {
        throw ParseError(std::string("report is not valid JSON: ") + e.what());
      }
      auto again = replay_args(report);
      if (o.format != "json") {
        again.push_back("--format");
        again.push_back(o.format);
      }
      return run_cli(again, out, err);
    }
    Json report = handlers.at(name)(o);
    report["inputs"] = echo_inputs(sub);
    print(report, o.format, out);
    return kOk;
  } catch (const ResourceError& e) {
    return fail("resource", kResource, e.what());
  } catch (const UnsupportedError& e) {
    return fail("unsupported", kUnsupported, e.what());
  } catch (const Error& e) {
    return fail("invalid-input", kParse, e.what());
  }
}

}  // namespace qvc
