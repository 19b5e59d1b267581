#include <CLI11.hpp>
#include <cruciform/cruciform.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <regex>
#include <thread>

using namespace cruciform;

namespace {

struct Common {
  std::int64_t m = 3, n = 2, a = 1, b = 1, c = 1, d = 1;
  std::string e = "1", f = "1", h = "1";
  std::string engine = "dp", format = "json", out, q_at, variant = "nominal";
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Engine parse_engine(const std::string& s) {
  if (s == "brute") return Engine::Brute;
  if (s == "dp") return Engine::Dp;
  throw UsageError("engine must be brute or dp, got '" + s + "'");
}

RhsVariant parse_variant(const std::string& s) {
  if (s == "nominal") return RhsVariant::Nominal;
  if (s == "corrected") return RhsVariant::Corrected;
  throw UsageError("variant must be nominal or corrected, got '" + s + "'");
}

std::size_t worker_count() {
  std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("CRUCIFORM_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return std::min<std::size_t>(hw, static_cast<std::size_t>(v));
  }
  return hw;
}

// Runs jobs on worker threads; results come back in job order.
template <class Job>
std::vector<VerificationReport> run_ordered(std::size_t count, Job job) {
  std::vector<VerificationReport> res(count);
  std::vector<std::string> errs(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < count;) {
      try {
        res[k] = job(k);
      } catch (const std::exception& ex) {
        errs[k] = ex.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < std::min(count, worker_count()); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (std::size_t k = 0; k < count; ++k)
    if (!errs[k].empty()) throw std::runtime_error(errs[k]);
  return res;
}

class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& os() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int emit(const std::vector<VerificationReport>& rs, const Common& o) {
  Sink sink(o.out);
  std::optional<Rational> q0;
  if (!o.q_at.empty()) q0 = parse_rational(o.q_at);
  std::size_t pass = 0;
  for (const auto& r : rs) {
    pass += r.equal;
    if (o.format == "json") {
      auto j = to_json(r);
      if (q0) {
        j["lhs_at_q"] = rational_text(eval_at(r.lhs, *q0));
        j["rhs_at_q"] = rational_text(eval_at(r.rhs, *q0));
      }
      sink.os() << j.dump() << '\n';
    } else {
      sink.os() << (r.equal ? "PASS " : "FAIL ") << r.name << ' ' << r.instance.dump() << " engine=" << r.engine;
      if (q0) sink.os() << " lhs(q)=" << rational_text(eval_at(r.lhs, *q0)) << " rhs(q)=" << rational_text(eval_at(r.rhs, *q0));
      sink.os() << '\n';
    }
  }
  if (o.format == "text") sink.os() << pass << '/' << rs.size() << " equal\n";
  return pass == rs.size() ? 0 : 1;
}

void add_common(CLI::App* app, Common& o, bool tuple) {
  if (tuple) {
    app->add_option("--m", o.m);
    app->add_option("--n", o.n);
    app->add_option("--a", o.a);
    app->add_option("--b", o.b);
    app->add_option("--c", o.c);
    app->add_option("--d", o.d);
    app->add_option("--e", o.e, "rational weight e");
    app->add_option("--f", o.f, "rational weight f");
    app->add_option("--h", o.h, "rational weight h");
  }
  app->add_option("--engine", o.engine, "brute | dp");
  app->add_option("--format", o.format, "json | text")->check(CLI::IsMember({"json", "text"}));
  app->add_option("--out", o.out, "output path (default stdout)");
  app->add_option("--q-at", o.q_at, "also evaluate both sides at this rational q");
}

CruciformParams tuple_of(const Common& o) { return {o.m, o.n, o.a, o.b, o.c, o.d}; }

// Config: one `key = value` per line, '#' comments; integer keys accept `lo..hi`.
struct SweepConfig {
  std::map<char, std::pair<std::int64_t, std::int64_t>> ranges;
  std::optional<std::int64_t> sum_max;
  std::vector<std::array<Rational, 3>> weights;
  std::string engine = "dp", variant = "nominal";
};

SweepConfig read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config '" + path + "'");
  SweepConfig cfg;
  for (char k : std::string("mnabcd")) cfg.ranges[k] = {1, 0};
  bool any_range = false;
  static const std::regex kv(R"(^\s*([A-Za-z_]+)\s*=\s*(.*?)\s*$)"), range(R"(^(-?\d+)(?:\s*\.\.\s*(-?\d+))?$)");
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto p = line.find('#'); p != std::string::npos) line.erase(p);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::smatch mt;
    if (!std::regex_match(line, mt, kv)) throw UsageError(path + ":" + std::to_string(lineno) + ": expected key = value");
    std::string key = mt[1], val = mt[2];
    auto bad = [&](const std::string& why) { return UsageError(path + ":" + std::to_string(lineno) + ": " + why); };
    if (key.size() == 1 && std::string("mnabcd").find(key[0]) != std::string::npos) {
      std::smatch r;
      if (!std::regex_match(val, r, range)) throw bad("expected integer or lo..hi");
      std::int64_t lo = std::stoll(r[1]), hi = r[2].matched ? std::stoll(r[2]) : lo;
      cfg.ranges[key[0]] = {lo, hi};
      any_range = true;
    } else if (key == "sum_max") {
      std::smatch r;
      if (!std::regex_match(val, r, range) || r[2].matched) throw bad("sum_max must be an integer");
      cfg.sum_max = std::stoll(r[1]);
    } else if (key == "weights") {
      std::stringstream ss(val);
      std::string triple;
      while (std::getline(ss, triple, ';')) {
        std::stringstream ts(triple);
        std::array<Rational, 3> w;
        std::string tok;
        int k = 0;
        while (std::getline(ts, tok, ',')) {
          if (k == 3) throw bad("weight triple has more than 3 entries");
          tok.erase(0, tok.find_first_not_of(" \t"));
          tok.erase(tok.find_last_not_of(" \t") + 1);
          try {
            w[static_cast<std::size_t>(k++)] = parse_rational(tok);
          } catch (const std::exception& ex) {
            throw bad(ex.what());
          }
        }
        if (k != 3) throw bad("weight triple needs 3 entries");
        cfg.weights.push_back(w);
      }
    } else if (key == "engine") {
      parse_engine(val);
      cfg.engine = val;
    } else if (key == "variant") {
      parse_variant(val);
      cfg.variant = val;
    } else {
      throw bad("unknown key '" + key + "'");
    }
  }
  if (!any_range && !cfg.sum_max) throw UsageError(path + ": no parameter ranges given");
  if (cfg.sum_max)
    for (char k : std::string("mn"))
      if (cfg.ranges[k].first > cfg.ranges[k].second) cfg.ranges[k] = {1, *cfg.sum_max};
  if (cfg.ranges['m'].first > cfg.ranges['m'].second || cfg.ranges['n'].first > cfg.ranges['n'].second)
    throw UsageError(path + ": m and n need a range or sum_max");
  if (cfg.weights.empty()) cfg.weights.push_back({Rational(1), Rational(1), Rational(1)});
  return cfg;
}

std::vector<CruciformParams> sweep_tuples(const SweepConfig& cfg) {
  std::vector<CruciformParams> out;
  // an unset a or c runs over 1..m, an unset b or d over 1..n
  auto R = [&](char k, std::int64_t cap) {
    auto r = cfg.ranges.at(k);
    return r.first > r.second ? std::pair<std::int64_t, std::int64_t>{1, cap} : r;
  };
  for (auto m = R('m', 0).first; m <= R('m', 0).second; ++m)
    for (auto n = R('n', 0).first; n <= R('n', 0).second; ++n) {
      if (cfg.sum_max && m + n > *cfg.sum_max) continue;
      for (auto a = R('a', m).first; a <= R('a', m).second; ++a)
        for (auto b = R('b', n).first; b <= R('b', n).second; ++b)
          for (auto c = R('c', m).first; c <= R('c', m).second; ++c)
            for (auto d = R('d', n).first; d <= R('d', n).second; ++d) {
              CruciformParams p{m, n, a, b, c, d};
              if (is_balanced(p)) out.push_back(p);
            }
    }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tiling generating functions of cruciform regions", "cruciform"};
  app.set_version_flag("--version", kVersion);
  app.set_help_flag("--help", "print help");  // -h would clash with the weight option --h
  app.require_subcommand(1);

  Common tile_o, sweep_o, lemma_o, export_o;
  auto* tile = app.add_subcommand("tile", "tile a cruciform region");
  tile->require_subcommand(1);
  auto* tile_verify = tile->add_subcommand("verify", "compare the matching polynomial with the closed form");
  add_common(tile_verify, tile_o, true);
  tile_verify->add_option("--variant", tile_o.variant, "nominal | corrected");

  std::string config_path;
  auto* sweep = app.add_subcommand("sweep", "verify every balanced tuple in a config file's ranges");
  sweep->add_option("config", config_path, "config file")->required();
  add_common(sweep, sweep_o, false);

  auto* lemma = app.add_subcommand("lemma", "auxiliary lemma checks");
  lemma->require_subcommand(1);
  auto* lemma_verify = lemma->add_subcommand("verify", "run a lemma over its default grid");
  std::string lemma_name, exponent = "nominal", bar_top = "f-left";
  GridOptions gopt;
  std::int64_t gm = 0, gn = 0, gs = -1, gd = -1;
  lemma_verify->add_option("name", lemma_name, "lemma name")->required();
  lemma_verify->add_option("--m", gm, "fix m");
  lemma_verify->add_option("--n", gn, "fix n");
  lemma_verify->add_option("--s", gs, "fix s");
  lemma_verify->add_option("--d", gd, "fix d");
  lemma_verify->add_option("--max-ab", gopt.max_ab, "size bound of the grid");
  lemma_verify->add_option("--exponent", exponent, "mega-sandwich exponent: nominal | composed");
  lemma_verify->add_option("--bar-top", bar_top, "wt-bar K-graph top row: f-left | f-right");
  lemma_verify->add_option("--format", lemma_o.format)->check(CLI::IsMember({"json", "text"}));
  lemma_verify->add_option("--out", lemma_o.out);
  lemma_verify->add_option("--q-at", lemma_o.q_at);

  std::string export_kind, shape = "cruciform";
  auto* exp = app.add_subcommand("export", "write the region, graph JSON or DOT");
  exp->add_option("kind", export_kind, "region | graph | dot")->required()->check(CLI::IsMember({"region", "graph", "dot"}));
  exp->add_option("--shape", shape, "cruciform | aztec")->check(CLI::IsMember({"cruciform", "aztec"}));
  add_common(exp, export_o, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*tile) {
      CruciformParams p = tuple_of(tile_o);
      Engine eng = parse_engine(tile_o.engine);
      RhsVariant v = parse_variant(tile_o.variant);
      TheoremInstance inst(p, parse_rational(tile_o.e), parse_rational(tile_o.f), parse_rational(tile_o.h));
      return emit({verify_theorem(inst, eng, v)}, tile_o);
    }
    if (*sweep) {
      SweepConfig cfg = read_config(config_path);
      Engine eng = parse_engine(cfg.engine);
      RhsVariant v = parse_variant(cfg.variant);
      auto tuples = sweep_tuples(cfg);
      std::vector<TheoremInstance> jobs;
      for (const auto& p : tuples)
        for (const auto& w : cfg.weights) jobs.emplace_back(p, w[0], w[1], w[2]);
      auto rs = run_ordered(jobs.size(), [&](std::size_t k) { return verify_theorem(jobs[k], eng, v); });
      return emit(rs, sweep_o);
    }
    if (*lemma) {
      const auto& names = lemma_names();
      if (std::find(names.begin(), names.end(), lemma_name) == names.end()) {
        std::cerr << "unknown lemma '" << lemma_name << "'; known:";
        for (const auto& n : names) std::cerr << ' ' << n;
        std::cerr << '\n';
        return 2;
      }
      if (gm > 0) gopt.m = gm;
      if (gn > 0) gopt.n = gn;
      if (gs >= 0) gopt.s = gs;
      if (gd >= 0) gopt.d = gd;
      if (exponent != "nominal" && exponent != "composed") throw UsageError("exponent must be nominal or composed");
      gopt.exponent = exponent == "nominal" ? MegaExponent::Nominal : MegaExponent::Composed;
      if (bar_top != "f-left" && bar_top != "f-right") throw UsageError("bar-top must be f-left or f-right");
      gopt.bar_top = bar_top == "f-left" ? KBarTop::FLeft : KBarTop::FRight;
      return emit(lemma_grid(lemma_name, gopt), lemma_o);
    }
    if (*exp) {
      Region r;
      WeightSpec w(parse_rational(export_o.e), parse_rational(export_o.f), parse_rational(export_o.h),
                   shape == "cruciform" ? export_o.c : 0);
      r = shape == "cruciform" ? build_cruciform(tuple_of(export_o)) : build_aztec_rectangle(export_o.m, export_o.n);
      Sink sink(export_o.out);
      if (export_kind == "region")
        sink.os() << region_text(r);
      else if (export_kind == "graph")
        sink.os() << to_json(dual_graph(r, w)).dump() << '\n';
      else
        sink.os() << to_dot(dual_graph(r, w), shape);
      if (!sink.os()) throw std::runtime_error("write failed for '" + export_o.out + "'");
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
