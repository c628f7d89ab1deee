// polyzeta command-line tool.
//
// Verbs:
//   compute bernoulli|multi-indexed|frak|dirichlet|finite-mzv|theorem-value|mzv|mzv-star
//   verify  duality|sum-formula|congruence|refinement|landen|euler-table|
//           xi-zeta-table|ohno|eta-dual|le-murakami|quad-consistency
//   table   bernoulli|frak
//   quad    eta|xi|xi-tilde|eta-multi
//   cache   stats|clear
//
// Exit status: 0 when all checks pass (or the command is a pure computation),
// 1 when any verification case fails, 2 on usage errors.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "polyzeta/cache.hpp"
#include "polyzeta/etaxi.hpp"
#include "polyzeta/polybern.hpp"
#include "polyzeta/quad.hpp"
#include "polyzeta/zeta.hpp"

using namespace polyzeta;
using nlohmann::json;

namespace {

struct Range {
  long lo = 0, hi = 0;
};

Range parse_range(const std::string& s) {
  Range r;
  auto pos = s.find("..");
  try {
    if (pos == std::string::npos) {
      r.lo = r.hi = std::stol(s);
    } else {
      r.lo = std::stol(s.substr(0, pos));
      r.hi = std::stol(s.substr(pos + 2));
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed range '" + s + "' (expected a..b or a)");
  }
  if (r.lo > r.hi) throw std::invalid_argument("empty range '" + s + "'");
  return r;
}

std::vector<double> parse_doubles(const std::string& s) {
  std::vector<double> out;
  std::size_t pos = 0;
  try {
    while (pos < s.size()) {
      std::size_t next = s.find(',', pos);
      if (next == std::string::npos) next = s.size();
      out.push_back(std::stod(s.substr(pos, next - pos)));
      pos = next + 1;
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed number list '" + s + "'");
  }
  if (out.empty()) throw std::invalid_argument("empty number list");
  return out;
}

std::vector<long> parse_longs(const std::string& s) {
  std::vector<long> out;
  for (double d : parse_doubles(s)) out.push_back(static_cast<long>(d));
  return out;
}

std::string fmt_nv(const NumValue& v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g (err <= %.3g)", v.value, v.err);
  return buf;
}

void print_report(const Report& rep, const std::string& fmt) {
  if (fmt == "json") {
    std::printf("%s\n", rep.to_json().dump(2).c_str());
  } else if (fmt == "csv") {
    std::printf("input,lhs,rhs,pass,deviation\n");
    for (const auto& c : rep.cases) {
      std::string in = c.input.dump();
      for (auto& ch : in)
        if (ch == ',') ch = ';';
      std::printf("%s,%s,%s,%d,%.6g\n", in.c_str(), c.lhs.c_str(), c.rhs.c_str(),
                  c.pass ? 1 : 0, c.deviation);
    }
  } else {
    for (const auto& c : rep.cases)
      if (c.rhs.empty() && c.pass)
        std::printf("%s  %s\n", c.input.dump().c_str(), c.lhs.c_str());
    std::printf("%s\n", rep.summary_text().c_str());
  }
}

// ---------------------------------------------------------------- compute

Report compute_report(const std::string& target, const json& params) {
  Report rep;
  rep.suite = "compute/" + target;
  rep.params = params;
  return rep;
}

int do_compute(const std::string& target, const std::string& kind_s, const std::string& index_s,
               const std::string& n_range, const std::string& m_s, int d_opt, long p_opt,
               const std::string& target_fn, long m_single, double eps, long s_int,
               bool has_s_int, const std::string& fmt) {
  Report rep;
  if (target == "bernoulli") {
    BernKind kind = kind_s == "B" ? BernKind::B : kind_s == "C" ? BernKind::C : BernKind::BB;
    if (kind_s != "B" && kind_s != "C" && kind_s != "BB")
      throw std::invalid_argument("unknown kind '" + kind_s + "' (expected B, C or BB)");
    Index k = parse_index(index_s);
    Range nr = parse_range(n_range);
    rep = compute_report(target, {{"kind", kind_s}, {"index", k}, {"n", n_range}});
    for (long n = nr.lo; n <= nr.hi; ++n) {
      if (n < 0) throw std::invalid_argument("n must be >= 0");
      Rational v = poly_bernoulli(kind, k, static_cast<unsigned>(n));
      rep.add_case({{"n", n}}, v.str(), "", true);
    }
  } else if (target == "multi-indexed") {
    Index k = parse_index(index_s);
    std::vector<long> ml = parse_longs(m_s);
    std::vector<unsigned> m(ml.begin(), ml.end());
    unsigned d = d_opt < 0 ? static_cast<unsigned>(k.size()) : static_cast<unsigned>(d_opt);
    rep = compute_report(target, {{"index", k}, {"m", ml}, {"d", d}});
    rep.add_case({{"index", k}, {"m", ml}, {"d", d}}, multi_indexed(k, m, d).str(), "", true);
  } else if (target == "frak") {
    Index k = parse_index(index_s);
    rep = compute_report(target, {{"index", k}});
    DirichletPoly dp = frak_b_symbolic(k);
    if (has_s_int)
      rep.add_case({{"index", k}, {"s", s_int}}, dp.eval_int1(s_int).str(), "", true);
    else
      rep.add_case({{"index", k}}, dp.str(), "", true);
  } else if (target == "dirichlet") {
    Index k = parse_index(index_s);
    rep = compute_report(target, {{"index", k}});
    rep.add_case({{"index", k}}, eta_neg_closed(k).str(), "", true);
  } else if (target == "finite-mzv") {
    Index k = parse_index(index_s);
    rep = compute_report(target, {{"p", p_opt}, {"index", k}});
    rep.add_case({{"p", p_opt}, {"index", k}}, std::to_string(finite_mzv(p_opt, k)), "", true);
  } else if (target == "theorem-value") {
    Index k = parse_index(index_s);
    EtaXiTarget t = target_fn == "xi" ? EtaXiTarget::Xi : EtaXiTarget::Eta;
    if (target_fn != "xi" && target_fn != "eta")
      throw std::invalid_argument("unknown target '" + target_fn + "' (expected eta or xi)");
    rep = compute_report(target, {{"target", target_fn}, {"index", k}, {"m", m_single}});
    rep.add_case({{"index", k}, {"m", m_single}}, fmt_nv(theorem_value(t, k, m_single, eps)), "",
                 true);
  } else if (target == "mzv" || target == "mzv-star") {
    Index k = parse_index(index_s);
    rep = compute_report(target, {{"index", k}, {"eps", eps}});
    NumValue v = target == "mzv" ? mzv(k, eps) : mzv_star(k, eps);
    rep.add_case({{"index", k}}, fmt_nv(v), "", true);
  } else {
    throw std::invalid_argument("unknown compute target '" + target + "'");
  }
  print_report(rep, fmt);
  return 0;
}

// ---------------------------------------------------------------- verify

Report quad_consistency_suite(double tol) {
  Report rep;
  rep.suite = "quad-consistency";
  rep.params = {{"tol", tol}};
  auto add = [&](json in, const NumValue& got, const NumValue& want) {
    rep.add_case(std::move(in), fmt_nv(got), fmt_nv(want), nv_consistent(got, want, tol),
                 nv_deviation(got, want));
  };
  for (int k = 0; k <= 3; ++k)
    for (double s : {1.5, 2.5}) {
      QuadResult q = eta_quad(Index{-k}, s, tol * 1e-2);
      add({{"check", "eta-neg"}, {"k", -k}, {"s", s}}, q.total,
          frak_b_symbolic(Index{k}).eval_real({s}));
    }
  for (int k = 1; k <= 2; ++k)
    for (double s : {1.5, 3.0}) {
      QuadResult q = xi_tilde_quad(Index{k}, s, tol * 1e-2);
      add({{"check", "xi-tilde"}, {"k", k}, {"s", s}}, q.total,
          xi_tilde_closed(Index{k}).eval_real({s}));
    }
  {
    QuadResult q = eta_quad(Index{1}, 1.0, tol * 1e-1);
    add({{"check", "eta-pos"}, {"k", 1}, {"s", 1}}, q.total, mzv(Index{2}, 1e-12));
    QuadResult q2 = xi_quad(Index{1}, 2.0, tol * 1e-1);
    add({{"check", "xi-pos"}, {"k", 1}, {"s", 2}}, q2.total,
        theorem_value(EtaXiTarget::Xi, Index{1}, 2, 1e-12));
    QuadResult q3 = eta_neg_multi_quad(Index{1, 0}, {2.0, 2.0}, tol * 1e-1);
    add({{"check", "eta-multi"}, {"k", {-1, 0}}, {"s", {2.0, 2.0}}}, q3.total,
        eta_neg_closed(Index{1, 0}).eval_real({2.0, 2.0}));
  }
  return rep;
}

int do_verify(const std::string& target, const std::string& suite, long max_a, long max_b,
              const std::string& index_s, long m_single, long p_max, long weight_max,
              int depth_max, long m_max, long k_max, const std::string& zs_s,
              const std::string& ms_s, double eps, const std::string& fmt) {
  Report rep;
  if (target == "duality") {
    DualityFamily fam;
    int def_a = 0, def_b = 0;
    if (suite == "B-neg") {
      fam = DualityFamily::BNeg;
      def_a = def_b = 12;
    } else if (suite == "C-neg") {
      fam = DualityFamily::CNeg;
      def_a = def_b = 10;
    } else if (suite == "multi-BB") {
      fam = DualityFamily::MultiBB;
      def_a = def_b = 4;
    } else if (suite == "frak-B") {
      fam = DualityFamily::FrakB;
      def_a = 5;
      def_b = 6;
    } else {
      throw std::invalid_argument("unknown duality suite '" + suite +
                                  "' (expected B-neg, C-neg, multi-BB or frak-B)");
    }
    int a = max_a >= 0 ? static_cast<int>(max_a) : def_a;
    int b = max_b >= 0 ? static_cast<int>(max_b) : (max_a >= 0 ? a : def_b);
    rep = duality_suite(fam, a, b);
  } else if (target == "sum-formula") {
    rep = sum_formula_check(m_max >= 0 ? static_cast<unsigned>(m_max) : 8,
                            k_max >= 0 ? static_cast<unsigned>(k_max) : 6);
  } else if (target == "congruence") {
    rep = congruence_suite(p_max >= 0 ? p_max : 13, weight_max >= 0 ? weight_max : 4,
                           depth_max >= 0 ? depth_max : 3);
  } else if (target == "refinement") {
    if (!index_s.empty())
      rep = refinement_relation_check(parse_index(index_s), m_single, eps);
    else
      rep = refinement_sweep(weight_max >= 0 ? weight_max : 5, m_max >= 0 ? m_max : 3, eps);
  } else if (target == "landen") {
    std::vector<double> zs = zs_s.empty() ? std::vector<double>{0.2, 0.3, 0.5} : parse_doubles(zs_s);
    if (!index_s.empty()) {
      rep.suite = "landen";
      rep.params = {{"index", index_s}, {"z", zs}};
      for (double z : zs) {
        Report one = landen_check(parse_index(index_s), z, eps);
        for (CaseResult& c : one.cases) rep.cases.push_back(std::move(c));
      }
    } else {
      rep = landen_sweep(weight_max >= 0 ? weight_max : 4, zs, eps);
    }
  } else if (target == "euler-table") {
    std::vector<double> zs = zs_s.empty() ? std::vector<double>{0.3, 0.5, 0.7} : parse_doubles(zs_s);
    rep = euler_connection_suite(zs, eps);
  } else if (target == "xi-zeta-table") {
    std::vector<long> ms = ms_s.empty() ? std::vector<long>{2, 3} : parse_longs(ms_s);
    rep = xi_by_zeta_suite(ms, eps);
  } else if (target == "ohno") {
    rep = ohno_check(weight_max >= 0 ? weight_max : 7, eps);
  } else if (target == "eta-dual") {
    rep = eta_symmetry_experiment(weight_max >= 0 ? weight_max : 8, eps);
  } else if (target == "le-murakami") {
    rep = le_murakami_check(k_max >= 0 ? static_cast<int>(k_max) : 7, eps);
  } else if (target == "quad-consistency") {
    rep = quad_consistency_suite(eps > 0 ? std::max(eps, 1e-8) : 1e-7);
  } else {
    throw std::invalid_argument("unknown verify target '" + target + "'");
  }
  print_report(rep, fmt);
  return rep.all_pass() ? 0 : 1;
}

// ---------------------------------------------------------------- table

int do_table(const std::string& family, const std::string& kind_s, const std::string& n_range,
             const std::string& k_range, long weight_max, int depth_max,
             const std::string& fmt) {
  Report rep;
  if (family == "bernoulli") {
    BernKind kind = kind_s == "B" ? BernKind::B : kind_s == "C" ? BernKind::C : BernKind::BB;
    if (kind_s != "B" && kind_s != "C" && kind_s != "BB")
      throw std::invalid_argument("unknown kind '" + kind_s + "'");
    Range nr = parse_range(n_range.empty() ? "0..8" : n_range);
    Range kr = parse_range(k_range.empty() ? "-4..4" : k_range);
    rep.suite = "table/bernoulli";
    rep.params = {{"kind", kind_s}, {"n", n_range}, {"k", k_range}};
    for (long n = nr.lo; n <= nr.hi; ++n)
      for (long kk = kr.lo; kk <= kr.hi; ++kk) {
        Rational v =
            poly_bernoulli(kind, Index{static_cast<int>(kk)}, static_cast<unsigned>(n));
        rep.add_case({{"n", n}, {"k", kk}}, v.str(), "", true);
      }
  } else if (family == "frak") {
    long wmax = weight_max >= 0 ? weight_max : 3;
    int dmax = depth_max >= 0 ? depth_max : 2;
    rep.suite = "table/frak";
    rep.params = {{"weight_max", wmax}, {"depth_max", dmax}};
    for (int r = 1; r <= dmax; ++r)
      for (long w = 0; w <= wmax; ++w)
        for (const auto& wc : weak_compositions(static_cast<int>(w), r)) {
          Index k(wc.begin(), wc.end());
          rep.add_case({{"index", k}}, frak_b_symbolic(k).str(), "", true);
        }
  } else {
    throw std::invalid_argument("unknown table family '" + family + "'");
  }
  print_report(rep, fmt);
  return 0;
}

// ---------------------------------------------------------------- quad

int do_quad(const std::string& target, const std::string& index_s, const std::string& s_s,
            double tol, const std::string& fmt) {
  Index k = parse_index(index_s);
  std::vector<double> ss = parse_doubles(s_s);
  QuadResult q;
  if (target == "eta") {
    q = eta_quad(k, ss.at(0), tol);
  } else if (target == "xi") {
    q = xi_quad(k, ss.at(0), tol);
  } else if (target == "xi-tilde") {
    Index k_abs = k;
    for (int& e : k_abs) e = std::abs(e);
    q = xi_tilde_quad(k_abs, ss.at(0), tol);
  } else if (target == "eta-multi") {
    Index k_abs = k;
    for (int& e : k_abs) e = std::abs(e);
    q = eta_neg_multi_quad(k_abs, ss, tol);
  } else {
    throw std::invalid_argument("unknown quad target '" + target + "'");
  }
  if (fmt == "json") {
    json out = {{"schema_version", kReportSchemaVersion},
                {"suite", "quad/" + target},
                {"params", {{"index", k}, {"s", ss}, {"tol", tol}}},
                {"value", q.total.value},
                {"err", q.total.err},
                {"head", q.head},
                {"middle", q.middle},
                {"tail_bound", q.tail_bound},
                {"cut", q.cut},
                {"evaluations", q.evaluations}};
    std::printf("%s\n", out.dump(2).c_str());
  } else {
    std::printf("%s(%s; %s) = %s\n", target.c_str(), index_to_string(k).c_str(), s_s.c_str(),
                fmt_nv(q.total).c_str());
    std::printf("  head %.6g, middle %.6g, tail bound %.3g, cut T=%.1f, %ld evaluations\n",
                q.head, q.middle, q.tail_bound, q.cut, q.evaluations);
  }
  return 0;
}

// ---------------------------------------------------------------- cache

const char* cache_env_path() { return std::getenv("POLYZETA_CACHE_FILE"); }

int do_cache(const std::string& action, const std::string& fmt) {
  MzvCache& cache = MzvCache::instance();
  const char* path = cache_env_path();
  if (action == "stats") {
    if (path && std::filesystem::exists(path)) cache.load(path);
    CacheStats st = cache.stats();
    if (fmt == "json") {
      json out = {{"entries", st.entries},
                  {"hits", st.hits},
                  {"misses", st.misses},
                  {"file", path ? path : ""}};
      std::printf("%s\n", out.dump(2).c_str());
    } else {
      std::printf("cache entries: %zu (hits %llu, misses %llu)%s%s\n", st.entries,
                  static_cast<unsigned long long>(st.hits),
                  static_cast<unsigned long long>(st.misses), path ? ", file: " : "",
                  path ? path : "");
    }
  } else if (action == "clear") {
    cache.clear();
    if (path && std::filesystem::exists(path)) std::filesystem::remove(path);
    std::printf("cache cleared\n");
  } else {
    throw std::invalid_argument("unknown cache action '" + action + "'");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polyzeta: poly-Bernoulli numbers and their zeta functions"};
  app.require_subcommand(1);

  std::string fmt = "pretty";
  app.add_option("--output", fmt, "Output format: json, csv or pretty")
      ->check(CLI::IsMember({"json", "csv", "pretty"}));

  // shared option storage
  std::string target, kind = "B", index_s, n_range = "0..8", m_s, zs_s, ms_s, s_s = "2";
  std::string suite = "B-neg", k_range, table_family, cache_action;
  long p_opt = 5, m_single = 1, max_a = -1, max_b = -1, p_max = -1, weight_max = -1;
  long m_max = -1, k_max = -1, s_int = 0;
  int d_opt = -1, depth_max = -1;
  double eps = 1e-10, tol = 1e-9;
  bool has_s_int = false;
  std::string fn_target = "eta";

  CLI::App* c = app.add_subcommand("compute", "Compute exact or certified numeric values")->fallthrough();
  c->add_option("operation", target, "bernoulli, multi-indexed, frak, dirichlet, finite-mzv, theorem-value, mzv, mzv-star")->required();
  c->add_option("--kind", kind, "Number family: B, C or BB");
  c->add_option("--index", index_s, "Index, e.g. \"-1,0\"");
  c->add_option("--n", n_range, "Range a..b (or single n)");
  c->add_option("--m", m_s, "Subscript vector, e.g. \"1,2\" (multi-indexed) or single m");
  c->add_option("--d", d_opt, "Divisor depth parameter d (default: depth of index)");
  c->add_option("--p", p_opt, "Prime modulus (finite-mzv)");
  c->add_option("--target", fn_target, "Function for theorem-value: eta or xi");
  c->add_option("--eps", eps, "Target accuracy for numeric values");
  auto* sopt = c->add_option("--s", s_int, "Integer exponent: evaluate frak at s");
  c->add_option("--m-single", m_single, "Argument m for theorem-value");

  CLI::App* v = app.add_subcommand("verify", "Run a verification suite")->fallthrough();
  v->add_option("operation", target, "duality, sum-formula, congruence, refinement, landen, euler-table, xi-zeta-table, ohno, eta-dual, le-murakami, quad-consistency")->required();
  v->add_option("--suite", suite, "Duality family: B-neg, C-neg, multi-BB, frak-B");
  v->add_option("--max", max_a, "First sweep bound");
  v->add_option("--max2", max_b, "Second sweep bound (defaults to --max)");
  v->add_option("--index", index_s, "Single index instead of a sweep");
  v->add_option("--m", m_single, "Argument m for single-index checks");
  v->add_option("--p-max", p_max, "Largest prime (congruence)");
  v->add_option("--weight-max", weight_max, "Largest index weight");
  v->add_option("--depth-max", depth_max, "Largest index depth");
  v->add_option("--m-max", m_max, "Largest m (sweeps)");
  v->add_option("--k-max", k_max, "Largest k (sum-formula, le-murakami)");
  v->add_option("--z", zs_s, "Evaluation points, e.g. \"0.2,0.3,0.5\"");
  v->add_option("--m-list", ms_s, "List of m values, e.g. \"2,3\"");
  v->add_option("--eps", eps, "Comparison tolerance");

  CLI::App* t = app.add_subcommand("table", "Print a family table")->fallthrough();
  t->add_option("family", table_family, "bernoulli or frak")->required();
  t->add_option("--kind", kind, "Number family: B, C or BB");
  t->add_option("--n", n_range, "Row range a..b");
  t->add_option("--k", k_range, "Column range a..b");
  t->add_option("--weight-max", weight_max, "Largest weight (frak)");
  t->add_option("--depth-max", depth_max, "Largest depth (frak)");

  CLI::App* q = app.add_subcommand("quad", "Evaluate a zeta function by direct quadrature")->fallthrough();
  q->add_option("operation", target, "eta, xi, xi-tilde or eta-multi")->required();
  q->add_option("--index", index_s, "Index")->required();
  q->add_option("--s", s_s, "Exponent(s), e.g. \"2\" or \"2,2\"")->required();
  q->add_option("--tol", tol, "Target accuracy");

  CLI::App* ca = app.add_subcommand("cache", "Inspect or clear the numeric cache")->fallthrough();
  ca->add_option("action", cache_action, "stats or clear")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    // optional persistent cache
    const char* path = cache_env_path();
    bool computing = c->parsed() || v->parsed() || t->parsed() || q->parsed();
    if (path && computing && std::filesystem::exists(path)) MzvCache::instance().load(path);

    int rc = 0;
    if (c->parsed()) {
      has_s_int = sopt->count() > 0;
      if (!m_s.empty() && target == "theorem-value") m_single = parse_longs(m_s).at(0);
      rc = do_compute(target, kind, index_s, n_range, m_s, d_opt, p_opt, fn_target, m_single,
                      eps, s_int, has_s_int, fmt);
    } else if (v->parsed()) {
      rc = do_verify(target, suite, max_a, max_b, index_s, m_single, p_max, weight_max,
                     depth_max, m_max, k_max, zs_s, ms_s, eps, fmt);
    } else if (t->parsed()) {
      rc = do_table(table_family, kind, n_range, k_range, weight_max, depth_max, fmt);
    } else if (q->parsed()) {
      rc = do_quad(target, index_s, s_s, tol, fmt);
    } else if (ca->parsed()) {
      rc = do_cache(cache_action, fmt);
    }
    if (path && computing) MzvCache::instance().save(path);
    return rc;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
