#include "polyzeta/etaxi.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include "json.hpp"
#include "polyzeta/combinatorics.hpp"
#include "polyzeta/quad.hpp"
#include "polyzeta/rational.hpp"
#include "polyzeta/zeta.hpp"

namespace polyzeta {

namespace {

double mpz_to_double_exact(const mpz_class& z) {
  if (mpz_sizeinbase(z.get_mpz_t(), 2) > 53)
    throw std::overflow_error("coefficient exceeds exact double range");
  return z.get_d();
}

void arity_check(const Index& k, long m) {
  if (!is_positive(k)) throw std::invalid_argument("index must be positive");
  if (m < 1) throw std::invalid_argument("m must be >= 1");
}

}  // namespace

NumValue theorem_value(EtaXiTarget target, const Index& k, long m, double eps) {
  arity_check(k, m);
  const int r = depth(k);
  Index kps = dual(adjust_last(k, +1));
  const int n = depth(kps);
  if (n != static_cast<int>(weight(k)) + 1 - r)
    throw std::logic_error("theorem_value: dual depth mismatch");

  auto jsets = weak_compositions(static_cast<int>(m) - 1, n);
  double bsum = 0.0;
  std::vector<double> bs;
  bs.reserve(jsets.size());
  for (const auto& j : jsets) {
    double b = mpz_to_double_exact(b_coeff(kps, j));
    bs.push_back(b);
    bsum += b;
  }
  double sub_eps = eps / std::max(1.0, 2.0 * bsum);

  NumValue acc{0.0, 0.0};
  for (std::size_t i = 0; i < jsets.size(); ++i) {
    Index idx = kps;
    for (int q = 0; q < n; ++q) idx[static_cast<std::size_t>(q)] += jsets[i][static_cast<std::size_t>(q)];
    NumValue v = (target == EtaXiTarget::Xi) ? mzv(idx, sub_eps) : mzv_star(idx, sub_eps);
    acc = nv_add(acc, nv_scale(bs[i], v));
  }
  if (target == EtaXiTarget::Eta && (r - 1) % 2 == 1) acc = nv_neg(acc);
  return acc;
}

NumValue eta_single_direct(int k, long m, double eps) {
  if (k < 1 || m < 1) throw std::invalid_argument("eta_single_direct: k, m must be >= 1");
  auto us = weak_compositions(static_cast<int>(m) - 1, k);
  double sub_eps = eps / (static_cast<double>(us.size()) * (m + 1.0));
  NumValue acc{0.0, 0.0};
  for (const auto& u : us) {
    Index j(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) j[static_cast<std::size_t>(i)] = 1 + u[static_cast<std::size_t>(i)];
    j.back() += 1;  // j_k >= 2
    double coef = static_cast<double>(j.back() - 1);
    acc = nv_add(acc, nv_scale(coef, mzv_star(j, sub_eps)));
  }
  return acc;
}

Report refinement_relation_check(const Index& k, long m, double eps) {
  arity_check(k, m);
  Report rep;
  rep.suite = "refinement-relation";
  rep.params = {{"k", k}, {"m", m}};
  const int r = depth(k);
  auto refs = refinements(k);
  double sub_eps = eps / (2.0 * static_cast<double>(refs.size()));
  double sign = ((r - 1) % 2 == 1) ? -1.0 : 1.0;

  NumValue eta_lhs = theorem_value(EtaXiTarget::Eta, k, m, eps / 2);
  NumValue xi_lhs = theorem_value(EtaXiTarget::Xi, k, m, eps / 2);
  NumValue eta_rhs{0.0, 0.0}, xi_rhs{0.0, 0.0};
  for (const Index& kp : refs) {
    eta_rhs = nv_add(eta_rhs, theorem_value(EtaXiTarget::Xi, kp, m, sub_eps));
    xi_rhs = nv_add(xi_rhs, theorem_value(EtaXiTarget::Eta, kp, m, sub_eps));
  }
  eta_rhs = nv_scale(sign, eta_rhs);
  xi_rhs = nv_scale(sign, xi_rhs);

  rep.add_case({{"relation", "eta-by-xi"}}, std::to_string(eta_lhs.value),
               std::to_string(eta_rhs.value), nv_consistent(eta_lhs, eta_rhs, eps),
               nv_deviation(eta_lhs, eta_rhs));
  rep.add_case({{"relation", "xi-by-eta"}}, std::to_string(xi_lhs.value),
               std::to_string(xi_rhs.value), nv_consistent(xi_lhs, xi_rhs, eps),
               nv_deviation(xi_lhs, xi_rhs));
  return rep;
}

Report landen_check(const Index& k, double z, double eps) {
  if (!is_positive(k)) throw std::invalid_argument("landen_check: index must be positive");
  if (!(z > 0.0 && z <= 0.5)) throw std::invalid_argument("landen_check: need 0 < z <= 1/2");
  Report rep;
  rep.suite = "landen";
  rep.params = {{"k", k}, {"z", z}};
  const double w = z / (z - 1.0);
  NumValue lhs;
  if (z == 0.5) {
    // w = -1: evaluate by continuation along z(t) = 1 - e^t at t = ln 2.
    lhs = li_continued(k, std::log(2.0), ChartSide::Eta, eps / 4);
  } else {
    lhs = li_real(k, w, eps / 4);
  }
  auto refs = refinements(k);
  NumValue rhs{0.0, 0.0};
  for (const Index& kp : refs) rhs = nv_add(rhs, li_real(kp, z, eps / (4.0 * refs.size())));
  if (depth(k) % 2 == 1) rhs = nv_neg(rhs);
  rep.add_case({{"k", k}, {"z", z}}, std::to_string(lhs.value), std::to_string(rhs.value),
               nv_consistent(lhs, rhs, eps), nv_deviation(lhs, rhs));
  return rep;
}

Report refinement_sweep(long weight_max, long m_max, double eps) {
  Report rep;
  rep.suite = "refinement-relation/sweep";
  rep.params = {{"weight_max", weight_max}, {"m_max", m_max}, {"eps", eps}};
  for (long w = 1; w <= weight_max; ++w)
    for (const Index& k : compositions(static_cast<int>(w)))
      for (long m = 1; m <= m_max; ++m) {
        Report one = refinement_relation_check(k, m, eps);
        for (CaseResult& c : one.cases) {
          c.input["k"] = k;
          c.input["m"] = m;
          rep.cases.push_back(std::move(c));
        }
      }
  return rep;
}

Report landen_sweep(long weight_max, const std::vector<double>& zs, double eps) {
  Report rep;
  rep.suite = "landen/sweep";
  rep.params = {{"weight_max", weight_max}, {"z", zs}, {"eps", eps}};
  for (long w = 1; w <= weight_max; ++w)
    for (const Index& k : compositions(static_cast<int>(w)))
      for (double z : zs) {
        Report one = landen_check(k, z, eps);
        for (CaseResult& c : one.cases) rep.cases.push_back(std::move(c));
      }
  return rep;
}

std::string data_dir() {
  if (const char* env = std::getenv("POLYZETA_DATA_DIR")) return env;
#ifdef POLYZETA_SOURCE_DATA_DIR
  return POLYZETA_SOURCE_DATA_DIR;
#else
  return "data";
#endif
}

namespace {

nlohmann::json load_json(const std::string& name) {
  std::string path = data_dir() + "/" + name;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open data table " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

Index to_index(const nlohmann::json& a) {
  Index k;
  for (const auto& e : a) k.push_back(e.get<int>());
  return k;
}

}  // namespace

Report euler_connection_suite(const std::vector<double>& zs, double eps) {
  nlohmann::json table = load_json("euler_connection_identities.json");
  Report rep;
  rep.suite = "euler-connection";
  rep.params = {{"zs", zs}};
  for (const auto& ident : table["identities"]) {
    Index lhs_idx = to_index(ident["lhs_index"]);
    for (double z : zs) {
      if (!(z > 0.0 && z < 1.0))
        throw std::invalid_argument("euler_connection_suite: need 0 < z < 1");
      NumValue lhs = li_real(lhs_idx, 1.0 - z, eps / 4);
      NumValue rhs{0.0, 0.0};
      std::size_t nterms = ident["terms"].size();
      for (const auto& term : ident["terms"]) {
        double coef = Rational::from_string(term["coef"].get<std::string>()).to_double();
        NumValue prod = NumValue::exact(1.0);
        for (const auto& f : term["factors"]) {
          Index idx = to_index(f["index"]);
          NumValue v;
          std::string type = f["type"].get<std::string>();
          if (type == "li") {
            double arg = (f["arg"].get<std::string>() == "omz") ? 1.0 - z : z;
            v = li_real(idx, arg, eps / (8.0 * nterms));
          } else if (type == "zeta") {
            v = mzv(idx, eps / (8.0 * nterms));
          } else {
            throw std::runtime_error("euler_connection_suite: unknown factor type " + type);
          }
          prod = nv_mul(prod, v);
        }
        rhs = nv_add(rhs, nv_scale(coef, prod));
      }
      rep.add_case({{"id", ident["id"]}, {"z", z}}, std::to_string(lhs.value),
                   std::to_string(rhs.value), nv_consistent(lhs, rhs, eps),
                   nv_deviation(lhs, rhs));
    }
  }
  return rep;
}

Report xi_by_zeta_suite(const std::vector<long>& ms, double eps) {
  nlohmann::json table = load_json("xi_zeta_expressions.json");
  Report rep;
  rep.suite = "xi-by-zeta";
  rep.params = {{"ms", ms}};
  for (const auto& expr : table["expressions"]) {
    Index k = to_index(expr["k"]);
    EtaXiTarget target =
        (expr["target"].get<std::string>() == "xi") ? EtaXiTarget::Xi : EtaXiTarget::Eta;
    for (long m : ms) {
      NumValue lhs = theorem_value(target, k, m, eps / 4);
      NumValue rhs{0.0, 0.0};
      std::size_t nterms = expr["terms"].size();
      for (const auto& term : expr["terms"]) {
        double coef = Rational::from_string(term["coef"].get<std::string>()).to_double();
        long j = term["j"].get<long>();
        // binom(m + j - 1, j), exact in double for our ranges
        double binom_f = mpz_to_double_exact(
            binomial(static_cast<unsigned>(m + j - 1), static_cast<unsigned>(j)));
        NumValue v = NumValue::exact(coef * binom_f);
        if (term.contains("zconst"))
          v = nv_mul(v, mzv(to_index(term["zconst"]), eps / (8.0 * nterms)));
        Index tail = to_index(term.contains("tail") ? term["tail"] : nlohmann::json::array());
        v = nv_mul(v, zeta_fn_int(tail, m + j, eps / (8.0 * nterms)));
        rhs = nv_add(rhs, v);
      }
      rep.add_case({{"id", expr["id"]}, {"m", m}}, std::to_string(lhs.value),
                   std::to_string(rhs.value), nv_consistent(lhs, rhs, eps),
                   nv_deviation(lhs, rhs));
    }
  }
  return rep;
}

Report ohno_check(long max_weight, double eps) {
  Report rep;
  rep.suite = "xi-depth1-star";
  rep.params = {{"max_weight", max_weight}};
  for (int k = 1; k <= max_weight - 1; ++k) {
    for (long m = 1; k + m <= max_weight; ++m) {
      NumValue lhs = theorem_value(EtaXiTarget::Xi, Index{k}, m, eps / 4);
      Index star_idx(static_cast<std::size_t>(m - 1), 1);
      star_idx.push_back(k + 1);
      NumValue rhs = mzv_star(star_idx, eps / 4);
      rep.add_case({{"k", k}, {"m", m}}, std::to_string(lhs.value), std::to_string(rhs.value),
                   nv_consistent(lhs, rhs, eps), nv_deviation(lhs, rhs));
    }
  }
  return rep;
}

Report le_murakami_check(int k_max, double eps) {
  Report rep;
  rep.suite = "eta-alternating-sum";
  rep.params = {{"k_max", k_max}};
  for (int k = 2; k <= k_max; ++k) {
    NumValue lhs{0.0, 0.0};
    for (int j = 1; j <= k - 1; ++j) {
      NumValue t = theorem_value(EtaXiTarget::Eta, Index{k - j}, j, eps / (4.0 * k));
      lhs = nv_add(lhs, (j % 2 == 1) ? t : nv_neg(t));
    }
    NumValue rhs{0.0, 0.0};
    if (k % 2 == 0) {
      double c = 2.0 * (1.0 - std::pow(2.0, 1.0 - k));
      rhs = nv_scale(c, zeta_r(static_cast<double>(k), eps / 4));
    }
    rep.add_case({{"k", k}}, std::to_string(lhs.value), std::to_string(rhs.value),
                 nv_consistent(lhs, rhs, eps), nv_deviation(lhs, rhs));
  }
  return rep;
}

Report eta_symmetry_experiment(long max_weight, double eps) {
  Report rep;
  rep.suite = "eta-symmetry";
  rep.status = "experiment";
  rep.params = {{"max_weight", max_weight}};
  for (int k = 1; k <= max_weight - 1; ++k) {
    for (long m = k; k + m <= max_weight; ++m) {
      NumValue lhs = theorem_value(EtaXiTarget::Eta, Index{k}, m, eps / 4);
      NumValue rhs = theorem_value(EtaXiTarget::Eta, Index{static_cast<int>(m)}, k, eps / 4);
      rep.add_case({{"k", k}, {"m", m}}, std::to_string(lhs.value), std::to_string(rhs.value),
                   nv_consistent(lhs, rhs, eps), nv_deviation(lhs, rhs));
    }
  }
  return rep;
}

}  // namespace polyzeta
