#pragma once

#include <string>
#include <vector>

#include "polyzeta/index.hpp"
#include "polyzeta/numvalue.hpp"
#include "polyzeta/report.hpp"

namespace polyzeta {

enum class EtaXiTarget { Eta, Xi };

// Value of xi(k;m) or eta(k;m) at integer m >= 1 by the closed formula:
// with k+ the index with last entry raised and (k+)* its dual of depth n,
//   xi(k;m)  =            sum_{|j| = m-1, depth n} b((k+)*; j) zeta((k+)* + j)
//   eta(k;m) = (-1)^{depth(k)-1} same sum with zeta-star values.
NumValue theorem_value(EtaXiTarget target, const Index& k, long m, double eps = 1e-12);

// Depth-one eta_k(m) by the independent zeta-star expansion
//   sum over j_1,...,j_{k-1} >= 1, j_k >= 2, sum = k+m of (j_k - 1) zeta*(j).
NumValue eta_single_direct(int k, long m, double eps = 1e-12);

// eta(k;m) == (-1)^{depth-1} sum over refinements k' of k of xi(k';m), and the
// same with eta and xi exchanged.
Report refinement_relation_check(const Index& k, long m, double eps = 1e-10);

// Landen-type evaluation check at real 0 < z <= 1/2:
//   Li_k(z/(z-1)) == (-1)^{depth} sum over refinements k' of k of Li_{k'}(z).
Report landen_check(const Index& k, double z, double eps = 1e-10);

// Sweeps over all positive indices of bounded weight.
Report refinement_sweep(long weight_max, long m_max, double eps = 1e-10);
Report landen_sweep(long weight_max, const std::vector<double>& zs, double eps = 1e-10);

// Data-driven checks of the shipped identity tables.
Report euler_connection_suite(const std::vector<double>& zs, double eps = 1e-10);
Report xi_by_zeta_suite(const std::vector<long>& ms, double eps = 1e-9);

// Classical / experimental identities for the depth-one functions.
Report ohno_check(long max_weight, double eps = 1e-9);          // xi_k(m) = zeta*(1^{m-1}, k+1)
Report le_murakami_check(int k_max, double eps = 1e-9);         // alternating eta sum
Report eta_symmetry_experiment(long max_weight, double eps = 1e-9);  // eta_k(m) =? eta_m(k)

// Location of the shipped data tables (overridable via POLYZETA_DATA_DIR).
std::string data_dir();

}  // namespace polyzeta
