#include "polyzeta/index.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "polyzeta/combinatorics.hpp"

namespace polyzeta {

long weight(const Index& k) {
  long w = 0;
  for (int e : k) w += e;
  return w;
}

int depth(const Index& k) { return static_cast<int>(k.size()); }

bool is_positive(const Index& k) {
  if (k.empty()) return false;
  return std::all_of(k.begin(), k.end(), [](int e) { return e >= 1; });
}

bool is_nonnegative(const Index& k) {
  if (k.empty()) return false;
  return std::all_of(k.begin(), k.end(), [](int e) { return e >= 0; });
}

bool is_admissible(const Index& k) { return is_positive(k) && k.back() >= 2; }

IndexStats index_stats(const Index& k) {
  if (!is_positive(k)) throw std::invalid_argument("index_stats: index must be positive");
  IndexStats st;
  st.weight = weight(k);
  st.depth = depth(k);
  st.admissible = is_admissible(k);
  for (int e : k)
    if (e >= 2) ++st.height;
  return st;
}

Index parse_index(const std::string& s) {
  Index k;
  std::string cur;
  auto flush = [&]() {
    std::size_t pos = 0;
    if (cur.empty()) throw std::invalid_argument("parse_index: empty entry in '" + s + "'");
    int v = 0;
    try {
      v = std::stoi(cur, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_index: bad entry '" + cur + "'");
    }
    if (pos != cur.size()) throw std::invalid_argument("parse_index: bad entry '" + cur + "'");
    k.push_back(v);
    cur.clear();
  };
  for (char c : s) {
    if (c == ' ' || c == '(' || c == ')') continue;
    if (c == ',') {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  return k;
}

std::string index_to_string(const Index& k) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
  os << ")";
  return os.str();
}

Index adjust_last(const Index& k, int delta) {
  if (k.empty()) throw std::invalid_argument("adjust_last: empty index");
  Index r = k;
  r.back() += delta;
  return r;
}

Index dual(const Index& k) {
  if (!is_admissible(k)) throw std::invalid_argument("dual requires an admissible index");
  // Encode each entry e as the word x y^{e-1}; concatenate, reverse, swap
  // x <-> y, then read off maximal blocks x y^{j} as entries j+1.
  std::string w;
  for (int e : k) {
    w += 'x';
    w.append(static_cast<std::size_t>(e - 1), 'y');
  }
  std::reverse(w.begin(), w.end());
  for (char& c : w) c = (c == 'x') ? 'y' : 'x';
  Index d;
  std::size_t i = 0;
  while (i < w.size()) {
    if (w[i] != 'x') throw std::logic_error("dual: malformed word");
    std::size_t j = i + 1;
    while (j < w.size() && w[j] == 'y') ++j;
    d.push_back(static_cast<int>(j - i));  // x y^{m} |-> m+1 where m = j-i-1
    i = j;
  }
  return d;
}

RunLengthForm to_run_length(const Index& k) {
  if (!is_admissible(k)) throw std::invalid_argument("to_run_length requires admissible index");
  RunLengthForm rl;
  std::size_t i = 0;
  while (i < k.size()) {
    long ones = 0;
    while (i < k.size() && k[i] == 1) { ++ones; ++i; }
    if (i >= k.size()) throw std::logic_error("to_run_length: trailing ones in admissible index");
    rl.a.push_back(ones + 1);          // a_i - 1 leading ones
    rl.b.push_back(k[i] - 1);          // entry b_i + 1
    ++i;
  }
  return rl;
}

Index from_run_length(const RunLengthForm& rl) {
  if (rl.a.size() != rl.b.size() || rl.a.empty())
    throw std::invalid_argument("from_run_length: malformed");
  Index k;
  for (std::size_t i = 0; i < rl.a.size(); ++i) {
    if (rl.a[i] < 1 || rl.b[i] < 1) throw std::invalid_argument("from_run_length: entries must be >= 1");
    for (long j = 0; j + 1 < rl.a[i]; ++j) k.push_back(1);
    k.push_back(static_cast<int>(rl.b[i] + 1));
  }
  return k;
}

RunLengthForm dual_run_length(const RunLengthForm& rl) {
  // (a_1,b_1),...,(a_h,b_h)  |->  (b_h,a_h),...,(b_1,a_1)
  RunLengthForm d;
  for (std::size_t i = rl.a.size(); i-- > 0;) {
    d.a.push_back(rl.b[i]);
    d.b.push_back(rl.a[i]);
  }
  return d;
}

std::vector<Index> compositions(int n) {
  if (n < 1) throw std::invalid_argument("compositions: n must be >= 1");
  std::vector<Index> out;
  Index cur;
  auto rec = [&](auto&& self, int rem) -> void {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = 1; p <= rem; ++p) {
      cur.push_back(p);
      self(self, rem - p);
      cur.pop_back();
    }
  };
  rec(rec, n);
  std::sort(out.begin(), out.end(), [](const Index& x, const Index& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  return out;
}

std::vector<Index> refinements(const Index& k) {
  if (!is_positive(k)) throw std::invalid_argument("refinements: index must be positive");
  std::vector<std::vector<Index>> per_entry;
  per_entry.reserve(k.size());
  for (int e : k) per_entry.push_back(compositions(e));
  std::vector<Index> out;
  std::vector<std::size_t> pick(k.size(), 0);
  while (true) {
    Index r;
    for (std::size_t i = 0; i < k.size(); ++i) {
      const Index& piece = per_entry[i][pick[i]];
      r.insert(r.end(), piece.begin(), piece.end());
    }
    out.push_back(std::move(r));
    // odometer increment, last position fastest
    std::size_t pos = k.size();
    while (pos-- > 0) {
      if (++pick[pos] < per_entry[pos].size()) break;
      pick[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

std::vector<Index> coarsenings(const Index& k, bool admissible_only) {
  if (!is_positive(k)) throw std::invalid_argument("coarsenings: index must be positive");
  int gaps = depth(k) - 1;
  std::vector<Index> out;
  // Mask bit i set = keep the comma after entry i.  Full mask (identity) first.
  for (long mask = (1L << gaps) - 1; mask >= 0; --mask) {
    Index c;
    c.push_back(k[0]);
    for (int i = 1; i <= gaps; ++i) {
      if (mask & (1L << (i - 1))) {
        c.push_back(k[i]);
      } else {
        c.back() += k[i];
      }
    }
    if (!admissible_only || is_admissible(c)) out.push_back(std::move(c));
  }
  return out;
}

std::vector<std::vector<int>> weak_compositions(int total, int parts) {
  if (total < 0 || parts < 1) throw std::invalid_argument("weak_compositions: bad arguments");
  std::vector<std::vector<int>> out;
  std::vector<int> cur(parts, 0);
  auto rec = [&](auto&& self, int pos, int rem) -> void {
    if (pos == parts - 1) {
      cur[pos] = rem;
      out.push_back(cur);
      return;
    }
    for (int v = rem; v >= 0; --v) {
      cur[pos] = v;
      self(self, pos + 1, rem - v);
    }
  };
  rec(rec, 0, total);
  return out;
}

mpz_class b_coeff(const Index& k, const std::vector<int>& j) {
  if (!is_positive(k)) throw std::invalid_argument("b_coeff: index must be positive");
  if (j.size() != k.size()) throw std::invalid_argument("b_coeff: depth mismatch");
  mpz_class r(1);
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (j[i] < 0) throw std::invalid_argument("b_coeff: j must be nonnegative");
    r *= binomial(static_cast<unsigned>(k[i] + j[i] - 1), static_cast<unsigned>(j[i]));
  }
  return r;
}

}  // namespace polyzeta
