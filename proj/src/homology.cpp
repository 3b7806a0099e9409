#include "sqci/homology.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <unordered_map>

namespace sqci {

using boost::multiprecision::cpp_int;
using Vec = std::map<int, cpp_int>;

namespace {

void normalize(Vec& v) {
  cpp_int g = 0;
  for (auto& [r, x] : v) g = gcd(g, abs(x));
  if (g > 1)
    for (auto& [r, x] : v) x /= g;
}

}  // namespace

int exact_rank(const std::vector<SparseColumn>& columns) {
  std::unordered_map<int, Vec> pivots;  // lead row -> reduced vector
  for (auto& col : columns) {
    Vec v;
    for (auto [r, x] : col)
      if (x != 0) v[r] += x;
    for (auto it = v.begin(); it != v.end();) it = it->second == 0 ? v.erase(it) : std::next(it);
    while (!v.empty()) {
      int lead = v.begin()->first;
      auto p = pivots.find(lead);
      if (p == pivots.end()) {
        normalize(v);
        pivots.emplace(lead, std::move(v));
        break;
      }
      cpp_int a = p->second.begin()->second, b = v.begin()->second;
      cpp_int g = gcd(abs(a), abs(b));
      cpp_int ma = a / g, mb = b / g;
      Vec w;
      for (auto& [r, x] : v) w[r] = x * ma;
      for (auto& [r, x] : p->second) w[r] -= x * mb;
      for (auto it = w.begin(); it != w.end();) it = it->second == 0 ? w.erase(it) : std::next(it);
      normalize(w);
      v = std::move(w);
    }
  }
  return static_cast<int>(pivots.size());
}

int betti1(const std::vector<SparseColumn>& d1, const std::vector<SparseColumn>& d2) {
  int r1 = exact_rank(d1);
  int r2 = exact_rank(d2);
  return static_cast<int>(d1.size()) - r1 - r2;
}

}  // namespace sqci
