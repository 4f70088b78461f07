#include "gammaskel.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace gammaskel {

BasedMap::BasedMap(int n, int m, std::vector<int> v) : dom(n), cod(m), values(std::move(v)) {
  assert(static_cast<int>(values.size()) == n);
#ifndef NDEBUG
  for (int x : values) assert(0 <= x && x <= m);
#endif
}

BasedMap BasedMap::identity(int n) {
  std::vector<int> v(n);
  for (int i = 1; i <= n; ++i) v[i - 1] = i;
  return BasedMap(n, n, std::move(v));
}

BasedMap BasedMap::zero(int n, int m) { return BasedMap(n, m, std::vector<int>(n, 0)); }

bool BasedMap::operator<(const BasedMap& o) const {
  if (dom != o.dom) return dom < o.dom;
  if (cod != o.cod) return cod < o.cod;
  return values < o.values;
}

UnbasedMap::UnbasedMap(int r, int s, std::vector<int> v) : dom(r), cod(s), values(std::move(v)) {
  assert(static_cast<int>(values.size()) == r);
#ifndef NDEBUG
  for (int x : values) assert(1 <= x && x <= s);
#endif
}

UnbasedMap UnbasedMap::identity(int r) {
  std::vector<int> v(r);
  for (int i = 1; i <= r; ++i) v[i - 1] = i;
  return UnbasedMap(r, r, std::move(v));
}

bool UnbasedMap::is_bijection() const {
  if (dom != cod) return false;
  std::vector<bool> seen(cod, false);
  for (int x : values) {
    if (seen[x - 1]) return false;
    seen[x - 1] = true;
  }
  return true;
}

bool UnbasedMap::operator<(const UnbasedMap& o) const {
  if (dom != o.dom) return dom < o.dom;
  if (cod != o.cod) return cod < o.cod;
  return values < o.values;
}

BasedMap compose(const BasedMap& g, const BasedMap& f) {
  if (f.cod != g.dom) throw std::invalid_argument("compose: based maps not composable");
  std::vector<int> v(f.dom);
  for (int i = 1; i <= f.dom; ++i) v[i - 1] = g(f(i));
  return BasedMap(f.dom, g.cod, std::move(v));
}

UnbasedMap compose(const UnbasedMap& g, const UnbasedMap& f) {
  if (f.cod != g.dom) throw std::invalid_argument("compose: unbased maps not composable");
  std::vector<int> v(f.dom);
  for (int i = 1; i <= f.dom; ++i) v[i - 1] = g(f(i));
  return UnbasedMap(f.dom, g.cod, std::move(v));
}

std::vector<BasedMap> enumerate_based_maps(int n, int m) {
  std::vector<BasedMap> out;
  std::vector<int> v(n, 0);
  while (true) {
    out.push_back(BasedMap(n, m, v));
    int i = n - 1;
    while (i >= 0 && v[i] == m) v[i--] = 0;
    if (i < 0) break;
    ++v[i];
  }
  return out;
}

std::vector<UnbasedMap> enumerate_unbased_maps(int r, int s) {
  std::vector<UnbasedMap> out;
  if (r > 0 && s == 0) return out;
  std::vector<int> v(r, 1);
  while (true) {
    out.push_back(UnbasedMap(r, s, v));
    int i = r - 1;
    while (i >= 0 && v[i] == s) v[i--] = 1;
    if (i < 0) break;
    ++v[i];
  }
  return out;
}

Support support(const BasedMap& f) {
  Support s;
  for (int i = 1; i <= f.dom; ++i)
    if (f(i) != 0) s.elements.push_back(i);
  s.projection = projection_onto(f.dom, s.elements);
  return s;
}

BasedMap projection_onto(int n, const std::vector<int>& s) {
  std::vector<int> v(n, 0);
  for (size_t r = 0; r < s.size(); ++r) v[s[r] - 1] = static_cast<int>(r) + 1;
  return BasedMap(n, static_cast<int>(s.size()), std::move(v));
}

bool is_inert(const BasedMap& f) {
  int next = 1;
  for (int i = 1; i <= f.dom; ++i) {
    if (f(i) == 0) continue;
    if (f(i) != next) return false;
    ++next;
  }
  return next - 1 == f.cod;
}

bool is_active(const BasedMap& f) {
  for (int i = 1; i <= f.dom; ++i)
    if (f(i) == 0) return false;
  return true;
}

InertActive factor_inert_active(const BasedMap& f) {
  Support s = support(f);
  std::vector<int> act(s.elements.size());
  for (size_t r = 0; r < s.elements.size(); ++r) act[r] = f(s.elements[r]);
  return InertActive{s.projection, BasedMap(static_cast<int>(s.elements.size()), f.cod, std::move(act))};
}

BasedMap delta_left(int k, int l) {
  std::vector<int> v(k + l, 0);
  for (int i = 1; i <= k; ++i) v[i - 1] = i;
  return BasedMap(k + l, k, std::move(v));
}

BasedMap delta_right(int k, int l) {
  std::vector<int> v(k + l, 0);
  for (int i = 1; i <= l; ++i) v[k + i - 1] = i;
  return BasedMap(k + l, l, std::move(v));
}

BasedMap multiplication(int n) { return BasedMap(n, 1, std::vector<int>(n, 1)); }

int smash_object(int n, int m) { return n * m; }

BasedMap smash_map(const BasedMap& f, const BasedMap& g) {
  const int n = f.dom, m = g.dom, mp = g.cod;
  std::vector<int> v(n * m, 0);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m; ++j) {
      const int fi = f(i), gj = g(j);
      if (fi != 0 && gj != 0) v[(i - 1) * m + j - 1] = (fi - 1) * mp + gj;
    }
  return BasedMap(n * m, f.cod * g.cod, std::move(v));
}

BasedMap smash_symmetry(int n, int m) {
  std::vector<int> v(n * m, 0);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m; ++j) v[(i - 1) * m + j - 1] = (j - 1) * n + i;
  return BasedMap(n * m, m * n, std::move(v));
}

UnbasedMap symmetry_N(int k, int l) {
  std::vector<int> v(k + l);
  for (int i = 1; i <= k; ++i) v[i - 1] = l + i;
  for (int i = k + 1; i <= k + l; ++i) v[i - 1] = i - k;
  return UnbasedMap(k + l, l + k, std::move(v));
}

UnbasedMap plus_N(const UnbasedMap& f, const UnbasedMap& g) {
  std::vector<int> v(f.dom + g.dom);
  for (int i = 1; i <= f.dom; ++i) v[i - 1] = f(i);
  for (int j = 1; j <= g.dom; ++j) v[f.dom + j - 1] = f.cod + g(j);
  return UnbasedMap(f.dom + g.dom, f.cod + g.cod, std::move(v));
}

BasedMap active_lift(const UnbasedMap& f) { return BasedMap(f.dom, f.cod, f.values); }

UnbasedMap unbased_part(const BasedMap& f) {
  if (!is_active(f)) throw std::invalid_argument("unbased_part: map is not active");
  return UnbasedMap(f.dom, f.cod, f.values);
}

namespace {
std::string values_text(const std::vector<int>& v) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ']';
  return os.str();
}
}  // namespace

std::string to_text(const BasedMap& f) {
  std::ostringstream os;
  os << "f: " << f.dom << "->" << f.cod << " " << values_text(f.values);
  return os.str();
}

std::string to_text(const UnbasedMap& f) {
  std::ostringstream os;
  os << "u: " << f.dom << "->" << f.cod << " " << values_text(f.values);
  return os.str();
}

}  // namespace gammaskel
