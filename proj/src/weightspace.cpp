#include "wellcover/weightspace.hpp"

#include <algorithm>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

namespace wc {

using boost::multiprecision::cpp_int;

Rat parse_rational(const std::string& s) {
  auto bad = [&]() -> Rat {
    throw DomainError("invalid rational '" + s + "' (expected p or p/q)");
  };
  if (s.empty()) return bad();
  std::string num = s, den = "1";
  if (auto pos = s.find('/'); pos != std::string::npos) {
    num = s.substr(0, pos);
    den = s.substr(pos + 1);
    if (den.find('/') != std::string::npos) return bad();
  }
  try {
    cpp_int n(num), d(den);
    if (d == 0) throw DomainError("invalid rational '" + s + "': zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    return Rat(n, d);
  } catch (const DomainError&) {
    throw;
  } catch (const std::exception&) {
    return bad();
  }
}

std::string format_rational(const Rat& r) {
  std::ostringstream os;
  os << numerator(r) << "/" << denominator(r);
  return os.str();
}

void LinearConstraint::normalize() {
  // Clear zeros first.
  for (auto it = coeffs.begin(); it != coeffs.end();)
    it = (it->second == 0) ? coeffs.erase(it) : std::next(it);
  if (coeffs.empty()) return;
  // Scale to coprime integers: multiply by lcm of denominators, divide by
  // gcd of numerators.
  cpp_int l = 1;
  for (const auto& [v, c] : coeffs) l = lcm(l, cpp_int(denominator(c)));
  cpp_int g = 0;
  for (const auto& [v, c] : coeffs) g = gcd(g, cpp_int(numerator(c) * l / denominator(c)));
  Rat scale = Rat(l, g);
  if (coeffs.begin()->second < 0) scale = -scale;
  for (auto& [v, c] : coeffs) c *= scale;
}

LinearConstraint constraint_set_equal(uint32_t n, const VertexSet& s, const VertexSet& t) {
  LinearConstraint c;
  c.n = n;
  for (int v = s.first(); v != -1; v = s.next(uint32_t(v))) c.coeffs[uint32_t(v)] += 1;
  for (int v = t.first(); v != -1; v = t.next(uint32_t(v))) c.coeffs[uint32_t(v)] -= 1;
  c.normalize();
  return c;
}

LinearConstraint constraint_zero(uint32_t n, uint32_t v) {
  LinearConstraint c;
  c.n = n;
  c.coeffs[v] = 1;
  return c;
}

Rat evaluate(const WeightVector& w, const VertexSet& s) {
  Rat sum = 0;
  for (int v = s.first(); v != -1; v = s.next(uint32_t(v))) sum += w.w.at(uint32_t(v));
  return sum;
}

bool satisfies(const WeightVector& w, const LinearConstraint& c) {
  Rat sum = 0;
  for (const auto& [v, coef] : c.coeffs) sum += coef * w.w.at(v);
  return sum == 0;
}

namespace {

std::string constraint_key(const LinearConstraint& c) {
  std::ostringstream os;
  for (const auto& [v, coef] : c.coeffs) os << v << ":" << format_rational(coef) << ";";
  return os.str();
}

}  // namespace

void ConstraintSystem::add(LinearConstraint c) {
  if (c.n != n_)
    throw DomainError("constraint universe " + std::to_string(c.n) +
                      " does not match system universe " + std::to_string(n_));
  c.normalize();
  if (c.coeffs.empty()) return;  // identity
  std::string key = constraint_key(c);
  if (std::find(keys_.begin(), keys_.end(), key) != keys_.end()) return;
  keys_.push_back(std::move(key));
  cs_.push_back(std::move(c));
}

namespace {

struct Rref {
  std::vector<std::vector<Rat>> rows;  // reduced rows, one per pivot
  std::vector<uint32_t> pivot_cols;    // ascending
};

Rref reduce(const std::vector<LinearConstraint>& cs, uint32_t n) {
  std::vector<std::vector<Rat>> rows;
  rows.reserve(cs.size());
  for (const auto& c : cs) {
    std::vector<Rat> r(n, Rat(0));
    for (const auto& [v, coef] : c.coeffs) r[v] = coef;
    rows.push_back(std::move(r));
  }
  Rref out;
  size_t next_row = 0;
  for (uint32_t col = 0; col < n && next_row < rows.size(); ++col) {
    size_t pivot = SIZE_MAX;
    for (size_t r = next_row; r < rows.size(); ++r)
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot == SIZE_MAX) continue;
    std::swap(rows[next_row], rows[pivot]);
    Rat inv = rows[next_row][col];
    for (uint32_t j = col; j < n; ++j) rows[next_row][j] /= inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == next_row || rows[r][col] == 0) continue;
      Rat f = rows[r][col];
      for (uint32_t j = col; j < n; ++j) rows[r][j] -= f * rows[next_row][j];
    }
    out.pivot_cols.push_back(col);
    ++next_row;
  }
  rows.resize(next_row);
  out.rows = std::move(rows);
  return out;
}

}  // namespace

uint32_t ConstraintSystem::dimension() const {
  return n_ - uint32_t(reduce(cs_, n_).pivot_cols.size());
}

std::vector<WeightVector> ConstraintSystem::nullspace_basis() const {
  Rref r = reduce(cs_, n_);
  std::vector<bool> is_pivot(n_, false);
  for (uint32_t c : r.pivot_cols) is_pivot[c] = true;
  std::vector<WeightVector> basis;
  for (uint32_t f = 0; f < n_; ++f) {
    if (is_pivot[f]) continue;
    WeightVector v;
    v.w.assign(n_, Rat(0));
    v.w[f] = 1;
    for (size_t i = 0; i < r.pivot_cols.size(); ++i) v.w[r.pivot_cols[i]] = -r.rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool ConstraintSystem::satisfied_by(const WeightVector& w) const {
  if (w.w.size() != n_)
    throw DomainError("weight vector length " + std::to_string(w.w.size()) +
                      " does not match universe " + std::to_string(n_));
  for (const auto& c : cs_)
    if (!satisfies(w, c)) return false;
  return true;
}

bool spaces_equal(const ConstraintSystem& a, const ConstraintSystem& b) {
  if (a.n() != b.n())
    throw DomainError("spaces_equal: universes differ (" + std::to_string(a.n()) + " vs " +
                      std::to_string(b.n()) + ")");
  for (const auto& v : a.nullspace_basis())
    if (!b.satisfied_by(v)) return false;
  for (const auto& v : b.nullspace_basis())
    if (!a.satisfied_by(v)) return false;
  return true;
}

}  // namespace wc
