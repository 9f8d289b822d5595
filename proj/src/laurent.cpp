#include "repknot/laurent.hpp"

#include <cassert>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace repknot {

namespace {
long long checked_mul(long long a, long long b) {
  __int128 p = static_cast<__int128>(a) * b;
  if (p > INT64_MAX || p < INT64_MIN) throw std::overflow_error("laurent coefficient overflow");
  return static_cast<long long>(p);
}
long long checked_add(long long a, long long b) {
  __int128 s = static_cast<__int128>(a) + b;
  if (s > INT64_MAX || s < INT64_MIN) throw std::overflow_error("laurent coefficient overflow");
  return static_cast<long long>(s);
}
}  // namespace

Laurent Laurent::term(long long c, int e) {
  Laurent r;
  if (c != 0) {
    r.lo_ = e;
    r.coeffs_ = {c};
  }
  return r;
}

void Laurent::trim() {
  size_t begin = 0;
  while (begin < coeffs_.size() && coeffs_[begin] == 0) ++begin;
  size_t end = coeffs_.size();
  while (end > begin && coeffs_[end - 1] == 0) --end;
  if (begin == end) {
    coeffs_.clear();
    lo_ = 0;
    return;
  }
  if (begin > 0) lo_ += static_cast<int>(begin);
  coeffs_ = std::vector<long long>(coeffs_.begin() + begin, coeffs_.begin() + end);
}

long long Laurent::coeff(int e) const {
  if (is_zero() || e < lo_ || e > hi()) return 0;
  return coeffs_[e - lo_];
}

Laurent Laurent::operator+(const Laurent& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  Laurent r;
  r.lo_ = std::min(lo_, o.lo_);
  int hi_e = std::max(hi(), o.hi());
  r.coeffs_.assign(hi_e - r.lo_ + 1, 0);
  for (int e = r.lo_; e <= hi_e; ++e) r.coeffs_[e - r.lo_] = checked_add(coeff(e), o.coeff(e));
  r.trim();
  return r;
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
  if (is_zero() || o.is_zero()) return {};
  Laurent r;
  r.lo_ = lo_ + o.lo_;
  r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j)
      r.coeffs_[i + j] = checked_add(r.coeffs_[i + j], checked_mul(coeffs_[i], o.coeffs_[j]));
  r.trim();
  return r;
}

Laurent Laurent::divexact(const Laurent& d) const {
  if (d.is_zero()) throw std::logic_error("laurent division by zero");
  if (is_zero()) return {};
  // Long division from the top; each step kills the leading term of the
  // remainder, so an exact quotient is reached in at most span steps.
  Laurent rem = *this;
  Laurent quot;
  long long dl = d.coeffs_.back();
  int max_steps = (hi() - lo()) - (d.hi() - d.lo()) + 1;
  for (int step = 0; step < max_steps && !rem.is_zero(); ++step) {
    long long rl = rem.coeffs_.back();
    if (rl % dl != 0) throw std::logic_error("laurent division not exact");
    Laurent t = term(rl / dl, rem.hi() - d.hi());
    quot = quot + t;
    rem = rem - t * d;
  }
  if (!rem.is_zero()) throw std::logic_error("laurent division not exact");
  return quot;
}

long long Laurent::eval(long long t) const {
  if (is_zero()) return 0;
  if (lo_ < 0 && t != 1 && t != -1)
    throw std::logic_error("cannot evaluate negative exponents at |t| != 1");
  long long acc = 0;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    int e = lo_ + static_cast<int>(k);
    long long p = 1;
    if (t == 1) {
      p = 1;
    } else if (t == -1) {
      p = (e % 2 == 0) ? 1 : -1;
    } else {
      for (int q = 0; q < e; ++q) p = checked_mul(p, t);
    }
    acc = checked_add(acc, checked_mul(coeffs_[k], p));
  }
  return acc;
}

Laurent Laurent::shifted(int e) const {
  Laurent r = *this;
  if (!r.is_zero()) r.lo_ += e;
  return r;
}

bool Laurent::associate_of(const Laurent& o) const {
  if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
  if (coeffs_.size() != o.coeffs_.size()) return false;
  bool plus = true, minus = true;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != o.coeffs_[k]) plus = false;
    if (coeffs_[k] != -o.coeffs_[k]) minus = false;
  }
  return plus || minus;
}

std::string Laurent::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int e = hi(); e >= lo_; --e) {
    long long c = coeff(e);
    if (c == 0) continue;
    if (!first) out << (c > 0 ? " + " : " - ");
    if (first && c < 0) out << "-";
    long long a = std::llabs(c);
    if (a != 1 || e == 0) out << a;
    if (e != 0) {
      if (a != 1) out << "*";
      out << var;
      if (e != 1) out << "^" << e;
    }
    first = false;
  }
  return out.str();
}

Laurent laurent_det(std::vector<std::vector<Laurent>> m) {
  size_t n = m.size();
  if (n == 0) return Laurent(1);
  for (auto& row : m) assert(row.size() == n);
  Laurent prev(1);
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t piv = k + 1;
      while (piv < n && m[piv][k].is_zero()) ++piv;
      if (piv == n) return {};
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Laurent num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = num.divexact(prev);
      }
      m[i][k] = {};
    }
    prev = m[k][k];
  }
  Laurent d = m[n - 1][n - 1];
  return sign == 1 ? d : -d;
}

}  // namespace repknot
