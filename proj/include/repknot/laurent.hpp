#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace repknot {

// Laurent polynomial in one variable with integer coefficients.
// Stored as a dense coefficient run starting at exponent `lo`.
class Laurent {
public:
  Laurent() = default;
  Laurent(long long c) {
    if (c != 0) {
      lo_ = 0;
      coeffs_ = {c};
    }
  }
  // c * t^e
  static Laurent term(long long c, int e);

  bool is_zero() const { return coeffs_.empty(); }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(coeffs_.size()) - 1; }
  long long coeff(int e) const;

  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;
  Laurent operator-() const;
  bool operator==(const Laurent& o) const { return lo_ == o.lo_ && coeffs_ == o.coeffs_; }

  // Exact division; throws std::logic_error if the division is not exact.
  Laurent divexact(const Laurent& d) const;

  long long eval(long long t) const;  // exponents may be negative only if t = +-1
  Laurent shifted(int e) const;       // * t^e

  // Equality up to multiplication by +-t^k.
  bool associate_of(const Laurent& o) const;

  std::vector<long long> coeff_run() const { return coeffs_; }
  std::string str(const std::string& var = "t") const;

private:
  void trim();
  int lo_ = 0;
  std::vector<long long> coeffs_;  // coeffs_[k] is the coefficient of t^(lo_+k)
};

// Determinant of a square matrix of Laurent polynomials by fraction-free
// (Bareiss) elimination; exact.
Laurent laurent_det(std::vector<std::vector<Laurent>> m);

}  // namespace repknot
