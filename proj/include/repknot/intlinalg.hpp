#pragma once

#include <cstdint>
#include <vector>

namespace repknot {

using IntMatrix = std::vector<std::vector<long long>>;

// Determinant by fraction-free (Bareiss) elimination; exact, overflow-checked.
long long int_det(IntMatrix m);

// Smith normal form D = U * A * V with U, V unimodular; only D's diagonal and
// V are returned (enough to enumerate solution sets of A x = 0 mod n).
struct SmithResult {
  std::vector<long long> diag;  // length = min(rows, cols), may end in zeros
  IntMatrix v;                  // cols x cols unimodular
  int rows = 0, cols = 0;
};
SmithResult smith_normal_form(IntMatrix a);

// Signature (n_+ - n_-) of a symmetric integer matrix, computed exactly by
// rational congruence reduction.
int sym_signature(const IntMatrix& m);

}  // namespace repknot
