#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/errors.hpp"
#include "leibniz/gamma_vector.hpp"
#include "leibniz/rational.hpp"

namespace leibniz {

/// Symmetric weight table on D_n = {(i, j) : i, j >= 0, i + j <= n} with
/// unit boundary (entries with i * j = 0 are 1). Only i <= j is stored, so
/// symmetry and the boundary rule hold by construction.
class GammaTable {
 public:
  /// Builds the table from `interior(i, j)`, called once for each
  /// 1 <= i <= j with i + j <= n.
  static GammaTable from_interior(int n, const std::function<Rational(int, int)>& interior);
  /// Gamma(i, j) = C(i + j, i).
  static GammaTable binomial(int n);

  int n() const { return n_; }
  bool contains(int i, int j) const { return i >= 0 && j >= 0 && i + j <= n_; }
  /// Symmetric lookup; throws std::out_of_range outside D_n.
  const Rational& operator()(int i, int j) const;

  /// (i, j, value) for 1 <= i <= j, i + j <= n, in (i, j) order.
  std::vector<std::tuple<int, int, Rational>> interior_entries() const;

  friend bool operator==(const GammaTable& a, const GammaTable& b) = default;

 private:
  GammaTable(int n, std::map<std::pair<int, int>, Rational> entries) : n_(n), entries_(std::move(entries)) {}

  int n_ = 0;
  std::map<std::pair<int, int>, Rational> entries_;
};

/// One raw (i, j, value) triple as supplied by a user.
struct RawGammaEntry {
  int i;
  int j;
  Rational value;
};

enum class TableViolationKind { Domain, Symmetry, Boundary };

struct TableViolation {
  TableViolationKind kind;
  int i;
  int j;
  std::string detail;
};

struct ValidationResult {
  std::optional<GammaTable> table;
  std::vector<TableViolation> violations;
  bool ok() const { return table.has_value(); }
};

std::string to_string(TableViolationKind kind);

/// Checks domain, symmetry and the unit boundary; boundary entries may be
/// omitted and default to 1. Reports every violating index pair.
ValidationResult validate(const std::vector<RawGammaEntry>& raw, int n);

struct CocycleViolation {
  int i;
  int j;
  int k;
  Rational lhs;  // Gamma(i+j, k) Gamma(i, j)
  Rational rhs;  // Gamma(i, j+k) Gamma(j, k)
};

struct CocycleReport {
  std::size_t triples_checked = 0;
  std::vector<CocycleViolation> violations;
  bool passed() const { return violations.empty(); }
};

/// Exhaustive check of Gamma(i+j, k) Gamma(i, j) = Gamma(i, j+k) Gamma(j, k)
/// over all i, j, k >= 0 with i + j + k <= n.
CocycleReport check_cocycle(const GammaTable& table);

/// True iff every k in 2..n has some interior Gamma(i, k - i) != 0.
bool check_order_condition(const GammaTable& table);

struct FactorizationMismatch {
  int i;
  int j;
  Rational table_value;
  Rational factored_value;  // gamma(i+j) / (gamma(i) gamma(j))
};

struct FactorizeResult {
  std::optional<GammaVector> gamma;
  std::optional<FactorizationMismatch> mismatch;
  bool ok() const { return gamma.has_value(); }
};

/// gamma(k) = prod_{l=1}^{k-1} Gamma(l, 1), then checks
/// Gamma(i, j) = gamma(i+j) / (gamma(i) gamma(j)) on all of D_n.
/// Throws ZeroEntryError if the table has a zero entry.
FactorizeResult factorize(const GammaTable& table);

/// Gamma(i, j) = gamma(i+j) / (gamma(i) gamma(j)).
GammaTable synthesize(const GammaVector& gamma);

}  // namespace leibniz
