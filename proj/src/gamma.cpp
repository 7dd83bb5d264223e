#include "leibniz/gamma.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

#include "leibniz/errors.hpp"

namespace leibniz {

GammaTable GammaTable::from_interior(int n, const std::function<Rational(int, int)>& interior) {
  if (n < 1) throw Error("gamma table order must be at least 1");
  std::map<std::pair<int, int>, Rational> entries;
  for (int i = 0; i <= n; ++i)
    for (int j = i; i + j <= n; ++j) entries.emplace(std::pair{i, j}, i == 0 ? Rational(1) : interior(i, j));
  return GammaTable(n, std::move(entries));
}

GammaTable GammaTable::binomial(int n) {
  return from_interior(n, [](int i, int j) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(i + j), static_cast<unsigned long>(i));
    return Rational(c);
  });
}

const Rational& GammaTable::operator()(int i, int j) const {
  if (!contains(i, j))
    throw std::out_of_range("(" + std::to_string(i) + "," + std::to_string(j) + ") is outside the table domain");
  return entries_.at(std::minmax(i, j));
}

std::vector<std::tuple<int, int, Rational>> GammaTable::interior_entries() const {
  std::vector<std::tuple<int, int, Rational>> out;
  for (const auto& [key, value] : entries_)
    if (key.first >= 1) out.emplace_back(key.first, key.second, value);
  return out;
}

std::string to_string(TableViolationKind kind) {
  switch (kind) {
    case TableViolationKind::Domain:
      return "domain";
    case TableViolationKind::Symmetry:
      return "symmetry";
    case TableViolationKind::Boundary:
      return "boundary";
  }
  return "unknown";
}

ValidationResult validate(const std::vector<RawGammaEntry>& raw, int n) {
  if (n < 1) throw Error("gamma table order must be at least 1");
  ValidationResult result;
  auto& violations = result.violations;
  std::map<std::pair<int, int>, Rational> given;  // oriented as supplied
  for (const auto& [i, j, value] : raw) {
    if (i < 0 || j < 0 || i + j > n) {
      violations.push_back({TableViolationKind::Domain, i, j, "index pair outside the table domain"});
      continue;
    }
    auto [it, inserted] = given.emplace(std::pair{i, j}, value);
    if (!inserted && it->second != value)
      violations.push_back({TableViolationKind::Domain, i, j, "conflicting duplicate entries"});
  }

  std::map<std::pair<int, int>, Rational> entries;
  for (int i = 0; i <= n; ++i)
    for (int j = i; i + j <= n; ++j) {
      const auto a = given.find({i, j});
      const auto b = given.find({j, i});
      const bool boundary = i == 0;
      if (a == given.end() && b == given.end()) {
        if (boundary)
          entries.emplace(std::pair{i, j}, Rational(1));
        else
          violations.push_back({TableViolationKind::Domain, i, j, "missing interior entry"});
        continue;
      }
      if (a != given.end() && b != given.end() && a->second != b->second)
        violations.push_back({TableViolationKind::Symmetry, i, j,
                              a->second.to_string() + " != " + b->second.to_string()});
      const Rational& value = a != given.end() ? a->second : b->second;
      if (boundary) {
        const bool bad_a = a != given.end() && !a->second.is_one();
        const bool bad_b = b != given.end() && !b->second.is_one() && i != j;
        if (bad_a) violations.push_back({TableViolationKind::Boundary, i, j, "expected 1, got " + a->second.to_string()});
        if (bad_b) violations.push_back({TableViolationKind::Boundary, j, i, "expected 1, got " + b->second.to_string()});
      }
      entries.emplace(std::pair{i, j}, value);
    }

  std::sort(violations.begin(), violations.end(), [](const TableViolation& x, const TableViolation& y) {
    return std::tie(x.i, x.j, x.kind) < std::tie(y.i, y.j, y.kind);
  });
  if (violations.empty())
    result.table = GammaTable::from_interior(n, [&](int i, int j) { return entries.at({i, j}); });
  return result;
}

CocycleReport check_cocycle(const GammaTable& table) {
  CocycleReport report;
  const int n = table.n();
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j)
      for (int k = 0; i + j + k <= n; ++k) {
        ++report.triples_checked;
        Rational lhs = table(i + j, k) * table(i, j);
        Rational rhs = table(i, j + k) * table(j, k);
        if (lhs != rhs) report.violations.push_back({i, j, k, std::move(lhs), std::move(rhs)});
      }
  return report;
}

bool check_order_condition(const GammaTable& table) {
  for (int k = 2; k <= table.n(); ++k) {
    bool found = false;
    for (int i = 1; i < k && !found; ++i) found = !table(i, k - i).is_zero();
    if (!found) return false;
  }
  return true;
}

FactorizeResult factorize(const GammaTable& table) {
  for (const auto& [i, j, value] : table.interior_entries())
    if (value.is_zero()) throw ZeroEntryError(i, j);

  const int n = table.n();
  std::vector<Rational> gamma{Rational(1)};
  Rational product(1);
  for (int k = 1; k <= n; ++k) {
    if (k >= 2) product *= table(k - 1, 1);
    gamma.push_back(product);
  }

  FactorizeResult result;
  for (int i = 0; i <= n; ++i)
    for (int j = i; i + j <= n; ++j) {
      Rational factored = gamma[i + j] / (gamma[i] * gamma[j]);
      if (factored != table(i, j)) {
        result.mismatch = FactorizationMismatch{i, j, table(i, j), std::move(factored)};
        return result;
      }
    }
  result.gamma = GammaVector(std::move(gamma));
  return result;
}

GammaTable synthesize(const GammaVector& gamma) {
  return GammaTable::from_interior(gamma.n(), [&](int i, int j) { return gamma[i + j] / (gamma[i] * gamma[j]); });
}

}  // namespace leibniz
