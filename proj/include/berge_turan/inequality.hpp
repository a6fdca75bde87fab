#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "berge_turan/error.hpp"

namespace berge_turan {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational in lowest terms with a positive denominator.
using RationalValue = boost::rational<BigInt>;

inline std::string to_string(const RationalValue& q) {
  if (q.denominator() == 1) return q.numerator().str();
  return q.numerator().str() + "/" + q.denominator().str();
}

/// Pascal's triangle on arbitrary-precision integers, rows grown on demand
/// and truncated to columns 0..max_b. C(a, b) = 0 when b < 0 or b > a.
class BinomialTable {
 public:
  explicit BinomialTable(int max_b) : max_b_(max_b) {}

  const BigInt& operator()(int a, int b) {
    static const BigInt zero = 0;
    if (a < 0 || b < 0 || b > a) return zero;
    if (b > max_b_) throw InvalidParameter("binomial column beyond the table width");
    while (static_cast<int>(rows_.size()) <= a) {
      const int m = static_cast<int>(rows_.size());
      std::vector<BigInt> row(static_cast<std::size_t>(std::min(m, max_b_) + 1), 1);
      for (int j = 1; j <= std::min(m - 1, max_b_); ++j) row[j] = rows_[m - 1][j - 1] + rows_[m - 1][j];
      rows_.push_back(std::move(row));
    }
    return rows_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }

 private:
  int max_b_;
  std::vector<std::vector<BigInt>> rows_;
};

struct EquReport {
  int k = 3;
  int r = 3;
  RationalValue lhs;
  RationalValue rhs;
  std::vector<RationalValue> terms;  // terms[i] is the i-th summand of lhs
  bool holds = false;          // lhs >= rhs
  bool contradiction = false;  // !holds
};

/// Both sides of
///   sum_{i=0}^{k-3} C(k-3,i) C(r-k+3,k-1-i) (1/2)^{k-1-i}  >=  C(r-1,k-1).
inline EquReport eq_check(int k, int r, BinomialTable& binom) {
  if (k < 3) throw InvalidParameter("eq_check needs k >= 3");
  if (r < k) throw InvalidParameter("eq_check needs r >= k");
  EquReport rep;
  rep.k = k;
  rep.r = r;
  for (int i = 0; i <= k - 3; ++i) {
    rep.terms.emplace_back(binom(k - 3, i) * binom(r - k + 3, k - 1 - i), BigInt(1) << (k - 1 - i));
    rep.lhs += rep.terms.back();
  }
  rep.rhs = RationalValue(binom(r - 1, k - 1));
  rep.holds = rep.lhs >= rep.rhs;
  rep.contradiction = !rep.holds;
  return rep;
}

inline EquReport eq_check(int k, int r) {
  BinomialTable binom(std::max(k - 1, 0));
  return eq_check(k, r, binom);
}

struct EquScan {
  int k = 3;
  int r_max = 3;
  std::vector<EquReport> rows;        // r = k .. r_max
  std::vector<int> contradiction_at;  // the r with contradiction = true
  /// Least r0 such that every scanned r >= r0 gives a contradiction; empty
  /// when the last scanned r does not.
  std::optional<int> threshold;
};

inline EquScan scan_equ(int k, int r_max) {
  if (k < 3) throw InvalidParameter("scan_equ needs k >= 3");
  EquScan scan;
  scan.k = k;
  scan.r_max = r_max;
  BinomialTable binom(k - 1);
  for (int r = k; r <= r_max; ++r) {
    scan.rows.push_back(eq_check(k, r, binom));
    if (scan.rows.back().contradiction) scan.contradiction_at.push_back(r);
  }
  for (auto it = scan.rows.rbegin(); it != scan.rows.rend() && it->contradiction; ++it) scan.threshold = it->r;
  return scan;
}

}  // namespace berge_turan
