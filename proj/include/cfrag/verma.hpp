#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cfrag {

using Rational = mpq_class;

/// Weakly decreasing positive parts n1 >= ... >= nk, labelling L_{-n1} ... L_{-nk} |h>.
using Partition = std::vector<int>;

int level(const Partition& p);

/// All partitions of `n`, in reverse lexicographic order ((n) first).
std::vector<Partition> partitions(int n);

/// Finite rational combination of PBW basis states.
class VermaState {
 public:
  VermaState() = default;
  static VermaState basis(const Partition& p, const Rational& coefficient = 1);

  const std::map<Partition, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of a basis state (0 if absent).
  Rational coefficient(const Partition& p) const;
  /// Highest level among the terms; -1 for the zero state.
  int max_level() const;

  void add(const Partition& p, const Rational& c);
  VermaState& operator+=(const VermaState& other);
  VermaState& operator-=(const VermaState& other);
  VermaState& operator*=(const Rational& s);

  friend VermaState operator+(VermaState a, const VermaState& b) { return a += b; }
  friend VermaState operator-(VermaState a, const VermaState& b) { return a -= b; }
  friend VermaState operator*(const Rational& s, VermaState a) { return a *= s; }
  friend bool operator==(const VermaState& a, const VermaState& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  std::map<Partition, Rational> terms_;
};

/// Lowest-weight Virasoro module M(c, h) truncated at level L:
/// L_m |h> = 0 for m > 0, L_0 |h> = h |h>, the central element acts as c.
/// Safe for concurrent use; the normal-ordering memo is internally locked.
class VermaModule {
 public:
  VermaModule(Rational c, Rational h, int truncation = 8);
  ~VermaModule();
  VermaModule(VermaModule&&) noexcept;
  VermaModule& operator=(VermaModule&&) noexcept;

  const Rational& c() const { return c_; }
  const Rational& h() const { return h_; }
  int truncation() const { return truncation_; }

  VermaState vacuum() const { return VermaState::basis({}); }

  /// L_m v. Throws TruncationError if a term would land above the truncation level.
  VermaState act(int m, const VermaState& v) const;

  /// Exact check of [L_m, L_n] v = (m - n) L_{m+n} v + m(m^2 - 1)/12 delta_{m,-n} c v.
  /// Throws TruncationError unless max_level(v) + |m| + |n| <= L.
  bool commutator_check(int m, int n, const VermaState& v) const;

  /// Basis states of one level.
  std::vector<Partition> basis(int level) const;

  /// Entries <L_{-mu} h, L_{-nu} h> with L_n^dagger = L_{-n}, in basis(level) order.
  std::vector<std::vector<Rational>> gram_matrix(int level) const;

 private:
  VermaState act_basis(int m, const Partition& p) const;

  Rational c_;
  Rational h_;
  int truncation_;
  struct Memo;
  std::unique_ptr<Memo> memo_;
};

/// Determinant by exact Gaussian elimination.
Rational determinant(std::vector<std::vector<Rational>> m);

/// "p/q" or "p".
std::string to_string(const Rational& r);
/// Parses "p/q", "p" or a decimal like "0.5"; throws ParseError.
Rational parse_rational(const std::string& text);

}  // namespace cfrag
