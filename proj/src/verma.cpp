#include "cfrag/verma.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "cfrag/errors.hpp"

namespace cfrag {
namespace {

void partitions_into(int n, int max_part, Partition& prefix, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(prefix);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    prefix.push_back(k);
    partitions_into(n - k, k, prefix, out);
    prefix.pop_back();
  }
}

struct MemoKey {
  int m;
  Partition p;
  bool operator==(const MemoKey&) const = default;
};

struct MemoHash {
  std::size_t operator()(const MemoKey& k) const {
    std::size_t h = std::hash<int>{}(k.m);
    for (int x : k.p) h = h * 1000003u ^ std::hash<int>{}(x);
    return h;
  }
};

}  // namespace

int level(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  Partition prefix;
  partitions_into(n, n, prefix, out);
  return out;
}

VermaState VermaState::basis(const Partition& p, const Rational& coefficient) {
  VermaState s;
  s.add(p, coefficient);
  return s;
}

Rational VermaState::coefficient(const Partition& p) const {
  const auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

int VermaState::max_level() const {
  int l = -1;
  for (const auto& [p, c] : terms_) l = std::max(l, level(p));
  return l;
}

void VermaState::add(const Partition& p, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

VermaState& VermaState::operator+=(const VermaState& other) {
  for (const auto& [p, c] : other.terms_) add(p, c);
  return *this;
}

VermaState& VermaState::operator-=(const VermaState& other) {
  for (const auto& [p, c] : other.terms_) add(p, -c);
  return *this;
}

VermaState& VermaState::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, c] : terms_) c *= s;
  return *this;
}

std::string VermaState::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [p, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + cfrag::to_string(c) + ")";
    for (int n : p) out += " L_{-" + std::to_string(n) + "}";
    out += " |h>";
  }
  return out;
}

struct VermaModule::Memo {
  std::mutex mutex;
  std::unordered_map<MemoKey, VermaState, MemoHash> table;
};

VermaModule::VermaModule(Rational c, Rational h, int truncation)
    : c_(std::move(c)), h_(std::move(h)), truncation_(truncation), memo_(std::make_unique<Memo>()) {
  if (truncation < 0) throw std::invalid_argument("truncation level must be non-negative");
}

VermaModule::~VermaModule() = default;
VermaModule::VermaModule(VermaModule&&) noexcept = default;
VermaModule& VermaModule::operator=(VermaModule&&) noexcept = default;

VermaState VermaModule::act(int m, const VermaState& v) const {
  VermaState out;
  for (const auto& [p, coefficient] : v.terms()) {
    auto term = act_basis(m, p);
    term *= coefficient;
    out += term;
  }
  return out;
}

// L_m L_{-f} R = L_{-f} (L_m R) + (m + f) L_{m-f} R + delta_{m,f} (m^3 - m)/12 c R.
VermaState VermaModule::act_basis(int m, const Partition& p) const {
  const int target = level(p) - m;
  if (target > truncation_)
    throw TruncationError("L_" + std::to_string(m) + " on a level-" + std::to_string(level(p)) +
                          " state leaves the module truncated at level " + std::to_string(truncation_));
  if (target < 0) return {};
  if (m == 0) return VermaState::basis(p, h_ + level(p));
  if (m < 0 && (p.empty() || -m >= p.front())) {
    Partition q;
    q.reserve(p.size() + 1);
    q.push_back(-m);
    q.insert(q.end(), p.begin(), p.end());
    return VermaState::basis(q);
  }
  if (p.empty()) return {};  // m > 0 annihilates |h>

  const MemoKey key{m, p};
  {
    std::lock_guard lock(memo_->mutex);
    if (auto it = memo_->table.find(key); it != memo_->table.end()) return it->second;
  }

  const int f = p.front();
  const Partition rest(p.begin() + 1, p.end());
  VermaState out = act(-f, act_basis(m, rest));
  if (m + f != 0) {
    auto t = act_basis(m - f, rest);
    t *= Rational(m + f);
    out += t;
  }
  if (m == f) {
    Rational central(m * m * m - m, 12);
    central.canonicalize();
    central *= c_;
    out += VermaState::basis(rest, central);
  }

  std::lock_guard lock(memo_->mutex);
  memo_->table.emplace(key, out);
  return out;
}

bool VermaModule::commutator_check(int m, int n, const VermaState& v) const {
  if (v.max_level() + std::abs(m) + std::abs(n) > truncation_)
    throw TruncationError("commutator check needs level(v) + |m| + |n| <= " + std::to_string(truncation_));
  const VermaState lhs = act(m, act(n, v)) - act(n, act(m, v));
  VermaState rhs = act(m + n, v);
  rhs *= Rational(m - n);
  if (m == -n) {
    Rational central(m * m * m - m, 12);
    central.canonicalize();
    central *= c_;
    rhs += central * v;
  }
  return lhs == rhs;
}

std::vector<Partition> VermaModule::basis(int lvl) const {
  if (lvl > truncation_) throw TruncationError("level " + std::to_string(lvl) + " exceeds the truncation");
  return partitions(lvl);
}

std::vector<std::vector<Rational>> VermaModule::gram_matrix(int lvl) const {
  const auto b = basis(lvl);
  std::vector<std::vector<Rational>> g(b.size(), std::vector<Rational>(b.size()));
  for (std::size_t j = 0; j < b.size(); ++j) {
    // <L_{-mu} h, v> = <h, L_{mu_k} ... L_{mu_1} v>: apply L_{mu_1} first.
    for (std::size_t i = 0; i < b.size(); ++i) {
      VermaState v = VermaState::basis(b[j]);
      for (int part : b[i]) v = act(part, v);
      g[i][j] = v.coefficient({});
    }
  }
  return g;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const Rational factor = m[r][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[r][k] -= factor * m[col][k];
    }
  }
  return det;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
  try {
    if (const auto dot = s.find('.'); dot != std::string::npos) {
      if (s.find('/') != std::string::npos) throw std::invalid_argument("mixed");
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      const std::size_t decimals = s.size() - dot - 1;
      if (digits.empty() || digits == "-" || digits == "+") throw std::invalid_argument("empty");
      if (digits.front() == '+') digits.erase(0, 1);
      mpz_class num(digits, 10);
      mpz_class den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, decimals);
      Rational r(num, den);
      r.canonicalize();
      return r;
    }
    if (!s.empty() && s.front() == '+') s.erase(0, 1);
    Rational r(s, 10);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator");
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw ParseError("not a rational number: '" + text + "'");
  }
}

}  // namespace cfrag
