#include "cfrag/specs.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <vector>

#include "cfrag/bump.hpp"
#include "cfrag/errors.hpp"

namespace cfrag {
namespace {

using cplx = std::complex<double>;

std::string strip(const std::string& s) {
  std::string out;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
  return out;
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

double parse_number(const std::string& text, const std::string& context) {
  if (text.empty()) throw ParseError("missing number in '" + context + "'");
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size() || !std::isfinite(v))
    throw ParseError("bad number '" + text + "' in '" + context + "'");
  return v;
}

// Splits "(x,y,...)" into its fields.
std::vector<std::string> tuple_fields(const std::string& t, const std::string& context) {
  if (t.size() < 2 || t.front() != '(' || t.back() != ')') throw ParseError("expected a tuple in '" + context + "'");
  std::vector<std::string> out;
  std::string cur;
  for (char ch : t.substr(1, t.size() - 2)) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

struct Term {
  int k;
  double a, b;
};

// "[(k,a,b),...]"
std::vector<Term> parse_fourier(const std::string& body, const std::string& context) {
  if (body.size() < 2 || body.front() != '[' || body.back() != ']')
    throw ParseError("expected '[(k,a,b),...]' in '" + context + "'");
  std::vector<Term> terms;
  const std::string inner = body.substr(1, body.size() - 2);
  std::size_t pos = 0;
  while (pos < inner.size()) {
    const std::size_t close = inner.find(')', pos);
    if (close == std::string::npos) throw ParseError("unterminated tuple in '" + context + "'");
    const auto f = tuple_fields(inner.substr(pos, close - pos + 1), context);
    if (f.size() != 3) throw ParseError("Fourier terms need three fields (k,a,b) in '" + context + "'");
    const double k = parse_number(f[0], context);
    if (k < 0 || k != std::floor(k) || k > 1e6) throw ParseError("mode must be a non-negative integer in '" + context + "'");
    terms.push_back({static_cast<int>(k), parse_number(f[1], context), parse_number(f[2], context)});
    pos = close + 1;
    if (pos < inner.size()) {
      if (inner[pos] != ',') throw ParseError("expected ',' between terms in '" + context + "'");
      ++pos;
    }
  }
  return terms;
}

PeriodicFunction sample_fourier(const std::vector<Term>& terms, std::size_t n) {
  return PeriodicFunction::sample(
      [&](double t) {
        double v = 0.0;
        for (const auto& term : terms) v += term.a * std::cos(term.k * t) + term.b * std::sin(term.k * t);
        return v;
      },
      n);
}

}  // namespace

CircleDiffeo parse_diffeo(const std::string& raw, std::size_t n) {
  const std::string s = strip(raw);
  try {
    if (s == "identity" || s == "id") return CircleDiffeo::identity(n);
    if (starts_with(s, "rot:")) return CircleDiffeo::rotation(parse_number(s.substr(4), raw), n);
    if (starts_with(s, "fourier:")) return CircleDiffeo(sample_fourier(parse_fourier(s.substr(8), raw), n));
  } catch (const DerivativeError& e) {
    throw ParseError("'" + raw + "' is not a diffeomorphism: " + e.what());
  }
  throw ParseError("unknown diffeomorphism spec '" + raw + "' (expected identity, rot:s or fourier:[...])");
}

ComplexPeriodicFunction parse_scalar(const std::string& raw, std::size_t n) {
  const std::string s = strip(raw);
  if (starts_with(s, "fourier:")) return to_complex(sample_fourier(parse_fourier(s.substr(8), raw), n));
  if (starts_with(s, "const:")) return ComplexPeriodicFunction::constant(parse_number(s.substr(6), raw), n);
  if (starts_with(s, "mono:")) {
    const double k = parse_number(s.substr(5), raw);
    if (k != std::floor(k) || std::abs(k) >= static_cast<double>(n / 2))
      throw ParseError("monomial index must be an integer below N/2 in '" + raw + "'");
    return ComplexPeriodicFunction::sample([k](double t) { return std::polar(1.0, k * t); }, n);
  }
  if (starts_with(s, "bump:")) {
    const auto f = tuple_fields(s.substr(5), raw);
    if (f.size() != 2 && f.size() != 4) throw ParseError("bump needs (a,b) or (a,b,pa,pb) in '" + raw + "'");
    std::vector<double> v;
    for (const auto& x : f) v.push_back(parse_number(x, raw));
    try {
      const IntervalArc support(v[0], v[1]);
      const double q = 0.25 * support.length();
      const double pa = f.size() == 4 ? support.lift(v[2]) : v[0] + q;
      const double pb = f.size() == 4 ? pa + (v[3] - v[2]) : v[1] - q;
      return to_complex(make_bump_raw(support, pa, pb, 1.0, n, INFINITY).function());
    } catch (const GeometryError& e) {
      throw ParseError("bad bump '" + raw + "': " + e.what());
    }
  }
  throw ParseError("unknown function spec '" + raw + "' (expected fourier:[...], mono:n, const:c or bump:(a,b))");
}

PeriodicFunction parse_real_scalar(const std::string& spec, std::size_t n) {
  const auto f = parse_scalar(spec, n);
  for (std::size_t k = 0; k < f.size(); ++k)
    if (std::abs(f[k].imag()) > 1e-14) throw ParseError("'" + spec + "' is not real-valued");
  return real_part(f);
}

LoopAlgebraElement parse_algebra(const std::string& raw, std::size_t n) {
  const std::string s = strip(raw);
  if (s.empty()) throw ParseError("empty loop algebra spec");
  // Split at top-level '+' that starts a new "<axis>*" term.
  std::vector<std::string> terms;
  int depth = 0;
  std::string cur;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char ch = s[i];
    if (ch == '(' || ch == '[') ++depth;
    if (ch == ')' || ch == ']') --depth;
    if (ch == '+' && depth == 0 && i + 2 < s.size() && (s[i + 1] == 'x' || s[i + 1] == 'y' || s[i + 1] == 'z') &&
        s[i + 2] == '*') {
      terms.push_back(cur);
      cur.clear();
      continue;
    }
    cur += ch;
  }
  terms.push_back(cur);

  std::array<PeriodicFunction, 3> comp{PeriodicFunction::zero(n), PeriodicFunction::zero(n),
                                       PeriodicFunction::zero(n)};
  for (const auto& t : terms) {
    if (t.size() < 3 || t[1] != '*' || (t[0] != 'x' && t[0] != 'y' && t[0] != 'z'))
      throw ParseError("loop algebra terms look like x*<function>, got '" + t + "'");
    comp[static_cast<std::size_t>(t[0] - 'x')] += parse_real_scalar(t.substr(2), n);
  }
  return LoopAlgebraElement::su2(comp[0], comp[1], comp[2]);
}

LoopElement parse_loop(const std::string& raw, std::size_t n) {
  const std::string s = strip(raw);
  if (s == "identity" || s == "id") return LoopElement::identity(n);
  if (starts_with(s, "exp:")) return exp_loop(parse_algebra(s.substr(4), n));
  throw ParseError("unknown loop spec '" + raw + "' (expected identity or exp:<algebra>)");
}

}  // namespace cfrag
