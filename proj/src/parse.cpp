#include "aqp/parse.hpp"

#include <array>
#include <cctype>
#include <map>

namespace aqp {
namespace {

constexpr std::string_view kAlphabet = "qQLMK";
constexpr int kNumVars = 5;
constexpr int kMaxPower = 4096;

using Mono = std::array<int, kNumVars>;
using Terms = std::map<Mono, Integer>;

Terms multiply(const Terms& a, const Terms& b) {
  Terms out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Mono e;
      for (int i = 0; i < kNumVars; ++i) e[i] = ea[i] + eb[i];
      auto& slot = out[e];
      slot += ca * cb;
      if (slot == 0) out.erase(e);
    }
  return out;
}

void accumulate(Terms& into, const Terms& t, bool negate) {
  for (const auto& [e, c] : t) {
    auto& slot = into[e];
    slot += negate ? Integer(-c) : c;
    if (slot == 0) into.erase(e);
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Terms parse() {
    Terms t = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" +
                                   std::string(1, text_[pos_]) + "'");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, pos_);
  }
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool at_atom_start() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' ||
           kAlphabet.find(c) != std::string_view::npos;
  }

  Terms expr() {
    Terms acc;
    bool negate = false;
    if (peek('+') || peek('-')) negate = text_[pos_++] == '-';
    accumulate(acc, term(), negate);
    while (peek('+') || peek('-')) {
      negate = text_[pos_++] == '-';
      accumulate(acc, term(), negate);
    }
    return acc;
  }

  Terms term() {
    Terms acc = factor();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc = multiply(acc, factor());
      } else if (at_atom_start()) {
        acc = multiply(acc, factor());
      } else {
        return acc;
      }
    }
  }

  Terms factor() {
    skip_ws();
    std::size_t start = pos_;
    int var = -1;
    Terms base = atom(var);
    if (!peek('^')) return base;
    ++pos_;
    skip_ws();
    bool neg = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    skip_ws();
    std::size_t digits_at = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (digits_at == pos_) fail("expected exponent");
    std::string digits(text_.substr(digits_at, pos_ - digits_at));
    if (digits.size() > 6 || std::stoi(digits) > kMaxPower)
      throw ParseError("exponent too large", digits_at);
    int k = std::stoi(digits);
    if (neg) {
      if (var < 0)
        throw ParseError("negative exponent on a non-variable", start);
      k = -k;
    }
    if (var >= 0) {
      Mono e{};
      e[var] = k;
      return Terms{{e, Integer(1)}};
    }
    Terms result{{Mono{}, Integer(1)}};
    for (int i = 0; i < k; ++i) result = multiply(result, base);
    return result;
  }

  Terms atom(int& var) {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Terms inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      Integer value(std::string(text_.substr(start, pos_ - start)));
      if (value == 0) return {};
      return Terms{{Mono{}, value}};
    }
    auto idx = kAlphabet.find(c);
    if (idx == std::string_view::npos) fail("unexpected character '" + std::string(1, c) + "'");
    ++pos_;
    var = static_cast<int>(idx);
    Mono e{};
    e[var] = 1;
    return Terms{{e, Integer(1)}};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Maps the parsed alphabet onto polynomial variable slots; a -1 slot means
// the variable is not allowed.
template <int N>
Poly<N> to_poly(const Terms& terms, const std::array<int, kNumVars>& slot,
                std::string_view what) {
  std::vector<typename Poly<N>::Term> raw;
  for (const auto& [e, c] : terms) {
    typename Poly<N>::Exponents f{};
    for (int i = 0; i < kNumVars; ++i) {
      if (e[i] == 0) continue;
      if (slot[i] < 0)
        throw ParseError(std::string("variable '") + kAlphabet[i] +
                             "' not allowed in " + std::string(what),
                         0);
      if (e[i] < 0)
        throw ParseError(std::string("negative exponent not allowed in ") +
                             std::string(what),
                         0);
      f[slot[i]] = e[i];
    }
    raw.push_back({Poly<N>::pack(f), c});
  }
  return Poly<N>::from_terms(std::move(raw));
}

// Shifts all exponents up so that none is negative; returns the shift.
Mono clear_negative(Terms& terms) {
  Mono low{};
  for (const auto& [e, c] : terms)
    for (int i = 0; i < kNumVars; ++i) low[i] = std::min(low[i], e[i]);
  Terms shifted;
  for (const auto& [e, c] : terms) {
    Mono f;
    for (int i = 0; i < kNumVars; ++i) f[i] = e[i] - low[i];
    shifted[f] = c;
  }
  terms = std::move(shifted);
  return low;
}

template <int N>
RationalFunction<N> to_ratfun(std::string_view num, std::string_view den,
                              const std::array<int, kNumVars>& slot,
                              std::string_view what) {
  Terms n = Parser(num).parse();
  Terms d = Parser(den).parse();
  if (d.empty()) throw ParseError("zero denominator", 0);
  Mono ln = clear_negative(n);
  Mono ld = clear_negative(d);
  // num * x^ln / (den * x^ld): move the monomial to whichever side keeps
  // exponents nonnegative.
  Mono up{}, down{};
  for (int i = 0; i < kNumVars; ++i) {
    int net = ln[i] - ld[i];
    if (net > 0) up[i] = net; else down[i] = -net;
  }
  n = multiply(n, Terms{{up, Integer(1)}});
  d = multiply(d, Terms{{down, Integer(1)}});
  return RationalFunction<N>(to_poly<N>(n, slot, what), to_poly<N>(d, slot, what));
}

constexpr std::array<int, kNumVars> kBiSlots{kq, kQ, -1, -1, -1};
constexpr std::array<int, kNumVars> kTriSlots{kq, kQ, -1, -1, kKv};
constexpr std::array<int, kNumVars> kCharSlots{-1, -1, CharPoly::kL,
                                               CharPoly::kM, -1};

}  // namespace

BiPoly parse_bipoly(std::string_view text) {
  return to_poly<2>(Parser(text).parse(), kBiSlots, "a (q,Q) polynomial");
}

TriPoly parse_tripoly(std::string_view text) {
  return to_poly<3>(Parser(text).parse(), kTriSlots, "a (q,Q,K) polynomial");
}

CharPoly parse_charpoly(std::string_view text) {
  return CharPoly{
      to_poly<2>(Parser(text).parse(), kCharSlots, "an (L,M) polynomial")};
}

LaurentPoly parse_laurent(std::string_view text) {
  std::vector<LaurentPoly::Term> raw;
  for (const auto& [e, c] : Parser(text).parse()) {
    for (int i = 1; i < kNumVars; ++i)
      if (e[i] != 0)
        throw ParseError(std::string("variable '") + kAlphabet[i] +
                             "' not allowed in a Laurent polynomial in q",
                         0);
    raw.push_back({e[0], Rational(c)});
  }
  return LaurentPoly::from_terms(std::move(raw));
}

RatFun parse_ratfun(std::string_view num, std::string_view den) {
  return to_ratfun<2>(num, den, kBiSlots, "a (q,Q) rational function");
}

RatFun3 parse_ratfun3(std::string_view num, std::string_view den) {
  return to_ratfun<3>(num, den, kTriSlots, "a (q,Q,K) rational function");
}

}  // namespace aqp
