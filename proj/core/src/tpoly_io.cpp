#include <cctype>
#include <charconv>
#include <string>

#include <nlohmann/json.hpp>

#include "eqrim/error.hpp"
#include "eqrim/tpoly.hpp"

namespace eqrim {

namespace {

std::string variable_name(int index) {
  if (index >= 1) return "t" + std::to_string(index);
  return "t(" + std::to_string(index) + ")";
}

template <typename EmitMonomial>
std::string render(const TPoly& p, EmitMonomial emit, const char* coeff_sep) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Coeff c = t.coeff;
    bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    // magnitude printed via unsigned to survive INT64_MIN
    std::uint64_t mag = negative ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
    std::string mono = emit(t.monomial);
    if (mono.empty()) {
      out += std::to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += std::to_string(mag);
      out += coeff_sep;
      out += mono;
    }
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  TPoly parse() {
    TPoly p = expression();
    skip_space();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse polynomial '" + std::string(s_) + "' at offset " +
                     std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  long long integer() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    long long v = 0;
    const char* b = s_.data() + start;
    const char* e = s_.data() + pos_;
    if (*b == '+') ++b;
    auto [ptr, ec] = std::from_chars(b, e, v);
    if (ec != std::errc{} || ptr != e) {
      pos_ = start;
      fail("expected an integer");
    }
    return v;
  }

  TPoly expression() {
    TPoly acc;
    bool negate = accept('-');
    if (!negate) accept('+');
    TPoly t = term();
    acc = negate ? -t : t;
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  TPoly term() {
    TPoly acc = power();
    while (accept('*')) acc *= power();
    return acc;
  }

  TPoly power() {
    TPoly base = atom();
    if (accept('^')) {
      skip_space();
      if (pos_ < s_.size() && s_[pos_] == '-') fail("negative exponent");
      long long e = integer();
      if (e > 4096) fail("exponent too large");
      TPoly r = 1;
      for (long long i = 0; i < e; ++i) r *= base;
      return r;
    }
    return base;
  }

  TPoly atom() {
    skip_space();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      TPoly inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (c == 't') {
      ++pos_;
      if (accept('(')) {
        long long idx = integer();
        if (!accept(')')) fail("expected ')'");
        return variable(idx);
      }
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        fail("expected a variable index");
      }
      return variable(integer());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return TPoly(integer());
    fail("unexpected character");
  }

  TPoly variable(long long idx) {
    if (idx < Monomial::kMinIndex || idx > Monomial::kMaxIndex) fail("variable index out of range");
    return TPoly::variable(static_cast<int>(idx));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const TPoly& p) {
  return render(p, [](const Monomial& m) {
    std::string out;
    for (std::size_t i = 0; i < m.num_variables(); ++i) {
      if (!out.empty()) out += "*";
      out += variable_name(m.index_at(i));
      if (m.exponent_at(i) != 1) out += "^" + std::to_string(m.exponent_at(i));
    }
    return out;
  }, "*");
}

std::string to_latex(const TPoly& p) {
  return render(p, [](const Monomial& m) {
    std::string out;
    for (std::size_t i = 0; i < m.num_variables(); ++i) {
      if (!out.empty()) out += " ";
      out += "t_{" + std::to_string(m.index_at(i)) + "}";
      if (m.exponent_at(i) != 1) out += "^{" + std::to_string(m.exponent_at(i)) + "}";
    }
    return out;
  }, " ");
}

TPoly parse_tpoly(std::string_view text) { return Parser(text).parse(); }

void to_json(nlohmann::json& j, const TPoly& p) {
  auto terms = nlohmann::json::array();
  for (const auto& t : p.terms()) {
    nlohmann::json e = nlohmann::json::object();
    for (std::size_t i = 0; i < t.monomial.num_variables(); ++i) {
      e[std::to_string(t.monomial.index_at(i))] = t.monomial.exponent_at(i);
    }
    terms.push_back({{"c", t.coeff}, {"e", std::move(e)}});
  }
  j = nlohmann::json{{"terms", std::move(terms)}};
}

void from_json(const nlohmann::json& j, TPoly& p) {
  try {
    std::vector<Term> terms;
    for (const auto& t : j.at("terms")) {
      std::vector<std::pair<int, int>> pairs;
      for (const auto& [key, exp] : t.at("e").items()) {
        int idx = 0;
        auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), idx);
        if (ec != std::errc{} || ptr != key.data() + key.size()) {
          throw ParseError("bad variable index '" + key + "' in polynomial JSON");
        }
        int e = exp.get<int>();
        if (e <= 0) throw ParseError("nonpositive exponent in polynomial JSON");
        pairs.emplace_back(idx, e);
      }
      terms.push_back(Term{Monomial::from_pairs(pairs), t.at("c").get<Coeff>()});
    }
    p = TPoly::from_terms(std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed polynomial JSON: ") + e.what());
  }
}

}  // namespace eqrim
