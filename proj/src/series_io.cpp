#include "selfsim/series_io.hpp"

#include <cctype>

namespace selfsim::adic {
namespace {

[[noreturn]] void fail(std::string_view text, std::size_t pos, const std::string& msg) {
  throw Error(Errc::Syntax, "series literal '" + std::string(text) + "' at column " +
                                std::to_string(pos + 1) + ": " + msg);
}

}  // namespace

std::vector<BigInt> parse_series_literal(std::string_view text) {
  std::vector<BigInt> coeffs(1, 0);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_uint = [&](BigInt& out) {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) return false;
    out = BigInt(std::string(text.substr(start, i - start)));
    return true;
  };

  skip();
  if (i == text.size()) fail(text, i, "empty series");
  bool first = true;
  while (true) {
    skip();
    if (i == text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      fail(text, i, "expected '+' or '-'");
    }
    first = false;

    BigInt c = 1;
    bool have_coeff = read_uint(c);
    skip();
    if (have_coeff && i < text.size() && text[i] == '*') {
      ++i;
      skip();
      if (i == text.size() || text[i] != 'x') fail(text, i, "expected 'x' after '*'");
    }
    int degree = 0;
    if (i < text.size() && text[i] == 'x') {
      ++i;
      degree = 1;
      skip();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip();
        BigInt e;
        if (!read_uint(e)) fail(text, i, "expected exponent after '^'");
        if (e > 4096) fail(text, i, "exponent too large");
        degree = static_cast<int>(e);
      }
    } else if (!have_coeff) {
      fail(text, i, "expected integer or 'x'");
    }
    if (coeffs.size() <= static_cast<std::size_t>(degree)) coeffs.resize(static_cast<std::size_t>(degree) + 1, 0);
    coeffs[static_cast<std::size_t>(degree)] += sign * c;
  }
  while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

std::string format_integer_series(const std::vector<BigInt>& coeffs) {
  std::string out;
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    const BigInt& c = coeffs[d];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (d == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str() + "*";
    out += "x";
    if (d > 1) out += "^" + std::to_string(d);
  }
  return out.empty() ? "0" : out;
}

std::string format_series(const PowerSeries& s) { return format_integer_series(s.balanced()); }

std::string format_quotient(const QuotientElement& e) {
  std::vector<BigInt> c(e.digits.begin(), e.digits.end());
  return format_integer_series(c);
}

nlohmann::json to_json(const PowerSeries& s) {
  const auto& t = s.truncation();
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : s.coefficients()) coeffs.push_back(c.digits());
  return {{"m", t.m}, {"K", t.K}, {"D", t.D}, {"coeffs", coeffs}};
}

PowerSeries series_from_json(const nlohmann::json& j) {
  Truncation t{j.at("m").get<int>(), j.at("K").get<int>(), j.at("D").get<int>()};
  PowerSeries s(t);
  const auto& coeffs = j.at("coeffs");
  if (coeffs.size() != static_cast<std::size_t>(t.D + 1)) {
    throw Error(Errc::InvalidContext, "series JSON must carry exactly D+1 coefficients");
  }
  for (int i = 0; i <= t.D; ++i) {
    auto digits = coeffs.at(static_cast<std::size_t>(i)).get<std::vector<std::uint32_t>>();
    if (digits.size() != static_cast<std::size_t>(t.K)) {
      throw Error(Errc::InvalidContext, "series JSON coefficient must carry exactly K digits");
    }
    s.set(i, MAdicInt::from_digits(t.m, std::move(digits)));
  }
  return s;
}

nlohmann::json to_json(const QuotientElement& e) {
  return {{"m", e.m}, {"digits", e.digits}, {"text", format_quotient(e)}};
}

}  // namespace selfsim::adic
