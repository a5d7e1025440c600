#include "lieavg/serialize.hpp"

#include <cstdio>
#include <stdexcept>

namespace lieavg {

namespace {

const char* kDot = "·";  // '·'

void append_term(std::string& out, bool first, bool negative, const std::string& coef,
                 const std::string& word) {
  if (first) {
    if (negative) out += '-';
  } else {
    out += negative ? " - " : " + ";
  }
  out += coef;
  out += kDot;
  out += '[';
  out += word;
  out += ']';
}

}  // namespace

std::string to_string(const LieSeries& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : a.terms()) {
    append_term(out, first, c.sign() < 0, abs(c).str(), word_to_string(w, a.generators()));
    first = false;
  }
  return out;
}

std::string to_string(const LieSeriesD& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  char buf[64];
  for (const auto& [w, c] : a.terms()) {
    std::snprintf(buf, sizeof buf, "%.12g", c < 0 ? -c : c);
    append_term(out, first, c < 0, buf, word_to_string(w, a.generators()));
    first = false;
  }
  return out;
}

LieSeries lie_series_from_string(std::string_view text, int n, int max_degree) {
  LieSeries out(n, max_degree);
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  skip_ws();
  if (text.substr(pos) == "0") return out;

  bool first = true;
  while (pos < text.size()) {
    skip_ws();
    int sign = 1;
    if (!first) {
      if (text[pos] == '+') {
        ++pos;
      } else if (text[pos] == '-') {
        sign = -1;
        ++pos;
      } else {
        throw std::invalid_argument("lie_series_from_string: expected '+' or '-'");
      }
      skip_ws();
    } else if (text[pos] == '-') {
      sign = -1;
      ++pos;
    }
    size_t dot = text.find(kDot, pos);
    if (dot == std::string_view::npos)
      throw std::invalid_argument("lie_series_from_string: missing coefficient separator");
    Rational c = Rational::parse(text.substr(pos, dot - pos));
    pos = dot + 2;  // U+00B7 is two bytes in UTF-8
    if (pos >= text.size() || text[pos] != '[')
      throw std::invalid_argument("lie_series_from_string: expected '['");
    size_t close = text.find(']', pos);
    if (close == std::string_view::npos)
      throw std::invalid_argument("lie_series_from_string: unterminated word");
    Word w = word_from_string(text.substr(pos + 1, close - pos - 1), n);
    out.add_term(w, sign < 0 ? -c : c);
    pos = close + 1;
    skip_ws();
    first = false;
  }
  return out;
}

nlohmann::json to_json(const LieSeries& a) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [w, c] : a.terms()) {
    terms.push_back({{"word", word_to_string(w, a.generators())},
                     {"num", c.num_str()},
                     {"den", c.den_str()}});
  }
  return {{"n", a.generators()}, {"degree", a.max_degree()}, {"terms", terms}};
}

LieSeries lie_series_from_json(const nlohmann::json& j) {
  const int n = j.at("n").get<int>();
  const int degree = j.at("degree").get<int>();
  LieSeries out(n, degree);
  for (const auto& t : j.at("terms")) {
    Word w = word_from_string(t.at("word").get<std::string>(), n);
    Rational c = Rational::from_parts(t.at("num").get<std::string>(), t.at("den").get<std::string>());
    out.add_term(w, c);
  }
  return out;
}

std::string to_string(const AssocSeries& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    const bool neg = c.sign() < 0;
    if (first) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    out += abs(c).str();
    if (!w.empty()) {
      out += kDot;
      out += '"';
      out += word_to_string(w, p.generators());
      out += '"';
    }
    first = false;
  }
  return out;
}

}  // namespace lieavg
