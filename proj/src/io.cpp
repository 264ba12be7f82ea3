#include "pmx/io.hpp"

#include <charconv>
#include <sstream>

#include "pmx/errors.hpp"

namespace pmx {

namespace {

struct Line {
  std::string_view text;
  int number;
};

// Content lines only: `#` comments and blank lines dropped.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    bool blank = line.find_first_not_of(" \t") == std::string_view::npos;
    if (!blank && line[line.find_first_not_of(" \t")] != '#')
      out.push_back({line, number});
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

std::vector<int64_t> parse_ints(const Line& ln) {
  std::vector<int64_t> vals;
  const char* p = ln.text.data();
  const char* end = p + ln.text.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == '\t')) ++p;
    if (p == end) break;
    int64_t v = 0;
    auto [next, ec] = std::from_chars(p, end, v);
    if (ec != std::errc() || (next < end && *next != ' ' && *next != '\t'))
      throw ParseError(ln.number, "expected integer token");
    vals.push_back(v);
    p = next;
  }
  return vals;
}

}  // namespace

PolyMat parse_pmat(std::string_view text) {
  std::vector<Line> lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, "empty matrix file");

  std::vector<int64_t> header = parse_ints(lines[0]);
  if (header.size() != 3)
    throw ParseError(lines[0].number, "header must be `p m n`");
  int64_t p = header[0], m = header[1], n = header[2];
  if (p < 2 || p >= (1ll << 31))
    throw ParseError(lines[0].number, "modulus out of range [2, 2^31)");
  if (!Fp::is_prime((uint32_t)p))
    throw ParseError(lines[0].number, "modulus is not prime");
  if (m < 1 || n < 1)
    throw ParseError(lines[0].number, "dimensions must be positive");

  if ((int64_t)lines.size() - 1 != m * n) {
    int at = lines.size() > 1 ? lines.back().number : lines[0].number;
    throw ParseError(at, "expected " + std::to_string(m * n) +
                             " entry lines, found " +
                             std::to_string(lines.size() - 1));
  }

  Fp field((uint32_t)p);
  PolyMat a(field, (size_t)m, (size_t)n);
  for (int64_t e = 0; e < m * n; ++e) {
    const Line& ln = lines[1 + e];
    std::vector<int64_t> coeffs = parse_ints(ln);
    if (coeffs.empty()) throw ParseError(ln.number, "empty entry");
    std::vector<uint32_t> c;
    c.reserve(coeffs.size());
    for (int64_t v : coeffs) {
      if (v < 0 || v >= p)
        throw ParseError(ln.number, "coefficient not in [0, p)");
      c.push_back((uint32_t)v);
    }
    a.at((size_t)(e / n), (size_t)(e % n)) = Poly(field, std::move(c));
  }
  return a;
}

std::string format_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  for (int i = 0; i <= p.deg(); ++i) {
    if (i) os << ' ';
    os << p.coeff(i);
  }
  return os.str();
}

std::string format_pmat(const PolyMat& a) {
  std::ostringstream os;
  os << a.field().modulus() << ' ' << a.rows() << ' ' << a.cols() << '\n';
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j)
      os << format_poly(a.at(i, j)) << '\n';
  return os.str();
}

Shift parse_shift(std::string_view text) {
  Shift s;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(
        pos, comma == std::string_view::npos ? text.size() - pos : comma - pos);
    int v = 0;
    auto [next, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || next != tok.data() + tok.size())
      throw ParseError(1, "bad shift entry");
    s.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return s;
}

}  // namespace pmx
