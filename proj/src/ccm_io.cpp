#include "cohere/ccm_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace cohere {
namespace {

// Splits the text into integer tokens, dropping comments.
std::vector<long long> tokenize(std::string_view text) {
  std::vector<long long> out;
  std::size_t line = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (ch == '#') {
      while (i < text.size() && text[i] != '\n')
        ++i;
      continue;
    }
    if (ch == '\n') {
      ++line;
      ++i;
      continue;
    }
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\r' &&
           text[i] != '\n' && text[i] != '#')
      ++i;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + i, value);
    if (ec != std::errc() || ptr != text.data() + i)
      throw ParseError("line " + std::to_string(line) + ": bad integer '" +
                       std::string(text.substr(start, i - start)) + "'");
    out.push_back(value);
  }
  return out;
}

}  // namespace

ColorMatrix parse_ccm(std::string_view text) {
  std::vector<long long> tok = tokenize(text);
  if (tok.size() < 2)
    throw ParseError("missing 'n r' header");
  long long n = tok[0], r = tok[1];
  if (n < 1)
    throw ParseError("vertex count must be positive");
  if (r < 1 || static_cast<unsigned long long>(r) > kMaxRank)
    throw ParseError("rank out of range");
  const std::size_t cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  if (tok.size() - 2 != cells)
    throw ParseError("expected " + std::to_string(cells) + " cells, found " +
                     std::to_string(tok.size() - 2));
  ColorMatrix::Storage storage(n, n);
  for (std::size_t idx = 0; idx < cells; ++idx) {
    long long c = tok[idx + 2];
    if (c < 0 || c >= r)
      throw ParseError("cell " + std::to_string(idx / n) + "," + std::to_string(idx % n) +
                       " has color " + std::to_string(c) + " outside [0," +
                       std::to_string(r - 1) + "]");
    storage.data()[idx] = static_cast<Color>(c);
  }
  ColorMatrix m;
  try {
    m = ColorMatrix(std::move(storage));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
  if (m.rank() != static_cast<std::size_t>(r))
    throw ParseError("declared rank " + std::to_string(r) + " but " + std::to_string(m.rank()) +
                     " colors occur");
  return m;
}

ColorMatrix read_ccm(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ccm(buf.str());
}

ColorMatrix load_ccm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ParseError("cannot open " + path);
  return read_ccm(in);
}

std::string format_ccm(const ColorMatrix& m) {
  std::string out;
  const std::size_t n = m.size();
  out.reserve(n * n * 3 + 16);
  out += std::to_string(n);
  out += ' ';
  out += std::to_string(m.rank());
  out += '\n';
  for (std::size_t u = 0; u < n; ++u) {
    auto row = m.row(static_cast<Vertex>(u));
    for (std::size_t v = 0; v < n; ++v) {
      if (v)
        out += ' ';
      out += std::to_string(row[v]);
    }
    out += '\n';
  }
  return out;
}

void write_ccm(std::ostream& out, const ColorMatrix& m) { out << format_ccm(m); }

void save_ccm(const std::string& path, const ColorMatrix& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw ParseError("cannot write " + path);
  write_ccm(out, m);
}

}  // namespace cohere
