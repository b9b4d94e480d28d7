#include <charconv>
#include <string>

#include "cohere/generators.hpp"

namespace cohere {
namespace {

// Splits text into lines with '#' comments stripped; each line into unsigned
// integer tokens.
std::vector<std::vector<std::uint64_t>> tokenize(std::string_view text) {
  std::vector<std::vector<std::uint64_t>> lines;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    std::vector<std::uint64_t> row;
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r'))
        ++pos;
      if (pos == line.size())
        break;
      std::uint64_t value = 0;
      auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
      if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' &&
                                *ptr != '\t' && *ptr != '\r'))
        throw ParseError("line " + std::to_string(line_no) + ": expected a nonnegative integer");
      pos = static_cast<std::size_t>(ptr - line.data());
      row.push_back(value);
    }
    if (!row.empty())
      lines.push_back(std::move(row));
  }
  return lines;
}

}  // namespace

GraphInput parse_edge_list(std::string_view text) {
  auto lines = tokenize(text);
  std::vector<std::uint64_t> tokens;
  for (auto& l : lines)
    tokens.insert(tokens.end(), l.begin(), l.end());
  if (tokens.empty())
    throw ParseError("edge list: missing vertex count");
  if (tokens[0] == 0 || tokens[0] > 1000000)
    throw ParseError("edge list: vertex count out of range");
  if ((tokens.size() - 1) % 2 != 0)
    throw ParseError("edge list: odd number of endpoint tokens");
  GraphInput g;
  g.n = tokens[0];
  for (std::size_t t = 1; t < tokens.size(); t += 2) {
    if (tokens[t] >= g.n || tokens[t + 1] >= g.n)
      throw ParseError("edge list: endpoint out of range");
    g.edges.push_back({static_cast<Vertex>(tokens[t]), static_cast<Vertex>(tokens[t + 1])});
  }
  try {
    g.validate();
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("edge list: ") + e.what());
  }
  return g;
}

PermutationList parse_permutations(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty())
    throw ParseError("permutation list: no generators");
  PermutationList perms;
  perms.degree = lines[0].size();
  for (auto& l : lines) {
    if (l.size() != perms.degree)
      throw ParseError("permutation list: generators of different degree");
    for (auto x : l)
      if (x >= perms.degree)
        throw ParseError("permutation list: image out of range");
    perms.generators.emplace_back(l.begin(), l.end());
  }
  try {
    perms.validate();
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("permutation list: ") + e.what());
  }
  return perms;
}

}  // namespace cohere
