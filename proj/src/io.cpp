#include "pcopt/io.hpp"

#include "pcopt/error.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace pcopt {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
      ++j;
    if (j > i)
      out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long to_integer(std::string_view token, std::size_t line_no) {
  long value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError("line " + std::to_string(line_no) + ": '" + std::string(token) +
                     "' is not an integer");
  return value;
}

bool is_blank(std::string_view line) { return tokens(line).empty(); }

} // namespace

Graph parse_edge_list(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t cursor = 0;
  while (cursor < lines.size() && is_blank(lines[cursor]))
    ++cursor;
  if (cursor == lines.size())
    throw ParseError("edge list: missing 'n m' header");
  const auto header = tokens(lines[cursor]);
  if (header.size() != 2)
    throw ParseError("edge list: header must be 'n m'");
  const long n = to_integer(header[0], cursor + 1);
  const long m = to_integer(header[1], cursor + 1);
  if (n < 0 || m < 0)
    throw ParseError("edge list: negative vertex or edge count");
  ++cursor;

  std::vector<Edge> edges;
  for (; cursor < lines.size(); ++cursor) {
    const auto fields = tokens(lines[cursor]);
    if (fields.empty())
      continue;
    if (fields.size() != 2)
      throw ParseError("line " + std::to_string(cursor + 1) + ": expected 'u v'");
    const long u = to_integer(fields[0], cursor + 1);
    const long v = to_integer(fields[1], cursor + 1);
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError("line " + std::to_string(cursor + 1) + ": endpoint out of range 0.." +
                       std::to_string(n - 1));
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (static_cast<long>(edges.size()) != m)
    throw ParseError("edge list: header announces " + std::to_string(m) + " edges but " +
                     std::to_string(edges.size()) + " were listed");
  return Graph(static_cast<int>(n), edges);
}

Graph read_edge_list(std::istream &in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_edge_list(buffer.str());
}

std::string format_edge_list(const Graph &g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

void write_edge_list(std::ostream &out, const Graph &g) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (const Edge &e : g.edges())
    out << e.u << ' ' << e.v << '\n';
}

Graph parse_graph6(std::string_view line) {
  constexpr std::string_view header = ">>graph6<<";
  if (line.substr(0, header.size()) == header)
    line.remove_prefix(header.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
    line.remove_suffix(1);
  for (char ch : line)
    if (ch < 63 || ch > 126)
      throw ParseError("graph6: byte outside the printable range 63..126");
  if (line.empty())
    throw ParseError("graph6: empty input");

  std::size_t pos = 0;
  auto take_bits = [&](int chunks) {
    std::uint64_t value = 0;
    for (int i = 0; i < chunks; ++i) {
      if (pos >= line.size())
        throw ParseError("graph6: truncated vertex count");
      value = value << 6 | static_cast<std::uint64_t>(line[pos++] - 63);
    }
    return value;
  };

  std::uint64_t n = 0;
  if (line[0] != 126) {
    n = take_bits(1);
  } else if (line.size() > 1 && line[1] != 126) {
    pos = 1;
    n = take_bits(3);
  } else {
    pos = 2;
    n = take_bits(6);
  }
  if (n > 100000)
    throw ParseError("graph6: vertex count too large");

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t expected = pos + static_cast<std::size_t>((bits + 5) / 6);
  if (line.size() != expected)
    throw ParseError("graph6: expected " + std::to_string(expected) + " bytes, got " +
                     std::to_string(line.size()));

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (Vertex j = 1; j < static_cast<Vertex>(n); ++j)
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = line[pos + static_cast<std::size_t>(k / 6)] - 63;
      if (byte >> (5 - static_cast<int>(k % 6)) & 1)
        edges.push_back({i, j});
    }
  return Graph(static_cast<int>(n), edges);
}

std::string format_graph6(const Graph &g) {
  const auto n = static_cast<std::uint64_t>(g.order());
  std::string out;
  auto put_bits = [&](std::uint64_t value, int chunks) {
    for (int i = chunks - 1; i >= 0; --i)
      out.push_back(static_cast<char>(63 + (value >> (6 * i) & 63)));
  };
  if (n <= 62) {
    put_bits(n, 1);
  } else if (n <= 258047) {
    out.push_back(126);
    put_bits(n, 3);
  } else {
    out.append(2, static_cast<char>(126));
    put_bits(n, 6);
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < g.order(); ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = acc << 1 | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = filled = 0;
      }
    }
  if (filled > 0)
    out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "edgelist" || name == "edge-list")
    return GraphFormat::edge_list;
  if (name == "graph6")
    return GraphFormat::graph6;
  if (name == "auto")
    return GraphFormat::automatic;
  throw ParseError("unknown graph format '" + std::string(name) + "'");
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::automatic) {
    const auto lines = split_lines(text);
    format = GraphFormat::graph6;
    for (auto line : lines) {
      const auto fields = tokens(line);
      if (fields.empty())
        continue;
      const bool numeric = std::isdigit(static_cast<unsigned char>(fields[0][0])) ||
                           fields[0][0] == '-';
      if (numeric)
        format = GraphFormat::edge_list;
      break;
    }
  }
  if (format == GraphFormat::edge_list)
    return parse_edge_list(text);
  for (auto line : split_lines(text))
    if (!is_blank(line))
      return parse_graph6(tokens(line)[0]);
  throw ParseError("graph6: empty input");
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Graph load_graph(const std::string &path, GraphFormat format) {
  return parse_graph(read_file(path), format);
}

EdgeColoring parse_coloring(const Graph &g, std::string_view text) {
  auto c = EdgeColoring::monochromatic(g);
  std::vector<bool> listed(g.edge_count(), false);
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto fields = tokens(lines[i]);
    if (fields.empty())
      continue;
    if (fields.size() != 3)
      throw ParseError("coloring line " + std::to_string(i + 1) + ": expected 'u v c'");
    const long u = to_integer(fields[0], i + 1);
    const long v = to_integer(fields[1], i + 1);
    const long color = to_integer(fields[2], i + 1);
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() ||
        !g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v)))
      throw ParseError("coloring line " + std::to_string(i + 1) + ": (" + std::to_string(u) +
                       "," + std::to_string(v) + ") is not an edge");
    if (color < 0)
      throw ParseError("coloring line " + std::to_string(i + 1) + ": negative color");
    const EdgeId id = g.edge_id(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (listed[id])
      throw ParseError("coloring line " + std::to_string(i + 1) + ": edge listed twice");
    listed[id] = true;
    c[id] = static_cast<Color>(color);
  }
  return c;
}

EdgeColoring load_coloring(const Graph &g, const std::string &path) {
  return parse_coloring(g, read_file(path));
}

std::string format_coloring(const Graph &g, const EdgeColoring &c) {
  std::ostringstream out;
  for (EdgeId id = 0; id < g.edge_count(); ++id)
    out << g.edge(id).u << ' ' << g.edge(id).v << ' ' << c[id] << '\n';
  return out.str();
}

} // namespace pcopt
