#include "pair014/dimacs.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace pair014 {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long to_int(std::string_view tok, std::size_t line_no) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw Error("dimacs line " + std::to_string(line_no) + ": malformed integer '" +
                std::string(tok) + "'");
  return value;
}

}  // namespace

Graph parse_dimacs(std::string_view text, std::vector<std::string>* warnings) {
  long long n = -1;
  long long declared_m = 0;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    const auto tok = split_ws(line);
    if (tok.empty() || tok[0] == "c") continue;
    const std::string where = "dimacs line " + std::to_string(line_no) + ": ";
    if (tok[0] == "p") {
      if (n >= 0) throw Error(where + "duplicate problem line");
      if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col" && tok[1] != "edges"))
        throw Error(where + "expected 'p edge <n> <m>'");
      n = to_int(tok[2], line_no);
      declared_m = to_int(tok[3], line_no);
      if (n < 0 || declared_m < 0) throw Error(where + "negative size");
    } else if (tok[0] == "e") {
      if (n < 0) throw Error(where + "edge before problem line");
      if (tok.size() != 3) throw Error(where + "expected 'e <u> <v>'");
      const long long u = to_int(tok[1], line_no);
      const long long v = to_int(tok[2], line_no);
      if (u < 1 || u > n || v < 1 || v > n)
        throw Error(where + "vertex index out of range [1," + std::to_string(n) + "]");
      if (u == v) throw Error(where + "self-loop on vertex " + std::to_string(u));
      edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
    } else {
      throw Error(where + "unrecognised line type '" + std::string(tok[0]) + "'");
    }
    if (end == text.size()) break;
  }
  if (n < 0) throw Error("dimacs: missing 'p edge' line");

  Graph g(static_cast<int>(n), edges);
  if (warnings && static_cast<long long>(g.edge_count()) != declared_m) {
    warnings->push_back("dimacs: declared " + std::to_string(declared_m) + " edges, read " +
                        std::to_string(g.edge_count()) + " distinct");
  }
  return g;
}

Graph read_dimacs_file(const std::filesystem::path& path, std::vector<std::string>* warnings) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_dimacs(buf.str(), warnings);
}

std::string write_dimacs(const Graph& g) {
  std::ostringstream os;
  os << "p edge " << g.n() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) os << "e " << u + 1 << ' ' << v + 1 << '\n';
  return os.str();
}

}  // namespace pair014
