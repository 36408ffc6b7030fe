#include "harary/io.hpp"

#include <fstream>
#include <sstream>

#include "harary/error.hpp"

namespace harary {

namespace {

int parse_int(const std::string& tok, int line) {
  size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError("expected integer, got \"" + tok + "\"", line);
  }
  if (pos != tok.size()) throw ParseError("trailing garbage in \"" + tok + "\"", line);
  return v;
}

}  // namespace

Tree parse_tree_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return true;
    }
    return false;
  };

  if (!next_line()) throw ParseError("empty input, expected vertex count", 1);
  const int n = parse_int(line, lineno);
  if (n < 1) throw ParseError("vertex count must be >= 1", lineno);

  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n - 1; ++i) {
    if (!next_line())
      throw ParseError("expected " + std::to_string(n - 1) + " edges, got " +
                           std::to_string(i),
                       lineno + 1);
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a >> b)) throw ParseError("expected \"u v\"", lineno);
    if (ls >> extra) throw ParseError("extra token \"" + extra + "\"", lineno);
    edges.emplace_back(parse_int(a, lineno), parse_int(b, lineno));
  }
  if (next_line()) throw ParseError("unexpected content after last edge", lineno);
  return build_tree(n, std::move(edges));
}

Tree parse_tree_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_tree_text(buf.str());
}

std::string format_edge_list(const Tree& t) {
  std::ostringstream out;
  out << t.n << "\n";
  for (auto [u, v] : t.edges) out << u << " " << v << "\n";
  return out.str();
}

}  // namespace harary
