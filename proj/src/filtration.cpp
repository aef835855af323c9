#include "fastph/filtration.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <unordered_map>

namespace fastph {

namespace {

struct VertexListHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (auto x : v) {
      h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

using IndexMap = std::unordered_map<std::vector<std::uint32_t>, std::size_t, VertexListHash>;

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

Simplex parse_vertices(std::string_view body, std::size_t line) {
  std::vector<std::uint32_t> verts;
  for (auto tok : split_ws(body)) {
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw ParseError("bad vertex id '" + std::string(tok) + "'", line);
    }
    verts.push_back(v);
  }
  if (verts.empty()) throw ParseError("empty simplex", line);
  std::sort(verts.begin(), verts.end());
  if (std::adjacent_find(verts.begin(), verts.end()) != verts.end()) {
    throw ParseError("repeated vertex in simplex", line);
  }
  Simplex s;
  s.vertices = std::move(verts);
  return s;
}

std::size_t line_of(const std::vector<std::size_t>* lines, std::size_t k) {
  return lines ? (*lines)[k] : k + 1;
}

}  // namespace

Simplex::Simplex(std::vector<std::uint32_t> v) : vertices(std::move(v)) {
  if (vertices.empty()) throw ParseError("empty simplex", 0);
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
    throw ParseError("repeated vertex in simplex", 0);
  }
}

std::string to_string(const Simplex& s) {
  std::string out;
  for (std::size_t i = 0; i < s.vertices.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(s.vertices[i]);
  }
  return out;
}

Filtration parse_filtration(std::string_view text) {
  std::vector<LeveledSimplex> leveled;
  std::vector<Simplex> plain;
  std::vector<std::size_t> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.rfind("level", 0) == 0) {
      const auto colon = line.find(':');
      if (colon == std::string_view::npos) throw ParseError("level line without ':'", line_no);
      const auto value = trim(line.substr(5, colon - 5));
      double level = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), level);
      if (value.empty() || ec != std::errc() || ptr != value.data() + value.size() ||
          !std::isfinite(level)) {
        throw ParseError("bad level '" + std::string(value) + "'", line_no);
      }
      leveled.push_back({parse_vertices(line.substr(colon + 1), line_no), level, line_no});
    } else {
      plain.push_back(parse_vertices(line, line_no));
      lines.push_back(line_no);
    }
    if (!leveled.empty() && !plain.empty()) {
      throw ParseError("leveled and plain simplex lines cannot be mixed", line_no);
    }
  }
  if (!leveled.empty()) return extend_partial_order(std::move(leveled));
  Filtration f;
  f.simplices = std::move(plain);
  validate_filtration(f, &lines);
  return f;
}

Filtration extend_partial_order(std::vector<LeveledSimplex> simplices) {
  IndexMap level_of;
  for (std::size_t k = 0; k < simplices.size(); ++k) {
    if (!level_of.emplace(simplices[k].simplex.vertices, k).second) {
      throw DuplicateSimplex("duplicate simplex {" + to_string(simplices[k].simplex) + "}",
                             simplices[k].line);
    }
  }
  for (const auto& s : simplices) {
    const auto& v = s.simplex.vertices;
    if (v.size() < 2) continue;
    for (std::size_t i = 0; i < v.size(); ++i) {
      std::vector<std::uint32_t> face(v);
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      auto it = level_of.find(face);
      if (it == level_of.end()) {
        throw MissingFace("face {" + to_string(Simplex(face)) + "} of {" + to_string(s.simplex) +
                              "} is missing",
                          s.line);
      }
      if (simplices[it->second].level > s.level) {
        throw InvalidLevels("face {" + to_string(Simplex(face)) + "} has a larger level than {" +
                                to_string(s.simplex) + "}",
                            s.line);
      }
    }
  }
  std::stable_sort(simplices.begin(), simplices.end(),
                   [](const LeveledSimplex& a, const LeveledSimplex& b) {
                     if (a.level != b.level) return a.level < b.level;
                     if (a.simplex.dim() != b.simplex.dim()) return a.simplex.dim() < b.simplex.dim();
                     return a.simplex.vertices < b.simplex.vertices;
                   });
  Filtration f;
  std::vector<double> levels;
  f.simplices.reserve(simplices.size());
  levels.reserve(simplices.size());
  for (auto& s : simplices) {
    f.simplices.push_back(std::move(s.simplex));
    levels.push_back(s.level);
  }
  f.levels = std::move(levels);
  return f;
}

void validate_filtration(const Filtration& f, const std::vector<std::size_t>* lines) {
  IndexMap index;
  for (std::size_t k = 0; k < f.size(); ++k) {
    const auto& v = f.simplices[k].vertices;
    if (v.size() >= 2) {
      for (std::size_t i = 0; i < v.size(); ++i) {
        std::vector<std::uint32_t> face(v);
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        if (!index.count(face)) {
          throw MissingFace("face {" + to_string(Simplex(face)) + "} of {" +
                                to_string(f.simplices[k]) + "} does not appear earlier",
                            line_of(lines, k));
        }
      }
    }
    if (!index.emplace(v, k).second) {
      throw DuplicateSimplex("duplicate simplex {" + to_string(f.simplices[k]) + "}",
                             line_of(lines, k));
    }
  }
}

std::string serialize_filtration(const Filtration& f) {
  std::ostringstream os;
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (f.levels) {
      char buf[64];
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, (*f.levels)[k]);
      os << "level " << std::string_view(buf, static_cast<std::size_t>(ptr - buf)) << " : ";
    }
    os << to_string(f.simplices[k]) << '\n';
  }
  return os.str();
}

BoundaryMatrix boundary_matrix(const Filtration& f, const FieldContext& ctx) {
  const std::size_t n = f.size();
  BoundaryMatrix d{DenseMatrix(n, n, ctx), n, std::vector<int>(n)};
  IndexMap index;
  index.reserve(n);
  for (std::size_t k = 0; k < n; ++k) index.emplace(f.simplices[k].vertices, k);
  for (std::size_t j = 0; j < n; ++j) {
    const auto& v = f.simplices[j].vertices;
    d.dims[j] = f.simplices[j].dim();
    if (v.size() < 2) continue;
    for (std::size_t i = 0; i < v.size(); ++i) {
      std::vector<std::uint32_t> face(v);
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      const auto it = index.find(face);
      if (it == index.end()) {
        throw MissingFace("face {" + to_string(Simplex(face)) + "} not in filtration", 0);
      }
      d.matrix(it->second, j) = i % 2 == 0 ? ctx.one() : ctx.neg(ctx.one());
    }
  }
  return d;
}

DenseMatrix antitranspose(const DenseMatrix& a) {
  if (!a.square()) throw DimensionMismatch("anti-transpose needs a square matrix");
  const std::size_t n = a.rows();
  DenseMatrix out(n, n, a.ctx());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = a(n - 1 - j, n - 1 - i);
  }
  return out;
}

BoundaryMatrix antitranspose(const BoundaryMatrix& d) {
  std::vector<int> dims(d.dims.rbegin(), d.dims.rend());
  return {antitranspose(d.matrix), d.n, std::move(dims)};
}

}  // namespace fastph
