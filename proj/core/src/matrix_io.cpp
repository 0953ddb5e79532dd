#include "masseyx/matrix_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "masseyx/error.hpp"

namespace masseyx {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::uint64_t parse_uint(std::string_view tok, std::string_view what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("expected a non-negative integer for " + std::string(what) + ", got '" + std::string(tok) + "'");
  }
  return v;
}

bool next_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (!tokens(line).empty()) return true;
  }
  return false;
}

}  // namespace

Field parse_field_header(std::string_view line) {
  const auto tok = tokens(line);
  if (tok.size() < 3 || tok[0] != "field") throw ParseError("expected 'field p e [c0 ... ce]'");
  const auto p = static_cast<std::uint32_t>(parse_uint(tok[1], "p"));
  const auto e = static_cast<std::uint32_t>(parse_uint(tok[2], "e"));
  if (e == 1) {
    if (tok.size() != 3) throw ParseError("prime field header takes no modulus");
    return make_field(p, 1);
  }
  if (tok.size() != static_cast<std::size_t>(e) + 4) throw ParseError("field header needs e+1 modulus coefficients");
  std::vector<Elem> modulus;
  for (std::size_t i = 3; i < tok.size(); ++i) modulus.push_back(static_cast<Elem>(parse_uint(tok[i], "modulus")));
  return make_field(p, e, modulus);
}

std::string field_header(const FieldSpec& f) { return f.header(); }

LinearCode read_code(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_line(in, line, lineno)) throw ParseError("empty code file");
  Field field = parse_field_header(line);
  if (!next_line(in, line, lineno)) throw ParseError("missing 'code N k' line");
  const auto head = tokens(line);
  if (head.size() != 3 || head[0] != "code") throw ParseError("expected 'code N k' on line " + std::to_string(lineno));
  const std::size_t n = parse_uint(head[1], "N");
  const std::size_t k = parse_uint(head[2], "k");
  Matrix g(0, n);
  std::vector<Elem> row;
  for (std::size_t r = 0; r < k; ++r) {
    if (!next_line(in, line, lineno)) throw ParseError("expected " + std::to_string(k) + " generator rows");
    const auto tok = tokens(line);
    if (tok.size() != n) {
      throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(n) + " entries");
    }
    row.clear();
    for (auto t : tok) row.push_back(static_cast<Elem>(parse_uint(t, "matrix entry")));
    g.append_row(row);
  }
  if (next_line(in, line, lineno)) throw ParseError("trailing content after generator rows");
  return LinearCode(std::move(field), std::move(g));
}

void write_code(std::ostream& out, const LinearCode& c) {
  out << c.gf().header() << '\n' << "code " << c.length() << ' ' << c.dimension() << '\n';
  for (std::size_t r = 0; r < c.dimension(); ++r) {
    const auto row = c.generator().row(r);
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << '\n';
  }
}

LinearCode load_code_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open code file " + path.string());
  try {
    return read_code(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void save_code_file(const std::filesystem::path& path, const LinearCode& c) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write code file " + path.string());
  write_code(out, c);
}

std::string to_string(const LinearCode& c) {
  std::ostringstream os;
  write_code(os, c);
  return os.str();
}

LinearCode code_from_string(std::string_view text) {
  std::istringstream is{std::string(text)};
  return read_code(is);
}

}  // namespace masseyx
