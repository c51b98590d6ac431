#include "pesol/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace pesol {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw std::runtime_error("line " + std::to_string(line) + ": " + what);
}

struct LineReader {
  std::istream& in;
  int line = 0;

  std::string next() {
    std::string s;
    while (std::getline(in, s)) {
      ++line;
      if (s.find_first_not_of(" \t\r\n") != std::string::npos) return s;
    }
    fail(line, "unexpected end of input");
  }
};

std::vector<int> parse_row(const std::string& s, int expected, int line) {
  std::istringstream iss(s);
  std::vector<int> row;
  int v;
  while (iss >> v) row.push_back(v);
  if (!iss.eof()) fail(line, "expected integers");
  if (expected >= 0 && static_cast<int>(row.size()) != expected)
    fail(line, "expected " + std::to_string(expected) + " entries, got " +
                   std::to_string(row.size()));
  return row;
}

RawTables raw_from_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("json parse error: ") + e.what());
  }
  try {
    if (j.at("format").get<std::string>() != "PESOL" || j.at("version").get<int>() != 1)
      throw std::runtime_error("json: not a PESOL 1 document");
    RawTables t;
    int n = j.at("n").get<int>();
    t.product = j.at("product").get<std::vector<std::vector<int>>>();
    t.theta = j.at("theta").get<std::vector<std::vector<int>>>();
    if (t.size() != n) throw std::runtime_error("json: n does not match the tables");
    validate_raw_tables(t);
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("json: missing or malformed field: ") + e.what());
  }
}

}  // namespace

RawTables read_raw_tables(std::istream& in) {
  // peek for the encoding: PESOL header vs a json object
  int c = in.peek();
  while (c == ' ' || c == '\n' || c == '\r' || c == '\t') {
    in.get();
    c = in.peek();
  }
  if (c == '{') return raw_from_json(in);

  LineReader reader{in};
  std::string header = reader.next();
  {
    std::istringstream iss(header);
    std::string magic;
    int version = 0;
    if (!(iss >> magic >> version) || magic != "PESOL" || version != 1)
      fail(reader.line, "expected header 'PESOL 1'");
  }
  int n = 0;
  {
    std::string size_line = reader.next();
    std::istringstream iss(size_line);
    if (!(iss >> n) || n < 1) fail(reader.line, "expected a positive size");
  }
  RawTables t;
  t.product.reserve(n);
  t.theta.reserve(n);
  for (int i = 0; i < n; ++i) {
    std::string row = reader.next();
    t.product.push_back(parse_row(row, n, reader.line));
  }
  for (int i = 0; i < n; ++i) {
    std::string row = reader.next();
    t.theta.push_back(parse_row(row, n, reader.line));
  }
  validate_raw_tables(t);
  return t;
}

Solution read_solution(std::istream& in) { return Solution(read_raw_tables(in)); }

void write_tables(std::ostream& out, const RawTables& t, Format f) {
  if (f == Format::json) {
    nlohmann::json j;
    j["format"] = "PESOL";
    j["version"] = 1;
    j["n"] = t.size();
    j["product"] = t.product;
    j["theta"] = t.theta;
    out << j.dump(2) << "\n";
    return;
  }
  out << "PESOL 1\n" << t.size() << "\n";
  auto emit = [&](const std::vector<std::vector<int>>& table) {
    for (const auto& row : table) {
      for (size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
      out << "\n";
    }
  };
  emit(t.product);
  emit(t.theta);
}

void write_solution(std::ostream& out, const Solution& s, Format f) {
  write_tables(out, s.tables(), f);
}

Semigroup read_semigroup(std::istream& in) {
  LineReader reader{in};
  int n = 0;
  {
    std::istringstream iss(reader.next());
    if (!(iss >> n) || n < 1) fail(reader.line, "expected a positive size");
  }
  std::vector<std::vector<int>> table;
  table.reserve(n);
  for (int i = 0; i < n; ++i) {
    std::string row = reader.next();
    table.push_back(parse_row(row, n, reader.line));
  }
  return Semigroup(std::move(table));
}

Permutation parse_permutation(const std::string& line) {
  return Permutation(parse_row(line, -1, 0));
}

std::string format_permutation(const Permutation& p) {
  std::string s;
  for (int i = 0; i < p.degree(); ++i) {
    if (i) s += ' ';
    s += std::to_string(p(i));
  }
  return s;
}

namespace {

std::pair<int, int> read_header(LineReader& reader, const GroupTable& g) {
  std::istringstream iss(reader.next());
  int order = 0, x_size = 0;
  if (!(iss >> order >> x_size) || order < 1 || x_size < 1)
    fail(reader.line, "expected header '|G| |X|'");
  if (order != g.order())
    fail(reader.line, "header group order " + std::to_string(order) +
                          " does not match the group (" + std::to_string(g.order()) + ")");
  return {order, x_size};
}

Permutation read_perm_line(LineReader& reader, int degree) {
  std::string row = reader.next();
  return Permutation(parse_row(row, degree, reader.line));
}

}  // namespace

Cocycle read_cocycle(std::istream& in, const GroupTable& g) {
  LineReader reader{in};
  auto [order, x_size] = read_header(reader, g);
  std::vector<std::vector<Permutation>> pi(order);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) pi[a].push_back(read_perm_line(reader, x_size));
  return Cocycle(g, x_size, std::move(pi));
}

SigmaFamily read_sigma(std::istream& in, const GroupTable& g) {
  LineReader reader{in};
  auto [order, x_size] = read_header(reader, g);
  SigmaFamily sf;
  for (int a = 0; a < order; ++a) sf.sigma.push_back(read_perm_line(reader, x_size));
  return sf;
}

}  // namespace pesol
