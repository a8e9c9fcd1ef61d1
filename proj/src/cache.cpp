#include "nsjack/cache.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace nsjack {

namespace {

std::string format_exponents(const Monomial& m) {
  std::string out;
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(m[i]);
  }
  return out;
}

}  // namespace

std::string serialize_table(const JackTable& table) {
  std::ostringstream out;
  out << "NSJACK 1\n";
  out << "N=" << table.nvars() << "\n";
  const Rational a = table.alpha();
  out << "alpha=" << numerator(a) << "/" << denominator(a) << "\n";

  // std::map keys are already in lexicographic order; bucket by weight to get
  // ascending weight first.
  int max_w = 0;
  for (const auto& [eta, poly] : table.entries())
    max_w = std::max(max_w, weight(eta));
  for (int w = 0; w <= max_w; ++w) {
    for (const auto& [eta, poly] : table.entries()) {
      if (weight(eta) != w) continue;
      out << "E " << format_composition(eta) << " :=";
      bool first = true;
      for (auto it = poly.terms().rbegin(); it != poly.terms().rend(); ++it) {
        out << (first ? " " : " ; ") << format_rational(it->second) << " * "
            << format_exponents(it->first);
        first = false;
      }
      out << "\n";
    }
  }
  return out.str();
}

void write_table(const JackTable& table, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << serialize_table(table);
  if (!out) throw std::runtime_error("write failed: " + path);
}

JackTable parse_table(std::istream& in) {
  std::string line;
  auto next_line = [&]() {
    if (!std::getline(in, line))
      throw std::invalid_argument("truncated table cache");
  };
  next_line();
  if (line != "NSJACK 1")
    throw std::invalid_argument("bad cache magic: " + line);
  next_line();
  if (line.rfind("N=", 0) != 0)
    throw std::invalid_argument("expected N= line, got: " + line);
  const int n = std::stoi(line.substr(2));
  if (n <= 0) throw std::invalid_argument("bad N in cache");
  next_line();
  if (line.rfind("alpha=", 0) != 0)
    throw std::invalid_argument("expected alpha= line, got: " + line);
  const Rational alpha = parse_rational(line.substr(6));

  JackTable table(n, alpha);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("E ", 0) != 0)
      throw std::invalid_argument("bad record: " + line);
    const auto sep = line.find(" := ");
    if (sep == std::string::npos)
      throw std::invalid_argument("bad record: " + line);
    const Composition eta = parse_composition(
        std::string_view(line).substr(2, sep - 2));
    if (static_cast<int>(eta.size()) != n)
      throw std::invalid_argument("wrong arity in record: " + line);

    Poly value(n);
    std::string_view rest = std::string_view(line).substr(sep + 4);
    size_t pos = 0;
    while (pos < rest.size()) {
      size_t end = rest.find(" ; ", pos);
      if (end == std::string_view::npos) end = rest.size();
      const std::string_view term = rest.substr(pos, end - pos);
      const auto star = term.find(" * ");
      if (star == std::string_view::npos)
        throw std::invalid_argument("bad term: " + std::string(term));
      const Rational c = parse_rational(term.substr(0, star));
      const Composition expv = parse_composition(term.substr(star + 3));
      if (static_cast<int>(expv.size()) != n)
        throw std::invalid_argument("wrong arity in term: " +
                                    std::string(term));
      value.add_term(Monomial(expv.begin(), expv.end()), c);
      pos = (end == rest.size()) ? end : end + 3;
    }
    table.insert(eta, std::move(value));
  }
  return table;
}

JackTable read_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  return parse_table(in);
}

}  // namespace nsjack
