#include "sqfree/matrix_file.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "sqfree/errors.hpp"

namespace sqfree {

namespace {

template <typename T>
bool parse_integer(const std::string& token, T& out) {
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc() && ptr == end;
}

class LineError {
 public:
  LineError(const std::string& source, std::size_t line) : prefix_(source + ":" + std::to_string(line) + ": ") {}
  [[noreturn]] void fail(const std::string& message) const { throw InputError(prefix_ + message); }

 private:
  std::string prefix_;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

MatrixFile parse_matrix_file(std::istream& in, const std::string& source) {
  MatrixFile file;
  bool have_size = false;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const LineError err(source, lineno);
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::vector<std::string> tok;
    for (std::string w; words >> w;) tok.push_back(w);
    if (tok.empty()) continue;
    const std::string& key = tok[0];
    if (key == "n") {
      if (file.n != 0) err.fail("duplicate 'n' line");
      if (tok.size() != 2 || !parse_integer(tok[1], file.n)) err.fail("expected 'n <count>'");
      if (file.n < 1 || file.n > kMaxVariables)
        err.fail("variable count must be between 1 and " + std::to_string(kMaxVariables));
    } else if (key == "vars") {
      if (file.n == 0) err.fail("'vars' before 'n'");
      if (!file.vars.empty()) err.fail("duplicate 'vars' line");
      if (tok.size() != static_cast<std::size_t>(file.n) + 1)
        err.fail("expected " + std::to_string(file.n) + " variable names");
      file.vars.assign(tok.begin() + 1, tok.end());
      if (std::set<std::string>(file.vars.begin(), file.vars.end()).size() != file.vars.size())
        err.fail("variable names must be distinct");
    } else if (key == "size") {
      if (file.n == 0) err.fail("'size' before 'n'");
      if (have_size) err.fail("duplicate 'size' line");
      if (tok.size() != 3 || !parse_integer(tok[1], file.s) || !parse_integer(tok[2], file.l))
        err.fail("expected 'size <s> <l>'");
      if (file.s == 0 || file.l == 0) err.fail("matrix dimensions must be positive");
      have_size = true;
    } else if (key == "entry") {
      if (!have_size) err.fail("'entry' before 'size'");
      if (tok.size() != static_cast<std::size_t>(file.n) + 4)
        err.fail("expected 'entry <i> <j> <coefficient>' followed by " + std::to_string(file.n) + " exponents");
      FileEntry e{0, 0, Rational(0), ExponentVector(file.n)};
      if (!parse_integer(tok[1], e.row) || !parse_integer(tok[2], e.col)) err.fail("malformed entry position");
      if (e.row < 1 || e.row > file.s || e.col < 1 || e.col > file.l)
        err.fail("entry (" + tok[1] + "," + tok[2] + ") outside a " + std::to_string(file.s) + "x" +
                 std::to_string(file.l) + " matrix");
      if (!seen.emplace(e.row, e.col).second) err.fail("duplicate entry (" + tok[1] + "," + tok[2] + ")");
      try {
        e.coefficient = Rational::parse(tok[3]);
      } catch (const InputError& ex) {
        err.fail(ex.what());
      }
      if (e.coefficient.is_zero()) err.fail("coefficient must be nonzero");
      for (int k = 1; k <= file.n; ++k) {
        const std::string& t = tok[static_cast<std::size_t>(k) + 3];
        if (!parse_integer(t, e.exponent[k])) err.fail("malformed exponent '" + t + "'");
        if (e.exponent[k] < 0) err.fail("negative exponent " + t);
      }
      file.entries.push_back(std::move(e));
    } else {
      err.fail("unknown keyword '" + key + "'");
    }
  }
  if (file.n == 0) throw InputError(source + ": missing 'n' line");
  if (!have_size) throw InputError(source + ": missing 'size' line");
  return file;
}

MatrixFile load_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return parse_matrix_file(in, path.string());
}

std::string serialize(const MatrixFile& file) {
  std::ostringstream out;
  out << "n " << file.n << '\n';
  if (!file.vars.empty()) {
    out << "vars";
    for (const auto& v : file.vars) out << ' ' << v;
    out << '\n';
  }
  out << "size " << file.s << ' ' << file.l << '\n';
  for (const auto& e : file.entries) {
    out << "entry " << e.row << ' ' << e.col << ' ' << e.coefficient.to_string() << ' ';
    for (int k = 1; k <= file.n; ++k) out << ' ' << e.exponent[k];
    out << '\n';
  }
  return out.str();
}

MultigradedMatrix to_matrix(const MatrixFile& file) {
  MultigradedMatrix m(file.n, file.s, file.l);
  for (const auto& e : file.entries) m.set(e.row - 1, e.col - 1, e.coefficient, e.exponent);
  return m;
}

MatrixFile from_matrix(const MultigradedMatrix& matrix, std::vector<std::string> vars) {
  MatrixFile file;
  file.n = matrix.n();
  file.vars = std::move(vars);
  file.s = matrix.rows();
  file.l = matrix.cols();
  for (std::size_t i = 0; i < matrix.rows(); ++i)
    for (std::size_t j = 0; j < matrix.cols(); ++j)
      if (const auto& e = matrix.at(i, j)) file.entries.push_back({i + 1, j + 1, e->coefficient, e->exponent});
  return file;
}

ExponentVector parse_degree(const std::string& text, int n) {
  const auto parts = split(text, ',');
  if (parts.size() != static_cast<std::size_t>(n))
    throw InputError("degree '" + text + "' needs " + std::to_string(n) + " comma-separated integers");
  ExponentVector a(n);
  for (int k = 1; k <= n; ++k)
    if (!parse_integer(parts[static_cast<std::size_t>(k - 1)], a[k]))
      throw InputError("malformed degree coordinate '" + parts[static_cast<std::size_t>(k - 1)] + "'");
  return a;
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
  std::vector<std::size_t> out;
  for (const auto& part : split(text, ',')) {
    std::size_t v = 0;
    if (!parse_integer(part, v) || v == 0) throw InputError("malformed index '" + part + "' in '" + text + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace sqfree
