#include "fano/qform.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace fano {

Rat LinForm::eval(const std::vector<Rat>& x) const {
  if (x.size() != c.size()) throw std::invalid_argument("point dimension mismatch");
  Rat acc(0);
  for (size_t i = 0; i < c.size(); ++i) acc += c[i] * x[i];
  acc.canonicalize();
  return acc;
}

bool LinForm::zero() const {
  for (auto& v : c)
    if (sgn(v) != 0) return false;
  return true;
}

std::string LinForm::pretty(const std::vector<std::string>& names) const {
  std::string s;
  for (size_t i = 0; i < c.size(); ++i) {
    if (sgn(c[i]) == 0) continue;
    if (!s.empty()) s += " + ";
    if (c[i] == 1)
      s += names[i];
    else
      s += rat_str(c[i]) + "*" + names[i];
  }
  return s.empty() ? "0" : s;
}

Rat QuadForm::eval(const std::vector<Rat>& x) const {
  if (x.size() != a.size()) throw std::invalid_argument("point dimension mismatch");
  Rat acc(0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j) acc += a[i][j] * x[i] * x[j];
  acc.canonicalize();
  return acc;
}

void QuadForm::add_coeff(size_t i, size_t j, const Rat& c) {
  if (i >= n() || j >= n()) throw std::invalid_argument("index out of range");
  Rat half = c / 2;
  if (i == j) {
    a[i][i] += c;
  } else {
    a[i][j] += half;
    a[j][i] += half;
  }
}

QuadForm operator+(const QuadForm& p, const QuadForm& q) {
  if (p.n() != q.n()) throw std::invalid_argument("form dimension mismatch");
  QuadForm r = p;
  for (size_t i = 0; i < r.n(); ++i)
    for (size_t j = 0; j < r.n(); ++j) r.a[i][j] += q.a[i][j];
  return r;
}

QuadForm operator-(const QuadForm& p, const QuadForm& q) { return p + q.scaled(Rat(-1)); }

QuadForm QuadForm::scaled(const Rat& k) const {
  QuadForm r = *this;
  for (auto& row : r.a)
    for (auto& v : row) {
      v *= k;
      v.canonicalize();
    }
  return r;
}

QuadForm QuadForm::square(const LinForm& l) { return product(l, l); }

QuadForm QuadForm::product(const LinForm& l, const LinForm& m) {
  if (l.n() != m.n()) throw std::invalid_argument("form dimension mismatch");
  QuadForm r(l.n());
  for (size_t i = 0; i < l.n(); ++i)
    for (size_t j = 0; j < l.n(); ++j) {
      r.a[i][j] = (l.c[i] * m.c[j] + l.c[j] * m.c[i]) / 2;
      r.a[i][j].canonicalize();
    }
  return r;
}

bool operator==(const QuadForm& p, const QuadForm& q) {
  if (p.n() != q.n()) return false;
  for (size_t i = 0; i < p.n(); ++i)
    for (size_t j = 0; j < p.n(); ++j)
      if (p.a[i][j] != q.a[i][j]) return false;
  return true;
}

std::string QuadForm::pretty(const std::vector<std::string>& names) const {
  std::string s;
  for (size_t i = 0; i < n(); ++i) {
    for (size_t j = i; j < n(); ++j) {
      Rat c = i == j ? a[i][i] : a[i][j] * 2;
      c.canonicalize();
      if (sgn(c) == 0) continue;
      if (!s.empty()) s += " + ";
      std::string mono = i == j ? names[i] + "^2" : names[i] + "*" + names[j];
      if (c == 1)
        s += mono;
      else
        s += rat_str(c) + "*" + mono;
    }
  }
  return s.empty() ? "0" : s;
}

bool ConeRegion::contains(const std::vector<Rat>& x) const {
  for (auto& v : x)
    if (sgn(v) < 0) return false;
  for (auto& g : constraints)
    if (sgn(g.eval(x)) < 0) return false;
  return true;
}

namespace {

// parse a linear side like "2 p0 + Su" against known variable names
LinForm parse_linear_side(const std::string& text, const std::vector<std::string>& names) {
  LinForm l(names.size());
  std::string cleaned;
  for (char ch : text) cleaned += (ch == '*' ? ' ' : ch);
  std::istringstream ss(cleaned);
  std::string tok;
  Rat pending(1);
  bool have_pending = false;
  auto var_index = [&](const std::string& v) -> int {
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == v) return static_cast<int>(i);
    return -1;
  };
  while (ss >> tok) {
    if (tok == "+") {
      continue;
    }
    int idx = var_index(tok);
    if (idx >= 0) {
      l.c[idx] += have_pending ? pending : Rat(1);
      pending = 1;
      have_pending = false;
    } else {
      pending = rat_parse(tok);
      have_pending = true;
    }
  }
  if (have_pending) throw std::runtime_error("dangling coefficient in constraint: " + text);
  return l;
}

QuadForm parse_triples(const std::vector<std::string>& lines, size_t n) {
  QuadForm q(n);
  for (auto& raw : lines) {
    std::string cleaned;
    for (char ch : raw) cleaned += (ch == '(' || ch == ')' || ch == ',') ? ' ' : ch;
    std::istringstream ss(cleaned);
    long i, j;
    std::string c;
    if (!(ss >> i >> j >> c)) throw std::runtime_error("bad coefficient triple: " + raw);
    q.add_coeff(static_cast<size_t>(i), static_cast<size_t>(j), rat_parse(c));
  }
  return q;
}

}  // namespace

QuadraticRatioClaim claim_read(std::istream& in) {
  QuadraticRatioClaim claim;
  std::string line;
  std::vector<std::string> n_lines, d_lines;
  int section = 0;  // 0 header/constraints, 1 = N, 2 = D
  bool have_vars = false, have_bound = false;
  while (std::getline(in, line)) {
    std::string body = line.substr(0, line.find('#'));
    std::string trimmed;
    for (char c : body)
      if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (trimmed.empty()) continue;
    if (trimmed == "N:") {
      section = 1;
      continue;
    }
    if (trimmed == "D:") {
      section = 2;
      continue;
    }
    if (trimmed.rfind("bound:", 0) == 0) {
      claim.bound = rat_parse(trimmed.substr(6));
      have_bound = true;
      section = 0;
      continue;
    }
    if (trimmed.rfind("strict:", 0) == 0) {
      std::string v = trimmed.substr(7);
      if (v == "yes")
        claim.strict = true;
      else if (v == "no")
        claim.strict = false;
      else
        throw std::runtime_error("strict must be yes or no");
      section = 0;
      continue;
    }
    if (section == 1) {
      n_lines.push_back(body);
      continue;
    }
    if (section == 2) {
      d_lines.push_back(body);
      continue;
    }
    if (!have_vars) {
      std::istringstream vs(body);
      std::string v;
      while (vs >> v) claim.region.names.push_back(v);
      if (claim.region.names.empty()) throw std::runtime_error("empty variables line");
      have_vars = true;
      continue;
    }
    auto le = body.find("<=");
    if (le == std::string::npos) throw std::runtime_error("constraint needs '<=': " + body);
    LinForm lhs = parse_linear_side(body.substr(0, le), claim.region.names);
    LinForm rhs = parse_linear_side(body.substr(le + 2), claim.region.names);
    LinForm g(claim.region.n());
    for (size_t i = 0; i < g.n(); ++i) g.c[i] = rhs.c[i] - lhs.c[i];
    claim.region.constraints.push_back(g);
  }
  if (!have_vars || !have_bound) throw std::runtime_error("claim file missing variables or bound");
  claim.num = parse_triples(n_lines, claim.region.n());
  claim.den = parse_triples(d_lines, claim.region.n());
  return claim;
}

void claim_write(std::ostream& out, const QuadraticRatioClaim& claim) {
  for (size_t i = 0; i < claim.region.names.size(); ++i)
    out << (i ? " " : "") << claim.region.names[i];
  out << "\n";
  for (auto& g : claim.region.constraints) {
    // emit as 0 <= g
    out << "0 " << "<= " << g.pretty(claim.region.names) << "\n";
  }
  auto dump = [&](const QuadForm& q) {
    for (size_t i = 0; i < q.n(); ++i)
      for (size_t j = i; j < q.n(); ++j) {
        Rat c = i == j ? q.a[i][i] : q.a[i][j] * 2;
        c.canonicalize();
        if (sgn(c) != 0) out << i << ' ' << j << ' ' << rat_str(c) << "\n";
      }
  };
  out << "N:\n";
  dump(claim.num);
  out << "D:\n";
  dump(claim.den);
  out << "bound: " << rat_str(claim.bound) << "\n";
  out << "strict: " << (claim.strict ? "yes" : "no") << "\n";
}

std::optional<AffineSolution> solve_affine(std::vector<std::vector<Rat>> A, std::vector<Rat> b) {
  const size_t rows = A.size();
  if (rows != b.size()) throw std::invalid_argument("system shape mismatch");
  const size_t cols = rows ? A[0].size() : 0;
  std::vector<size_t> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && sgn(A[piv][c]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(A[piv], A[r]);
    std::swap(b[piv], b[r]);
    Rat inv_p = Rat(1) / A[r][c];
    for (size_t j = c; j < cols; ++j) {
      A[r][j] *= inv_p;
      A[r][j].canonicalize();
    }
    b[r] *= inv_p;
    b[r].canonicalize();
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(A[i][c]) == 0) continue;
      Rat f = A[i][c];
      for (size_t j = c; j < cols; ++j) {
        A[i][j] -= f * A[r][j];
        A[i][j].canonicalize();
      }
      b[i] -= f * b[r];
      b[i].canonicalize();
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (size_t i = r; i < rows; ++i)
    if (sgn(b[i]) != 0) return std::nullopt;

  AffineSolution sol;
  sol.particular.assign(cols, Rat(0));
  std::vector<char> is_pivot(cols, 0);
  for (size_t k = 0; k < pivot_col.size(); ++k) {
    sol.particular[pivot_col[k]] = b[k];
    is_pivot[pivot_col[k]] = 1;
  }
  for (size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[c] = 1;
    for (size_t k = 0; k < pivot_col.size(); ++k) {
      v[pivot_col[k]] = -A[k][c];
      v[pivot_col[k]].canonicalize();
    }
    sol.kernel.push_back(std::move(v));
  }
  return sol;
}

std::optional<std::vector<Rat>> solve_unique(std::vector<std::vector<Rat>> A, std::vector<Rat> b) {
  auto sol = solve_affine(std::move(A), std::move(b));
  if (!sol || !sol->kernel.empty()) return std::nullopt;
  return sol->particular;
}

std::vector<long long> integer_ray(const std::vector<Rat>& x) {
  Int l(1);
  for (auto& v : x) {
    Int den = v.get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    l = l / g * den;
  }
  std::vector<Int> scaled;
  Int g(0);
  for (auto& v : x) {
    Int t = v.get_num() * (l / v.get_den());
    Int ag = abs(t);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ag.get_mpz_t());
    scaled.push_back(t);
  }
  if (g == 0) g = 1;
  std::vector<long long> out;
  for (auto& t : scaled) {
    Int v = t / g;
    if (!v.fits_slong_p()) throw std::runtime_error("ray coordinates too large");
    out.push_back(v.get_si());
  }
  return out;
}

}  // namespace fano
