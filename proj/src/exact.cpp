#include "lfc/exact.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <utility>

namespace lfc {

// ---------------------------------------------------------------------------
// Vector helpers

Vec zeros(std::size_t n) { return Vec(n, Scalar(0)); }

Vec unit(std::size_t n, std::size_t i) {
  Vec v = zeros(n);
  v[i] = 1;
  return v;
}

Scalar dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: dimension mismatch");
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  }
  return s;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("add: dimension mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("sub: dimension mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scale(const Vec& a, const Scalar& s) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

Vec neg(const Vec& a) { return scale(a, Scalar(-1)); }

bool is_zero(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](const Scalar& s) { return sgn(s) == 0; });
}

namespace {

Integer lcm_of_denominators(const Vec& a) {
  Integer l = 1;
  for (const auto& x : a) {
    if (x.get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  }
  return l;
}

Integer gcd_of(const IntVec& a) {
  Integer g = 0;
  for (const auto& x : a) {
    if (sgn(x) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(IntVec& a) {
  Integer g = gcd_of(a);
  if (g > 1) {
    for (auto& x : a) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

}  // namespace

IntVec primitive(const Vec& a) {
  Integer l = lcm_of_denominators(a);
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Scalar t = a[i] * l;
    r[i] = t.get_num();
  }
  make_primitive(r);
  return r;
}

Vec to_vec(const IntVec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = Scalar(a[i]);
  return r;
}

IntVec to_intvec(const Vec& a) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].get_den() != 1) throw Error("to_intvec: non-integral entry");
    r[i] = a[i].get_num();
  }
  return r;
}

std::string to_string(const Scalar& s) {
  Scalar c = s;
  c.canonicalize();
  return c.get_str();
}

std::string to_string(const Vec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << to_string(v[i]);
  }
  os << ')';
  return os.str();
}

Scalar parse_scalar(const std::string& text, bool strict) {
  auto bad = [&] { return Error("invalid rational \"" + text + "\""); };
  if (text.empty()) throw bad();
  auto slash = text.find('/');
  auto valid_int = [](const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) throw bad();
  if (num[0] == '+') num = num.substr(1);
  Integer n(num), d(den);
  if (d == 0) throw bad();
  Scalar q(n, d);
  q.canonicalize();
  if (strict) {
    // lowest terms, no redundant "/1", no leading zeros, no "-0"
    if (q.get_str() != text) throw Error("rational \"" + text + "\" is not in canonical lowest-terms form");
  }
  return q;
}

// ---------------------------------------------------------------------------
// LinearSystem

LinearSystem& LinearSystem::ge(Vec normal, Scalar offset) {
  inequalities.push_back({std::move(normal), std::move(offset)});
  return *this;
}

LinearSystem& LinearSystem::le(Vec normal, Scalar offset) {
  inequalities.push_back({neg(normal), -offset});
  return *this;
}

LinearSystem& LinearSystem::eq(Vec normal, Scalar offset) {
  equalities.push_back({std::move(normal), std::move(offset)});
  return *this;
}

LinearSystem& LinearSystem::append(const LinearSystem& other) {
  if (other.dim != dim) throw DimensionMismatch("append: dimension mismatch");
  inequalities.insert(inequalities.end(), other.inequalities.begin(), other.inequalities.end());
  equalities.insert(equalities.end(), other.equalities.begin(), other.equalities.end());
  return *this;
}

void LinearSystem::check() const {
  for (const auto& r : inequalities)
    if (r.normal.size() != dim) throw DimensionMismatch("inequality normal has wrong dimension");
  for (const auto& r : equalities)
    if (r.normal.size() != dim) throw DimensionMismatch("equality normal has wrong dimension");
}

bool LinearSystem::satisfied_by(const Vec& w) const {
  for (const auto& r : inequalities)
    if (dot(r.normal, w) < r.offset) return false;
  for (const auto& r : equalities)
    if (dot(r.normal, w) != r.offset) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Simplex (dense tableau, Bland's rule, two phases)

namespace {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), t_(rows * (cols + 1)) {}

  Scalar& at(std::size_t r, std::size_t c) { return t_[r * (cols_ + 1) + c]; }
  Scalar& rhs(std::size_t r) { return t_[r * (cols_ + 1) + cols_]; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void pivot(std::size_t pr, std::size_t pc, Vec& obj, Scalar& obj_val) {
    Scalar inv = 1 / at(pr, pc);
    for (std::size_t c = 0; c <= cols_; ++c) {
      Scalar& x = t_[pr * (cols_ + 1) + c];
      if (sgn(x) != 0) x *= inv;
    }
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == pr) continue;
      Scalar f = at(r, pc);
      if (sgn(f) == 0) continue;
      for (std::size_t c = 0; c <= cols_; ++c) {
        const Scalar& p = t_[pr * (cols_ + 1) + c];
        if (sgn(p) != 0) t_[r * (cols_ + 1) + c] -= f * p;
      }
    }
    Scalar f = obj[pc];
    if (sgn(f) != 0) {
      for (std::size_t c = 0; c < cols_; ++c) {
        const Scalar& p = at(pr, c);
        if (sgn(p) != 0) obj[c] -= f * p;
      }
      obj_val -= f * rhs(pr);
    }
    basis[pr] = pc;
  }

  void remove_row(std::size_t r) {
    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r * (cols_ + 1)),
             t_.begin() + static_cast<std::ptrdiff_t>((r + 1) * (cols_ + 1)));
    basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(r));
    --rows_;
  }

  std::vector<std::size_t> basis;

 private:
  std::size_t rows_, cols_;
  std::vector<Scalar> t_;
};

enum class Outcome { kOptimal, kUnbounded };

// Minimizes with reduced-cost row `obj` (objective value tracked as -obj_val
// convention: obj_val holds -z). Columns with allowed[c] == false never enter.
Outcome run_simplex(Tableau& t, Vec& obj, Scalar& obj_val, const std::vector<bool>& allowed) {
  for (;;) {
    std::size_t enter = t.cols();
    for (std::size_t c = 0; c < t.cols(); ++c) {
      if (allowed[c] && sgn(obj[c]) < 0) {
        enter = c;
        break;
      }
    }
    if (enter == t.cols()) return Outcome::kOptimal;
    std::size_t leave = t.rows();
    Scalar best;
    for (std::size_t r = 0; r < t.rows(); ++r) {
      if (sgn(t.at(r, enter)) <= 0) continue;
      Scalar ratio = t.rhs(r) / t.at(r, enter);
      if (leave == t.rows() || ratio < best || (ratio == best && t.basis[r] < t.basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == t.rows()) return Outcome::kUnbounded;
    t.pivot(leave, enter, obj, obj_val);
  }
}

LpResult simplex(const LinearSystem& sys, const Vec* objective) {
  sys.check();
  const std::size_t n = sys.dim;
  const std::size_t mi = sys.inequalities.size();
  const std::size_t m = mi + sys.equalities.size();
  // columns: x+ [0,n), x- [n,2n), slack [2n, 2n+mi), artificial [2n+mi, 2n+mi+m)
  const std::size_t art0 = 2 * n + mi;
  const std::size_t cols = art0 + m;
  Tableau t(m, cols);
  t.basis.resize(m);
  for (std::size_t r = 0; r < m; ++r) {
    const Row& row = r < mi ? sys.inequalities[r] : sys.equalities[r - mi];
    int sign = sgn(row.offset) < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(row.normal[j]) == 0) continue;
      t.at(r, j) = sign > 0 ? row.normal[j] : Scalar(-row.normal[j]);
      t.at(r, n + j) = -t.at(r, j);
    }
    if (r < mi) t.at(r, 2 * n + r) = -sign;
    t.at(r, art0 + r) = 1;
    t.rhs(r) = sign > 0 ? row.offset : Scalar(-row.offset);
    t.basis[r] = art0 + r;
  }
  // phase 1
  Vec obj = zeros(cols);
  Scalar obj_val = 0;  // holds -(current objective)
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < art0; ++c)
      if (sgn(t.at(r, c)) != 0) obj[c] -= t.at(r, c);
    obj_val -= t.rhs(r);
  }
  std::vector<bool> allowed(cols, true);
  run_simplex(t, obj, obj_val, allowed);
  LpResult res;
  if (sgn(obj_val) != 0) {
    res.status = LpResult::Status::kInfeasible;
    return res;
  }
  // drive artificials out of the basis
  for (std::size_t r = 0; r < t.rows();) {
    if (t.basis[r] >= art0) {
      std::size_t c = 0;
      while (c < art0 && sgn(t.at(r, c)) == 0) ++c;
      if (c == art0) {
        t.remove_row(r);
        continue;
      }
      t.pivot(r, c, obj, obj_val);
    }
    ++r;
  }
  for (std::size_t c = art0; c < cols; ++c) allowed[c] = false;
  auto extract = [&]() {
    Vec x = zeros(n);
    for (std::size_t r = 0; r < t.rows(); ++r) {
      std::size_t b = t.basis[r];
      if (b < n) x[b] += t.rhs(r);
      else if (b < 2 * n) x[b - n] -= t.rhs(r);
    }
    return x;
  };
  if (!objective) {
    res.status = LpResult::Status::kOptimal;
    res.witness = extract();
    res.value = 0;
    return res;
  }
  // phase 2
  Vec cost = zeros(cols);
  for (std::size_t j = 0; j < n; ++j) {
    cost[j] = (*objective)[j];
    cost[n + j] = -(*objective)[j];
  }
  obj = cost;
  obj_val = 0;
  for (std::size_t r = 0; r < t.rows(); ++r) {
    const Scalar& cb = cost[t.basis[r]];
    if (sgn(cb) == 0) continue;
    for (std::size_t c = 0; c < cols; ++c)
      if (sgn(t.at(r, c)) != 0) obj[c] -= cb * t.at(r, c);
    obj_val -= cb * t.rhs(r);
  }
  if (run_simplex(t, obj, obj_val, allowed) == Outcome::kUnbounded) {
    res.status = LpResult::Status::kUnbounded;
    return res;
  }
  res.status = LpResult::Status::kOptimal;
  res.witness = extract();
  res.value = dot(*objective, res.witness);
  return res;
}

}  // namespace

bool lp_feasible(const LinearSystem& sys) { return simplex(sys, nullptr).optimal(); }

LpResult lp_minimize(const LinearSystem& sys, const Vec& objective) {
  if (objective.size() != sys.dim) throw DimensionMismatch("lp_minimize: objective dimension mismatch");
  return simplex(sys, &objective);
}

std::optional<Vec> lp_point(const LinearSystem& sys) {
  auto r = simplex(sys, nullptr);
  if (!r.optimal()) return std::nullopt;
  return r.witness;
}

// ---------------------------------------------------------------------------
// Linear algebra

std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[row], m[p]);
    Scalar inv = 1 / m[row][c];
    for (auto& x : m[row])
      if (sgn(x) != 0) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || sgn(m[r][c]) == 0) continue;
      Scalar f = m[r][c];
      for (std::size_t k = 0; k < cols; ++k)
        if (sgn(m[row][k]) != 0) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  m.resize(row);
  return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

Matrix nullspace(const Matrix& m, std::size_t cols) {
  Matrix a = m;
  auto piv = rref(a);
  std::vector<bool> is_piv(cols, false);
  for (auto p : piv) is_piv[p] = true;
  Matrix basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    Vec v = zeros(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& rhs) {
  if (m.empty()) return std::nullopt;
  const std::size_t cols = m[0].size();
  Matrix a;
  for (std::size_t r = 0; r < m.size(); ++r) {
    Vec row = m[r];
    row.push_back(rhs[r]);
    a.push_back(std::move(row));
  }
  auto piv = rref(a);
  if (!piv.empty() && piv.back() == cols) return std::nullopt;
  Vec x = zeros(cols);
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = a[r][cols];
  return x;
}

namespace {

// Integer row Hermite normal form (echelon, positive pivots, entries above
// pivots reduced into [0, pivot)). Zero rows dropped.
std::vector<IntVec> row_hnf(std::vector<IntVec> rows, std::size_t cols) {
  std::size_t r0 = 0;
  std::vector<std::size_t> pivcols;
  for (std::size_t c = 0; c < cols && r0 < rows.size(); ++c) {
    for (;;) {
      // find row >= r0 with smallest nonzero |entry| in column c
      std::size_t best = rows.size();
      for (std::size_t r = r0; r < rows.size(); ++r) {
        if (sgn(rows[r][c]) == 0) continue;
        if (best == rows.size() || abs(rows[r][c]) < abs(rows[best][c])) best = r;
      }
      if (best == rows.size()) break;
      std::swap(rows[r0], rows[best]);
      if (sgn(rows[r0][c]) < 0)
        for (auto& x : rows[r0]) x = -x;
      bool done = true;
      for (std::size_t r = r0 + 1; r < rows.size(); ++r) {
        if (sgn(rows[r][c]) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[r][c].get_mpz_t(), rows[r0][c].get_mpz_t());
        for (std::size_t k = 0; k < cols; ++k) rows[r][k] -= q * rows[r0][k];
        if (sgn(rows[r][c]) != 0) done = false;
      }
      if (done) {
        pivcols.push_back(c);
        ++r0;
        break;
      }
    }
  }
  rows.resize(r0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::size_t c = pivcols[i];
    for (std::size_t r = 0; r < i; ++r) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[r][c].get_mpz_t(), rows[i][c].get_mpz_t());
      if (sgn(q) != 0)
        for (std::size_t k = 0; k < cols; ++k) rows[r][k] -= q * rows[i][k];
    }
  }
  return rows;
}

}  // namespace

std::vector<IntVec> integer_kernel(const Matrix& m, std::size_t cols) {
  // column operations A U = [H | 0]; kernel = trailing columns of U
  std::vector<IntVec> a;
  for (const auto& row : m) a.push_back(primitive(row.empty() ? Vec{} : row));
  for (auto& row : a)
    if (row.size() != cols) row.assign(cols, 0);
  std::vector<IntVec> u(cols, IntVec(cols, 0));  // u[col] is column vector
  for (std::size_t i = 0; i < cols; ++i) u[i][i] = 1;
  std::size_t c = 0;
  for (std::size_t r = 0; r < a.size() && c < cols; ++r) {
    auto colop = [&](std::size_t dst, std::size_t src, const Integer& f) {
      // column dst -= f * column src
      for (auto& row : a) row[dst] -= f * row[src];
      for (std::size_t k = 0; k < cols; ++k) u[dst][k] -= f * u[src][k];
    };
    auto swapcol = [&](std::size_t x, std::size_t y) {
      for (auto& row : a) std::swap(row[x], row[y]);
      std::swap(u[x], u[y]);
    };
    for (;;) {
      std::size_t best = cols;
      for (std::size_t j = c; j < cols; ++j) {
        if (sgn(a[r][j]) == 0) continue;
        if (best == cols || abs(a[r][j]) < abs(a[r][best])) best = j;
      }
      if (best == cols) break;
      swapcol(c, best);
      bool done = true;
      for (std::size_t j = c + 1; j < cols; ++j) {
        if (sgn(a[r][j]) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[r][j].get_mpz_t(), a[r][c].get_mpz_t());
        colop(j, c, q);
        if (sgn(a[r][j]) != 0) done = false;
      }
      if (done) {
        ++c;
        break;
      }
    }
  }
  std::vector<IntVec> kernel(u.begin() + static_cast<std::ptrdiff_t>(c), u.end());
  return row_hnf(std::move(kernel), cols);
}

// ---------------------------------------------------------------------------
// Double description (integer arithmetic on a homogeneous cone)

namespace {

using Bits = std::vector<std::uint64_t>;

struct DDRay {
  IntVec v;
  Bits zero;  // constraints (processed so far) tight on v
};

Integer idot(const IntVec& a, const IntVec& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

IntVec combine(const Integer& fa, const IntVec& a, const Integer& fb, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = fa * a[i] + fb * b[i];
  make_primitive(r);
  return r;
}

void set_bit(Bits& b, std::size_t k) { b[k / 64] |= (std::uint64_t{1} << (k % 64)); }

bool subset(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if ((a[i] & ~b[i]) != 0) return false;
  return true;
}

std::size_t popcount(const Bits& b) {
  std::size_t n = 0;
  for (auto w : b) n += static_cast<std::size_t>(__builtin_popcountll(w));
  return n;
}

struct HomogeneousConstraint {
  IntVec a;
  bool equality;
};

struct ConeGenerators {
  std::vector<IntVec> rays;
  std::vector<IntVec> lineality;
};

ConeGenerators double_description(std::size_t dim, const std::vector<HomogeneousConstraint>& cons) {
  const std::size_t words = (cons.size() + 63) / 64 + 1;
  std::vector<IntVec> lin;
  for (std::size_t i = 0; i < dim; ++i) {
    IntVec e(dim, 0);
    e[i] = 1;
    lin.push_back(std::move(e));
  }
  std::vector<DDRay> rays;
  for (std::size_t k = 0; k < cons.size(); ++k) {
    const IntVec& a = cons[k].a;
    const bool is_eq = cons[k].equality;
    std::size_t p = lin.size();
    Integer ap;
    for (std::size_t i = 0; i < lin.size(); ++i) {
      ap = idot(a, lin[i]);
      if (sgn(ap) != 0) {
        p = i;
        break;
      }
    }
    if (p < lin.size()) {
      IntVec lp = lin[p];
      if (sgn(ap) < 0) {
        for (auto& x : lp) x = -x;
        ap = -ap;
      }
      std::vector<IntVec> nlin;
      for (std::size_t i = 0; i < lin.size(); ++i) {
        if (i == p) continue;
        Integer ai = idot(a, lin[i]);
        if (sgn(ai) == 0) nlin.push_back(lin[i]);
        else nlin.push_back(combine(ap, lin[i], -ai, lp));
      }
      for (auto& r : rays) {
        Integer ar = idot(a, r.v);
        if (sgn(ar) != 0) r.v = combine(ap, r.v, -ar, lp);
        set_bit(r.zero, k);
      }
      if (!is_eq) {
        DDRay nr{lp, Bits(words, 0)};
        for (std::size_t j = 0; j < k; ++j) set_bit(nr.zero, j);
        rays.push_back(std::move(nr));
      }
      lin = std::move(nlin);
      continue;
    }
    std::vector<std::size_t> pos, negs;
    std::vector<Integer> val(rays.size());
    std::vector<DDRay> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = idot(a, rays[i].v);
      int s = sgn(val[i]);
      if (s > 0) pos.push_back(i);
      else if (s < 0) negs.push_back(i);
      else {
        DDRay r = rays[i];
        set_bit(r.zero, k);
        next.push_back(std::move(r));
      }
    }
    if (!is_eq)
      for (auto i : pos) next.push_back(rays[i]);
    const std::size_t need = dim >= lin.size() + 2 ? dim - lin.size() - 2 : 0;
    for (auto ip : pos) {
      for (auto in : negs) {
        Bits z(words);
        for (std::size_t w = 0; w < words; ++w) z[w] = rays[ip].zero[w] & rays[in].zero[w];
        if (popcount(z) < need) continue;
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o) {
          if (o == ip || o == in) continue;
          if (subset(z, rays[o].zero)) adjacent = false;
        }
        if (!adjacent) continue;
        DDRay nr{combine(val[ip], rays[in].v, -val[in], rays[ip].v), std::move(z)};
        set_bit(nr.zero, k);
        next.push_back(std::move(nr));
      }
    }
    rays = std::move(next);
  }
  ConeGenerators out;
  for (auto& r : rays) out.rays.push_back(std::move(r.v));
  out.lineality = std::move(lin);
  return out;
}

bool lex_less(const Vec& a, const Vec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Orthogonal projection onto the complement of span(basis).
Vec reduce_mod(const Vec& v, const Matrix& basis) {
  if (basis.empty()) return v;
  const std::size_t k = basis.size();
  Matrix gram(k, zeros(k));
  Vec rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) gram[i][j] = dot(basis[i], basis[j]);
    rhs[i] = dot(basis[i], v);
  }
  auto coef = solve(gram, rhs);
  Vec r = v;
  for (std::size_t i = 0; i < k; ++i)
    if (sgn((*coef)[i]) != 0) r = sub(r, scale(basis[i], (*coef)[i]));
  return r;
}

Matrix canonical_lineality(const std::vector<Vec>& lin) {
  Matrix m = lin;
  rref(m);
  Matrix out;
  for (auto& row : m) out.push_back(to_vec(primitive(row)));
  return out;
}

IntVec integer_row(const Vec& a) {
  // positive scaling of a rational vector to a primitive integer vector
  if (is_zero(a)) return IntVec(a.size(), 0);
  return primitive(a);
}

}  // namespace

void canonicalize(Generators& g) {
  g.lineality = canonical_lineality(g.lineality);
  for (auto& v : g.vertices) v = reduce_mod(v, g.lineality);
  std::vector<Vec> rays;
  for (auto& r : g.rays) {
    Vec rr = reduce_mod(r, g.lineality);
    if (!is_zero(rr)) rays.push_back(to_vec(primitive(rr)));
  }
  g.rays = std::move(rays);
  std::sort(g.vertices.begin(), g.vertices.end(), lex_less);
  g.vertices.erase(std::unique(g.vertices.begin(), g.vertices.end()), g.vertices.end());
  std::sort(g.rays.begin(), g.rays.end(), lex_less);
  g.rays.erase(std::unique(g.rays.begin(), g.rays.end()), g.rays.end());
}

Generators dual_description(const LinearSystem& sys) {
  sys.check();
  const std::size_t n = sys.dim;
  std::vector<HomogeneousConstraint> cons;
  auto homog = [&](const Row& r, bool eq) {
    Vec h = r.normal;
    h.push_back(-r.offset);
    if (is_zero(h)) return;
    cons.push_back({integer_row(h), eq});
  };
  for (const auto& r : sys.equalities) homog(r, true);
  {
    IntVec t(n + 1, 0);
    t[n] = 1;
    cons.push_back({t, false});
  }
  for (const auto& r : sys.inequalities) homog(r, false);
  auto cg = double_description(n + 1, cons);
  Generators g;
  g.dim = n;
  for (const auto& l : cg.lineality) {
    Vec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = Scalar(l[i]);
    g.lineality.push_back(std::move(x));
  }
  for (const auto& r : cg.rays) {
    Vec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = Scalar(r[i]);
    if (sgn(r[n]) > 0) {
      g.vertices.push_back(scale(x, Scalar(1) / Scalar(r[n])));
    } else {
      g.rays.push_back(std::move(x));
    }
  }
  if (g.vertices.empty()) {
    g.rays.clear();
    g.lineality.clear();
    return g;
  }
  canonicalize(g);
  return g;
}

LinearSystem primal_description(const Generators& gens) {
  const std::size_t n = gens.dim;
  if (gens.vertices.empty()) throw EmptyPolyhedron();
  std::vector<HomogeneousConstraint> cons;
  for (const auto& l : gens.lineality) {
    Vec h = l;
    h.push_back(0);
    if (!is_zero(h)) cons.push_back({integer_row(h), true});
  }
  for (const auto& v : gens.vertices) {
    Vec h = v;
    h.push_back(1);
    cons.push_back({integer_row(h), false});
  }
  for (const auto& r : gens.rays) {
    Vec h = r;
    h.push_back(0);
    if (!is_zero(h)) cons.push_back({integer_row(h), false});
  }
  auto cg = double_description(n + 1, cons);
  // equalities: rows [a | offset] meaning a·x = offset, offset = -β
  Matrix eqm;
  for (const auto& l : cg.lineality) {
    Vec row(n + 1);
    for (std::size_t i = 0; i < n; ++i) row[i] = Scalar(l[i]);
    row[n] = Scalar(-l[n]);
    eqm.push_back(std::move(row));
  }
  auto piv = rref(eqm);
  LinearSystem out(n);
  std::vector<Row> ineqs;
  for (const auto& r : cg.rays) {
    Vec row(n + 1);
    for (std::size_t i = 0; i < n; ++i) row[i] = Scalar(r[i]);
    row[n] = Scalar(-r[n]);
    for (std::size_t e = 0; e < piv.size(); ++e) {
      Scalar f = row[piv[e]];
      if (sgn(f) == 0) continue;
      for (std::size_t k = 0; k <= n; ++k) row[k] -= f * eqm[e][k];
    }
    Vec a(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(n));
    if (is_zero(a)) continue;
    Integer l = lcm_of_denominators(a);
    IntVec ai(n);
    for (std::size_t i = 0; i < n; ++i) ai[i] = Scalar(a[i] * l).get_num();
    Integer g = gcd_of(ai);
    Scalar factor = Scalar(l) / Scalar(g);
    ineqs.push_back({scale(a, factor), row[n] * factor});
  }
  for (const auto& e : eqm) {
    Vec a(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(n));
    Integer l = lcm_of_denominators(a);
    IntVec ai(n);
    for (std::size_t i = 0; i < n; ++i) ai[i] = Scalar(a[i] * l).get_num();
    Scalar factor = Scalar(l) / Scalar(gcd_of(ai));
    out.equalities.push_back({scale(a, factor), e[n] * factor});
  }
  std::sort(ineqs.begin(), ineqs.end(), [](const Row& x, const Row& y) {
    if (x.normal != y.normal) return lex_less(x.normal, y.normal);
    return x.offset < y.offset;
  });
  ineqs.erase(std::unique(ineqs.begin(), ineqs.end(),
                          [](const Row& x, const Row& y) { return x.normal == y.normal && x.offset == y.offset; }),
              ineqs.end());
  out.inequalities = std::move(ineqs);
  return out;
}

}  // namespace lfc
