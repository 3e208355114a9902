#include "knotclock/alexpoly.hpp"

#include <algorithm>
#include <sstream>

namespace knotclock {

IntPolynomial::IntPolynomial(long long constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

IntPolynomial::IntPolynomial(std::vector<long long> coeffs, int low)
    : coeffs_(std::move(coeffs)), low_(low) {
  trim();
}

IntPolynomial IntPolynomial::monomial(long long coeff, int degree) {
  return IntPolynomial({coeff}, degree);
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  size_t drop = 0;
  while (drop < coeffs_.size() && coeffs_[drop] == 0) ++drop;
  if (drop) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + drop);
    low_ += static_cast<int>(drop);
  }
  if (coeffs_.empty()) low_ = 0;
}

long long IntPolynomial::coeff(int degree) const {
  int i = degree - low_;
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  int lo = std::min(low_, o.low_);
  int hi = std::max(degree(), o.degree());
  std::vector<long long> c(hi - lo + 1, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) c[low_ - lo + i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) c[o.low_ - lo + i] += o.coeffs_[i];
  return IntPolynomial(std::move(c), lo);
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  return *this + (-o);
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return IntPolynomial();
  std::vector<long long> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j)
      c[i + j] += coeffs_[i] * o.coeffs_[j];
  return IntPolynomial(std::move(c), low_ + o.low_);
}

IntPolynomial IntPolynomial::operator/(const IntPolynomial& o) const {
  if (o.is_zero()) throw InvariantViolation("division by zero polynomial");
  if (is_zero()) return IntPolynomial();
  IntPolynomial rem = *this;
  std::vector<long long> q;
  int qlow = low_ - o.low_;
  int qlen = static_cast<int>(coeffs_.size()) - static_cast<int>(o.coeffs_.size()) + 1;
  if (qlen < 1) throw InvariantViolation("inexact polynomial division");
  q.assign(qlen, 0);
  const long long olead = o.coeffs_.back();
  while (!rem.is_zero() && rem.degree() >= o.degree()) {
    long long rl = rem.coeffs_.back();
    if (rl % olead != 0) throw InvariantViolation("inexact polynomial division");
    int d = rem.degree() - o.degree();
    int qi = d - qlow;
    if (qi < 0 || qi >= qlen) throw InvariantViolation("inexact polynomial division");
    long long qc = rl / olead;
    q[qi] = qc;
    rem = rem - IntPolynomial::monomial(qc, d) * o;
  }
  if (!rem.is_zero()) throw InvariantViolation("inexact polynomial division");
  return IntPolynomial(std::move(q), qlow);
}

IntPolynomial IntPolynomial::normalized() const {
  if (is_zero()) return IntPolynomial();
  IntPolynomial r = *this;
  r.low_ = 0;
  if (r.coeffs_.back() < 0)
    for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool IntPolynomial::equals_up_to_unit(const IntPolynomial& o) const {
  return normalized() == o.normalized();
}

long long IntPolynomial::evaluate(long long t) const {
  if (low_ < 0) throw InvariantViolation("negative powers not evaluable");
  long long acc = 0;
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + coeffs_[i];
  for (int k = 0; k < low_; ++k) acc *= t;
  return acc;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= low_; --d) {
    long long c = coeff(d);
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    long long a = c < 0 ? -c : c;
    if (a != 1 || d == 0) os << a;
    if (d != 0) {
      os << 't';
      if (d != 1) os << '^' << d;
    }
  }
  return os.str();
}

namespace {

// Arrival slot of the strand passing under at crossing v.
int over_in_slot(const Diagram& d, VertexId v) {
  const Universe& u = d.universe;
  int over = *d.over_slot[v];
  for (int s : {over, (over + 2) % 4}) {
    Dart dart{v, s};
    EdgeId e = u.edge_at(v, s);
    if (u.edge(e).head == dart) return s;
  }
  throw InvariantViolation("no over-strand arrival dart");
}

}  // namespace

PolyMatrix region_matrix(const Diagram& d, StarPlacement stars) {
  if (!d.has_over_data())
    throw std::invalid_argument("over/under data required at every crossing");
  const Universe& u = d.universe;
  std::vector<FaceId> keep;
  for (FaceId f = 0; f < u.face_count(); ++f)
    if (f != stars.a && f != stars.b) keep.push_back(f);
  std::vector<int> col(u.face_count(), -1);
  for (size_t i = 0; i < keep.size(); ++i) col[keep[i]] = static_cast<int>(i);

  PolyMatrix m(u.vertex_count(),
               std::vector<IntPolynomial>(keep.size(), IntPolynomial()));
  for (VertexId v = 0; v < u.vertex_count(); ++v) {
    // Weights follow the over-strand through the crossing: on its right
    // side -t before, +t after; on its left side +1 before, -1 after.
    // Keying off the over arrival keeps both crossing chiralities on one
    // formula; anchoring at the under strand instead flips t -> 1/t on one
    // chirality and breaks mixed diagrams.
    int r = (over_in_slot(d, v) + 1) % 4;
    const std::pair<int, IntPolynomial> corner[4] = {
        {r, IntPolynomial::monomial(1, 1)},
        {(r + 3) % 4, IntPolynomial::monomial(-1, 1)},
        {(r + 2) % 4, IntPolynomial(1)},
        {(r + 1) % 4, IntPolynomial(-1)},
    };
    for (const auto& [slot, val] : corner) {
      int c = col[u.face_of_corner(v, slot)];
      if (c >= 0) m[v][c] = m[v][c] + val;
    }
  }
  return m;
}

IntPolynomial poly_determinant(const PolyMatrix& m) {
  const int n = static_cast<int>(m.size());
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("determinant needs a square matrix");
  if (n == 0) return IntPolynomial(1);
  PolyMatrix a = m;
  IntPolynomial prev(1);
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (!a[i][k].is_zero()) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return IntPolynomial();
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      a[i][k] = IntPolynomial();
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

IntPolynomial alexander_det(const Diagram& d, StarPlacement stars) {
  IntPolynomial det = poly_determinant(region_matrix(d, stars));
  if (det.is_zero())
    throw std::invalid_argument("vanishing state determinant: bad input");
  return det.normalized();
}

long long permutation_term_count(const Universe& u, StarPlacement stars) {
  std::vector<int> col(u.face_count(), -1);
  int ncols = 0;
  for (FaceId f = 0; f < u.face_count(); ++f)
    if (f != stars.a && f != stars.b) col[f] = ncols++;

  // Distinct nonzero columns per row; entries cannot cancel, so support =
  // corner incidence.
  std::vector<std::vector<int>> support(u.vertex_count());
  for (VertexId v = 0; v < u.vertex_count(); ++v) {
    for (int s = 0; s < 4; ++s) {
      int c = col[u.face_of_corner(v, s)];
      if (c >= 0 && std::find(support[v].begin(), support[v].end(), c) ==
                        support[v].end())
        support[v].push_back(c);
    }
    std::sort(support[v].begin(), support[v].end());
  }

  std::vector<char> used(ncols, 0);
  long long count = 0;
  auto rec = [&](auto&& self, int v) -> void {
    if (v == u.vertex_count()) {
      ++count;
      return;
    }
    for (int c : support[v]) {
      if (used[c]) continue;
      used[c] = 1;
      self(self, v + 1);
      used[c] = 0;
    }
  };
  rec(rec, 0);
  return count;
}

}  // namespace knotclock
