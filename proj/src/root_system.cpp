#include "wfrob/root_system.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace wfrob {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

Weight IntMatrix::apply(const Weight &v) const {
  Weight out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < n_; ++j)
      s += (*this)(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

IntMatrix operator*(const IntMatrix &x, const IntMatrix &y) {
  const std::size_t n = x.size();
  IntMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const std::int64_t xik = x(i, k);
      if (xik == 0)
        continue;
      for (std::size_t j = 0; j < n; ++j)
        out(i, j) += xik * y(k, j);
    }
  return out;
}

namespace {

std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 2; i <= n; ++i)
    r *= i;
  return r;
}

// Exact inverse by Gauss-Jordan over the rationals; returns (adj, det).
std::pair<IntMatrix, std::int64_t> adjugate_and_det(const IntMatrix &m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = m(i, j);
    a[i][n + i] = 1;
  }
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0)
      ++piv;
    if (piv == n)
      throw DomainError("singular", "Cartan matrix is singular");
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    Rational inv = 1 / a[col][col];
    for (auto &x : a[col])
      x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0)
        continue;
      Rational f = a[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c)
        a[r][c] -= f * a[col][c];
    }
  }
  IntMatrix adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational v = a[i][n + j] * det;
      adj(i, j) = static_cast<std::int64_t>(boost::multiprecision::numerator(v));
    }
  return {adj, static_cast<std::int64_t>(boost::multiprecision::numerator(det))};
}

} // namespace

RootSystem RootSystem::build(RootType type, std::size_t n) {
  RootSystem rs;
  rs.type_ = type;
  switch (type) {
  case RootType::A:
    if (n < 1)
      throw DomainError("unsupported_type", "A_n requires n >= 1");
    rs.rank_ = n;
    rs.name_ = "A" + std::to_string(n);
    rs.cartan_ = IntMatrix(n);
    for (std::size_t i = 0; i < n; ++i) {
      rs.cartan_(i, i) = 2;
      if (i + 1 < n) {
        rs.cartan_(i, i + 1) = -1;
        rs.cartan_(i + 1, i) = -1;
      }
    }
    rs.weyl_order_ = n <= 20 ? factorial(n + 1) : 0;
    break;
  case RootType::B2:
    rs.rank_ = 2;
    rs.name_ = "B2";
    rs.cartan_ = IntMatrix(2);
    rs.cartan_(0, 0) = 2;
    rs.cartan_(0, 1) = -1;
    rs.cartan_(1, 0) = -2;
    rs.cartan_(1, 1) = 2;
    rs.weyl_order_ = 8;
    break;
  case RootType::G2:
    rs.rank_ = 2;
    rs.name_ = "G2";
    rs.cartan_ = IntMatrix(2);
    rs.cartan_(0, 0) = 2;
    rs.cartan_(0, 1) = -3;
    rs.cartan_(1, 0) = -1;
    rs.cartan_(1, 1) = 2;
    rs.weyl_order_ = 12;
    break;
  }
  rs.finish();
  return rs;
}

RootSystem RootSystem::parse(std::string_view name) {
  if (name == "B2")
    return build(RootType::B2);
  if (name == "G2")
    return build(RootType::G2);
  if (name.size() >= 2 && (name[0] == 'A' || name[0] == 'a')) {
    std::size_t n = 0;
    for (char c : name.substr(1)) {
      if (c < '0' || c > '9')
        throw DomainError("unsupported_type",
                          "unknown root system '" + std::string(name) + "'");
      n = n * 10 + static_cast<std::size_t>(c - '0');
      if (n > 1000)
        throw DomainError("unsupported_type", "rank too large");
    }
    return build(RootType::A, n);
  }
  throw DomainError("unsupported_type",
                    "unknown root system '" + std::string(name) +
                        "' (expected An, B2 or G2)");
}

void RootSystem::finish() {
  const std::size_t l = rank_;
  auto [adj, det] = adjugate_and_det(cartan_);
  adjugate_ = adj;
  det_ = det;

  simple_roots_.clear();
  for (std::size_t j = 0; j < l; ++j) {
    Weight a(l);
    for (std::size_t i = 0; i < l; ++i)
      a[i] = cartan_(i, j);
    simple_roots_.push_back(a);
  }
  rho_ = Weight(std::vector<std::int64_t>(l, 1));

  // Close {(alpha_i, alpha_i^vee)} under simple reflections, tracking each
  // root in the simple-root basis and its coroot in the simple-coroot basis:
  //   s_i(beta)     = beta     - <beta, alpha_i^vee> alpha_i
  //   s_i(beta^vee) = beta^vee - <alpha_i, beta^vee> alpha_i^vee
  using Pair = std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>;
  std::set<Pair> seen;
  std::vector<Pair> frontier;
  for (std::size_t i = 0; i < l; ++i) {
    std::vector<std::int64_t> e(l, 0);
    e[i] = 1;
    Pair p{e, e};
    seen.insert(p);
    frontier.push_back(p);
  }
  while (!frontier.empty()) {
    std::vector<Pair> next;
    for (const auto &[r, c] : frontier) {
      for (std::size_t i = 0; i < l; ++i) {
        std::int64_t pr = 0, pc = 0;
        for (std::size_t j = 0; j < l; ++j) {
          pr += r[j] * cartan_(i, j);
          pc += c[j] * cartan_(j, i);
        }
        Pair q{r, c};
        q.first[i] -= pr;
        q.second[i] -= pc;
        if (seen.insert(q).second)
          next.push_back(q);
      }
    }
    frontier = std::move(next);
  }
  positive_roots_.clear();
  for (const auto &[r, c] : seen) {
    if (!std::all_of(r.begin(), r.end(), [](auto x) { return x >= 0; }))
      continue;
    PositiveRoot pr;
    pr.alpha = r;
    pr.coroot = c;
    pr.omega = from_root_coords(r);
    for (std::size_t j = 0; j < l; ++j) {
      pr.height += r[j];
      pr.coroot_height += c[j];
    }
    positive_roots_.push_back(std::move(pr));
  }
  std::sort(positive_roots_.begin(), positive_roots_.end(),
            [](const PositiveRoot &a, const PositiveRoot &b) {
              if (a.height != b.height)
                return a.height < b.height;
              return a.alpha > b.alpha;
            });
  coxeter_ = static_cast<std::int64_t>(2 * positive_roots_.size() / l);

  weyl_.clear();
  if (weyl_order_ != 0 && weyl_order_ <= kMaxWeylOrder) {
    std::vector<IntMatrix> gens;
    for (std::size_t i = 0; i < l; ++i) {
      // s_i(lambda) = lambda - lambda_i alpha_i
      IntMatrix s = IntMatrix::identity(l);
      for (std::size_t k = 0; k < l; ++k)
        s(k, i) -= cartan_(k, i);
      gens.push_back(s);
    }
    std::set<IntMatrix> found;
    weyl_.push_back(IntMatrix::identity(l));
    found.insert(weyl_.front());
    for (std::size_t head = 0; head < weyl_.size(); ++head) {
      for (const auto &s : gens) {
        IntMatrix m = s * weyl_[head];
        if (found.insert(m).second)
          weyl_.push_back(m);
      }
    }
    const Weight minus_rho = -rho_;
    for (std::size_t k = 0; k < weyl_.size(); ++k)
      if (weyl_[k].apply(rho_) == minus_rho)
        w0_index_ = k;
  }
}

const std::vector<IntMatrix> &RootSystem::weyl_elements() const {
  if (weyl_.empty())
    throw DomainError("weyl_unavailable",
                      "Weyl group enumeration is disabled for " + name_ +
                          " (order exceeds 720)");
  return weyl_;
}

const IntMatrix &RootSystem::w0() const { return weyl_elements()[w0_index_]; }

std::size_t RootSystem::w0_index() const {
  (void)weyl_elements();
  return w0_index_;
}

std::int64_t RootSystem::pairing(const Weight &lambda,
                                 std::size_t root_index) const {
  const auto &c = positive_roots_.at(root_index).coroot;
  std::int64_t s = 0;
  for (std::size_t i = 0; i < rank_; ++i)
    s += c[i] * lambda[i];
  return s;
}

Weight RootSystem::weyl_apply(const IntMatrix &w, const Weight &lambda) const {
  return w.apply(lambda);
}

Weight RootSystem::weyl_apply(std::size_t w_index, const Weight &lambda) const {
  return weyl_elements().at(w_index).apply(lambda);
}

Weight RootSystem::dot_action(const IntMatrix &w, const Weight &lambda) const {
  return w.apply(lambda + rho_) - rho_;
}

Weight RootSystem::dot_action(std::size_t w_index, const Weight &lambda) const {
  return dot_action(weyl_elements().at(w_index), lambda);
}

std::vector<std::int64_t>
RootSystem::scaled_root_coords(const Weight &lambda) const {
  const Weight s = adjugate_.apply(lambda);
  return {s.coords().begin(), s.coords().end()};
}

std::vector<Rational> RootSystem::root_coords(const Weight &lambda) const {
  std::vector<Rational> out;
  for (auto x : scaled_root_coords(lambda))
    out.emplace_back(Rational(x, det_));
  return out;
}

Rational RootSystem::phi(const Weight &lambda) const {
  std::int64_t s = 0;
  for (auto x : scaled_root_coords(lambda))
    s += x;
  return Rational(s, det_);
}

bool RootSystem::in_root_lattice(const Weight &lambda) const {
  for (auto x : scaled_root_coords(lambda))
    if (x % det_ != 0)
      return false;
  return true;
}

bool RootSystem::in_positive_root_cone(const Weight &lambda) const {
  for (auto x : scaled_root_coords(lambda))
    if (x < 0 || x % det_ != 0)
      return false;
  return true;
}

Weight RootSystem::from_root_coords(std::span<const std::int64_t> coeffs) const {
  Weight out(rank_);
  for (std::size_t i = 0; i < rank_; ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < rank_; ++j)
      s += cartan_(i, j) * coeffs[j];
    out[i] = s;
  }
  return out;
}

} // namespace wfrob
