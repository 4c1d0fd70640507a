#include "b3rep/rep/factory.hpp"

#include <cmath>
#include <deque>
#include <stdexcept>
#include <vector>

#include <boost/random/normal_distribution.hpp>

#include "b3rep/errors.hpp"
#include "b3rep/ext/numeric_rank.hpp"
#include "b3rep/quiver/lattice.hpp"

namespace b3rep::rep {

namespace {

using Complex = std::complex<double>;

const Complex kOmega{-0.5, std::sqrt(3.0) / 2.0};
const Complex kOmega2{-0.5, -std::sqrt(3.0) / 2.0};

// (rho, tau) for hexagon vertices 0..5.
const std::array<std::pair<Complex, Complex>, 6> kOneDim = {{
    {1.0, 1.0},
    {-1.0, kOmega},
    {1.0, kOmega2},
    {-1.0, 1.0},
    {1.0, kOmega},
    {-1.0, kOmega2},
}};

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::optional<int> one_dim_vertex(const quiver::GammaDimVector& alpha) {
  if (alpha.n() != 1) return std::nullopt;
  for (int u = 0; u < 6; ++u) {
    if (quiver::hex_to_gamma(quiver::HexDimVector::unit(u)) == alpha) return u;
  }
  return std::nullopt;
}

}  // namespace

// Unitary factor of a complex Gaussian matrix, with the phases of diag(R)
// pulled into Q so the distribution is Haar.
Matrix random_unitary(Eigen::Index n, std::mt19937_64& rng) {
  boost::random::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = {re, im};
    }
  }
  const Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

RepPair one_dim_rep(int u) {
  if (u < 0 || u > 5) throw std::out_of_range("hexagon vertex must be in 0..5");
  const auto& [rho, tau] = kOneDim[static_cast<std::size_t>(u)];
  RepPair out;
  out.A = Matrix::Constant(1, 1, rho);
  out.B = Matrix::Constant(1, 1, tau);
  out.kind = RelationKind::Gamma;
  return out;
}

RepPair random_gamma_point(const quiver::GammaDimVector& alpha, std::mt19937_64& rng) {
  const Eigen::Index n = alpha.n();
  Eigen::VectorXcd da(n);
  Eigen::VectorXcd db(n);
  for (Eigen::Index i = 0; i < n; ++i) da(i) = i < alpha.a() ? Complex(1.0) : Complex(-1.0);
  Eigen::Index pos = 0;
  for (int i = 0; i < alpha.x(); ++i) db(pos++) = 1.0;
  for (int i = 0; i < alpha.y(); ++i) db(pos++) = kOmega;
  for (int i = 0; i < alpha.z(); ++i) db(pos++) = kOmega2;

  const Matrix p = random_unitary(n, rng);
  const Matrix q = random_unitary(n, rng);
  RepPair out;
  out.A = p * da.asDiagonal() * p.adjoint();
  out.B = q * db.asDiagonal() * q.adjoint();
  out.kind = RelationKind::Gamma;
  return out;
}

SimpleInstance random_simple_gamma(const quiver::GammaDimVector& alpha, std::uint64_t seed,
                                   const ext::ToleranceConfig& tol) {
  if (!quiver::is_simple_gamma(alpha)) {
    throw NotSimpleDimension("no simple Gamma-module of type " + quiver::to_string(alpha));
  }
  SimpleInstance out;
  out.alpha = alpha;
  if (const auto u = one_dim_vertex(alpha)) {
    out.seed = seed;
    out.rep = one_dim_rep(*u);
    return out;
  }
  for (int attempt = 0; attempt < kSimpleRetryBound; ++attempt) {
    const std::uint64_t s = attempt == 0 ? seed : splitmix64(seed + static_cast<std::uint64_t>(attempt));
    std::mt19937_64 rng(s);
    RepPair candidate = random_gamma_point(alpha, rng);
    const BurnsideResult check = burnside_check(candidate, tol);
    if (check.simple && !check.ambiguous) {
      out.seed = s;
      out.rep = std::move(candidate);
      out.attempts = attempt + 1;
      return out;
    }
  }
  throw GenerationFailed("no simple instance of type " + quiver::to_string(alpha) + " after " +
                         std::to_string(kSimpleRetryBound) + " attempts");
}

BurnsideResult burnside_check(const RepPair& v, const ext::ToleranceConfig& tol) {
  const Eigen::Index n = v.n();
  const Eigen::Index full = n * n;
  if (n == 0) return {};

  std::vector<Eigen::VectorXcd> basis;  // orthonormal
  std::vector<Eigen::VectorXcd> spanning;
  std::deque<Matrix> frontier;

  auto try_add = [&](const Matrix& word) {
    const Eigen::VectorXcd vec = Eigen::Map<const Eigen::VectorXcd>(word.data(), full);
    const double norm = vec.norm();
    if (norm == 0.0) return;
    Eigen::VectorXcd r = vec / norm;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : basis) r -= q * q.dot(r);
    }
    const double residual = r.norm();
    if (residual <= tol.rel_tol) return;
    basis.push_back(r / residual);
    spanning.push_back(vec / norm);
    frontier.push_back(word / norm);
  };

  try_add(Matrix::Identity(n, n));
  while (!frontier.empty() && static_cast<Eigen::Index>(basis.size()) < full) {
    const Matrix word = std::move(frontier.front());
    frontier.pop_front();
    try_add(v.A * word);
    try_add(v.B * word);
  }

  Eigen::MatrixXcd span(full, static_cast<Eigen::Index>(spanning.size()));
  for (std::size_t i = 0; i < spanning.size(); ++i) span.col(static_cast<Eigen::Index>(i)) = spanning[i];
  const ext::RankInfo info = ext::numeric_rank(span, tol);

  BurnsideResult out;
  out.span_dim = info.rank;
  out.ambiguous = info.ambiguous;
  out.simple = info.rank == full && !info.ambiguous;
  return out;
}

bool burnside_simple(const RepPair& v, const ext::ToleranceConfig& tol) {
  return burnside_check(v, tol).simple;
}

RepPair scale_rep(const RepPair& v, const ExactScalar& lambda) {
  RepPair out;
  out.A = lambda.pow(3).to_complex() * v.A;
  out.B = lambda.pow(2).to_complex() * v.B;
  out.kind = (v.kind == RelationKind::Gamma && lambda.is_sixth_root_of_unity())
                 ? RelationKind::Gamma
                 : RelationKind::B3;
  return out;
}

std::uint64_t stable_hash(const std::string& text) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t instance_seed(std::uint64_t seed, const std::string& instance_id) noexcept {
  return seed ^ stable_hash(instance_id);
}

RepPair assemble(const SemisimpleSpec& spec, std::uint64_t seed, const ext::ToleranceConfig& tol) {
  validate_spec(spec);
  const Eigen::Index n = spec.n();
  RepPair out;
  out.A = Matrix::Zero(n, n);
  out.B = Matrix::Zero(n, n);
  out.kind = RelationKind::B3;
  Eigen::Index offset = 0;
  for (const auto& entry : spec.entries) {
    const SimpleInstance simple =
        random_simple_gamma(entry.alpha, instance_seed(seed, entry.instance_id), tol);
    const RepPair block = scale_rep(simple.rep, entry.lambda);
    const Eigen::Index d = block.n();
    for (int copy = 0; copy < entry.mult; ++copy) {
      out.A.block(offset, offset, d, d) = block.A;
      out.B.block(offset, offset, d, d) = block.B;
      offset += d;
    }
  }
  return out;
}

}  // namespace b3rep::rep
