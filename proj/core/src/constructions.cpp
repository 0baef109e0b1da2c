#include "mdisc/constructions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mdisc/linalg.hpp"
#include "mdisc/random.hpp"

namespace mdisc {

namespace {

constexpr double kStrictMargin = 1e-9;  // "< 1" enforced as <= 1 - margin, "!= 0" as >= margin

cplx omega_pow(std::size_t d, double exponent) {
  // omega^t with omega = exp(2*pi*i/d), t possibly half-integer
  return std::polar(1.0, 2.0 * std::numbers::pi * exponent / static_cast<double>(d));
}

CVec scaled(const std::vector<double>& coeffs, double divisor) {
  CVec v(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) v[i] = coeffs[i] / divisor;
  return v;
}

Povm rank_one_povm(std::size_t dim, const std::vector<CVec>& kets, double weight) {
  std::vector<ComplexMatrix> elems;
  elems.reserve(kets.size());
  for (const auto& k : kets) {
    ComplexMatrix e = outer(k, k);
    e *= weight;
    elems.push_back(std::move(e));
  }
  return Povm(dim, std::move(elems));
}

std::vector<double> uniform_priors(std::size_t n) {
  return std::vector<double>(n, 1.0 / static_cast<double>(n));
}

std::vector<std::string> split_tag(const std::string& tag) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = tag.find(':', start);
    if (pos == std::string::npos) {
      parts.push_back(tag.substr(start));
      break;
    }
    parts.push_back(tag.substr(start, pos - start));
    start = pos + 1;
  }
  return parts;
}

std::size_t parse_dim(const std::string& s) {
  std::size_t pos = 0;
  const unsigned long d = std::stoul(s, &pos);
  if (pos != s.size() || d < 2) throw std::invalid_argument("bad dimension in tag: " + s);
  return d;
}

Basis computational_basis(std::size_t d) {
  std::vector<CVec> vecs(d, CVec(d));
  for (std::size_t i = 0; i < d; ++i) vecs[i][i] = 1.0;
  return Basis(d, std::move(vecs));
}

Basis basis_from_tag(std::size_t d, const std::string& name) {
  if (name == "comp") return computational_basis(d);
  if (name == "magic") {
    if (d != 2) throw std::invalid_argument("basis 'magic' requires dimension 2");
    return magic_qubit_basis_canonical();
  }
  if (name == "ic3") {
    if (d != 3) throw std::invalid_argument("basis 'ic3' requires dimension 3");
    return ic_basis_d3();
  }
  if (name == "sarkar") return unitary_eigenbasis(sarkar_unitary(d));
  if (name.rfind("magic", 0) == 0) {
    const std::size_t r = parse_dim(name.substr(5)) /* >= 2 */;
    if (d != (std::size_t{1} << r))
      throw std::invalid_argument("basis 'magic" + std::to_string(r) + "' requires dimension 2^r");
    return tensor_power_basis(magic_qubit_basis_canonical(), r);
  }
  throw std::invalid_argument("unknown basis tag: " + name);
}

}  // namespace

Basis::Basis(std::size_t dim_, std::vector<CVec> vectors_)
    : dim(dim_), vectors(std::move(vectors_)) {
  for (const auto& v : vectors) {
    if (v.size() != dim) throw std::invalid_argument("Basis: vector length mismatch");
    if (std::abs(norm(v) - 1.0) > 1e-12) throw std::invalid_argument("Basis: vector not unit norm");
  }
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = i + 1; j < vectors.size(); ++j)
      if (std::abs(inner(vectors[i], vectors[j])) > 1e-9)
        throw std::invalid_argument("Basis: vectors not orthogonal");
}

ComplexMatrix weyl_z(std::size_t d) {
  if (d < 2) throw std::invalid_argument("weyl_z: d must be >= 2");
  ComplexMatrix z(d, d);
  for (std::size_t i = 0; i < d; ++i) z(i, i) = omega_pow(d, static_cast<double>(i));
  return z;
}

ComplexMatrix weyl_x(std::size_t d) {
  if (d < 2) throw std::invalid_argument("weyl_x: d must be >= 2");
  ComplexMatrix x(d, d);
  for (std::size_t i = 0; i < d; ++i) x((i + 1) % d, i) = 1.0;
  return x;
}

ComplexMatrix weyl_unitary(std::size_t k, std::size_t l, std::size_t d) {
  if (d < 2) throw std::invalid_argument("weyl_unitary: d must be >= 2");
  if (k >= d || l >= d) throw std::invalid_argument("weyl_unitary: indices out of range");
  // (X^k Z^l)(i,j) = delta_{i,(j+k) mod d} * omega^{l*j}
  ComplexMatrix u(d, d);
  for (std::size_t j = 0; j < d; ++j)
    u((j + k) % d, j) = omega_pow(d, static_cast<double>(l * j));
  return u;
}

std::vector<Basis> table1_bases() {
  const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0), s6 = std::sqrt(6.0);
  // Every row and every column must be an orthonormal basis; the (x=3, a=3)
  // entry is the completion forced (up to phase) by the other fifteen.
  std::vector<std::vector<CVec>> rows = {
      {scaled({1, 0, 0, 0}, 1), scaled({0, 1, 0, 0}, 1), scaled({0, 0, 1, 0}, 1),
       scaled({0, 0, 0, 1}, 1)},
      {scaled({0, 1, -1, 0}, s2), scaled({1, 0, 0, 1}, s2), scaled({1, 0, 0, -1}, s2),
       scaled({0, 1, 1, 0}, s2)},
      {scaled({0, 1, 1, 1}, s3), scaled({1, 0, 1, -1}, s3), scaled({-1, 1, 0, -1}, s3),
       scaled({1, 1, -1, 0}, s3)},
      {scaled({0, 1, 1, -2}, s6), scaled({-1, 0, 2, 1}, s6), scaled({1, 2, 0, 1}, s6),
       scaled({-2, 1, -1, 0}, s6)},
  };
  std::vector<Basis> bases;
  bases.reserve(rows.size());
  for (auto& r : rows) bases.emplace_back(4, std::move(r));
  return bases;
}

MeasurementEnsemble table1_projective_ensemble() {
  const auto bases = table1_bases();
  std::vector<Povm> povms;
  povms.reserve(bases.size());
  for (const auto& b : bases) povms.push_back(rank_one_povm(4, b.vectors, 1.0));
  return MeasurementEnsemble(std::move(povms), uniform_priors(bases.size()));
}

ConditionReport check_projective_advantage_conditions(const std::vector<Basis>& bases) {
  const std::size_t n = bases.size();
  if (n == 0) throw std::invalid_argument("check_projective_advantage_conditions: empty input");
  const std::size_t d = bases.front().dim;
  if (n != d) throw std::invalid_argument("check_projective_advantage_conditions: need d bases of dimension d");
  for (const auto& b : bases)
    if (b.dim != d || b.size() != d)
      throw std::invalid_argument("check_projective_advantage_conditions: ragged input");

  ConditionReport report;
  // Condition 1: outcome-wise orthonormality across settings.
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t xp = x + 1; xp < n; ++xp) {
        const double ov = std::abs(inner(bases[x].vectors[a], bases[xp].vectors[a]));
        if (ov > 1e-9) {
          report.satisfied = false;
          report.witness = ConditionWitness{{a, a, x, xp}, ov};
          return report;
        }
      }
  // Condition 2: some outcome pair with all cross overlaps strictly below 1.
  double best_max = 2.0;
  ConditionWitness best{};
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t ap = 0; ap < d; ++ap) {
      if (a == ap) continue;
      double pair_max = 0.0;
      std::size_t wx = 0, wxp = 0;
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t xp = 0; xp < n; ++xp) {
          const double ov = std::abs(inner(bases[x].vectors[a], bases[xp].vectors[ap]));
          if (ov > pair_max) {
            pair_max = ov;
            wx = x;
            wxp = xp;
          }
        }
      if (pair_max < best_max) {
        best_max = pair_max;
        best = ConditionWitness{{a, ap, wx, wxp}, pair_max};
      }
    }
  report.satisfied = best_max <= 1.0 - kStrictMargin;
  report.witness = best;
  return report;
}

MeasurementEnsemble weyl_covariant_povm_ensemble(const Basis& basis) {
  const std::size_t d = basis.dim;
  if (basis.size() != d)
    throw std::invalid_argument("weyl_covariant_povm_ensemble: need a full basis");
  std::vector<Povm> povms;
  povms.reserve(d);
  for (std::size_t x = 0; x < d; ++x) {
    std::vector<ComplexMatrix> elems;
    elems.reserve(d * d);
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t l = 0; l < d; ++l) {
        const CVec ket = matvec(weyl_unitary(k, l, d), basis.vectors[x]);
        ComplexMatrix e = outer(ket, ket);
        e *= 1.0 / static_cast<double>(d);
        elems.push_back(std::move(e));
      }
    povms.emplace_back(d, std::move(elems));
  }
  return MeasurementEnsemble(std::move(povms), uniform_priors(d));
}

ConditionReport check_cond(const Basis& basis) {
  const std::size_t d = basis.dim;
  ConditionReport report;
  double closest = 2.0;
  ConditionWitness closest_witness{};
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = 0; l < d; ++l) {
      if (k == 0 && l == 0) continue;
      const ComplexMatrix u = weyl_unitary(k, l, d);
      double max_ov = 0.0;
      std::size_t wi = 0, wj = 0;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        const CVec ui = matvec(u, basis.vectors[i]);
        for (std::size_t j = 0; j < basis.size(); ++j) {
          const double ov = std::abs(inner(basis.vectors[j], ui));
          if (ov > max_ov) {
            max_ov = ov;
            wi = i;
            wj = j;
          }
        }
      }
      if (max_ov <= 1.0 - kStrictMargin) {
        report.satisfied = true;
        report.witness = ConditionWitness{{k, l, wi, wj}, max_ov};
        return report;
      }
      if (max_ov < closest) {
        closest = max_ov;
        closest_witness = ConditionWitness{{k, l, wi, wj}, max_ov};
      }
    }
  report.satisfied = false;
  report.witness = closest_witness;
  return report;
}

ConditionReport check_ic_condition(const Basis& basis) {
  const std::size_t d = basis.dim;
  double min_ov = 2.0;
  ConditionWitness w{};
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = 0; l < d; ++l) {
      const ComplexMatrix u = weyl_unitary(k, l, d);
      for (std::size_t i = 0; i < basis.size(); ++i) {
        const double ov = std::abs(inner(basis.vectors[i], matvec(u, basis.vectors[i])));
        if (ov < min_ov) {
          min_ov = ov;
          w = ConditionWitness{{k, l, i, i}, ov};
        }
      }
    }
  ConditionReport report;
  report.satisfied = min_ov >= kStrictMargin;
  report.witness = w;
  return report;
}

ComplexMatrix sarkar_unitary(std::size_t d) {
  if (d < 2) throw std::invalid_argument("sarkar_unitary: d must be >= 2");
  const double dd = static_cast<double>(d);
  ComplexMatrix u(d, d);
  for (std::size_t i = 0; i < d; ++i) u(i, i) = omega_pow(d, static_cast<double>(i) + 0.5);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const double sign = ((i == 0 ? 1 : 0) + (j == 0 ? 1 : 0)) % 2 == 0 ? 1.0 : -1.0;
      u(i, j) -= (2.0 / dd) * sign * omega_pow(d, (static_cast<double>(i + j) + 1.0) / 2.0);
    }
  if (!is_unitary(u, 1e-10)) throw std::runtime_error("sarkar_unitary: construction not unitary");
  return u;
}

Basis unitary_eigenbasis(const ComplexMatrix& u) {
  if (!u.is_square()) throw std::invalid_argument("unitary_eigenbasis: non-square input");
  if (!is_unitary(u, 1e-9)) throw std::invalid_argument("unitary_eigenbasis: input not unitary");
  const std::size_t n = u.rows();
  const ComplexMatrix ud = u.adjoint();
  ComplexMatrix h1 = u + ud;
  h1 *= 0.5;
  ComplexMatrix h2 = u - ud;
  h2 *= cplx(0.0, -0.5);

  const auto eig1 = hermitian_eigen(h1);
  std::vector<CVec> columns(n, CVec(n));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) columns[k][i] = eig1.eigenvectors(i, k);

  // Refine degenerate groups of h1 against h2 so each column is an
  // eigenvector of both, hence of u = h1 + i*h2.
  constexpr double kGroupTol = 1e-8;
  std::size_t start = 0;
  while (start < n) {
    std::size_t stop = start + 1;
    while (stop < n && eig1.eigenvalues[stop] - eig1.eigenvalues[stop - 1] < kGroupTol) ++stop;
    const std::size_t g = stop - start;
    if (g > 1) {
      ComplexMatrix w(n, g);
      for (std::size_t c = 0; c < g; ++c)
        for (std::size_t i = 0; i < n; ++i) w(i, c) = columns[start + c][i];
      const ComplexMatrix m = w.adjoint() * (h2 * w);
      const auto eig2 = hermitian_eigen(m);
      const ComplexMatrix refined = w * eig2.eigenvectors;
      for (std::size_t c = 0; c < g; ++c)
        for (std::size_t i = 0; i < n; ++i) columns[start + c][i] = refined(i, c);
    }
    start = stop;
  }

  for (auto& v : columns) {
    normalize(v);
    const CVec uv = matvec(u, v);
    const cplx lambda = inner(v, uv);
    CVec resid = uv;
    for (std::size_t i = 0; i < n; ++i) resid[i] -= lambda * v[i];
    if (norm(resid) > 1e-8)
      throw std::runtime_error("unitary_eigenbasis: joint diagonalization did not converge");
  }
  return Basis(n, std::move(columns));
}

Basis magic_qubit_basis(double alpha, double beta) {
  if (!(beta > 0.0 && beta < std::numbers::pi / 4.0))
    throw std::domain_error("magic_qubit_basis: beta must lie in (0, pi/4)");
  const cplx ea = std::polar(1.0, alpha);
  CVec v0 = {std::cos(beta), ea * std::sin(beta)};
  CVec v1 = {std::conj(ea) * std::sin(beta), -std::cos(beta)};
  return Basis(2, {std::move(v0), std::move(v1)});
}

Basis magic_qubit_basis_canonical() {
  return magic_qubit_basis(std::numbers::pi / 4.0, 0.5 * std::acos(1.0 / std::sqrt(3.0)));
}

Basis tensor_power_basis(const Basis& b, std::size_t r) {
  if (b.dim != 2) throw std::invalid_argument("tensor_power_basis: base must be a qubit basis");
  if (r < 1) throw std::invalid_argument("tensor_power_basis: r must be >= 1");
  if (r == 1) return b;
  std::vector<CVec> vecs = {b.vectors[0], b.vectors[1]};
  for (std::size_t step = 1; step < r; ++step) {
    std::vector<CVec> next;
    next.reserve(vecs.size() * 2);
    for (const auto& v : vecs)
      for (const auto& w : b.vectors) next.push_back(kron(v, w));
    vecs = std::move(next);
  }
  return Basis(std::size_t{1} << r, std::move(vecs));
}

Basis ic_basis_d3() {
  const double s3 = std::sqrt(3.0);
  std::vector<CVec> raw = {
      {0.0, 1.0, -1.0},
      {1.0 + s3, 1.0, 1.0},
      {1.0 - s3, 1.0, 1.0},
  };
  for (auto& v : raw) normalize(v);
  return Basis(3, std::move(raw));
}

ConditionReport check_condd1(const Basis& basis) {
  const std::size_t d = basis.dim;
  if (basis.size() != d) throw std::invalid_argument("check_condd1: need a full basis");
  const double dd = static_cast<double>(d);
  const double diag_target = 1.0 / dd;
  const double off_target = std::sqrt(dd + 1.0) / dd;
  ConditionReport report;
  report.satisfied = true;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const double mag = std::abs(basis.vectors[i][j]);
      const double target = i == j ? diag_target : off_target;
      if (std::abs(mag - target) > 1e-9) {
        report.satisfied = false;
        report.witness = ConditionWitness{{i, j, 0, 0}, mag};
        return report;
      }
    }
  return report;
}

namespace {

std::vector<CVec> dplus1_eta_vectors(const Basis& basis, std::size_t x) {
  const std::size_t d = basis.dim;
  const ComplexMatrix z = weyl_z(d);
  std::vector<CVec> etas;
  etas.reserve(d + 1);
  CVec current = basis.vectors[x];
  etas.push_back(current);  // a = 0: Z^0 v_x
  for (std::size_t a = 1; a < d; ++a) {
    current = matvec(z, current);
    etas.push_back(current);
  }
  CVec comp(d);
  comp[x] = 1.0;
  etas.push_back(std::move(comp));  // a = d
  return etas;
}

MeasurementEnsemble dplus1_build(const Basis& basis) {
  const std::size_t d = basis.dim;
  const double weight = static_cast<double>(d) / (static_cast<double>(d) + 1.0);
  std::vector<Povm> povms;
  povms.reserve(d);
  for (std::size_t x = 0; x < d; ++x)
    povms.push_back(rank_one_povm(d, dplus1_eta_vectors(basis, x), weight));
  return MeasurementEnsemble(std::move(povms), uniform_priors(d));
}

}  // namespace

MeasurementEnsemble dplus1_povm_ensemble(const Basis& basis) {
  if (!check_condd1(basis).satisfied)
    throw std::invalid_argument(
        "dplus1_povm_ensemble: basis violates the entry condition; elements would not sum to 1");
  return dplus1_build(basis);
}

MeasurementEnsemble dplus1_povm_ensemble_unchecked(const Basis& basis) {
  return dplus1_build(basis);
}

Basis example_basis_dplus1(std::size_t d) {
  switch (d) {
    case 2: {
      const double s3 = std::sqrt(3.0);
      return Basis(2, {scaled({1, s3}, 2), scaled({s3, -1}, 2)});
    }
    case 3: {
      std::vector<CVec> vecs;
      for (std::size_t i = 0; i < 3; ++i) {
        CVec v(3);
        v[i] = 1.0 / 3.0;
        v[(i + 1) % 3] = -2.0 / 3.0;
        v[(i + 2) % 3] = -2.0 / 3.0;
        vecs.push_back(std::move(v));
      }
      return Basis(3, std::move(vecs));
    }
    case 4: {
      const double s5 = std::sqrt(5.0);
      return Basis(4, {scaled({1, s5, s5, s5}, 4), scaled({s5, -1, s5, -s5}, 4),
                       scaled({s5, -s5, -1, s5}, 4), scaled({s5, s5, -s5, -1}, 4)});
    }
    default:
      throw std::invalid_argument("example_basis_dplus1: only d = 2, 3, 4 are tabulated");
  }
}

MeasurementEnsemble trine_pair_ensemble() {
  const double s3 = std::sqrt(3.0);
  const CVec v0 = scaled({1, s3}, 2);
  const CVec v1 = scaled({s3, -1}, 2);
  const ComplexMatrix z = weyl_z(2);
  std::vector<Povm> povms;
  for (std::size_t i = 0; i < 2; ++i) {
    const CVec& v = i == 0 ? v0 : v1;
    CVec comp(2);
    comp[i] = 1.0;
    povms.push_back(rank_one_povm(2, {v, matvec(z, v), comp}, 2.0 / 3.0));
  }
  return MeasurementEnsemble(std::move(povms), uniform_priors(2));
}

std::vector<Povm> projective_proof_bob(const std::vector<Basis>& bases) {
  const std::size_t n = bases.size();
  if (n == 0) throw std::invalid_argument("projective_proof_bob: empty input");
  const std::size_t d = bases.front().dim;
  std::vector<Povm> bob;
  bob.reserve(d);
  for (std::size_t a = 0; a < d; ++a) {
    std::vector<ComplexMatrix> elems;
    elems.reserve(n);
    for (std::size_t x = 0; x < n; ++x)
      elems.push_back(outer(bases[x].vectors[a], bases[x].vectors[a]).transpose());
    bob.emplace_back(d, std::move(elems));
  }
  return bob;
}

std::vector<Povm> weyl_proof_bob(const Basis& basis) {
  const std::size_t d = basis.dim;
  std::vector<Povm> bob;
  bob.reserve(d * d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = 0; l < d; ++l) {
      const ComplexMatrix u = weyl_unitary(k, l, d);
      std::vector<ComplexMatrix> elems;
      elems.reserve(d);
      for (std::size_t x = 0; x < d; ++x) {
        const CVec ket = matvec(u, basis.vectors[x]);
        elems.push_back(outer(ket, ket).transpose());
      }
      bob.emplace_back(d, std::move(elems));
    }
  return bob;
}

std::vector<Povm> dplus1_proof_bob(const Basis& basis) {
  const std::size_t d = basis.dim;
  std::vector<Povm> bob;
  bob.reserve(d + 1);
  for (std::size_t a = 0; a <= d; ++a) {
    std::vector<ComplexMatrix> elems;
    elems.reserve(d);
    for (std::size_t x = 0; x < d; ++x) {
      const CVec eta = dplus1_eta_vectors(basis, x)[a];
      elems.push_back(outer(eta, eta).transpose());
    }
    bob.emplace_back(d, std::move(elems));
  }
  return bob;
}

MeasurementEnsemble ensemble_from_tag(const std::string& tag) {
  const auto parts = split_tag(tag);
  if (parts[0] == "table1" && parts.size() == 1) return table1_projective_ensemble();
  if (parts[0] == "trine" && parts.size() == 1) return trine_pair_ensemble();
  if (parts[0] == "ic" && parts.size() == 2) {
    const std::size_t d = parse_dim(parts[1]);
    if (d == 2) return weyl_covariant_povm_ensemble(magic_qubit_basis_canonical());
    if (d == 3) return weyl_covariant_povm_ensemble(ic_basis_d3());
    if (d == 4)
      return weyl_covariant_povm_ensemble(tensor_power_basis(magic_qubit_basis_canonical(), 2));
    throw std::invalid_argument("ic ensembles are tabulated for d = 2, 3, 4 only");
  }
  if (parts[0] == "dplus1" && parts.size() == 2)
    return dplus1_povm_ensemble(example_basis_dplus1(parse_dim(parts[1])));
  if (parts[0] == "weyl" && parts.size() == 3) {
    const std::size_t d = parse_dim(parts[1]);
    return weyl_covariant_povm_ensemble(basis_from_tag(d, parts[2]));
  }
  throw std::invalid_argument("unknown ensemble tag: " + tag);
}

std::vector<Povm> proof_bob_from_tag(const std::string& tag) {
  const auto parts = split_tag(tag);
  if (parts[0] == "table1" && parts.size() == 1) return projective_proof_bob(table1_bases());
  if (parts[0] == "trine" && parts.size() == 1) return dplus1_proof_bob(example_basis_dplus1(2));
  if (parts[0] == "ic" && parts.size() == 2) {
    const std::size_t d = parse_dim(parts[1]);
    if (d == 2) return weyl_proof_bob(magic_qubit_basis_canonical());
    if (d == 3) return weyl_proof_bob(ic_basis_d3());
    if (d == 4) return weyl_proof_bob(tensor_power_basis(magic_qubit_basis_canonical(), 2));
    throw std::invalid_argument("ic ensembles are tabulated for d = 2, 3, 4 only");
  }
  if (parts[0] == "dplus1" && parts.size() == 2)
    return dplus1_proof_bob(example_basis_dplus1(parse_dim(parts[1])));
  if (parts[0] == "weyl" && parts.size() == 3) {
    const std::size_t d = parse_dim(parts[1]);
    return weyl_proof_bob(basis_from_tag(d, parts[2]));
  }
  throw std::invalid_argument("unknown ensemble tag: " + tag);
}

ConditionReport condition_report_from_tag(const std::string& tag) {
  const auto parts = split_tag(tag);
  if (parts[0] == "table1" && parts.size() == 1)
    return check_projective_advantage_conditions(table1_bases());
  if (parts[0] == "trine" && parts.size() == 1) return check_condd1(example_basis_dplus1(2));
  if (parts[0] == "dplus1" && parts.size() == 2)
    return check_condd1(example_basis_dplus1(parse_dim(parts[1])));
  if (parts[0] == "ic" && parts.size() == 2) {
    const std::size_t d = parse_dim(parts[1]);
    if (d == 2) return check_ic_condition(magic_qubit_basis_canonical());
    if (d == 3) return check_ic_condition(ic_basis_d3());
    if (d == 4) return check_ic_condition(tensor_power_basis(magic_qubit_basis_canonical(), 2));
    throw std::invalid_argument("ic ensembles are tabulated for d = 2, 3, 4 only");
  }
  if (parts[0] == "weyl" && parts.size() == 3) {
    const std::size_t d = parse_dim(parts[1]);
    return check_cond(basis_from_tag(d, parts[2]));
  }
  throw std::invalid_argument("unknown ensemble tag: " + tag);
}

std::vector<std::string> known_tags() {
  return {"table1",   "trine",       "ic:2",          "ic:3",
          "ic:4",     "dplus1:2",    "dplus1:3",      "dplus1:4",
          "weyl:<d>:comp", "weyl:2:magic", "weyl:3:ic3", "weyl:4:magic2",
          "weyl:<d>:sarkar"};
}

std::size_t count_projective_advantage_random(std::size_t d, std::size_t trials,
                                             std::uint64_t seed) {
  Rng rng(seed);
  std::size_t hits = 0;
  std::vector<Basis> bases(d);
  for (std::size_t t = 0; t < trials; ++t) {
    for (std::size_t x = 0; x < d; ++x) {
      const ComplexMatrix u = random_unitary(d, rng);
      std::vector<CVec> cols(d, CVec(d));
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t i = 0; i < d; ++i) cols[a][i] = u(i, a);
      bases[x] = Basis(d, std::move(cols));
    }
    if (check_projective_advantage_conditions(bases).satisfied) ++hits;
  }
  return hits;
}

}  // namespace mdisc
