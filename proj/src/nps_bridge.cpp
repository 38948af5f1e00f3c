#include "extprob/nps_bridge.hpp"

#include <stdexcept>

namespace extprob {

NonstdMeasure lps_to_nps(const LPS& lps) {
  std::vector<NonstdNumber> coeffs(lps.size());
  NonstdNumber head(1);
  for (std::size_t i = 1; i < lps.size(); ++i) {
    coeffs[i] = NonstdNumber::eps(static_cast<std::uint32_t>(i));
    head -= coeffs[i];
  }
  coeffs[0] = head;
  return recompose(lps, coeffs);
}

NonstdMeasure recompose(const LPS& lps, const std::vector<NonstdNumber>& coefficients) {
  if (coefficients.size() != lps.size())
    throw Error(ErrorKind::LengthMismatch, std::to_string(coefficients.size()) + " coefficients for an LPS of length " +
                                               std::to_string(lps.size()));
  NonstdMeasure out{std::vector<NonstdNumber>(lps.num_atoms())};
  for (std::size_t i = 0; i < lps.size(); ++i)
    for (std::size_t a = 0; a < lps.num_atoms(); ++a)
      if (lps[i].mass[a] != 0) out.mass[a] += coefficients[i] * NonstdNumber(lps[i].mass[a]);
  return out;
}

namespace {

std::vector<Rational> standard_vector(const std::vector<NonstdNumber>& v) {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(standard_part(x));
  return out;
}

bool all_zero(const std::vector<NonstdNumber>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace

Decomposition nps_to_lps(const NonstdMeasure& nu) {
  const auto report = validate_measure(nu, nu.num_atoms());
  if (!report.ok()) throw Error(ErrorKind::InvalidArgument, report.issues.front());
  const std::size_t n = nu.num_atoms();

  // nu = sum_j eps_j b_j with standard b_j and st(eps_{j+1}/eps_j) = 0.
  std::vector<std::vector<Rational>> b;
  std::vector<NonstdNumber> scale{NonstdNumber(1)};
  std::vector<NonstdNumber> cur = nu.mass;
  while (true) {
    b.push_back(standard_vector(cur));
    std::vector<NonstdNumber> residual(n);
    for (std::size_t a = 0; a < n; ++a) residual[a] = cur[a] - NonstdNumber(b.back()[a]);
    if (all_zero(residual)) break;
    NonstdNumber biggest;
    for (const auto& r : residual)
      if (abs(r) > biggest) biggest = abs(r);
    for (auto& r : residual) r /= biggest;
    scale.push_back(scale.back() * biggest);
    cur = std::move(residual);
  }

  std::vector<StdMeasure> levels{StdMeasure{b[0]}};
  std::vector<NonstdNumber> coeffs{NonstdNumber(1)};
  std::vector<Rational> cumulative = b[0];
  for (std::size_t m = 1; m < b.size(); ++m) {
    mpz_class shift = 1;
    for (std::size_t a = 0; a < n; ++a) {
      if (b[m][a] >= 0) continue;
      if (cumulative[a] == 0) throw std::logic_error("nps_to_lps: negative residual on an atom no earlier level covers");
      const Rational need = -b[m][a] / cumulative[a];
      mpz_class up;
      mpz_cdiv_q(up.get_mpz_t(), need.get_num_mpz_t(), need.get_den_mpz_t());
      if (up > shift) shift = up;
    }
    std::vector<Rational> lifted(n);
    Rational total = 0;
    for (std::size_t a = 0; a < n; ++a) {
      lifted[a] = Rational(shift) * cumulative[a] + b[m][a];
      total += lifted[a];
    }
    for (auto& q : lifted) q /= total;
    const NonstdNumber drop = NonstdNumber(Rational(shift)) * scale[m];
    for (auto& c : coeffs) c -= drop;
    coeffs.push_back(NonstdNumber(total) * scale[m]);
    for (std::size_t a = 0; a < n; ++a) cumulative[a] += lifted[a];
    levels.push_back(StdMeasure{std::move(lifted)});
  }
  Decomposition d{LPS(std::move(levels)), std::move(coeffs)};
  if (recompose(d.lps, d.coefficients) != nu) throw std::logic_error("nps_to_lps: recomposition mismatch");
  return d;
}

PopperSpace nps_to_popper(const NonstdMeasure& nu) {
  PopperSpace out;
  out.num_atoms = nu.num_atoms();
  for (Event u : all_events(out.num_atoms)) {
    const NonstdNumber total = measure_event(nu, u);
    if (total.is_zero()) continue;
    StdMeasure m{std::vector<Rational>(out.num_atoms)};
    for (std::size_t a : u.indices())
      if (!nu.mass[a].is_zero()) m.mass[a] = standard_part_of_ratio(nu.mass[a], total);
    out.table.emplace(u, std::move(m));
  }
  return out;
}

std::strong_ordering nps_expect_cmp(const NonstdMeasure& nu, const RandomVariable& x, const RandomVariable& y) {
  return expect(nu, x) <=> expect(nu, y);
}

EquivCertificate nps_aeq(const NonstdMeasure& a, const NonstdMeasure& b) {
  require_same_algebra(a.num_atoms(), b.num_atoms(), "nps_equiv");
  const auto da = nps_to_lps(a);
  const auto db = nps_to_lps(b);
  auto cert = lps_equiv(da.lps, db.lps);
  if (cert.witness) {
    const auto& [x, y] = *cert.witness;
    if (nps_expect_cmp(a, x, y) == nps_expect_cmp(b, x, y))
      throw std::logic_error("nps_equiv: witness does not separate the nonstandard measures");
  }
  return cert;
}

bool nps_simeq(const NonstdMeasure& a, const NonstdMeasure& b) {
  require_same_algebra(a.num_atoms(), b.num_atoms(), "nps_equiv");
  return nps_to_popper(a) == nps_to_popper(b);
}

bool verify_aeqchar(const LPS& lps, const std::vector<NonstdNumber>& coefficients) {
  if (coefficients.size() != lps.size())
    throw Error(ErrorKind::LengthMismatch, std::to_string(coefficients.size()) + " coefficients for an LPS of length " +
                                               std::to_string(lps.size()));
  NonstdNumber sum;
  for (const auto& c : coefficients) {
    if (c.sign() <= 0) return false;
    sum += c;
  }
  if (sum != NonstdNumber(1)) return false;
  for (std::size_t i = 0; i + 1 < coefficients.size(); ++i)
    if (classify(coefficients[i + 1] / coefficients[i]).magnitude != Magnitude::Infinitesimal) return false;
  const auto decomposed = nps_to_lps(recompose(lps, coefficients));
  return lps_equiv(decomposed.lps, lps).equivalent();
}

}  // namespace extprob
