#include "extprob/lps.hpp"

#include <algorithm>
#include <stdexcept>

#include "linalg.hpp"

namespace extprob {

using detail::Vec;

LPS::LPS(std::vector<StdMeasure> ms) : measures(std::move(ms)) {
  if (measures.empty()) throw Error(ErrorKind::InvalidArgument, "an LPS needs at least one measure");
  for (const auto& m : measures) require_same_algebra(measures.front().num_atoms(), m.num_atoms(), "LPS levels");
}

ValidationReport validate_lps(const LPS& lps) {
  ValidationReport r;
  for (std::size_t i = 0; i < lps.size(); ++i) {
    auto sub = validate_measure(lps[i], lps.num_atoms(), "level " + std::to_string(i));
    r.issues.insert(r.issues.end(), sub.issues.begin(), sub.issues.end());
  }
  return r;
}

std::vector<Rational> lps_measure_event(const LPS& lps, Event e) {
  std::vector<Rational> out;
  out.reserve(lps.size());
  for (const auto& m : lps.measures) out.push_back(measure_event(m, e));
  return out;
}

std::optional<std::size_t> first_positive_level(const LPS& lps, Event e) {
  for (std::size_t i = 0; i < lps.size(); ++i)
    if (measure_event(lps[i], e) > 0) return i;
  return std::nullopt;
}

LPS lps_condition(const LPS& lps, Event u) {
  std::vector<StdMeasure> out;
  for (const auto& m : lps.measures)
    if (measure_event(m, u) > 0) out.push_back(condition(m, u));
  if (out.empty())
    throw Error(ErrorKind::ZeroConditioningEvent, "every level gives " + to_string(u) + " probability 0");
  return LPS(std::move(out));
}

std::vector<Rational> lps_expect(const LPS& lps, const RandomVariable& x) {
  std::vector<Rational> out;
  out.reserve(lps.size());
  for (const auto& m : lps.measures) out.push_back(expect(m, x));
  return out;
}

std::strong_ordering lps_expect_cmp(const LPS& lps, const RandomVariable& x, const RandomVariable& y) {
  require_same_algebra(x.num_atoms(), y.num_atoms(), "expectation comparison");
  for (const auto& m : lps.measures) {
    const Rational ex = expect(m, x);
    const Rational ey = expect(m, y);
    if (ex < ey) return std::strong_ordering::less;
    if (ex > ey) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

LpsClassification classify_lps(const LPS& lps) {
  LpsClassification c;
  for (const auto& m : lps.measures) c.support_witnesses.push_back(support(m));
  const auto& s = c.support_witnesses;
  bool later_null = true;
  bool all_null = true;
  bool disjoint = true;
  for (std::size_t b = 0; b < lps.size(); ++b) {
    for (std::size_t g = 0; g < lps.size(); ++g) {
      if (g == b) continue;
      const bool null = measure_event(lps[b], s[g]) == 0;
      if (!null) {
        all_null = false;
        if (g > b) later_null = false;
      }
      if (!s[b].disjoint(s[g])) disjoint = false;
    }
  }
  c.is_slps = later_null;
  c.is_mslps = all_null;
  c.is_lcps = disjoint;
  return c;
}

LPS reduce_lps(const LPS& lps) {
  std::vector<Vec> kept;
  std::vector<StdMeasure> out;
  for (const auto& m : lps.measures) {
    if (detail::in_span(kept, m.mass)) continue;
    kept.push_back(m.mass);
    out.push_back(m);
  }
  return LPS(std::move(out));
}

namespace {

std::vector<Vec> masses(const std::vector<StdMeasure>& ms) {
  std::vector<Vec> out;
  for (const auto& m : ms) out.push_back(m.mass);
  return out;
}

// Triangular coefficients expressing each `to` level through `from` levels.
// Returns the index of the first level that fails, or nullopt on success.
std::optional<std::size_t> triangular(const std::vector<Vec>& from, const std::vector<Vec>& to, RationalMatrix& t) {
  t.assign(to.size(), std::vector<Rational>(from.size()));
  for (std::size_t j = 0; j < to.size(); ++j) {
    if (j >= from.size()) return j;
    const std::vector<Vec> prefix(from.begin(), from.begin() + static_cast<std::ptrdiff_t>(j) + 1);
    auto coeffs = detail::span_coefficients(prefix, to[j]);
    if (!coeffs || (*coeffs)[j] <= 0) return j;
    for (std::size_t i = 0; i <= j; ++i) t[j][i] = (*coeffs)[i];
  }
  if (from.size() > to.size()) return to.size();
  return std::nullopt;
}

// Z orthogonal to `zero_rows` with prescribed products against `target_rows`.
Vec separating_vector(const std::vector<Vec>& zero_rows, const std::vector<std::pair<Vec, Rational>>& targets,
                      std::size_t n) {
  detail::Mat a;
  Vec b;
  for (const auto& r : zero_rows) {
    a.push_back(r);
    b.push_back(0);
  }
  for (const auto& [row, value] : targets) {
    a.push_back(row);
    b.push_back(value);
  }
  auto z = detail::solve(a, b, n);
  if (!z) throw std::logic_error("separating system unexpectedly inconsistent");
  return detail::primitive_integer(*z);
}

std::pair<RandomVariable, RandomVariable> split(const Vec& z) {
  RandomVariable x{Vec(z.size())};
  RandomVariable y{Vec(z.size())};
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i] > 0) x.value[i] = z[i];
    if (z[i] < 0) y.value[i] = -z[i];
  }
  return {std::move(x), std::move(y)};
}

bool is_lower_triangular_positive(const RationalMatrix& t, std::size_t n) {
  if (t.size() != n) return false;
  for (std::size_t j = 0; j < n; ++j) {
    if (t[j].size() != n || t[j][j] <= 0) return false;
    for (std::size_t i = j + 1; i < n; ++i)
      if (t[j][i] != 0) return false;
  }
  return true;
}

bool transforms(const RationalMatrix& t, const std::vector<StdMeasure>& from, const std::vector<StdMeasure>& to) {
  for (std::size_t j = 0; j < to.size(); ++j) {
    for (std::size_t a = 0; a < to[j].num_atoms(); ++a) {
      Rational s = 0;
      for (std::size_t i = 0; i < from.size(); ++i) s += t[j][i] * from[i].mass[a];
      if (s != to[j].mass[a]) return false;
    }
  }
  return true;
}

}  // namespace

EquivCertificate lps_equiv(const LPS& a, const LPS& b) {
  require_same_algebra(a.num_atoms(), b.num_atoms(), "lps_equiv");
  const std::size_t n = a.num_atoms();
  EquivCertificate cert;
  cert.reduced_a = reduce_lps(a).measures;
  cert.reduced_b = reduce_lps(b).measures;
  const auto va = masses(cert.reduced_a);
  const auto vb = masses(cert.reduced_b);

  RationalMatrix fwd;
  const auto fail = triangular(va, vb, fwd);
  if (!fail) {
    cert.verdict = Verdict::Equivalent;
    cert.forward = std::move(fwd);
    if (triangular(vb, va, cert.backward))
      throw std::logic_error("lps_equiv: backward transform missing for an equivalent pair");
  } else {
    const std::size_t j = *fail;
    const std::vector<Vec> common(va.begin(), va.begin() + static_cast<std::ptrdiff_t>(std::min(j, va.size())));
    Vec z;
    if (j >= va.size()) {
      z = separating_vector(common, {{vb[j], Rational(1)}}, n);
    } else if (j >= vb.size()) {
      z = separating_vector(common, {{va[j], Rational(1)}}, n);
    } else {
      auto with_j = common;
      with_j.push_back(va[j]);
      if (detail::in_span(with_j, vb[j]))
        z = separating_vector(common, {{va[j], Rational(1)}}, n);
      else
        z = separating_vector(common, {{va[j], Rational(1)}, {vb[j], Rational(-1)}}, n);
    }
    cert.verdict = Verdict::Inequivalent;
    cert.witness = split(z);
  }
  if (!check_certificate(a, b, cert)) throw std::logic_error("lps_equiv: certificate failed its self-check");
  return cert;
}

bool check_certificate(const LPS& a, const LPS& b, const EquivCertificate& cert) {
  if (cert.verdict == Verdict::Inequivalent) {
    if (!cert.witness) return false;
    const auto& [x, y] = *cert.witness;
    if (x.num_atoms() != a.num_atoms() || y.num_atoms() != a.num_atoms()) return false;
    return lps_expect_cmp(a, x, y) != lps_expect_cmp(b, x, y);
  }
  if (cert.reduced_a != reduce_lps(a).measures || cert.reduced_b != reduce_lps(b).measures) return false;
  const std::size_t k = cert.reduced_a.size();
  if (cert.reduced_b.size() != k) return false;
  return is_lower_triangular_positive(cert.forward, k) && is_lower_triangular_positive(cert.backward, k) &&
         transforms(cert.forward, cert.reduced_a, cert.reduced_b) &&
         transforms(cert.backward, cert.reduced_b, cert.reduced_a);
}

}  // namespace extprob
