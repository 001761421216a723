#include "renormlab/certificate.hpp"

#include <algorithm>
#include <map>

namespace renormlab {

namespace {

// Kept local on purpose: no helpers from the producer side.
struct View {
  std::vector<std::vector<Rational>> coords;  // dense coordinates per point
  std::map<std::vector<Rational>, std::size_t> by_coords;
  const RhoFunction* rho;

  explicit View(const RhoFunction& r) : rho(&r) {
    const std::size_t dim = r.gamma()->size();
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::vector<Rational> c(dim);
      const ConePoint& p = r.point(i);
      for (std::size_t g = 0; g < dim; ++g) c[g] = p.subset.contains(g) ? p.scale : Rational(0);
      by_coords.emplace(c, i);
      coords.push_back(std::move(c));
    }
  }

  bool agree(std::size_t a, std::size_t b, const Subset& f) const {
    for (std::size_t g = f.first(); g < f.universe(); g = f.next(g)) {
      if (coords[a][g] != coords[b][g]) return false;
    }
    return true;
  }

  /// d(a,b), or nullopt when the meet is missing.
  std::optional<Rational> d(std::size_t a, std::size_t b) const {
    std::vector<Rational> m(coords[a].size());
    for (std::size_t g = 0; g < m.size(); ++g) m[g] = std::min(coords[a][g], coords[b][g]);
    const auto it = by_coords.find(m);
    if (it == by_coords.end()) return std::nullopt;
    const Rational& va = rho->value(a);
    const Rational& vb = rho->value(b);
    return Rational((va > vb ? va : vb) - rho->value(it->second));
  }
};

void check_entry(const View& v, const FragmentationCertificate& cert, const FragmentEntry& e,
                 const std::vector<std::size_t>& examined, const std::string& tag, CertificateCheck& out) {
  const RhoFunction& rho = *v.rho;
  auto fail = [&](const std::string& why) {
    out.valid = false;
    out.errors.push_back(tag + ": " + why);
  };
  if (!std::binary_search(examined.begin(), examined.end(), e.chosen)) return fail("chosen point not in the set");
  for (std::size_t y : examined) {
    if (rho.value(y) > rho.value(e.chosen)) return fail("chosen point does not maximize rho");
  }
  if (e.coordinates.universe() != rho.gamma()->size()) return fail("coordinate set over the wrong index set");
  std::vector<std::size_t> slice;
  for (std::size_t y : examined) {
    if (v.agree(y, e.chosen, e.coordinates)) slice.push_back(y);
  }
  if (slice != e.slice) return fail("recorded slice differs from E intersected with the cylinder");
  if (slice.empty()) return fail("empty slice");
  const Rational floor = rho.value(e.chosen) - cert.epsilon;
  for (std::size_t y = 0; y < rho.size(); ++y) {
    if (v.agree(y, e.chosen, e.coordinates) && !(rho.value(y) > floor)) {
      return fail("cylinder contains a point with rho <= rho(x) - eps");
    }
  }
  Rational diam(0);
  for (std::size_t i = 0; i < slice.size(); ++i) {
    for (std::size_t j = i + 1; j < slice.size(); ++j) {
      const auto d = v.d(slice[i], slice[j]);
      if (!d) return fail("meet of two slice points is outside the domain");
      if (!(*d < 2 * cert.epsilon)) return fail("slice pair with d >= 2 eps");
      if (*d > diam) diam = *d;
    }
  }
  if (diam != e.diameter) fail("recorded diameter " + to_string(e.diameter) + " != " + to_string(diam));
}

}  // namespace

CertificateCheck validate_certificate(const FragmentationCertificate& cert) {
  CertificateCheck out;
  const RhoFunction& rho = cert.rho;
  if (cert.epsilon <= 0) {
    out.valid = false;
    out.errors.push_back("epsilon must be positive");
    return out;
  }
  if (rho.size() == 0) {
    out.valid = false;
    out.errors.push_back("empty domain");
    return out;
  }
  const View v(rho);
  for (const auto& e : cert.entries) {
    if (e.chosen >= rho.size()) {
      out.valid = false;
      out.errors.push_back("entry refers to a point outside the domain");
      return out;
    }
    for (std::size_t y : e.slice) {
      if (y >= rho.size()) {
        out.valid = false;
        out.errors.push_back("slice refers to a point outside the domain");
        return out;
      }
    }
  }
  if (cert.mode == FragmentMode::exhaustive) {
    const std::size_t n = rho.size();
    if (n >= 63) {
      out.valid = false;
      out.errors.push_back("exhaustive certificate over more than 62 points");
      return out;
    }
    const std::uint64_t total = std::uint64_t{1} << n;
    std::vector<bool> seen(total, false);
    for (const auto& e : cert.entries) {
      const std::string tag = "subset " + std::to_string(e.subset_mask);
      if (e.subset_mask == 0 || e.subset_mask >= total || seen[e.subset_mask]) {
        out.valid = false;
        out.errors.push_back(tag + ": empty, out of range or repeated");
        continue;
      }
      seen[e.subset_mask] = true;
      std::vector<std::size_t> examined;
      for (std::size_t i = 0; i < n; ++i) {
        if (e.subset_mask >> i & 1U) examined.push_back(i);
      }
      check_entry(v, cert, e, examined, tag, out);
      ++out.entries_checked;
    }
    if (cert.entries.size() != total - 1) {
      out.valid = false;
      out.errors.push_back("expected " + std::to_string(total - 1) + " entries, found " +
                           std::to_string(cert.entries.size()));
    }
  } else {
    std::vector<std::size_t> residual(rho.size());
    for (std::size_t i = 0; i < residual.size(); ++i) residual[i] = i;
    for (std::size_t k = 0; k < cert.entries.size(); ++k) {
      const auto& e = cert.entries[k];
      const std::string tag = "step " + std::to_string(k);
      if (e.step != k) {
        out.valid = false;
        out.errors.push_back(tag + ": steps out of sequence");
      }
      if (residual.empty()) {
        out.valid = false;
        out.errors.push_back(tag + ": entries past the end of the sequence");
        break;
      }
      const bool before = out.valid;
      check_entry(v, cert, e, residual, tag, out);
      ++out.entries_checked;
      if (before && !out.valid) break;
      std::vector<std::size_t> next;
      std::set_difference(residual.begin(), residual.end(), e.slice.begin(), e.slice.end(),
                          std::back_inserter(next));
      residual = std::move(next);
    }
    if (!residual.empty() && out.valid) {
      out.valid = false;
      out.errors.push_back("sequence stops before exhausting the domain");
    }
  }
  return out;
}

}  // namespace renormlab
