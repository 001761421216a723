#pragma once

#include <string>
#include <vector>

#include "renormlab/rho.hpp"

namespace renormlab {

struct CertificateCheck {
  bool valid = true;
  /// One line per failed entry; empty when valid.
  std::vector<std::string> errors;
  std::size_t entries_checked = 0;
};

/// Re-checks a fragmentation certificate from its own contents and ρ alone: the
/// examined sets (all nonempty subsets in exhaustive mode, the residual sequence in
/// scheme mode), maximality of the chosen point, the slice, the cylinder bound on all
/// of K and the pairwise d < 2ε inside each slice.
CertificateCheck validate_certificate(const FragmentationCertificate& cert);

}  // namespace renormlab
