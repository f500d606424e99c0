#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "idem/semiring.hpp"

namespace idem {

/// Draws a carrier element: mostly finite values in [-10, 10], with the zero,
/// the unity and (where the carrier has one) the extra infinity mixed in.
Element random_element(const Semiring& s, std::mt19937_64& rng);

struct LawResult {
  std::string law;
  bool checked = true;  ///< false when the law does not apply to this semiring
  std::size_t failures = 0;
  std::string counterexample;

  bool ok() const { return failures == 0; }
};

/// Runs the semiring axioms (plus order consistency and the star fixed point)
/// over `samples` random triples.
std::vector<LawResult> check_laws(const Semiring& s, std::size_t samples, std::uint64_t seed);

}  // namespace idem
