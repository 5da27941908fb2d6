#pragma once

// Property-group verification suite. Every group draws its instances from a
// seeded stream, compares fast paths against direct enumeration or against
// the stated inequalities, and reports counts plus named metrics (empirical
// constants that callers may pin as baselines).

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace morrey {

struct VerifyOptions {
  int max_dim = 2;
  double scale = 1.0;  ///< multiplies every trial count
  unsigned threads = 1;
  std::uint64_t seed = 20240917;

  std::size_t count(std::size_t base) const;
};

struct GroupResult {
  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  double seconds = 0.0;
  std::vector<std::string> notes;  ///< first few failure descriptions
  std::map<std::string, double> metrics;

  bool passed() const { return failures == 0; }

  template <typename Describe>
  bool expect(bool ok, Describe&& describe) {
    ++checks;
    if (!ok) {
      ++failures;
      if (notes.size() < 5) notes.push_back(describe());
    }
    return ok;
  }
};

const std::vector<std::string>& verify_group_names();

GroupResult verify_cube_sums(const VerifyOptions& opt);
GroupResult verify_morrey_truncation(const VerifyOptions& opt);
GroupResult verify_maximal_oracle(const VerifyOptions& opt);
GroupResult verify_equivalence(const VerifyOptions& opt);
GroupResult verify_sup_bound(const VerifyOptions& opt);
GroupResult verify_fefferman_stein(const VerifyOptions& opt);
GroupResult verify_maximal_boundedness(const VerifyOptions& opt);
GroupResult verify_sandwich(const VerifyOptions& opt);
GroupResult verify_hedberg(const VerifyOptions& opt);
GroupResult verify_riesz(const VerifyOptions& opt);

GroupResult verify_group(const std::string& name, const VerifyOptions& opt);
std::vector<GroupResult> verify_all(const VerifyOptions& opt);

}  // namespace morrey
