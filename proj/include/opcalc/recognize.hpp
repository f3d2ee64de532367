#pragma once

#include <optional>
#include <string>
#include <vector>

#include "opcalc/presentation.hpp"

namespace opcalc {

// Candidate generator i is sent to sign[i] * target generator perm[i],
// opposed when flip[i] is set (NonSym only).
struct GenTransform {
  std::vector<int> perm;
  std::vector<int> sign;
  std::vector<bool> flip;

  bool is_identity() const;
  static GenTransform identity(std::size_t n);
};

std::vector<Element2> images(const GenTransform& t);

// Candidate transported onto the target signature by t.
OperadPresentation apply(const GenTransform& t, const OperadPresentation& candidate,
                         const Signature& target);

// Same shape, same generator order, equal relation spaces.
bool equal_presentations(const OperadPresentation& a, const OperadPresentation& b);

std::string to_string(const GenTransform& t, const Signature& candidate, const Signature& target);

struct Match {
  std::string key;
  GenTransform transform;
};

struct MatchOptions {
  std::size_t max_transforms = 1000000;
  // stop after the first transform per candidate
  bool first_only = false;
};

// Transforms t with apply(t, candidate) == o, in enumeration order; nullopt
// when the group is larger than the bound.
std::optional<std::vector<GenTransform>> find_transforms(const OperadPresentation& o,
                                                         const OperadPresentation& candidate,
                                                         const MatchOptions& opts = {});

// Candidates: every zoo key plus the mag entry of o's shape when keys is empty.
std::vector<Match> match_zoo(const OperadPresentation& o, const std::vector<std::string>& keys = {},
                             const MatchOptions& opts = {},
                             std::vector<std::string>* warnings = nullptr);

// Convenience for suites: does o match the named entry under some transform.
bool recognized_as(const OperadPresentation& o, const std::string& key);

}  // namespace opcalc
