#include "opcalc/recognize.hpp"

#include <algorithm>
#include <cmath>

namespace opcalc {

bool GenTransform::is_identity() const {
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] != static_cast<int>(i) || sign[i] != 1 || flip[i]) return false;
  }
  return true;
}

GenTransform GenTransform::identity(std::size_t n) {
  GenTransform t;
  for (std::size_t i = 0; i < n; ++i) {
    t.perm.push_back(static_cast<int>(i));
    t.sign.push_back(1);
    t.flip.push_back(false);
  }
  return t;
}

std::vector<Element2> images(const GenTransform& t) {
  std::vector<Element2> out;
  for (std::size_t i = 0; i < t.perm.size(); ++i) {
    out.push_back(Element2::term(t.perm[i], t.flip[i] ? Orientation::Op : Orientation::Id, t.sign[i]));
  }
  return out;
}

OperadPresentation apply(const GenTransform& t, const OperadPresentation& candidate,
                         const Signature& target) {
  auto im = images(t);
  RrefBuilder b(target.dim3());
  for (const auto& r : candidate.relations.basis()) b.add(substitute(candidate.signature, r, im, target));
  return from_relations(candidate.name, target, b.finish());
}

bool equal_presentations(const OperadPresentation& a, const OperadPresentation& b) {
  return same_operad(a, b);
}

std::string to_string(const GenTransform& t, const Signature& candidate, const Signature& target) {
  if (t.is_identity()) {
    for (std::size_t i = 0; i < candidate.size(); ++i) {
      if (candidate[i].name != target[i].name) return "identity up to naming";
    }
    return "identity";
  }
  std::string out;
  for (std::size_t i = 0; i < t.perm.size(); ++i) {
    if (!out.empty()) out += ", ";
    out += candidate[i].name + " -> " + (t.sign[i] < 0 ? "-" : "") + target[t.perm[i]].name +
           (t.flip[i] ? "^op" : "");
  }
  return out;
}

namespace {

struct Classes {
  // per symmetry class: candidate indices and target indices
  std::vector<std::vector<int>> cand, target;
};

std::optional<Classes> classes(const Signature& c, const Signature& o) {
  Classes cl;
  cl.cand.resize(3);
  cl.target.resize(3);
  for (std::size_t i = 0; i < c.size(); ++i) cl.cand[static_cast<int>(c[i].symmetry)].push_back(i);
  for (std::size_t i = 0; i < o.size(); ++i) cl.target[static_cast<int>(o[i].symmetry)].push_back(i);
  for (int k = 0; k < 3; ++k) {
    if (cl.cand[k].size() != cl.target[k].size()) return std::nullopt;
  }
  return cl;
}

double factorial(std::size_t n) {
  double f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<double>(i);
  return f;
}

bool matches(const GenTransform& t, const OperadPresentation& o, const OperadPresentation& c) {
  auto im = images(t);
  for (const auto& r : c.relations.basis()) {
    if (!o.relations.contains(substitute(c.signature, r, im, o.signature))) return false;
  }
  return true;
}

}  // namespace

std::optional<std::vector<GenTransform>> find_transforms(const OperadPresentation& o,
                                                         const OperadPresentation& candidate,
                                                         const MatchOptions& opts) {
  std::vector<GenTransform> found;
  auto cl = classes(candidate.signature, o.signature);
  if (!cl || o.dim_relations() != candidate.dim_relations()) return found;
  const std::size_t n = o.signature.size();
  std::size_t p = cl->cand[0].size();
  double group = std::ldexp(1.0, static_cast<int>(n + p));
  for (const auto& t : cl->target) group *= factorial(t.size());
  if (group > static_cast<double>(opts.max_transforms)) return std::nullopt;

  // permutations of each class, identity first
  std::vector<std::vector<std::vector<int>>> perms(3);
  for (int k = 0; k < 3; ++k) {
    std::vector<int> t = cl->target[k];
    std::sort(t.begin(), t.end());
    do perms[k].push_back(t);
    while (std::next_permutation(t.begin(), t.end()));
  }
  GenTransform t = GenTransform::identity(n);
  for (const auto& p0 : perms[0]) {
    for (const auto& p1 : perms[1]) {
      for (const auto& p2 : perms[2]) {
        const std::vector<int>* chosen[3] = {&p0, &p1, &p2};
        for (int k = 0; k < 3; ++k) {
          for (std::size_t j = 0; j < cl->cand[k].size(); ++j) t.perm[cl->cand[k][j]] = (*chosen[k])[j];
        }
        for (std::size_t sm = 0; sm < (std::size_t{1} << n); ++sm) {
          for (std::size_t i = 0; i < n; ++i) t.sign[i] = (sm >> i) & 1 ? -1 : 1;
          for (std::size_t fm = 0; fm < (std::size_t{1} << p); ++fm) {
            for (std::size_t i = 0; i < n; ++i) t.flip[i] = false;
            for (std::size_t j = 0; j < p; ++j) t.flip[cl->cand[0][j]] = (fm >> j) & 1;
            if (matches(t, o, candidate)) {
              found.push_back(t);
              if (opts.first_only) return found;
            }
          }
        }
      }
    }
  }
  return found;
}

std::vector<Match> match_zoo(const OperadPresentation& o, const std::vector<std::string>& keys,
                             const MatchOptions& opts, std::vector<std::string>* warnings) {
  std::vector<std::string> cands = keys;
  if (cands.empty()) {
    cands = zoo_keys();
    cands.push_back(mag_key(o.signature.p(), o.signature.q(), o.signature.r()));
  }
  std::vector<Match> out;
  for (const auto& k : cands) {
    OperadPresentation c = zoo_get(k);
    if (c.signature.p() != o.signature.p() || c.signature.q() != o.signature.q() ||
        c.signature.r() != o.signature.r() || c.dim_relations() != o.dim_relations()) {
      continue;
    }
    auto ts = find_transforms(o, c, opts);
    if (!ts) {
      if (warnings) warnings->push_back("candidate " + k + " skipped: transform group exceeds bound");
      continue;
    }
    for (auto& t : *ts) out.push_back({k, std::move(t)});
  }
  return out;
}

bool recognized_as(const OperadPresentation& o, const std::string& key) {
  MatchOptions opts;
  opts.first_only = true;
  auto ts = find_transforms(o, zoo_get(key), opts);
  return ts && !ts->empty();
}

}  // namespace opcalc
