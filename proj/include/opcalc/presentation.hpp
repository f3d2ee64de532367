#pragma once

#include <string>
#include <vector>

#include "opcalc/free_operad.hpp"

namespace opcalc {

struct OperadPresentation {
  std::string name;
  Signature signature;
  std::vector<Element3> relators;
  Subspace relations;

  std::size_t dim_relations() const { return relations.dim(); }
  // dim of the arity-3 component of the quotient
  std::size_t dim_quotient() const { return signature.dim3() - relations.dim(); }
};

// Relation space = span of the S3-orbits of the relators.
OperadPresentation make_presentation(std::string name, Signature sig,
                                     std::vector<Element3> relators);
// The given space must already be S3-stable; relators become its basis.
OperadPresentation from_relations(std::string name, Signature sig, Subspace relations);

Subspace s3_closure(const Signature& sig, const std::vector<Element3>& relators);

// Same symmetry sequence and the same relation space.
bool same_operad(const OperadPresentation& a, const OperadPresentation& b);

OperadPresentation rename(const OperadPresentation& o, std::string name,
                          const std::vector<std::string>& generator_names);

OperadPresentation parse_presentation(const std::string& text);

enum class Format { Text, Json, Latex };
Format parse_format(const std::string& s);

std::string render(const OperadPresentation& o, Format f);
std::string render_dsl(const OperadPresentation& o);

struct ZooEntry {
  std::string key;
  std::string provenance;
  std::string source;
};

const std::vector<ZooEntry>& zoo_entries();
// Registers (or replaces) an entry; the source is parsed eagerly.
void add_zoo_entry(ZooEntry e);
// Keys are matched case-insensitively; mag_{p,q,r}, mag_p_q_r and mag(p,q,r)
// give the free operad on p nonsym, q sym and r antisym generators.
OperadPresentation zoo_get(const std::string& key);
std::vector<std::string> zoo_keys();
OperadPresentation mag(int p, int q, int r);
std::string mag_key(int p, int q, int r);

}  // namespace opcalc
