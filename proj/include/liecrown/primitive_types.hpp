#pragma once
// Verdict types shared by the analytic primitivity test and the oracle.

#include <optional>
#include <string>
#include <vector>

#include "liecrown/modrep.hpp"

namespace liecrown {

enum class PrimitiveType { NotPrimitive, Type1, Type2, Type3, Undecided };

inline const char* to_string(PrimitiveType t) {
  switch (t) {
    case PrimitiveType::NotPrimitive: return "NotPrimitive";
    case PrimitiveType::Type1: return "Type1";
    case PrimitiveType::Type2: return "Type2";
    case PrimitiveType::Type3: return "Type3";
    case PrimitiveType::Undecided: return "Undecided";
  }
  return "";
}

template <class F>
struct PrimitiveWitness {
  PrimitiveType verdict = PrimitiveType::Undecided;
  std::vector<Subspace<F>> minimal_ideals;
  std::optional<Subspace<F>> core_free_maximal;
  std::optional<Subspace<F>> common_complement;  // Type3: complements both minimal ideals
  Status status = Status::Certified;
  std::string reason;

  bool primitive() const {
    return verdict == PrimitiveType::Type1 || verdict == PrimitiveType::Type2 || verdict == PrimitiveType::Type3;
  }
};

}  // namespace liecrown
