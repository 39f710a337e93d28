#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cofib {

enum class errc {
  cycle,
  unknown_label,
  composition_mismatch,
  size_limit,
  index_out_of_range,
  not_a_poset,
  not_a_cocone,
  not_monotone,
  not_a_semilattice,
  not_a_chain,
  not_a_zigzag,
  not_a_tree,
  no_retraction,
  ill_formed_query,
  not_in_catalog,
  no_witness,
  parse_error,
  object_mismatch,
  invalid_argument,
};

inline std::string_view errc_name(errc e) {
  switch (e) {
    case errc::cycle: return "CycleError";
    case errc::unknown_label: return "UnknownLabel";
    case errc::composition_mismatch: return "CompositionMismatch";
    case errc::size_limit: return "SizeLimit";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::not_a_poset: return "NotAPoset";
    case errc::not_a_cocone: return "NotACocone";
    case errc::not_monotone: return "NotMonotone";
    case errc::not_a_semilattice: return "NotASemilattice";
    case errc::not_a_chain: return "NotAChain";
    case errc::not_a_zigzag: return "NotAZigzag";
    case errc::not_a_tree: return "NotATree";
    case errc::no_retraction: return "NoRetraction";
    case errc::ill_formed_query: return "IllFormedQuery";
    case errc::not_in_catalog: return "NotInCatalog";
    case errc::no_witness: return "NoWitness";
    case errc::parse_error: return "ParseError";
    case errc::object_mismatch: return "ObjectMismatch";
    case errc::invalid_argument: return "InvalidArgument";
  }
  return "Error";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace cofib
