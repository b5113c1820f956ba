#pragma once

#include <optional>
#include <string>

#include "sumorder/rectify.hpp"
#include "sumorder/verify.hpp"

namespace sumorder {

enum class Method {
  Trivial,
  IntegerConstruction,
  RectifiedPullback,
  ProductConstruction,
  Backtracking,
};

std::string method_name(Method m);

/// A sequencing outcome with its provenance: how the ordering was built,
/// the rectification certificate when one was used, and the block layout
/// when the product construction chose one. Every constructor re-verifies
/// before returning, so verified is always true on a returned result.
struct SequencingResult {
  Ordering ordering;
  Method method = Method::Trivial;
  std::optional<RectCertificate> certificate;
  std::optional<std::string> layout;
  bool verified = false;
};

}  // namespace sumorder
