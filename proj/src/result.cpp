#include "sumorder/result.hpp"

#include "sumorder/errors.hpp"

namespace sumorder {

std::string method_name(Method m) {
  switch (m) {
    case Method::Trivial:
      return "trivial";
    case Method::IntegerConstruction:
      return "integer-construction";
    case Method::RectifiedPullback:
      return "rectified-pullback";
    case Method::ProductConstruction:
      return "product-construction";
    case Method::Backtracking:
      return "backtracking";
  }
  throw internal_error("unhandled method tag");
}

}  // namespace sumorder
