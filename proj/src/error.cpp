#include "hearts/error.hpp"

namespace hearts {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Shape: return "shape mismatch";
    case ErrorKind::InvalidPrime: return "invalid prime";
    case ErrorKind::InvalidAlgebra: return "invalid algebra";
    case ErrorKind::PathCapExceeded: return "path cap exceeded";
    case ErrorKind::InvalidModule: return "invalid module";
    case ErrorKind::InvalidMorphism: return "invalid morphism";
    case ErrorKind::NotMono: return "not mono";
    case ErrorKind::NotEpi: return "not epi";
    case ErrorKind::NotExact: return "homology nonzero";
    case ErrorKind::InvalidSubcategory: return "invalid subcategory";
    case ErrorKind::InvalidPair: return "invalid cotorsion pair";
    case ErrorKind::ConstructionFailed: return "construction failed";
    case ErrorKind::NotInHeart: return "object outside the heart";
    case ErrorKind::Workspace: return "workspace error";
    case ErrorKind::Usage: return "usage error";
  }
  return "error";
}

}  // namespace hearts
