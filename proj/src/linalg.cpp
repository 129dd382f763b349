#include "nfcert/linalg.hpp"

namespace nfcert {
namespace linalg {

CMatrix to_complex(const DMatrix& a) {
  CMatrix c(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    c[i].assign(a[i].begin(), a[i].end());
  return c;
}

}  // namespace linalg
}  // namespace nfcert
