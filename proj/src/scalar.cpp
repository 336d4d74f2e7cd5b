#include "weyl/scalar.hpp"

#include "weyl/errors.hpp"

namespace weyl {

Scalar make_scalar(const Integer& num, const Integer& den) {
  if (den == 0) throw PreconditionError("zero denominator");
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

Scalar make_scalar(std::int64_t num, std::int64_t den) {
  return make_scalar(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
}

std::string to_string(const Scalar& value) { return value.get_str(); }

}  // namespace weyl
