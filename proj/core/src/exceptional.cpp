#include "udyn/exceptional.hpp"

#include "udyn/error.hpp"

namespace udyn {

ExceptionalSet ExceptionalSet::of(Kind kind, const RadiusMapSpec& spec) {
  return ExceptionalSet{kind, spec.p, spec.val_a, spec.val_b, spec.val_c};
}

HalfInt ExceptionalSet::base() const { return kind == Kind::B ? val_c : val_b; }

HalfInt ExceptionalSet::step() const {
  return kind == Kind::L ? val_a + 2 * val_b - 2 * val_c : val_a;
}

Radius ExceptionalSet::element(std::int64_t k) const {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "negative index into exceptional set");
  return Radius::from_valuation(base() - k * step());
}

std::string_view ExceptionalSet::name() const {
  switch (kind) {
    case Kind::B: return "B";
    case Kind::H: return "H";
    case Kind::L: return "L";
  }
  return "?";
}

std::optional<std::int64_t> member_exceptional(const Radius& r, const ExceptionalSet& set) {
  if (!r.is_finite()) throw Error(ErrorKind::InvalidArgument, "exceptional-set membership needs a finite radius");
  const std::int64_t diff = (set.base() - r.valuation()).twice();
  const std::int64_t st = set.step().twice();
  if (st == 0) return diff == 0 ? std::optional<std::int64_t>(0) : std::nullopt;
  if (diff % st != 0) return std::nullopt;
  const std::int64_t k = diff / st;
  if (k < 0) return std::nullopt;
  return k;
}

}  // namespace udyn
