#include "pgroup/group.hpp"

#include <algorithm>

#include "pgroup/error.hpp"

namespace pgroup {

namespace {

std::size_t hash_points(std::span<const Point> pts) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (Point x : pts) {
    h ^= x;
    h *= 0x100000001b3ull;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

}  // namespace

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<unsigned> log_p(std::size_t n, unsigned p) {
  if (n == 0 || p < 2) return std::nullopt;
  unsigned k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return std::nullopt;
  return k;
}

Group::~Group() = default;

Elem Group::lookup(std::span<const Point> images, std::size_t hash) const {
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t i = hash & mask;; i = (i + 1) & mask) {
    const Elem e = slots_[i];
    if (e == kNoElem) return kNoElem;
    if (std::equal(images.begin(), images.end(), this->images(e).begin())) return e;
  }
}

void Group::insert(Elem a, std::size_t hash) {
  const std::size_t mask = slots_.size() - 1;
  std::size_t i = hash & mask;
  while (slots_[i] != kNoElem) i = (i + 1) & mask;
  slots_[i] = a;
}

std::optional<Elem> Group::find(std::span<const Point> images) const {
  if (images.size() != degree_) return std::nullopt;
  const Elem e = lookup(images, hash_points(images));
  if (e == kNoElem) return std::nullopt;
  return e;
}

Elem Group::mul(Elem a, Elem b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order_ + b];
  thread_local std::vector<Point> buf;
  buf.resize(degree_);
  const auto ia = images(a);
  const auto ib = images(b);
  for (std::size_t i = 0; i < degree_; ++i) buf[i] = ib[ia[i]];
  return lookup(buf, hash_points(buf));
}

Elem Group::pow(Elem a, std::size_t k) const {
  Elem result = identity();
  Elem base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

bool Group::commute(Elem a, Elem b) const {
  if (!table_.empty()) return mul(a, b) == mul(b, a);
  const auto ia = images(a);
  const auto ib = images(b);
  for (std::size_t i = 0; i < degree_; ++i)
    if (ib[ia[i]] != ia[ib[i]]) return false;
  return true;
}

Permutation Group::permutation(Elem a) const {
  auto im = images(a);
  return Permutation(std::vector<Point>(im.begin(), im.end()));
}

void Group::finish() {
  if (order_ <= kTableLimit) {
    table_.resize(order_ * order_);
    std::vector<Point> buf(degree_);
    for (Elem a = 0; a < order_; ++a) {
      const auto ia = images(a);
      for (Elem b = 0; b < order_; ++b) {
        const auto ib = images(b);
        for (std::size_t i = 0; i < degree_; ++i) buf[i] = ib[ia[i]];
        table_[static_cast<std::size_t>(a) * order_ + b] = lookup(buf, hash_points(buf));
      }
    }
  }

  inv_.assign(order_, kNoElem);
  std::vector<Point> buf(degree_);
  for (Elem a = 0; a < order_; ++a) {
    const auto ia = images(a);
    for (std::size_t i = 0; i < degree_; ++i) buf[ia[i]] = static_cast<Point>(i);
    inv_[a] = lookup(buf, hash_points(buf));
  }

  pow_p_.resize(order_);
  for (Elem a = 0; a < order_; ++a) pow_p_[a] = pow(a, p_);

  // The order of a is p^k where k is the number of p-th powerings needed to
  // reach the identity.
  orders_.assign(order_, 1);
  for (Elem a = 1; a < order_; ++a) {
    std::uint32_t ord = 1;
    for (Elem x = a; x != identity(); x = pow_p_[x]) ord *= p_;
    orders_[a] = ord;
  }
}

GroupPtr enumerate_group(std::span<const Permutation> generators, unsigned p, const Caps& caps,
                         std::string name, std::size_t degree) {
  if (p == 2) throw EvenPrime("p = 2 is not supported; p must be an odd prime");
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not a prime");
  if (!generators.empty()) {
    if (degree != 0 && degree != generators.front().degree())
      throw InvalidPermutation("declared degree does not match generator degree");
    degree = generators.front().degree();
  }
  for (const auto& g : generators)
    if (g.degree() != degree) throw InvalidPermutation("generators have different degrees");

  std::shared_ptr<Group> grp(new Group());
  Group& g = *grp;
  g.name_ = std::move(name);
  g.p_ = p;
  g.degree_ = degree;

  std::size_t capacity = 64;
  g.slots_.assign(capacity, kNoElem);
  auto add = [&](std::span<const Point> pts, std::size_t h, Elem parent, std::uint32_t gen) {
    const Elem e = static_cast<Elem>(g.order_);
    if (g.order_ + 1 > caps.max_order)
      throw OrderCapExceeded("group order exceeds max_order " + std::to_string(caps.max_order));
    g.points_.insert(g.points_.end(), pts.begin(), pts.end());
    g.parent_.push_back(parent);
    g.parent_gen_.push_back(gen);
    ++g.order_;
    if (2 * g.order_ > capacity) {
      capacity *= 2;
      g.slots_.assign(capacity, kNoElem);
      for (Elem x = 0; x < g.order_; ++x) g.insert(x, hash_points(g.images(x)));
    } else {
      g.insert(e, h);
    }
    return e;
  };

  const Permutation id = Permutation::identity(degree);
  add(id.images(), hash_points(id.images()), 0, 0);

  std::vector<Point> buf(degree);
  for (std::size_t cur = 0; cur < g.order_; ++cur) {
    for (std::uint32_t s = 0; s < generators.size(); ++s) {
      const auto ia = g.images(static_cast<Elem>(cur));
      const auto ib = generators[s].images();
      for (std::size_t i = 0; i < degree; ++i) buf[i] = ib[ia[i]];
      const std::size_t h = hash_points(buf);
      if (g.lookup(buf, h) == kNoElem) add(buf, h, static_cast<Elem>(cur), s);
    }
  }

  if (!log_p(g.order_, p))
    throw NotAPGroup("group order " + std::to_string(g.order_) + " is not a power of " +
                     std::to_string(p));

  for (const auto& gen : generators) g.gens_.push_back(*g.find(gen.images()));
  g.finish();
  return grp;
}

}  // namespace pgroup
